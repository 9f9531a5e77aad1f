#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace topamp {

/// Shortest round-trip decimal form of a double (printf %.17g trimmed).
std::string format_double(double v);

/// RFC-4180-style CSV: fields containing comma, quote, or newline are quoted
/// with doubled inner quotes. Rows are buffered and written atomically.
class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> columns);

    void add_row(std::vector<std::string> fields);
    /// Convenience for all-numeric rows.
    void add_numeric_row(const std::vector<double>& values);

    /// Serialize to a string (header + rows).
    std::string str() const;
    /// Write via a temp file + rename so readers never observe a torn file.
    void write(const std::filesystem::path& path) const;

  private:
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

/// Atomic text write (temp file in the same directory + rename).
void write_text_atomic(const std::filesystem::path& path, std::string_view content);

/// FNV-1a 64-bit, used for config fingerprints in run manifests.
std::uint64_t fnv1a64(std::string_view data);

}  // namespace topamp

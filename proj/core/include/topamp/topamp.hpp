#pragma once

#include "topamp/bloch.hpp"
#include "topamp/couplings.hpp"
#include "topamp/dynamical_matrix.hpp"
#include "topamp/dynamics.hpp"
#include "topamp/hofstadter.hpp"
#include "topamp/io.hpp"
#include "topamp/momentum.hpp"
#include "topamp/parallel.hpp"
#include "topamp/phase_diagram.hpp"
#include "topamp/steady_state.hpp"
#include "topamp/svd.hpp"
#include "topamp/waveguide.hpp"

#pragma once

// Solver library: grids and spectral operators, equation right-hand sides,
// time stepping, the time-rescaling map, the Hunter-Saxton closed form and
// the verification experiments. Configuration and file output live in
// config.hpp, io.hpp and cli.hpp.

#include "equations.hpp"
#include "errors.hpp"
#include "fft.hpp"
#include "grid.hpp"
#include "hs_exact.hpp"
#include "initial_data.hpp"
#include "spectral.hpp"
#include "timestepping.hpp"
#include "transform.hpp"
#include "verify.hpp"

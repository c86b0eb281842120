#pragma once

// Umbrella header: solvers and problem generators for convex-concave
// saddle-point problems with bilinear coupling,
//   min_x max_y  g(x) + <Kx, y> - f*(y).

#include "saddle/errors.hpp"
#include "saddle/linops.hpp"
#include "saddle/prox.hpp"
#include "saddle/problems.hpp"
#include "saddle/rng.hpp"
#include "saddle/solvers.hpp"

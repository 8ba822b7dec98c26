#pragma once

#include <random>

#include "bicircle/geom.hpp"
#include "bicircle/pythagorean.hpp"
#include "bicircle/qpoly.hpp"

namespace bicircle {

/// Deterministic generators for property suites and the CLI batch
/// commands. All coefficients are small integers so products stay
/// readable; every function draws from the caller's engine only.
using Rng = std::mt19937_64;

int rand_int(Rng& rng, int lo, int hi);
Rat rand_coeff(Rng& rng);                 // integer in {-2..2}
Quat rand_quat(Rng& rng);
Quat rand_nonzero_quat(Rng& rng);
Quat rand_imaginary_quat(Rng& rng);       // possibly zero
Quat rand_nonzero_imaginary_quat(Rng& rng);

/// Rational unit quaternion r^2 / |r|^2 for a random nonzero r.
Quat rand_unit_quat(Rng& rng);

QPoly2 rand_qpoly11(Rng& rng);            // bidegree <= (1,1)
QPoly2 rand_linear_u(Rng& rng);           // E(u) with nonzero u coefficient
QPoly2 rand_linear_v(Rng& rng);           // D(v) with nonzero v coefficient

/// Circle in Im H built from the normal form f + g (u+h)^-1 with
/// f, g imaginary, g orthogonal to Im h, and Im h nonzero.
MoebiusCurve rand_imh_circle(Rng& rng, CurveSide side);

/// Circle on S^3: p (u+g)(u+h)^-1 q with |p| = |q| = 1, Re h = Re g,
/// |h| = |g|, g != h.
MoebiusCurve rand_s3_circle(Rng& rng);

/// Valid generator seed: shapes are drawn so the bidegree side conditions
/// hold by construction.
PythSeed rand_pyth_seed(Rng& rng);

} // namespace bicircle

#pragma once

#include <optional>

#include "bicircle/qpoly.hpp"

namespace bicircle {

/// Polynomial of total degree at most 4 in (x, y, z, t) vanishing on a
/// quotient surface; t is the real quaternion component.
struct ImplicitQuartic {
    RPolyN f;  // four variables, order x, y, z, t
};

/// Determinant implicitization of the surface A * B^-1.
///
/// Homogenizes A and B to linear forms in (u, v, w, s), writes the point
/// condition Ahom - p * Bhom = 0 as four real linear equations in
/// (u, v, w, s) whose coefficients are linear in (x, y, z, t), and expands
/// the 4x4 determinant by cofactors.
ImplicitQuartic implicitize_quotient(const QPoly2& a, const QPoly2& b);

/// Same construction for the left quotient B^-1 * A (point condition
/// Ahom - Bhom * p = 0).
ImplicitQuartic implicitize_left_quotient(const QPoly2& b, const QPoly2& a);

/// Substitute t = 0; the result lives in (x, y, z).
RPolyN restrict_t0(const ImplicitQuartic& f);

/// A quartic in Darboux form a*G^2 + G*L + Q with G = x^2 + y^2 + z^2,
/// L homogeneous linear, and deg Q <= 2.
struct DarbouxForm {
    Rat a;
    RPolyN linear;     // three variables, homogeneous of degree <= 1
    RPolyN quadratic;  // three variables, degree <= 2
};

/// Recognize the Darboux shape: the degree-4 part must be a rational
/// multiple of G^2 and the degree-3 part divisible by G.
std::optional<DarbouxForm> darboux_test(const RPolyN& f);

/// G^k * F(x/G, y/G, z/G) expanded exactly; the polynomial of the image of
/// Z(F) under inversion in the unit sphere.
RPolyN invert_image(const RPolyN& f, int k);

Rat eval_implicit(const ImplicitQuartic& f, const Quat& p);

} // namespace bicircle

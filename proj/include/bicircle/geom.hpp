#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "bicircle/quat.hpp"

namespace bicircle {

enum class CurveSide { left, right };

/// Rational curve u -> (au+b)(cu+d)^-1 (left) or (cu+d)^-1(au+b) (right);
/// a circle, line, or point in R^4 with exact rational data.
struct MoebiusCurve {
    Quat a, b, c, d;
    CurveSide side = CurveSide::left;
};

Quat curve_eval(const MoebiusCurve& curve, const Rat& u0);

enum class CurveKind { circle, line, point };

/// Normal form of a Moebius curve. For kind circle,
///   left:  curve(u) = f + g * (u + h)^-1
///   right: curve(u) = f + (u + h)^-1 * g
/// For kind line, curve(u) = f + g*u on both sides. For kind point the
/// curve is constantly f.
struct CurveDecomposition {
    CurveKind kind;
    CurveSide side;
    Quat f, g, h;

    Quat eval(const Rat& u0) const;
};

CurveDecomposition decompose(const MoebiusCurve& curve);

/// Exact circle metric data recovered from three sampled points.
struct CircleGeometry {
    Quat center;
    Rat radius_sq;
    Quat span1, span2;  // independent directions of the circle's 2-plane
};

CircleGeometry circle_geometry(const MoebiusCurve& curve);

/// Normal of the plane of a circle contained in Im H: the imaginary part
/// of the decomposition constant h.
Quat imh_plane_normal(const MoebiusCurve& curve);

/// q -> (q+1)(q-1)^-1, from Im H onto S^3 minus the point 1.
Quat stereo_to_sphere(const Quat& q);

/// The same involution restricted to S^3 minus 1, landing in Im H.
Quat stereo_to_imh(const Quat& s);

/// Inversion with center 1 and radius sqrt(2); swaps S^3 \ {1} and Im H.
Quat inversion_c1_r2(const Quat& x);

/// Four distinct points on a common circle or straight line.
bool concyclic4(const std::array<Quat, 4>& pts);

/// Five distinct points on a common 2-sphere or plane.
bool cospheric5(const std::array<Quat, 5>& pts);

/// 4-dimensional Euclidean dot product.
inline Rat dot4(const Quat& p, const Quat& q) {
    return p.re * q.re + p.x * q.x + p.y * q.y + p.z * q.z;
}

/// Parameter ladder 0, 1, -1, 2, -2, ... used wherever deterministic
/// rational samples are needed.
Rat ladder_value(int index);

/// Fit (a,b,c,d) through three (parameter, point) samples by solving the
/// homogeneous linear system over the quaternions. The result is not
/// verified; callers must check extra samples.
std::optional<MoebiusCurve> interpolate_moebius(
    const std::array<std::pair<Rat, Quat>, 3>& samples, CurveSide side);

/// Pointwise-equal curve with the requested side, found by interpolation
/// and verified on extra samples.
MoebiusCurve reparametrize_side(const MoebiusCurve& curve, CurveSide target);

} // namespace bicircle

#include "bicircle/geom.hpp"

#include "bicircle/linalg.hpp"

namespace bicircle {

Rat ladder_value(int index) {
    int half = (index + 1) / 2;
    return Rat(index % 2 == 1 ? half : -half);
}

Quat curve_eval(const MoebiusCurve& curve, const Rat& u0) {
    Quat den = curve.c * u0 + curve.d;
    if (den.is_zero())
        fail(errc::pole, "curve pole at u = " + u0.to_string());
    Quat num = curve.a * u0 + curve.b;
    return curve.side == CurveSide::left ? num * den.inv() : den.inv() * num;
}

Quat CurveDecomposition::eval(const Rat& u0) const {
    switch (kind) {
        case CurveKind::point: return f;
        case CurveKind::line: return f + g * u0;
        case CurveKind::circle: {
            Quat shifted = Quat(u0) + h;
            if (shifted.is_zero()) fail(errc::pole, "decomposition pole at u = " + u0.to_string());
            return side == CurveSide::left ? f + g * shifted.inv() : f + shifted.inv() * g;
        }
    }
    fail(errc::internal_inconsistency, "bad curve kind");
}

CurveDecomposition decompose(const MoebiusCurve& curve) {
    const Quat &a = curve.a, &b = curve.b, &c = curve.c, &d = curve.d;
    CurveDecomposition out;
    out.side = curve.side;

    if (c.is_zero()) {
        if (d.is_zero()) fail(errc::invalid_curve, "curve with c = d = 0");
        Quat di = d.inv();
        Quat dir = curve.side == CurveSide::left ? a * di : di * a;
        Quat through = curve.side == CurveSide::left ? b * di : di * b;
        if (dir.is_zero()) {
            out.kind = CurveKind::point;
            out.f = through;
        } else {
            out.kind = CurveKind::line;
            out.f = through;
            out.g = dir;
        }
        return out;
    }

    Quat ci = c.inv();
    if (curve.side == CurveSide::left) {
        // (au+b)(cu+d)^-1 = ac^-1 + (b - ac^-1 d) c^-1 (u + dc^-1)^-1
        out.f = a * ci;
        Quat graw = b - a * ci * d;
        if (graw.is_zero()) {
            out.kind = CurveKind::point;
            return out;
        }
        out.kind = CurveKind::circle;
        out.g = graw * ci;
        out.h = d * ci;
    } else {
        // (cu+d)^-1(au+b) = c^-1 a + (u + c^-1 d)^-1 c^-1 (b - dc^-1 a)
        out.f = ci * a;
        Quat graw = b - d * ci * a;
        if (graw.is_zero()) {
            out.kind = CurveKind::point;
            return out;
        }
        out.kind = CurveKind::circle;
        out.g = ci * graw;
        out.h = ci * d;
    }
    return out;
}

namespace {

// Up to `count` ladder parameters where the curve has no pole.
std::vector<Rat> pole_free_params(const MoebiusCurve& curve, int count) {
    std::vector<Rat> out;
    for (int idx = 0; static_cast<int>(out.size()) < count && idx < count + 8; ++idx) {
        Rat t = ladder_value(idx);
        if ((curve.c * t + curve.d).is_zero()) continue;
        out.push_back(t);
    }
    if (static_cast<int>(out.size()) < count)
        fail(errc::all_poles, "could not find enough pole-free parameters");
    return out;
}

} // namespace

CircleGeometry circle_geometry(const MoebiusCurve& curve) {
    CurveDecomposition dec = decompose(curve);
    if (dec.kind == CurveKind::line)
        fail(errc::line_case, "circle_geometry on a straight line");
    if (dec.kind == CurveKind::point)
        fail(errc::degenerate_input, "circle_geometry on a constant curve");

    std::vector<Rat> params = pole_free_params(curve, 4);
    Quat p0 = curve_eval(curve, params[0]);
    Quat p1 = curve_eval(curve, params[1]);
    Quat p2 = curve_eval(curve, params[2]);

    Quat e1 = p1 - p0, e2 = p2 - p0;
    Rat g11 = dot4(e1, e1), g12 = dot4(e1, e2), g22 = dot4(e2, e2);
    Rat det = g11 * g22 - g12 * g12;
    if (det.is_zero())
        fail(errc::collinear_samples, "sample points are collinear; curve is a line");

    // 2 <w, e1> = |e1|^2, 2 <w, e2> = |e2|^2 for w = alpha e1 + beta e2
    Rat two(2);
    Rat alpha = (g11 * g22 - g12 * g22) / (two * det);
    Rat beta = (g11 * g22 - g12 * g11) / (two * det);
    CircleGeometry geo;
    geo.center = p0 + alpha * e1 + beta * e2;
    Quat r0 = p0 - geo.center;
    geo.radius_sq = dot4(r0, r0);
    geo.span1 = e1;
    geo.span2 = e2;

    Quat p3 = curve_eval(curve, params[3]) - geo.center;
    if (dot4(p3, p3) != geo.radius_sq)
        fail(errc::internal_inconsistency, "fourth sample off the fitted circle");
    return geo;
}

Quat imh_plane_normal(const MoebiusCurve& curve) {
    CurveDecomposition dec = decompose(curve);
    if (dec.kind == CurveKind::line || dec.kind == CurveKind::point)
        fail(errc::line_case, "imh_plane_normal needs a circle");
    for (const Rat& t : pole_free_params(curve, 5)) {
        if (!curve_eval(curve, t).re_part().is_zero())
            fail(errc::not_in_imh, "curve leaves Im H at u = " + t.to_string());
    }
    Quat normal = dec.h.im_part();
    if (normal.is_zero())
        fail(errc::line_case, "h is real; the curve is a line");
    return normal;
}

Quat stereo_to_sphere(const Quat& q) {
    if (!q.re_part().is_zero())
        fail(errc::domain_violation, "stereo_to_sphere needs a purely imaginary point");
    Quat den = q - Quat::one();
    if (den.is_zero()) fail(errc::domain_violation, "stereo_to_sphere undefined at 1");
    return (q + Quat::one()) * den.inv();
}

Quat stereo_to_imh(const Quat& s) {
    if (s.norm_sq() != Rat(1))
        fail(errc::domain_violation, "stereo_to_imh needs a unit quaternion");
    Quat den = s - Quat::one();
    if (den.is_zero()) fail(errc::domain_violation, "stereo_to_imh undefined at 1");
    return (s + Quat::one()) * den.inv();
}

Quat inversion_c1_r2(const Quat& x) {
    Quat shifted = x - Quat::one();
    Rat n = shifted.norm_sq();
    if (n.is_zero()) fail(errc::center_pole, "inversion undefined at its center 1");
    return Quat::one() + shifted * (Rat(2) / n);
}

namespace {

std::vector<Rat> lift(const Quat& p) {
    return {Rat(1), p.re, p.x, p.y, p.z, p.norm_sq()};
}

template <size_t N>
void check_distinct(const std::array<Quat, N>& pts) {
    for (size_t i = 0; i < N; ++i)
        for (size_t j = i + 1; j < N; ++j)
            if (pts[i] == pts[j]) fail(errc::duplicate_points, "points must be pairwise distinct");
}

} // namespace

bool concyclic4(const std::array<Quat, 4>& pts) {
    check_distinct(pts);
    std::vector<std::vector<Rat>> m;
    for (const Quat& p : pts) m.push_back(lift(p));
    return rank_exact(m) <= 3;
}

bool cospheric5(const std::array<Quat, 5>& pts) {
    check_distinct(pts);
    std::vector<std::vector<Rat>> m;
    for (const Quat& p : pts) m.push_back(lift(p));
    return rank_exact(m) <= 4;
}

namespace {

// One nonzero null vector of a 3x4 system with left-acting quaternion
// coefficients: sum_c m[r][c] * xi_c = 0.
std::optional<std::array<Quat, 4>> null_vector_3x4(std::array<std::array<Quat, 4>, 3> m) {
    constexpr size_t rows = 3, cols = 4;
    std::array<int, rows> pivot_col{-1, -1, -1};
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t pr = rank;
        while (pr < rows && m[pr][c].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(m[rank], m[pr]);
        Quat inv = m[rank][c].inv();
        for (size_t cc = 0; cc < cols; ++cc) m[rank][cc] = inv * m[rank][cc];
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            Quat factor = m[r][c];
            for (size_t cc = 0; cc < cols; ++cc)
                m[r][cc] = m[r][cc] - factor * m[rank][cc];
        }
        pivot_col[rank] = static_cast<int>(c);
        ++rank;
    }

    int free_col = -1;
    for (size_t c = 0; c < cols; ++c) {
        bool is_pivot = false;
        for (size_t r = 0; r < rank; ++r)
            if (pivot_col[r] == static_cast<int>(c)) is_pivot = true;
        if (!is_pivot) {
            free_col = static_cast<int>(c);
            break;
        }
    }
    if (free_col < 0) return std::nullopt;

    std::array<Quat, 4> xi;
    xi[static_cast<size_t>(free_col)] = Quat::one();
    for (size_t r = 0; r < rank; ++r) {
        size_t pc = static_cast<size_t>(pivot_col[r]);
        Quat acc;
        for (size_t c = 0; c < cols; ++c)
            if (c != pc) acc = acc + m[r][c] * xi[c];
        xi[pc] = -acc;
    }
    return xi;
}

} // namespace

MoebiusCurve reparametrize_side(const MoebiusCurve& curve, CurveSide target) {
    if (curve.side == target) return curve;
    std::vector<Rat> params = pole_free_params(curve, 5);
    std::array<std::pair<Rat, Quat>, 3> samples;
    for (size_t k = 0; k < 3; ++k) samples[k] = {params[k], curve_eval(curve, params[k])};
    auto fit = interpolate_moebius(samples, target);
    if (fit) {
        bool ok = true;
        for (size_t k = 3; k < 5; ++k) {
            try {
                if (curve_eval(*fit, params[k]) != curve_eval(curve, params[k])) ok = false;
            } catch (const error&) {
                ok = false;
            }
        }
        if (ok) return *fit;
    }
    fail(errc::unsupported_shape, "curve admits no parametrization on the requested side");
}

std::optional<MoebiusCurve> interpolate_moebius(
    const std::array<std::pair<Rat, Quat>, 3>& samples, CurveSide side) {
    std::array<std::array<Quat, 4>, 3> m;
    for (size_t r = 0; r < 3; ++r) {
        const Rat& t = samples[r].first;
        // left:  a t + b - (x c) t - x d = 0
        // right: conjugated to put the coefficients on the left
        Quat x = side == CurveSide::left ? samples[r].second : samples[r].second.conj();
        m[r][0] = Quat(t);
        m[r][1] = Quat::one();
        m[r][2] = -(x * t);
        m[r][3] = -x;
    }
    auto xi = null_vector_3x4(m);
    if (!xi) return std::nullopt;
    MoebiusCurve curve;
    curve.side = side;
    if (side == CurveSide::left) {
        curve.a = (*xi)[0];
        curve.b = (*xi)[1];
        curve.c = (*xi)[2];
        curve.d = (*xi)[3];
    } else {
        curve.a = (*xi)[0].conj();
        curve.b = (*xi)[1].conj();
        curve.c = (*xi)[2].conj();
        curve.d = (*xi)[3].conj();
    }
    if (curve.a.is_zero() && curve.b.is_zero() && curve.c.is_zero() && curve.d.is_zero())
        return std::nullopt;
    return curve;
}

} // namespace bicircle

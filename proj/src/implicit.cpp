#include "bicircle/implicit.hpp"

#include <array>

namespace bicircle {

namespace {

// A quaternion whose four components are polynomials in (x, y, z, t).
struct SymQuat {
    RPolyN re, x, y, z;

    SymQuat()
        : re(4), x(4), y(4), z(4) {}

    static SymQuat constant(const Quat& q) {
        SymQuat s;
        s.re = RPolyN::constant(4, q.re);
        s.x = RPolyN::constant(4, q.x);
        s.y = RPolyN::constant(4, q.y);
        s.z = RPolyN::constant(4, q.z);
        return s;
    }

    // The generic point t + ix + jy + kz.
    static SymQuat point() {
        SymQuat s;
        s.re = RPolyN::variable(4, 3);
        s.x = RPolyN::variable(4, 0);
        s.y = RPolyN::variable(4, 1);
        s.z = RPolyN::variable(4, 2);
        return s;
    }

    friend SymQuat operator-(const SymQuat& a, const SymQuat& b) {
        SymQuat s;
        s.re = a.re - b.re;
        s.x = a.x - b.x;
        s.y = a.y - b.y;
        s.z = a.z - b.z;
        return s;
    }

    friend SymQuat operator*(const SymQuat& p, const SymQuat& q) {
        SymQuat s;
        s.re = p.re * q.re - p.x * q.x - p.y * q.y - p.z * q.z;
        s.x = p.re * q.x + p.x * q.re + p.y * q.z - p.z * q.y;
        s.y = p.re * q.y - p.x * q.z + p.y * q.re + p.z * q.x;
        s.z = p.re * q.z + p.x * q.y - p.y * q.x + p.z * q.re;
        return s;
    }
};

RPolyN det4(const std::array<std::array<RPolyN, 4>, 4>& m) {
    // cofactor expansion, 4 -> 3 -> 2
    auto det2 = [&](size_t r0, size_t r1, size_t c0, size_t c1) {
        return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    };
    auto det3 = [&](size_t r0, size_t r1, size_t r2, size_t c0, size_t c1, size_t c2) {
        return m[r0][c0] * det2(r1, r2, c1, c2) - m[r0][c1] * det2(r1, r2, c0, c2) +
               m[r0][c2] * det2(r1, r2, c0, c1);
    };
    RPolyN acc(4);
    acc = m[0][0] * det3(1, 2, 3, 1, 2, 3) - m[0][1] * det3(1, 2, 3, 0, 2, 3) +
          m[0][2] * det3(1, 2, 3, 0, 1, 3) - m[0][3] * det3(1, 2, 3, 0, 1, 2);
    return acc;
}

ImplicitQuartic implicitize_impl(const QPoly2& num, const QPoly2& den, bool point_on_right) {
    if (den.is_zero()) fail(errc::degenerate_input, "denominator is identically zero");
    HomLinearQuat ah = homogenize_11(num);
    HomLinearQuat bh = homogenize_11(den);

    SymQuat p = SymQuat::point();
    std::array<Quat, 4> acoef{ah.cu, ah.cv, ah.cw, ah.cs};
    std::array<Quat, 4> bcoef{bh.cu, bh.cv, bh.cw, bh.cs};

    std::array<std::array<RPolyN, 4>, 4> m{};
    for (size_t col = 0; col < 4; ++col) {
        SymQuat bc = SymQuat::constant(bcoef[col]);
        SymQuat entry = point_on_right ? SymQuat::constant(acoef[col]) - (bc * p)
                                       : SymQuat::constant(acoef[col]) - (p * bc);
        m[0][col] = entry.re;
        m[1][col] = entry.x;
        m[2][col] = entry.y;
        m[3][col] = entry.z;
    }

    ImplicitQuartic out{det4(m)};
    if (out.f.is_zero())
        fail(errc::identically_zero_determinant,
             "the implicitization determinant vanishes identically");
    if (out.f.total_degree() > 4)
        fail(errc::internal_inconsistency, "determinant degree exceeds 4");
    return out;
}

} // namespace

ImplicitQuartic implicitize_quotient(const QPoly2& a, const QPoly2& b) {
    // point condition Ahom - p * Bhom = 0
    return implicitize_impl(a, b, /*point_on_right=*/false);
}

ImplicitQuartic implicitize_left_quotient(const QPoly2& b, const QPoly2& a) {
    // point condition Ahom - Bhom * p = 0
    return implicitize_impl(a, b, /*point_on_right=*/true);
}

RPolyN restrict_t0(const ImplicitQuartic& f) {
    RPolyN r = f.f.substitute(3, Rat(0)).drop_var(3);
    if (r.is_zero()) fail(errc::zero_restriction, "restriction to t = 0 vanishes identically");
    return r;
}

namespace {

RPolyN big_g() {
    RPolyN g(3);
    g.set_coef({2, 0, 0}, Rat(1));
    g.set_coef({0, 2, 0}, Rat(1));
    g.set_coef({0, 0, 2}, Rat(1));
    return g;
}

// Exact division by G, treating the input as a polynomial in x with
// coefficients in the other variables (G is monic of degree 2 in x).
std::optional<RPolyN> try_div_g(const RPolyN& p) {
    RPolyN rem = p, quot(3), g = big_g();
    while (rem.degree_in(0) >= 2) {
        int dx = rem.degree_in(0);
        RPolyN lead(3);
        for (const auto& [e, c] : rem.terms())
            if (e[0] == dx) lead.set_coef({e[0] - 2, e[1], e[2]}, c);
        quot = quot + lead;
        rem = rem - lead * g;
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

} // namespace

std::optional<DarbouxForm> darboux_test(const RPolyN& f) {
    if (f.nvars() != 3) fail(errc::domain_violation, "darboux_test expects three variables");
    if (f.is_zero()) fail(errc::domain_violation, "darboux_test on the zero polynomial");
    if (f.total_degree() > 4) return std::nullopt;

    RPolyN g = big_g();
    RPolyN f4 = f.homogeneous_part(4);
    Rat a = f4.coef({4, 0, 0});
    if (f4 != a * (g * g)) return std::nullopt;

    RPolyN f3 = f.homogeneous_part(3);
    RPolyN linear(3);
    linear.set_coef({1, 0, 0}, f3.coef({3, 0, 0}));
    linear.set_coef({0, 1, 0}, f3.coef({0, 3, 0}));
    linear.set_coef({0, 0, 1}, f3.coef({0, 0, 3}));
    if (f3 != g * linear) return std::nullopt;

    DarbouxForm out{a, linear, f.homogeneous_part(2) + f.homogeneous_part(1) + f.homogeneous_part(0)};
    return out;
}

RPolyN invert_image(const RPolyN& f, int k) {
    if (f.nvars() != 3) fail(errc::domain_violation, "invert_image expects three variables");
    if (f.is_zero()) fail(errc::domain_violation, "invert_image on the zero polynomial");
    if (k < 0 || k > 4) fail(errc::domain_violation, "invert_image needs 0 <= k <= 4");

    RPolyN g = big_g();
    int dmax = f.total_degree();

    // G^dmax * F(x/G, y/G, z/G) = sum_m c_m * m * G^(dmax - deg m)
    RPolyN cleared(3);
    for (const auto& [e, c] : f.terms()) {
        int d = e[0] + e[1] + e[2];
        RPolyN term = RPolyN::monomial(e, c);
        for (int i = 0; i < dmax - d; ++i) term = term * g;
        cleared = cleared + term;
    }

    if (k >= dmax) {
        for (int i = 0; i < k - dmax; ++i) cleared = cleared * g;
        return cleared;
    }
    for (int i = 0; i < dmax - k; ++i) {
        auto q = try_div_g(cleared);
        if (!q)
            fail(errc::denominator_not_cleared,
                 "G^" + std::to_string(k) + " does not clear the denominators");
        cleared = *q;
    }
    return cleared;
}

Rat eval_implicit(const ImplicitQuartic& f, const Quat& p) {
    return f.f.eval({p.x, p.y, p.z, p.re});
}

} // namespace bicircle

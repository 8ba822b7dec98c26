#include "bicircle/classify.hpp"

#include "bicircle/splitting.hpp"

namespace bicircle {

namespace {

bool pure_v_nonconst(const QPoly2& p) {
    return !p.depends_u() && p.depends_v();
}
bool pure_u_nonconst(const QPoly2& p) {
    return !p.depends_v() && p.depends_u();
}

// Reparametrize t -> t - shift, keeping the curve pointwise aligned with
// the unshifted parameter.
MoebiusCurve unshift(MoebiusCurve m, const Rat& shift) {
    m.b = m.b - m.a * shift;
    m.d = m.d - m.c * shift;
    return m;
}

// Exact pointwise agreement of two partial maps on `count` ladder pairs.
template <typename F, typename G>
void verify_agree(F&& expected, G&& actual, int count, const char* what) {
    int ok = 0;
    for (int iu = 0; iu < 32 && ok < count; ++iu)
        for (int iv = 0; iv < 32 && ok < count; ++iv) {
            Rat u = ladder_value(iu), v = ladder_value(iv);
            Quat lhs, rhs;
            try {
                lhs = expected(u, v);
                rhs = actual(u, v);
            } catch (const error& e) {
                if (e.code() == errc::pole || e.code() == errc::domain_violation) continue;
                throw;
            }
            if (lhs != rhs)
                fail(errc::internal_inconsistency,
                     std::string(what) + " disagrees at (" + u.to_string() + ", " + v.to_string() + ")");
            ++ok;
        }
    if (ok < count)
        fail(errc::all_poles, std::string(what) + ": not enough pole-free points to verify");
}

DarbouxCyclideClass darboux_from_quotient(const QPoly2& num, const QPoly2& den,
                                          const SampleGrid& surface_points) {
    ImplicitQuartic f4 = implicitize_quotient(num, den);
    RPolyN f3 = restrict_t0(f4);
    auto form = darboux_test(f3);
    if (!form)
        fail(errc::unsupported_shape,
             "implicit section is not in Darboux form (reducible hypersurface section)");
    for (const GridPoint& gp : surface_points.points)
        if (!f3.eval({gp.point.x, gp.point.y, gp.point.z}).is_zero())
            fail(errc::internal_inconsistency, "implicit quartic does not vanish on the surface");
    return DarbouxCyclideClass{f3, *form};
}

QuadricInS3Class quadric_from_quotient(const QPoly2& num, const QPoly2& den, bool left_quotient,
                                       const SampleGrid& surface_points) {
    QPoly2 sum = num + den, diff = num - den;
    if (diff.is_zero())
        fail(errc::degenerate_input, "surface is constantly 1; projection undefined");
    // (x+1)(x-1)^-1 keeps the quotient one sided: right quotients map to
    // (N+D)(N-D)^-1 and left quotients to (N-D)^-1(N+D).
    ImplicitQuartic f4 = left_quotient ? implicitize_left_quotient(diff, sum)
                                       : implicitize_quotient(sum, diff);
    RPolyN f3 = restrict_t0(f4);
    auto form = darboux_test(f3);
    if (!form)
        fail(errc::unsupported_shape,
             "projected implicit section is not in Darboux form (reducible hypersurface section)");
    for (const GridPoint& gp : surface_points.points) {
        if (gp.point == Quat::one()) continue;
        Quat q = stereo_to_imh(gp.point);
        if (!f3.eval({q.x, q.y, q.z}).is_zero())
            fail(errc::internal_inconsistency,
                 "projected implicit quartic does not vanish on the surface");
    }
    return QuadricInS3Class{f3, *form};
}

struct Pattern {
    QPoly2 a, b, c;
    bool swapped;  // true when u and v were exchanged
};

Pattern orient_pattern(const QPoly2& a, const QPoly2& b, const QPoly2& c) {
    if (pure_v_nonconst(a) && pure_u_nonconst(c)) return {a, b, c, false};
    if (pure_u_nonconst(a) && pure_v_nonconst(c))
        return {a.transpose(), b.transpose(), c.transpose(), true};
    fail(errc::pattern_mismatch,
         "expected A and C to be nonconstant single-variable factors in opposite variables");
}

} // namespace

NormalizedABC normalize_abc(const QPoly2& a, const QPoly2& b, const QPoly2& c) {
    if (!pure_v_nonconst(a) || !pure_u_nonconst(c))
        fail(errc::pattern_mismatch, "normalize_abc needs A in v only and C in u only");

    Quat a_lead = a.coef(0, 1);
    Quat c_lead = c.coef(1, 0);
    Quat a0 = a_lead.inv() * a.coef(0, 0);
    Quat c0 = c.coef(0, 0) * c_lead.inv();

    Rat v_shift = -a0.re_part();
    Rat u_shift = -c0.re_part();

    NormalizedABC out;
    out.change = ChangeOfVars{a_lead, c_lead, u_shift, v_shift};
    out.const_a = a0.im_part();
    out.const_c = c0.im_part();
    out.a = QPoly2::monomial(0, 1, Quat::one()) + QPoly2::constant(out.const_a);
    out.c = QPoly2::monomial(1, 0, Quat::one()) + QPoly2::constant(out.const_c);
    out.b = (a_lead.inv() * b * c_lead.inv()).shift(u_shift, v_shift);
    return out;
}

Classification classify_r3(const QPoly2& a, const QPoly2& b, const QPoly2& c) {
    SurfaceSpec spec = ABCForm{a, b, c};
    validate_spec(spec);
    SampleGrid grid = ladder_grid(spec, 7);
    if (contains_check(spec, grid) != Ambient::im_h)
        fail(errc::not_in_imh, "surface is not contained in Im H on the verification grid");

    if (a.is_constant())
        return darboux_from_quotient(a.coef(0, 0).inv() * b, c, grid);
    if (c.is_constant()) {
        // Phi = -conj(Phi) on Im H turns the left denominator around:
        // Phi = (-conj(C)^-1 conj(B)) conj(A)^-1.
        QPoly2 num = -(c.coef(0, 0).conj().inv() * b.conj());
        return darboux_from_quotient(num, a.conj(), grid);
    }

    Pattern pat = orient_pattern(a, b, c);
    NormalizedABC n = normalize_abc(pat.a, pat.b, pat.c);
    const Quat& ca = n.const_a;
    const Quat& cc = n.const_c;

    if (ca.is_zero() || cc.is_zero()) {
        // Substitute 1/v (resp. 1/u) to clear the bare-variable factor,
        // then implicitize the resulting quotient.
        QPoly2 b00 = QPoly2::constant(n.b.coef(0, 0));
        QPoly2 b10 = QPoly2::constant(n.b.coef(1, 0));
        QPoly2 b01 = QPoly2::constant(n.b.coef(0, 1));
        QPoly2 b11 = QPoly2::constant(n.b.coef(1, 1));
        const QPoly2 u = QPoly2::u(), v = QPoly2::v();
        if (ca.is_zero()) {
            // w B(u, 1/w) = B00 w + B10 u w + B01 + B11 u, w in the v slot
            QPoly2 d = b00 * v + b10 * u * v + b01 + b11 * u;
            return darboux_from_quotient(d, n.c, grid);
        }
        // u -> 1/w: Phi = A(v)^-1 D'(w, v) with w in the u slot; flip the
        // left quotient with -conj as above.
        QPoly2 dp = b00 * u + b01 * u * v + b10 + b11 * v;
        return darboux_from_quotient(-dp.conj(), n.a.conj(), grid);
    }

    // Residue extraction: Phi - Phi(u,0) - Phi(0,v) + Phi(0,0) equals
    // (v+a)^-1 b uv (u+c)^-1 for a constant b.
    Quat phi00 = ca.inv() * n.b.coef(0, 0) * cc.inv();
    QPoly2 bu0 = n.b.coef_of_v_power(0);
    QPoly2 b0v = n.b.coef_of_u_power(0);
    QPoly2 residue = n.b - n.a * (ca.inv() * bu0) - (b0v * cc.inv()) * n.c + n.a * phi00 * n.c;

    for (const auto& [m, coefq] : residue.terms())
        if (!(m == Mono2{1, 1}))
            fail(errc::nonpolynomial_residue, "residue is not a multiple of uv");
    Quat bres = residue.coef(1, 1);

    if (bres.is_zero()) {
        // Phi(u,v) = Phi(u,0) + (Phi(0,v) - Phi(0,0)); both iso curves fold
        // into plain Moebius curves.
        Quat b10q = bu0.coef(1, 0), b00q = bu0.coef(0, 0), b01q = b0v.coef(0, 1);
        MoebiusCurve alpha{ca.inv() * b10q, ca.inv() * b00q, Quat::one(), cc, CurveSide::left};
        MoebiusCurve beta{b01q * cc.inv() - phi00, b00q * cc.inv() - ca * phi00,
                          Quat::one(), ca, CurveSide::right};

        verify_agree(
            [&](const Rat& u0, const Rat& v0) {
                return eval_surface(SurfaceSpec(ABCForm{n.a, n.b, n.c}), u0, v0);
            },
            [&](const Rat& u0, const Rat& v0) {
                return curve_eval(alpha, u0) + curve_eval(beta, v0);
            },
            25, "translational witness");

        // Undo the variable shifts, then the transposition if one happened.
        alpha = unshift(alpha, n.change.u_shift);
        beta = unshift(beta, n.change.v_shift);
        if (pat.swapped) std::swap(alpha, beta);
        return EuclideanTranslationalClass{alpha, beta};
    }

    // b != 0: every iso circle lies in a plane orthogonal to a, so the
    // whole surface is planar.
    Rat offset = im_dot(ca, grid.points.front().point);
    for (const GridPoint& gp : grid.points)
        if (im_dot(ca, gp.point) != offset)
            fail(errc::internal_inconsistency, "planar branch: surface leaves the fitted plane");
    return PlanarClass{ca, offset};
}

Classification classify_s3(const QPoly2& a, const QPoly2& b, const QPoly2& c) {
    SurfaceSpec spec = ABCForm{a, b, c};
    validate_spec(spec);
    SampleGrid grid = ladder_grid(spec, 7);
    if (contains_check(spec, grid) != Ambient::s3)
        fail(errc::not_in_s3, "surface is not contained in S^3 on the verification grid");

    if (a.is_constant())
        return quadric_from_quotient(a.coef(0, 0).inv() * b, c, false, grid);
    if (c.is_constant())
        return quadric_from_quotient(b * c.coef(0, 0).inv(), a, true, grid);

    Pattern pat = orient_pattern(a, b, c);

    if (pat.b.norm_sq() != pat.a.norm_sq() * pat.c.norm_sq())
        fail(errc::norm_identity_fails, "|B|^2 != |A|^2 |C|^2");

    SplitResult split = split_h11(pat.b);

    // |D|^2 / |A|^2 is forced constant by uniqueness of the separation.
    const QPoly2& dpoly = split.order == SplitOrder::d_then_e ? split.left : split.right;
    const QPoly2& epoly = split.order == SplitOrder::d_then_e ? split.right : split.left;
    RPolyN dn = dpoly.norm_sq(), an = pat.a.norm_sq();
    RPolyN en = epoly.norm_sq(), cn = pat.c.norm_sq();
    Rat rho = dn.coef({0, 2}) / an.coef({0, 2});
    if (dn != rho * an || cn != rho * en)
        fail(errc::internal_inconsistency, "norm ratio is not a constant rational");

    if (split.order == SplitOrder::d_then_e) {
        // Phi = rho * (conj(A) conj(D)^-1)(v) * (E C^-1)(u)
        MoebiusCurve alpha{pat.a.coef(0, 1).conj(), pat.a.coef(0, 0).conj(),
                           dpoly.coef(0, 1).conj(), dpoly.coef(0, 0).conj(), CurveSide::left};
        MoebiusCurve beta{epoly.coef(1, 0), epoly.coef(0, 0), pat.c.coef(1, 0), pat.c.coef(0, 0),
                          CurveSide::left};
        verify_agree(
            [&](const Rat& u0, const Rat& v0) {
                return eval_surface(SurfaceSpec(ABCForm{pat.a, pat.b, pat.c}), u0, v0);
            },
            [&](const Rat& u0, const Rat& v0) {
                return rho * curve_eval(alpha, v0) * curve_eval(beta, u0);
            },
            25, "clifford witness");
        return CliffordTranslationalClass{alpha, beta, rho,
                                          pat.swapped ? FixedVar::u : FixedVar::v};
    }

    // B = E(u) D(v): Phi = rho (conj(A) E) (C conj(D))^-1, a plain quotient
    // with rho folded into the numerator.
    QPoly2 num = pat.a.conj() * epoly;
    QPoly2 scaled;
    for (const auto& [m, q] : num.terms()) scaled.set_coef(m.du, m.dv, rho * q);
    QPoly2 den = pat.c * dpoly.conj();
    verify_agree(
        [&](const Rat& u0, const Rat& v0) {
            return eval_surface(SurfaceSpec(ABCForm{pat.a, pat.b, pat.c}), u0, v0);
        },
        [&](const Rat& u0, const Rat& v0) {
            return eval_surface(SurfaceSpec(QuotientForm{scaled, den}), u0, v0);
        },
        25, "quadric quotient rewrite");
    return quadric_from_quotient(scaled, den, false, grid);
}

Classification classify(const SurfaceSpec& spec) {
    validate_spec(spec);
    if (const auto* abc = std::get_if<ABCForm>(&spec)) {
        SampleGrid grid = ladder_grid(spec, 7);
        switch (contains_check(spec, grid)) {
            case Ambient::im_h: return classify_r3(abc->a, abc->b, abc->c);
            case Ambient::s3: return classify_s3(abc->a, abc->b, abc->c);
            case Ambient::neither:
                fail(errc::ambient_neither, "surface lies in neither Im H nor S^3");
        }
    }
    if (const auto* q = std::get_if<QuotientForm>(&spec)) {
        SampleGrid grid = ladder_grid(spec, 7);
        switch (contains_check(spec, grid)) {
            case Ambient::im_h: return darboux_from_quotient(q->a, q->b, grid);
            case Ambient::s3: return quadric_from_quotient(q->a, q->b, false, grid);
            case Ambient::neither:
                fail(errc::ambient_neither, "surface lies in neither Im H nor S^3");
        }
    }
    fail(errc::unsupported_shape, "classification needs an ABC or quotient surface");
}

} // namespace bicircle

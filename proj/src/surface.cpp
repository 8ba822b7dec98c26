#include "bicircle/surface.hpp"

#include <algorithm>

namespace bicircle {

namespace {

void require_bidegree_11(const QPoly2& p, const char* what) {
    auto [du, dv] = p.bidegree();
    if (du > 1 || dv > 1)
        fail(errc::bidegree_too_high, std::string(what) + " must have bidegree at most (1,1)");
}

[[noreturn]] void pole_at(const Rat& u0, const Rat& v0, const std::string& which) {
    fail(errc::pole,
         "pole at (u,v) = (" + u0.to_string() + ", " + v0.to_string() + "): " + which);
}

// Fold a constant into a one-sided Moebius curve, preserving the side.
MoebiusCurve absorb_left(const Quat& l, MoebiusCurve m) {
    if (m.side == CurveSide::left) {
        m.a = l * m.a;
        m.b = l * m.b;
    } else {
        Quat li = l.inv();
        m.c = m.c * li;
        m.d = m.d * li;
    }
    return m;
}

MoebiusCurve absorb_right(MoebiusCurve m, const Quat& r) {
    if (m.side == CurveSide::left) {
        Quat ri = r.inv();
        m.c = ri * m.c;
        m.d = ri * m.d;
    } else {
        m.a = m.a * r;
        m.b = m.b * r;
    }
    return m;
}

// Compose x -> (x+1)(x-1)^-1 after a one-sided curve; the result is again
// one-sided because the map also equals (x-1)^-1 (x+1).
MoebiusCurve project_curve(const MoebiusCurve& m) {
    MoebiusCurve out;
    out.side = m.side;
    out.a = m.a + m.c;
    out.b = m.b + m.d;
    out.c = m.a - m.c;
    out.d = m.b - m.d;
    return out;
}

} // namespace

void validate_spec(const SurfaceSpec& spec) {
    if (const auto* abc = std::get_if<ABCForm>(&spec)) {
        require_bidegree_11(abc->a, "A");
        require_bidegree_11(abc->b, "B");
        require_bidegree_11(abc->c, "C");
        require_bidegree_11(abc->a * abc->c, "A*C");
        if (abc->a.is_zero() || abc->c.is_zero())
            fail(errc::degenerate_input, "A and C must be nonzero");
    } else if (const auto* q = std::get_if<QuotientForm>(&spec)) {
        require_bidegree_11(q->a, "A");
        require_bidegree_11(q->b, "B");
        if (q->b.is_zero()) fail(errc::degenerate_input, "quotient denominator is zero");
    } else if (const auto* e = std::get_if<EuclideanTranslationalForm>(&spec)) {
        decompose(e->alpha);
        decompose(e->beta);
    } else if (const auto* c = std::get_if<CliffordTranslationalForm>(&spec)) {
        decompose(c->alpha);
        decompose(c->beta);
        // both factors must be curves on the unit sphere
        for (const MoebiusCurve* m : {&c->alpha, &c->beta}) {
            int checked = 0;
            for (int idx = 0; idx < 12 && checked < 5; ++idx) {
                Quat p;
                try {
                    p = curve_eval(*m, ladder_value(idx));
                } catch (const error& e) {
                    if (e.code() == errc::pole) continue;
                    throw;
                }
                if (p.norm_sq() != Rat(1))
                    fail(errc::domain_violation,
                         "clifford factor leaves S^3 at u = " + ladder_value(idx).to_string());
                ++checked;
            }
        }
    } else if (const auto* qd = std::get_if<QuasidetForm>(&spec)) {
        for (const auto& row : qd->m)
            for (const auto& entry : row) require_bidegree_11(entry, "matrix entry");
    }
}

Quat quasidet_eval(const QuasidetForm& form, const Rat& u0, const Rat& v0) {
    Quat m[3][3];
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m[r][c] = form.m[static_cast<size_t>(r)][static_cast<size_t>(c)].eval(u0, v0);

    auto inv_or_pole = [&](const Quat& q, const std::string& which) {
        if (q.is_zero()) pole_at(u0, v0, which + " is zero");
        return q.inv();
    };

    Quat t1 = m[0][1] * inv_or_pole(m[1][1] - m[1][2] * inv_or_pole(m[2][2], "M33") * m[2][1],
                                    "M22 - M23 M33^-1 M32") * m[1][0];
    Quat t2 = m[0][1] * inv_or_pole(m[2][1] - m[2][2] * inv_or_pole(m[1][2], "M23") * m[1][1],
                                    "M32 - M33 M23^-1 M22") * m[2][0];
    Quat t3 = m[0][2] * inv_or_pole(m[1][2] - m[1][1] * inv_or_pole(m[2][1], "M32") * m[2][2],
                                    "M23 - M22 M32^-1 M33") * m[1][0];
    Quat t4 = m[0][2] * inv_or_pole(m[2][2] - m[2][1] * inv_or_pole(m[1][1], "M22") * m[1][2],
                                    "M33 - M32 M22^-1 M23") * m[2][0];
    return m[0][0] - t1 - t2 - t3 - t4;
}

Quat eval_surface(const SurfaceSpec& spec, const Rat& u0, const Rat& v0) {
    if (const auto* abc = std::get_if<ABCForm>(&spec)) {
        Quat av = abc->a.eval(u0, v0);
        if (av.is_zero()) pole_at(u0, v0, "A vanishes");
        Quat cv = abc->c.eval(u0, v0);
        if (cv.is_zero()) pole_at(u0, v0, "C vanishes");
        return av.inv() * abc->b.eval(u0, v0) * cv.inv();
    }
    if (const auto* q = std::get_if<QuotientForm>(&spec)) {
        Quat bv = q->b.eval(u0, v0);
        if (bv.is_zero()) pole_at(u0, v0, "denominator vanishes");
        return q->a.eval(u0, v0) * bv.inv();
    }
    if (const auto* e = std::get_if<EuclideanTranslationalForm>(&spec)) {
        return curve_eval(e->alpha, u0) + curve_eval(e->beta, v0);
    }
    if (const auto* c = std::get_if<CliffordTranslationalForm>(&spec)) {
        Quat p = curve_eval(c->alpha, u0) * curve_eval(c->beta, v0);
        if (!c->project) return p;
        if (p == Quat::one()) pole_at(u0, v0, "projection center 1");
        return stereo_to_imh(p);
    }
    return quasidet_eval(std::get<QuasidetForm>(spec), u0, v0);
}

namespace {

SampleGrid grid_from_values(const SurfaceSpec& spec, const std::vector<Rat>& us,
                            const std::vector<Rat>& vs) {
    SampleGrid grid;
    for (const Rat& u : us)
        for (const Rat& v : vs) {
            try {
                grid.points.push_back({u, v, eval_surface(spec, u, v)});
            } catch (const error& e) {
                if (e.code() != errc::pole) throw;
                grid.poles.emplace_back(u, v);
            }
        }
    return grid;
}

} // namespace

SampleGrid sample_grid(const SurfaceSpec& spec, const Rat& u_lo, const Rat& u_hi,
                       const Rat& v_lo, const Rat& v_hi, int n) {
    if (n < 2) fail(errc::domain_violation, "grid needs n >= 2");
    std::vector<Rat> us, vs;
    Rat steps(n - 1);
    for (int i = 0; i < n; ++i) {
        Rat fi(i);
        us.push_back(u_lo + (u_hi - u_lo) * fi / steps);
        vs.push_back(v_lo + (v_hi - v_lo) * fi / steps);
    }
    SampleGrid grid = grid_from_values(spec, us, vs);
    if (grid.points.empty()) fail(errc::all_poles, "every lattice point is a pole");
    return grid;
}

SampleGrid ladder_grid(const SurfaceSpec& spec, int n) {
    auto is_pole = [&](const Rat& u, const Rat& v) {
        try {
            eval_surface(spec, u, v);
            return false;
        } catch (const error& e) {
            if (e.code() != errc::pole) throw;
            return true;
        }
    };

    std::vector<Rat> us, vs;
    int next_u = 0, next_v = 0;
    for (int k = 0; k < n; ++k) {
        us.push_back(ladder_value(next_u++));
        vs.push_back(ladder_value(next_v++));
    }
    // Replace ladder values until the whole lattice is pole free.
    for (int guard = 0; guard < 256; ++guard) {
        bool clean = true;
        for (size_t i = 0; i < us.size() && clean; ++i)
            for (size_t j = 0; j < vs.size() && clean; ++j)
                if (is_pole(us[i], vs[j])) {
                    clean = false;
                    // Alternate which side moves so single bad rows and
                    // columns both get repaired.
                    if (guard % 2 == 0)
                        us[i] = ladder_value(next_u++);
                    else
                        vs[j] = ladder_value(next_v++);
                }
        if (clean) {
            SampleGrid grid = grid_from_values(spec, us, vs);
            return grid;
        }
    }
    fail(errc::all_poles, "could not build a pole-free lattice");
}

Ambient contains_check(const SurfaceSpec&, const SampleGrid& grid) {
    if (grid.points.empty()) fail(errc::domain_violation, "contains_check needs a nonempty grid");
    bool imh = true, s3 = true;
    for (const GridPoint& gp : grid.points) {
        if (!gp.point.re_part().is_zero()) imh = false;
        if (gp.point.norm_sq() != Rat(1)) s3 = false;
        if (!imh && !s3) break;
    }
    if (imh) return Ambient::im_h;
    if (s3) return Ambient::s3;
    return Ambient::neither;
}

Quat IsoCurve::eval(const Rat& t) const {
    if (law == Law::add) return const_left + curve_eval(core, t);
    Quat p = const_left * curve_eval(core, t) * const_right;
    if (!post_project) return p;
    if (p == Quat::one()) fail(errc::pole, "projection center 1 on iso curve");
    return stereo_to_imh(p);
}

namespace {

// B restricted to a fixed value of one variable, as a linear polynomial in
// the other: returns (coefficient, constant).
std::pair<Quat, Quat> restrict_linear(const QPoly2& p, FixedVar fixed, const Rat& value) {
    if (fixed == FixedVar::v) {
        QPoly2 c1 = p.coef_of_u_power(1), c0 = p.coef_of_u_power(0);
        return {c1.eval(Rat(0), value), c0.eval(Rat(0), value)};
    }
    QPoly2 c1 = p.coef_of_v_power(1), c0 = p.coef_of_v_power(0);
    return {c1.eval(value, Rat(0)), c0.eval(value, Rat(0))};
}

IsoCurve iso_abc(const ABCForm& abc, FixedVar fixed, const Rat& value) {
    bool free_is_u = fixed == FixedVar::v;
    bool a_free = free_is_u ? abc.a.depends_u() : abc.a.depends_v();
    bool c_free = free_is_u ? abc.c.depends_u() : abc.c.depends_v();
    if (a_free && c_free)
        fail(errc::unsupported_shape,
             "both outer factors depend on the free variable; no single-variable core");

    auto [b1, b0] = restrict_linear(abc.b, fixed, value);
    IsoCurve iso;
    if (a_free) {
        // (A|fixed)^-1 (B|fixed) is a right-form curve; C|fixed is constant.
        auto [a1, a0] = restrict_linear(abc.a, fixed, value);
        iso.core = MoebiusCurve{b1, b0, a1, a0, CurveSide::right};
        Quat cv = free_is_u ? abc.c.eval(Rat(0), value) : abc.c.eval(value, Rat(0));
        if (cv.is_zero()) fail(errc::pole, "C vanishes on the fixed line");
        iso.const_right = cv.inv();
    } else if (c_free) {
        auto [c1, c0] = restrict_linear(abc.c, fixed, value);
        iso.core = MoebiusCurve{b1, b0, c1, c0, CurveSide::left};
        Quat av = free_is_u ? abc.a.eval(Rat(0), value) : abc.a.eval(value, Rat(0));
        if (av.is_zero()) fail(errc::pole, "A vanishes on the fixed line");
        iso.const_left = av.inv();
    } else {
        // Neither outer factor moves: the core is the linear middle factor.
        Quat av = free_is_u ? abc.a.eval(Rat(0), value) : abc.a.eval(value, Rat(0));
        Quat cv = free_is_u ? abc.c.eval(Rat(0), value) : abc.c.eval(value, Rat(0));
        if (av.is_zero() || cv.is_zero()) fail(errc::pole, "outer factor vanishes on the fixed line");
        iso.core = MoebiusCurve{b1, b0, Quat::zero(), Quat::one(), CurveSide::left};
        iso.const_left = av.inv();
        iso.const_right = cv.inv();
    }
    return iso;
}

IsoCurve iso_quasidet(const QuasidetForm& form, FixedVar fixed, const Rat& value) {
    // The quasideterminant is fraction linear in each variable, so three
    // samples pin the curve down; two more verify the fit.
    std::array<std::pair<Rat, Quat>, 3> samples;
    std::vector<std::pair<Rat, Quat>> extra;
    size_t have = 0;
    for (int idx = 0; idx < 24 && have < 5; ++idx) {
        Rat t = ladder_value(idx);
        try {
            Quat p = fixed == FixedVar::u ? quasidet_eval(form, value, t)
                                          : quasidet_eval(form, t, value);
            if (have < 3)
                samples[have] = {t, p};
            else
                extra.emplace_back(t, p);
            ++have;
        } catch (const error& e) {
            if (e.code() != errc::pole) throw;
        }
    }
    if (have < 5) fail(errc::all_poles, "not enough pole-free samples on the iso line");

    for (CurveSide side : {CurveSide::left, CurveSide::right}) {
        auto fit = interpolate_moebius(samples, side);
        if (!fit) continue;
        bool ok = true;
        for (const auto& [t, p] : extra) {
            try {
                if (curve_eval(*fit, t) != p) ok = false;
            } catch (const error&) {
                ok = false;
            }
            if (!ok) break;
        }
        if (ok) {
            IsoCurve iso;
            iso.core = *fit;
            return iso;
        }
    }
    fail(errc::unsupported_shape, "iso line is not fraction-linear");
}

} // namespace

ABCForm encode_translational(const EuclideanTranslationalForm& form) {
    // alpha(u) + beta(v) = A(v)^-1 [ A(v) alpha_num(u) + beta_num(v) C(u) ] C(u)^-1
    // with alpha in left form (numerator-denominator) and beta in right form.
    MoebiusCurve alpha = reparametrize_side(form.alpha, CurveSide::left);
    MoebiusCurve beta = reparametrize_side(form.beta, CurveSide::right);

    const QPoly2 u = QPoly2::u(), v = QPoly2::v();
    QPoly2 a = QPoly2::constant(beta.c) * v + QPoly2::constant(beta.d);
    QPoly2 c = QPoly2::constant(alpha.c) * u + QPoly2::constant(alpha.d);
    QPoly2 alpha_num = QPoly2::constant(alpha.a) * u + QPoly2::constant(alpha.b);
    QPoly2 beta_num = QPoly2::constant(beta.a) * v + QPoly2::constant(beta.b);
    QPoly2 b = a * alpha_num + beta_num * c;
    return ABCForm{a, b, c};
}

IsoCurve iso_curve(const SurfaceSpec& spec, FixedVar fixed, const Rat& value) {
    if (const auto* abc = std::get_if<ABCForm>(&spec)) return iso_abc(*abc, fixed, value);

    if (const auto* q = std::get_if<QuotientForm>(&spec)) {
        auto [a1, a0] = restrict_linear(q->a, fixed, value);
        auto [b1, b0] = restrict_linear(q->b, fixed, value);
        IsoCurve iso;
        iso.core = MoebiusCurve{a1, a0, b1, b0, CurveSide::left};
        return iso;
    }

    if (const auto* e = std::get_if<EuclideanTranslationalForm>(&spec)) {
        IsoCurve iso;
        iso.law = IsoCurve::Law::add;
        if (fixed == FixedVar::u) {
            iso.const_left = curve_eval(e->alpha, value);
            iso.core = e->beta;
        } else {
            iso.const_left = curve_eval(e->beta, value);
            iso.core = e->alpha;
        }
        return iso;
    }

    if (const auto* c = std::get_if<CliffordTranslationalForm>(&spec)) {
        IsoCurve iso;
        MoebiusCurve core = fixed == FixedVar::u
                                ? absorb_left(curve_eval(c->alpha, value), c->beta)
                                : absorb_right(c->alpha, curve_eval(c->beta, value));
        iso.core = c->project ? project_curve(core) : core;
        return iso;
    }

    return iso_quasidet(std::get<QuasidetForm>(spec), fixed, value);
}

} // namespace bicircle

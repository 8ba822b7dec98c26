#include "bicircle/selftest.hpp"

#include <functional>
#include <sstream>

#include "bicircle/classify.hpp"
#include "bicircle/examples.hpp"
#include "bicircle/randgen.hpp"
#include "bicircle/splitting.hpp"

namespace bicircle {

namespace {

struct Check {
    std::ostringstream detail;
    bool ok = true;

    void require(bool cond, const std::string& msg) {
        if (!cond) {
            ok = false;
            if (!detail.str().empty()) detail << "; ";
            detail << msg;
        }
    }
};

// ---- 1. Beauregard identity --------------------------------------------

void beauregard_identity(Check& c) {
    const QPoly2& q = *find_example("beauregard").poly;
    RPolyN nsq = q.norm_sq();

    RPolyN u4(2), v4(2);
    u4.set_coef({4, 0}, Rat(1));
    u4.set_coef({0, 0}, Rat(1));
    v4.set_coef({0, 4}, Rat(1));
    v4.set_coef({0, 0}, Rat(1));
    c.require(nsq == u4 * v4, "|Q|^2 != (u^4+1)(v^4+1)");

    auto sep = separable_test(nsq);
    c.require(sep.has_value(), "norm square did not separate");
    if (sep) {
        c.require(sep->p_u == u4, "separated P(u) != u^4 + 1");
        c.require(sep->r_v == v4, "separated R(v) != v^4 + 1");
    }
}

// ---- 2. Splitting round trip -------------------------------------------

void splitting_round_trip(Check& c) {
    Rng rng(2024);
    int runs = 0;
    for (int k = 0; k < 100; ++k) {
        QPoly2 d = rand_linear_v(rng);
        QPoly2 e = rand_linear_u(rng);
        for (const QPoly2& q : {d * e, e * d}) {
            ++runs;
            SplitResult s = split_h11(q);
            c.require(s.left * s.right == q, "re-multiplication mismatch");
            // q*Q1 + Q0 must be the constant p
            QPoly2 q1 = q.coef_of_v_power(1);
            QPoly2 q0 = q.coef_of_v_power(0);
            QPoly2 constancy = s.witness_q * q1 + q0;
            c.require(constancy == QPoly2::constant(s.witness_p),
                      "constancy witness fails");
            if (!c.ok) return;
        }
    }
    c.require(runs == 200, "expected 200 runs");
}

// ---- 3. Torus pipeline ---------------------------------------------------

void torus_pipeline(Check& c) {
    const SurfaceSpec& spec = *find_example("torus").spec;
    SampleGrid grid = ladder_grid(spec, 7);
    c.require(grid.points.size() == 49 && grid.poles.empty(), "7x7 grid has poles");
    c.require(contains_check(spec, grid) == Ambient::im_h, "torus not in Im H");

    Classification cls = classify(spec);
    const auto* dc = std::get_if<DarbouxCyclideClass>(&cls);
    c.require(dc != nullptr, "torus did not classify as a Darboux cyclide");
    if (!dc) return;

    SampleGrid wide = ladder_grid(spec, 8);
    int checked = 0;
    for (const GridPoint& gp : wide.points) {
        if (checked == 50) break;
        c.require(dc->implicit.eval({gp.point.x, gp.point.y, gp.point.z}).is_zero(),
                  "implicit quartic nonzero at a surface sample");
        ++checked;
    }
    c.require(checked == 50, "fewer than 50 samples");
    c.require(darboux_test(dc->implicit).has_value(), "darboux_test fails on the torus quartic");
}

// ---- 4. Clifford pipeline ------------------------------------------------

void clifford_pipeline(Check& c) {
    const SurfaceSpec& spec = *find_example("clifford").spec;
    SampleGrid grid = ladder_grid(spec, 7);
    c.require(grid.points.size() == 49 && grid.poles.empty(), "7x7 grid has poles");
    for (const GridPoint& gp : grid.points)
        c.require(gp.point.norm_sq() == Rat(1), "|Phi|^2 != 1 at a grid point");

    Classification cls = classify(spec);
    const auto* ct = std::get_if<CliffordTranslationalClass>(&cls);
    c.require(ct != nullptr, "clifford example did not classify as Clifford translational");
    if (!ct) return;

    int checked = 0;
    for (int iu = 0; iu < 5; ++iu)
        for (int iv = 0; iv < 5; ++iv) {
            Rat u = ladder_value(iu), v = ladder_value(iv);
            Quat expected = eval_surface(spec, u, v);
            Rat s = ct->left_var == FixedVar::v ? v : u;
            Rat t = ct->left_var == FixedVar::v ? u : v;
            Quat actual = ct->norm_ratio * curve_eval(ct->alpha, s) * curve_eval(ct->beta, t);
            c.require(actual == expected, "witness product mismatch");
            ++checked;
        }
    c.require(checked == 25, "fewer than 25 witness points");
}

// ---- 5. Implicitization soundness ----------------------------------------

void implicitization_soundness(Check& c) {
    Rng rng(505);
    int degenerate = 0;
    for (int k = 0; k < 100; ++k) {
        QPoly2 a = rand_qpoly11(rng);
        QPoly2 b = rand_qpoly11(rng);
        if (b.is_zero()) b = QPoly2::constant(Quat::one());

        ImplicitQuartic f{RPolyN(4)};
        try {
            f = implicitize_quotient(a, b);
        } catch (const error& e) {
            if (e.code() == errc::identically_zero_determinant) {
                ++degenerate;
                continue;
            }
            throw;
        }
        c.require(f.f.total_degree() <= 4, "degree above 4");

        SurfaceSpec spec = QuotientForm{a, b};
        int checked = 0;
        for (int iu = 0; iu < 10 && checked < 50; ++iu)
            for (int iv = 0; iv < 10 && checked < 50; ++iv) {
                Quat p;
                try {
                    p = eval_surface(spec, ladder_value(iu), ladder_value(iv));
                } catch (const error& e) {
                    if (e.code() == errc::pole) continue;
                    throw;
                }
                c.require(eval_implicit(f, p).is_zero(), "quartic nonzero at a sample");
                ++checked;
            }
        c.require(checked == 50, "fewer than 50 samples");
        if (!c.ok) return;
    }
    c.detail << "[degenerate determinants: " << degenerate << "/100] ";
}

// ---- 6. Two-circle property ----------------------------------------------

bool four_distinct_points(const IsoCurve& iso, std::array<Quat, 4>& pts) {
    size_t have = 0;
    for (int idx = 0; idx < 16 && have < 4; ++idx) {
        Quat p;
        try {
            p = iso.eval(ladder_value(idx));
        } catch (const error& e) {
            if (e.code() == errc::pole || e.code() == errc::domain_violation) continue;
            throw;
        }
        bool dup = false;
        for (size_t k = 0; k < have; ++k)
            if (pts[k] == p) dup = true;
        if (!dup) pts[have++] = p;
    }
    return have == 4;
}

// Collects `lines` fixed values per direction with 4 distinct points each
// and checks concyclicity; false when the surface is too degenerate.
bool check_two_circle(const SurfaceSpec& spec, Check& c, int lines) {
    for (FixedVar fixed : {FixedVar::u, FixedVar::v}) {
        int done = 0;
        for (int idx = 0; idx < 16 && done < lines; ++idx) {
            Rat value = ladder_value(idx);
            IsoCurve iso;
            std::array<Quat, 4> pts;
            try {
                iso = iso_curve(spec, fixed, value);
                if (!four_distinct_points(iso, pts)) continue;
            } catch (const error& e) {
                if (e.code() == errc::pole || e.code() == errc::all_poles) continue;
                throw;
            }
            c.require(concyclic4(pts), "iso-curve points not concyclic");
            ++done;
        }
        if (done < lines) return false;
    }
    return true;
}

void two_circle_property(Check& c) {
    for (const NamedExample* e : surface_examples()) {
        bool enough = check_two_circle(*e->spec, c, 5);
        c.require(enough, "not enough usable iso lines on " + e->name);
        if (!c.ok) return;
    }

    Rng rng(606);
    int done = 0, guard = 0;
    while (done < 20 && guard++ < 200) {
        ABCForm abc{rand_linear_v(rng), rand_qpoly11(rng), rand_linear_u(rng)};
        if (abc.b.is_zero()) continue;
        if (!check_two_circle(SurfaceSpec(abc), c, 5)) continue;  // degenerate draw
        ++done;
        if (!c.ok) return;
    }
    c.require(done == 20, "fewer than 20 random specs checked");
}

// ---- 7. Pythagorean generator --------------------------------------------

void pythagorean_generator(Check& c) {
    Rng rng(707);
    for (int k = 0; k < 1000; ++k) {
        PythTuple t = gen_tuple(rand_pyth_seed(rng));
        TupleVerdict v = verify_tuple(t);
        c.require(v.valid, "generated tuple invalid at run " + std::to_string(k));
        for (const auto& p : t.x)
            c.require(p.degree_in(0) <= 2 && p.degree_in(1) <= 2, "bidegree above (2,2)");
        if (!c.ok) return;
    }

    auto mono = [](int du, int dv, long coef) {
        RPolyN p(2);
        p.set_coef({du, dv}, Rat(coef));
        return p;
    };

    {
        PythSeed s{QPoly2::constant(Quat::one()), QPoly2::constant(Quat::one()),
                   QPoly2::constant(Quat::one()), RPolyN::constant(2, Rat(1))};
        PythTuple t = gen_tuple(s);
        c.require(t.x[0] == mono(0, 0, 2) && t.x[1].is_zero() && t.x[2].is_zero() &&
                      t.x[3].is_zero() && t.x[4].is_zero() && t.x[5] == mono(0, 0, 2),
                  "unit seed tuple mismatch");
    }
    {
        PythSeed s{QPoly2::u(), QPoly2::constant(Quat::one()), QPoly2::v(),
                   RPolyN::constant(2, Rat(1))};
        PythTuple t = gen_tuple(s);
        RPolyN x5 = mono(0, 0, 1) - mono(2, 2, 1);
        RPolyN x6 = mono(0, 0, 1) + mono(2, 2, 1);
        c.require(t.x[0] == mono(1, 1, 2) && t.x[1].is_zero() && t.x[2].is_zero() &&
                      t.x[3].is_zero() && t.x[4] == x5 && t.x[5] == x6,
                  "classic seed tuple mismatch");
    }
    {
        PythSeed s{QPoly2::u() + QPoly2::constant(Quat::i()), QPoly2::constant(Quat::one()),
                   QPoly2::v() + QPoly2::constant(Quat::j()), RPolyN::constant(2, Rat(1))};
        PythTuple t = gen_tuple(s);
        RPolyN prod = (mono(2, 0, 1) + mono(0, 0, 1)) * (mono(0, 2, 1) + mono(0, 0, 1));
        c.require(t.x[0] == mono(1, 1, 2) && t.x[1] == mono(0, 1, 2) &&
                      t.x[2] == mono(1, 0, 2) && t.x[3] == mono(0, 0, 2) &&
                      t.x[4] == mono(0, 0, 1) - prod && t.x[5] == mono(0, 0, 1) + prod,
                  "quaternion seed tuple mismatch");
    }
}

// ---- 8. Euclidean translational round trip -------------------------------

void euclidean_round_trip(Check& c) {
    Rng rng(808);
    for (int k = 0; k < 20; ++k) {
        EuclideanTranslationalForm form{rand_imh_circle(rng, CurveSide::left),
                                        rand_imh_circle(rng, CurveSide::right)};
        ABCForm abc = encode_translational(form);

        Classification cls = classify(SurfaceSpec(abc));
        const auto* et = std::get_if<EuclideanTranslationalClass>(&cls);
        c.require(et != nullptr, "encode+classify did not return Euclidean translational");
        if (!et) return;

        int checked = 0;
        for (int iu = 0; iu < 5; ++iu)
            for (int iv = 0; iv < 5; ++iv) {
                Rat u = ladder_value(iu), v = ladder_value(iv);
                Quat expected = curve_eval(form.alpha, u) + curve_eval(form.beta, v);
                Quat actual = curve_eval(et->alpha, u) + curve_eval(et->beta, v);
                c.require(actual == expected, "witness sum mismatch");
                ++checked;
            }
        c.require(checked == 25, "fewer than 25 points verified");
        if (!c.ok) return;
    }
}

// ---- 9. Geometry kernel ---------------------------------------------------

void geometry_kernel(Check& c) {
    Rng rng(909);
    for (int k = 0; k < 100; ++k) {
        Quat p = rand_imaginary_quat(rng);
        Quat s = stereo_to_sphere(p);
        c.require(s.norm_sq() == Rat(1), "image not on the sphere");
        c.require(stereo_to_imh(s) == p, "stereo maps not mutually inverse");

        Quat w = rand_unit_quat(rng);
        if (w != Quat::one()) {
            Quat q = stereo_to_imh(w);
            c.require(q.re_part().is_zero(), "projection left Im H");
            c.require(stereo_to_sphere(q) == w, "stereo maps not mutually inverse (sphere side)");
        }

        Quat x = rand_quat(rng);
        if (x != Quat::one())
            c.require(inversion_c1_r2(inversion_c1_r2(x)) == x, "inversion not involutive");
        if (!c.ok) return;
    }

    for (int k = 0; k < 20; ++k) {
        CurveSide side = k % 2 == 0 ? CurveSide::left : CurveSide::right;
        MoebiusCurve circle = rand_imh_circle(rng, side);
        Quat normal = imh_plane_normal(circle);
        CircleGeometry geo = circle_geometry(circle);
        c.require(im_dot(normal, geo.span1).is_zero() && im_dot(normal, geo.span2).is_zero(),
                  "plane normal not orthogonal to the spans");
        if (!c.ok) return;
    }
}

// ---- 10. Darboux recognizer discrimination --------------------------------

void darboux_discrimination(Check& c) {
    Rng rng(1010);
    RPolyN g(3);
    g.set_coef({2, 0, 0}, Rat(1));
    g.set_coef({0, 2, 0}, Rat(1));
    g.set_coef({0, 0, 2}, Rat(1));

    auto random_quadratic = [&](Rng& r) {
        RPolyN q(3);
        std::vector<std::vector<int>> exps = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                              {2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0},
                                              {1, 0, 1}, {0, 1, 1}};
        for (const auto& e : exps) q.set_coef(e, rand_coeff(r));
        return q;
    };

    const std::vector<std::vector<int>> off_monomials = {
        {3, 1, 0}, {3, 0, 1}, {1, 3, 0}, {0, 3, 1}, {1, 1, 2}, {4, 0, 0}};

    int correct = 0;
    for (int k = 0; k < 100; ++k) {
        Rat a = rand_coeff(rng);
        RPolyN linear(3);
        linear.set_coef({1, 0, 0}, rand_coeff(rng));
        linear.set_coef({0, 1, 0}, rand_coeff(rng));
        linear.set_coef({0, 0, 1}, rand_coeff(rng));
        RPolyN quad = random_quadratic(rng);
        RPolyN f = a * (g * g) + g * linear + quad;
        if (f.is_zero()) f = RPolyN::constant(3, Rat(1));

        auto form = darboux_test(f);
        bool good = form.has_value();
        if (good && f != RPolyN::constant(3, Rat(1))) {
            good = form->a == a && form->linear == linear && form->quadratic == quad;
        }
        if (good) ++correct;
        else c.require(false, "constructed Darboux quartic rejected");

        // perturb the degree-4 part off the G^2 ray
        RPolyN bad = f + RPolyN::monomial(off_monomials[static_cast<size_t>(k % 6)],
                                          Rat(rand_int(rng, 1, 2)));
        if (!darboux_test(bad).has_value()) ++correct;
        else c.require(false, "perturbed quartic accepted");
        if (!c.ok) return;
    }
    c.require(correct == 200, "discrimination below 200/200");
}

} // namespace

std::vector<CriterionResult> run_acceptance() {
    using Fn = std::function<void(Check&)>;
    const std::vector<std::pair<std::string, Fn>> criteria = {
        {"Beauregard identity and separation", beauregard_identity},
        {"splitting round trip, 200 seeded products", splitting_round_trip},
        {"torus pipeline: Im H, classify, vanishing quartic", torus_pipeline},
        {"Clifford pipeline: S^3, classify, witness product", clifford_pipeline},
        {"implicitization soundness on 100 random quotients", implicitization_soundness},
        {"two-circle property on examples and 20 random specs", two_circle_property},
        {"Pythagorean generator: 1000 seeds and worked tuples", pythagorean_generator},
        {"Euclidean translational round trip, 20 circle pairs", euclidean_round_trip},
        {"geometry kernel: stereo, inversion, plane normals", geometry_kernel},
        {"Darboux recognizer discrimination, 200 quartics", darboux_discrimination},
    };

    std::vector<CriterionResult> results;
    for (size_t k = 0; k < criteria.size(); ++k) {
        Check check;
        try {
            criteria[k].second(check);
        } catch (const std::exception& e) {
            check.ok = false;
            check.detail << "exception: " << e.what();
        }
        results.push_back({static_cast<int>(k) + 1, criteria[k].first, check.ok,
                           check.detail.str()});
    }
    return results;
}

} // namespace bicircle

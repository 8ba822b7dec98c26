#include <doctest.h>

#include "bicircle/geom.hpp"
#include "bicircle/randgen.hpp"

using namespace bicircle;

namespace {

const Quat I = Quat::i();
const Quat J = Quat::j();
const Quat K = Quat::k();

} // namespace

TEST_SUITE("geom") {

TEST_CASE("curve evaluation on both sides") {
    MoebiusCurve ident{Quat(1), Quat(), Quat(), Quat(1), CurveSide::left};
    CHECK(curve_eval(ident, Rat(5, 3)) == Quat(Rat(5, 3)));

    MoebiusCurve line{I, J, Quat(), Quat(1), CurveSide::left};
    CHECK(curve_eval(line, Rat(2)) == Rat(2) * I + J);

    MoebiusCurve circ{Quat(), I, Quat(1), K, CurveSide::left};
    CHECK(curve_eval(circ, Rat(0)) == J);  // i k^-1 = j

    MoebiusCurve pole{Quat(1), Quat(), Quat(1), Quat(-2), CurveSide::left};
    CHECK_THROWS_AS(curve_eval(pole, Rat(2)), error);

    // right side: (u + i)^-1 (u + j) at 0 is i^-1 j = -k
    MoebiusCurve right{Quat(1), J, Quat(1), I, CurveSide::right};
    CHECK(curve_eval(right, Rat(0)) == -K);
}

TEST_CASE("decomposition normal forms") {
    CurveDecomposition line = decompose({Quat(1), Quat(), Quat(), Quat(1), CurveSide::left});
    CHECK(line.kind == CurveKind::line);
    CHECK(line.f == Quat());
    CHECK(line.g == Quat(1));

    CurveDecomposition pt = decompose({I, I * K, Quat(1), K, CurveSide::left});
    CHECK(pt.kind == CurveKind::point);
    CHECK(pt.f == I);

    CurveDecomposition circ = decompose({Quat(), I, Quat(1), K, CurveSide::left});
    CHECK(circ.kind == CurveKind::circle);
    CHECK(circ.f == Quat());
    CHECK(circ.g == I);
    CHECK(circ.h == K);

    CHECK_THROWS_AS(decompose({I, J, Quat(), Quat(), CurveSide::left}), error);
}

TEST_CASE("right-side point condition uses b = d c^-1 a") {
    // (u + j)^-1 (i u + j i): constant because b = d c^-1 a
    MoebiusCurve c{I, J * I, Quat(1), J, CurveSide::right};
    CurveDecomposition dec = decompose(c);
    CHECK(dec.kind == CurveKind::point);
    CHECK(curve_eval(c, Rat(0)) == curve_eval(c, Rat(1)));
    CHECK(curve_eval(c, Rat(0)) == curve_eval(c, Rat(2)));
}

TEST_CASE("decomposition reproduces the curve pointwise") {
    Rng rng(31);
    for (int t = 0; t < 60; ++t) {
        MoebiusCurve m;
        m.a = rand_quat(rng);
        m.b = rand_quat(rng);
        m.c = rand_quat(rng);
        m.d = rand_quat(rng);
        m.side = t % 2 == 0 ? CurveSide::left : CurveSide::right;
        if (m.c.is_zero() && m.d.is_zero()) continue;
        CurveDecomposition dec = decompose(m);
        for (int idx = 0; idx < 6; ++idx) {
            Rat u = ladder_value(idx);
            Quat expected;
            try {
                expected = curve_eval(m, u);
            } catch (const error&) {
                continue;
            }
            CHECK(dec.eval(u) == expected);
        }
    }
}

TEST_CASE("circle geometry of i (u + k)^-1") {
    MoebiusCurve m{Quat(), I, Quat(1), K, CurveSide::left};
    CircleGeometry geo = circle_geometry(m);
    CHECK(geo.center == Quat(Rat(0), Rat(0), Rat(1, 2), Rat(0)));  // j/2
    CHECK(geo.radius_sq == Rat(1, 4));
    // plane {i, j} is orthogonal to k
    CHECK(im_dot(geo.span1, K) == Rat(0));
    CHECK(im_dot(geo.span2, K) == Rat(0));
}

TEST_CASE("circle geometry of a unit circle in the (1, i) plane") {
    // (u - i)(u + i)^-1 passes through -1, -i, i, 1
    MoebiusCurve m{Quat(1), -I, Quat(1), I, CurveSide::left};
    CircleGeometry geo = circle_geometry(m);
    CHECK(geo.center == Quat());
    CHECK(geo.radius_sq == Rat(1));
}

TEST_CASE("lines and points are rejected by circle_geometry") {
    CHECK_THROWS_AS(circle_geometry({Quat(1), Quat(), Quat(), Quat(1), CurveSide::left}), error);
    // h real: the image is a line even though c != 0
    try {
        circle_geometry({Quat(), I, Quat(1), Quat(2), CurveSide::left});
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::collinear_samples);
    }
}

TEST_CASE("circle geometry does not depend on the parameter choice") {
    Rng rng(59);
    for (int t = 0; t < 30; ++t) {
        MoebiusCurve m = rand_imh_circle(rng, t % 2 == 0 ? CurveSide::left : CurveSide::right);
        CircleGeometry g1 = circle_geometry(m);
        // reparametrize u -> u + 1: same circle, different sample points
        MoebiusCurve shifted = m;
        shifted.b = shifted.b + shifted.a;
        shifted.d = shifted.d + shifted.c;
        CircleGeometry g2 = circle_geometry(shifted);
        CHECK(g1.center == g2.center);
        CHECK(g1.radius_sq == g2.radius_sq);
    }
}

TEST_CASE("plane normal of an Im H circle") {
    MoebiusCurve m{Quat(), I, Quat(1), K, CurveSide::left};
    CHECK(imh_plane_normal(m) == K);

    // not contained in Im H
    MoebiusCurve off{Quat(), Quat(1), Quat(1), K, CurveSide::left};
    try {
        imh_plane_normal(off);
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::not_in_imh);
    }

    // real h: line case
    MoebiusCurve line{Quat(), I, Quat(1), Quat(2), CurveSide::left};
    try {
        imh_plane_normal(line);
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::line_case);
    }
}

TEST_CASE("plane normal is orthogonal to the circle plane") {
    Rng rng(61);
    for (int t = 0; t < 40; ++t) {
        MoebiusCurve m = rand_imh_circle(rng, t % 2 == 0 ? CurveSide::left : CurveSide::right);
        Quat n = imh_plane_normal(m);
        CircleGeometry geo = circle_geometry(m);
        CHECK(im_dot(n, geo.span1) == Rat(0));
        CHECK(im_dot(n, geo.span2) == Rat(0));
    }
}

TEST_CASE("stereographic projections") {
    CHECK(stereo_to_sphere(Quat()) == Quat(-1));
    CHECK(stereo_to_sphere(I) == -I);
    CHECK(stereo_to_imh(Quat(-1)) == Quat());
    CHECK_THROWS_AS(stereo_to_sphere(Quat(1) + I), error);
    CHECK_THROWS_AS(stereo_to_imh(Quat(2)), error);
    CHECK_THROWS_AS(stereo_to_imh(Quat(1)), error);

    Rng rng(71);
    for (int t = 0; t < 60; ++t) {
        Quat p = rand_imaginary_quat(rng);
        Quat s = stereo_to_sphere(p);
        CHECK(s.norm_sq() == Rat(1));
        CHECK(stereo_to_imh(s) == p);

        Quat w = rand_unit_quat(rng);
        if (w == Quat(1)) continue;
        Quat q = stereo_to_imh(w);
        CHECK(q.re_part() == Rat(0));
        CHECK(stereo_to_sphere(q) == w);
    }
}

TEST_CASE("inversion with center 1 and radius sqrt(2)") {
    CHECK(inversion_c1_r2(Quat(-1)) == Quat());
    CHECK(inversion_c1_r2(I) == I);  // fixed point on the inversion sphere
    CHECK_THROWS_AS(inversion_c1_r2(Quat(1)), error);

    Rng rng(73);
    for (int t = 0; t < 100; ++t) {
        Quat x = rand_quat(rng);
        if (x == Quat(1)) continue;
        CHECK(inversion_c1_r2(inversion_c1_r2(x)) == x);
    }
    // swaps S^3 minus 1 and Im H on samples
    for (int t = 0; t < 30; ++t) {
        Quat w = rand_unit_quat(rng);
        if (w == Quat(1)) continue;
        CHECK(inversion_c1_r2(w).re_part() == Rat(0));
        Quat p = rand_imaginary_quat(rng);
        CHECK(inversion_c1_r2(p).norm_sq() == Rat(1));
    }
}

TEST_CASE("concyclicity and cosphericity predicates") {
    CHECK(concyclic4({I, J, -I, -J}));
    CHECK(!concyclic4({Quat(), I, J, K}));
    CHECK_THROWS_AS(concyclic4({I, I, J, K}), error);

    CHECK(cospheric5({I, J, K, -I, -J}));
    CHECK(!cospheric5({Quat(), I, J, K, Quat(1) + I}));
}

TEST_CASE("four points of any circle are concyclic") {
    Rng rng(79);
    for (int t = 0; t < 40; ++t) {
        MoebiusCurve m =
            t % 2 == 0 ? rand_imh_circle(rng, CurveSide::left) : rand_s3_circle(rng);
        std::array<Quat, 4> pts;
        size_t have = 0;
        for (int idx = 0; idx < 12 && have < 4; ++idx) {
            Quat p;
            try {
                p = curve_eval(m, ladder_value(idx));
            } catch (const error&) {
                continue;
            }
            bool dup = false;
            for (size_t s = 0; s < have; ++s)
                if (pts[s] == p) dup = true;
            if (!dup) pts[have++] = p;
        }
        REQUIRE(have == 4);
        CHECK(concyclic4(pts));
    }
}

TEST_CASE("interpolation recovers a curve from three samples") {
    Rng rng(83);
    for (int t = 0; t < 30; ++t) {
        MoebiusCurve m = rand_imh_circle(rng, t % 2 == 0 ? CurveSide::left : CurveSide::right);
        std::array<std::pair<Rat, Quat>, 3> samples;
        for (int s = 0; s < 3; ++s) {
            Rat u = ladder_value(s);
            samples[static_cast<size_t>(s)] = {u, curve_eval(m, u)};
        }
        auto fit = interpolate_moebius(samples, m.side);
        REQUIRE(fit.has_value());
        for (int idx = 0; idx < 8; ++idx) {
            Rat u = ladder_value(idx);
            CHECK(curve_eval(*fit, u) == curve_eval(m, u));
        }
    }
}

TEST_CASE("side flip preserves the parametrization pointwise") {
    Rng rng(89);
    for (int t = 0; t < 20; ++t) {
        MoebiusCurve m = rand_imh_circle(rng, CurveSide::left);
        MoebiusCurve flipped = reparametrize_side(m, CurveSide::right);
        CHECK(flipped.side == CurveSide::right);
        for (int idx = 0; idx < 8; ++idx) {
            Rat u = ladder_value(idx);
            CHECK(curve_eval(flipped, u) == curve_eval(m, u));
        }
    }
}

} // TEST_SUITE

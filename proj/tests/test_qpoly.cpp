#include <doctest.h>

#include "bicircle/qpoly.hpp"
#include "bicircle/randgen.hpp"

using namespace bicircle;

namespace {

const Quat I = Quat::i();
const Quat J = Quat::j();
const Quat K = Quat::k();

QPoly2 beauregard() {
    QPoly2 q;
    q.set_coef(2, 2, Quat(1));
    q.set_coef(0, 0, Quat(-1));
    q.set_coef(2, 0, I);
    q.set_coef(0, 2, -I);
    q.set_coef(1, 1, Rat(2) * J);
    return q;
}

RPolyN rp2(std::initializer_list<std::pair<std::pair<int, int>, long>> terms) {
    RPolyN p(2);
    for (const auto& [e, c] : terms) p.set_coef({e.first, e.second}, Rat(c));
    return p;
}

} // namespace

TEST_SUITE("qpoly") {

TEST_CASE("noncommutative product, hand expanded") {
    // (v - i)(u + j) = uv + jv - iu - k
    QPoly2 lhs = (QPoly2::v() - QPoly2::constant(I)) * (QPoly2::u() + QPoly2::constant(J));
    QPoly2 expected;
    expected.set_coef(1, 1, Quat(1));
    expected.set_coef(0, 1, J);
    expected.set_coef(1, 0, -I);
    expected.set_coef(0, 0, -K);
    CHECK(lhs == expected);

    QPoly2 p = (QPoly2::u() * I) * (QPoly2::u() * J);
    CHECK(p == QPoly2::monomial(2, 0, K));

    QPoly2 r = beauregard();
    CHECK(r * QPoly2::constant(Quat(1)) == r);
}

TEST_CASE("norm squares") {
    RPolyN u4v4 = rp2({{{4, 4}, 1}, {{4, 0}, 1}, {{0, 4}, 1}, {{0, 0}, 1}});
    CHECK(beauregard().norm_sq() == u4v4);

    CHECK(QPoly2::constant(Quat(1)).norm_sq() == rp2({{{0, 0}, 1}}));

    // u + v i
    QPoly2 q = QPoly2::u() + QPoly2::v() * I;
    CHECK(q.norm_sq() == rp2({{{2, 0}, 1}, {{0, 2}, 1}}));
}

TEST_CASE("evaluation") {
    CHECK(QPoly2::monomial(1, 1, K).eval(Rat(2), Rat(3)) == Rat(6) * K);

    // torus numerator at (0,0): (-i)(-2i - j) = -2 + k
    QPoly2 num = (QPoly2::u() - QPoly2::constant(I)) *
                 (QPoly2::constant(Rat(2) * J + I) * QPoly2::v() - QPoly2::constant(Rat(2) * I + J));
    CHECK(num.eval(Rat(0), Rat(0)) == Quat(Rat(-2), Rat(0), Rat(0), Rat(1)));

    QPoly2 q = beauregard();
    CHECK(q.eval(Rat(0), Rat(0)) == q.coef(0, 0));
}

TEST_CASE("quaternion substitution into a real polynomial") {
    RPolyN v2 = rp2({{{0, 2}, 1}});
    CHECK(subst_quat(v2, 1, I) == QPoly2::constant(Quat(-1)));

    RPolyN u2v2 = rp2({{{2, 0}, 1}, {{0, 2}, 1}});
    CHECK(subst_quat(u2v2, 1, J) == QPoly2::monomial(2, 0, Quat(1)) - QPoly2::constant(Quat(1)));

    // (u^2+1)(v^2+1) with v := k is annihilated by k^2 + 1 = 0
    RPolyN sep = rp2({{{2, 2}, 1}, {{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, 1}});
    CHECK(subst_quat(sep, 1, K).is_zero());
}

TEST_CASE("homogenization of bidegree (1,1)") {
    HomLinearQuat h = homogenize_11(QPoly2::u() + QPoly2::v());
    CHECK(h.cu == Quat(1));
    CHECK(h.cv == Quat(1));
    CHECK(h.cw == Quat());
    CHECK(h.cs == Quat());

    HomLinearQuat h2 = homogenize_11(QPoly2::monomial(1, 1, I) + QPoly2::constant(J));
    CHECK(h2.cw == I);
    CHECK(h2.cs == J);
    CHECK(h2.cu == Quat());

    CHECK_THROWS_AS(homogenize_11(QPoly2::monomial(2, 0, Quat(1))), error);

    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        QPoly2 p = rand_qpoly11(rng);
        CHECK(dehomogenize_11(homogenize_11(p)) == p);
    }
}

TEST_CASE("separability by coefficient-matrix rank") {
    RPolyN sep = rp2({{{2, 2}, 1}, {{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, 1}});
    auto s = separable_test(sep);
    REQUIRE(s.has_value());
    CHECK(s->p_u == rp2({{{2, 0}, 1}, {{0, 0}, 1}}));
    CHECK(s->r_v == rp2({{{0, 2}, 1}, {{0, 0}, 1}}));

    CHECK(!separable_test(rp2({{{2, 2}, 1}, {{0, 0}, 1}})).has_value());

    auto b = separable_test(beauregard().norm_sq());
    REQUIRE(b.has_value());
    CHECK(b->p_u == rp2({{{4, 0}, 1}, {{0, 0}, 1}}));
    CHECK(b->r_v == rp2({{{0, 4}, 1}, {{0, 0}, 1}}));
}

TEST_CASE("separation of random pure products is exact and monic") {
    Rng rng(77);
    for (int t = 0; t < 100; ++t) {
        RPolyN p(2), r(2);
        for (int d = 0; d <= 2; ++d) {
            p.set_coef({d, 0}, rand_coeff(rng));
            r.set_coef({0, d}, rand_coeff(rng));
        }
        if (p.is_zero() || r.is_zero()) continue;
        auto s = separable_test(p * r);
        REQUIRE(s.has_value());
        CHECK(s->p_u * s->r_v == p * r);
        // monic leading coefficient in u
        int d = s->p_u.degree_in(0);
        CHECK(s->p_u.coef({d, 0}) == Rat(1));
    }
}

TEST_CASE("ring laws on random polynomials") {
    Rng rng(99);
    for (int t = 0; t < 40; ++t) {
        QPoly2 p = rand_qpoly11(rng) * rand_qpoly11(rng);  // bidegree up to (2,2)
        QPoly2 q = rand_qpoly11(rng) * rand_qpoly11(rng);
        CHECK((p * q).conj() == q.conj() * p.conj());
        CHECK((p * q).norm_sq() == p.norm_sq() * q.norm_sq());

        Rat u0 = rand_coeff(rng), v0 = rand_coeff(rng);
        CHECK((p * q).eval(u0, v0) == p.eval(u0, v0) * q.eval(u0, v0));
    }
}

TEST_CASE("real polynomial helpers") {
    RPolyN f = rp2({{{2, 0}, 1}, {{1, 1}, -3}, {{0, 0}, 2}});
    CHECK(f.total_degree() == 2);
    CHECK(f.degree_in(0) == 2);
    CHECK(f.eval({Rat(2), Rat(1)}) == Rat(4 - 6 + 2));
    CHECK(f.substitute(1, Rat(0)) == rp2({{{2, 0}, 1}, {{0, 0}, 2}}));
    CHECK(f.homogeneous_part(2) == rp2({{{2, 0}, 1}, {{1, 1}, -3}}));
    CHECK(f.homogeneous_part(0) == rp2({{{0, 0}, 2}}));

    RPolyN zero(2);
    CHECK(zero.total_degree() == -1);
    CHECK(zero.is_zero());
}

TEST_CASE("component split and reassembly") {
    Rng rng(123);
    for (int t = 0; t < 30; ++t) {
        QPoly2 p = rand_qpoly11(rng);
        auto comps = to_components(p);
        CHECK(from_components(comps[0], comps[1], comps[2], comps[3]) == p);
    }
}

TEST_CASE("variable shift is exact") {
    QPoly2 p = beauregard();
    QPoly2 shifted = p.shift(Rat(1, 2), Rat(-2));
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        Rat u0 = rand_coeff(rng), v0 = rand_coeff(rng);
        CHECK(shifted.eval(u0, v0) == p.eval(u0 + Rat(1, 2), v0 - Rat(2)));
    }
}

} // TEST_SUITE

#include "bicircle/linalg.hpp"

TEST_SUITE("qpoly") {

namespace {

// plain rational Gaussian elimination as an independent rank oracle
int naive_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        for (size_t r = row + 1; r < rows; ++r) {
            if (m[r][col].is_zero()) continue;
            Rat factor = m[r][col] / m[row][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("fraction-free rank matches naive rational elimination") {
    Rng rng(131);
    for (int t = 0; t < 150; ++t) {
        size_t rows = static_cast<size_t>(rand_int(rng, 1, 5));
        size_t cols = static_cast<size_t>(rand_int(rng, 1, 6));
        std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols, Rat(0)));
        for (auto& r : m)
            for (auto& x : r) x = Rat(rand_int(rng, -2, 2), rand_int(rng, 1, 3));
        // duplicate a row sometimes to force rank drops
        if (rows > 1 && rand_int(rng, 0, 2) == 0) m[rows - 1] = m[0];
        CHECK(rank_exact(m) == naive_rank(m));
    }
}

} // TEST_SUITE

TEST_SUITE("qpoly") {

TEST_CASE("transpose and coefficient slices") {
    Rng rng(137);
    for (int t = 0; t < 30; ++t) {
        QPoly2 p = rand_qpoly11(rng) * rand_qpoly11(rng);
        Rat u0 = rand_coeff(rng), v0 = rand_coeff(rng);
        CHECK(p.transpose().eval(u0, v0) == p.eval(v0, u0));
        CHECK(p.transpose().transpose() == p);

        // p = sum_k coef_of_v_power(k) * v^k
        auto [du, dv] = p.bidegree();
        QPoly2 rebuilt;
        for (int k = 0; k <= dv; ++k)
            rebuilt = rebuilt + p.coef_of_v_power(k) * QPoly2::monomial(0, k, Quat(1));
        CHECK(rebuilt == p);
    }
}

} // TEST_SUITE

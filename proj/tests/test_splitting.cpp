#include <doctest.h>

#include "bicircle/examples.hpp"
#include "bicircle/randgen.hpp"
#include "bicircle/splitting.hpp"

using namespace bicircle;

namespace {

const Quat I = Quat::i();
const Quat J = Quat::j();
const Quat K = Quat::k();

RPolyN rp2(std::initializer_list<std::pair<std::pair<int, int>, Rat>> terms) {
    RPolyN p(2);
    for (const auto& [e, c] : terms) p.set_coef({e.first, e.second}, c);
    return p;
}

} // namespace

TEST_SUITE("splitting") {

TEST_CASE("product of (v - i)(u + j) splits back with p = 0") {
    QPoly2 q = (QPoly2::v() - QPoly2::constant(I)) * (QPoly2::u() + QPoly2::constant(J));
    SplitResult s = split_h11(q);
    CHECK(s.order == SplitOrder::d_then_e);
    CHECK(s.left == QPoly2::v() - QPoly2::constant(I));
    CHECK(s.right == QPoly2::u() + QPoly2::constant(J));
    CHECK(s.witness_p == Quat());
    CHECK(s.left * s.right == q);
}

TEST_CASE("1 + iu + jv + kuv splits the other way around") {
    QPoly2 q = QPoly2::constant(Quat(1)) + QPoly2::u() * I + QPoly2::v() * J +
               QPoly2::monomial(1, 1, K);
    SplitResult s = split_h11(q);
    CHECK(s.order == SplitOrder::e_then_d);
    CHECK(s.left == QPoly2::constant(J) + QPoly2::u() * K);   // E(u) = j + ku
    CHECK(s.right == QPoly2::v() - QPoly2::constant(J));      // D(v) = v - j
    CHECK(s.witness_q == -J);
    CHECK(s.witness_p == Quat(2));
    CHECK(s.left * s.right == q);
}

TEST_CASE("non-separable norm square is rejected") {
    QPoly2 q = QPoly2::constant(Quat(1)) + QPoly2::monomial(1, 1, K);
    CHECK_THROWS_WITH_AS(split_h11(q), doctest::Contains("separate"), error);
    try {
        split_h11(q);
    } catch (const error& e) {
        CHECK(e.code() == errc::not_separable);
    }
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(split_h11(QPoly2::u()), error);                    // bidegree (1,0)
    CHECK_THROWS_AS(split_h11(QPoly2::u() + QPoly2::v()), error);      // no uv coefficient
    try {
        split_h11(QPoly2::u() + QPoly2::v());
    } catch (const error& e) {
        CHECK(e.code() == errc::degenerate_input);
    }
}

TEST_CASE("the Beauregard polynomial stays outside the precondition") {
    const QPoly2& q = *find_example("beauregard").poly;
    CHECK(separable_test(q.norm_sq()).has_value());  // norm square does separate
    try {
        split_h11(q);
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::degenerate_input);   // bidegree (2,2), not (1,1)
    }
}

TEST_CASE("six-tuple assembly and defect") {
    // (2uv, 0, 0, 0, 1 - u^2 v^2, 1 + u^2 v^2)
    std::array<RPolyN, 6> x{rp2({{{1, 1}, Rat(2)}}), RPolyN(2), RPolyN(2), RPolyN(2),
                            rp2({{{0, 0}, Rat(1)}, {{2, 2}, Rat(-1)}}),
                            rp2({{{0, 0}, Rat(1)}, {{2, 2}, Rat(1)}})};
    SixTupleQuat st = six_tuple_to_quat(x);
    CHECK(st.q == QPoly2::monomial(1, 1, Quat(2)));
    CHECK(st.defect.is_zero());

    std::array<RPolyN, 6> unit{rp2({{{0, 0}, Rat(1)}}), RPolyN(2), RPolyN(2), RPolyN(2),
                               RPolyN(2), rp2({{{0, 0}, Rat(1)}})};
    CHECK(six_tuple_to_quat(unit).defect.is_zero());

    std::array<RPolyN, 6> ones{rp2({{{0, 0}, Rat(1)}}), rp2({{{0, 0}, Rat(1)}}),
                               rp2({{{0, 0}, Rat(1)}}), rp2({{{0, 0}, Rat(1)}}), RPolyN(2),
                               rp2({{{0, 0}, Rat(2)}})};
    CHECK(six_tuple_to_quat(ones).defect.is_zero());  // 4 = 4
}

TEST_CASE("six-tuple splitting bridge on a Pythagorean tuple") {
    // components of (v - i)(u + j) plus X5 = (u^2 - v^2)/2, X6 = (u^2 + v^2 + 2)/2
    std::array<RPolyN, 6> x{rp2({{{1, 1}, Rat(1)}}),   // uv
                            rp2({{{1, 0}, Rat(-1)}}),  // -u
                            rp2({{{0, 1}, Rat(1)}}),   // v
                            rp2({{{0, 0}, Rat(-1)}}),  // -1
                            rp2({{{2, 0}, Rat(1, 2)}, {{0, 2}, Rat(-1, 2)}}),
                            rp2({{{2, 0}, Rat(1, 2)}, {{0, 2}, Rat(1, 2)}, {{0, 0}, Rat(1)}})};
    SplitResult s = split_six_tuple(x);
    CHECK(s.order == SplitOrder::d_then_e);
    CHECK(s.left * s.right == six_tuple_to_quat(x).q);

    // all-zero tuple violates the degree hypotheses
    std::array<RPolyN, 6> zero{RPolyN(2), RPolyN(2), RPolyN(2), RPolyN(2), RPolyN(2), RPolyN(2)};
    try {
        split_six_tuple(zero);
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::hypothesis_violated);
    }

    // nonzero defect
    std::array<RPolyN, 6> bad = x;
    bad[0] = bad[0] + rp2({{{0, 0}, Rat(1)}});
    CHECK_THROWS_AS(split_six_tuple(bad), error);
}

TEST_CASE("round trip on random factor pairs with witness consistency") {
    Rng rng(42);
    for (int t = 0; t < 50; ++t) {
        QPoly2 d = rand_linear_v(rng);
        QPoly2 e = rand_linear_u(rng);
        for (const QPoly2& q : {d * e, e * d}) {
            SplitResult s = split_h11(q);
            CHECK(s.left * s.right == q);
            CHECK(s.left.norm_sq() * s.right.norm_sq() == q.norm_sq());

            QPoly2 constancy = s.witness_q * q.coef_of_v_power(1) + q.coef_of_v_power(0);
            CHECK(constancy == QPoly2::constant(s.witness_p));
            if (s.witness_p.is_zero()) {
                // Q0 + q Q1 vanishes identically in the first branch
                CHECK(constancy.is_zero());
            }
        }
    }
}

} // TEST_SUITE

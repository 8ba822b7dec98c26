#include <doctest.h>

#include "bicircle/quat.hpp"
#include "bicircle/randgen.hpp"

using namespace bicircle;

namespace {

// Independent oracle: the 16-term component expansion of the Hamilton
// product, written out without reusing operator*.
Quat hamilton_oracle(const Quat& p, const Quat& q) {
    Rat re = p.re * q.re - p.x * q.x - p.y * q.y - p.z * q.z;
    Rat x = p.re * q.x + p.x * q.re + p.y * q.z - p.z * q.y;
    Rat y = p.re * q.y + p.y * q.re + p.z * q.x - p.x * q.z;
    Rat z = p.re * q.z + p.z * q.re + p.x * q.y - p.y * q.x;
    return Quat(re, x, y, z);
}

} // namespace

TEST_SUITE("rat_quat") {

TEST_CASE("rationals reduce and keep positive denominators") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(2, -4).to_string() == "-1/2");
    CHECK(Rat(0, 7).to_string() == "0/1");
    CHECK(Rat(3) + Rat(1, 3) == Rat(10, 3));
    CHECK(Rat(1, 3) * Rat(3, 5) == Rat(1, 5));
    CHECK(Rat(7, 2) / Rat(7, 2) == Rat(1));
    CHECK_THROWS_AS(Rat(1) / Rat(0), error);
    CHECK_THROWS_AS(Rat(1, 0), error);
}

TEST_CASE("rational parsing and printing round trip") {
    for (const char* s : {"0/1", "1/1", "-2/3", "5/2", "123456789123456789/2"}) {
        CHECK(Rat::parse(s).to_string() == s);
    }
    CHECK(Rat::parse("7") == Rat(7));
    CHECK(Rat::parse("-4/6") == Rat(-2, 3));
    CHECK_THROWS_AS(Rat::parse("1/0"), error);
    CHECK_THROWS_AS(Rat::parse("abc"), error);
    CHECK_THROWS_AS(Rat::parse(""), error);
}

TEST_CASE("decimal strings round half away from zero") {
    CHECK(Rat(1, 3).decimal_string(6) == "0.333333");
    CHECK(Rat(2, 3).decimal_string(6) == "0.666667");
    CHECK(Rat(-1, 2).decimal_string(3) == "-0.500");
    CHECK(Rat(5).decimal_string(0) == "5");
    CHECK(Rat(1, 200).decimal_string(2) == "0.01");
}

TEST_CASE("defining relations of the Hamilton table") {
    const Quat i = Quat::i(), j = Quat::j(), k = Quat::k();
    CHECK(i * j == k);
    CHECK(j * k == i);
    CHECK(k * i == j);
    CHECK(i * i == Quat(-1));
    CHECK((Quat(1) + i) * (Quat(1) - i) == Quat(2));
}

TEST_CASE("product frozen from the 16-term oracle") {
    // (1 + i + j)(2 - k)
    Quat p(Rat(1), Rat(1), Rat(1), Rat(0));
    Quat q(Rat(2), Rat(0), Rat(0), Rat(-1));
    Quat expected = hamilton_oracle(p, q);
    CHECK(expected == Quat(Rat(2), Rat(1), Rat(3), Rat(-1)));
    CHECK(p * q == expected);
}

TEST_CASE("inverse") {
    CHECK(Quat::i().inv() == -Quat::i());
    Quat q(Rat(1), Rat(1), Rat(1), Rat(1));
    CHECK(q.inv() == Quat(Rat(1, 4), Rat(-1, 4), Rat(-1, 4), Rat(-1, 4)));
    CHECK(q * q.inv() == Quat(1));
    CHECK_THROWS_AS(Quat().inv(), error);
}

TEST_CASE("conjugation, norm, parts") {
    Quat q(Rat(1), Rat(1), Rat(0), Rat(0));
    CHECK(q.conj() == Quat(Rat(1), Rat(-1), Rat(0), Rat(0)));
    CHECK(Quat(Rat(1), Rat(1), Rat(1), Rat(1)).norm_sq() == Rat(4));
    CHECK(Quat(Rat(3), Rat(2), Rat(0), Rat(0)).im_part() == Quat(Rat(0), Rat(2), Rat(0), Rat(0)));
}

TEST_CASE("imaginary dot and cross products") {
    const Quat i = Quat::i(), j = Quat::j(), k = Quat::k();
    CHECK(im_dot(i, j) == Rat(0));
    CHECK(im_cross(i, j) == k);
    // 3-vector oracle: (2,3,0) . (4,-1,0) = 8 - 3
    Quat a = Rat(2) * i + Rat(3) * j;
    Quat b = Rat(4) * i - j;
    CHECK(im_dot(a, b) == Rat(5));
}

TEST_CASE("algebraic laws on random samples") {
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        Quat p = rand_quat(rng), q = rand_quat(rng);
        CHECK(p * q == hamilton_oracle(p, q));
        CHECK((p * q).norm_sq() == p.norm_sq() * q.norm_sq());
        CHECK((p * q).conj() == q.conj() * p.conj());
        CHECK((p * q).re_part() == (q * p).re_part());
        if (!q.is_zero()) {
            CHECK(q * q.inv() == Quat(1));
            CHECK(q.inv() * q == Quat(1));
        }
    }
}

} // TEST_SUITE

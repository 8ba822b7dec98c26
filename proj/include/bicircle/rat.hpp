#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "bicircle/error.hpp"

namespace bicircle {

/// Arbitrary-precision rational, always reduced with positive denominator.
///
/// Thin wrapper over GMP's mpq_class that canonicalizes on every entry
/// point; GMP arithmetic keeps results canonical from there on.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d) {
        if (d == 0) fail(errc::zero_division, "rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& n, const mpz_class& d) {
        if (d == 0) fail(errc::zero_division, "rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    /// Parses "n" or "n/d" with an optional leading minus.
    static Rat parse(std::string_view s);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_), already_canonical{}); }
    Rat abs() const { return sign() < 0 ? -*this : *this; }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) fail(errc::zero_division, "division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    Rat inv() const {
        if (is_zero()) fail(errc::zero_division, "inverse of zero rational");
        return Rat(mpq_class(1 / v_), already_canonical{});
    }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    /// Always emits "num/den" in lowest terms, e.g. "-2/3", "0/1".
    std::string to_string() const;

    /// Decimal approximation with `digits` places, rounded half away
    /// from zero. Exact integer arithmetic; used only for mesh export.
    std::string decimal_string(int digits) const;

    double to_double() const { return v_.get_d(); }

private:
    struct already_canonical {};
    Rat(mpq_class q, already_canonical) : v_(std::move(q)) {}

    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

} // namespace bicircle

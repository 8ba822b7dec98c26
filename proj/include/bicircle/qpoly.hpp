#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicircle/quat.hpp"

namespace bicircle {

struct Mono2 {
    int du = 0;
    int dv = 0;
    friend bool operator<(const Mono2& a, const Mono2& b) {
        return a.du != b.du ? a.du < b.du : a.dv < b.dv;
    }
    friend bool operator==(const Mono2& a, const Mono2& b) {
        return a.du == b.du && a.dv == b.dv;
    }
};

class RPolyN;

/// Bivariate polynomial in u, v with quaternion coefficients.
///
/// The real variables commute with each other and with the coefficients;
/// only coefficient multiplication is noncommutative. Zero coefficients
/// are never stored.
class QPoly2 {
public:
    QPoly2() = default;

    static QPoly2 constant(const Quat& c);
    static QPoly2 monomial(int du, int dv, const Quat& c);
    static QPoly2 u() { return monomial(1, 0, Quat::one()); }
    static QPoly2 v() { return monomial(0, 1, Quat::one()); }

    bool is_zero() const { return terms_.empty(); }
    /// (-1, -1) for the zero polynomial.
    std::pair<int, int> bidegree() const;
    bool depends_u() const;
    bool depends_v() const;
    bool is_constant() const { return bidegree() <= std::pair<int, int>(0, 0); }

    Quat coef(int du, int dv) const;
    void set_coef(int du, int dv, const Quat& c);
    const std::map<Mono2, Quat>& terms() const { return terms_; }

    QPoly2 operator-() const;
    friend QPoly2 operator+(const QPoly2& a, const QPoly2& b);
    friend QPoly2 operator-(const QPoly2& a, const QPoly2& b);
    friend QPoly2 operator*(const QPoly2& a, const QPoly2& b);
    friend QPoly2 operator*(const Quat& c, const QPoly2& p);
    friend QPoly2 operator*(const QPoly2& p, const Quat& c);
    friend bool operator==(const QPoly2& a, const QPoly2& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QPoly2& a, const QPoly2& b) { return !(a == b); }

    QPoly2 conj() const;

    /// Q * conj(Q) as a real polynomial. Every coefficient of the product
    /// is provably real; a non-real coefficient signals a bug upstream.
    RPolyN norm_sq() const;

    Quat eval(const Rat& u0, const Rat& v0) const;

    /// Substitution u -> u + su, v -> v + sv (binomial expansion, exact).
    QPoly2 shift(const Rat& su, const Rat& sv) const;

    /// Swap the roles of u and v.
    QPoly2 transpose() const;

    /// Coefficient slice: P(u, v) = sum_k slice_v(k)(u) * v^k as pure-u polynomials.
    QPoly2 coef_of_v_power(int k) const;
    QPoly2 coef_of_u_power(int k) const;

    std::string to_string() const;

private:
    std::map<Mono2, Quat> terms_;
};

/// Real-coefficient multivariate polynomial, up to 4 variables.
///
/// Exponent keys have fixed length nvars(); variable order is positional
/// and by convention (u, v) for two variables and (x, y, z, t) for four.
class RPolyN {
public:
    RPolyN() : nvars_(1) {}
    explicit RPolyN(int nvars);

    static RPolyN constant(int nvars, const Rat& c);
    static RPolyN monomial(const std::vector<int>& exps, const Rat& c);
    static RPolyN variable(int nvars, int index);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int total_degree() const;          // -1 for the zero polynomial
    int degree_in(int var) const;      // -1 for the zero polynomial

    Rat coef(const std::vector<int>& exps) const;
    void set_coef(const std::vector<int>& exps, const Rat& c);
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

    RPolyN operator-() const;
    friend RPolyN operator+(const RPolyN& a, const RPolyN& b);
    friend RPolyN operator-(const RPolyN& a, const RPolyN& b);
    friend RPolyN operator*(const RPolyN& a, const RPolyN& b);
    friend RPolyN operator*(const Rat& s, const RPolyN& p);
    friend bool operator==(const RPolyN& a, const RPolyN& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const RPolyN& a, const RPolyN& b) { return !(a == b); }

    Rat eval(const std::vector<Rat>& point) const;

    /// Substitute value for one variable; the variable stays in place
    /// (use drop_var to remove it).
    RPolyN substitute(int var, const Rat& value) const;

    /// Remove a variable that no polynomial term uses.
    RPolyN drop_var(int var) const;

    /// Homogeneous part of the given total degree.
    RPolyN homogeneous_part(int degree) const;

    std::string to_string() const;

private:
    int nvars_;
    std::map<std::vector<int>, Rat> terms_;
};

/// Quaternion coefficients of a linear homogeneous form in (u, v, w, s).
struct HomLinearQuat {
    Quat cu, cv, cw, cs;

    Quat eval(const Rat& u, const Rat& v, const Rat& w, const Rat& s) const {
        return cu * u + cv * v + cw * w + cs * s;
    }
};

/// Lift a bidegree-(1,1) polynomial to the linear form with A(u,v) = Ahom(u, v, uv, 1).
HomLinearQuat homogenize_11(const QPoly2& a);

/// Inverse of homogenize_11.
QPoly2 dehomogenize_11(const HomLinearQuat& h);

/// Substitute a quaternion for one variable of a real two-variable
/// polynomial; the result is a polynomial in the remaining variable with
/// quaternion coefficients (stored in the surviving slot of a QPoly2).
QPoly2 subst_quat(const RPolyN& f, int var, const Quat& q);

struct Separation {
    RPolyN p_u;  // two-variable polynomial using u only, monic in u
    RPolyN r_v;  // two-variable polynomial using v only
};

/// Rank-one test on the coefficient matrix of a two-variable polynomial.
/// Returns the factors P(u) * R(v) = F when F separates, empty otherwise.
std::optional<Separation> separable_test(const RPolyN& f);

/// Build a quaternion-coefficient polynomial from four real ones:
/// x1 + i*x2 + j*x3 + k*x4, matching coefficients monomial by monomial.
QPoly2 from_components(const RPolyN& x1, const RPolyN& x2, const RPolyN& x3, const RPolyN& x4);

/// Component polynomials (re, i, j, k) of a QPoly2.
std::array<RPolyN, 4> to_components(const QPoly2& q);

} // namespace bicircle

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "bicircle/qpoly.hpp"

namespace bicircle {

/// Six bivariate real polynomials; certified when
/// X1^2 + ... + X5^2 = X6^2 holds exactly with all bidegrees <= (2,2).
struct PythTuple {
    std::array<RPolyN, 6> x{RPolyN(2), RPolyN(2), RPolyN(2), RPolyN(2), RPolyN(2), RPolyN(2)};
};

/// Generator input: A, B, C of bidegree <= (1,1) and a real D such that
/// |B|^2 D and |AC|^2 D stay within bidegree (2,2).
struct PythSeed {
    QPoly2 a, b, c;
    RPolyN d{2};
};

/// X1 + iX2 + jX3 + kX4 = 2ABCD, X5 = (|B|^2 - |AC|^2) D,
/// X6 = (|B|^2 + |AC|^2) D; the identity is re-checked before returning.
PythTuple gen_tuple(const PythSeed& seed);

struct TupleVerdict {
    bool valid;
    RPolyN defect;  // X1^2 + ... + X5^2 - X6^2
};

TupleVerdict verify_tuple(const PythTuple& tuple);

/// One-variable analogue: X1 + iX2 + jX3 + kX4 = 2ABD,
/// X5 = (|B|^2 - |A|^2) D, X6 = (|B|^2 + |A|^2) D. Inputs depend on u
/// only; outputs are pure-u polynomials (still stored with two slots).
std::array<RPolyN, 6> gen_univariate(const QPoly2& a, const QPoly2& b, const RPolyN& d);

/// Evaluator (u,v) -> (X1 + iX2 + jX3 + kX4) / (X6 - X5); the rational
/// map onto the stereographic model of the tuple's sphere point.
class TupleSurface {
public:
    explicit TupleSurface(const PythTuple& tuple);
    Quat eval(const Rat& u0, const Rat& v0) const;

private:
    QPoly2 num_;
    RPolyN den_;
};

TupleSurface tuple_to_surface(const PythTuple& tuple);

/// X1^2 + ... + Xn^2 == X0^2 (sphere mode, y == nullptr) or == X0 * Y.
bool verify_sphere_relation(const std::vector<RPolyN>& x0_to_xn, const RPolyN* y = nullptr);

} // namespace bicircle

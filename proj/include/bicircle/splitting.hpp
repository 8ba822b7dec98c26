#pragma once

#include <array>

#include "bicircle/qpoly.hpp"

namespace bicircle {

enum class SplitOrder { d_then_e, e_then_d };

/// Factorization of a bidegree-(1,1) quaternionic polynomial into two
/// single-variable linear factors, `left * right` in multiplication order.
/// `witness_q` and `witness_p` are the intermediate constants of the
/// derivation: q kills the u-coefficient of q*Q1 + Q0 and p is the
/// resulting constant value.
struct SplitResult {
    SplitOrder order;
    QPoly2 left;
    QPoly2 right;
    Quat witness_q;
    Quat witness_p;
};

/// Split Q in H_11 with separable norm square into D(v)*E(u) or E(u)*D(v).
///
/// Requires bidegree exactly (1,1) with nonzero uv-coefficient and
/// |Q|^2 = P(u)*R(v). The product of the returned factors is re-multiplied
/// and checked against Q before returning.
SplitResult split_h11(const QPoly2& q);

struct SixTupleQuat {
    QPoly2 q;       // X1 + i X2 + j X3 + k X4
    RPolyN defect;  // |q|^2 - (X6^2 - X5^2); zero iff the tuple is Pythagorean
};

/// Assemble the quaternionic polynomial of a real 6-tuple and its defect.
SixTupleQuat six_tuple_to_quat(const std::array<RPolyN, 6>& x);

/// Factor X1 + i X2 + j X3 + k X4 for a Pythagorean 6-tuple whose
/// X6 +/- X5 separate into pure-u and pure-v quadratics.
SplitResult split_six_tuple(const std::array<RPolyN, 6>& x);

} // namespace bicircle

#include "bicircle/splitting.hpp"

namespace bicircle {

SplitResult split_h11(const QPoly2& q) {
    auto [du, dv] = q.bidegree();
    if (du != 1 || dv != 1)
        fail(errc::degenerate_input, "split_h11 needs bidegree exactly (1,1)");
    Quat q11 = q.coef(1, 1);
    if (q11.is_zero())
        fail(errc::degenerate_input, "split_h11 needs a nonzero uv coefficient");

    RPolyN nsq = q.norm_sq();
    auto sep = separable_test(nsq);
    if (!sep)
        fail(errc::not_separable, "norm square does not separate as P(u)*R(v)");

    Quat q00 = q.coef(0, 0), q10 = q.coef(1, 0), q01 = q.coef(0, 1);

    // Right quotient: constancy of qq*Q1(u) + Q0(u) needs qq*Q11 + Q10 = 0.
    Quat qq = -(q10 * q11.inv());
    Quat p = qq * q01 + q00;

    SplitResult res;
    res.witness_q = qq;
    res.witness_p = p;

    QPoly2 e = QPoly2::constant(q01) + QPoly2::monomial(1, 0, q11);  // Q1(u)
    if (p.is_zero()) {
        res.order = SplitOrder::d_then_e;
        res.left = QPoly2::monomial(0, 1, Quat::one()) - QPoly2::constant(qq);
        res.right = e;
    } else {
        res.order = SplitOrder::e_then_d;
        Quat root = p.conj() * qq.conj() * p.conj().inv();
        res.left = e;
        res.right = QPoly2::monomial(0, 1, Quat::one()) - QPoly2::constant(root);
    }

    if (res.left * res.right != q)
        fail(errc::verification_failed, "split factors do not reproduce the input");
    return res;
}

SixTupleQuat six_tuple_to_quat(const std::array<RPolyN, 6>& x) {
    for (const auto& p : x)
        if (p.nvars() != 2) fail(errc::domain_violation, "tuple entries must be bivariate");
    SixTupleQuat out{from_components(x[0], x[1], x[2], x[3]), RPolyN(2)};
    out.defect = out.q.norm_sq() - (x[5] * x[5] - x[4] * x[4]);
    return out;
}

namespace {

bool pure_u_deg2(const RPolyN& p) { return p.degree_in(1) <= 0 && p.degree_in(0) == 2; }
bool pure_v_deg2(const RPolyN& p) { return p.degree_in(0) <= 0 && p.degree_in(1) == 2; }

} // namespace

SplitResult split_six_tuple(const std::array<RPolyN, 6>& x) {
    for (int k = 0; k < 4; ++k)
        if (x[static_cast<size_t>(k)].degree_in(0) > 1 || x[static_cast<size_t>(k)].degree_in(1) > 1)
            fail(errc::hypothesis_violated, "X1..X4 must have bidegree at most (1,1)");
    for (int k = 4; k < 6; ++k)
        if (x[static_cast<size_t>(k)].degree_in(0) > 2 || x[static_cast<size_t>(k)].degree_in(1) > 2)
            fail(errc::hypothesis_violated, "X5, X6 must have bidegree at most (2,2)");

    RPolyN sum = x[5] + x[4];   // X6 + X5
    RPolyN diff = x[5] - x[4];  // X6 - X5
    bool standard = pure_u_deg2(sum) && pure_v_deg2(diff);
    bool mirrored = pure_v_deg2(sum) && pure_u_deg2(diff);
    if (!standard && !mirrored)
        fail(errc::hypothesis_violated,
             "X6 +/- X5 must be pure single-variable quadratics in opposite variables");

    SixTupleQuat st = six_tuple_to_quat(x);
    if (!st.defect.is_zero())
        fail(errc::hypothesis_violated, "tuple is not Pythagorean: defect " + st.defect.to_string());

    return split_h11(st.q);
}

} // namespace bicircle

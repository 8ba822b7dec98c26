#include "bicircle/pythagorean.hpp"

namespace bicircle {

namespace {

bool within_22(const RPolyN& p) { return p.degree_in(0) <= 2 && p.degree_in(1) <= 2; }

} // namespace

PythTuple gen_tuple(const PythSeed& seed) {
    auto check11 = [](const QPoly2& p, const char* what) {
        auto [du, dv] = p.bidegree();
        if (du > 1 || dv > 1)
            fail(errc::bidegree_violation, std::string(what) + " exceeds bidegree (1,1)");
    };
    check11(seed.a, "A");
    check11(seed.b, "B");
    check11(seed.c, "C");
    if (seed.d.nvars() != 2) fail(errc::domain_violation, "D must be bivariate");
    if (!within_22(seed.d)) fail(errc::bidegree_violation, "D exceeds bidegree (2,2)");

    RPolyN bn = seed.b.norm_sq();
    RPolyN acn = (seed.a * seed.c).norm_sq();
    RPolyN bnd = bn * seed.d;
    RPolyN acnd = acn * seed.d;
    if (!within_22(bnd)) fail(errc::bidegree_violation, "|B|^2 D exceeds bidegree (2,2)");
    if (!within_22(acnd)) fail(errc::bidegree_violation, "|AC|^2 D exceeds bidegree (2,2)");

    QPoly2 prod = seed.a * seed.b * seed.c;
    QPoly2 twice;
    for (const auto& [m, q] : prod.terms()) twice.set_coef(m.du, m.dv, Rat(2) * q);
    // D is real, so it scales each component independently.
    auto comps = to_components(twice);
    PythTuple out;
    for (int k = 0; k < 4; ++k) out.x[static_cast<size_t>(k)] = comps[static_cast<size_t>(k)] * seed.d;
    out.x[4] = bnd - acnd;
    out.x[5] = bnd + acnd;

    TupleVerdict verdict = verify_tuple(out);
    if (!verdict.valid)
        fail(errc::identity_failure, "generated tuple fails its own identity: defect " +
                                         verdict.defect.to_string());
    return out;
}

TupleVerdict verify_tuple(const PythTuple& tuple) {
    RPolyN defect(2);
    for (int k = 0; k < 5; ++k) defect = defect + tuple.x[static_cast<size_t>(k)] * tuple.x[static_cast<size_t>(k)];
    defect = defect - tuple.x[5] * tuple.x[5];
    bool degrees_ok = true;
    for (const auto& p : tuple.x)
        if (!within_22(p)) degrees_ok = false;
    return TupleVerdict{defect.is_zero() && degrees_ok, defect};
}

std::array<RPolyN, 6> gen_univariate(const QPoly2& a, const QPoly2& b, const RPolyN& d) {
    if (a.depends_v() || b.depends_v())
        fail(errc::domain_violation, "univariate generator needs pure-u quaternion polynomials");
    if (d.nvars() != 2 || d.degree_in(1) > 0)
        fail(errc::domain_violation, "univariate generator needs a pure-u real polynomial");

    QPoly2 prod = a * b;
    QPoly2 twice;
    for (const auto& [m, q] : prod.terms()) twice.set_coef(m.du, m.dv, Rat(2) * q);
    auto comps = to_components(twice);

    RPolyN an = a.norm_sq(), bn = b.norm_sq();
    std::array<RPolyN, 6> out{RPolyN(2), RPolyN(2), RPolyN(2), RPolyN(2), RPolyN(2), RPolyN(2)};
    for (int k = 0; k < 4; ++k) out[static_cast<size_t>(k)] = comps[static_cast<size_t>(k)] * d;
    out[4] = (bn - an) * d;
    out[5] = (bn + an) * d;

    RPolyN defect(2);
    for (int k = 0; k < 5; ++k) defect = defect + out[static_cast<size_t>(k)] * out[static_cast<size_t>(k)];
    defect = defect - out[5] * out[5];
    if (!defect.is_zero())
        fail(errc::identity_failure, "univariate tuple fails its identity");
    return out;
}

TupleSurface::TupleSurface(const PythTuple& tuple)
    : num_(from_components(tuple.x[0], tuple.x[1], tuple.x[2], tuple.x[3])),
      den_(tuple.x[5] - tuple.x[4]) {
    if (den_.is_zero())
        fail(errc::pole, "X6 - X5 vanishes identically; the projection has no chart");
}

Quat TupleSurface::eval(const Rat& u0, const Rat& v0) const {
    Rat d = den_.eval({u0, v0});
    if (d.is_zero())
        fail(errc::pole, "X6 - X5 vanishes at (" + u0.to_string() + ", " + v0.to_string() + ")");
    return num_.eval(u0, v0) * d.inv();
}

TupleSurface tuple_to_surface(const PythTuple& tuple) { return TupleSurface(tuple); }

bool verify_sphere_relation(const std::vector<RPolyN>& x0_to_xn, const RPolyN* y) {
    if (x0_to_xn.size() < 2) fail(errc::domain_violation, "need X0 and at least one Xk");
    const RPolyN& x0 = x0_to_xn.front();
    RPolyN sum(x0.nvars());
    for (size_t k = 1; k < x0_to_xn.size(); ++k) sum = sum + x0_to_xn[k] * x0_to_xn[k];
    RPolyN rhs = y ? x0 * *y : x0 * x0;
    return sum == rhs;
}

} // namespace bicircle

#include "bicircle/examples.hpp"

namespace bicircle {

namespace {

QPoly2 c(const Quat& q) { return QPoly2::constant(q); }

std::vector<NamedExample> make_examples() {
    const Quat one = Quat::one(), qi = Quat::i(), qj = Quat::j(), qk = Quat::k();
    const QPoly2 u = QPoly2::u(), v = QPoly2::v();

    std::vector<NamedExample> out;

    // (u - i)((2j + i)v - 2i - j) ((u - i)(v - k))^-1, a torus in Im H
    {
        QPoly2 num = (u - c(qi)) * (c(Rat(2) * qj + qi) * v - c(Rat(2) * qi + qj));
        QPoly2 den = (u - c(qi)) * (v - c(qk));
        out.push_back({"torus", "rotational torus as a quaternionic quotient",
                       SurfaceSpec(QuotientForm{num, den}), std::nullopt});
    }

    // (v + i)^-1 (v + j)(u + k) (u + i)^-1, a Clifford translational surface in S^3
    {
        QPoly2 b = (v + c(qj)) * (u + c(qk));
        out.push_back({"clifford", "product of two circles on the unit sphere",
                       SurfaceSpec(ABCForm{v + c(qi), b, u + c(qi)}), std::nullopt});
    }

    // u^2 v^2 - 1 + (u^2 - v^2) i + 2uv j: irreducible, yet |Q|^2 factors
    {
        QPoly2 q;
        q.set_coef(2, 2, one);
        q.set_coef(0, 0, -one);
        q.set_coef(2, 0, qi);
        q.set_coef(0, 2, -qi);
        q.set_coef(1, 1, Rat(2) * qj);
        out.push_back({"beauregard", "bidegree-(2,2) polynomial with separable norm square",
                       std::nullopt, q});
    }

    // sum of the circles i(u+k)^-1 and (v+i)^-1 j
    {
        MoebiusCurve alpha{Quat::zero(), qi, one, qk, CurveSide::left};
        MoebiusCurve beta{Quat::zero(), qj, one, qi, CurveSide::right};
        out.push_back({"euclidean-translational-sample", "pointwise sum of two circles in Im H",
                       SurfaceSpec(EuclideanTranslationalForm{alpha, beta}), std::nullopt});
    }

    // skew-hermitian matrix, M22 linear in u, M33 linear in v
    {
        QuasidetForm qd;
        qd.m[0][0] = c(qi);
        qd.m[0][1] = c(one + qj);
        qd.m[0][2] = c(qk);
        qd.m[1][0] = c(-one + qj);   // -conj(M12)
        qd.m[1][1] = qi * u + c(qj);
        qd.m[1][2] = c(one + qi);
        qd.m[2][0] = c(qk);          // -conj(M13)
        qd.m[2][1] = c(-one + qi);   // -conj(M23)
        qd.m[2][2] = qk * v + c(qi);
        out.push_back({"quasidet-sample", "quasideterminant surface from a skew-hermitian matrix",
                       SurfaceSpec(qd), std::nullopt});
    }

    // (v + i)^-1 (u + k)(v - j) (u + j)^-1: the middle factor splits the
    // other way around, so the surface is a quadric section of S^3
    {
        QPoly2 b = (u + c(qk)) * (v - c(qj));
        out.push_back({"quadric-sample", "sphere-quadric intersection from a reversed splitting",
                       SurfaceSpec(ABCForm{v + c(qi), b, u + c(qj)}), std::nullopt});
    }

    return out;
}

} // namespace

const std::vector<NamedExample>& builtin_examples() {
    static const std::vector<NamedExample> examples = make_examples();
    return examples;
}

const NamedExample& find_example(const std::string& name) {
    for (const NamedExample& e : builtin_examples())
        if (e.name == name) return e;
    fail(errc::domain_violation, "unknown example '" + name + "'");
}

std::vector<const NamedExample*> surface_examples() {
    std::vector<const NamedExample*> out;
    for (const NamedExample& e : builtin_examples())
        if (e.spec) out.push_back(&e);
    return out;
}

} // namespace bicircle

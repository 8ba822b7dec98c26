#include "bicircle/randgen.hpp"

namespace bicircle {

int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Rat rand_coeff(Rng& rng) { return Rat(rand_int(rng, -2, 2)); }

Quat rand_quat(Rng& rng) {
    return Quat(rand_coeff(rng), rand_coeff(rng), rand_coeff(rng), rand_coeff(rng));
}

Quat rand_nonzero_quat(Rng& rng) {
    for (;;) {
        Quat q = rand_quat(rng);
        if (!q.is_zero()) return q;
    }
}

Quat rand_imaginary_quat(Rng& rng) {
    return Quat(Rat(0), rand_coeff(rng), rand_coeff(rng), rand_coeff(rng));
}

Quat rand_nonzero_imaginary_quat(Rng& rng) {
    for (;;) {
        Quat q = rand_imaginary_quat(rng);
        if (!q.is_zero()) return q;
    }
}

Quat rand_unit_quat(Rng& rng) {
    Quat r = rand_nonzero_quat(rng);
    return (r * r) * r.norm_sq().inv();
}

QPoly2 rand_qpoly11(Rng& rng) {
    QPoly2 p;
    p.set_coef(0, 0, rand_quat(rng));
    p.set_coef(1, 0, rand_quat(rng));
    p.set_coef(0, 1, rand_quat(rng));
    p.set_coef(1, 1, rand_quat(rng));
    return p;
}

QPoly2 rand_linear_u(Rng& rng) {
    QPoly2 p;
    p.set_coef(0, 0, rand_quat(rng));
    p.set_coef(1, 0, rand_nonzero_quat(rng));
    return p;
}

QPoly2 rand_linear_v(Rng& rng) {
    QPoly2 p;
    p.set_coef(0, 0, rand_quat(rng));
    p.set_coef(0, 1, rand_nonzero_quat(rng));
    return p;
}

MoebiusCurve rand_imh_circle(Rng& rng, CurveSide side) {
    // h with nonzero imaginary part, f imaginary, g = Im h x r nonzero
    Quat imh = rand_nonzero_imaginary_quat(rng);
    Quat g;
    do {
        g = im_cross(imh, rand_imaginary_quat(rng));
    } while (g.is_zero());
    Quat h = Quat(rand_coeff(rng), Rat(0), Rat(0), Rat(0)) + imh;
    Quat f = rand_imaginary_quat(rng);

    // left:  f + g (u+h)^-1  = (f u + (f h + g)) (u + h)^-1
    // right: f + (u+h)^-1 g  = (u + h)^-1 (f u + (h f + g))
    if (side == CurveSide::left)
        return MoebiusCurve{f, f * h + g, Quat::one(), h, CurveSide::left};
    return MoebiusCurve{f, h * f + g, Quat::one(), h, CurveSide::right};
}

MoebiusCurve rand_s3_circle(Rng& rng) {
    Quat g = rand_quat(rng);
    if (g.im_part().is_zero()) g = g + Quat::i();
    Quat re_g(g.re_part(), Rat(0), Rat(0), Rat(0));

    Quat omega = rand_unit_quat(rng);
    Quat h = re_g + omega * g.im_part() * omega.inv();
    if (g == h) {
        // omega commuted with Im g; conjugate by a non-parallel axis instead
        Quat axis = (g.y.is_zero() && g.z.is_zero()) ? Quat::j() : Quat::i();
        h = re_g + axis * g.im_part() * axis.inv();
    }

    Quat p = rand_unit_quat(rng);
    Quat q = rand_unit_quat(rng);
    // p (u+g)(u+h)^-1 q as a single left form
    return MoebiusCurve{p, p * g, q.inv(), q.inv() * h, CurveSide::left};
}

PythSeed rand_pyth_seed(Rng& rng) {
    PythSeed seed;
    switch (rand_int(rng, 0, 3)) {
        case 0: {
            // constant D, single-variable A and C
            seed.a = rand_linear_u(rng);
            seed.b = rand_qpoly11(rng);
            seed.c = rand_linear_v(rng);
            seed.d = RPolyN::constant(2, Rat(rand_int(rng, 1, 2)));
            break;
        }
        case 1: {
            // transposed variant
            seed.a = rand_linear_v(rng);
            seed.b = rand_qpoly11(rng);
            seed.c = rand_linear_u(rng);
            seed.d = RPolyN::constant(2, Rat(rand_int(rng, 1, 2)));
            break;
        }
        case 2: {
            // pure-u quadratic D forces B and AC into H_01
            seed.a = rand_linear_v(rng);
            seed.b = rand_linear_v(rng);
            seed.c = QPoly2::constant(rand_nonzero_quat(rng));
            RPolyN d(2);
            d.set_coef({0, 0}, rand_coeff(rng));
            d.set_coef({1, 0}, rand_coeff(rng));
            d.set_coef({2, 0}, Rat(rand_int(rng, 1, 2)));
            seed.d = d;
            break;
        }
        default: {
            // everything constant except a full B
            seed.a = QPoly2::constant(rand_nonzero_quat(rng));
            seed.b = rand_qpoly11(rng);
            seed.c = QPoly2::constant(rand_nonzero_quat(rng));
            seed.d = RPolyN::constant(2, Rat(rand_int(rng, 1, 2)));
            break;
        }
    }
    if (seed.b.is_zero()) seed.b = QPoly2::constant(Quat::one());
    return seed;
}

} // namespace bicircle

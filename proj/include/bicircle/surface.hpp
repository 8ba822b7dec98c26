#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "bicircle/geom.hpp"
#include "bicircle/qpoly.hpp"

namespace bicircle {

/// Phi(u,v) = A^-1 * B * C^-1 with A, B, C of bidegree at most (1,1)
/// and A*C of bidegree at most (1,1).
struct ABCForm {
    QPoly2 a, b, c;
};

/// Phi(u,v) = A * B^-1.
struct QuotientForm {
    QPoly2 a, b;
};

/// Pointwise sum of two curves: Phi(u,v) = alpha(u) + beta(v).
struct EuclideanTranslationalForm {
    MoebiusCurve alpha, beta;
};

/// Pointwise product Phi(u,v) = alpha(u) * beta(v) of two curves in S^3,
/// optionally followed by stereographic projection to Im H.
struct CliffordTranslationalForm {
    MoebiusCurve alpha, beta;
    bool project = false;
};

/// Top-left quasideterminant of a 3x3 matrix of polynomials.
struct QuasidetForm {
    std::array<std::array<QPoly2, 3>, 3> m;
};

using SurfaceSpec = std::variant<ABCForm, QuotientForm, EuclideanTranslationalForm,
                                 CliffordTranslationalForm, QuasidetForm>;

/// Bidegree and shape constraints of each spec kind; throws on violation.
void validate_spec(const SurfaceSpec& spec);

Quat eval_surface(const SurfaceSpec& spec, const Rat& u0, const Rat& v0);

Quat quasidet_eval(const QuasidetForm& form, const Rat& u0, const Rat& v0);

struct GridPoint {
    Rat u, v;
    Quat point;
};

struct SampleGrid {
    std::vector<GridPoint> points;
    std::vector<std::pair<Rat, Rat>> poles;  // skipped parameter pairs
};

/// n x n rational lattice over [u_lo, u_hi] x [v_lo, v_hi]; poles are
/// recorded and skipped, never perturbed.
SampleGrid sample_grid(const SurfaceSpec& spec, const Rat& u_lo, const Rat& u_hi,
                       const Rat& v_lo, const Rat& v_hi, int n);

/// n x n grid over ladder parameters chosen so that no lattice point is a
/// pole. Used by the classification pipeline.
SampleGrid ladder_grid(const SurfaceSpec& spec, int n);

enum class Ambient { im_h, s3, neither };

Ambient contains_check(const SurfaceSpec& spec, const SampleGrid& grid);

enum class FixedVar { u, v };

/// One iso-parameter curve of a surface, as a Moebius core with a
/// decoration saying how constants enter: multiplicatively
/// (const_left * core(t) * const_right, optionally projected after) or
/// additively (offset + core(t)).
struct IsoCurve {
    enum class Law { mul, add };
    Law law = Law::mul;
    Quat const_left = Quat::one();   // additive offset when law == add
    MoebiusCurve core;
    Quat const_right = Quat::one();
    bool post_project = false;

    Quat eval(const Rat& t) const;
};

/// The curve traced when one parameter is held fixed; its free variable is
/// the other parameter.
IsoCurve iso_curve(const SurfaceSpec& spec, FixedVar fixed, const Rat& value);

/// Rewrite alpha(u) + beta(v) in sandwich form A^-1 B C^-1 by putting the
/// two denominators on opposite sides (curves are re-sided as needed).
ABCForm encode_translational(const EuclideanTranslationalForm& form);

} // namespace bicircle

#pragma once

#include <variant>

#include "bicircle/implicit.hpp"
#include "bicircle/surface.hpp"

namespace bicircle {

struct ChangeOfVars {
    Quat a_lead;  // left divisor taken out of A and B
    Quat c_lead;  // right divisor taken out of C and B
    Rat u_shift, v_shift;
};

/// A, B, C rewritten so that A = v + a and C = u + c with a, c purely
/// imaginary; the surface image is unchanged (reparametrization only).
struct NormalizedABC {
    QPoly2 a, b, c;
    Quat const_a, const_c;  // the imaginary constants of A and C
    ChangeOfVars change;
};

NormalizedABC normalize_abc(const QPoly2& a, const QPoly2& b, const QPoly2& c);

struct DarbouxCyclideClass {
    RPolyN implicit;  // three variables, vanishing on the surface
    DarbouxForm form;
};

struct QuadricInS3Class {
    RPolyN implicit_projected;  // quartic of the stereographic projection
    DarbouxForm form;
};

struct EuclideanTranslationalClass {
    MoebiusCurve alpha;  // in u
    MoebiusCurve beta;   // in v; surface(u,v) = alpha(u) + beta(v)
};

struct CliffordTranslationalClass {
    MoebiusCurve alpha;  // left factor
    MoebiusCurve beta;   // right factor
    Rat norm_ratio;      // surface(u,v) = norm_ratio * alpha(s) * beta(t)
    FixedVar left_var;   // which parameter drives alpha: v normally
};

struct PlanarClass {
    Quat normal;  // purely imaginary
    Rat offset;   // im_dot(normal, p) = offset on the surface
};

using Classification = std::variant<DarbouxCyclideClass, QuadricInS3Class,
                                    EuclideanTranslationalClass, CliffordTranslationalClass,
                                    PlanarClass>;

/// Decision procedure for an ABC surface contained in Im H.
Classification classify_r3(const QPoly2& a, const QPoly2& b, const QPoly2& c);

/// Decision procedure for an ABC surface contained in S^3.
Classification classify_s3(const QPoly2& a, const QPoly2& b, const QPoly2& c);

/// Ambient detection plus dispatch; accepts ABC and quotient specs.
Classification classify(const SurfaceSpec& spec);

} // namespace bicircle

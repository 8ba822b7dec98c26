#include "bicircle/error.hpp"

namespace bicircle {

const char* errc_name(errc c) {
    switch (c) {
        case errc::zero_division: return "ZeroDivision";
        case errc::not_separable: return "NotSeparable";
        case errc::degenerate_input: return "DegenerateInput";
        case errc::verification_failed: return "VerificationFailed";
        case errc::hypothesis_violated: return "HypothesisViolated";
        case errc::pole: return "PoleAt";
        case errc::invalid_curve: return "InvalidCurve";
        case errc::not_in_imh: return "NotInImH";
        case errc::line_case: return "LineCase";
        case errc::domain_violation: return "DomainViolation";
        case errc::center_pole: return "CenterPole";
        case errc::duplicate_points: return "DuplicatePoints";
        case errc::unsupported_shape: return "UnsupportedShape";
        case errc::bidegree_too_high: return "BidegreeTooHigh";
        case errc::internal_inconsistency: return "InternalInconsistency";
        case errc::identically_zero_determinant: return "IdenticallyZeroDeterminant";
        case errc::zero_restriction: return "ZeroRestriction";
        case errc::denominator_not_cleared: return "DenominatorNotCleared";
        case errc::pattern_mismatch: return "PatternMismatch";
        case errc::not_in_s3: return "NotInS3";
        case errc::norm_identity_fails: return "NormIdentityFails";
        case errc::ambient_neither: return "AmbientNeither";
        case errc::nonpolynomial_residue: return "NonpolynomialResidue";
        case errc::bidegree_violation: return "BidegreeViolation";
        case errc::identity_failure: return "IdentityFailure";
        case errc::collinear_samples: return "CollinearSamples";
        case errc::all_poles: return "AllPolesGrid";
        case errc::io_error: return "IoError";
    }
    return "UnknownError";
}

} // namespace bicircle

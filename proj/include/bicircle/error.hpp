#pragma once

#include <stdexcept>
#include <string>

namespace bicircle {

// Every failure mode of the library maps to one of these codes. The CLI
// serializes the code name verbatim, so scripts can match on it.
enum class errc {
    zero_division,
    not_separable,
    degenerate_input,
    verification_failed,
    hypothesis_violated,
    pole,
    invalid_curve,
    not_in_imh,
    line_case,
    domain_violation,
    center_pole,
    duplicate_points,
    unsupported_shape,
    bidegree_too_high,
    internal_inconsistency,
    identically_zero_determinant,
    zero_restriction,
    denominator_not_cleared,
    pattern_mismatch,
    not_in_s3,
    norm_identity_fails,
    ambient_neither,
    nonpolynomial_residue,
    bidegree_violation,
    identity_failure,
    collinear_samples,
    all_poles,
    io_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const { return code_; }
    const char* code_name() const { return errc_name(code_); }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw error(code, message);
}

} // namespace bicircle

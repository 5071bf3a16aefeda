#ifndef POLYMESH_ERRORS_HPP
#define POLYMESH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polymesh {

/// Failure conditions surfaced by the library. Every throwing operation
/// documents which of these it can raise; anything else is a programmer
/// error and asserts.
enum class Errc {
    zero_polynomial,
    endpoint_is_root,
    bad_interval,
    not_hyperbolic,
    degree_gap_too_large,
    degree_too_low,
    root_at_zero,
    mixed_signs,
    lambda_not_above_one,
    lambda_not_positive,
    formal_degree_mismatch,
    zero_gamma,
    sequence_too_short,
    prefix_too_short,
    not_multiplier_sequence_prefix,
    degree_mismatch,
    parse_error,
    invalid_config,
    refinement_budget_exceeded,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Error(Errc code, const std::string& what, long detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), detail_(detail) {}

    Errc code() const noexcept { return code_; }

    /// Context-dependent payload, e.g. the offending truncation index for
    /// not_multiplier_sequence_prefix or the byte offset of a parse error.
    long detail() const noexcept { return detail_; }

private:
    Errc code_;
    long detail_ = -1;
};

}  // namespace polymesh

#endif

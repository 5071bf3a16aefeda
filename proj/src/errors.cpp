#include "polymesh/errors.hpp"

namespace polymesh {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::zero_polynomial: return "ZeroPolynomial";
        case Errc::endpoint_is_root: return "EndpointIsRoot";
        case Errc::bad_interval: return "BadInterval";
        case Errc::not_hyperbolic: return "NotHyperbolic";
        case Errc::degree_gap_too_large: return "DegreeGapTooLarge";
        case Errc::degree_too_low: return "DegreeTooLow";
        case Errc::root_at_zero: return "RootAtZero";
        case Errc::mixed_signs: return "MixedSigns";
        case Errc::lambda_not_above_one: return "LambdaNotAboveOne";
        case Errc::lambda_not_positive: return "LambdaNotPositive";
        case Errc::formal_degree_mismatch: return "FormalDegreeMismatch";
        case Errc::zero_gamma: return "ZeroGamma";
        case Errc::sequence_too_short: return "SequenceTooShort";
        case Errc::prefix_too_short: return "PrefixTooShort";
        case Errc::not_multiplier_sequence_prefix: return "NotMultiplierSequencePrefix";
        case Errc::degree_mismatch: return "DegreeMismatch";
        case Errc::parse_error: return "ParseError";
        case Errc::invalid_config: return "InvalidConfig";
        case Errc::refinement_budget_exceeded: return "RefinementBudgetExceeded";
    }
    return "UnknownError";
}

}  // namespace polymesh

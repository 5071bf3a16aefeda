#ifndef POLYMESH_CAMPAIGN_HPP
#define POLYMESH_CAMPAIGN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polymesh/rational.hpp"

namespace polymesh {

/// One verification campaign per statement the library implements.
enum class TheoremId {
    riesz,              // mesh does not shrink under p - lambda p'
    const_coeff_mesh,   // ... nor under any hyperbolic-symbol operator
    schur_szego_lmesh,  // lmesh(P*Q) >= max(lmesh P, lmesh Q)
    theta_lmesh,        // lmesh(lambda p + x p') >= lmesh(p)
    lemma_i,            // interlacing pairs give all-hyperbolic pencils
    lemma_ii,           // P*Q hyperbolic for hyperbolic P, one-sign Q
    lemma_iii,          // dilation interlaces exactly below the lmesh
    identity_leibniz,   // (pq)' = p'q + pq', bit-exact
    identity_theta_rep, // theta distributes over * and has a composition form
    cor_inf,            // truncation-level lmesh bound for sequence products
    polya_schur_iv,     // bounded same-sign check on binomial transforms
};

const char* theorem_id_name(TheoremId id);
std::optional<TheoremId> theorem_id_from_string(const std::string& name);
std::vector<TheoremId> all_theorem_ids();

struct TrialConfig {
    TheoremId theorem_id = TheoremId::identity_leibniz;
    int trials = 100;
    int degree_min = 2;
    int degree_max = 8;
    std::uint64_t seed = 1;
    Rational tol = Rational(1, 1000000000);
};

/// One violated trial, with inputs serialized in the library text formats so
/// the failure can be replayed standalone.
struct TrialFailure {
    int trial = 0;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::pair<std::string, std::string>> observed;
};

struct TrialReport {
    TrialConfig config;
    int passed = 0;
    int failed = 0;
    std::vector<TrialFailure> failures;
    double wall_time_seconds = 0.0;
};

/// Runs the campaign: trials independent checks, per-trial seed derived by
/// trial_seed(config.seed, index). Deterministic up to wall time.
/// Throws Error(invalid_config) for out-of-range configs.
TrialReport run_campaign(const TrialConfig& config);

/// Machine-readable report (stable key order, so identical campaigns give
/// byte-identical output except for wall_time_seconds).
std::string report_to_json(const TrialReport& report, int indent = 2);

/// One-paragraph human summary.
std::string report_summary(const TrialReport& report);

}  // namespace polymesh

#endif

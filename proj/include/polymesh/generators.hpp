#ifndef POLYMESH_GENERATORS_HPP
#define POLYMESH_GENERATORS_HPP

#include <cstdint>

#include "polymesh/poly.hpp"

namespace polymesh {

/// SplitMix64 finalizer; the hash behind per-trial seed derivation.
std::uint64_t mix64(std::uint64_t x);

/// Seed for one trial of a campaign: a split hash of (master seed, index),
/// so trials are independent and reorderable without changing results.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

/// Deterministic generator with platform-independent output (standard
/// library distributions are implementation-defined, so sampling is done by
/// hand).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();

    /// Uniform in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n);

    /// Uniform integer in [lo, hi] inclusive.
    long range(long lo, long hi);

    /// True with probability num/den.
    bool chance(unsigned num, unsigned den);

    /// Rational lo + (hi - lo) * j/den for uniform j in [0, den]; a cheap
    /// uniform-ish rational in [lo, hi] with denominator controlled by den.
    Rational rational_in(const Rational& lo, const Rational& hi, unsigned den = 64);

    /// Same, but never returns zero (requires lo < 0 < hi or 0 outside
    /// [lo, hi]).
    Rational nonzero_rational_in(const Rational& lo, const Rational& hi, unsigned den = 64);

private:
    std::uint64_t state_;
};

enum class RootSign { Negative, Positive };

/// lc * prod (x -+ r_i) with rational r_i > 0 whose consecutive magnitude
/// ratios lie in [1 + 1/16, ratio_bound]; all roots are distinct and of the
/// requested sign, so the output satisfies the one-sign hypothesis by
/// construction. Deterministic in its arguments.
Poly gen_same_sign(int degree, RootSign sign, const Rational& ratio_bound, std::uint64_t seed);

/// lc * prod (x - r_i) with rational roots in [-spread, spread];
/// deterministic. With probability 1/8 a repeated root is injected to
/// exercise multiplicity handling.
Poly gen_hyperbolic(int degree, const Rational& spread, std::uint64_t seed);

/// Diagonal coefficients gamma_j = coeff_j(Q)/C(k,j) of a generated one-sign
/// polynomial Q of degree k: a finite multiplier sequence by construction.
std::vector<Rational> gen_finite_ms(int k, const Rational& ratio_bound, std::uint64_t seed);

}  // namespace polymesh

#endif

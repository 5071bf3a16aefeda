#include "polymesh/generators.hpp"

#include <cassert>

#include "polymesh/errors.hpp"

namespace polymesh {

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master + 0x9E3779B97F4A7C15ull * (index + 1));
}

std::uint64_t Rng::next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix64(state_);
}

std::uint64_t Rng::below(std::uint64_t n) {
    assert(n >= 1);
    return next_u64() % n;
}

long Rng::range(long lo, long hi) {
    assert(lo <= hi);
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool Rng::chance(unsigned num, unsigned den) { return below(den) < num; }

Rational Rng::rational_in(const Rational& lo, const Rational& hi, unsigned den) {
    Rational step = (hi - lo) / Rational(den);
    return lo + step * Rational(static_cast<long>(below(den + 1)));
}

Rational Rng::nonzero_rational_in(const Rational& lo, const Rational& hi, unsigned den) {
    for (int i = 0; i < 64; ++i) {
        Rational r = rational_in(lo, hi, den);
        if (r != 0) return r;
    }
    return hi;  // unreachable for sane bounds
}

Poly gen_same_sign(int degree, RootSign root_sign, const Rational& ratio_bound,
                   std::uint64_t seed) {
    assert(degree >= 1);
    assert(ratio_bound > 1);
    Rng rng(seed);
    Rational ratio_floor(17, 16);
    Rational lo_ratio = ratio_bound > ratio_floor ? ratio_floor : ratio_bound;

    std::vector<Rational> roots;
    roots.reserve(static_cast<std::size_t>(degree));
    Rational magnitude = rng.rational_in(Rational(1, 4), Rational(4), 32);
    for (int i = 0; i < degree; ++i) {
        roots.push_back(root_sign == RootSign::Negative ? -magnitude : magnitude);
        magnitude *= rng.rational_in(lo_ratio, ratio_bound, 32);
    }
    Rational lc = rng.nonzero_rational_in(Rational(-3), Rational(3), 12);
    return Poly::from_roots(roots, lc);
}

Poly gen_hyperbolic(int degree, const Rational& spread, std::uint64_t seed) {
    assert(degree >= 1);
    Rng rng(seed);
    std::vector<Rational> roots;
    roots.reserve(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) roots.push_back(rng.rational_in(-spread, spread, 48));
    if (degree >= 2 && rng.chance(1, 8)) {
        std::size_t from = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(degree)));
        std::size_t to = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(degree)));
        if (from != to) roots[to] = roots[from];
    }
    Rational lc = rng.nonzero_rational_in(Rational(-3), Rational(3), 12);
    return Poly::from_roots(roots, lc);
}

std::vector<Rational> gen_finite_ms(int k, const Rational& ratio_bound, std::uint64_t seed) {
    assert(k >= 1);
    Rng rng(seed);
    RootSign root_sign = rng.chance(1, 2) ? RootSign::Negative : RootSign::Positive;
    Poly q = gen_same_sign(k, root_sign, ratio_bound, mix64(seed));
    std::vector<Rational> gammas(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j)
        gammas[static_cast<std::size_t>(j)] =
            q.coeff(j) / Rational(binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)));
    return gammas;
}

}  // namespace polymesh

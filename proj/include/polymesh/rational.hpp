#ifndef POLYMESH_RATIONAL_HPP
#define POLYMESH_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace polymesh {

/// Exact arbitrary-precision rational scalar. GMP keeps values canonical
/// (lowest terms, positive denominator), which is exactly the invariant the
/// decision procedures rely on. No floating point anywhere in this layer.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Largest integer <= q.
Integer rat_floor(const Rational& q);

/// Smallest integer >= q.
Integer rat_ceil(const Rational& q);

/// q^e for e >= 0 (0^0 = 1).
Rational rat_pow(const Rational& q, unsigned long e);

/// Binomial coefficient C(n, k) as an exact integer, 0 <= k <= n.
Integer binomial(unsigned n, unsigned k);

/// Parses a rational literal "n" or "n/d" (optional sign, d > 0 after
/// normalization). Throws Error(parse_error) on malformed input.
Rational rat_from_string(const std::string& text);

/// Canonical "n" or "n/d" form; inverse of rat_from_string.
std::string rat_to_string(const Rational& q);

/// The unique fraction of smallest denominator (ties broken by smallest
/// numerator magnitude) strictly inside the open interval (lo, hi).
/// Requires lo < hi. Used to certify rational roots: once a bracketing
/// interval is tight enough, the root, if rational, is the simplest
/// fraction it contains.
Rational simplest_in_open(const Rational& lo, const Rational& hi);

/// Number of bits needed to write floor(1/q) for 0 < q <= 1, at least 1.
/// Scales refinement budgets with the requested tolerance.
unsigned long tolerance_bits(const Rational& tol);

double to_double(const Rational& q);

}  // namespace polymesh

#endif

#ifndef POLYMESH_TEXTIO_HPP
#define POLYMESH_TEXTIO_HPP

#include <string>
#include <vector>

#include "polymesh/poly.hpp"

namespace polymesh {

/// Parses the polynomial text format, whitespace-insensitive:
///   coeffs:c0,c1,...,ck     ascending coefficients, rational literals n or n/d
///   roots:[lc;]r1,...,rk    lc * prod (x - r_i), leading coefficient optional
/// Trailing zero coefficients in the coeffs form widen the formal degree.
/// Throws Error(parse_error) with the byte offset in detail().
Poly parse_poly(const std::string& text);

/// Canonical coeffs form, inverse of parse_poly including the formal degree.
std::string format_poly(const Poly& p);

/// Human-oriented rendering like "x^2 - 3x + 1".
std::string pretty_poly(const Poly& p);

/// Parses "seq:a0,a1,...,aK" into the raw rational entries.
std::vector<Rational> parse_seq(const std::string& text);

std::string format_seq(const std::vector<Rational>& alphas);

}  // namespace polymesh

#endif

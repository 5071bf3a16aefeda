#ifndef POLYMESH_POLY_HPP
#define POLYMESH_POLY_HPP

#include <utility>
#include <vector>

#include "polymesh/rational.hpp"

namespace polymesh {

/// Dense univariate polynomial over the exact rationals, immutable after
/// construction.
///
/// Coefficients are stored in ascending degree order with trailing zeros
/// trimmed; the effective degree is the index of the last nonzero
/// coefficient. Separately, formal_degree() >= degree() records the ambient
/// space R_k[x] the polynomial lives in. The distinction matters because the
/// binomially weighted composition of two polynomials is defined relative to
/// a fixed k and the effective degree can drop (a slot with zero coefficient
/// still participates). The zero polynomial has an empty coefficient list
/// and formal degree 0.
class Poly {
public:
    Poly() = default;

    explicit Poly(Rational constant);

    /// Coefficients in ascending order; trailing zeros widen the formal
    /// degree instead of being discarded, so from_coeffs({1,3,2,0}) has
    /// effective degree 2 and formal degree 3.
    static Poly from_coeffs(std::vector<Rational> coeffs);

    /// c * x^k.
    static Poly monomial(unsigned k, Rational c);

    /// lc * prod (x - r_i), expanded exactly.
    static Poly from_roots(const std::vector<Rational>& roots, const Rational& lc = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }

    /// Effective degree. Throws Error(zero_polynomial) for the zero
    /// polynomial; callers that can handle 0 should test is_zero() first.
    int degree() const;

    int formal_degree() const { return formal_degree_; }

    /// Same polynomial viewed in R_k[x]; k must be >= the effective degree.
    Poly with_formal_degree(int k) const;

    /// Coefficient of x^j, zero beyond the stored length.
    const Rational& coeff(int j) const;

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    const Rational& leading_coeff() const;

    /// 1/lc * p; requires p nonzero.
    Poly monic() const;

    Poly negated() const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.coeffs_ == b.coeffs_;  // mathematical equality; formal degree is metadata
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    std::vector<Rational> coeffs_;
    int formal_degree_ = 0;

    void trim();
};

/// c*p + d*q, exact; result formal degree is the max of the operands'.
Poly add_scaled(const Poly& p, const Poly& q, const Rational& c, const Rational& d);

/// Exact product; result formal degree is the sum of the operands'.
Poly multiply(const Poly& p, const Poly& q);

/// Formal derivative; formal degree decrements (floor 0).
Poly derivative(const Poly& p);

/// p(x + lambda), expanded exactly; formal degree preserved.
Poly shift(const Poly& p, const Rational& lambda);

/// p(lambda * x): coefficient j picks up lambda^j; formal degree preserved.
Poly dilate(const Poly& p, const Rational& lambda);

/// Exact Horner evaluation.
Rational eval(const Poly& p, const Rational& x);

/// Euclidean division over Q: p = q*d + r with deg r < deg d.
/// Requires d nonzero.
std::pair<Poly, Poly> divmod(const Poly& p, const Poly& d);

/// Quotient of an exact division; asserts the remainder is zero.
Poly exact_divide(const Poly& p, const Poly& d);

/// Monic gcd over Q[x], computed on primitive integer images with
/// content normalization to keep intermediate coefficients small.
/// gcd(0,0) is an error; gcd(p,0) = monic p.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Scales p by the positive rational that makes its coefficients coprime
/// integers. Positive scaling preserves every sign evaluation, which is what
/// the Sturm machinery needs.
Poly primitive_integer_image(const Poly& p);

/// Yun decomposition: pairwise-coprime monic square-free factors with their
/// multiplicities, product over factor^multiplicity = p up to a nonzero
/// constant. Constants decompose to the empty list. Throws on p = 0.
std::vector<std::pair<Poly, int>> square_free_decompose(const Poly& p);

/// Product of the distinct monic irreducible-over-R factors (the radical);
/// constants map to 1.
Poly square_free_part(const Poly& p);

}  // namespace polymesh

#endif

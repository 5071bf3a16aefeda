#ifndef POLYMESH_STURM_HPP
#define POLYMESH_STURM_HPP

#include <vector>

#include "polymesh/poly.hpp"

namespace polymesh {

/// Sign classification of the real roots of a polynomial.
enum class SignClass { AllNegative, AllPositive, Mixed, HasZeroRoot, NoRealRoots };

const char* sign_class_name(SignClass c);

/// Sturm chain: the polynomial, its derivative, then negated Euclidean
/// remainders down to a constant. Each element is stored as a primitive
/// integer image (a positive rescaling), which leaves all sign evaluations
/// unchanged while keeping coefficients small. The sign-variation difference
/// between two non-root points a < b counts the distinct real roots in
/// (a, b].
class SturmChain {
public:
    /// Builds the chain of p itself when square_free_input is true (caller
    /// certifies p square-free), otherwise of the square-free part of p.
    explicit SturmChain(const Poly& p, bool square_free_input = false);

    const Poly& base() const { return chain_.front(); }
    const std::vector<Poly>& chain() const { return chain_; }

    /// Number of sign variations in the chain evaluated at x.
    int variations_at(const Rational& x) const;

    /// Distinct real roots of the (square-free) base in (a, b].
    /// Requires a < b and base(a), base(b) nonzero.
    int count_roots(const Rational& a, const Rational& b) const;

private:
    std::vector<Poly> chain_;
};

/// Strict root bound: every complex root z of p satisfies |z| < bound.
/// Cauchy's bound 1 + max |c_i| / |c_k|, as an exact rational.
/// Requires p nonzero and nonconstant.
Rational cauchy_root_bound(const Poly& p);

/// Number of distinct real roots of p in (a, b], by the sign-variation
/// difference of the Sturm chain of p's square-free part.
/// Throws: zero_polynomial, bad_interval (a >= b), endpoint_is_root.
int sturm_count(const Poly& p, const Rational& a, const Rational& b);

/// True iff every complex root of p is real, decided exactly: the
/// square-free part of degree m must have m distinct real roots inside the
/// Cauchy bound. Nonzero constants are hyperbolic. Throws zero_polynomial.
bool is_hyperbolic(const Poly& p);

/// Classifies the real roots of p by sign. HasZeroRoot wins whenever p(0)=0;
/// otherwise roots are counted on each side of zero. Constants and
/// root-free polynomials report NoRealRoots. Throws zero_polynomial.
SignClass root_sign_class(const Poly& p);

}  // namespace polymesh

#endif

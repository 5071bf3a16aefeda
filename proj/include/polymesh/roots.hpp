#ifndef POLYMESH_ROOTS_HPP
#define POLYMESH_ROOTS_HPP

#include <utility>
#include <vector>

#include "polymesh/poly.hpp"
#include "polymesh/sturm.hpp"

namespace polymesh {

/// One distinct real root, certified. Either lo < hi and the half-open
/// interval (lo, hi] contains exactly one distinct root of the target, or
/// lo == hi and the root is that rational, found exactly. Interval endpoints
/// are never roots.
struct IsolatingInterval {
    Rational lo;
    Rational hi;
    int multiplicity = 1;

    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
};

/// All real roots of a polynomial: disjoint isolating intervals in
/// increasing position order. The polynomial is hyperbolic exactly when
/// total_with_multiplicity == degree.
struct RootProfile {
    std::vector<IsolatingInterval> intervals;
    int total_with_multiplicity = 0;
    int degree = 0;
};

/// Bisection-based root isolation over the Cauchy bound, with multiplicities
/// taken from the square-free decomposition (never from interval
/// clustering). Holds the Sturm chain so intervals can be refined
/// incrementally; every step is deterministic for a fixed input.
///
/// Each bisection round probes the simplest rational inside each interval,
/// so rational roots collapse to exact points once the interval is tight
/// enough (width below 1/den^2 suffices for a root with denominator den).
class RootIsolator {
public:
    /// Throws zero_polynomial. Constants yield an empty root set.
    explicit RootIsolator(const Poly& p);

    /// Splits until every distinct real root has its own interval.
    void isolate();

    /// One bisection step on every non-point interval. Returns false when
    /// there is nothing left to refine.
    bool refine_round();

    /// Refines until every interval has width <= width; throws
    /// refinement_budget_exceeded after budget_rounds rounds.
    void refine_to(const Rational& width, unsigned long budget_rounds);

    const std::vector<IsolatingInterval>& intervals() const { return intervals_; }
    bool all_points() const;
    int max_multiplicity() const { return max_multiplicity_; }
    int degree() const { return degree_; }

    RootProfile profile() const;

private:
    Poly sf_;
    SturmChain chain_;
    std::vector<std::pair<Poly, int>> factors_;
    std::vector<IsolatingInterval> intervals_;
    int degree_ = 0;
    int max_multiplicity_ = 1;
    bool isolated_ = false;

    int multiplicity_of(const IsolatingInterval& iv) const;
    IsolatingInterval finish(Rational lo, Rational hi) const;
    std::vector<std::pair<Rational, Rational>> split_at_root(const Rational& lo,
                                                             const Rational& hi,
                                                             const Rational& root,
                                                             std::vector<IsolatingInterval>& done);
};

/// Disjoint isolating intervals of width <= width covering all distinct real
/// roots of p, with exact multiplicities. Requires p nonzero (zero_polynomial),
/// nonconstant (degree_too_low) and width > 0 (invalid_config).
RootProfile isolate_roots(const Poly& p, const Rational& width);

}  // namespace polymesh

#endif

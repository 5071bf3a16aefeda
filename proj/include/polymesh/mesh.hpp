#ifndef POLYMESH_MESH_HPP
#define POLYMESH_MESH_HPP

#include "polymesh/poly.hpp"
#include "polymesh/roots.hpp"

namespace polymesh {

/// Certified rational interval [lo, hi] containing the true mesh or
/// logarithmic mesh; exact means lo == hi.
struct MeshEnclosure {
    Rational lo;
    Rational hi;
    bool exact = false;

    Rational width() const { return hi - lo; }
};

enum class InterlacingKind { StrictInterlacing, NonStrictInterlacing, NotInterlacing };

const char* interlacing_kind_name(InterlacingKind k);

struct InterlacingVerdict {
    InterlacingKind kind;
    int common_root_count = 0;  // distinct roots shared by both polynomials
};

/// Exact interlacing decision for two hyperbolic polynomials whose effective
/// degrees differ by at most one.
///
/// The root multisets (with multiplicity) must merge into an alternating
/// sequence: strictly when all roots are simple and none are shared,
/// non-strictly when ties are allowed, with a shared root counted as
/// belonging to both sequences. Decided by isolating the distinct roots of
/// the square-free part of f*g and reading multiplicities off the
/// square-free decompositions of f and g, so the verdict is exact.
/// Throws: zero_polynomial, not_hyperbolic, degree_gap_too_large.
InterlacingVerdict interlace(const Poly& f, const Poly& g);

/// Encloses the mesh (minimal distance between real roots) of a hyperbolic
/// polynomial of degree >= 2 within width <= tol. A multiple root gives
/// exact 0; all-rational roots give an exact value.
/// Throws: zero_polynomial, degree_too_low, not_hyperbolic, invalid_config,
/// refinement_budget_exceeded.
MeshEnclosure mesh_enclosure(const Poly& p, const Rational& tol);

/// Encloses the logarithmic mesh (minimal ratio of consecutive root
/// magnitudes) of a hyperbolic polynomial of degree >= 2 whose roots are all
/// nonzero and of one sign. A multiple root gives exact 1.
/// Throws: zero_polynomial, degree_too_low, not_hyperbolic, root_at_zero,
/// mixed_signs, invalid_config, refinement_budget_exceeded.
MeshEnclosure lmesh_enclosure(const Poly& p, const Rational& tol);

/// Exactly decides lambda < mesh(p), via the strict-interlacing verdict of p
/// against p(x + lambda). At lambda == mesh(p) two roots of the pair
/// coincide, the verdict is non-strict and the result is false.
/// Throws: zero_polynomial, degree_too_low, not_hyperbolic,
/// lambda_not_positive.
bool mesh_exceeds(const Poly& p, const Rational& lambda);

/// Exactly decides lambda < lmesh(p), via the strict-interlacing verdict of
/// p against p(lambda * x); for simple-rooted p this is precisely the
/// dilation interlacing criterion. Boundary lambda == lmesh(p) is false.
/// Throws: zero_polynomial, not_hyperbolic, root_at_zero, mixed_signs,
/// lambda_not_above_one.
bool lmesh_exceeds(const Poly& p, const Rational& lambda);

}  // namespace polymesh

#endif

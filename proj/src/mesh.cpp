#include "polymesh/mesh.hpp"

#include <algorithm>
#include <cassert>

#include "polymesh/errors.hpp"
#include "polymesh/sturm.hpp"

namespace polymesh {

const char* interlacing_kind_name(InterlacingKind k) {
    switch (k) {
        case InterlacingKind::StrictInterlacing: return "StrictInterlacing";
        case InterlacingKind::NonStrictInterlacing: return "NonStrictInterlacing";
        case InterlacingKind::NotInterlacing: return "NotInterlacing";
    }
    return "?";
}

namespace {

// Does a0 ? b0 ? a1 ? b1 ... hold with ? = (<= or <)? Requires
// |a| == |b| or |a| == |b| + 1.
bool interleaves_from(const std::vector<int>& a, const std::vector<int>& b, bool strict) {
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (strict ? !(a[i] < b[i]) : !(a[i] <= b[i])) return false;
        if (i + 1 < a.size() && (strict ? !(b[i] < a[i + 1]) : !(b[i] <= a[i + 1]))) return false;
    }
    return true;
}

bool interleave_either_way(const std::vector<int>& a, const std::vector<int>& b, bool strict) {
    if (a.size() == b.size())
        return interleaves_from(a, b, strict) || interleaves_from(b, a, strict);
    if (a.size() == b.size() + 1) return interleaves_from(a, b, strict);
    if (b.size() == a.size() + 1) return interleaves_from(b, a, strict);
    return false;
}

// Multiplicity of the one distinct root inside iv in the given square-free
// decomposition (0 when the root is not a root of that polynomial at all).
int multiplicity_in(const std::vector<std::pair<Poly, int>>& factors,
                    const IsolatingInterval& iv) {
    for (const auto& [factor, mult] : factors) {
        if (iv.is_point()) {
            if (eval(factor, iv.lo) == 0) return mult;
        } else if (sign(eval(factor, iv.lo)) * sign(eval(factor, iv.hi)) < 0) {
            return mult;
        }
    }
    return 0;
}

void require_nonzero_hyperbolic(const Poly& p, const char* who) {
    if (p.is_zero()) throw Error(Errc::zero_polynomial, who);
    if (!is_hyperbolic(p)) throw Error(Errc::not_hyperbolic, who);
}

}  // namespace

InterlacingVerdict interlace(const Poly& f, const Poly& g) {
    require_nonzero_hyperbolic(f, "interlace: f");
    require_nonzero_hyperbolic(g, "interlace: g");
    int df = f.degree(), dg = g.degree();
    if (df - dg > 1 || dg - df > 1)
        throw Error(Errc::degree_gap_too_large, "interlace: degrees differ by more than one");

    if (df == 0 && dg == 0) return {InterlacingKind::StrictInterlacing, 0};

    auto factors_f = square_free_decompose(f);
    auto factors_g = square_free_decompose(g);

    RootIsolator iso(multiply(f, g));
    iso.isolate();

    // Index the merged distinct roots in increasing order; the multisets are
    // index lists with repetition, so alternation reduces to integer
    // comparisons.
    std::vector<int> roots_f, roots_g;
    int common = 0;
    int index = 0;
    for (const IsolatingInterval& iv : iso.intervals()) {
        int mf = multiplicity_in(factors_f, iv);
        int mg = multiplicity_in(factors_g, iv);
        roots_f.insert(roots_f.end(), static_cast<std::size_t>(mf), index);
        roots_g.insert(roots_g.end(), static_cast<std::size_t>(mg), index);
        if (mf > 0 && mg > 0) ++common;
        ++index;
    }
    assert(static_cast<int>(roots_f.size()) == df && static_cast<int>(roots_g.size()) == dg);

    InterlacingVerdict verdict{InterlacingKind::NotInterlacing, common};
    if (interleave_either_way(roots_f, roots_g, /*strict=*/true))
        verdict.kind = InterlacingKind::StrictInterlacing;
    else if (interleave_either_way(roots_f, roots_g, /*strict=*/false))
        verdict.kind = InterlacingKind::NonStrictInterlacing;
    return verdict;
}

namespace {

unsigned long refinement_budget(int degree, const Rational& tol) {
    return 10ul * static_cast<unsigned long>(std::max(degree, 1)) * tolerance_bits(tol);
}

// Enclosure of the minimum of per-gap enclosures [lo_i, hi_i].
MeshEnclosure min_enclosure(const std::vector<std::pair<Rational, Rational>>& gaps) {
    MeshEnclosure enc{gaps.front().first, gaps.front().second, false};
    for (const auto& [glo, ghi] : gaps) {
        if (glo < enc.lo) enc.lo = glo;
        if (ghi < enc.hi) enc.hi = ghi;
    }
    enc.exact = enc.lo == enc.hi;
    return enc;
}

}  // namespace

MeshEnclosure mesh_enclosure(const Poly& p, const Rational& tol) {
    if (p.is_zero()) throw Error(Errc::zero_polynomial, "mesh_enclosure(0)");
    if (p.degree() < 2) throw Error(Errc::degree_too_low, "mesh needs degree >= 2");
    if (tol <= 0) throw Error(Errc::invalid_config, "tolerance must be positive");
    if (!is_hyperbolic(p)) throw Error(Errc::not_hyperbolic, "mesh_enclosure");

    RootIsolator iso(p);
    if (iso.max_multiplicity() >= 2) return {Rational(0), Rational(0), true};

    iso.isolate();
    assert(iso.intervals().size() >= 2);
    unsigned long budget = refinement_budget(p.degree(), tol);
    for (unsigned long round = 0;; ++round) {
        const auto& ivs = iso.intervals();
        std::vector<std::pair<Rational, Rational>> gaps;
        gaps.reserve(ivs.size() - 1);
        for (std::size_t i = 0; i + 1 < ivs.size(); ++i) {
            Rational glo = ivs[i + 1].lo - ivs[i].hi;
            if (glo < 0) glo = 0;
            gaps.emplace_back(std::move(glo), ivs[i + 1].hi - ivs[i].lo);
        }
        MeshEnclosure enc = min_enclosure(gaps);
        if (iso.all_points()) {
            enc.exact = true;
            return enc;
        }
        if (enc.width() <= tol) return enc;
        if (round >= budget)
            throw Error(Errc::refinement_budget_exceeded, "mesh refinement budget");
        iso.refine_round();
    }
}

MeshEnclosure lmesh_enclosure(const Poly& p, const Rational& tol) {
    if (p.is_zero()) throw Error(Errc::zero_polynomial, "lmesh_enclosure(0)");
    if (p.degree() < 2) throw Error(Errc::degree_too_low, "lmesh needs degree >= 2");
    if (tol <= 0) throw Error(Errc::invalid_config, "tolerance must be positive");
    if (!is_hyperbolic(p)) throw Error(Errc::not_hyperbolic, "lmesh_enclosure");
    SignClass cls = root_sign_class(p);
    if (cls == SignClass::HasZeroRoot) throw Error(Errc::root_at_zero, "lmesh_enclosure");
    if (cls == SignClass::Mixed) throw Error(Errc::mixed_signs, "lmesh_enclosure");
    assert(cls == SignClass::AllNegative || cls == SignClass::AllPositive);

    RootIsolator iso(p);
    if (iso.max_multiplicity() >= 2) return {Rational(1), Rational(1), true};

    iso.isolate();
    assert(iso.intervals().size() >= 2);
    unsigned long budget = refinement_budget(p.degree(), tol);
    bool negative = cls == SignClass::AllNegative;
    for (unsigned long round = 0;; ++round) {
        const auto& ivs = iso.intervals();

        // Magnitude intervals in increasing magnitude order; for negative
        // roots that reverses the positional order.
        std::vector<std::pair<Rational, Rational>> mags;
        mags.reserve(ivs.size());
        bool separated = true;
        for (const IsolatingInterval& iv : ivs) {
            if (negative ? !(iv.hi < 0) : !(iv.lo > 0)) {
                separated = false;  // interval still touches zero; refine on
                break;
            }
            if (negative)
                mags.emplace_back(-iv.hi, -iv.lo);
            else
                mags.emplace_back(iv.lo, iv.hi);
        }
        if (separated) {
            if (negative) std::reverse(mags.begin(), mags.end());
            std::vector<std::pair<Rational, Rational>> ratios;
            ratios.reserve(mags.size() - 1);
            for (std::size_t i = 0; i + 1 < mags.size(); ++i) {
                Rational rlo = mags[i + 1].first / mags[i].second;
                if (rlo < 1) rlo = 1;
                ratios.emplace_back(std::move(rlo), mags[i + 1].second / mags[i].first);
            }
            MeshEnclosure enc = min_enclosure(ratios);
            if (iso.all_points()) {
                enc.exact = true;
                return enc;
            }
            if (enc.width() <= tol) return enc;
        }
        if (round >= budget)
            throw Error(Errc::refinement_budget_exceeded, "lmesh refinement budget");
        iso.refine_round();
    }
}

bool mesh_exceeds(const Poly& p, const Rational& lambda) {
    if (p.is_zero()) throw Error(Errc::zero_polynomial, "mesh_exceeds(0)");
    if (p.degree() < 2) throw Error(Errc::degree_too_low, "mesh_exceeds needs degree >= 2");
    if (!is_hyperbolic(p)) throw Error(Errc::not_hyperbolic, "mesh_exceeds");
    if (lambda <= 0) throw Error(Errc::lambda_not_positive, "mesh_exceeds needs lambda > 0");
    return interlace(p, shift(p, lambda)).kind == InterlacingKind::StrictInterlacing;
}

bool lmesh_exceeds(const Poly& p, const Rational& lambda) {
    if (p.is_zero()) throw Error(Errc::zero_polynomial, "lmesh_exceeds(0)");
    if (!is_hyperbolic(p)) throw Error(Errc::not_hyperbolic, "lmesh_exceeds");
    SignClass cls = root_sign_class(p);
    if (cls == SignClass::HasZeroRoot) throw Error(Errc::root_at_zero, "lmesh_exceeds");
    if (cls == SignClass::Mixed) throw Error(Errc::mixed_signs, "lmesh_exceeds");
    if (lambda <= 1) throw Error(Errc::lambda_not_above_one, "lmesh_exceeds needs lambda > 1");
    return interlace(p, dilate(p, lambda)).kind == InterlacingKind::StrictInterlacing;
}

}  // namespace polymesh

#include "polymesh/roots.hpp"

#include <algorithm>
#include <cassert>

#include "polymesh/errors.hpp"

namespace polymesh {

namespace {
constexpr unsigned long kIsolationSplitBudget = 1u << 20;
constexpr int kPointSplitHalvings = 4096;
}  // namespace

RootIsolator::RootIsolator(const Poly& p)
    : sf_(square_free_part(p)), chain_(sf_, /*square_free_input=*/true) {
    degree_ = p.degree();  // throws on zero
    factors_ = square_free_decompose(p);
    for (const auto& [factor, mult] : factors_)
        max_multiplicity_ = std::max(max_multiplicity_, mult);
}

int RootIsolator::multiplicity_of(const IsolatingInterval& iv) const {
    if (factors_.size() == 1) return factors_.front().second;
    for (const auto& [factor, mult] : factors_) {
        if (iv.is_point()) {
            if (eval(factor, iv.lo) == 0) return mult;
        } else if (sign(eval(factor, iv.lo)) * sign(eval(factor, iv.hi)) < 0) {
            return mult;
        }
    }
    assert(false && "isolating interval matches no square-free factor");
    return 1;
}

IsolatingInterval RootIsolator::finish(Rational lo, Rational hi) const {
    IsolatingInterval iv{std::move(lo), std::move(hi), 1};
    iv.multiplicity = multiplicity_of(iv);
    return iv;
}

// Splits (lo, hi], known to contain `root` exactly, into the point plus the
// flanking segments, shrinking the guard offset until the point is the only
// root it cuts off. The initial offset follows the fixed nudge scheme
// 1/(2 * den * (degree+1)) so runs stay deterministic.
std::vector<std::pair<Rational, Rational>> RootIsolator::split_at_root(
    const Rational& lo, const Rational& hi, const Rational& root,
    std::vector<IsolatingInterval>& done) {
    Rational delta = std::min(Rational(root - lo), Rational(hi - root)) / 2;
    Rational nudge(Integer(1), 2 * Integer(root.get_den()) * (sf_.degree() + 1));
    nudge.canonicalize();
    if (nudge < delta) delta = nudge;
    for (int guard = 0;; ++guard) {
        assert(guard < kPointSplitHalvings && "point split failed to separate");
        Rational a = root - delta, b = root + delta;
        if (eval(sf_, a) != 0 && eval(sf_, b) != 0 && chain_.count_roots(a, b) == 1) break;
        delta /= 2;
    }
    done.push_back(finish(root, root));
    std::vector<std::pair<Rational, Rational>> segments;
    if (lo < root - delta) segments.emplace_back(lo, root - delta);
    if (root + delta < hi) segments.emplace_back(root + delta, hi);
    return segments;
}

void RootIsolator::isolate() {
    if (isolated_) return;
    isolated_ = true;
    if (sf_.degree() == 0) return;

    Rational bound = cauchy_root_bound(sf_);
    std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
    std::vector<IsolatingInterval> done;
    unsigned long splits = 0;

    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        int count = chain_.count_roots(lo, hi);
        if (count == 0) continue;
        if (count == 1) {
            done.push_back(finish(lo, hi));
            continue;
        }
        if (++splits > kIsolationSplitBudget)
            throw Error(Errc::refinement_budget_exceeded, "root isolation split budget");

        // Probing the simplest rational first catches exact roots early.
        Rational probe = simplest_in_open(lo, hi);
        if (eval(sf_, probe) == 0) {
            for (auto& seg : split_at_root(lo, hi, probe, done)) work.push_back(std::move(seg));
            continue;
        }
        Rational mid = (lo + hi) / 2;
        if (eval(sf_, mid) == 0) {
            for (auto& seg : split_at_root(lo, hi, mid, done)) work.push_back(std::move(seg));
            continue;
        }
        work.emplace_back(lo, mid);
        work.emplace_back(mid, hi);
    }

    std::sort(done.begin(), done.end(),
              [](const IsolatingInterval& a, const IsolatingInterval& b) {
                  return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
              });
    intervals_ = std::move(done);
}

bool RootIsolator::refine_round() {
    isolate();
    bool refined = false;
    for (IsolatingInterval& iv : intervals_) {
        if (iv.is_point()) continue;
        refined = true;
        // The interval holds exactly one simple root of sf_, so the sign of
        // sf_ flips across it and a sign test steers the bisection.
        Rational probe = simplest_in_open(iv.lo, iv.hi);
        if (eval(sf_, probe) == 0) {
            iv.lo = probe;
            iv.hi = probe;
            continue;
        }
        Rational mid = (iv.lo + iv.hi) / 2;
        int s_mid = sign(eval(sf_, mid));
        if (s_mid == 0) {
            iv.lo = mid;
            iv.hi = mid;
            continue;
        }
        if (s_mid == sign(eval(sf_, iv.lo)))
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return refined;
}

void RootIsolator::refine_to(const Rational& width, unsigned long budget_rounds) {
    isolate();
    for (unsigned long round = 0;; ++round) {
        bool wide = false;
        for (const IsolatingInterval& iv : intervals_)
            if (!iv.is_point() && iv.width() > width) {
                wide = true;
                break;
            }
        if (!wide) return;
        if (round >= budget_rounds)
            throw Error(Errc::refinement_budget_exceeded, "interval refinement budget");
        refine_round();
    }
}

bool RootIsolator::all_points() const {
    for (const IsolatingInterval& iv : intervals_)
        if (!iv.is_point()) return false;
    return true;
}

RootProfile RootIsolator::profile() const {
    RootProfile rp;
    rp.intervals = intervals_;
    rp.degree = degree_;
    for (const IsolatingInterval& iv : intervals_) rp.total_with_multiplicity += iv.multiplicity;
    return rp;
}

RootProfile isolate_roots(const Poly& p, const Rational& width) {
    if (p.is_zero()) throw Error(Errc::zero_polynomial, "isolate_roots(0)");
    if (p.degree() == 0) throw Error(Errc::degree_too_low, "isolate_roots of a constant");
    if (width <= 0) throw Error(Errc::invalid_config, "isolation width must be positive");
    RootIsolator iso(p);
    iso.isolate();
    // Width refinement converges geometrically; the budget only guards bugs.
    iso.refine_to(width, 256 + 64 * tolerance_bits(width < 1 ? width : Rational(1)));
    return iso.profile();
}

}  // namespace polymesh

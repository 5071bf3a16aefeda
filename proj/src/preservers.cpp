#include "polymesh/preservers.hpp"

#include <cassert>

#include "polymesh/errors.hpp"
#include "polymesh/sturm.hpp"

namespace polymesh {

Poly ms_symbol_poly(const std::vector<Rational>& gammas) {
    assert(!gammas.empty());
    unsigned k = static_cast<unsigned>(gammas.size()) - 1;
    std::vector<Rational> coeffs(gammas.size());
    for (unsigned j = 0; j <= k; ++j) coeffs[j] = Rational(binomial(k, j)) * gammas[j];
    return Poly::from_coeffs(std::move(coeffs));
}

Poly schur_szego(const Poly& P, const Poly& Q, int k) {
    if (k < 0 || P.formal_degree() != k || Q.formal_degree() != k)
        throw Error(Errc::formal_degree_mismatch, "schur_szego needs formal degree k on both sides");
    std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 1, Rational(0));
    for (int j = 0; j <= k; ++j) {
        const Rational& a = P.coeff(j);
        const Rational& b = Q.coeff(j);
        if (a == 0 || b == 0) continue;
        coeffs[static_cast<std::size_t>(j)] =
            a * b / Rational(binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)));
    }
    Poly r = Poly::from_coeffs(std::move(coeffs));
    return r.is_zero() ? r : r.with_formal_degree(k);
}

std::pair<bool, Poly> is_finite_ms(const std::vector<Rational>& gammas) {
    if (gammas.empty()) throw Error(Errc::zero_gamma, "empty gamma vector");
    for (const Rational& g : gammas)
        if (g == 0)
            throw Error(Errc::zero_gamma, "is_finite_ms requires every gamma nonzero");
    Poly symbol = ms_symbol_poly(gammas);
    if (symbol.degree() == 0) return {true, symbol};  // k = 0: no zeros to constrain
    bool ok = is_hyperbolic(symbol);
    if (ok) {
        SignClass cls = root_sign_class(symbol);
        ok = cls == SignClass::AllNegative || cls == SignClass::AllPositive;
    }
    return {ok, symbol};
}

Poly apply_diagonal(const std::vector<Rational>& gammas, const Poly& p) {
    if (static_cast<int>(gammas.size()) < p.formal_degree() + 1)
        throw Error(Errc::sequence_too_short, "diagonal sequence shorter than formal degree + 1");
    std::vector<Rational> coeffs = p.coeffs();
    for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j] *= gammas[j];
    Poly r = Poly::from_coeffs(std::move(coeffs));
    return r.is_zero() ? r : r.with_formal_degree(p.formal_degree());
}

Poly apply_diff_op(const DiffOpConst& op, const Poly& p) {
    Poly acc;
    Poly dp = p;
    for (int i = 0; i < static_cast<int>(op.symbol.coeffs().size()); ++i) {
        if (i > 0) dp = derivative(dp);
        if (dp.is_zero()) break;
        acc = add_scaled(acc, dp, Rational(1), op.symbol.coeff(i));
    }
    return acc.is_zero() ? acc : acc.with_formal_degree(p.formal_degree());
}

bool is_hpo(const DiffOpConst& op) { return is_hyperbolic(op.symbol); }

Poly theta_op(const Rational& lambda, const Rational& a, const Poly& p) {
    Poly xdp = multiply(Poly::monomial(1, Rational(1)), derivative(p));
    Poly r = add_scaled(p, xdp, lambda, a);
    return r.is_zero() ? r : r.with_formal_degree(p.formal_degree());
}

Poly theta_rep_poly(const Rational& a, int k) {
    if (k < 1) throw Error(Errc::invalid_config, "theta_rep_poly needs k >= 1");
    Poly r(Rational(1));
    Poly x_plus_1 = Poly::from_coeffs({Rational(1), Rational(1)});
    for (int i = 0; i < k - 1; ++i) r = multiply(r, x_plus_1);
    r = multiply(r, Poly::from_coeffs({Rational(1), 1 + a * k}));
    return r.with_formal_degree(k);
}

std::pair<bool, std::optional<int>> polya_schur_partial_check(const SequencePrefix& alphas,
                                                              int K) {
    if (K < 0 || static_cast<int>(alphas.alphas.size()) < K + 1)
        throw Error(Errc::prefix_too_short, "prefix shorter than K + 1");
    for (int k = 0; k <= K; ++k) {
        std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 1);
        for (int j = 0; j <= k; ++j)
            coeffs[static_cast<std::size_t>(j)] =
                Rational(binomial(static_cast<unsigned>(k), static_cast<unsigned>(j))) *
                alphas.alphas[static_cast<std::size_t>(j)];
        Poly t = Poly::from_coeffs(std::move(coeffs));
        if (t.is_zero()) continue;  // the zero map trivially satisfies the condition
        if (!is_hyperbolic(t)) return {false, k};
        SignClass cls = root_sign_class(t);
        if (cls == SignClass::HasZeroRoot) {
            // Strip the root at the origin and classify the rest.
            Poly rest = t;
            while (rest.coeff(0) == 0)
                rest = exact_divide(rest, Poly::monomial(1, Rational(1)));
            if (rest.degree() == 0) continue;
            cls = root_sign_class(rest);
        }
        if (cls == SignClass::Mixed) return {false, k};
        // AllNegative, AllPositive and NoRealRoots(degree 0) all pass.
    }
    return {true, std::nullopt};
}

MeshEnclosure sequence_lmesh_upto(const SequencePrefix& alphas, int K, const Rational& tol) {
    if (K < 2) throw Error(Errc::invalid_config, "sequence_lmesh_upto needs K >= 2");
    if (static_cast<int>(alphas.alphas.size()) < K + 1)
        throw Error(Errc::prefix_too_short, "prefix shorter than K + 1");
    std::optional<MeshEnclosure> best;
    for (int k = 2; k <= K; ++k) {
        std::vector<Rational> truncation(alphas.alphas.begin(), alphas.alphas.begin() + k + 1);
        for (const Rational& g : truncation)
            if (g == 0)
                throw Error(Errc::not_multiplier_sequence_prefix,
                            "zero entry in truncation " + std::to_string(k), k);
        auto [ok, symbol] = is_finite_ms(truncation);
        if (!ok)
            throw Error(Errc::not_multiplier_sequence_prefix,
                        "truncation " + std::to_string(k) + " is not a multiplier sequence", k);
        MeshEnclosure enc = lmesh_enclosure(symbol, tol);
        if (!best) {
            best = enc;
        } else {
            if (enc.lo < best->lo) best->lo = enc.lo;
            if (enc.hi < best->hi) best->hi = enc.hi;
        }
    }
    best->exact = best->lo == best->hi;
    return *best;
}

std::optional<std::pair<Rational, Rational>> find_nonhyperbolic_pencil(const Poly& f,
                                                                       const Poly& g,
                                                                       int grid_size) {
    if (f.is_zero() || g.is_zero())
        throw Error(Errc::zero_polynomial, "find_nonhyperbolic_pencil");
    if (f.degree() != g.degree())
        throw Error(Errc::degree_mismatch, "find_nonhyperbolic_pencil needs equal degrees");
    if (grid_size < 2) throw Error(Errc::invalid_config, "grid_size must be >= 2");

    // Rational sweep of the projective direction circle: u in [-1, 1] maps
    // to (c, d) = (1 - u^2, 2u), the tangent half-angle image of
    // (cos t, sin t) over half a turn, which covers every direction up to
    // scale.
    for (int i = 0; i < grid_size; ++i) {
        Rational u = Rational(-1) + Rational(2 * i, grid_size - 1);
        u.canonicalize();
        Rational c = 1 - u * u;
        Rational d = 2 * u;
        Poly pencil = add_scaled(f, g, c, d);
        if (pencil.is_zero() || pencil.degree() == 0) continue;
        if (!is_hyperbolic(pencil)) return std::make_pair(c, d);
    }
    return std::nullopt;
}

}  // namespace polymesh

#ifndef POLYMESH_PRESERVERS_HPP
#define POLYMESH_PRESERVERS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "polymesh/mesh.hpp"
#include "polymesh/poly.hpp"

namespace polymesh {

/// A diagonal operator x^j -> gamma_j * x^j on R_k[x] with every gamma_j
/// nonzero, together with its symbol polynomial
/// Q_T(t) = sum_j C(k,j) gamma_j t^j. The operator preserves real-rootedness
/// exactly when Q_T has all real zeros of one sign, which is what
/// is_finite_ms decides.
struct FiniteMultiplierSeq {
    std::vector<Rational> gammas;
    Poly symbol_poly;
};

/// Constant-coefficient differential operator sum_i a_i (d/dx)^i, stored as
/// its symbol polynomial a_0 + a_1 t + ... + a_k t^k.
struct DiffOpConst {
    Poly symbol;

    int order() const { return symbol.is_zero() ? 0 : symbol.degree(); }
};

/// Finite prefix alpha_0..alpha_K of an infinite coefficient sequence.
struct SequencePrefix {
    std::vector<Rational> alphas;
};

/// Symbol polynomial sum_j C(k,j) gamma_j t^j of a diagonal operator on
/// R_k[x], k = gammas.size() - 1.
Poly ms_symbol_poly(const std::vector<Rational>& gammas);

/// Coefficient-wise product in the binomially weighted basis: for
/// P = sum C(k,j) a_j x^j and Q = sum C(k,j) b_j x^j returns
/// sum C(k,j) a_j b_j x^j. Both formal degrees must equal k; the result has
/// formal degree k even when the leading product vanishes.
/// Throws formal_degree_mismatch.
Poly schur_szego(const Poly& P, const Poly& Q, int k);

/// Decides whether the diagonal operator given by gammas preserves
/// real-rootedness on R_k[x]: true iff the symbol polynomial is hyperbolic
/// with all roots nonzero and of one sign (a constant symbol, k = 0, is
/// vacuously fine). The certificate is the symbol polynomial either way.
/// Throws zero_gamma when some gamma_j == 0 (outside the invertible case
/// this criterion covers).
std::pair<bool, Poly> is_finite_ms(const std::vector<Rational>& gammas);

/// Applies the diagonal operator coefficient-wise; gammas must cover the
/// formal degree of p. Throws sequence_too_short.
Poly apply_diagonal(const std::vector<Rational>& gammas, const Poly& p);

/// sum_i a_i p^(i), exactly.
Poly apply_diff_op(const DiffOpConst& op, const Poly& p);

/// True iff op preserves real-rootedness, i.e. its symbol is hyperbolic
/// (constant-coefficient case of the classical criterion).
bool is_hpo(const DiffOpConst& op);

/// lambda * p + a * x * p'.
Poly theta_op(const Rational& lambda, const Rational& a, const Poly& p);

/// (x+1)^(k-1) * ((1+a*k)x + 1), expanded, with formal degree k: composing
/// with it reproduces the action of 1 + a*x*d/dx on R_k[x]. Requires k >= 1
/// (invalid_config).
Poly theta_rep_poly(const Rational& a, int k);

/// For k = 0..K checks that sum_j C(k,j) alpha_j x^j is hyperbolic with all
/// nonzero roots of one sign (zero coefficients are permitted here: a zero
/// root or a shortened polynomial does not violate the condition). Returns
/// {true, nullopt} or {false, first failing k}. This bounded check is a
/// necessary condition only. Throws prefix_too_short.
std::pair<bool, std::optional<int>> polya_schur_partial_check(const SequencePrefix& alphas,
                                                              int K);

/// Enclosure of min over k = 2..K of the logarithmic mesh of the truncation
/// symbols Q_{A_k}: an upper bound for the logarithmic mesh of the infinite
/// sequence. Every truncation must pass is_finite_ms.
/// Throws prefix_too_short, invalid_config (K < 2),
/// not_multiplier_sequence_prefix (detail() = offending k).
MeshEnclosure sequence_lmesh_upto(const SequencePrefix& alphas, int K, const Rational& tol);

/// Scans a deterministic projective grid of directions (c, d) and returns
/// the first one making c*f + d*g non-hyperbolic, or nullopt. A nullopt is
/// evidence, not proof, of interlacing. Requires equal effective degrees
/// (degree_mismatch); grid_size >= 2 (invalid_config).
std::optional<std::pair<Rational, Rational>> find_nonhyperbolic_pencil(const Poly& f,
                                                                       const Poly& g,
                                                                       int grid_size = 256);

}  // namespace polymesh

#endif

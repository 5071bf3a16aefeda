#include "polymesh/poly.hpp"

#include <cassert>

#include "polymesh/errors.hpp"

namespace polymesh {

namespace {
const Rational kZero(0);
}

Poly::Poly(Rational constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

Poly Poly::from_coeffs(std::vector<Rational> coeffs) {
    Poly p;
    p.formal_degree_ = coeffs.empty() ? 0 : static_cast<int>(coeffs.size()) - 1;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

Poly Poly::monomial(unsigned k, Rational c) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = std::move(c);
    return from_coeffs(std::move(v));
}

Poly Poly::from_roots(const std::vector<Rational>& roots, const Rational& lc) {
    Poly p(lc);
    for (const Rational& r : roots)
        p = multiply(p, from_coeffs({-r, Rational(1)}));
    return p;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) formal_degree_ = 0;
    if (formal_degree_ < static_cast<int>(coeffs_.size()) - 1)
        formal_degree_ = static_cast<int>(coeffs_.size()) - 1;
}

int Poly::degree() const {
    if (coeffs_.empty()) throw Error(Errc::zero_polynomial, "degree of the zero polynomial");
    return static_cast<int>(coeffs_.size()) - 1;
}

Poly Poly::with_formal_degree(int k) const {
    if (k < (is_zero() ? 0 : degree()))
        throw Error(Errc::formal_degree_mismatch, "formal degree below effective degree");
    Poly p = *this;
    p.formal_degree_ = is_zero() ? 0 : k;
    return p;
}

const Rational& Poly::coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(j)];
}

const Rational& Poly::leading_coeff() const {
    if (coeffs_.empty()) throw Error(Errc::zero_polynomial, "leading coefficient of zero");
    return coeffs_.back();
}

Poly Poly::monic() const {
    const Rational& lc = leading_coeff();
    std::vector<Rational> v = coeffs_;
    for (Rational& c : v) c /= lc;
    return from_coeffs(std::move(v)).with_formal_degree(formal_degree_);
}

Poly Poly::negated() const {
    std::vector<Rational> v = coeffs_;
    for (Rational& c : v) c = -c;
    Poly p = from_coeffs(std::move(v));
    return p.is_zero() ? p : p.with_formal_degree(formal_degree_);
}

Poly add_scaled(const Poly& p, const Poly& q, const Rational& c, const Rational& d) {
    std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
    std::vector<Rational> v(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j)
        v[j] = c * p.coeff(static_cast<int>(j)) + d * q.coeff(static_cast<int>(j));
    Poly r = Poly::from_coeffs(std::move(v));
    int fd = std::max(p.formal_degree(), q.formal_degree());
    return r.is_zero() ? r : r.with_formal_degree(fd);
}

Poly multiply(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    std::vector<Rational> v(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) v[i + j] += a[i] * b[j];
    }
    return Poly::from_coeffs(std::move(v))
        .with_formal_degree(p.formal_degree() + q.formal_degree());
}

Poly derivative(const Poly& p) {
    if (p.coeffs().size() <= 1) return Poly();
    std::vector<Rational> v(p.coeffs().size() - 1);
    for (std::size_t j = 1; j < p.coeffs().size(); ++j)
        v[j - 1] = Rational(static_cast<long>(j)) * p.coeffs()[j];
    Poly r = Poly::from_coeffs(std::move(v));
    return r.is_zero() ? r : r.with_formal_degree(std::max(p.formal_degree() - 1, 0));
}

Poly shift(const Poly& p, const Rational& lambda) {
    if (p.is_zero() || lambda == 0) return p;
    // Synthetic Taylor shift: repeatedly divide by (x - (-lambda)).
    std::vector<Rational> work = p.coeffs();
    std::size_t n = work.size();
    std::vector<Rational> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        // One Horner pass leaves the value p_j(lambda) in work[0].
        for (std::size_t i = n - 1; i > j; --i) work[i - 1] += lambda * work[i];
        out[j] = work[j];
    }
    return Poly::from_coeffs(std::move(out)).with_formal_degree(p.formal_degree());
}

Poly dilate(const Poly& p, const Rational& lambda) {
    std::vector<Rational> v = p.coeffs();
    Rational pw(1);
    for (std::size_t j = 1; j < v.size(); ++j) {
        pw *= lambda;
        v[j] *= pw;
    }
    Poly r = Poly::from_coeffs(std::move(v));
    return r.is_zero() ? r : r.with_formal_degree(p.formal_degree());
}

Rational eval(const Poly& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<Poly, Poly> divmod(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw Error(Errc::zero_polynomial, "division by the zero polynomial");
    if (p.is_zero() || p.coeffs().size() < d.coeffs().size()) return {Poly(), p};
    std::vector<Rational> rem = p.coeffs();
    std::size_t dn = d.coeffs().size();
    std::vector<Rational> quot(rem.size() - dn + 1, Rational(0));
    const Rational& lc = d.leading_coeff();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational q = rem[k + dn - 1] / lc;
        if (q == 0) continue;
        quot[k] = q;
        for (std::size_t i = 0; i < dn; ++i) rem[k + i] -= q * d.coeffs()[i];
    }
    return {Poly::from_coeffs(std::move(quot)), Poly::from_coeffs(std::move(rem))};
}

Poly exact_divide(const Poly& p, const Poly& d) {
    auto [q, r] = divmod(p, d);
    assert(r.is_zero() && "exact_divide: nonzero remainder");
    return q;
}

Poly primitive_integer_image(const Poly& p) {
    if (p.is_zero()) return p;
    Integer den_lcm(1), num_gcd(0);
    for (const Rational& c : p.coeffs()) {
        if (c == 0) continue;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);  // positive: num_gcd > 0, den_lcm > 0
    scale.canonicalize();
    std::vector<Rational> v = p.coeffs();
    for (Rational& c : v) c *= scale;
    return Poly::from_coeffs(std::move(v)).with_formal_degree(p.formal_degree());
}

namespace {

// Pseudo-remainder of primitive integer polynomials, reduced to its own
// primitive part. Sign is irrelevant to the gcd.
Poly primitive_prem(const Poly& a, const Poly& b) {
    Poly r = a;
    const Rational& lb = b.leading_coeff();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift_deg = r.degree() - b.degree();
        Rational f = r.leading_coeff() / lb;
        r = add_scaled(r, multiply(b, Poly::monomial(static_cast<unsigned>(shift_deg), f)),
                       Rational(1), Rational(-1));
    }
    return r.is_zero() ? r : primitive_integer_image(r);
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw Error(Errc::zero_polynomial, "gcd of two zero polynomials");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    Poly u = primitive_integer_image(a);
    Poly v = primitive_integer_image(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero() && v.degree() > 0) {
        Poly r = primitive_prem(u, v);
        u = std::move(v);
        v = std::move(r);
    }
    if (!v.is_zero()) return Poly(Rational(1));  // nonzero constant remainder: coprime
    return u.monic();
}

std::vector<std::pair<Poly, int>> square_free_decompose(const Poly& p) {
    if (p.is_zero())
        throw Error(Errc::zero_polynomial, "square-free decomposition of zero");
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() == 0) return out;

    // Yun's algorithm on the monic normalization.
    Poly f = p.monic();
    Poly fp = derivative(f);
    Poly g = poly_gcd(f, fp);
    if (g.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    Poly b = exact_divide(f, g);
    Poly d = add_scaled(exact_divide(fp, g), derivative(b), Rational(1), Rational(-1));
    for (int i = 1; b.degree() > 0; ++i) {
        Poly a = poly_gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = exact_divide(b, a);
        d = add_scaled(exact_divide(d, a), derivative(b), Rational(1), Rational(-1));
    }
    return out;
}

Poly square_free_part(const Poly& p) {
    Poly r(Rational(1));
    for (const auto& [factor, mult] : square_free_decompose(p)) r = multiply(r, factor);
    return r;
}

}  // namespace polymesh

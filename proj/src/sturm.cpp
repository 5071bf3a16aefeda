#include "polymesh/sturm.hpp"

#include "polymesh/errors.hpp"

namespace polymesh {

const char* sign_class_name(SignClass c) {
    switch (c) {
        case SignClass::AllNegative: return "AllNegative";
        case SignClass::AllPositive: return "AllPositive";
        case SignClass::Mixed: return "Mixed";
        case SignClass::HasZeroRoot: return "HasZeroRoot";
        case SignClass::NoRealRoots: return "NoRealRoots";
    }
    return "?";
}

SturmChain::SturmChain(const Poly& p, bool square_free_input) {
    if (p.is_zero()) throw Error(Errc::zero_polynomial, "Sturm chain of zero");
    Poly base = square_free_input ? p : square_free_part(p);
    if (base.is_zero() || base.degree() == 0) {
        chain_.push_back(primitive_integer_image(square_free_input ? p : Poly(Rational(1))));
        return;
    }
    chain_.push_back(primitive_integer_image(base));
    chain_.push_back(primitive_integer_image(derivative(base)));
    while (true) {
        const Poly& a = chain_[chain_.size() - 2];
        const Poly& b = chain_.back();
        if (b.degree() == 0) break;
        Poly r = divmod(a, b).second;
        if (r.is_zero()) break;  // square-free input makes this a constant in practice
        chain_.push_back(primitive_integer_image(r.negated()));
    }
}

int SturmChain::variations_at(const Rational& x) const {
    int variations = 0, last = 0;
    for (const Poly& f : chain_) {
        int s = sign(eval(f, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

int SturmChain::count_roots(const Rational& a, const Rational& b) const {
    if (!(a < b)) throw Error(Errc::bad_interval, "count_roots requires a < b");
    const Poly& f = chain_.front();
    if (f.is_zero() || f.degree() == 0) return 0;
    if (eval(f, a) == 0 || eval(f, b) == 0)
        throw Error(Errc::endpoint_is_root, "Sturm endpoint is a root");
    return variations_at(a) - variations_at(b);
}

Rational cauchy_root_bound(const Poly& p) {
    if (p.is_zero()) throw Error(Errc::zero_polynomial, "root bound of zero");
    int n = p.degree();
    if (n == 0) throw Error(Errc::degree_too_low, "root bound of a constant");
    Rational m(0);
    for (int i = 0; i < n; ++i) {
        Rational a = rat_abs(p.coeff(i));
        if (a > m) m = a;
    }
    return 1 + m / rat_abs(p.leading_coeff());
}

int sturm_count(const Poly& p, const Rational& a, const Rational& b) {
    SturmChain chain(p);
    if (!(a < b)) throw Error(Errc::bad_interval, "sturm_count requires a < b");
    if (eval(p, a) == 0 || eval(p, b) == 0)
        throw Error(Errc::endpoint_is_root, "sturm_count endpoint is a root");
    return chain.count_roots(a, b);
}

bool is_hyperbolic(const Poly& p) {
    if (p.is_zero()) throw Error(Errc::zero_polynomial, "is_hyperbolic(0)");
    if (p.degree() == 0) return true;
    Poly s = square_free_part(p);
    int m = s.degree();
    if (m == 0) return true;
    Rational bound = cauchy_root_bound(s);
    SturmChain chain(s, /*square_free_input=*/true);
    return chain.count_roots(-bound, bound) == m;
}

SignClass root_sign_class(const Poly& p) {
    if (p.is_zero()) throw Error(Errc::zero_polynomial, "root_sign_class(0)");
    if (p.degree() == 0) return SignClass::NoRealRoots;
    Poly s = square_free_part(p);
    if (s.coeff(0) == 0) return SignClass::HasZeroRoot;
    Rational bound = cauchy_root_bound(s);
    SturmChain chain(s, /*square_free_input=*/true);
    int negatives = chain.count_roots(-bound, Rational(0));
    int positives = chain.count_roots(Rational(0), bound);
    if (negatives == 0 && positives == 0) return SignClass::NoRealRoots;
    if (negatives > 0 && positives > 0) return SignClass::Mixed;
    return negatives > 0 ? SignClass::AllNegative : SignClass::AllPositive;
}

}  // namespace polymesh

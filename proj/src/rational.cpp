#include "polymesh/rational.hpp"

#include <cctype>

#include "polymesh/errors.hpp"

namespace polymesh {

Integer rat_floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer rat_ceil(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational rat_pow(const Rational& q, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
    return r;  // q canonical implies q^e canonical
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational rat_from_string(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error(Errc::parse_error, "empty rational literal");

    auto is_int = [](const std::string& t) {
        std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };

    std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_int(s)) throw Error(Errc::parse_error, "bad integer literal '" + text + "'");
        return Rational(Integer(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw Error(Errc::parse_error, "bad rational literal '" + text + "'");
    Integer d(den);
    if (d == 0) throw Error(Errc::parse_error, "zero denominator in '" + text + "'");
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

// Simplest fraction in the open interval (lo, hi) for 0 <= lo < hi.
Rational simplest_nonneg(const Rational& lo, const Rational& hi) {
    // An integer strictly inside always wins.
    Integer m = rat_floor(lo) + 1;
    if (Rational(m) < hi) return Rational(m);

    // No integer inside: lo and hi share the integer part n = floor(lo).
    Integer n = rat_floor(lo);
    Rational a = lo - Rational(n);  // 0 <= a
    Rational b = hi - Rational(n);  // a < b <= 1
    if (a == 0) {
        // Simplest fraction in (0, b) is 1/m for the smallest m with 1/m < b.
        Integer m = rat_floor(1 / b) + 1;
        return Rational(n) + Rational(1) / Rational(m);
    }
    // x in (a,b) <=> 1/x in (1/b, 1/a); recurse on the reciprocal interval.
    return Rational(n) + 1 / simplest_nonneg(1 / b, 1 / a);
}

}  // namespace

Rational simplest_in_open(const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw Error(Errc::bad_interval, "simplest_in_open requires lo < hi");
    if (lo < 0 && hi > 0) return Rational(0);
    if (hi <= 0) return -simplest_nonneg(-hi, -lo);
    if (lo >= 0) return simplest_nonneg(lo, hi);
    return Rational(0);  // unreachable
}

unsigned long tolerance_bits(const Rational& tol) {
    if (tol <= 0) throw Error(Errc::invalid_config, "tolerance must be positive");
    if (tol >= 1) return 1;
    Integer inv = rat_ceil(1 / tol);
    return mpz_sizeinbase(inv.get_mpz_t(), 2);
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace polymesh

#include "polymesh/textio.hpp"

#include <cctype>
#include <sstream>

#include "polymesh/errors.hpp"

namespace polymesh {

namespace {

std::string strip_spaces(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    return s;
}

std::vector<Rational> parse_rational_list(const std::string& body, std::size_t offset) {
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = body.find(',', pos);
        std::string item = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (item.empty())
            throw Error(Errc::parse_error, "empty list entry at offset " +
                        std::to_string(offset + pos), static_cast<long>(offset + pos));
        try {
            out.push_back(rat_from_string(item));
        } catch (const Error&) {
            throw Error(Errc::parse_error, "bad rational '" + item + "' at offset " +
                        std::to_string(offset + pos), static_cast<long>(offset + pos));
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

Poly parse_poly(const std::string& text) {
    std::string s = strip_spaces(text);
    if (s.rfind("coeffs:", 0) == 0) {
        std::vector<Rational> coeffs = parse_rational_list(s.substr(7), 7);
        return Poly::from_coeffs(std::move(coeffs));
    }
    if (s.rfind("roots:", 0) == 0) {
        std::string body = s.substr(6);
        Rational lc(1);
        std::size_t semi = body.find(';');
        std::size_t offset = 6;
        if (semi != std::string::npos) {
            try {
                lc = rat_from_string(body.substr(0, semi));
            } catch (const Error&) {
                throw Error(Errc::parse_error, "bad leading coefficient at offset 6", 6);
            }
            body = body.substr(semi + 1);
            offset += semi + 1;
        }
        std::vector<Rational> roots = parse_rational_list(body, offset);
        return Poly::from_roots(roots, lc);
    }
    throw Error(Errc::parse_error, "expected 'coeffs:' or 'roots:' prefix", 0);
}

std::string format_poly(const Poly& p) {
    std::ostringstream os;
    os << "coeffs:";
    for (int j = 0; j <= p.formal_degree(); ++j) {
        if (j) os << ",";
        os << rat_to_string(p.coeff(j));
    }
    return os.str();
}

std::string pretty_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = p.is_zero() ? 0 : p.degree(); j >= 0; --j) {
        const Rational& c = p.coeff(j);
        if (c == 0) continue;
        Rational a = rat_abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (j == 0 || a != 1) os << rat_to_string(a);
        if (j > 0) {
            if (a != 1) os << "*";
            os << "x";
            if (j > 1) os << "^" << j;
        }
    }
    return os.str();
}

std::vector<Rational> parse_seq(const std::string& text) {
    std::string s = strip_spaces(text);
    if (s.rfind("seq:", 0) != 0)
        throw Error(Errc::parse_error, "expected 'seq:' prefix", 0);
    return parse_rational_list(s.substr(4), 4);
}

std::string format_seq(const std::vector<Rational>& alphas) {
    std::ostringstream os;
    os << "seq:";
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (i) os << ",";
        os << rat_to_string(alphas[i]);
    }
    return os.str();
}

}  // namespace polymesh

#include "borderlim/rational.hpp"

#include <cctype>

namespace borderlim {

std::string rational_to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    auto read_digits = [&](std::string& out) {
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out += text[i++];
        return !out.empty();
    };
    std::string num;
    if (!read_digits(num)) return std::nullopt;
    std::string den = "1";
    if (i < text.size() && text[i] == '/') {
        ++i;
        den.clear();
        if (!read_digits(den)) return std::nullopt;
    }
    if (i != text.size()) return std::nullopt;
    if (den == "0") return std::nullopt;
    Rational q{Integer(num), Integer(den)};
    if (neg) q = -q;
    return q;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    Integer n = numerator(q), d = denominator(q);
    Integer sn = boost::multiprecision::sqrt(n);
    Integer sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

} // namespace borderlim

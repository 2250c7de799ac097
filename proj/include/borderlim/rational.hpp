#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>

namespace borderlim {

// Exact arbitrary-precision scalars. mpq keeps fractions reduced with a
// positive denominator, which is exactly the canonical form we promise.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

// Renders "p" for integers and "p/q" otherwise.
std::string rational_to_string(const Rational& q);

// Parses "p" or "p/q" with optional sign; rejects anything else (in
// particular floating-point literals). Returns nullopt on failure.
std::optional<Rational> parse_rational(const std::string& text);

// Exact square root when q is the square of a rational, nullopt otherwise.
std::optional<Rational> rational_sqrt(const Rational& q);

} // namespace borderlim

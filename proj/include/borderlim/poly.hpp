#pragma once

#include "borderlim/errors.hpp"
#include "borderlim/monomial.hpp"
#include "borderlim/rational.hpp"

#include <map>
#include <set>
#include <string>

namespace borderlim {

// Sparse multivariate polynomial over the rationals. The term map is the
// canonical form: no zero coefficients, one entry per monomial, ordered by
// the global graded-reverse-lexicographic order.
class Poly {
  public:
    using TermMap = std::map<Monomial, Rational, MonoCanonicalLess>;

    Poly() = default;
    explicit Poly(const Rational& c);
    Poly(const Rational& c, const Monomial& m);

    static Poly zero() { return Poly(); }
    static Poly constant(const Rational& c) { return Poly(c); }
    static Poly variable(VarId v) { return Poly(Rational(1), Monomial::var(v)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // the coefficient of 1
    int total_degree() const;         // -1 for the zero polynomial
    bool is_homogeneous(int degree) const;

    Rational coefficient(const Monomial& m) const;
    std::set<VarId> variables() const;
    std::size_t term_count() const { return terms_.size(); }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator*(const Rational& c) const;
    Poly pow(int e) const;

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    void add_term(const Rational& c, const Monomial& m);

    // Composite polynomial; throws unbound_variable when a variable of this
    // polynomial is missing from the assignment.
    Poly substitute(const std::map<VarId, Poly>& assignment) const;
    // Same, but variables absent from the assignment are left alone.
    Poly substitute_partial(const std::map<VarId, Poly>& assignment) const;

    // Exact evaluation at a rational point; throws unbound_variable on a
    // missing variable.
    Rational evaluate(const std::map<VarId, Rational>& values) const;

    // Splits every monomial into its part over `split_vars` and the rest;
    // returns the map (monomial over split_vars) -> cofactor polynomial.
    std::map<Monomial, Poly, MonoCanonicalLess> collect(const std::set<VarId>& split_vars) const;

    Poly derivative(VarId v) const;

    std::string to_string() const;
    static Poly parse(const std::string& text);  // throws parse_error

  private:
    TermMap terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

} // namespace borderlim

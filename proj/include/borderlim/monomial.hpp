#pragma once

#include "borderlim/variable.hpp"

#include <utility>
#include <vector>

namespace borderlim {

// Sparse exponent vector. Entries are sorted with the greatest variable
// first and never carry a zero exponent.
class Monomial {
  public:
    using Entry = std::pair<VarId, int>;

    Monomial() = default;
    explicit Monomial(std::vector<Entry> entries);  // normalizes

    static Monomial one() { return Monomial(); }
    static Monomial var(VarId v, int exp = 1);

    const std::vector<Entry>& entries() const { return entries_; }
    int degree() const { return degree_; }
    bool is_one() const { return entries_.empty(); }
    int exponent_of(VarId v) const;

    Monomial operator*(const Monomial& o) const;
    // nullopt when not divisible
    std::optional<Monomial> divide(const Monomial& o) const;
    bool divides(const Monomial& o) const { return o.divide(*this).has_value(); }
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return entries_ == o.entries_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::string to_string() const;  // "x1^2*x2", "1" for the empty monomial

  private:
    std::vector<Entry> entries_;
    int degree_ = 0;
};

// Canonical order used for maps and printing: graded reverse lexicographic
// over the global variable order. Returns a < b.
bool mono_less_grevlex(const Monomial& a, const Monomial& b);
bool mono_less_lex(const Monomial& a, const Monomial& b);

struct MonoCanonicalLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return mono_less_grevlex(a, b); }
};

} // namespace borderlim

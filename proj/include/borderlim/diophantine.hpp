#pragma once

#include "borderlim/rational.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace borderlim {

// Trial-division factorization with a step budget; nullopt when the cofactor
// resists the budget.
std::optional<std::vector<std::pair<Integer, int>>> factorize(Integer n,
                                                              long long budget = 200000);

// Square root of a modulo an odd prime p (Tonelli-Shanks); nullopt for
// non-residues.
std::optional<Integer> sqrt_mod_prime(Integer a, const Integer& p);

// A nontrivial rational solution of a x^2 + b y^2 + c z^2 = 0 by Lagrange
// descent. Nullopt when there is no solution (definite form or a quadratic
// non-residue obstruction) or when a factorization ran out of budget.
std::optional<std::array<Rational, 3>> solve_ternary(const Rational& a, const Rational& b,
                                                     const Rational& c);

} // namespace borderlim

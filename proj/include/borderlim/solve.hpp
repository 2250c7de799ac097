#pragma once

#include "borderlim/groebner.hpp"
#include "borderlim/poly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace borderlim {

// Searches for one rational solution of a polynomial system. Layered:
// linear elimination, then a basis computation; zero-dimensional systems are
// solved exactly by back-substitution over the rationals, positive
// dimensional ones are sampled with hyperplane slices (axis-aligned first,
// then seeded random ones). The Unknown status is honest: it reports only
// that no rational point was found within the budget.
struct SolveOptions {
    long long gb_budget = default_gb_budget();
    int slice_attempts = 8;
    std::uint64_t seed = 12345;
    int max_branches = 64;
    bool allow_slicing = true;
};

enum class SolveStatus { Solved, UnsatOverClosure, Unknown };

struct SolveResult {
    SolveStatus status = SolveStatus::Unknown;
    std::map<VarId, Rational> assignment;  // total on the unknowns when Solved
    std::string note;
};

SolveResult rational_solve(const std::vector<Poly>& equations, const std::vector<VarId>& unknowns,
                           const SolveOptions& opts = {});

// Rational roots of a univariate polynomial (exact). `complete` is false
// when the coefficient factorizations were cut short, in which case roots
// may be missing but never wrong.
struct RationalRoots {
    std::vector<Rational> roots;
    bool complete = true;
};
RationalRoots rational_roots(const Poly& p, VarId var);

// Deterministic small RNG for the seeded heuristics.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    // uniform-ish integer in [lo, hi]
    long long range(long long lo, long long hi);
};

} // namespace borderlim

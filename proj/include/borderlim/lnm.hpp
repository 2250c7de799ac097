#pragma once

#include "borderlim/polymap.hpp"
#include "borderlim/solve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace borderlim {

// The locus of Laurent points with pole depth <= n and degree <= m whose
// image has no pole, presented as a polynomial constraint system in the
// coefficient variables, together with the value-at-zero polynomials.
//
// With a shift s (used by the certificate searches) the constraints make
// every coefficient below t^s vanish and the evaluation reads t^s.
struct ConstraintSystem {
    std::vector<VarId> variables;   // coefficient variables, canonical order
    std::vector<Poly> constraints;  // ordered: target asc, exponent s-1 down to -d*n
    std::vector<Poly> evaluation;   // coefficient of t^s per target coordinate (or slot)
    int n = 0, m = 0, shift = 0;
    bool slot_level = false;
};

// Slot-level system: each source slot is one symbol, matching the display
// of a map given by a formula.
ConstraintSystem lnm_constraints(const SlotMap& phi, int n, int m, int shift = 0);

// Scalar system at the map's level: one variable per (slot, coordinate,
// exponent), one constraint row per target coordinate and exponent.
ConstraintSystem lnm_constraints(const PolyMap& phi, int n, int m, int shift = 0);

// Membership test by direct substitution: true iff phi(y) has no pole; the
// value at zero is returned on success.
struct LnmCheckResult {
    bool member = false;
    std::optional<Point> value;        // on success
    std::optional<int> pole_exponent;  // least exponent when not a member
};
LnmCheckResult lnm_check(const PolyMap& phi, const LaurentPoint& y);

// Least m0 such that the constraint and evaluation polynomials are
// literally identical for every m >= m0: coefficient variables above m0
// cannot reach exponents <= shift. Equals shift + (d-1)*n.
int stabilization_bound(const PolyMap& phi, int n, int shift = 0);
int stabilization_bound(const SlotMap& phi, int n, int shift = 0);

// Search for a witness y with pole depth <= n such that phi(y) has no pole
// and value x at zero. n grows from 0; m is pinned to the stabilization
// bound. Absence of a witness within the bounds is not a non-membership
// proof.
struct ImageSearchOptions {
    int n_max = 2;
    long long gb_budget = default_gb_budget();
    std::uint64_t seed = 12345;
    int fix_attempts = 8;
    int slice_attempts = 8;
};

struct ImageSearchResult {
    bool found = false;
    std::optional<LaurentPoint> witness;
    int n_used = -1;
    // true when every level of the search was proven empty over the closure
    bool exhausted_definitively = true;
    std::vector<std::string> notes;
};

ImageSearchResult image_search(const PolyMap& phi, const Point& x, const ImageSearchOptions& opts = {});

// One level of the shifted search: witness y supported on [-n, m] with
// phi(y) vanishing below t^s and equal to x at t^s. Shared by image_search
// (s = 0) and the certificate search.
struct ShiftedSearchOutcome {
    SolveStatus status = SolveStatus::Unknown;
    std::optional<LaurentPoint> witness;
    std::string note;
};
ShiftedSearchOutcome search_preimage_shifted(const PolyMap& phi, const Point& x, int n, int shift,
                                             const ImageSearchOptions& opts);

} // namespace borderlim

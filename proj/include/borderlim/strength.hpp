#pragma once

#include "borderlim/gram.hpp"
#include "borderlim/lnm.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace borderlim {

// Factor degrees of a decomposition into r products: e_i and d - e_i with
// each e_i strictly between 0 and d. Canonical form keeps e sorted
// ascending; the summands commute.
struct DegreeSplitting {
    int d = 0;
    std::vector<int> e;

    static DegreeSplitting make(int d, std::vector<int> e);  // validates, sorts
    int r() const { return static_cast<int>(e.size()); }
};

// The multiplication map (g_1, h_1, ..., g_r, h_r) -> sum g_i h_i with
// deg g_i = e_i, deg h_i = d - e_i. Slots are named g1, h1, g2, h2, ...
SlotMap strength_slot_map(const DegreeSplitting& splitting);
PolyMap strength_map(const DegreeSplitting& splitting, int level);

// ceil(rank/2) of the associated symmetric matrix.
int quadratic_strength(const Poly& f, int nvars = 0);

// True when the rank bound alone shows f cannot have border strength <= r:
// a limit of sums of r products has matrix rank at most 2r.
bool quadratic_border_excluded(const Poly& f, int r);

// Exact check of f = sum g_i h_i. Factors alternate g_1, h_1, ...; degrees
// must match the splitting.
bool verify_decomposition(const Poly& f, const DegreeSplitting& splitting,
                          const std::vector<Poly>& factors);

// A limit certificate: f = value at 0 of t^{-s} * sum g_i(t) h_i(t).
struct Certificate {
    int s = 0;
    DegreeSplitting splitting;
    int level = 0;
    std::vector<LaurentPoint> factors;  // 2r entries alternating g_i, h_i, each on a one-slot space

    // the combined Laurent point on the source of the multiplication map
    LaurentPoint combined_source_point() const;
};

struct CertificateCheck {
    enum class Status { Accepted, RejectedPole, RejectedWrongLimit };
    Status status = Status::RejectedWrongLimit;
    int sigma_witness = -1;            // the accepted shift s
    LaurentPoint product;              // recomputed sum of products, for audit
    std::optional<int> pole_exponent;  // least exponent when rejected for a pole

    bool accepted() const { return status == Status::Accepted; }
};

// Recomputes P(t) = sum g_i(t) h_i(t), shifts by s and takes the value at
// zero. Accepts iff the shifted point has no pole and the value equals f;
// acceptance certifies sigma(f) <= s for this r.
CertificateCheck verify_border_certificate(const Poly& f, const Certificate& cert);

// Constructive decomposition of a quadratic into few products of rational
// linear forms: hyperbolic pivots, square completion, square-class pairing,
// and a bounded isotropic-vector search to recombine leftover squares.
// Exact: the returned products sum to f. Nullopt only for f = 0.
struct QuadraticDecomposition {
    std::vector<std::pair<Poly, Poly>> products;
};
std::optional<QuadraticDecomposition> decompose_quadratic(const Poly& f, int nvars = 0);

// Search for the least witnessed shift s <= 2*n_max over all degree
// splittings with r factors. Witnessed upper bounds only: Inconclusive
// never proves non-membership (for quadratics the rank shortcut is noted).
struct SigmaSearchOptions {
    int n_max = 1;
    long long gb_budget = default_gb_budget();
    std::uint64_t seed = 12345;
    int fix_attempts = 8;
    int slice_attempts = 8;
};

struct SigmaSearchResult {
    enum class Outcome { Witnessed, Inconclusive };
    Outcome outcome = Outcome::Inconclusive;
    int s = -1;
    std::optional<Certificate> certificate;
    std::string note;
};

SigmaSearchResult sigma_search(const Poly& f, int r, const SigmaSearchOptions& opts = {},
                               int level = 0);

// All splittings with r factors for degree d, up to reordering.
std::vector<DegreeSplitting> enumerate_splittings(int d, int r);

} // namespace borderlim

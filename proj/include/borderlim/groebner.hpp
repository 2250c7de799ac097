#pragma once

#include "borderlim/order.hpp"
#include "borderlim/poly.hpp"
#include "borderlim/polymap.hpp"

#include <optional>
#include <vector>

namespace borderlim {

// Step budget for basis completion; the environment variable
// BORDERLIM_GB_BUDGET overrides the default. Exceeding the budget raises
// resource_limit: the result is absent, never wrong.
long long default_gb_budget();

struct GroebnerOptions {
    long long step_budget = default_gb_budget();
};

struct Ideal {
    std::vector<Poly> generators;
    MonomialOrder order = MonomialOrder::grevlex();
    std::optional<std::vector<Poly>> basis;  // reduced, monic, sorted by leading term

    bool has_basis() const { return basis.has_value(); }
};

// Leading term helpers under an arbitrary order.
Monomial leading_monomial(const Poly& p, const MonomialOrder& order);
Rational leading_coefficient(const Poly& p, const MonomialOrder& order);

// Remainder of f on division by the polys in `basis` under `order`; every
// term of the result is divisible by no leading term of the basis.
Poly reduce(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& order,
            long long* step_budget = nullptr);

// Completion to the reduced basis for I.order.
Ideal buchberger(Ideal ideal, const GroebnerOptions& opts = {});

// Unique remainder modulo the ideal; zero iff f belongs to it. Throws
// basis_missing when the basis has not been computed.
Poly normal_form(const Poly& f, const Ideal& ideal);

// Generators of the closure of the image of phi, in the target coordinate
// variables: eliminate the source coordinates from the graph ideal.
Ideal implicitize(const PolyMap& phi, const GroebnerOptions& opts = {});

// The target coordinate variable used by implicitize for (slot, coord).
VarId implicitize_target_var(const PolyMap& phi, std::size_t slot, std::size_t coord);

// True iff every generator of the implicitization vanishes at f.
bool border_membership(const Point& f, const PolyMap& phi, const GroebnerOptions& opts = {});
bool border_membership(const Point& f, const Ideal& image_ideal, const PolyMap& phi);

} // namespace borderlim

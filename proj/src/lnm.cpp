#include "borderlim/lnm.hpp"

#include "borderlim/errors.hpp"

#include <algorithm>

namespace borderlim {

namespace {

int clamp_nonneg(int v) { return v < 0 ? 0 : v; }

// shared expansion: sources as symbol series, components over them
ConstraintSystem build_system(const std::vector<Poly>& components,
                              const std::map<VarId, LaurentScalar>& series,
                              const std::vector<VarId>& variables, int n, int m, int shift, int degree,
                              bool slot_level) {
    ConstraintSystem sys;
    sys.variables = variables;
    sys.n = n;
    sys.m = m;
    sys.shift = shift;
    sys.slot_level = slot_level;

    const int low = -degree * n;
    for (const auto& comp : components) {
        LaurentScalar expansion = eval_over_laurent(comp, series);
        for (int k = shift - 1; k >= low; --k) sys.constraints.push_back(expansion.coeff(k));
        sys.evaluation.push_back(expansion.coeff(shift));
    }
    return sys;
}

} // namespace

ConstraintSystem lnm_constraints(const SlotMap& phi, int n, int m, int shift) {
    if (n < 0 || m < 0) throw error("n and m must be non-negative");
    std::vector<VarId> variables;
    std::map<VarId, LaurentScalar> series;
    for (std::size_t i = 0; i < phi.source_degrees.size(); ++i) {
        LaurentScalar s;
        for (int k = m; k >= -n; --k) {
            VarId v = phi.symbol(i, k);
            variables.push_back(v);
            s.add(k, Poly::variable(v));
        }
        series[phi.symbol(i)] = s;
    }
    return build_system(phi.formulas, series, variables, n, m, shift,
                        std::max(phi.degree(), 1), true);
}

ConstraintSystem lnm_constraints(const PolyMap& phi, int n, int m, int shift) {
    if (n < 0 || m < 0) throw error("n and m must be non-negative");
    std::vector<VarId> variables;
    std::map<VarId, LaurentScalar> series;
    const CoordSpace& src = phi.source();
    for (std::size_t i = 0; i < src.slot_count(); ++i) {
        for (long long c = 0; c < src.slot_dim(i); ++c) {
            LaurentScalar s;
            for (int k = m; k >= -n; --k) {
                VarId v = slot_coord_var(src.slot_name(i), static_cast<int>(i), static_cast<int>(c), k);
                variables.push_back(v);
                s.add(k, Poly::variable(v));
            }
            series[phi.coordinate_var(i, static_cast<std::size_t>(c))] = s;
        }
    }
    return build_system(phi.components(), series, variables, n, m, shift,
                        std::max(phi.degree(), 1), false);
}

LnmCheckResult lnm_check(const PolyMap& phi, const LaurentPoint& y) {
    LaurentPoint image = substitute_laurent(phi, y);
    LnmCheckResult result;
    auto mn = image.min_exponent();
    if (mn && *mn < 0) {
        result.member = false;
        result.pole_exponent = *mn;
        return result;
    }
    result.member = true;
    result.value = image.coeff(0);
    return result;
}

int stabilization_bound(const PolyMap& phi, int n, int shift) {
    return clamp_nonneg(shift + (std::max(phi.degree(), 1) - 1) * n);
}

int stabilization_bound(const SlotMap& phi, int n, int shift) {
    return clamp_nonneg(shift + (std::max(phi.degree(), 1) - 1) * n);
}

namespace {

// coefficient variable of the scalar system for (slot, coord, exponent)
VarId coeff_var(const CoordSpace& src, std::size_t slot, std::size_t coord, int exponent) {
    return slot_coord_var(src.slot_name(slot), static_cast<int>(slot), static_cast<int>(coord),
                          exponent);
}

LaurentPoint witness_from_assignment(const CoordSpace& src, int n, int m,
                                     const std::map<VarId, Rational>& assignment) {
    LaurentPoint y(src);
    for (int k = -n; k <= m; ++k) {
        std::vector<Rational> coords;
        bool any = false;
        for (std::size_t i = 0; i < src.slot_count(); ++i)
            for (long long c = 0; c < src.slot_dim(i); ++c) {
                auto it = assignment.find(coeff_var(src, i, static_cast<std::size_t>(c), k));
                Rational value = it == assignment.end() ? Rational(0) : it->second;
                if (value != 0) any = true;
                coords.push_back(value);
            }
        if (any) y.set_coeff(k, Point::from_coordinates(src, coords));
    }
    return y;
}

// Detect a slot bipartition such that the components are linear in one
// side's coordinates; fixing the other side then leaves a linear system.
// Candidates: odd/even slots and every single-slot side.
std::optional<std::vector<bool>> linear_side(const PolyMap& phi) {
    const CoordSpace& src = phi.source();
    std::size_t slots = src.slot_count();

    auto var_slot = [&](VarId v) {
        return VarTable::info(v).slot;
    };
    auto is_linear_in = [&](const std::vector<bool>& side) {
        for (const auto& comp : phi.components())
            for (const auto& [mono, c] : comp.terms()) {
                int deg = 0;
                for (const auto& [v, e] : mono.entries()) {
                    int s = var_slot(v);
                    if (s >= 0 && side[static_cast<std::size_t>(s)]) deg += e;
                }
                if (deg > 1) return false;
            }
        return true;
    };

    std::vector<std::vector<bool>> candidates;
    std::vector<bool> odd(slots, false), even(slots, false);
    for (std::size_t i = 0; i < slots; ++i) (i % 2 ? odd : even)[i] = true;
    candidates.push_back(odd);
    candidates.push_back(even);
    for (std::size_t i = 0; i < slots; ++i) {
        std::vector<bool> single(slots, false);
        single[i] = true;
        candidates.push_back(single);
    }
    for (auto& side : candidates) {
        bool nonempty = std::find(side.begin(), side.end(), true) != side.end();
        bool proper = std::find(side.begin(), side.end(), false) != side.end();
        if (nonempty && (proper || slots == 1) && is_linear_in(side)) return side;
    }
    return std::nullopt;
}

// Fix the non-linear side to seeded random values and solve the remaining
// linear system exactly.
std::optional<std::map<VarId, Rational>> fix_and_solve(const PolyMap& phi,
                                                       const std::vector<Poly>& equations, int n, int m,
                                                       const std::vector<bool>& linear_slots,
                                                       SplitMix64& rng) {
    const CoordSpace& src = phi.source();
    std::map<VarId, Poly> fixed;
    std::vector<VarId> unknowns;
    for (std::size_t i = 0; i < src.slot_count(); ++i)
        for (long long c = 0; c < src.slot_dim(i); ++c)
            for (int k = -n; k <= m; ++k) {
                VarId v = coeff_var(src, i, static_cast<std::size_t>(c), k);
                if (linear_slots[i])
                    unknowns.push_back(v);
                else
                    fixed[v] = Poly::constant(Rational(rng.range(-3, 3)));
            }

    // substitute the sample; equations become affine in the unknowns
    std::vector<Poly> affine;
    for (const auto& eq : equations) {
        Poly r = eq.substitute_partial(fixed);
        if (r.is_zero()) continue;
        if (r.is_constant()) return std::nullopt;  // sample contradicts a constraint
        if (r.total_degree() > 1) return std::nullopt;
        affine.push_back(std::move(r));
    }

    QMatrix a(affine.size(), unknowns.size());
    std::vector<Rational> b(affine.size(), Rational(0));
    std::map<VarId, std::size_t> column;
    for (std::size_t j = 0; j < unknowns.size(); ++j) column[unknowns[j]] = j;
    for (std::size_t r = 0; r < affine.size(); ++r) {
        for (const auto& [mono, c] : affine[r].terms()) {
            if (mono.is_one()) {
                b[r] = -c;
                continue;
            }
            a.at(r, column.at(mono.entries()[0].first)) = c;
        }
    }
    auto x = a.solve(b);
    if (!x) return std::nullopt;
    std::map<VarId, Rational> assignment;
    for (const auto& [v, p] : fixed) assignment[v] = p.constant_value();
    for (std::size_t j = 0; j < unknowns.size(); ++j) assignment[unknowns[j]] = (*x)[j];
    return assignment;
}

} // namespace

ShiftedSearchOutcome search_preimage_shifted(const PolyMap& phi, const Point& x, int n, int shift,
                                             const ImageSearchOptions& opts) {
    if (x.space() != phi.target()) throw space_mismatch("target point is not on the target space");
    ShiftedSearchOutcome outcome;
    const int m = stabilization_bound(phi, n, shift);

    ConstraintSystem sys = lnm_constraints(phi, n, m, shift);
    std::vector<Poly> equations = sys.constraints;
    std::vector<Rational> target = x.coordinates();
    for (std::size_t j = 0; j < sys.evaluation.size(); ++j)
        equations.push_back(sys.evaluation[j] - Poly::constant(target[j]));

    auto verify = [&](const std::map<VarId, Rational>& assignment)
        -> std::optional<LaurentPoint> {
        LaurentPoint y = witness_from_assignment(phi.source(), n, m, assignment);
        LaurentPoint image = substitute_laurent(phi, y);
        auto mn = image.min_exponent();
        if (mn && *mn < shift) return std::nullopt;
        if (image.coeff(shift) != x) return std::nullopt;
        return y;
    };

    // route 1: multilinear structure, sample one side and solve linearly
    if (auto side = linear_side(phi)) {
        SplitMix64 rng(opts.seed);
        for (int attempt = 0; attempt < opts.fix_attempts; ++attempt) {
            auto assignment = fix_and_solve(phi, equations, n, m, *side, rng);
            if (!assignment) continue;
            if (auto y = verify(*assignment)) {
                outcome.status = SolveStatus::Solved;
                outcome.witness = std::move(*y);
                outcome.note = "found by block sampling";
                return outcome;
            }
        }
    }

    // route 2: general rational solve
    SolveOptions sopts;
    sopts.gb_budget = opts.gb_budget;
    sopts.seed = opts.seed;
    sopts.slice_attempts = opts.slice_attempts;
    SolveResult res = rational_solve(equations, sys.variables, sopts);
    if (res.status == SolveStatus::Solved) {
        if (auto y = verify(res.assignment)) {
            outcome.status = SolveStatus::Solved;
            outcome.witness = std::move(*y);
            outcome.note = "found by elimination";
            return outcome;
        }
        outcome.status = SolveStatus::Unknown;
        outcome.note = "solver output failed verification";
        return outcome;
    }
    outcome.status = res.status;
    outcome.note = res.note;
    return outcome;
}

ImageSearchResult image_search(const PolyMap& phi, const Point& x, const ImageSearchOptions& opts) {
    ImageSearchResult result;
    for (int n = 0; n <= opts.n_max; ++n) {
        ShiftedSearchOutcome outcome = search_preimage_shifted(phi, x, n, 0, opts);
        if (outcome.status == SolveStatus::Solved) {
            result.found = true;
            result.witness = std::move(outcome.witness);
            result.n_used = n;
            result.notes.push_back("n=" + std::to_string(n) + ": " + outcome.note);
            return result;
        }
        if (outcome.status == SolveStatus::UnsatOverClosure) {
            result.notes.push_back("n=" + std::to_string(n) + ": empty over the closure");
        } else {
            result.exhausted_definitively = false;
            result.notes.push_back("n=" + std::to_string(n) + ": inconclusive (" + outcome.note + ")");
        }
    }
    return result;
}

} // namespace borderlim

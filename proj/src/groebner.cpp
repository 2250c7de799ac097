#include "borderlim/groebner.hpp"

#include "borderlim/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace borderlim {

long long default_gb_budget() {
    if (const char* env = std::getenv("BORDERLIM_GB_BUDGET")) {
        long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return 2'000'000;
}

Monomial leading_monomial(const Poly& p, const MonomialOrder& order) {
    if (p.is_zero()) throw error("leading monomial of zero");
    auto it = p.terms().begin();
    Monomial best = it->first;
    for (++it; it != p.terms().end(); ++it)
        if (order.less(best, it->first)) best = it->first;
    return best;
}

Rational leading_coefficient(const Poly& p, const MonomialOrder& order) {
    return p.coefficient(leading_monomial(p, order));
}

namespace {

struct OrderLess {
    const MonomialOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order->less(a, b); }
};

using OrderedTerms = std::map<Monomial, Rational, OrderLess>;

OrderedTerms to_ordered(const Poly& p, const MonomialOrder& order) {
    OrderedTerms t(OrderLess{&order});
    for (const auto& [m, c] : p.terms()) t.emplace(m, c);
    return t;
}

Poly from_ordered(const OrderedTerms& t) {
    Poly p;
    for (const auto& [m, c] : t) p.add_term(c, m);
    return p;
}

void charge(long long* budget, long long amount) {
    if (!budget) return;
    *budget -= amount;
    if (*budget < 0) throw resource_limit("step budget exhausted during basis computation");
}

} // namespace

Poly reduce(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& order,
            long long* step_budget) {
    if (f.is_zero() || basis.empty()) return f;
    std::vector<Monomial> lts;
    std::vector<Rational> ltcs;
    lts.reserve(basis.size());
    for (const auto& g : basis) {
        lts.push_back(leading_monomial(g, order));
        ltcs.push_back(g.coefficient(lts.back()));
    }

    OrderedTerms rest = to_ordered(f, order);
    Poly remainder;
    while (!rest.empty()) {
        auto lead = std::prev(rest.end());
        Monomial mono = lead->first;
        Rational coeff = lead->second;
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            auto q = mono.divide(lts[i]);
            if (!q) continue;
            // rest -= (coeff/ltc) * q * basis[i]
            Rational factor = coeff / ltcs[i];
            charge(step_budget, static_cast<long long>(basis[i].term_count()));
            for (const auto& [m, c] : basis[i].terms()) {
                Monomial target = m * *q;
                Rational delta = -factor * c;
                auto [it, inserted] = rest.emplace(target, delta);
                if (!inserted) {
                    it->second += delta;
                    if (it->second == 0) rest.erase(it);
                }
            }
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.add_term(coeff, mono);
            rest.erase(std::prev(rest.end()));
        }
    }
    return remainder;
}

namespace {

struct Pair {
    std::size_t i, j;
    Monomial lcm;
};

} // namespace

Ideal buchberger(Ideal ideal, const GroebnerOptions& opts) {
    long long budget = opts.step_budget;
    const MonomialOrder& order = ideal.order;

    std::vector<Poly> basis;
    for (const auto& g : ideal.generators)
        if (!g.is_zero()) basis.push_back(g);

    std::vector<Monomial> lts;
    for (const auto& g : basis) lts.push_back(leading_monomial(g, order));

    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> processed;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) pending.push_back({i, j, lts[i].lcm(lts[j])});
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs_for(j);

    while (!pending.empty()) {
        charge(&budget, 1);
        // normal selection: smallest lcm under the order
        auto best = pending.begin();
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it)
            if (order.less(it->lcm, best->lcm)) best = it;
        Pair pair = *best;
        pending.erase(best);
        processed.insert({pair.i, pair.j});

        // product criterion
        if (lts[pair.i].coprime(lts[pair.j])) continue;
        // chain criterion
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pair.i || k == pair.j) continue;
            if (!lts[k].divides(pair.lcm)) continue;
            auto key1 = std::minmax(pair.i, k);
            auto key2 = std::minmax(pair.j, k);
            if (processed.count({key1.first, key1.second}) && processed.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip) continue;

        // s-polynomial
        Monomial qi = *pair.lcm.divide(lts[pair.i]);
        Monomial qj = *pair.lcm.divide(lts[pair.j]);
        Poly s = basis[pair.i] * Poly(Rational(1) / basis[pair.i].coefficient(lts[pair.i]), qi) -
                 basis[pair.j] * Poly(Rational(1) / basis[pair.j].coefficient(lts[pair.j]), qj);
        Poly r = reduce(s, basis, order, &budget);
        if (r.is_zero()) continue;
        basis.push_back(r);
        lts.push_back(leading_monomial(r, order));
        push_pairs_for(basis.size() - 1);
    }

    // minimalize: drop elements whose leading term is divisible by another's
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (lts[j].divides(lts[i]) && !(lts[i] == lts[j] && j > i)) keep[i] = false;
        }
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(basis[i]);

    // interreduce tails and normalize to monic
    std::vector<Poly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly r = reduce(minimal[i], others, order, &budget);
        if (!r.is_zero()) reduced.push_back(r * (Rational(1) / leading_coefficient(r, order)));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return order.less(leading_monomial(a, order), leading_monomial(b, order));
    });
    ideal.basis = std::move(reduced);
    return ideal;
}

Poly normal_form(const Poly& f, const Ideal& ideal) {
    if (!ideal.has_basis()) throw basis_missing("normal form requires a computed basis");
    return reduce(f, *ideal.basis, ideal.order, nullptr);
}

namespace {

std::string unique_target_name(const CoordSpace& target, const CoordSpace& source, std::size_t slot) {
    std::string name = target.slot_name(slot);
    bool clash = true;
    while (clash) {
        clash = false;
        for (std::size_t i = 0; i < source.slot_count(); ++i)
            if (source.slot_name(i) == name) {
                name += "_out";
                clash = true;
            }
    }
    return name;
}

} // namespace

VarId implicitize_target_var(const PolyMap& phi, std::size_t slot, std::size_t coord) {
    std::string name = unique_target_name(phi.target(), phi.source(), slot);
    return slot_coord_var(name, static_cast<int>(slot), static_cast<int>(coord));
}

Ideal implicitize(const PolyMap& phi, const GroebnerOptions& opts) {
    std::set<VarId> source_vars;
    for (VarId v : phi.coordinate_vars()) source_vars.insert(v);

    std::vector<Poly> graph;
    std::size_t comp_index = 0;
    for (std::size_t j = 0; j < phi.target().slot_count(); ++j)
        for (long long c = 0; c < phi.target().slot_dim(j); ++c, ++comp_index) {
            Poly rel = Poly::variable(implicitize_target_var(phi, j, static_cast<std::size_t>(c))) -
                       phi.components()[comp_index];
            graph.push_back(std::move(rel));
        }

    Ideal full{std::move(graph), MonomialOrder::elimination(source_vars), std::nullopt};
    full = buchberger(full, opts);

    // keep the basis elements free of source variables
    std::vector<Poly> eliminated;
    for (const auto& g : *full.basis) {
        bool clean = true;
        for (VarId v : g.variables())
            if (source_vars.count(v)) {
                clean = false;
                break;
            }
        if (clean) eliminated.push_back(g);
    }
    Ideal image{std::move(eliminated), MonomialOrder::grevlex(), std::nullopt};
    return buchberger(image, opts);
}

bool border_membership(const Point& f, const Ideal& image_ideal, const PolyMap& phi) {
    if (f.space() != phi.target()) throw space_mismatch("point is not on the target space");
    std::map<VarId, Rational> values;
    std::vector<Rational> coords = f.coordinates();
    std::size_t index = 0;
    for (std::size_t j = 0; j < phi.target().slot_count(); ++j)
        for (long long c = 0; c < phi.target().slot_dim(j); ++c, ++index)
            values[implicitize_target_var(phi, j, static_cast<std::size_t>(c))] = coords[index];
    const std::vector<Poly>& gens = image_ideal.has_basis() ? *image_ideal.basis : image_ideal.generators;
    for (const auto& g : gens)
        if (g.evaluate(values) != 0) return false;
    return true;
}

bool border_membership(const Point& f, const PolyMap& phi, const GroebnerOptions& opts) {
    return border_membership(f, implicitize(phi, opts), phi);
}

} // namespace borderlim

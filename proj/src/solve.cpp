#include "borderlim/solve.hpp"

#include "borderlim/errors.hpp"

#include <algorithm>

namespace borderlim {

std::uint64_t SplitMix64::next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long long SplitMix64::range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

namespace {

std::vector<Integer> divisors_with_budget(Integer n, bool& complete) {
    n = boost::multiprecision::abs(n);
    std::vector<std::pair<Integer, int>> factors;
    if (n == 0) {
        complete = true;
        return {};
    }
    Integer p = 2;
    long long trials = 0;
    while (n > 1) {
        if (p * p > n) {
            factors.push_back({n, 1});
            break;
        }
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            factors.push_back({p, e});
        }
        p += (p == 2) ? 1 : 2;
        if (++trials > 200000) {
            // leave the unfactored cofactor as one pseudo-prime divisor
            if (n > 1) factors.push_back({n, 1});
            complete = false;
            break;
        }
    }
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [prime, mult] : factors) {
        std::size_t base = divs.size();
        Integer power = 1;
        for (int e = 1; e <= mult; ++e) {
            power *= prime;
            for (std::size_t i = 0; i < base; ++i) {
                divs.push_back(divs[i] * power);
                if (divs.size() > 4096) {
                    complete = false;
                    return divs;
                }
            }
        }
    }
    return divs;
}

} // namespace

RationalRoots rational_roots(const Poly& p, VarId var) {
    RationalRoots result;
    if (p.is_zero()) throw error("rational roots of the zero polynomial");

    // integer coefficient vector by degree in var, denominators cleared
    int deg = 0;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [v, e] : m.entries())
            if (v != var) throw error("rational_roots expects a univariate polynomial");
        deg = std::max(deg, m.degree());
    }
    Integer lcm = 1;
    for (const auto& [m, c] : p.terms()) lcm = boost::multiprecision::lcm(lcm, denominator(c));
    std::vector<Integer> coeff(static_cast<std::size_t>(deg) + 1, Integer(0));
    for (const auto& [m, c] : p.terms())
        coeff[static_cast<std::size_t>(m.degree())] = numerator(c) * (lcm / denominator(c));

    // factor out powers of var: 0 is a root
    std::size_t low = 0;
    while (low < coeff.size() && coeff[low] == 0) ++low;
    if (low > 0) result.roots.push_back(Rational(0));
    if (low == coeff.size() || low == static_cast<std::size_t>(deg)) return result;

    Integer a0 = coeff[low];
    Integer ad = coeff[deg];
    bool complete0 = true, completed = true;
    std::vector<Integer> ps = divisors_with_budget(a0, complete0);
    std::vector<Integer> qs = divisors_with_budget(ad, completed);
    result.complete = complete0 && completed;

    auto eval_at = [&](const Rational& x) {
        Rational acc = 0;
        for (std::size_t k = coeff.size(); k-- > low;) acc = acc * x + Rational(coeff[k]);
        return acc;
    };
    for (const Integer& pn : ps)
        for (const Integer& qn : qs)
            for (int sign : {1, -1}) {
                Rational candidate(pn * sign, qn);
                if (std::find(result.roots.begin(), result.roots.end(), candidate) != result.roots.end())
                    continue;
                if (eval_at(candidate) == 0) result.roots.push_back(candidate);
            }
    return result;
}

namespace {

struct Triangular {
    // substitutions in solve order: var = expression over later-solved vars
    std::vector<std::pair<VarId, Poly>> steps;

    void finalize(std::map<VarId, Rational>& assignment) const {
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
            std::map<VarId, Rational> partial = assignment;
            assignment[it->first] = it->second.evaluate(partial);
        }
    }
};

// substitute and drop trivial equations; returns false when a nonzero
// constant appears (system unsatisfiable)
bool substitute_all(std::vector<Poly>& eqs, const std::map<VarId, Poly>& sub) {
    std::vector<Poly> out;
    for (const auto& eq : eqs) {
        Poly r = eq.substitute_partial(sub);
        if (r.is_zero()) continue;
        if (r.is_constant()) return false;
        out.push_back(std::move(r));
    }
    eqs = std::move(out);
    return true;
}

// repeatedly solve total-degree-1 equations
enum class PropagateStatus { Ok, Unsat };
PropagateStatus propagate_linear(std::vector<Poly>& eqs, std::vector<VarId>& unknowns,
                                 Triangular& tri) {
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < eqs.size(); ++i) {
            const Poly& eq = eqs[i];
            if (eq.is_zero()) continue;
            if (eq.is_constant()) return PropagateStatus::Unsat;
            if (eq.total_degree() != 1) continue;
            // c*v + rest = 0  ->  v = -rest/c
            VarId v = eq.terms().rbegin()->first.entries()[0].first;
            Rational c = eq.terms().rbegin()->second;
            Poly rest = eq - Poly(c, Monomial::var(v));
            Poly expr = rest * (Rational(-1) / c);
            tri.steps.push_back({v, expr});
            std::map<VarId, Poly> sub{{v, expr}};
            if (!substitute_all(eqs, sub)) return PropagateStatus::Unsat;
            unknowns.erase(std::remove(unknowns.begin(), unknowns.end(), v), unknowns.end());
            progress = true;
            break;
        }
    }
    return PropagateStatus::Ok;
}

// back-substitution over a zero-dimensional lex basis
bool solve_zero_dim(const std::vector<Poly>& basis, std::vector<VarId> unknowns,
                    std::map<VarId, Rational>& assignment, int& branches, bool& roots_complete) {
    if (unknowns.empty()) {
        for (const auto& g : basis) {
            Poly r = g.substitute_partial({});
            if (!r.is_zero() && !(r.is_constant() && r.constant_value() == 0)) return false;
        }
        return true;
    }
    // least unknown in the canonical order solves first
    VarId least = unknowns[0];
    for (VarId v : unknowns)
        if (VarTable::greater(least, v)) least = v;

    // find a generator univariate in the least unknown
    const Poly* uni = nullptr;
    for (const auto& g : basis) {
        bool ok = !g.is_zero() && !g.is_constant();
        for (VarId v : g.variables())
            if (v != least) ok = false;
        if (ok && (!uni || g.total_degree() < uni->total_degree())) uni = &g;
    }
    if (!uni) return false;  // not triangular here; caller treats as no point found

    RationalRoots roots = rational_roots(*uni, least);
    if (!roots.complete) roots_complete = false;
    std::vector<VarId> rest;
    for (VarId v : unknowns)
        if (v != least) rest.push_back(v);
    for (const Rational& r : roots.roots) {
        if (--branches < 0) return false;
        std::map<VarId, Poly> sub{{least, Poly::constant(r)}};
        std::vector<Poly> reduced;
        bool dead = false;
        for (const auto& g : basis) {
            Poly q = g.substitute_partial(sub);
            if (q.is_zero()) continue;
            if (q.is_constant()) {
                dead = true;
                break;
            }
            reduced.push_back(std::move(q));
        }
        if (dead) continue;
        assignment[least] = r;
        if (solve_zero_dim(reduced, rest, assignment, branches, roots_complete)) return true;
        assignment.erase(least);
    }
    return false;
}

bool is_zero_dimensional(const std::vector<Poly>& basis, const std::vector<VarId>& unknowns,
                         const MonomialOrder& order) {
    for (VarId v : unknowns) {
        bool covered = false;
        for (const auto& g : basis) {
            Monomial lt = leading_monomial(g, order);
            const auto& es = lt.entries();
            if (es.size() == 1 && es[0].first == v) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

SolveResult solve_core(std::vector<Poly> eqs, std::vector<VarId> unknowns, const SolveOptions& opts);

SolveResult try_slices(const std::vector<Poly>& eqs, const std::vector<VarId>& unknowns,
                       const SolveOptions& opts, int dim_guess) {
    SolveOptions inner = opts;
    inner.allow_slicing = false;
    SplitMix64 rng(opts.seed * 0x9e3779b97f4a7c15ULL + 17);

    bool any_unknown = false;
    int attempt = 0;
    // axis-aligned normalizations first: single unknowns pinned to 1
    if (dim_guess == 1) {
        for (VarId v : unknowns) {
            if (attempt++ >= opts.slice_attempts + static_cast<int>(unknowns.size())) break;
            std::vector<Poly> sliced = eqs;
            sliced.push_back(Poly::variable(v) - Poly::constant(1));
            SolveResult r = solve_core(sliced, unknowns, inner);
            if (r.status == SolveStatus::Solved) return r;
            if (r.status == SolveStatus::Unknown) any_unknown = true;
        }
    }
    for (int a = 0; a < opts.slice_attempts; ++a) {
        int count = dim_guess + a / 3;
        std::vector<Poly> sliced = eqs;
        for (int s = 0; s < count; ++s) {
            Poly plane;
            for (VarId v : unknowns) {
                long long c = rng.range(-2, 2);
                if (c != 0) plane += Poly(Rational(c), Monomial::var(v));
            }
            plane += Poly::constant(Rational(rng.range(0, 2)));
            if (plane.is_zero() || plane.is_constant()) {
                --s;  // degenerate draw, redo
                continue;
            }
            sliced.push_back(plane);
        }
        SolveResult r = solve_core(sliced, unknowns, inner);
        if (r.status == SolveStatus::Solved) return r;
        if (r.status == SolveStatus::Unknown) any_unknown = true;
    }
    SolveResult out;
    out.status = SolveStatus::Unknown;
    out.note = any_unknown ? "sliced subsystems stayed unresolved" : "no rational point on the sampled slices";
    return out;
}

SolveResult solve_core(std::vector<Poly> eqs, std::vector<VarId> unknowns, const SolveOptions& opts) {
    SolveResult result;
    Triangular tri;

    // quick syntactic pass
    std::map<VarId, Poly> empty_sub;
    if (!substitute_all(eqs, empty_sub)) {
        result.status = SolveStatus::UnsatOverClosure;
        result.note = "a nonzero constant equation";
        return result;
    }
    if (propagate_linear(eqs, unknowns, tri) == PropagateStatus::Unsat) {
        result.status = SolveStatus::UnsatOverClosure;
        result.note = "linear elimination reached a contradiction";
        return result;
    }
    if (eqs.empty()) {
        for (VarId v : unknowns) result.assignment[v] = 0;
        tri.finalize(result.assignment);
        result.status = SolveStatus::Solved;
        return result;
    }

    // drop unknowns that no longer occur; they are free
    std::set<VarId> occurring;
    for (const auto& eq : eqs)
        for (VarId v : eq.variables()) occurring.insert(v);
    std::vector<VarId> active;
    std::vector<VarId> free_vars;
    for (VarId v : unknowns)
        (occurring.count(v) ? active : free_vars).push_back(v);

    GroebnerOptions gopts{opts.gb_budget};
    Ideal ideal{eqs, MonomialOrder::grevlex(), std::nullopt};
    try {
        ideal = buchberger(ideal, gopts);
    } catch (const resource_limit&) {
        result.status = SolveStatus::Unknown;
        result.note = "basis budget exhausted";
        return result;
    }
    const std::vector<Poly>& gb = *ideal.basis;
    if (gb.size() == 1 && gb[0].is_constant()) {
        result.status = SolveStatus::UnsatOverClosure;
        result.note = "basis is the unit ideal";
        return result;
    }

    if (is_zero_dimensional(gb, active, ideal.order)) {
        Ideal lexi{gb, MonomialOrder::lex(), std::nullopt};
        try {
            lexi = buchberger(lexi, gopts);
        } catch (const resource_limit&) {
            result.status = SolveStatus::Unknown;
            result.note = "lex basis budget exhausted";
            return result;
        }
        int branches = opts.max_branches;
        bool roots_complete = true;
        std::map<VarId, Rational> assignment;
        if (solve_zero_dim(*lexi.basis, active, assignment, branches, roots_complete)) {
            for (VarId v : free_vars) assignment[v] = 0;
            tri.finalize(assignment);
            result.assignment = std::move(assignment);
            result.status = SolveStatus::Solved;
            return result;
        }
        result.status = SolveStatus::Unknown;
        result.note = roots_complete ? "zero-dimensional system has no rational point"
                                     : "root search incomplete on a zero-dimensional system";
        return result;
    }

    if (!opts.allow_slicing) {
        result.status = SolveStatus::Unknown;
        result.note = "positive-dimensional and slicing disabled";
        return result;
    }
    int dim_guess = std::max(1, static_cast<int>(active.size()) - static_cast<int>(eqs.size()));
    SolveResult sliced = try_slices(eqs, active, opts, dim_guess);
    if (sliced.status == SolveStatus::Solved) {
        for (VarId v : free_vars) sliced.assignment[v] = 0;
        tri.finalize(sliced.assignment);
    }
    return sliced;
}

} // namespace

SolveResult rational_solve(const std::vector<Poly>& equations, const std::vector<VarId>& unknowns,
                           const SolveOptions& opts) {
    SolveResult result = solve_core(equations, unknowns, opts);
    if (result.status == SolveStatus::Solved) {
        // verify against the original system; a failed check downgrades to Unknown
        for (const auto& eq : equations) {
            if (eq.evaluate(result.assignment) != 0) {
                SolveResult bad;
                bad.status = SolveStatus::Unknown;
                bad.note = "internal verification failed";
                return bad;
            }
        }
    }
    return result;
}

} // namespace borderlim

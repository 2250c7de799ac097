#include "borderlim/strength.hpp"

#include "borderlim/diophantine.hpp"
#include "borderlim/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstdio>

namespace borderlim {

DegreeSplitting DegreeSplitting::make(int d, std::vector<int> e) {
    if (d < 2) throw invalid_splitting("total degree must be at least 2");
    if (e.empty()) throw invalid_splitting("at least one factor pair required");
    for (int ei : e)
        if (ei < 1 || ei > d - 1)
            throw invalid_splitting("factor degrees must lie strictly between 0 and d");
    std::sort(e.begin(), e.end());
    return DegreeSplitting{d, std::move(e)};
}

SlotMap strength_slot_map(const DegreeSplitting& splitting) {
    std::vector<int> degrees;
    std::vector<std::string> names;
    for (int i = 0; i < splitting.r(); ++i) {
        degrees.push_back(splitting.e[static_cast<std::size_t>(i)]);
        degrees.push_back(splitting.d - splitting.e[static_cast<std::size_t>(i)]);
        names.push_back("g" + std::to_string(i + 1));
        names.push_back("h" + std::to_string(i + 1));
    }
    Poly sum;
    for (int i = 0; i < splitting.r(); ++i) {
        Poly gi = Poly::variable(slot_symbol(names[static_cast<std::size_t>(2 * i)], 2 * i));
        Poly hi = Poly::variable(slot_symbol(names[static_cast<std::size_t>(2 * i + 1)], 2 * i + 1));
        sum += gi * hi;
    }
    return SlotMap::make(degrees, names, {splitting.d}, {std::move(sum)}, {"F"});
}

PolyMap strength_map(const DegreeSplitting& splitting, int level) {
    if (level < 1) throw error("level must be at least 1");
    return PolyMap::from_slot_map(strength_slot_map(splitting), level);
}

int quadratic_strength(const Poly& f, int nvars) {
    QMatrix m = gram_matrix(f, nvars);
    std::size_t rank = m.rank();
    return static_cast<int>((rank + 1) / 2);
}

bool quadratic_border_excluded(const Poly& f, int r) {
    QMatrix m = gram_matrix(f);
    return m.rank() > 2 * static_cast<std::size_t>(r);
}

namespace {

int form_level(const Poly& f, int nvars) {
    int n = nvars;
    for (VarId v : f.variables()) {
        const VarKey& k = VarTable::key(v);
        if (k.stem != "x" || k.num < 1 || k.coord != -1 || k.has_exp)
            throw error("forms must be written in the variables x1, x2, ...");
        n = std::max(n, static_cast<int>(k.num));
    }
    return n;
}

} // namespace

bool verify_decomposition(const Poly& f, const DegreeSplitting& splitting,
                          const std::vector<Poly>& factors) {
    if (static_cast<int>(factors.size()) != 2 * splitting.r())
        throw degree_mismatch("expected 2r factor forms");
    if (!f.is_zero() && !f.is_homogeneous(splitting.d))
        throw degree_mismatch("form degree does not match the splitting");
    Poly sum;
    for (int i = 0; i < splitting.r(); ++i) {
        const Poly& g = factors[static_cast<std::size_t>(2 * i)];
        const Poly& h = factors[static_cast<std::size_t>(2 * i + 1)];
        int eg = splitting.e[static_cast<std::size_t>(i)];
        if (!g.is_zero() && !g.is_homogeneous(eg))
            throw degree_mismatch("factor g" + std::to_string(i + 1) + " has the wrong degree");
        if (!h.is_zero() && !h.is_homogeneous(splitting.d - eg))
            throw degree_mismatch("factor h" + std::to_string(i + 1) + " has the wrong degree");
        sum += g * h;
    }
    return sum == f;
}

LaurentPoint Certificate::combined_source_point() const {
    SlotMap m = strength_slot_map(splitting);
    CoordSpace source = m.source_space(level);
    if (static_cast<int>(factors.size()) != 2 * splitting.r())
        throw degree_mismatch("certificate must carry 2r Laurent factors");
    LaurentPoint combined(source);
    std::set<int> exponents;
    for (const auto& factor : factors)
        for (const auto& [e, p] : factor.coeffs()) exponents.insert(e);
    for (int e : exponents) {
        std::vector<Poly> forms;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const LaurentPoint& factor = factors[i];
            if (factor.space().slot_count() != 1)
                throw space_mismatch("certificate factors must live on one-slot spaces");
            if (factor.space().level() != level)
                throw level_mismatch("certificate factor level differs from the certificate level");
            if (factor.space().slot_degree(0) != source.slot_degree(i))
                throw degree_mismatch("certificate factor degree does not match the splitting");
            forms.push_back(factor.coeff(e).form(0));
        }
        combined.set_coeff(e, Point(source, std::move(forms)));
    }
    return combined;
}

CertificateCheck verify_border_certificate(const Poly& f, const Certificate& cert) {
    if (cert.s < 0) throw error("certificate shift must be non-negative");
    if (!f.is_zero() && !f.is_homogeneous(cert.splitting.d))
        throw degree_mismatch("form degree does not match the certificate splitting");
    form_level(f, cert.level);  // validates the variables

    PolyMap mu = strength_map(cert.splitting, cert.level);
    LaurentPoint y = cert.combined_source_point();
    LaurentPoint product = substitute_laurent(mu, y);

    CertificateCheck check;
    check.product = product;
    LaurentPoint shifted = shift_exponent(product, cert.s);
    auto mn = shifted.min_exponent();
    if (mn && *mn < 0) {
        check.status = CertificateCheck::Status::RejectedPole;
        check.pole_exponent = *mn;
        return check;
    }
    Point target(mu.target(), {f});
    if (shifted.coeff(0) != target) {
        check.status = CertificateCheck::Status::RejectedWrongLimit;
        return check;
    }
    check.status = CertificateCheck::Status::Accepted;
    check.sigma_witness = cert.s;
    return check;
}

// ---------------------------------------------------------------------------
// Quadratic decomposition over the rationals.

namespace {

struct SymDecomposer {
    std::vector<std::pair<Poly, Poly>> products;
    std::vector<std::pair<Rational, Poly>> squares;  // c * y^2

    // decompose v^T M v over the linear forms `basis`
    void run(QMatrix m, std::vector<Poly> basis) {
        const std::size_t n = basis.size();
        std::vector<bool> active(n, true);
        std::size_t remaining = n;
        while (remaining > 0) {
            // a zero diagonal entry with a cross term yields a hyperbolic
            // plane; shear the partner's diagonal away first if needed
            for (std::size_t i = 0; i < n; ++i) {
                if (!active[i] || m.at(i, i) != 0) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (!active[j] || j == i || m.at(i, j) == 0 || m.at(j, j) == 0) continue;
                    Rational gamma = -m.at(j, j) / (2 * m.at(i, j));
                    for (std::size_t p = 0; p < n; ++p) m.at(p, j) += gamma * m.at(p, i);
                    for (std::size_t q = 0; q < n; ++q) m.at(j, q) += gamma * m.at(i, q);
                    basis[i] -= basis[j] * gamma;
                }
            }
            // hyperbolic pivot: both diagal entries zero, off-diagonal not
            std::optional<std::pair<std::size_t, std::size_t>> hyper;
            for (std::size_t i = 0; i < n && !hyper; ++i) {
                if (!active[i] || m.at(i, i) != 0) continue;
                for (std::size_t j = i + 1; j < n && !hyper; ++j) {
                    if (!active[j] || m.at(j, j) != 0) continue;
                    if (m.at(i, j) != 0) hyper = {{i, j}};
                }
            }
            if (hyper) {
                auto [i, j] = *hyper;
                Rational c = 2 * m.at(i, j);
                // f = c x_i x_j + x_i B + x_j A + C with A from row j, B from row i
                Poly formA, formB;
                std::vector<Rational> a(n, Rational(0)), b(n, Rational(0));
                for (std::size_t k = 0; k < n; ++k) {
                    if (!active[k] || k == i || k == j) continue;
                    a[k] = 2 * m.at(j, k);
                    b[k] = 2 * m.at(i, k);
                    formA += basis[k] * a[k];
                    formB += basis[k] * b[k];
                }
                Poly g = basis[i] * c + formA;
                Poly h = basis[j] + formB * (Rational(1) / c);
                products.push_back({g, h});
                // remainder: C - A B / c on the other coordinates
                for (std::size_t p = 0; p < n; ++p) {
                    if (!active[p] || p == i || p == j) continue;
                    for (std::size_t q = 0; q < n; ++q) {
                        if (!active[q] || q == i || q == j) continue;
                        m.at(p, q) -= (a[p] * b[q] + b[p] * a[q]) / (2 * c);
                    }
                }
                active[i] = active[j] = false;
                remaining -= 2;
                continue;
            }
            // square pivot: a nonzero diagonal entry
            std::optional<std::size_t> pivot;
            for (std::size_t i = 0; i < n && !pivot; ++i)
                if (active[i] && m.at(i, i) != 0) pivot = i;
            if (!pivot) break;  // remaining block is zero
            std::size_t i = *pivot;
            Rational c = m.at(i, i);
            std::vector<Rational> row(n, Rational(0));
            Poly y = basis[i];
            for (std::size_t k = 0; k < n; ++k) {
                if (!active[k] || k == i) continue;
                row[k] = m.at(i, k);
                y += basis[k] * (row[k] / c);
            }
            squares.push_back({c, y});
            for (std::size_t p = 0; p < n; ++p) {
                if (!active[p] || p == i) continue;
                for (std::size_t q = 0; q < n; ++q) {
                    if (!active[q] || q == i) continue;
                    m.at(p, q) -= row[p] * row[q] / c;
                }
            }
            active[i] = false;
            --remaining;
        }
    }
};

// c1 y1^2 + c2 y2^2 = (c1 y1 - s y2)(y1 + (s/c1) y2) when s^2 = -c1 c2
std::optional<std::pair<Poly, Poly>> pair_squares(const Rational& c1, const Poly& y1,
                                                  const Rational& c2, const Poly& y2) {
    auto s = rational_sqrt(-c1 * c2);
    if (!s) return std::nullopt;
    Poly g = y1 * c1 - y2 * (*s);
    Poly h = y1 + y2 * (*s / c1);
    return {{g, h}};
}

// rational isotropic vector of a diagonal form: exact on pairs and (by
// descent) on triples; a split form always yields one through some triple
std::optional<std::vector<Rational>> isotropic_vector(const std::vector<Rational>& c) {
    const std::size_t k = c.size();
    if (k < 2) return std::nullopt;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            auto s = rational_sqrt(-c[i] / c[j]);
            if (!s) continue;
            std::vector<Rational> v(k, Rational(0));
            v[i] = 1;
            v[j] = *s;
            return v;
        }
    if (k < 3) return std::nullopt;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            for (std::size_t l = j + 1; l < k; ++l) {
                auto sol = solve_ternary(c[i], c[j], c[l]);
                if (!sol) continue;
                std::vector<Rational> v(k, Rational(0));
                v[i] = (*sol)[0];
                v[j] = (*sol)[1];
                v[l] = (*sol)[2];
                return v;
            }
    if (k < 4) return std::nullopt;
    // quaternary support: the two binary halves must represent a common
    // value; each candidate check is one ternary solve
    std::vector<std::array<std::size_t, 4>> quads;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            for (std::size_t l = j + 1; l < k; ++l)
                for (std::size_t w = l + 1; w < k; ++w) quads.push_back({i, j, l, w});
    for (const auto& q : quads) {
        std::vector<Rational> d_candidates;
        d_candidates.push_back(c[q[0]] + c[q[1]]);
        d_candidates.push_back(c[q[2]] + c[q[3]]);
        for (int d = 1; d <= 40; ++d) {
            d_candidates.push_back(Rational(d));
            d_candidates.push_back(Rational(-d));
        }
        for (const Rational& d : d_candidates) {
            if (d == 0) continue;
            auto s1 = solve_ternary(c[q[0]], c[q[1]], -d);
            if (!s1 || (*s1)[2] == 0) continue;
            auto s2 = solve_ternary(c[q[2]], c[q[3]], d);
            if (!s2 || (*s2)[2] == 0) continue;
            std::vector<Rational> v(k, Rational(0));
            v[q[0]] = (*s1)[0] / (*s1)[2];
            v[q[1]] = (*s1)[1] / (*s1)[2];
            v[q[2]] = (*s2)[0] / (*s2)[2];
            v[q[3]] = (*s2)[1] / (*s2)[2];
            return v;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<QuadraticDecomposition> decompose_quadratic(const Poly& f, int nvars) {
    if (f.is_zero()) return QuadraticDecomposition{};
    const int n = static_cast<int>(gram_matrix(f, nvars).rows());

    std::vector<std::pair<Poly, Poly>> products;
    Poly work = f;
    int rounds = n + 2;
    while (!work.is_zero() && rounds-- > 0) {
        QMatrix m = gram_matrix(work, n);
        std::vector<Poly> basis;
        for (int i = 0; i < n; ++i) basis.push_back(Poly::variable(xvar(i + 1)));
        SymDecomposer dec;
        dec.run(m, basis);
        for (auto& p : dec.products) products.push_back(std::move(p));

        // pair squares by square class
        std::vector<std::pair<Rational, Poly>> squares = std::move(dec.squares);
        bool paired = true;
        while (paired && squares.size() >= 2) {
            paired = false;
            for (std::size_t i = 0; i < squares.size() && !paired; ++i)
                for (std::size_t j = i + 1; j < squares.size() && !paired; ++j) {
                    auto pr = pair_squares(squares[i].first, squares[i].second, squares[j].first,
                                           squares[j].second);
                    if (!pr) continue;
                    products.push_back(*pr);
                    squares.erase(squares.begin() + static_cast<std::ptrdiff_t>(j));
                    squares.erase(squares.begin() + static_cast<std::ptrdiff_t>(i));
                    paired = true;
                }
        }
        if (squares.size() < 2) {
            for (const auto& [c, y] : squares) products.push_back({y * c, y});
            work = Poly();
            break;
        }

        // unmatched classes: extract one hyperbolic plane through a rational
        // isotropic vector of the leftover diagonal form and go around again
        std::vector<Rational> cs;
        for (const auto& [c, y] : squares) cs.push_back(c);
        if (std::getenv("BORDERLIM_TRACE_DECOMP")) {
            fprintf(stderr, "round %d: %zu squares left, cs =", rounds, squares.size());
            for (const auto& c : cs) fprintf(stderr, " %s", rational_to_string(c).c_str());
            fprintf(stderr, "\n");
        }
        auto iso = isotropic_vector(cs);
        if (!iso) {
            for (const auto& [c, y] : squares) products.push_back({y * c, y});
            work = Poly();
            break;
        }
        // primitive integer scaling keeps the coefficients tame
        Integer lcm = 1;
        for (const auto& q : *iso) lcm = boost::multiprecision::lcm(lcm, denominator(q));
        Integer content = 0;
        std::vector<Integer> a(iso->size());
        for (std::size_t i = 0; i < iso->size(); ++i) {
            a[i] = numerator((*iso)[i]) * (lcm / denominator((*iso)[i]));
            content = boost::multiprecision::gcd(content, a[i]);
        }
        for (auto& x : a) x /= content;

        // u = sum a_i y_i is isotropic; beta(u, .) = sum c_i a_i y_i
        Poly dual_u;
        std::size_t anchor = squares.size();
        for (std::size_t i = 0; i < squares.size(); ++i) {
            dual_u += squares[i].second * (squares[i].first * Rational(a[i]));
            if (a[i] != 0 && anchor == squares.size()) anchor = i;
        }
        // v0 = e_anchor, s = beta(u, v0), v = v0 - (Q(v0)/(2s)) u isotropic
        Rational s = squares[anchor].first * Rational(a[anchor]);
        Poly dual_v = squares[anchor].second * squares[anchor].first -
                      dual_u * (squares[anchor].first / (2 * s));
        // Q = (2/s) beta(v,.) beta(u,.) + remainder on the orthocomplement
        Poly g = dual_v * (Rational(2) / s);
        products.push_back({g, dual_u});
        Poly residue;
        for (const auto& [c, y] : squares) residue += y * y * c;
        work = residue - g * dual_u;
    }

    // exactness check
    Poly sum;
    for (const auto& [g, h] : products) sum += g * h;
    if (sum != f) throw error("internal: quadratic decomposition lost exactness");
    return QuadraticDecomposition{std::move(products)};
}

// ---------------------------------------------------------------------------

std::vector<DegreeSplitting> enumerate_splittings(int d, int r) {
    std::vector<DegreeSplitting> out;
    std::vector<int> current(static_cast<std::size_t>(r));
    auto rec = [&](auto&& self, int index, int minimum) -> void {
        if (index == r) {
            out.push_back(DegreeSplitting{d, current});
            return;
        }
        for (int e = minimum; e <= d - 1; ++e) {
            current[static_cast<std::size_t>(index)] = e;
            self(self, index + 1, e);
        }
    };
    if (d >= 2 && r >= 1) rec(rec, 0, 1);
    return out;
}

SigmaSearchResult sigma_search(const Poly& f, int r, const SigmaSearchOptions& opts, int level) {
    SigmaSearchResult result;
    if (f.is_zero()) {
        result.outcome = SigmaSearchResult::Outcome::Inconclusive;
        result.note = "the zero form needs no certificate";
        return result;
    }
    const int d = f.total_degree();
    if (d < 2) throw degree_mismatch("strength needs degree at least 2");
    if (!f.is_homogeneous(d)) throw degree_mismatch("form must be homogeneous");
    const int n = std::max(form_level(f, level), 1);

    auto witness = [&](const DegreeSplitting& splitting, int s, const LaurentPoint& y)
        -> std::optional<Certificate> {
        // split the combined source point into per-factor Laurent points
        Certificate cert;
        cert.s = s;
        cert.splitting = splitting;
        cert.level = n;
        SlotMap m = strength_slot_map(splitting);
        for (std::size_t slot = 0; slot < m.source_degrees.size(); ++slot) {
            CoordSpace single(
                PartitionTuple({m.source_degrees[slot] == 0 ? Partition() : Partition({m.source_degrees[slot]})}),
                n, {m.source_names[slot]});
            LaurentPoint factor(single);
            for (const auto& [e, p] : y.coeffs()) factor.set_coeff(e, Point(single, {p.form(slot)}));
            cert.factors.push_back(std::move(factor));
        }
        CertificateCheck check = verify_border_certificate(f, cert);
        if (!check.accepted()) return std::nullopt;
        return cert;
    };

    std::vector<DegreeSplitting> splittings = enumerate_splittings(d, r);

    // rank shortcut for quadratics: the border locus is cut out by minors
    if (d == 2 && quadratic_border_excluded(f, r)) {
        result.outcome = SigmaSearchResult::Outcome::Inconclusive;
        result.note = "matrix rank exceeds 2r; the minor check excludes border membership";
        return result;
    }

    // constructive route for quadratics at s = 0
    if (d == 2) {
        auto dec = decompose_quadratic(f);
        if (dec && static_cast<int>(dec->products.size()) <= r) {
            DegreeSplitting splitting = DegreeSplitting::make(2, std::vector<int>(static_cast<std::size_t>(r), 1));
            Certificate cert;
            cert.s = 0;
            cert.splitting = splitting;
            cert.level = n;
            for (int i = 0; i < r; ++i) {
                Poly g, h;
                if (i < static_cast<int>(dec->products.size())) {
                    g = dec->products[static_cast<std::size_t>(i)].first;
                    h = dec->products[static_cast<std::size_t>(i)].second;
                }
                CoordSpace lin(PartitionTuple({Partition({1})}), n, {"g" + std::to_string(i + 1)});
                LaurentPoint gp(lin), hp(lin);
                gp.set_coeff(0, Point(lin, {g}));
                hp.set_coeff(0, Point(lin, {h}));
                cert.factors.push_back(std::move(gp));
                cert.factors.push_back(std::move(hp));
            }
            CertificateCheck check = verify_border_certificate(f, cert);
            if (check.accepted()) {
                result.outcome = SigmaSearchResult::Outcome::Witnessed;
                result.s = 0;
                result.certificate = std::move(cert);
                result.note = "exact decomposition by symmetric reduction";
                return result;
            }
        }
    }

    ImageSearchOptions sopts;
    sopts.gb_budget = opts.gb_budget;
    sopts.seed = opts.seed;
    sopts.fix_attempts = opts.fix_attempts;
    sopts.slice_attempts = opts.slice_attempts;

    bool all_definitive = true;
    for (int s = 0; s <= 2 * opts.n_max; ++s) {
        const int pole = (s + 1) / 2;
        for (const auto& splitting : splittings) {
            PolyMap mu = strength_map(splitting, n);
            Point target(mu.target(), {f});
            ShiftedSearchOutcome outcome = search_preimage_shifted(mu, target, pole, s, sopts);
            if (outcome.status == SolveStatus::Solved) {
                auto cert = witness(splitting, s, *outcome.witness);
                if (cert) {
                    result.outcome = SigmaSearchResult::Outcome::Witnessed;
                    result.s = s;
                    result.certificate = std::move(*cert);
                    result.note = outcome.note;
                    return result;
                }
                all_definitive = false;
            } else if (outcome.status != SolveStatus::UnsatOverClosure) {
                all_definitive = false;
            }
        }
    }
    result.outcome = SigmaSearchResult::Outcome::Inconclusive;
    result.note = all_definitive ? "every searched level is empty over the closure"
                                 : "no witness found within the search bounds";
    return result;
}

} // namespace borderlim

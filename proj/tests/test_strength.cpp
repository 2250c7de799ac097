#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "borderlim/groebner.hpp"
#include "borderlim/json_io.hpp"
#include "borderlim/strength.hpp"
#include "support.hpp"

using namespace borderlim;
using testing::Rng;

namespace {

Poly P(const std::string& s) { return Poly::parse(s); }

// the classical borderline for x1^2*x2: two products of linear forms
// whose sum is (1/3)((x1 + t x2)^3 - x1^3) = t x1^2 x2 + t^2 x1 x2^2 + (t^3/3) x2^3
Certificate waring_certificate(int s) {
    Certificate cert;
    cert.s = s;
    cert.splitting = DegreeSplitting::make(3, {1, 1});
    cert.level = 2;

    CoordSpace lin1(PartitionTuple({Partition({1})}), 2, {"g1"});
    CoordSpace quad1(PartitionTuple({Partition({2})}), 2, {"h1"});
    CoordSpace lin2(PartitionTuple({Partition({1})}), 2, {"g2"});
    CoordSpace quad2(PartitionTuple({Partition({2})}), 2, {"h2"});

    LaurentPoint g1(lin1), h1(quad1), g2(lin2), h2(quad2);
    g1.set_coeff(0, Point(lin1, {P("1/3*x1")}));
    g1.set_coeff(1, Point(lin1, {P("1/3*x2")}));
    h1.set_coeff(0, Point(quad1, {P("x1^2")}));
    h1.set_coeff(1, Point(quad1, {P("2*x1*x2")}));
    h1.set_coeff(2, Point(quad1, {P("x2^2")}));
    g2.set_coeff(0, Point(lin2, {P("-1/3*x1")}));
    h2.set_coeff(0, Point(quad2, {P("x1^2")}));

    cert.factors = {g1, h1, g2, h2};
    return cert;
}

Rng rng;

// random quadratic built as a sum of k products of independent linear forms
Poly random_split_quadratic(Rng& r, int nvars, int k, QMatrix* gram_out = nullptr) {
    while (true) {
        std::vector<Poly> forms;
        for (int i = 0; i < 2 * k; ++i) forms.push_back(r.linear_form(nvars));
        QMatrix coeffs(static_cast<std::size_t>(2 * k), static_cast<std::size_t>(nvars));
        for (int i = 0; i < 2 * k; ++i)
            for (int j = 1; j <= nvars; ++j)
                coeffs.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j - 1)) =
                    forms[static_cast<std::size_t>(i)].coefficient(Monomial::var(xvar(j)));
        if (coeffs.rank() != static_cast<std::size_t>(2 * k)) continue;  // forms must be independent
        Poly f;
        for (int i = 0; i < k; ++i)
            f += forms[static_cast<std::size_t>(2 * i)] * forms[static_cast<std::size_t>(2 * i + 1)];
        if (gram_out) *gram_out = gram_matrix(f, nvars);
        return f;
    }
}

} // namespace

TEST_CASE("strength maps") {
    PolyMap mu = strength_map(DegreeSplitting::make(2, {1}), 2);
    CHECK(mu.source().slot_count() == 2);
    CHECK(mu.source().slot_degree(0) == 1);
    CHECK(mu.source().slot_degree(1) == 1);
    CHECK(mu.target().slot_degree(0) == 2);
    CHECK(mu.degree() == 2);
    CHECK(mu.is_centrally_graded());

    // product of linear forms, checked against direct multiplication
    Point p(mu.source(), {P("x1 + x2"), P("x1 - 2*x2")});
    CHECK(mu.apply(p) == Point(mu.target(), {P("x1 + x2") * P("x1 - 2*x2")}));

    PolyMap scalar = strength_map(DegreeSplitting::make(4, {2}), 1);
    Point q(scalar.source(), {P("3*x1^2"), P("1/2*x1^2")});
    CHECK(scalar.apply(q) == Point(scalar.target(), {P("3/2*x1^4")}));

    // distinct splittings have distinct source tuples
    PolyMap a = strength_map(DegreeSplitting::make(4, {2}), 2);
    PolyMap b = strength_map(DegreeSplitting::make(4, {1}), 2);
    CHECK(a.source().slot_degree(0) == 2);
    CHECK(b.source().slot_degree(0) == 1);
    CHECK(b.source().slot_degree(1) == 3);

    CHECK_THROWS_AS(DegreeSplitting::make(4, {0}), invalid_splitting);
    CHECK_THROWS_AS(DegreeSplitting::make(4, {4}), invalid_splitting);
}

TEST_CASE("quadratic strength examples") {
    CHECK(quadratic_strength(Poly::zero()) == 0);
    CHECK(quadratic_strength(P("x1^2")) == 1);
    CHECK(quadratic_strength(P("x1*x2 + x3*x4")) == 2);
}

TEST_CASE("quadratic strength is the rank law on split forms") {
    for (int trial = 0; trial < 50; ++trial) {
        int nvars = 2 + static_cast<int>(rng.integer(0, 4));
        int k = 1 + static_cast<int>(rng.integer(0, (nvars / 2) - 1 > 0 ? (nvars / 2) - 1 : 0));
        QMatrix gram;
        Poly f = random_split_quadratic(rng, nvars, k, &gram);
        CHECK(quadratic_strength(f, nvars) ==
              static_cast<int>((testing::naive_rank(gram) + 1) / 2));
        CHECK(quadratic_strength(f, nvars) == k);
    }
}

TEST_CASE("strength is invariant under changes of variables") {
    for (int trial = 0; trial < 25; ++trial) {
        int nvars = 3 + static_cast<int>(rng.integer(0, 1));
        Poly f = rng.homogeneous_form(nvars, 2);
        CoordSpace space(PartitionTuple({Partition({2})}), nvars);
        QMatrix g = rng.unimodular(nvars);
        Poly moved = gl_act(g, Point(space, {f})).form(0);
        CHECK(quadratic_strength(f, nvars) == quadratic_strength(moved, nvars));
    }
}

TEST_CASE("decomposition verification") {
    DegreeSplitting s21 = DegreeSplitting::make(2, {1});
    CHECK(verify_decomposition(P("x1*x2"), s21, {P("x1"), P("x2")}));
    CHECK(verify_decomposition(P("x1^2"), s21, {P("x1"), P("x1")}));
    CHECK_FALSE(verify_decomposition(P("x1*x2 + x3*x4"), s21, {P("x1"), P("x2")}));
    CHECK_THROWS_AS(verify_decomposition(P("x1*x2"), s21, {P("x1^2"), P("x2")}), degree_mismatch);
    CHECK_THROWS_AS(verify_decomposition(P("x1*x2"), s21, {P("x1")}), degree_mismatch);
}

TEST_CASE("border certificate: the waring fixture") {
    // P(t) = (1/3)((x1 + t x2)^3 - x1^3), hand-expanded
    Certificate good = waring_certificate(1);
    CertificateCheck check = verify_border_certificate(P("x1^2*x2"), good);
    REQUIRE(check.accepted());
    CHECK(check.sigma_witness == 1);

    CoordSpace target(PartitionTuple({Partition({3})}), 2, {"F"});
    CHECK(check.product.coeff(1) == Point(target, {P("x1^2*x2")}));
    CHECK(check.product.coeff(2) == Point(target, {P("x1*x2^2")}));
    CHECK(check.product.coeff(3) == Point(target, {P("1/3*x2^3")}));
    CHECK(check.product.coeff(0).is_zero());

    // the same data with no shift has the wrong limit (zero)
    Certificate flat = waring_certificate(0);
    CertificateCheck rejected = verify_border_certificate(P("x1^2*x2"), flat);
    CHECK(rejected.status == CertificateCheck::Status::RejectedWrongLimit);

    // too large a shift runs into the pole
    Certificate deep = waring_certificate(2);
    CertificateCheck pole = verify_border_certificate(P("x1^2*x2"), deep);
    CHECK(pole.status == CertificateCheck::Status::RejectedPole);
    CHECK(pole.pole_exponent == -1);
}

TEST_CASE("exact decompositions are shift-zero certificates") {
    DegreeSplitting s21 = DegreeSplitting::make(2, {1});
    REQUIRE(verify_decomposition(P("x1^2"), s21, {P("x1"), P("x1")}));

    Certificate cert;
    cert.s = 0;
    cert.splitting = s21;
    cert.level = 1;
    CoordSpace lin(PartitionTuple({Partition({1})}), 1, {"g1"});
    LaurentPoint g(lin), h(lin);
    g.set_coeff(0, Point(lin, {P("x1")}));
    h.set_coeff(0, Point(lin, {P("x1")}));
    cert.factors = {g, h};
    CHECK(verify_border_certificate(P("x1^2"), cert).accepted());
    CHECK(verify_border_certificate(P("x1^2"), cert).sigma_witness == 0);
}

TEST_CASE("accepted certificates satisfy the membership check after shifting") {
    // absorb t^{-s} into the g-slots: the gauged tuple is pole-free for the
    // multiplication map and its value at zero is the certified form
    Certificate cert = waring_certificate(1);
    PolyMap mu = strength_map(cert.splitting, cert.level);
    LaurentPoint combined = cert.combined_source_point();

    LaurentPoint regauged(mu.source());
    std::map<int, std::vector<Poly>> parts;
    for (const auto& [e, p] : combined.coeffs())
        for (std::size_t slot = 0; slot < p.forms().size(); ++slot) {
            int target_e = (slot % 2 == 0) ? e - cert.s : e;
            auto& forms = parts[target_e];
            forms.resize(mu.source().slot_count());
            forms[slot] += p.form(slot);
        }
    for (auto& [e, forms] : parts) {
        forms.resize(mu.source().slot_count());
        regauged.set_coeff(e, Point(mu.source(), forms));
    }

    auto check = lnm_check(mu, regauged);
    REQUIRE(check.member);
    CHECK(*check.value == Point(mu.target(), {P("x1^2*x2")}));
}

TEST_CASE("quadratic decomposition achieves the rank bound on split forms") {
    for (int trial = 0; trial < 30; ++trial) {
        int nvars = 2 + static_cast<int>(rng.integer(0, 4));
        int max_k = nvars / 2;
        int k = 1 + static_cast<int>(rng.integer(0, max_k - 1));
        Poly f = random_split_quadratic(rng, nvars, k);
        auto dec = decompose_quadratic(f, nvars);
        REQUIRE(dec.has_value());
        CHECK(static_cast<int>(dec->products.size()) == k);
        Poly sum;
        for (const auto& [g, h] : dec->products) sum += g * h;
        CHECK(sum == f);
    }
}

TEST_CASE("quadratic decomposition handles the mixed-class split forms") {
    // diagonal coefficients (1, 2, -3, -6) pair by no square classes yet
    // the form splits; the isotropic recombination finds two products
    Poly f = P("x1^2 + 2*x2^2 - 3*x3^2 - 6*x4^2");
    auto dec = decompose_quadratic(f, 4);
    REQUIRE(dec.has_value());
    CHECK(static_cast<int>(dec->products.size()) == 2);
    Poly sum;
    for (const auto& [g, h] : dec->products) sum += g * h;
    CHECK(sum == f);
}

TEST_CASE("sigma search: exact factorizations come out at shift zero") {
    SigmaSearchOptions opts;
    opts.n_max = 1;

    SigmaSearchResult r1 = sigma_search(P("x1*x2 + x3*x4"), 2, opts);
    REQUIRE(r1.outcome == SigmaSearchResult::Outcome::Witnessed);
    CHECK(r1.s == 0);

    // x1^2*x2 factors exactly, so r = 1 already succeeds with no shift
    SigmaSearchResult r2 = sigma_search(P("x1^2*x2"), 1, opts);
    REQUIRE(r2.outcome == SigmaSearchResult::Outcome::Witnessed);
    CHECK(r2.s == 0);
    CHECK(verify_border_certificate(P("x1^2*x2"), *r2.certificate).accepted());
}

TEST_CASE("sigma search: the minor bound cuts off impossible ranks") {
    Poly f = P("x1*x2 + x3*x4");  // rank 4
    CHECK(quadratic_border_excluded(f, 1));
    SigmaSearchOptions opts;
    opts.n_max = 1;
    SigmaSearchResult r = sigma_search(f, 1, opts);
    CHECK(r.outcome == SigmaSearchResult::Outcome::Inconclusive);
    CHECK(r.note.find("minor") != std::string::npos);
}

TEST_CASE("sigma search returns shift zero when r covers the strength") {
    for (int trial = 0; trial < 10; ++trial) {
        int nvars = 2 + static_cast<int>(rng.integer(0, 2));
        int k = 1 + static_cast<int>(rng.integer(0, nvars / 2 - 1 > 0 ? nvars / 2 - 1 : 0));
        Poly f = random_split_quadratic(rng, nvars, k);
        SigmaSearchOptions opts;
        opts.n_max = 0;
        SigmaSearchResult r = sigma_search(f, k, opts);
        REQUIRE(r.outcome == SigmaSearchResult::Outcome::Witnessed);
        CHECK(r.s == 0);
    }
}

TEST_CASE("accepted searches pass the image-closure cross-check") {
    SigmaSearchOptions opts;
    opts.n_max = 1;
    SigmaSearchResult r = sigma_search(P("x1^2*x2"), 1, opts);
    REQUIRE(r.outcome == SigmaSearchResult::Outcome::Witnessed);
    PolyMap mu = strength_map(r.certificate->splitting, r.certificate->level);
    Point f(mu.target(), {P("x1^2*x2")});
    CHECK(border_membership(f, mu));
}

TEST_CASE("certificate json round trip") {
    Certificate cert = waring_certificate(1);
    json j = certificate_to_json(cert);
    Certificate back = certificate_from_json(j);
    CHECK(back.s == cert.s);
    CHECK(back.splitting.e == cert.splitting.e);
    CHECK(back.factors.size() == cert.factors.size());
    for (std::size_t i = 0; i < cert.factors.size(); ++i) CHECK(back.factors[i] == cert.factors[i]);
    CHECK(verify_border_certificate(P("x1^2*x2"), back).accepted());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "borderlim/groebner.hpp"
#include "borderlim/json_io.hpp"
#include "borderlim/lnm.hpp"
#include "borderlim/strength.hpp"
#include "support.hpp"

using namespace borderlim;
using testing::Rng;

namespace {

Poly P(const std::string& s) { return Poly::parse(s); }

SlotMap fgh_slot_map() {
    slot_symbol("f", 0), slot_symbol("g", 1), slot_symbol("h", 2);
    return SlotMap::make({2, 2, 2}, {"f", "g", "h"}, {4}, {P("f*g - h^2")});
}

// random scalar map for the property suites: small slots, bounded degree
PolyMap random_map(Rng& rng, int level, int max_degree) {
    int slots = 1 + static_cast<int>(rng.integer(0, 1));
    std::vector<Partition> tuple;
    std::vector<std::string> names;
    for (int i = 0; i < slots; ++i) {
        tuple.push_back(Partition({1 + static_cast<int>(rng.integer(0, 1))}));
        names.push_back("s" + std::to_string(i + 1));
    }
    CoordSpace source(PartitionTuple(tuple), level, names);
    CoordSpace target(PartitionTuple({Partition({1})}), level, {"w"});

    // polynomial components over the source coordinates
    std::vector<VarId> vars;
    for (std::size_t i = 0; i < source.slot_count(); ++i)
        for (long long c = 0; c < source.slot_dim(i); ++c)
            vars.push_back(slot_coord_var(source.slot_name(i), static_cast<int>(i), static_cast<int>(c)));

    std::vector<Poly> components;
    for (long long j = 0; j < target.coordinate_count(); ++j) {
        Poly comp;
        int terms = 1 + static_cast<int>(rng.integer(0, 2));
        for (int t = 0; t < terms; ++t) {
            std::vector<Monomial::Entry> entries;
            int deg = static_cast<int>(rng.integer(1, max_degree));
            for (int d = 0; d < deg; ++d)
                entries.push_back({vars[static_cast<std::size_t>(rng.integer(0, static_cast<long long>(vars.size()) - 1))], 1});
            comp.add_term(rng.nonzero_rational(2), Monomial(std::move(entries)));
        }
        components.push_back(comp);
    }
    return PolyMap(source, target, components);
}

bool satisfies(const ConstraintSystem& sys, const PolyMap& phi, const LaurentPoint& y, int n, int m) {
    std::map<VarId, Rational> values;
    const CoordSpace& src = phi.source();
    for (int k = -n; k <= m; ++k) {
        std::vector<Rational> coords = y.coeff(k).coordinates();
        std::size_t index = 0;
        for (std::size_t i = 0; i < src.slot_count(); ++i)
            for (long long c = 0; c < src.slot_dim(i); ++c, ++index)
                values[slot_coord_var(src.slot_name(i), static_cast<int>(i), static_cast<int>(c), k)] =
                    coords[index];
    }
    for (const auto& constraint : sys.constraints)
        if (constraint.evaluate(values) != 0) return false;
    return true;
}

Rng rng;

} // namespace

TEST_CASE("worked example: constraints of the f*g - h^2 map at n=1, m=1") {
    ConstraintSystem sys = lnm_constraints(fgh_slot_map(), 1, 1);
    REQUIRE(sys.constraints.size() == 2);
    REQUIRE(sys.evaluation.size() == 1);
    // ordering: exponent -1 first, then -2
    CHECK(sys.constraints[0] == P("f[-1]*g[0] + f[0]*g[-1] - 2*h[-1]*h[0]"));
    CHECK(sys.constraints[1] == P("f[-1]*g[-1] - h[-1]^2"));
    // every term of -h(t)^2 is negative; in particular -h[0]^2 at t^0
    CHECK(sys.evaluation[0] == P("f[-1]*g[1] + f[0]*g[0] + f[1]*g[-1] - 2*h[-1]*h[1] - h[0]^2"));

    CHECK(sys.constraints[0].to_string() == "f[-1]*g[0] + f[0]*g[-1] - 2*h[0]*h[-1]");
    CHECK(sys.constraints[1].to_string() == "f[-1]*g[-1] - h[-1]^2");
    CHECK(sys.evaluation[0].to_string() ==
          "f[-1]*g[1] + f[0]*g[0] + f[1]*g[-1] - h[0]^2 - 2*h[1]*h[-1]");
}

TEST_CASE("no pole depth means no constraints") {
    PolyMap phi = random_map(rng, 2, 3);
    ConstraintSystem sys = lnm_constraints(phi, 0, 1);
    CHECK(sys.constraints.empty());
    CHECK(sys.evaluation.size() == static_cast<std::size_t>(phi.target().coordinate_count()));
}

TEST_CASE("linear maps split coefficientwise") {
    slot_symbol("a", 0);
    SlotMap m = SlotMap::make({2}, {"a"}, {2}, {P("a")});
    ConstraintSystem sys = lnm_constraints(m, 2, 0);
    REQUIRE(sys.constraints.size() == 2);
    CHECK(sys.constraints[0] == P("a[-1]"));
    CHECK(sys.constraints[1] == P("a[-2]"));
    CHECK(sys.evaluation[0] == P("a[0]"));
}

TEST_CASE("membership check examples on the f*g - h^2 map") {
    PolyMap phi = PolyMap::from_slot_map(fgh_slot_map(), 2);
    CoordSpace src = phi.source();

    // a cube-style point: no pole, value zero after the limit shift
    LaurentPoint pole_killed(src);
    pole_killed.set_coeff(-1, Point(src, {P("x1^2"), Poly::zero(), Poly::zero()}));
    auto r1 = lnm_check(phi, pole_killed);
    CHECK(r1.member);
    CHECK(r1.value->is_zero());

    LaurentPoint double_pole(src);
    double_pole.set_coeff(-1, Point(src, {P("x1^2"), P("x2^2"), Poly::zero()}));
    auto r2 = lnm_check(phi, double_pole);
    CHECK_FALSE(r2.member);
    CHECK(r2.pole_exponent == -2);
}

TEST_CASE("check agrees with the constraint system in both directions") {
    for (int trial = 0; trial < 40; ++trial) {
        PolyMap phi = random_map(rng, 1 + static_cast<int>(rng.integer(0, 1)), 3);
        int n = static_cast<int>(rng.integer(0, 2));
        int m = stabilization_bound(phi, n);
        ConstraintSystem sys = lnm_constraints(phi, n, m);
        for (int inner = 0; inner < 10; ++inner) {
            LaurentPoint y = inner % 2 == 0 ? rng.laurent_point(phi.source(), -n, m)
                                            : rng.laurent_point(phi.source(), 0, m);
            bool by_check = lnm_check(phi, y).member;
            bool by_constraints = satisfies(sys, phi, y, n, m);
            CHECK(by_check == by_constraints);
        }
    }
}

TEST_CASE("evaluation agrees with the limit on satisfying points") {
    for (int trial = 0; trial < 20; ++trial) {
        PolyMap phi = random_map(rng, 2, 2);
        int n = 1, m = stabilization_bound(phi, 1);
        ConstraintSystem sys = lnm_constraints(phi, n, m);
        LaurentPoint y = rng.laurent_point(phi.source(), 0, m);  // pole-free always satisfies
        auto check = lnm_check(phi, y);
        REQUIRE(check.member);

        std::map<VarId, Rational> values;
        const CoordSpace& src = phi.source();
        for (int k = -n; k <= m; ++k) {
            std::vector<Rational> coords = y.coeff(k).coordinates();
            std::size_t index = 0;
            for (std::size_t i = 0; i < src.slot_count(); ++i)
                for (long long c = 0; c < src.slot_dim(i); ++c, ++index)
                    values[slot_coord_var(src.slot_name(i), static_cast<int>(i),
                                          static_cast<int>(c), k)] = coords[index];
        }
        std::vector<Rational> evaluated;
        for (const auto& e : sys.evaluation) evaluated.push_back(e.evaluate(values));
        CHECK(Point::from_coordinates(phi.target(), evaluated) == *check.value);
    }
}

TEST_CASE("stabilization bound examples") {
    PolyMap fgh = PolyMap::from_slot_map(fgh_slot_map(), 1);
    CHECK(stabilization_bound(fgh, 1) == 1);

    slot_symbol("a", 0);
    SlotMap linear = SlotMap::make({2}, {"a"}, {2}, {P("a")});
    CHECK(stabilization_bound(linear, 5) == 0);

    // degree 3 at n=2 stabilizes at 4: generate and compare
    slot_symbol("p", 0), slot_symbol("q", 1);
    SlotMap cubic = SlotMap::make({1, 1}, {"p", "q"}, {3}, {P("p^2*q - q^3")});
    CHECK(stabilization_bound(cubic, 2) == 4);
    ConstraintSystem at4 = lnm_constraints(cubic, 2, 4);
    ConstraintSystem at5 = lnm_constraints(cubic, 2, 5);
    ConstraintSystem at6 = lnm_constraints(cubic, 2, 6);
    CHECK(at4.constraints == at5.constraints);
    CHECK(at4.evaluation == at5.evaluation);
    CHECK(at5.constraints == at6.constraints);
    CHECK(at5.evaluation == at6.evaluation);
}

TEST_CASE("stabilization on random maps") {
    for (int trial = 0; trial < 20; ++trial) {
        PolyMap phi = random_map(rng, 2, 3);
        int n = static_cast<int>(rng.integer(0, 2));
        int m0 = stabilization_bound(phi, n);
        ConstraintSystem a = lnm_constraints(phi, n, m0);
        ConstraintSystem b = lnm_constraints(phi, n, m0 + 2);
        CHECK(a.constraints == b.constraints);
        CHECK(a.evaluation == b.evaluation);
    }
}

TEST_CASE("image search: exact preimages at n=0") {
    slot_symbol("a", 0);
    SlotMap veronese = SlotMap::make({1}, {"a"}, {2}, {P("a^2")});
    PolyMap phi = PolyMap::from_slot_map(veronese, 2);

    Point source_pt(phi.source(), {P("x1 + 2*x2")});
    Point target = phi.apply(source_pt);
    ImageSearchOptions opts;
    opts.n_max = 1;
    ImageSearchResult found = image_search(phi, target, opts);
    REQUIRE(found.found);
    CHECK(found.n_used == 0);
    auto check = lnm_check(phi, *found.witness);
    CHECK(check.member);
    CHECK(*check.value == target);
}

TEST_CASE("shifted search: border witness for x1^2*x2 under two products") {
    // sum of two products of linear and quadratic forms, pole depth 1 and
    // shift 1: the classical borderline for x1^2*x2
    PolyMap mu = strength_map(DegreeSplitting::make(3, {1, 1}), 2);
    Point target(mu.target(), {P("x1^2*x2")});

    ImageSearchOptions opts;
    ShiftedSearchOutcome res = search_preimage_shifted(mu, target, 1, 1, opts);
    REQUIRE(res.status == SolveStatus::Solved);

    // the witness, shifted into the pole-free regime, passes the membership
    // check with the expected value
    LaurentPoint image = substitute_laurent(mu, *res.witness);
    CHECK(image.min_exponent() >= 1);
    CHECK(image.coeff(1) == target);
}

TEST_CASE("image search: points may be excluded by the image ideal") {
    slot_symbol("a", 0);
    SlotMap veronese = SlotMap::make({1}, {"a"}, {2}, {P("a^2")});
    PolyMap phi = PolyMap::from_slot_map(veronese, 2);

    // (1, 0, 1) is not a square: the middle coordinate of a square of
    // a1*x1 + a2*x2 is 2*a1*a2, incompatible with a1^2 = a2^2 = 1... the
    // search reports absence and the oracle proves non-membership
    Point target = Point::from_coordinates(phi.target(), {Rational(1), Rational(0), Rational(1)});
    ImageSearchOptions opts;
    opts.n_max = 1;
    ImageSearchResult res = image_search(phi, target, opts);
    CHECK_FALSE(res.found);
    CHECK(res.exhausted_definitively);

    CHECK_FALSE(border_membership(target, phi));
}

TEST_CASE("satisfying evaluations land inside the image ideal") {
    slot_symbol("a", 0);
    SlotMap veronese = SlotMap::make({1}, {"a"}, {2}, {P("a^2")});
    PolyMap phi = PolyMap::from_slot_map(veronese, 2);
    Ideal image = implicitize(phi);
    for (int trial = 0; trial < 15; ++trial) {
        LaurentPoint y = rng.laurent_point(phi.source(), 0, 2);
        auto check = lnm_check(phi, y);
        REQUIRE(check.member);
        CHECK(border_membership(*check.value, image, phi));
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "borderlim/json_io.hpp"
#include "borderlim/laurent.hpp"
#include "borderlim/polymap.hpp"
#include "support.hpp"

using namespace borderlim;
using testing::Rng;

namespace {

Poly P(const std::string& s) { return Poly::parse(s); }

// u^3 - v^3 on a pair of linear slots
PolyMap cubic_difference_map(int level) {
    for (int i = 0; i < 2; ++i) slot_symbol(i == 0 ? "u" : "v", i);
    SlotMap m = SlotMap::make({1, 1}, {"u", "v"}, {3}, {P("u^3 - v^3")});
    return PolyMap::from_slot_map(m, level);
}

// (f, g, h) -> f*g - h^2 on quadratic slots
PolyMap fgh_map(int level) {
    slot_symbol("f", 0), slot_symbol("g", 1), slot_symbol("h", 2);
    SlotMap m = SlotMap::make({2, 2, 2}, {"f", "g", "h"}, {4}, {P("f*g - h^2")});
    return PolyMap::from_slot_map(m, level);
}

Rng rng;

} // namespace

TEST_CASE("substitution: difference of cubes along a line") {
    PolyMap phi = cubic_difference_map(2);
    LaurentPoint y(phi.source());
    y.set_coeff(0, Point(phi.source(), {P("x1"), P("x1")}));
    y.set_coeff(1, Point(phi.source(), {P("x2"), Poly::zero()}));

    LaurentPoint image = substitute_laurent(phi, y);
    CHECK(image.coeff(0).is_zero());
    CHECK(image.coeff(1) == Point(phi.target(), {P("3*x1^2*x2")}));
    CHECK(image.coeff(2) == Point(phi.target(), {P("3*x1*x2^2")}));
    CHECK(image.coeff(3) == Point(phi.target(), {P("x2^3")}));
    CHECK(image.min_exponent() == 1);

    // shift by 1 and take the value at zero
    CHECK(limit_at_zero(shift_exponent(image, 1)) == Point(phi.target(), {P("3*x1^2*x2")}));
}

TEST_CASE("substitution: identity map and cancelling poles") {
    PolyMap id = [&] {
        slot_symbol("w", 0);
        SlotMap m = SlotMap::make({2}, {"w"}, {2}, {P("w")});
        return PolyMap::from_slot_map(m, 2);
    }();
    Rng local(7);
    LaurentPoint constant(id.source());
    constant.set_coeff(0, local.point(id.source()));
    CHECK(substitute_laurent(id, constant) == constant);

    PolyMap fgh = fgh_map(2);
    LaurentPoint y(fgh.source());
    y.set_coeff(-1, Point(fgh.source(), {P("x1^2"), Poly::zero(), Poly::zero()}));
    y.set_coeff(1, Point(fgh.source(), {Poly::zero(), P("x2^2"), Poly::zero()}));
    LaurentPoint image = substitute_laurent(fgh, y);
    CHECK(image.coeff(0) == Point(fgh.target(), {P("x1^2*x2^2")}));
    CHECK(image.min_exponent() == 0);
}

TEST_CASE("limit examples") {
    CoordSpace space(PartitionTuple({Partition({3})}), 2);
    LaurentPoint y(space);
    y.set_coeff(0, Point(space, {P("x1^2*x2")}));
    y.set_coeff(1, Point(space, {P("x1*x2^2")}));
    CHECK(limit_at_zero(y) == Point(space, {P("x1^2*x2")}));

    LaurentPoint constant(space);
    constant.set_coeff(0, Point(space, {P("x2^3")}));
    CHECK(limit_at_zero(constant) == Point(space, {P("x2^3")}));

    LaurentPoint pole(space);
    pole.set_coeff(-1, Point(space, {P("x1^3")}));
    pole.set_coeff(0, Point(space, {P("x2^3")}));
    CHECK_THROWS_AS(limit_at_zero(pole), pole_at_zero);

    LaurentPoint vanish(space);
    vanish.set_coeff(1, Point(space, {P("x1^3")}));
    CHECK(limit_at_zero(vanish).is_zero());
}

TEST_CASE("shift and reparametrize") {
    CoordSpace space(PartitionTuple({Partition({1})}), 2);
    LaurentPoint y = rng.laurent_point(space, -2, 2);
    CHECK(shift_exponent(y, 0) == y);
    CHECK(shift_exponent(shift_exponent(y, 3), -3) == y);
    CHECK(reparametrize(y, 1) == y);

    LaurentPoint two(space);
    two.set_coeff(-1, Point(space, {P("x1")}));
    two.set_coeff(1, Point(space, {P("x2")}));
    LaurentPoint doubled = reparametrize(two, 2);
    CHECK(doubled.coeff(-2) == two.coeff(-1));
    CHECK(doubled.coeff(2) == two.coeff(1));
    CHECK(doubled.coeff(-1).is_zero());

    // limits commute with reparametrization when defined
    LaurentPoint tame = rng.laurent_point(space, 0, 2);
    CHECK(limit_at_zero(reparametrize(tame, 3)) == limit_at_zero(tame));
}

TEST_CASE("limit commutes with substitution on pole-free points") {
    PolyMap phi = fgh_map(2);
    for (int trial = 0; trial < 12; ++trial) {
        LaurentPoint y = rng.laurent_point(phi.source(), 0, 2);
        Point direct = phi.apply(limit_at_zero(y));
        CHECK(limit_at_zero(substitute_laurent(phi, y)) == direct);
    }
}

TEST_CASE("pole depth of images is bounded by the degree") {
    PolyMap phi = fgh_map(2);
    for (int trial = 0; trial < 12; ++trial) {
        LaurentPoint y = rng.laurent_point(phi.source(), -2, 1);
        int n = 0;
        if (auto mn = y.min_exponent()) n = std::max(0, -*mn);
        LaurentPoint image = substitute_laurent(phi, y);
        if (auto mn = image.min_exponent()) CHECK(*mn >= -phi.degree() * n);
    }
}

TEST_CASE("gl action commutes with the laurent operations") {
    CoordSpace space(PartitionTuple({Partition({2})}), 3);
    for (int trial = 0; trial < 10; ++trial) {
        QMatrix g = rng.unimodular(3);
        LaurentPoint y = rng.laurent_point(space, 0, 2);
        auto act = [&](const LaurentPoint& z) {
            LaurentPoint out(space);
            for (const auto& [e, p] : z.coeffs()) out.set_coeff(e, gl_act(g, p));
            return out;
        };
        CHECK(limit_at_zero(act(y)) == gl_act(g, limit_at_zero(y)));
        CHECK(act(shift_exponent(y, 2)) == shift_exponent(act(y), 2));
    }
}

TEST_CASE("line curves") {
    CoordSpace space(PartitionTuple({Partition({2})}), 2);
    Point x = rng.point(space), y = rng.point(space);
    LineCurve c = line_curve(x, y);

    // c(0) = x and c(1) = y
    CHECK(expand_at(c, 0).series.coeff(0) == x);
    CHECK(expand_at(c, 1).series.coeff(0) == y);

    LineCurve constant = line_curve(x, x);
    CHECK(expand_at(constant, Rational(1, 2)).series.coeff(0) == x);
    CHECK(expand_at(constant, Rational(1, 2)).series.coeff(1).is_zero());

    CurveExpansion e = expand_at(c, 0);
    CHECK(e.series.coeff(0) == x);
    CHECK(e.series.coeff(1) == y - x);
    CHECK(limit_at_zero(e.series) == x);

    CoordSpace other(PartitionTuple({Partition({1})}), 2);
    CHECK_THROWS_AS(line_curve(x, rng.point(other)), space_mismatch);
}

TEST_CASE("laurent json round trip") {
    CoordSpace space(PartitionTuple({Partition({2}), Partition({1})}), 2);
    for (int trial = 0; trial < 8; ++trial) {
        LaurentPoint y = rng.laurent_point(space, -2, 2);
        json j = laurent_to_json(y);
        CHECK(laurent_from_json(j) == y);
        CHECK(json::parse(j.dump()) == j);
    }
}

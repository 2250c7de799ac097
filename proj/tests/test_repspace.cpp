#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "borderlim/coordspace.hpp"
#include "support.hpp"

using namespace borderlim;
using testing::Rng;

namespace {
Poly P(const std::string& s) { return Poly::parse(s); }

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
} // namespace

TEST_CASE("schur dimensions") {
    CHECK(schur_dim(Partition({2}), 3) == 6);
    CHECK(schur_dim(Partition({1, 1}), 3) == 3);
    // hook contents for (2,1): contents 0,1,-1 and hooks 3,1,1
    CHECK(schur_dim(Partition({2, 1}), 3) == 8);
    CHECK(schur_dim(Partition({1, 1, 1}), 2) == 0);  // more rows than the level
    CHECK(schur_dim(Partition(), 5) == 1);

    for (int d = 1; d <= 6; ++d)
        for (int n = 1; n <= 8; ++n) CHECK(schur_dim(Partition({d}), n) == binomial(n + d - 1, d));
}

TEST_CASE("one-row dimensions match the monomial enumeration") {
    for (int d = 1; d <= 4; ++d)
        for (int n = 1; n <= 4; ++n) {
            CoordSpace space(PartitionTuple({Partition({d})}), n);
            CHECK(static_cast<long long>(space.slot_basis(0).size()) == schur_dim(Partition({d}), n));
        }
}

TEST_CASE("tuple purity") {
    CHECK(PartitionTuple({Partition({2}), Partition({1})}).pure());
    CHECK_FALSE(PartitionTuple({Partition({2}), Partition()}).pure());
    CHECK(PartitionTuple().pure());
}

TEST_CASE("point coordinates round trip") {
    Rng rng;
    CoordSpace space(PartitionTuple({Partition({2}), Partition({1})}), 3);
    CHECK(space.coordinate_count() == 6 + 3);
    for (int trial = 0; trial < 10; ++trial) {
        Point p = rng.point(space);
        CHECK(Point::from_coordinates(space, p.coordinates()) == p);
    }
}

TEST_CASE("gl action examples") {
    CoordSpace space(PartitionTuple({Partition({2})}), 2);

    QMatrix swap(2, 2);
    swap.at(0, 1) = 1;
    swap.at(1, 0) = 1;
    CHECK(gl_act(swap, Point(space, {P("x1^2")})) == Point(space, {P("x2^2")}));

    Rng rng;
    Point p = rng.point(space);
    CHECK(gl_act(QMatrix::identity(2), p) == p);

    // with x_j -> sum_i g[i][j] x_i and g = [[1,1],[0,1]]: x1 -> x1 and
    // x2 -> x1 + x2, so x1*x2 becomes x1^2 + x1*x2
    QMatrix shear = QMatrix::identity(2);
    shear.at(0, 1) = 1;
    CHECK(gl_act(shear, Point(space, {P("x1*x2")})) == Point(space, {P("x1^2 + x1*x2")}));

    QMatrix singular(2, 2);
    singular.at(0, 0) = 1;
    CHECK_THROWS_AS(gl_act(singular, p), non_invertible);
}

TEST_CASE("gl action is a group action") {
    Rng rng;
    CoordSpace space(PartitionTuple({Partition({2}), Partition({3})}), 3);
    for (int trial = 0; trial < 10; ++trial) {
        QMatrix g = rng.unimodular(3), h = rng.unimodular(3);
        Point p = rng.point(space);
        CHECK(gl_act(g * h, p) == gl_act(g, gl_act(h, p)));
        CHECK(gl_act(QMatrix::identity(3), p) == p);
    }
}

TEST_CASE("specialize and embed") {
    CoordSpace at3(PartitionTuple({Partition({2})}), 3);
    Point p(at3, {P("x1^2 + x3^2")});
    CHECK(specialize_point(p, 2) == Point(at3.at_level(2), {P("x1^2")}));
    CHECK(specialize_point(p, 3) == p);

    Rng rng;
    CoordSpace at2(PartitionTuple({Partition({2}), Partition({1})}), 2);
    for (int trial = 0; trial < 10; ++trial) {
        Point q = rng.point(at2);
        CHECK(specialize_point(embed_point(q, 4), 2) == q);
        // points supported on the first variables are fixed the other way
        Point e = embed_point(q, 4);
        CHECK(embed_point(specialize_point(e, 2), 4) == e);
    }
    CHECK_THROWS_AS(specialize_point(p, 4), level_mismatch);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "borderlim/gram.hpp"
#include "borderlim/poly.hpp"
#include "support.hpp"

using namespace borderlim;
using testing::Rng;

namespace {
Poly P(const std::string& s) { return Poly::parse(s); }
} // namespace

TEST_CASE("product examples") {
    CHECK(P("x1 + x2") * P("x1 - x2") == P("x1^2 - x2^2"));
    CHECK((P("x1 + x2") * Poly::zero()).is_zero());

    // cube of x + t*y, expected terms built from a Pascal row computed here
    Poly x = P("x"), y = P("y"), t = P("t");
    Poly cube = (x + t * y) * (x + t * y) * (x + t * y);
    int pascal[4] = {1, 0, 0, 0};
    for (int row = 1; row <= 3; ++row)
        for (int k = row; k >= 1; --k) pascal[k] += pascal[k - 1];
    Poly expected;
    for (int k = 0; k <= 3; ++k) {
        Poly term = Poly::constant(pascal[k]);
        for (int i = 0; i < 3 - k; ++i) term = term * x;
        for (int i = 0; i < k; ++i) term = term * (t * y);
        expected += term;
    }
    CHECK(cube == expected);
    CHECK(cube == P("x^3 + 3*t*x^2*y + 3*t^2*x*y^2 + t^3*y^3"));
}

TEST_CASE("degree adds on products") {
    Rng rng;
    for (int i = 0; i < 30; ++i) {
        Poly a = rng.poly(3, 3, 4), b = rng.poly(3, 2, 3);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).total_degree() == a.total_degree() + b.total_degree());
    }
}

TEST_CASE("substitute examples") {
    std::map<VarId, Poly> rename{{VarTable::intern("x1"), P("x2")}};
    CHECK(P("x1^2").substitute(rename) == P("x2^2"));

    std::map<VarId, Poly> shear{{VarTable::intern("x1"), P("x1 + x2")},
                                {VarTable::intern("x2"), P("x1 - x2")}};
    CHECK(P("x1*x2").substitute(shear) == P("x1^2 - x2^2"));

    std::map<VarId, Poly> zero{{VarTable::intern("x1"), Poly::zero()}};
    CHECK(P("x1").substitute(zero).is_zero());

    CHECK_THROWS_AS(P("x1*x3").substitute(rename), unbound_variable);
}

TEST_CASE("ring axioms on random triples") {
    Rng rng;
    for (int i = 0; i < 25; ++i) {
        Poly a = rng.poly(3, 2, 3), b = rng.poly(3, 2, 3), c = rng.poly(3, 2, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("canonicality: sums in either direction agree") {
    Rng rng;
    for (int i = 0; i < 25; ++i) {
        std::vector<Poly> items;
        for (int k = 0; k < 5; ++k) items.push_back(rng.poly(3, 3, 3));
        Poly left, right;
        for (auto it = items.begin(); it != items.end(); ++it) left += *it;
        for (auto it = items.rbegin(); it != items.rend(); ++it) right += *it;
        CHECK(left == right);
        CHECK(left.to_string() == right.to_string());
    }
}

TEST_CASE("text grammar round trip") {
    for (const char* text : {"3/2*x1^2*x2 - x3^3", "x1 + x2", "0", "-x1", "1/3", "2*x1^2 - 1",
                             "f[-1]*g[0] + f[0]*g[-1] - 2*h[-1]*h[0]"}) {
        Poly p = P(text);
        CHECK(Poly::parse(p.to_string()) == p);
    }
    CHECK(P(" x1   +x2 ") == P("x1 + x2"));
    CHECK(P("x1").to_string() == "x1");
    CHECK(Poly::zero().to_string() == "0");

    CHECK_THROWS_AS(P("1.5*x1"), parse_error);
    CHECK_THROWS_AS(P("x1 +"), parse_error);
    CHECK_THROWS_AS(P(""), parse_error);
    CHECK_THROWS_AS(P("1e3"), parse_error);
}

TEST_CASE("printing is canonical") {
    CHECK(P("x2 + x1").to_string() == "x1 + x2");
    CHECK(P("x2^2 + x1*x2 + x1^2").to_string() == "x1^2 + x1*x2 + x2^2");
    CHECK(P("1 - x1").to_string() == "-x1 + 1");
}

TEST_CASE("gram matrix examples") {
    QMatrix m = gram_matrix(P("x1^2"), 2);
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(1, 1) == 0);

    QMatrix m2 = gram_matrix(P("x1*x2"));
    CHECK(m2.at(0, 1) == Rational(1, 2));
    CHECK(m2.at(1, 0) == Rational(1, 2));
    CHECK(m2.at(0, 0) == 0);

    QMatrix m3 = gram_matrix(P("x1*x2 + x3*x4"));
    CHECK(m3.rows() == 4);
    CHECK(m3.at(0, 1) == Rational(1, 2));
    CHECK(m3.at(2, 3) == Rational(1, 2));
    CHECK(m3.at(0, 2) == 0);

    CHECK_THROWS_AS(gram_matrix(P("x1^3")), not_quadratic);
    CHECK_THROWS_AS(gram_matrix(P("x1^2 + x1")), not_quadratic);
}

TEST_CASE("rank examples") {
    CHECK(QMatrix(3, 3).rank() == 0);
    CHECK(QMatrix::identity(4).rank() == 4);
    CHECK(gram_matrix(P("x1*x2 + x3*x4")).rank() == 4);
}

TEST_CASE("gram matrix matches evaluation") {
    Rng rng;
    for (int trial = 0; trial < 20; ++trial) {
        Poly f = rng.homogeneous_form(4, 2);
        if (f.is_zero()) continue;
        QMatrix m = gram_matrix(f, 4);
        std::vector<Rational> v;
        std::map<VarId, Rational> values;
        for (int i = 1; i <= 4; ++i) {
            Rational c = rng.rational();
            v.push_back(c);
            values[xvar(i)] = c;
        }
        Rational direct = f.evaluate(values);
        Rational quad = 0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) quad += v[i] * m.at(i, j) * v[j];
        CHECK(direct == quad);
    }
}

TEST_CASE("rank is congruence invariant") {
    Rng rng;
    for (int trial = 0; trial < 15; ++trial) {
        Poly f = rng.homogeneous_form(4, 2);
        QMatrix m = gram_matrix(f, 4);
        QMatrix a = rng.unimodular(4);
        QMatrix congruent = a.transpose() * m * a;
        CHECK(m.rank() == congruent.rank());
        CHECK(m.rank() == testing::naive_rank(m));
    }
}

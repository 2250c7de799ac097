#pragma once

#include "borderlim/coordspace.hpp"
#include "borderlim/poly.hpp"
#include "borderlim/solve.hpp"

#include <cstdlib>
#include <string>
#include <vector>

namespace borderlim::testing {

// Seed for the randomized property suites; BORDERLIM_TEST_SEED overrides.
inline std::uint64_t test_seed() {
    if (const char* env = std::getenv("BORDERLIM_TEST_SEED")) {
        long long v = std::atoll(env);
        if (v > 0) return static_cast<std::uint64_t>(v);
    }
    return 12345;
}

struct Rng {
    SplitMix64 rng;
    explicit Rng(std::uint64_t seed = test_seed()) : rng(seed) {}

    long long integer(long long lo, long long hi) { return rng.range(lo, hi); }
    Rational rational(long long span = 5) {
        long long num = rng.range(-span, span);
        long long den = rng.range(1, 3);
        return Rational(num, den);
    }
    Rational nonzero_rational(long long span = 5) {
        Rational q = rational(span);
        while (q == 0) q = rational(span);
        return q;
    }

    Poly linear_form(int nvars, long long span = 4) {
        Poly f;
        for (int i = 1; i <= nvars; ++i) f += Poly(rational(span), Monomial::var(xvar(i)));
        return f;
    }

    Poly poly(int nvars, int max_degree, int terms, long long span = 4) {
        Poly f;
        for (int t = 0; t < terms; ++t) {
            std::vector<Monomial::Entry> entries;
            int degree = static_cast<int>(rng.range(0, max_degree));
            for (int d = 0; d < degree; ++d) {
                int v = static_cast<int>(rng.range(1, nvars));
                entries.push_back({xvar(v), 1});
            }
            f.add_term(rational(span), Monomial(std::move(entries)));
        }
        return f;
    }

    Poly homogeneous_form(int nvars, int degree, long long span = 3) {
        Poly f;
        int terms = 1 + static_cast<int>(rng.range(1, 3));
        for (int t = 0; t < terms; ++t) {
            std::vector<Monomial::Entry> entries;
            for (int d = 0; d < degree; ++d)
                entries.push_back({xvar(static_cast<int>(rng.range(1, nvars))), 1});
            f.add_term(rational(span), Monomial(std::move(entries)));
        }
        return f;
    }

    // product of elementary operations: invertible with determinant +-1
    QMatrix unimodular(int n, int ops = 6) {
        QMatrix m = QMatrix::identity(static_cast<std::size_t>(n));
        for (int k = 0; k < ops; ++k) {
            int i = static_cast<int>(rng.range(0, n - 1));
            int j = static_cast<int>(rng.range(0, n - 1));
            if (i == j) continue;
            Rational c = rational(2);
            for (int col = 0; col < n; ++col)
                m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(col)) +=
                    c * m.at(static_cast<std::size_t>(j), static_cast<std::size_t>(col));
        }
        return m;
    }

    Point point(const CoordSpace& space, long long span = 3) {
        std::vector<Rational> coords;
        for (long long i = 0; i < space.coordinate_count(); ++i) coords.push_back(rational(span));
        return Point::from_coordinates(space, coords);
    }

    LaurentPoint laurent_point(const CoordSpace& space, int min_exp, int max_exp, long long span = 3) {
        LaurentPoint y(space);
        for (int e = min_exp; e <= max_exp; ++e)
            if (rng.range(0, 2) != 0) y.set_coeff(e, point(space, span));
        return y;
    }
};

// independent oracle: plain rational row reduction, written apart from the
// library's fraction-free routine
inline std::size_t naive_rank(QMatrix m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || m.at(i, col) == 0) continue;
            Rational f = m.at(i, col) / m.at(rank, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

} // namespace borderlim::testing

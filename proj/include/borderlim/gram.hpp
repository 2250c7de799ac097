#pragma once

#include "borderlim/linalg.hpp"
#include "borderlim/poly.hpp"

namespace borderlim {

// Symmetric matrix of a homogeneous quadratic f in x1..xN, built so that
// f(v) = v^T M v exactly: off-diagonal entries are half the mixed
// coefficients. Throws not_quadratic unless f is homogeneous of degree 2.
// N defaults to the largest x-variable index appearing in f.
QMatrix gram_matrix(const Poly& f, int nvars = 0);

// Rank over the rationals (fraction-free elimination).
std::size_t matrix_rank(const QMatrix& m);

} // namespace borderlim

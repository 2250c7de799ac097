#include "borderlim/gram.hpp"

#include "borderlim/errors.hpp"

namespace borderlim {

namespace {

// 1-based x-variable index, or 0 when v is not an x-variable
int x_index(VarId v) {
    const VarKey& k = VarTable::key(v);
    if (k.stem != "x" || k.num < 1 || k.coord != -1 || k.has_exp) return 0;
    if (k.full != "x" + std::to_string(k.num)) return 0;
    return static_cast<int>(k.num);
}

} // namespace

QMatrix gram_matrix(const Poly& f, int nvars) {
    int n = nvars;
    for (VarId v : f.variables()) {
        int i = x_index(v);
        if (i == 0) throw not_quadratic("quadratic form must be written in the variables x1, x2, ...");
        n = std::max(n, i);
    }
    QMatrix m(n, n);
    for (const auto& [mono, c] : f.terms()) {
        const auto& es = mono.entries();
        if (mono.degree() != 2) throw not_quadratic("polynomial is not homogeneous of degree 2");
        if (es.size() == 1) {
            int i = x_index(es[0].first) - 1;
            m.at(i, i) = c;
        } else {
            int i = x_index(es[0].first) - 1;
            int j = x_index(es[1].first) - 1;
            m.at(i, j) = c / 2;
            m.at(j, i) = c / 2;
        }
    }
    return m;
}

std::size_t matrix_rank(const QMatrix& m) { return m.rank(); }

} // namespace borderlim

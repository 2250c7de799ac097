#include "borderlim/coordspace.hpp"

#include "borderlim/errors.hpp"

#include <algorithm>

namespace borderlim {

CoordSpace::CoordSpace(PartitionTuple tuple, int level, std::vector<std::string> slot_names)
    : tuple_(std::move(tuple)), level_(level), slot_names_(std::move(slot_names)) {
    if (level_ < 0) throw error("level must be non-negative");
    while (slot_names_.size() < tuple_.size())
        slot_names_.push_back("u" + std::to_string(slot_names_.size() + 1));
    bases_.resize(tuple_.size());
    bases_built_.assign(tuple_.size(), false);
}

long long CoordSpace::slot_dim(std::size_t i) const { return schur_dim(tuple_[i], level_); }

long long CoordSpace::coordinate_count() const {
    long long total = 0;
    for (std::size_t i = 0; i < tuple_.size(); ++i) total += slot_dim(i);
    return total;
}

int CoordSpace::slot_degree(std::size_t i) const {
    if (!tuple_[i].is_one_row())
        throw unsupported_slot("slot " + std::to_string(i) + " is not a one-row partition");
    return tuple_[i].empty() ? 0 : tuple_[i].parts()[0];
}

namespace {

void enumerate_monomials(int nvars, int degree, int from_var, std::vector<Monomial::Entry>& current,
                         std::vector<Monomial>& out) {
    if (degree == 0) {
        out.push_back(Monomial(current));
        return;
    }
    if (from_var > nvars) return;
    for (int e = degree; e >= 0; --e) {
        if (e > 0) current.push_back({xvar(from_var), e});
        enumerate_monomials(nvars, degree - e, from_var + 1, current, out);
        if (e > 0) current.pop_back();
    }
}

} // namespace

const std::vector<Monomial>& CoordSpace::slot_basis(std::size_t i) const {
    if (!bases_built_[i]) {
        int d = slot_degree(i);
        std::vector<Monomial> monos;
        std::vector<Monomial::Entry> current;
        enumerate_monomials(level_, d, 1, current, monos);
        std::sort(monos.begin(), monos.end(), mono_less_grevlex);
        std::reverse(monos.begin(), monos.end());
        bases_[i] = std::move(monos);
        bases_built_[i] = true;
    }
    return bases_[i];
}

Point::Point(CoordSpace space, std::vector<Poly> forms)
    : space_(std::move(space)), forms_(std::move(forms)) {
    if (forms_.size() != space_.slot_count()) throw space_mismatch("wrong number of slot forms");
    for (std::size_t i = 0; i < forms_.size(); ++i) {
        int d = space_.slot_degree(i);
        if (!forms_[i].is_zero() && !forms_[i].is_homogeneous(d))
            throw degree_mismatch("slot " + std::to_string(i) + " form must be homogeneous of degree " +
                                  std::to_string(d));
        for (VarId v : forms_[i].variables()) {
            const VarKey& k = VarTable::key(v);
            bool ok = k.stem == "x" && k.num >= 1 && k.num <= space_.level() && k.coord == -1 &&
                      !k.has_exp;
            if (!ok)
                throw level_mismatch("slot form uses variable " + VarTable::name(v) +
                                     " outside x1..x" + std::to_string(space_.level()));
        }
    }
}

Point Point::zero(const CoordSpace& space) {
    return Point(space, std::vector<Poly>(space.slot_count()));
}

bool Point::is_zero() const {
    for (const auto& f : forms_)
        if (!f.is_zero()) return false;
    return true;
}

std::vector<Rational> Point::coordinates() const {
    std::vector<Rational> coords;
    for (std::size_t i = 0; i < forms_.size(); ++i)
        for (const Monomial& m : space_.slot_basis(i)) coords.push_back(forms_[i].coefficient(m));
    return coords;
}

Point Point::from_coordinates(const CoordSpace& space, const std::vector<Rational>& coords) {
    std::vector<Poly> forms;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < space.slot_count(); ++i) {
        Poly f;
        for (const Monomial& m : space.slot_basis(i)) {
            if (pos >= coords.size()) throw space_mismatch("coordinate vector too short");
            f.add_term(coords[pos++], m);
        }
        forms.push_back(std::move(f));
    }
    if (pos != coords.size()) throw space_mismatch("coordinate vector too long");
    return Point(space, std::move(forms));
}

Point Point::operator+(const Point& o) const {
    if (space_ != o.space_) throw space_mismatch("points live on different spaces");
    std::vector<Poly> forms;
    for (std::size_t i = 0; i < forms_.size(); ++i) forms.push_back(forms_[i] + o.forms_[i]);
    return Point(space_, std::move(forms));
}

Point Point::operator-(const Point& o) const {
    if (space_ != o.space_) throw space_mismatch("points live on different spaces");
    std::vector<Poly> forms;
    for (std::size_t i = 0; i < forms_.size(); ++i) forms.push_back(forms_[i] - o.forms_[i]);
    return Point(space_, std::move(forms));
}

Point Point::scale(const Rational& c) const {
    std::vector<Poly> forms;
    for (const auto& f : forms_) forms.push_back(f * c);
    return Point(space_, std::move(forms));
}

Point gl_act(const QMatrix& g, const Point& p) {
    int n = p.space().level();
    if (g.rows() != static_cast<std::size_t>(n) || g.cols() != static_cast<std::size_t>(n))
        throw level_mismatch("matrix size does not match the level");
    if (g.determinant() == 0) throw non_invertible("change-of-variables matrix is singular");
    if (!p.space().all_one_row()) throw unsupported_slot("action implemented for one-row slots only");
    std::map<VarId, Poly> assignment;
    for (int j = 1; j <= n; ++j) {
        Poly image;
        for (int i = 1; i <= n; ++i)
            image += Poly(g.at(i - 1, j - 1), Monomial::var(xvar(i)));
        assignment[xvar(j)] = image;
    }
    std::vector<Poly> forms;
    for (const auto& f : p.forms()) forms.push_back(f.substitute_partial(assignment));
    return Point(p.space(), std::move(forms));
}

Point specialize_point(const Point& p, int target_level) {
    int n = p.space().level();
    if (target_level > n || target_level < 0)
        throw level_mismatch("target level must lie between 0 and the current level");
    std::map<VarId, Poly> kill;
    for (int j = target_level + 1; j <= n; ++j) kill[xvar(j)] = Poly::zero();
    std::vector<Poly> forms;
    for (const auto& f : p.forms()) forms.push_back(f.substitute_partial(kill));
    return Point(p.space().at_level(target_level), std::move(forms));
}

Point embed_point(const Point& p, int target_level) {
    if (target_level < p.space().level())
        throw level_mismatch("embedding target level must not be smaller");
    return Point(p.space().at_level(target_level), p.forms());
}

} // namespace borderlim

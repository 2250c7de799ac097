#include "borderlim/polymap.hpp"

#include "borderlim/errors.hpp"

#include <algorithm>

namespace borderlim {

namespace {

PartitionTuple one_row_tuple(const std::vector<int>& degrees) {
    std::vector<Partition> parts;
    for (int d : degrees) {
        if (d < 0) throw error("slot degrees must be non-negative");
        parts.push_back(d == 0 ? Partition() : Partition({d}));
    }
    return PartitionTuple(std::move(parts));
}

} // namespace

SlotMap SlotMap::make(std::vector<int> source_degrees, std::vector<std::string> source_names,
                      std::vector<int> target_degrees, std::vector<Poly> formulas,
                      std::vector<std::string> target_names) {
    SlotMap m;
    m.source_degrees = std::move(source_degrees);
    m.source_names = std::move(source_names);
    m.target_degrees = std::move(target_degrees);
    m.formulas = std::move(formulas);
    m.target_names = std::move(target_names);
    while (m.source_names.size() < m.source_degrees.size())
        m.source_names.push_back("u" + std::to_string(m.source_names.size() + 1));
    while (m.target_names.size() < m.target_degrees.size())
        m.target_names.push_back("w" + std::to_string(m.target_names.size() + 1));
    if (m.formulas.size() != m.target_degrees.size())
        throw error("one formula per target slot expected");

    // weighted homogeneity: a monomial in slot symbols has central degree
    // equal to the sum of slot degrees with multiplicity
    std::map<VarId, int> weight;
    for (std::size_t i = 0; i < m.source_degrees.size(); ++i)
        weight[m.symbol(i)] = m.source_degrees[i];
    for (std::size_t j = 0; j < m.formulas.size(); ++j) {
        for (const auto& [mono, c] : m.formulas[j].terms()) {
            int w = 0;
            for (const auto& [v, e] : mono.entries()) {
                auto it = weight.find(v);
                if (it == weight.end())
                    throw error("formula uses an undeclared slot symbol " + VarTable::name(v));
                w += it->second * e;
            }
            if (w != m.target_degrees[j])
                throw degree_mismatch("formula term of central degree " + std::to_string(w) +
                                      " cannot land in a slot of degree " +
                                      std::to_string(m.target_degrees[j]));
        }
    }
    return m;
}

int SlotMap::degree() const {
    int d = 0;
    for (const auto& f : formulas) d = std::max(d, f.total_degree());
    return std::max(d, 0);
}

VarId SlotMap::symbol(std::size_t slot, std::optional<int> exponent) const {
    return slot_symbol(source_names[slot], static_cast<int>(slot), exponent);
}

CoordSpace SlotMap::source_space(int level) const {
    return CoordSpace(one_row_tuple(source_degrees), level, source_names);
}

CoordSpace SlotMap::target_space(int level) const {
    return CoordSpace(one_row_tuple(target_degrees), level, target_names);
}

PolyMap::PolyMap(CoordSpace source, CoordSpace target, std::vector<Poly> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
    if (static_cast<long long>(components_.size()) != target_.coordinate_count())
        throw space_mismatch("one component per target coordinate expected");
    std::set<VarId> allowed;
    for (VarId v : coordinate_vars()) allowed.insert(v);
    for (const auto& comp : components_)
        for (VarId v : comp.variables())
            if (!allowed.count(v))
                throw error("component uses a variable that is not a source coordinate: " +
                            VarTable::name(v));
    degree_ = 0;
    for (const auto& comp : components_) degree_ = std::max(degree_, comp.total_degree());
    degree_ = std::max(degree_, 0);
}

VarId PolyMap::coordinate_var(std::size_t slot, std::size_t coord) const {
    return slot_coord_var(source_.slot_name(slot), static_cast<int>(slot), static_cast<int>(coord));
}

std::vector<VarId> PolyMap::coordinate_vars() const {
    std::vector<VarId> vars;
    for (std::size_t i = 0; i < source_.slot_count(); ++i)
        for (long long c = 0; c < source_.slot_dim(i); ++c)
            vars.push_back(coordinate_var(i, static_cast<std::size_t>(c)));
    return vars;
}

PolyMap PolyMap::from_slot_map(const SlotMap& m, int level) {
    CoordSpace source = m.source_space(level);
    CoordSpace target = m.target_space(level);

    // generic form per source slot: sum of coordinate variables times basis
    // monomials
    std::map<VarId, Poly> generic;
    for (std::size_t i = 0; i < source.slot_count(); ++i) {
        Poly form;
        const auto& basis = source.slot_basis(i);
        for (std::size_t c = 0; c < basis.size(); ++c) {
            VarId v = slot_coord_var(source.slot_name(i), static_cast<int>(i), static_cast<int>(c));
            form += Poly(Rational(1), Monomial::var(v)) * Poly(Rational(1), basis[c]);
        }
        generic[m.symbol(i)] = form;
    }

    std::set<VarId> xvars;
    for (int j = 1; j <= level; ++j) xvars.insert(xvar(j));

    std::vector<Poly> components;
    for (std::size_t j = 0; j < m.formulas.size(); ++j) {
        Poly expanded = m.formulas[j].substitute(generic);
        auto by_mono = expanded.collect(xvars);
        for (const Monomial& mono : target.slot_basis(j)) {
            auto it = by_mono.find(mono);
            components.push_back(it == by_mono.end() ? Poly::zero() : it->second);
        }
    }
    PolyMap result(std::move(source), std::move(target), std::move(components));
    result.slot_form_ = m;
    return result;
}

bool PolyMap::is_centrally_graded() const {
    std::map<VarId, int> weight;
    for (std::size_t i = 0; i < source_.slot_count(); ++i)
        for (long long c = 0; c < source_.slot_dim(i); ++c)
            weight[coordinate_var(i, static_cast<std::size_t>(c))] = source_.slot_degree(i);
    std::size_t comp_index = 0;
    for (std::size_t j = 0; j < target_.slot_count(); ++j) {
        int target_weight = target_.slot_degree(j);
        for (long long c = 0; c < target_.slot_dim(j); ++c, ++comp_index) {
            for (const auto& [mono, coeff] : components_[comp_index].terms()) {
                int w = 0;
                for (const auto& [v, e] : mono.entries()) w += weight.at(v) * e;
                if (w != target_weight) return false;
            }
        }
    }
    return true;
}

Point PolyMap::apply(const Point& p) const {
    if (p.space() != source_) throw space_mismatch("point is not on the source space");
    std::map<VarId, Rational> values;
    std::vector<Rational> coords = p.coordinates();
    std::vector<VarId> vars = coordinate_vars();
    for (std::size_t i = 0; i < vars.size(); ++i) values[vars[i]] = coords[i];
    std::vector<Rational> image;
    image.reserve(components_.size());
    for (const auto& comp : components_) image.push_back(comp.evaluate(values));
    return Point::from_coordinates(target_, image);
}

LaurentPoint substitute_laurent(const PolyMap& phi, const LaurentPoint& y) {
    if (y.space() != phi.source()) throw space_mismatch("Laurent point is not on the source space");

    // coordinate series of y, all at once
    std::vector<VarId> vars = phi.coordinate_vars();
    std::map<VarId, LaurentScalar> series;
    for (VarId v : vars) series[v] = LaurentScalar();
    for (const auto& [e, p] : y.coeffs()) {
        std::vector<Rational> coords = p.coordinates();
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (coords[i] != 0) series[vars[i]].add(e, Poly::constant(coords[i]));
    }

    // evaluate each component; results are constant polynomials per exponent
    std::map<int, std::vector<Rational>> image_coords;
    const long long target_count = phi.target().coordinate_count();
    for (std::size_t j = 0; j < phi.components().size(); ++j) {
        LaurentScalar s = eval_over_laurent(phi.components()[j], series);
        for (const auto& [e, c] : s.coeffs()) {
            if (!c.is_constant())
                throw error("internal: numeric Laurent substitution produced a non-constant");
            auto& vec = image_coords[e];
            if (vec.empty()) vec.assign(static_cast<std::size_t>(target_count), Rational(0));
            vec[j] = c.constant_value();
        }
    }

    LaurentPoint result(phi.target());
    for (const auto& [e, coords] : image_coords)
        result.set_coeff(e, Point::from_coordinates(phi.target(), coords));
    return result;
}

} // namespace borderlim

#pragma once

#include "borderlim/linalg.hpp"
#include "borderlim/partition.hpp"
#include "borderlim/poly.hpp"

#include <string>
#include <vector>

namespace borderlim {

// A coordinate space: a tuple of partitions specialized at a finite level N.
// For one-row slots (d), the slot's coordinates are identified with the
// degree-d monomials in x1..xN, listed in the canonical monomial order,
// greatest first.
class CoordSpace {
  public:
    CoordSpace() = default;
    CoordSpace(PartitionTuple tuple, int level, std::vector<std::string> slot_names = {});

    const PartitionTuple& tuple() const { return tuple_; }
    int level() const { return level_; }
    std::size_t slot_count() const { return tuple_.size(); }
    const std::string& slot_name(std::size_t i) const { return slot_names_[i]; }
    const std::vector<std::string>& slot_names() const { return slot_names_; }

    long long slot_dim(std::size_t i) const;
    long long coordinate_count() const;

    // degree of a one-row slot; throws unsupported_slot otherwise
    int slot_degree(std::size_t i) const;
    bool all_one_row() const { return tuple_.all_one_row(); }

    // monomial basis of a one-row slot, canonical order, greatest first
    const std::vector<Monomial>& slot_basis(std::size_t i) const;

    CoordSpace at_level(int level) const { return CoordSpace(tuple_, level, slot_names_); }

    // equality is mathematical: names are labels only
    bool operator==(const CoordSpace& o) const { return tuple_ == o.tuple_ && level_ == o.level_; }
    bool operator!=(const CoordSpace& o) const { return !(*this == o); }

  private:
    PartitionTuple tuple_;
    int level_ = 0;
    std::vector<std::string> slot_names_;
    mutable std::vector<std::vector<Monomial>> bases_;  // lazily built per slot
    mutable std::vector<bool> bases_built_;
};

// An exact point of a coordinate space with one-row slots: one homogeneous
// form per slot in the variables x1..xN.
class Point {
  public:
    Point() = default;
    Point(CoordSpace space, std::vector<Poly> forms);  // validates degrees/level
    static Point zero(const CoordSpace& space);

    const CoordSpace& space() const { return space_; }
    const std::vector<Poly>& forms() const { return forms_; }
    const Poly& form(std::size_t i) const { return forms_[i]; }
    bool is_zero() const;

    std::vector<Rational> coordinates() const;
    static Point from_coordinates(const CoordSpace& space, const std::vector<Rational>& coords);

    Point operator+(const Point& o) const;
    Point operator-(const Point& o) const;
    Point scale(const Rational& c) const;
    bool operator==(const Point& o) const { return space_ == o.space_ && forms_ == o.forms_; }
    bool operator!=(const Point& o) const { return !(*this == o); }

  private:
    CoordSpace space_;
    std::vector<Poly> forms_;
};

// Change of variables by an invertible N x N matrix g: each form f is
// replaced by its composite under x_j -> sum_i g[i][j] x_i. Group action:
// gl_act(g*h, p) = gl_act(g, gl_act(h, p)).
Point gl_act(const QMatrix& g, const Point& p);

// Projection to a lower level: x_{M+1}..x_N are set to zero.
Point specialize_point(const Point& p, int target_level);

// Right inverse of the projection: the same forms read at a higher level.
Point embed_point(const Point& p, int target_level);

} // namespace borderlim

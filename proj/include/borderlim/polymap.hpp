#pragma once

#include "borderlim/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace borderlim {

// A map written at the slot level: one polynomial per target slot in the
// source slot symbols (each slot treated as a single commuting quantity).
// Example: sources of degrees (2,2,2) named f,g,h mapping to degree 4 by the
// formula f*g - h^2.
struct SlotMap {
    std::vector<int> source_degrees;
    std::vector<std::string> source_names;
    std::vector<int> target_degrees;
    std::vector<std::string> target_names;
    std::vector<Poly> formulas;  // one per target slot, in the slot symbols

    // validates shapes, fills default names, checks the formulas only use
    // the declared symbols and are homogeneous for the weighted slot degrees
    static SlotMap make(std::vector<int> source_degrees, std::vector<std::string> source_names,
                        std::vector<int> target_degrees, std::vector<Poly> formulas,
                        std::vector<std::string> target_names = {});

    int degree() const;  // max total degree of the formulas
    VarId symbol(std::size_t slot, std::optional<int> exponent = std::nullopt) const;
    CoordSpace source_space(int level) const;
    CoordSpace target_space(int level) const;
};

// A polynomial map between coordinate spaces at a fixed level: one
// polynomial per target coordinate, written in the source coordinate
// variables.
class PolyMap {
  public:
    PolyMap() = default;
    PolyMap(CoordSpace source, CoordSpace target, std::vector<Poly> components);

    // expands a slot-level map at a level: the generic form of each source
    // slot is substituted into the formula and target coordinates are read
    // off
    static PolyMap from_slot_map(const SlotMap& m, int level);

    const CoordSpace& source() const { return source_; }
    const CoordSpace& target() const { return target_; }
    const std::vector<Poly>& components() const { return components_; }
    int degree() const { return degree_; }
    const std::optional<SlotMap>& slot_form() const { return slot_form_; }

    // the source coordinate variable (slot, coord), as used in components
    VarId coordinate_var(std::size_t slot, std::size_t coord) const;
    std::vector<VarId> coordinate_vars() const;  // all, in coordinate order

    // true when every component is homogeneous for the central grading
    // (coordinates of a slot of degree d weigh d)
    bool is_centrally_graded() const;

    // plain application to a point of the source space
    Point apply(const Point& p) const;

  private:
    CoordSpace source_, target_;
    std::vector<Poly> components_;
    int degree_ = 0;
    std::optional<SlotMap> slot_form_;

    friend PolyMap with_slot_form(PolyMap, SlotMap);
};

// Exact expansion of phi(y(t)) for a bounded Laurent point y on the source
// space of phi. The least exponent of the result is at least d*min when
// min < 0 (d the degree of phi, min the least exponent of y).
LaurentPoint substitute_laurent(const PolyMap& phi, const LaurentPoint& y);

} // namespace borderlim

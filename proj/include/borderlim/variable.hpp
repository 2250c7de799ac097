#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace borderlim {

using VarId = std::uint32_t;

// One polynomial ring hosts every kind of variable the library needs: plain
// ring variables x1..xN, slot symbols ("f"), slot coordinates ("f_2"), and
// Laurent-tagged coefficient variables ("f_2[-1]"). A variable is identified
// by its print name; the slot/coord/exponent pieces are kept for semantic
// queries.
struct VarInfo {
    std::string name;
    int slot = -1;              // slot index within a coordinate space, -1 if none
    int coord = -1;             // coordinate index within the slot, -1 for slot symbols
    bool has_exponent = false;  // Laurent exponent tag
    int exponent = 0;
};

// Total order on variables, derived from the name alone so that it is stable
// across processes: (stem, stem number, coord suffix, exponent tag). Smaller
// key means greater variable; x1 > x2, f[1] > f[0] > f[-1], f_1 > f_2.
struct VarKey {
    std::string stem;
    long long num = -1;    // trailing digits of the stem, -1 when absent
    long long coord = -1;  // "_k" suffix, -1 when absent
    bool has_exp = false;
    long long exp = 0;
    std::string full;  // tiebreak

    bool operator<(const VarKey& o) const;
    bool operator==(const VarKey& o) const { return full == o.full; }
};

// Append-only interned table, safe for concurrent readers.
class VarTable {
  public:
    static VarId intern(const std::string& name);
    static VarId intern(const std::string& name, int slot, int coord, std::optional<int> exponent);
    static const VarInfo& info(VarId id);
    static const VarKey& key(VarId id);
    static const std::string& name(VarId id);
    // true if the variable named `a` precedes (is greater than) `b` in the
    // canonical order
    static bool greater(VarId a, VarId b);
};

// Plain ring variable "x<i>", 1-based.
VarId xvar(int i);

// "<slot_name>" or "<slot_name>[k]" for slot-level symbols.
VarId slot_symbol(const std::string& slot_name, int slot, std::optional<int> exponent = std::nullopt);

// "<slot_name>_<coord+1>" or "<slot_name>_<coord+1>[k]" for scalar coordinates.
VarId slot_coord_var(const std::string& slot_name, int slot, int coord,
                     std::optional<int> exponent = std::nullopt);

} // namespace borderlim

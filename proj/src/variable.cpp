#include "borderlim/variable.hpp"

#include <atomic>
#include <cctype>
#include <deque>
#include <mutex>
#include <unordered_map>

namespace borderlim {

bool VarKey::operator<(const VarKey& o) const {
    if (stem != o.stem) return stem < o.stem;
    if (num != o.num) return num < o.num;
    if (coord != o.coord) return coord < o.coord;
    if (has_exp != o.has_exp) return has_exp < o.has_exp;
    if (exp != o.exp) return exp > o.exp;  // larger exponent tag = greater variable
    return full < o.full;
}

namespace {

VarKey make_key(const std::string& name) {
    VarKey k;
    k.full = name;
    std::size_t i = 0;
    while (i < name.size() && (std::isalpha(static_cast<unsigned char>(name[i])) || name[i] == '\'')) ++i;
    k.stem = name.substr(0, i);
    std::size_t num_start = i;
    while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) ++i;
    if (i > num_start) k.num = std::stoll(name.substr(num_start, i - num_start));
    if (i < name.size() && name[i] == '_') {
        std::size_t cs = ++i;
        while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) ++i;
        if (i > cs) k.coord = std::stoll(name.substr(cs, i - cs));
    }
    if (i < name.size() && name[i] == '[') {
        std::size_t es = ++i;
        if (i < name.size() && name[i] == '-') ++i;
        while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) ++i;
        if (i > es && i < name.size() && name[i] == ']') {
            k.has_exp = true;
            k.exp = std::stoll(name.substr(es, i - es));
        }
    }
    return k;
}

struct Entry {
    VarInfo info;
    VarKey key;
};

struct Registry {
    std::mutex write_mutex;
    std::deque<Entry> entries;                       // never reallocated
    std::unordered_map<std::string, VarId> by_name;  // guarded by write_mutex
    std::atomic<std::size_t> published{0};

    VarId intern(const std::string& name, int slot, int coord, std::optional<int> exponent) {
        std::lock_guard<std::mutex> lock(write_mutex);
        auto it = by_name.find(name);
        if (it != by_name.end()) return it->second;
        Entry e;
        e.info.name = name;
        e.info.slot = slot;
        e.info.coord = coord;
        if (exponent) {
            e.info.has_exponent = true;
            e.info.exponent = *exponent;
        }
        e.key = make_key(name);
        entries.push_back(std::move(e));
        VarId id = static_cast<VarId>(entries.size() - 1);
        by_name.emplace(name, id);
        published.store(entries.size(), std::memory_order_release);
        return id;
    }

    const Entry& at(VarId id) const {
        // ids handed out only after publication; acquire pairs with release
        published.load(std::memory_order_acquire);
        return entries[id];
    }
};

Registry& registry() {
    static Registry r;
    return r;
}

} // namespace

VarId VarTable::intern(const std::string& name) { return registry().intern(name, -1, -1, std::nullopt); }

VarId VarTable::intern(const std::string& name, int slot, int coord, std::optional<int> exponent) {
    return registry().intern(name, slot, coord, exponent);
}

const VarInfo& VarTable::info(VarId id) { return registry().at(id).info; }
const VarKey& VarTable::key(VarId id) { return registry().at(id).key; }
const std::string& VarTable::name(VarId id) { return registry().at(id).info.name; }

bool VarTable::greater(VarId a, VarId b) {
    if (a == b) return false;
    return key(a) < key(b);
}

VarId xvar(int i) { return VarTable::intern("x" + std::to_string(i)); }

namespace {
std::string exp_suffix(std::optional<int> exponent) {
    return exponent ? "[" + std::to_string(*exponent) + "]" : std::string();
}
} // namespace

VarId slot_symbol(const std::string& slot_name, int slot, std::optional<int> exponent) {
    return VarTable::intern(slot_name + exp_suffix(exponent), slot, -1, exponent);
}

VarId slot_coord_var(const std::string& slot_name, int slot, int coord, std::optional<int> exponent) {
    return VarTable::intern(slot_name + "_" + std::to_string(coord + 1) + exp_suffix(exponent), slot,
                            coord, exponent);
}

} // namespace borderlim

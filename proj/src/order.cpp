#include "borderlim/order.hpp"

namespace borderlim {

namespace {

Monomial project(const Monomial& m, const std::set<VarId>& vars, bool inside) {
    std::vector<Monomial::Entry> entries;
    for (const auto& e : m.entries())
        if (vars.count(e.first) == static_cast<std::size_t>(inside)) entries.push_back(e);
    return Monomial(std::move(entries));
}

} // namespace

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case Kind::Grevlex:
            return mono_less_grevlex(a, b);
        case Kind::Lex:
            return mono_less_lex(a, b);
        case Kind::Elimination: {
            Monomial ea = project(a, eliminated_, true), eb = project(b, eliminated_, true);
            if (ea != eb) return mono_less_grevlex(ea, eb);
            return mono_less_grevlex(project(a, eliminated_, false), project(b, eliminated_, false));
        }
    }
    return false;
}

std::string MonomialOrder::to_string() const {
    switch (kind_) {
        case Kind::Grevlex:
            return "grevlex";
        case Kind::Lex:
            return "lex";
        case Kind::Elimination: {
            std::string s = "elim{";
            bool first = true;
            for (VarId v : eliminated_) {
                if (!first) s += ",";
                s += VarTable::name(v);
                first = false;
            }
            return s + "}";
        }
    }
    return "";
}

} // namespace borderlim

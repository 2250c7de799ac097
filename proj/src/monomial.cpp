#include "borderlim/monomial.hpp"

#include <algorithm>

namespace borderlim {

Monomial::Monomial(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
        return VarTable::greater(a.first, b.first);
    });
    // merge duplicates, drop zeros
    std::vector<Entry> merged;
    for (const auto& e : entries_) {
        if (!merged.empty() && merged.back().first == e.first)
            merged.back().second += e.second;
        else
            merged.push_back(e);
    }
    entries_.clear();
    for (const auto& e : merged)
        if (e.second != 0) entries_.push_back(e);
    degree_ = 0;
    for (const auto& e : entries_) degree_ += e.second;
}

Monomial Monomial::var(VarId v, int exp) {
    Monomial m;
    if (exp != 0) {
        m.entries_.push_back({v, exp});
        m.degree_ = exp;
    }
    return m;
}

int Monomial::exponent_of(VarId v) const {
    for (const auto& e : entries_)
        if (e.first == v) return e.second;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.entries_.reserve(entries_.size() + o.entries_.size());
    auto ia = entries_.begin(), ib = o.entries_.begin();
    while (ia != entries_.end() || ib != o.entries_.end()) {
        if (ib == o.entries_.end() || (ia != entries_.end() && VarTable::greater(ia->first, ib->first))) {
            r.entries_.push_back(*ia++);
        } else if (ia == entries_.end() || VarTable::greater(ib->first, ia->first)) {
            r.entries_.push_back(*ib++);
        } else {
            r.entries_.push_back({ia->first, ia->second + ib->second});
            ++ia, ++ib;
        }
    }
    r.degree_ = degree_ + o.degree_;
    return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
    Monomial r;
    auto ia = entries_.begin(), ib = o.entries_.begin();
    while (ia != entries_.end() || ib != o.entries_.end()) {
        if (ib == o.entries_.end() || (ia != entries_.end() && VarTable::greater(ia->first, ib->first))) {
            r.entries_.push_back(*ia++);
        } else if (ia == entries_.end() || VarTable::greater(ib->first, ia->first)) {
            return std::nullopt;  // o has a variable we lack
        } else {
            int e = ia->second - ib->second;
            if (e < 0) return std::nullopt;
            if (e > 0) r.entries_.push_back({ia->first, e});
            ++ia, ++ib;
        }
    }
    r.degree_ = degree_ - o.degree_;
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r;
    auto ia = entries_.begin(), ib = o.entries_.begin();
    while (ia != entries_.end() || ib != o.entries_.end()) {
        if (ib == o.entries_.end() || (ia != entries_.end() && VarTable::greater(ia->first, ib->first))) {
            r.entries_.push_back(*ia++);
        } else if (ia == entries_.end() || VarTable::greater(ib->first, ia->first)) {
            r.entries_.push_back(*ib++);
        } else {
            r.entries_.push_back({ia->first, std::max(ia->second, ib->second)});
            ++ia, ++ib;
        }
    }
    for (const auto& e : r.entries_) r.degree_ += e.second;
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    auto ia = entries_.begin(), ib = o.entries_.begin();
    while (ia != entries_.end() && ib != o.entries_.end()) {
        if (ia->first == ib->first) return false;
        if (VarTable::greater(ia->first, ib->first))
            ++ia;
        else
            ++ib;
    }
    return true;
}

std::string Monomial::to_string() const {
    if (entries_.empty()) return "1";
    std::string s;
    for (const auto& e : entries_) {
        if (!s.empty()) s += "*";
        s += VarTable::name(e.first);
        if (e.second != 1) s += "^" + std::to_string(e.second);
    }
    return s;
}

bool mono_less_grevlex(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    // compare from the least variable upward; the monomial with the larger
    // exponent on the least differing variable is the smaller one
    auto ia = a.entries().rbegin(), ib = b.entries().rbegin();
    while (ia != a.entries().rend() || ib != b.entries().rend()) {
        if (ia == a.entries().rend()) return false;  // b carries an extra least variable: b < a
        if (ib == b.entries().rend()) return true;
        if (VarTable::greater(ib->first, ia->first)) return true;   // a's var is least
        if (VarTable::greater(ia->first, ib->first)) return false;  // b's var is least
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia, ++ib;
    }
    return false;
}

bool mono_less_lex(const Monomial& a, const Monomial& b) {
    auto ia = a.entries().begin(), ib = b.entries().begin();
    while (ia != a.entries().end() || ib != b.entries().end()) {
        if (ia == a.entries().end()) return true;  // b has a greater leading variable
        if (ib == b.entries().end()) return false;
        if (VarTable::greater(ia->first, ib->first)) return false;
        if (VarTable::greater(ib->first, ia->first)) return true;
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia, ++ib;
    }
    return false;
}

} // namespace borderlim

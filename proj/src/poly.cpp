#include "borderlim/poly.hpp"

#include <algorithm>
#include <cctype>

namespace borderlim {

Poly::Poly(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial::one(), c);
}

Poly::Poly(const Rational& c, const Monomial& m) {
    if (c != 0) terms_.emplace(m, c);
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::constant_value() const {
    auto it = terms_.find(Monomial::one());
    return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.degree();
}

bool Poly::is_homogeneous(int degree) const {
    for (const auto& [m, c] : terms_)
        if (m.degree() != degree) return false;
    return true;
}

Rational Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::set<VarId> Poly::variables() const {
    std::set<VarId> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& e : m.entries()) vars.insert(e.first);
    return vars;
}

void Poly::add_term(const Rational& c, const Monomial& m) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(c, m);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(-c, m);
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ca * cb, ma * mb);
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    Poly r;
    if (c == 0) return r;
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

Poly Poly::pow(int e) const {
    Poly r = Poly::constant(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = e > 1 ? base * base : base;
        e >>= 1;
    }
    return r;
}

namespace {

Poly substitute_impl(const Poly& p, const std::map<VarId, Poly>& assignment, bool strict) {
    Poly result;
    // cache powers of substituted variables
    std::map<std::pair<VarId, int>, Poly> pow_cache;
    for (const auto& [m, c] : p.terms()) {
        Poly term = Poly::constant(c);
        for (const auto& [v, e] : m.entries()) {
            auto it = assignment.find(v);
            if (it == assignment.end()) {
                if (strict)
                    throw unbound_variable("variable " + VarTable::name(v) +
                                           " is not bound by the assignment");
                term = term * Poly(Rational(1), Monomial::var(v, e));
                continue;
            }
            auto key = std::make_pair(v, e);
            auto pc = pow_cache.find(key);
            if (pc == pow_cache.end()) pc = pow_cache.emplace(key, it->second.pow(e)).first;
            term = term * pc->second;
        }
        result += term;
    }
    return result;
}

} // namespace

Poly Poly::substitute(const std::map<VarId, Poly>& assignment) const {
    return substitute_impl(*this, assignment, true);
}

Poly Poly::substitute_partial(const std::map<VarId, Poly>& assignment) const {
    return substitute_impl(*this, assignment, false);
}

Rational Poly::evaluate(const std::map<VarId, Rational>& values) const {
    Rational result = 0;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (const auto& [v, e] : m.entries()) {
            auto it = values.find(v);
            if (it == values.end())
                throw unbound_variable("variable " + VarTable::name(v) + " has no value");
            Rational p = it->second;
            for (int k = 1; k < e; ++k) p *= it->second;
            term *= p;
        }
        result += term;
    }
    return result;
}

std::map<Monomial, Poly, MonoCanonicalLess> Poly::collect(const std::set<VarId>& split_vars) const {
    std::map<Monomial, Poly, MonoCanonicalLess> groups;
    for (const auto& [m, c] : terms_) {
        std::vector<Monomial::Entry> inside, outside;
        for (const auto& e : m.entries())
            (split_vars.count(e.first) ? inside : outside).push_back(e);
        groups[Monomial(std::move(inside))].add_term(c, Monomial(std::move(outside)));
    }
    return groups;
}

Poly Poly::derivative(VarId v) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent_of(v);
        if (e == 0) continue;
        std::vector<Monomial::Entry> entries;
        for (const auto& en : m.entries())
            if (en.first == v) {
                if (en.second > 1) entries.push_back({v, en.second - 1});
            } else {
                entries.push_back(en);
            }
        r.add_term(c * e, Monomial(std::move(entries)));
    }
    return r;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    // canonical print order: greatest monomial first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        Rational c = it->second;
        bool negative = c < 0;
        Rational a = negative ? Rational(-c) : c;
        if (s.empty())
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        if (m.is_one()) {
            s += rational_to_string(a);
        } else if (a == 1) {
            s += m.to_string();
        } else {
            s += rational_to_string(a) + "*" + m.to_string();
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Parsing. Grammar: sum of signed terms; a term is an optional rational
// coefficient and variable powers joined by '*'; a variable is an identifier
// optionally followed by a bracketed signed integer tag and '^' power.
// Floating-point literals are rejected.

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw parse_error("parse error at position " + std::to_string(pos) + ": " + what);
    }
    std::string integer() {
        skip_ws();
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits += text[pos++];
        if (digits.empty()) fail("expected an integer");
        if (pos < text.size() && (text[pos] == '.' || text[pos] == 'e' || text[pos] == 'E'))
            fail("floating-point literals are not accepted");
        return digits;
    }
    std::string identifier() {
        skip_ws();
        std::string name;
        if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
            fail("expected a variable name");
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            name += text[pos++];
        if (pos < text.size() && text[pos] == '[') {
            name += text[pos++];
            if (pos < text.size() && text[pos] == '-') name += text[pos++];
            bool any = false;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                name += text[pos++];
                any = true;
            }
            if (!any || pos >= text.size() || text[pos] != ']') fail("malformed variable tag");
            name += text[pos++];
        }
        return name;
    }
};

} // namespace

Poly Poly::parse(const std::string& text) {
    Lexer lex(text);
    Poly result;
    bool first = true;
    while (!lex.done()) {
        int sign = 1;
        if (lex.accept('-'))
            sign = -1;
        else if (lex.accept('+')) {
            if (first) lex.fail("unexpected leading '+'");
        } else if (!first) {
            lex.fail("expected '+' or '-' between terms");
        }
        first = false;

        Rational coeff(sign);
        Monomial mono;
        bool saw_factor = false;
        char c = lex.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = lex.integer();
            std::string den = "1";
            if (lex.accept('/')) {
                den = lex.integer();
                if (Integer(den) == 0) lex.fail("zero denominator");
            }
            coeff *= Rational(Integer(num), Integer(den));
            saw_factor = true;
            if (!lex.accept('*')) {
                result.add_term(coeff, mono);
                continue;
            }
        }
        // variable factors
        while (true) {
            std::string name = lex.identifier();
            int exp = 1;
            if (lex.accept('^')) exp = std::stoi(lex.integer());
            if (exp < 0) lex.fail("negative exponent");
            mono = mono * Monomial::var(VarTable::intern(name), exp);
            saw_factor = true;
            if (!lex.accept('*')) break;
        }
        if (!saw_factor) lex.fail("empty term");
        result.add_term(coeff, mono);
    }
    if (first) throw parse_error("empty polynomial text");
    return result;
}

} // namespace borderlim

#include "borderlim/laurent.hpp"

#include "borderlim/errors.hpp"

namespace borderlim {

LaurentScalar::LaurentScalar(const Poly& constant) {
    if (!constant.is_zero()) coeffs_.emplace(0, constant);
}

LaurentScalar LaurentScalar::term(int exponent, const Poly& coeff) {
    LaurentScalar s;
    if (!coeff.is_zero()) s.coeffs_.emplace(exponent, coeff);
    return s;
}

std::optional<int> LaurentScalar::min_exponent() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.begin()->first;
}

std::optional<int> LaurentScalar::max_exponent() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.rbegin()->first;
}

Poly LaurentScalar::coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Poly::zero() : it->second;
}

void LaurentScalar::add(int exponent, const Poly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

LaurentScalar LaurentScalar::operator+(const LaurentScalar& o) const {
    LaurentScalar r = *this;
    for (const auto& [e, c] : o.coeffs_) r.add(e, c);
    return r;
}

LaurentScalar LaurentScalar::operator*(const LaurentScalar& o) const {
    LaurentScalar r;
    for (const auto& [ea, ca] : coeffs_)
        for (const auto& [eb, cb] : o.coeffs_) r.add(ea + eb, ca * cb);
    return r;
}

LaurentScalar LaurentScalar::operator*(const Rational& c) const {
    LaurentScalar r;
    if (c == 0) return r;
    for (const auto& [e, p] : coeffs_) r.coeffs_.emplace(e, p * c);
    return r;
}

LaurentScalar LaurentScalar::pow(int e) const {
    LaurentScalar r(Poly::constant(1));
    LaurentScalar base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = e > 1 ? base * base : base;
        e >>= 1;
    }
    return r;
}

std::string LaurentScalar::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : coeffs_) {
        if (!s.empty()) s += " + ";
        std::string body = "(" + c.to_string() + ")";
        if (e == 0)
            s += body;
        else if (e == 1)
            s += body + "*t";
        else
            s += body + "*t^" + std::to_string(e);
    }
    return s;
}

LaurentScalar eval_over_laurent(const Poly& p, const std::map<VarId, LaurentScalar>& assignment) {
    LaurentScalar result;
    std::map<std::pair<VarId, int>, LaurentScalar> pow_cache;
    for (const auto& [m, c] : p.terms()) {
        LaurentScalar term(Poly::constant(c));
        for (const auto& [v, e] : m.entries()) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw unbound_variable("variable " + VarTable::name(v) +
                                       " is not bound by the Laurent assignment");
            auto key = std::make_pair(v, e);
            auto pc = pow_cache.find(key);
            if (pc == pow_cache.end()) pc = pow_cache.emplace(key, it->second.pow(e)).first;
            term = term * pc->second;
        }
        result = result + term;
    }
    return result;
}

LaurentPoint::LaurentPoint(CoordSpace space, std::map<int, Point> coeffs) : space_(std::move(space)) {
    for (auto& [e, p] : coeffs) {
        if (p.space() != space_) throw space_mismatch("coefficient point lives on a different space");
        if (!p.is_zero()) coeffs_.emplace(e, p);
    }
}

LaurentPoint LaurentPoint::constant(const Point& p) {
    LaurentPoint y(p.space());
    y.set_coeff(0, p);
    return y;
}

std::optional<int> LaurentPoint::min_exponent() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.begin()->first;
}

std::optional<int> LaurentPoint::max_exponent() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.rbegin()->first;
}

Point LaurentPoint::coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Point::zero(space_) : it->second;
}

void LaurentPoint::set_coeff(int exponent, const Point& p) {
    if (p.space() != space_) throw space_mismatch("coefficient point lives on a different space");
    if (p.is_zero())
        coeffs_.erase(exponent);
    else
        coeffs_[exponent] = p;
}

LaurentScalar LaurentPoint::coordinate_series(std::size_t coord_index) const {
    LaurentScalar s;
    for (const auto& [e, p] : coeffs_) {
        // coordinates() is per point; extract the requested one
        Rational c = p.coordinates()[coord_index];
        if (c != 0) s.add(e, Poly::constant(c));
    }
    return s;
}

Point limit_at_zero(const LaurentPoint& y) {
    auto mn = y.min_exponent();
    if (mn && *mn < 0) throw pole_at_zero(*mn);
    return y.coeff(0);
}

LaurentPoint shift_exponent(const LaurentPoint& y, int s) {
    LaurentPoint r(y.space());
    for (const auto& [e, p] : y.coeffs()) r.set_coeff(e - s, p);
    return r;
}

LaurentPoint reparametrize(const LaurentPoint& y, int k) {
    if (k < 1) throw error("reparametrization exponent must be positive");
    LaurentPoint r(y.space());
    for (const auto& [e, p] : y.coeffs()) r.set_coeff(e * k, p);
    return r;
}

LineCurve line_curve(const Point& x, const Point& y, std::vector<Rational> b_component) {
    if (x.space() != y.space()) throw space_mismatch("curve endpoints live on different spaces");
    return LineCurve{x, y, std::move(b_component)};
}

CurveExpansion expand_at(const LineCurve& curve, const Rational& t0) {
    // c(t0 + t) = c(t0) + t (y - x)
    Point at_t0 = curve.x.scale(Rational(1) - t0) + curve.y.scale(t0);
    LaurentPoint series(curve.x.space());
    series.set_coeff(0, at_t0);
    series.set_coeff(1, curve.y - curve.x);
    return CurveExpansion{series, curve.b_component};
}

} // namespace borderlim

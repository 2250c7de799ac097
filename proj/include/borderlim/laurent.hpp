#pragma once

#include "borderlim/coordspace.hpp"
#include "borderlim/poly.hpp"

#include <map>
#include <optional>

namespace borderlim {

// Laurent polynomial in t with Poly coefficients: finitely many exponents,
// no zero coefficients stored. Rational coefficients embed as constants, so
// this one type carries both numeric substitution and symbolic expansion in
// coefficient variables.
class LaurentScalar {
  public:
    LaurentScalar() = default;
    explicit LaurentScalar(const Poly& constant);  // exponent 0

    static LaurentScalar term(int exponent, const Poly& coeff);

    const std::map<int, Poly>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // exponent bounds of the support; nullopt for zero
    std::optional<int> min_exponent() const;
    std::optional<int> max_exponent() const;
    Poly coeff(int exponent) const;

    void add(int exponent, const Poly& coeff);
    LaurentScalar operator+(const LaurentScalar& o) const;
    LaurentScalar operator*(const LaurentScalar& o) const;
    LaurentScalar operator*(const Rational& c) const;
    LaurentScalar pow(int e) const;

    bool operator==(const LaurentScalar& o) const { return coeffs_ == o.coeffs_; }

    std::string to_string() const;  // "(...)*t^-1 + (...) + (...)*t"

  private:
    std::map<int, Poly> coeffs_;
};

// Evaluates p with each variable replaced by a Laurent scalar; every
// variable of p must be assigned.
LaurentScalar eval_over_laurent(const Poly& p, const std::map<VarId, LaurentScalar>& assignment);

// A bounded Laurent point of a coordinate space: finitely many Point
// coefficients indexed by integer exponents. Boundedness is structural.
class LaurentPoint {
  public:
    LaurentPoint() = default;
    explicit LaurentPoint(CoordSpace space) : space_(std::move(space)) {}
    LaurentPoint(CoordSpace space, std::map<int, Point> coeffs);

    static LaurentPoint constant(const Point& p);  // supported at exponent 0

    const CoordSpace& space() const { return space_; }
    const std::map<int, Point>& coeffs() const { return coeffs_; }
    std::optional<int> min_exponent() const;
    std::optional<int> max_exponent() const;
    Point coeff(int exponent) const;  // zero point when absent
    bool is_zero() const { return coeffs_.empty(); }

    void set_coeff(int exponent, const Point& p);  // drops zero points

    // the Laurent scalar of one global coordinate
    LaurentScalar coordinate_series(std::size_t coord_index) const;

    bool operator==(const LaurentPoint& o) const { return space_ == o.space_ && coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoint& o) const { return !(*this == o); }

  private:
    CoordSpace space_;
    std::map<int, Point> coeffs_;
};

// Value at t = 0 of a pole-free point. Throws pole_at_zero when a negative
// exponent carries a nonzero coefficient; the limit does not exist then.
struct pole_at_zero : error {
    int min_exponent;
    explicit pole_at_zero(int e)
        : error("pole at t=0: least exponent is " + std::to_string(e)), min_exponent(e) {}
};
Point limit_at_zero(const LaurentPoint& y);

// Multiplication by t^{-s}: the coefficient at k+s moves to k.
LaurentPoint shift_exponent(const LaurentPoint& y, int s);

// t -> t^k on every exponent, k >= 1.
LaurentPoint reparametrize(const LaurentPoint& y, int k);

// The straight line c(t) = (1-t) x + t y, slotwise, together with an
// optional finite-dimensional component that stays constant along the curve.
struct LineCurve {
    Point x, y;
    std::vector<Rational> b_component;
};
LineCurve line_curve(const Point& x, const Point& y, std::vector<Rational> b_component = {});

struct CurveExpansion {
    LaurentPoint series;  // expansion of c(t0 + t); coefficients {0: c(t0), 1: y - x}
    std::vector<Rational> b_component;
};
CurveExpansion expand_at(const LineCurve& curve, const Rational& t0);

} // namespace borderlim

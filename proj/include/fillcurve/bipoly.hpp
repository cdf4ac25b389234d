#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fillcurve/embed.hpp"
#include "fillcurve/ext_field.hpp"
#include "fillcurve/field.hpp"
#include "fillcurve/point.hpp"

namespace fillcurve {

enum class Var { X0, X1, Y0, Y1 };

/// Affine chart: the two named coordinates are set to 1.
enum class Chart { X0Y0, X0Y1, X1Y0, X1Y1 };

inline constexpr Chart kAllCharts[] = {Chart::X0Y0, Chart::X0Y1, Chart::X1Y0, Chart::X1Y1};

std::string_view to_string(Var v);
std::string_view to_string(Chart c);

class AffinePoly;

/// Bi-homogeneous form of bi-degree (a, b) in (X0, X1; Y0, Y1). Coefficient
/// (i, j) multiplies X0^(a-i) X1^i Y0^(b-j) Y1^j, so every stored monomial has
/// the declared bi-degree and the zero form exists at any bi-degree.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(gf::Field field, unsigned a, unsigned b);

  static BiPoly monomial(const gf::Field& field, unsigned x0, unsigned x1, unsigned y0, unsigned y1, gf::Elem c);
  /// Binary form in X of degree coeffs.size()-1, coefficient i on X0^(d-i) X1^i.
  static BiPoly x_form(const gf::Field& field, std::span<const gf::Elem> coeffs);
  static BiPoly y_form(const gf::Field& field, std::span<const gf::Elem> coeffs);
  /// Grammar: term (('+'|'-') term)*, term := [coeff '*'] factor ('*' factor)*,
  /// factor := X0|X1|Y0|Y1 ['^' nat], coeff := nat | '[' nat (',' nat)* ']'.
  static BiPoly parse(std::string_view text, const gf::Field& field);

  const gf::Field& field() const { return field_; }
  unsigned a() const { return a_; }
  unsigned b() const { return b_; }
  std::pair<unsigned, unsigned> bidegree() const { return {a_, b_}; }

  gf::Elem coeff(unsigned i, unsigned j) const { return c_[i * (b_ + 1) + j]; }
  void set_coeff(unsigned i, unsigned j, gf::Elem v) { c_[i * (b_ + 1) + j] = v; }
  std::span<const gf::Elem> coeffs() const { return c_; }
  bool is_zero() const;
  std::size_t term_count() const;

  gf::Elem eval(gf::Elem x0, gf::Elem x1, gf::Elem y0, gf::Elem y1) const;
  gf::Elem eval(const PointPair& p) const { return eval(p.first.u0, p.first.u1, p.second.u0, p.second.u1); }

  /// Formal partial derivative; a block of degree 0 gives the zero form with
  /// that degree clamped at 0.
  BiPoly partial(Var v) const;
  /// Swaps the roles of the X and Y blocks.
  BiPoly transposed() const;
  /// Same form with coefficients pushed through a field embedding.
  BiPoly mapped(const gf::Embedding& emb) const;
  BiPoly scaled(gf::Elem s) const;
  AffinePoly dehomogenize(Chart chart) const;

  /// Canonical text: descending X0, then descending Y0; coefficient 1 omitted.
  std::string to_string() const;

  friend bool operator==(const BiPoly& f, const BiPoly& g) {
    return f.a_ == g.a_ && f.b_ == g.b_ && f.c_ == g.c_ && f.field_ == g.field_;
  }
  friend BiPoly operator+(const BiPoly& f, const BiPoly& g);
  friend BiPoly operator-(const BiPoly& f, const BiPoly& g);
  friend BiPoly operator*(const BiPoly& f, const BiPoly& g);
  friend BiPoly operator-(const BiPoly& f) { return f.scaled(f.field_.neg(f.field_.one())); }

 private:
  gf::Field field_;
  unsigned a_ = 0;
  unsigned b_ = 0;
  std::vector<gf::Elem> c_;
};

BiPoly pow(const BiPoly& f, unsigned n);

/// Cofactor H with G*H = F, if it exists. Throws ZeroDivisor for G = 0.
std::optional<BiPoly> divides(const BiPoly& g, const BiPoly& f);

/// Raw-array variant used in hot loops: returns true iff g divides f, where
/// both are given as row-major coefficient matrices of the stated bi-degrees.
bool divides_raw(const gf::Field& k, std::span<const gf::Elem> g, unsigned ga, unsigned gb,
                 std::span<const gf::Elem> f, unsigned fa, unsigned fb, std::vector<gf::Elem>& scratch);

/// Bivariate polynomial in chart variables x, y with declared degree bounds.
class AffinePoly {
 public:
  AffinePoly() = default;
  AffinePoly(gf::Field field, unsigned dx, unsigned dy);
  /// From coefficients of y^j, each a polynomial in x.
  static AffinePoly from_y_coeffs(const gf::Field& field, const std::vector<gf::Poly>& ys);

  const gf::Field& field() const { return field_; }
  unsigned bound_x() const { return dx_; }
  unsigned bound_y() const { return dy_; }
  gf::Elem coeff(unsigned i, unsigned j) const { return c_[i * (dy_ + 1) + j]; }
  void set_coeff(unsigned i, unsigned j, gf::Elem v) { c_[i * (dy_ + 1) + j] = v; }

  bool is_zero() const;
  /// Actual degrees; -1 for the zero polynomial.
  int degree_x() const;
  int degree_y() const;

  gf::Elem eval(gf::Elem x, gf::Elem y) const;
  AffinePoly swapped() const;
  /// Coefficient of y^j as a polynomial in x, for j = 0..degree_y().
  std::vector<gf::Poly> y_coeffs() const;
  /// The polynomial as an element of K[x]; requires degree_y() <= 0.
  gf::Poly x_only() const;
  /// Substitutes x = class of x in E, giving a polynomial in y over E.
  gf::UniPoly<gf::ExtField> substitute_x(const gf::ExtField& e) const;

  std::string to_string() const;

  /// Compares polynomials, ignoring declared bounds.
  friend bool operator==(const AffinePoly& f, const AffinePoly& g);

 private:
  gf::Field field_;
  unsigned dx_ = 0;
  unsigned dy_ = 0;
  std::vector<gf::Elem> c_;
};

enum class Elim { X, Y };

/// Sylvester resultant eliminating `var`, as a polynomial in the other
/// variable, using the actual degrees in `var`. Evaluates the Sylvester
/// determinant at enough points of a small extension field and interpolates;
/// falls back to resultant_bareiss when no table field is large enough.
gf::Poly resultant_elim(const AffinePoly& a, const AffinePoly& b, Elim var);

/// Same value as an exact determinant over K[x] by fraction-free elimination.
gf::Poly resultant_bareiss(const AffinePoly& a, const AffinePoly& b, Elim var);

/// Determinant of a square matrix over K[x] (Bareiss).
gf::Poly determinant(std::vector<std::vector<gf::Poly>> m, const gf::Field& field);

/// Greatest common factor of positive y-degree of all inputs (primitive in
/// K[x][y]); the constant 1 when they share none.
AffinePoly common_y_factor(const std::vector<AffinePoly>& polys);

}  // namespace fillcurve

#pragma once

#include <vector>

#include "fillcurve/factor.hpp"
#include "fillcurve/field.hpp"

namespace fillcurve::gf {

// Residue field E = K[x]/(m) for an irreducible m of any degree over a table
// field K. Elements are coefficient vectors of length deg m, so E can be far
// larger than anything log tables could hold. This is the second tower level
// used by smoothness certification, where deg m is the degree of a factor of
// a resultant.
class ExtField {
 public:
  using value_type = std::vector<Elem>;

  ExtField() = default;
  ExtField(Field base, Poly modulus);

  const Field& base() const { return base_; }
  const Poly& modulus() const { return modulus_; }
  unsigned degree() const { return d_; }

  value_type zero() const { return value_type(d_, base_.zero()); }
  value_type one() const {
    value_type v = zero();
    v[0] = base_.one();
    return v;
  }
  /// Class of x.
  value_type generator() const;
  value_type from_base(Elem c) const {
    value_type v = zero();
    v[0] = c;
    return v;
  }
  /// Image of a polynomial in x, i.e. f(theta).
  value_type from_poly(const Poly& f) const;
  Poly to_poly(const value_type& a) const { return Poly(base_, a); }

  bool is_zero(const value_type& a) const {
    for (Elem c : a)
      if (c.v) return false;
    return true;
  }
  value_type add(const value_type& a, const value_type& b) const;
  value_type sub(const value_type& a, const value_type& b) const;
  value_type neg(const value_type& a) const;
  value_type mul(const value_type& a, const value_type& b) const;
  /// Throws DivisionByZero.
  value_type inv(const value_type& a) const;

  friend bool operator==(const ExtField& x, const ExtField& y) {
    return x.base_ == y.base_ && x.modulus_ == y.modulus_;
  }

 private:
  Field base_;
  Poly modulus_;  // monic irreducible
  unsigned d_ = 0;
};

}  // namespace fillcurve::gf

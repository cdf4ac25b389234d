#include "fillcurve/ext_field.hpp"

namespace fillcurve::gf {

ExtField::ExtField(Field base, Poly modulus) : base_(std::move(base)), modulus_(modulus.monic()) {
  if (modulus_.degree() < 1) throw Error(ErrorKind::BadParameters, "residue field modulus must be nonconstant");
  d_ = static_cast<unsigned>(modulus_.degree());
}

ExtField::value_type ExtField::generator() const {
  if (d_ == 1) return from_base(base_.neg(modulus_.coeff(0)));
  value_type v = zero();
  v[1] = base_.one();
  return v;
}

ExtField::value_type ExtField::from_poly(const Poly& f) const {
  value_type v = rem(f, modulus_).coeffs();
  v.resize(d_, base_.zero());
  return v;
}

ExtField::value_type ExtField::add(const value_type& a, const value_type& b) const {
  value_type r(d_);
  for (unsigned i = 0; i < d_; ++i) r[i] = base_.add(a[i], b[i]);
  return r;
}

ExtField::value_type ExtField::sub(const value_type& a, const value_type& b) const {
  value_type r(d_);
  for (unsigned i = 0; i < d_; ++i) r[i] = base_.sub(a[i], b[i]);
  return r;
}

ExtField::value_type ExtField::neg(const value_type& a) const {
  value_type r(d_);
  for (unsigned i = 0; i < d_; ++i) r[i] = base_.neg(a[i]);
  return r;
}

ExtField::value_type ExtField::mul(const value_type& a, const value_type& b) const {
  if (is_zero(a) || is_zero(b)) return zero();
  std::vector<Elem> r(2 * d_ - 1, base_.zero());
  for (unsigned i = 0; i < d_; ++i) {
    if (a[i].v == 0) continue;
    for (unsigned j = 0; j < d_; ++j) {
      if (b[j].v == 0) continue;
      r[i + j] = base_.add(r[i + j], base_.mul(a[i], b[j]));
    }
  }
  const auto& m = modulus_.coeffs();
  for (std::size_t k = r.size(); k-- > d_;) {
    if (r[k].v == 0) continue;
    const Elem c = r[k];
    for (unsigned j = 0; j < d_; ++j) r[k - d_ + j] = base_.sub(r[k - d_ + j], base_.mul(c, m[j]));
  }
  r.resize(d_);
  return r;
}

ExtField::value_type ExtField::inv(const value_type& a) const {
  if (is_zero(a)) throw Error(ErrorKind::DivisionByZero, "inverse of zero in residue field");
  auto [g, s, t] = ext_gcd(to_poly(a), modulus_);
  (void)t;
  if (g.degree() != 0) throw std::logic_error("residue field modulus is not irreducible");
  return from_poly(s);
}

}  // namespace fillcurve::gf

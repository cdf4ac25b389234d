#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "fillcurve/error.hpp"

namespace fillcurve::gf {

// Dense univariate polynomial over a field K. K provides value_type, zero(),
// one(), is_zero(), add(), sub(), neg(), mul() and inv(); both Field and
// ExtField qualify.
template <class K>
class UniPoly {
 public:
  using field_type = K;
  using value_type = typename K::value_type;

  UniPoly() = default;
  explicit UniPoly(K field) : field_(std::move(field)) {}
  UniPoly(K field, std::vector<value_type> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
  }

  static UniPoly constant(const K& field, const value_type& c) { return UniPoly(field, {c}); }
  static UniPoly monomial(const K& field, const value_type& c, std::size_t degree) {
    std::vector<value_type> v(degree + 1, field.zero());
    v[degree] = c;
    return UniPoly(field, std::move(v));
  }
  static UniPoly x(const K& field) { return monomial(field, field.one(), 1); }

  const K& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<value_type>& coeffs() const { return c_; }
  value_type coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  value_type lead() const { return c_.empty() ? field_.zero() : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == field_.one(); }

  value_type operator()(const value_type& t) const {
    value_type acc = field_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, t), c_[i]);
    return acc;
  }

  friend bool operator==(const UniPoly& f, const UniPoly& g) { return f.c_ == g.c_; }

  friend UniPoly operator+(const UniPoly& f, const UniPoly& g) {
    const K& k = f.field_;
    std::vector<value_type> r(std::max(f.c_.size(), g.c_.size()), k.zero());
    for (std::size_t i = 0; i < f.c_.size(); ++i) r[i] = f.c_[i];
    for (std::size_t i = 0; i < g.c_.size(); ++i) r[i] = k.add(r[i], g.c_[i]);
    return UniPoly(k, std::move(r));
  }

  friend UniPoly operator-(const UniPoly& f) {
    std::vector<value_type> r(f.c_);
    for (auto& x : r) x = f.field_.neg(x);
    return UniPoly(f.field_, std::move(r));
  }

  friend UniPoly operator-(const UniPoly& f, const UniPoly& g) {
    const K& k = f.field_;
    std::vector<value_type> r(std::max(f.c_.size(), g.c_.size()), k.zero());
    for (std::size_t i = 0; i < f.c_.size(); ++i) r[i] = f.c_[i];
    for (std::size_t i = 0; i < g.c_.size(); ++i) r[i] = k.sub(r[i], g.c_[i]);
    return UniPoly(k, std::move(r));
  }

  friend UniPoly operator*(const UniPoly& f, const UniPoly& g) {
    const K& k = f.field_;
    if (f.is_zero() || g.is_zero()) return UniPoly(k);
    std::vector<value_type> r(f.c_.size() + g.c_.size() - 1, k.zero());
    for (std::size_t i = 0; i < f.c_.size(); ++i) {
      if (k.is_zero(f.c_[i])) continue;
      for (std::size_t j = 0; j < g.c_.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(f.c_[i], g.c_[j]));
    }
    return UniPoly(k, std::move(r));
  }

  UniPoly scaled(const value_type& s) const {
    std::vector<value_type> r(c_);
    for (auto& x : r) x = field_.mul(x, s);
    return UniPoly(field_, std::move(r));
  }

  UniPoly shifted(std::size_t n) const {
    if (is_zero()) return *this;
    std::vector<value_type> r(n, field_.zero());
    r.insert(r.end(), c_.begin(), c_.end());
    return UniPoly(field_, std::move(r));
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(lead()));
  }

  UniPoly derivative() const {
    std::vector<value_type> r;
    for (std::size_t i = 1; i < c_.size(); ++i) {
      value_type m = field_.zero();
      // i * c_i by repeated addition keeps this valid for every K
      value_type step = c_[i];
      std::size_t n = i;
      while (n) {
        if (n & 1) m = field_.add(m, step);
        step = field_.add(step, step);
        n >>= 1;
      }
      r.push_back(m);
    }
    return UniPoly(field_, std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  K field_;
  std::vector<value_type> c_;
};

template <class K>
std::pair<UniPoly<K>, UniPoly<K>> divmod(const UniPoly<K>& f, const UniPoly<K>& g) {
  const K& k = f.field();
  if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (f.degree() < g.degree()) return {UniPoly<K>(k), f};
  std::vector<typename K::value_type> r(f.coeffs());
  const auto& gc = g.coeffs();
  const std::size_t dg = gc.size() - 1;
  const auto lead_inv = k.inv(gc.back());
  std::vector<typename K::value_type> q(r.size() - dg, k.zero());
  for (std::size_t i = r.size(); i-- > dg;) {
    if (k.is_zero(r[i])) continue;
    auto c = k.mul(r[i], lead_inv);
    q[i - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j) r[i - dg + j] = k.sub(r[i - dg + j], k.mul(c, gc[j]));
  }
  r.resize(dg);
  return {UniPoly<K>(k, std::move(q)), UniPoly<K>(k, std::move(r))};
}

template <class K>
UniPoly<K> rem(const UniPoly<K>& f, const UniPoly<K>& g) {
  return divmod(f, g).second;
}

/// Monic gcd; zero only when both inputs are zero.
template <class K>
UniPoly<K> gcd(UniPoly<K> f, UniPoly<K> g) {
  while (!g.is_zero()) {
    auto r = rem(f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return f.monic();
}

/// Returns (d, s, t) with s*f + t*g = d = gcd(f, g) monic.
template <class K>
std::tuple<UniPoly<K>, UniPoly<K>, UniPoly<K>> ext_gcd(const UniPoly<K>& f, const UniPoly<K>& g) {
  const K& k = f.field();
  UniPoly<K> r0 = f, r1 = g;
  UniPoly<K> s0 = UniPoly<K>::constant(k, k.one()), s1(k);
  UniPoly<K> t0(k), t1 = UniPoly<K>::constant(k, k.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  auto li = k.inv(r0.lead());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

template <class K>
UniPoly<K> mulmod(const UniPoly<K>& f, const UniPoly<K>& g, const UniPoly<K>& m) {
  return rem(f * g, m);
}

template <class K>
UniPoly<K> powmod(UniPoly<K> base, std::uint64_t e, const UniPoly<K>& m) {
  const K& k = base.field();
  UniPoly<K> acc = rem(UniPoly<K>::constant(k, k.one()), m);
  base = rem(base, m);
  while (e) {
    if (e & 1) acc = mulmod(acc, base, m);
    e >>= 1;
    if (e) base = mulmod(base, base, m);
  }
  return acc;
}

/// Exact quotient; throws when g does not divide f.
template <class K>
UniPoly<K> divexact(const UniPoly<K>& f, const UniPoly<K>& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

}  // namespace fillcurve::gf

#include <algorithm>

#include "fillcurve/bipoly.hpp"
#include "fillcurve/error.hpp"

namespace fillcurve {

using gf::Elem;
using gf::Field;
using gf::Poly;

AffinePoly::AffinePoly(Field field, unsigned dx, unsigned dy)
    : field_(std::move(field)), dx_(dx), dy_(dy), c_(std::size_t{dx + 1} * (dy + 1), Elem{0}) {}

AffinePoly AffinePoly::from_y_coeffs(const Field& field, const std::vector<Poly>& ys) {
  int dx = 0;
  for (const auto& p : ys) dx = std::max(dx, p.degree());
  const unsigned dy = ys.empty() ? 0 : static_cast<unsigned>(ys.size() - 1);
  AffinePoly r(field, static_cast<unsigned>(dx), dy);
  for (unsigned j = 0; j < ys.size(); ++j)
    for (int i = 0; i <= ys[j].degree(); ++i) r.set_coeff(static_cast<unsigned>(i), j, ys[j].coeff(i));
  return r;
}

bool AffinePoly::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Elem c) { return c.v == 0; });
}

int AffinePoly::degree_x() const {
  for (int i = static_cast<int>(dx_); i >= 0; --i)
    for (unsigned j = 0; j <= dy_; ++j)
      if (coeff(i, j).v) return i;
  return -1;
}

int AffinePoly::degree_y() const {
  for (int j = static_cast<int>(dy_); j >= 0; --j)
    for (unsigned i = 0; i <= dx_; ++i)
      if (coeff(i, j).v) return j;
  return -1;
}

Elem AffinePoly::eval(Elem x, Elem y) const {
  const Field& k = field_;
  Elem acc = k.zero();
  for (int i = static_cast<int>(dx_); i >= 0; --i) {
    Elem row = k.zero();
    for (int j = static_cast<int>(dy_); j >= 0; --j) row = k.add(k.mul(row, y), coeff(i, j));
    acc = k.add(k.mul(acc, x), row);
  }
  return acc;
}

AffinePoly AffinePoly::swapped() const {
  AffinePoly r(field_, dy_, dx_);
  for (unsigned i = 0; i <= dx_; ++i)
    for (unsigned j = 0; j <= dy_; ++j) r.set_coeff(j, i, coeff(i, j));
  return r;
}

std::vector<Poly> AffinePoly::y_coeffs() const {
  const int dy = degree_y();
  std::vector<Poly> out;
  for (int j = 0; j <= dy; ++j) {
    std::vector<Elem> c(dx_ + 1);
    for (unsigned i = 0; i <= dx_; ++i) c[i] = coeff(i, j);
    out.emplace_back(field_, std::move(c));
  }
  return out;
}

Poly AffinePoly::x_only() const {
  if (degree_y() > 0) throw std::logic_error("AffinePoly::x_only on a polynomial involving y");
  std::vector<Elem> c(dx_ + 1);
  for (unsigned i = 0; i <= dx_; ++i) c[i] = coeff(i, 0);
  return Poly(field_, std::move(c));
}

gf::UniPoly<gf::ExtField> AffinePoly::substitute_x(const gf::ExtField& e) const {
  std::vector<gf::ExtField::value_type> c;
  for (const auto& p : y_coeffs()) c.push_back(e.from_poly(p));
  return gf::UniPoly<gf::ExtField>(e, std::move(c));
}

std::string AffinePoly::to_string() const {
  std::string out;
  for (int i = static_cast<int>(dx_); i >= 0; --i) {
    for (int j = static_cast<int>(dy_); j >= 0; --j) {
      const Elem c = coeff(i, j);
      if (!c.v) continue;
      std::string m;
      if (i) m += i == 1 ? "x" : "x^" + std::to_string(i);
      if (j) m += (m.empty() ? "" : "*") + (j == 1 ? std::string("y") : "y^" + std::to_string(j));
      if (!out.empty()) out += " + ";
      if (m.empty())
        out += field_.format(c);
      else if (c == field_.one())
        out += m;
      else
        out += field_.format(c) + "*" + m;
    }
  }
  return out.empty() ? "0" : out;
}

bool operator==(const AffinePoly& f, const AffinePoly& g) {
  const unsigned dx = std::max(f.dx_, g.dx_), dy = std::max(f.dy_, g.dy_);
  auto at = [](const AffinePoly& p, unsigned i, unsigned j) {
    return i <= p.dx_ && j <= p.dy_ ? p.coeff(i, j) : Elem{0};
  };
  for (unsigned i = 0; i <= dx; ++i)
    for (unsigned j = 0; j <= dy; ++j)
      if (at(f, i, j) != at(g, i, j)) return false;
  return true;
}

Poly determinant(std::vector<std::vector<Poly>> m, const Field& field) {
  const std::size_t n = m.size();
  const Poly one = Poly::constant(field, field.one());
  if (n == 0) return one;
  bool negate = false;
  Poly prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Poly(field);
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = gf::divexact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = Poly(field);
    }
    prev = m[k][k];
  }
  Poly d = m[n - 1][n - 1];
  return negate ? -d : d;
}

namespace {

// Coefficients of the eliminated variable, each a polynomial in the other.
std::vector<Poly> coeffs_in(const AffinePoly& f, Elim var) {
  return var == Elim::Y ? f.y_coeffs() : f.swapped().y_coeffs();
}

}  // namespace

Poly resultant_bareiss(const AffinePoly& a, const AffinePoly& b, Elim var) {
  gf::require_same(a.field(), b.field(), "resultant");
  const Field& k = a.field();
  const auto ac = coeffs_in(a, var), bc = coeffs_in(b, var);
  if (ac.empty() || bc.empty()) return Poly(k);
  const std::size_t m = ac.size() - 1, n = bc.size() - 1;
  const std::size_t size = m + n;
  std::vector<std::vector<Poly>> s(size, std::vector<Poly>(size, Poly(k)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) s[r][r + j] = ac[m - j];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) s[n + r][r + j] = bc[n - j];
  return determinant(std::move(s), k);
}

namespace {

Elem numeric_det(std::vector<std::vector<Elem>>& m, const Field& k) {
  const std::size_t n = m.size();
  Elem d = k.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && k.is_zero(m[r][c])) ++r;
    if (r == n) return k.zero();
    if (r != c) {
      std::swap(m[r], m[c]);
      d = k.neg(d);
    }
    d = k.mul(d, m[c][c]);
    const Elem inv = k.inv(m[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (k.is_zero(m[i][c])) continue;
      const Elem f = k.mul(m[i][c], inv);
      for (std::size_t j = c + 1; j < n; ++j) m[i][j] = k.sub(m[i][j], k.mul(f, m[c][j]));
    }
  }
  return d;
}

}  // namespace

Poly resultant_elim(const AffinePoly& a, const AffinePoly& b, Elim var) {
  gf::require_same(a.field(), b.field(), "resultant");
  const Field& k = a.field();
  const auto ac = coeffs_in(a, var), bc = coeffs_in(b, var);
  if (ac.empty() || bc.empty()) return Poly(k);
  const std::size_t m = ac.size() - 1, n = bc.size() - 1;
  int da = 0, db = 0;
  for (const auto& c : ac) da = std::max(da, c.degree());
  for (const auto& c : bc) db = std::max(db, c.degree());
  const std::uint64_t bound = n * static_cast<std::uint64_t>(da) + m * static_cast<std::uint64_t>(db);
  if (m + n == 0) return Poly::constant(k, k.one());
  // smallest GF(q^e) with more than `bound` elements
  unsigned e = 1;
  std::uint64_t size = k.size();
  while (size <= bound) {
    size *= k.size();
    ++e;
  }
  if (size > gf::kMaxTableFieldSize) return resultant_bareiss(a, b, var);
  const Field big = e == 1 ? k : (k.is_prime_field() ? Field::make(k.characteristic(), e)
                                                      : Field::make(k.characteristic(), e, k));
  const gf::Embedding emb(k, big);
  std::vector<Poly> am, bm;
  for (const auto& c : ac) am.push_back(emb.map(c));
  for (const auto& c : bc) bm.push_back(emb.map(c));

  const std::size_t npts = bound + 1, dim = m + n;
  std::vector<Elem> xs(npts), ys(npts);
  std::vector<std::vector<Elem>> s(dim, std::vector<Elem>(dim));
  for (std::size_t t = 0; t < npts; ++t) {
    const Elem x = big.at(static_cast<std::uint32_t>(t));
    xs[t] = x;
    for (auto& row : s) std::fill(row.begin(), row.end(), big.zero());
    std::vector<Elem> av(m + 1), bv(n + 1);
    for (std::size_t j = 0; j <= m; ++j) av[j] = am[j](x);
    for (std::size_t j = 0; j <= n; ++j) bv[j] = bm[j](x);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t j = 0; j <= m; ++j) s[r][r + j] = av[m - j];
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t j = 0; j <= n; ++j) s[n + r][r + j] = bv[n - j];
    ys[t] = numeric_det(s, big);
  }
  // Newton divided differences, then expand to monomial coefficients
  std::vector<Elem> dd = ys;
  for (std::size_t lvl = 1; lvl < npts; ++lvl)
    for (std::size_t t = npts - 1; t >= lvl; --t)
      dd[t] = big.div(big.sub(dd[t], dd[t - 1]), big.sub(xs[t], xs[t - lvl]));
  std::vector<Elem> c(npts, big.zero());
  for (std::size_t t = npts; t-- > 0;) {
    // c = c * (x - xs[t]) + dd[t]
    for (std::size_t j = npts - 1; j > 0; --j) c[j] = big.sub(c[j - 1], big.mul(c[j], xs[t]));
    c[0] = big.sub(dd[t], big.mul(c[0], xs[t]));
  }
  std::vector<Elem> out(npts);
  for (std::size_t j = 0; j < npts; ++j) {
    const auto pre = emb.preimage(c[j]);
    if (!pre) throw std::logic_error("resultant interpolation left the base field");
    out[j] = *pre;
  }
  return Poly(k, std::move(out));
}

namespace {

using YPoly = std::vector<Poly>;  // coefficients of y^j

void trim(YPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

Poly content(const YPoly& f, const Field& k) {
  Poly g(k);
  for (const auto& c : f) g = gf::gcd(g, c);
  return g;
}

YPoly primitive(YPoly f, const Field& k) {
  trim(f);
  if (f.empty()) return f;
  const Poly c = content(f, k);
  for (auto& x : f) x = gf::divexact(x, c);
  return f;
}

// lc(b)^s * a mod b in K[x][y], for deg a >= deg b >= 1.
YPoly pseudo_rem(YPoly a, const YPoly& b) {
  const std::size_t n = b.size() - 1;
  const Poly& lb = b.back();
  while (a.size() > n) {
    const std::size_t shift = a.size() - 1 - n;
    const Poly la = a.back();
    for (auto& x : a) x = x * lb;
    for (std::size_t j = 0; j <= n; ++j) a[shift + j] = a[shift + j] - la * b[j];
    trim(a);
  }
  return a;
}

// Primitive gcd of positive y-degree, or empty when the inputs share no such
// factor. Zero inputs are ignored.
YPoly y_gcd(YPoly a, YPoly b, const Field& k) {
  a = primitive(std::move(a), k);
  b = primitive(std::move(b), k);
  if (a.empty()) return b.size() > 1 ? b : YPoly{};
  if (b.empty()) return a.size() > 1 ? a : YPoly{};
  if (a.size() < b.size()) std::swap(a, b);
  while (b.size() > 1) {
    YPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = primitive(std::move(r), k);
    if (b.empty()) break;
  }
  if (!b.empty()) return {};  // reached a nonzero y-free remainder
  if (a.size() <= 1) return {};
  // normalize: leading coefficient of the leading x-polynomial is 1
  const Elem s = k.inv(a.back().lead());
  for (auto& x : a) x = x.scaled(s);
  return a;
}

}  // namespace

AffinePoly common_y_factor(const std::vector<AffinePoly>& polys) {
  if (polys.empty()) throw Error(ErrorKind::BadParameters, "common factor of no polynomials");
  const Field& k = polys.front().field();
  std::optional<YPoly> g;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    YPoly y = p.y_coeffs();
    if (!g) {
      g = primitive(y, k);
      if (g->size() <= 1) return AffinePoly::from_y_coeffs(k, {Poly::constant(k, k.one())});
      continue;
    }
    *g = y_gcd(*g, std::move(y), k);
    if (g->empty()) return AffinePoly::from_y_coeffs(k, {Poly::constant(k, k.one())});
  }
  if (!g) return AffinePoly::from_y_coeffs(k, {Poly(k)});
  const Elem s = k.inv(g->back().lead());
  for (auto& x : *g) x = x.scaled(s);
  return AffinePoly::from_y_coeffs(k, *g);
}

}  // namespace fillcurve

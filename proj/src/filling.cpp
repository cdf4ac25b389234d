#include "fillcurve/filling.hpp"

#include <stdexcept>

#include "fillcurve/error.hpp"
#include "fillcurve/geom.hpp"

namespace fillcurve {

using gf::Elem;
using gf::Field;

std::pair<BiPoly, BiPoly> kx_ky(const Field& k) {
  const unsigned q = k.size();
  const Elem one = k.one(), minus = k.neg(k.one());
  const BiPoly kx = BiPoly::monomial(k, q, 1, 0, 0, one) + BiPoly::monomial(k, 1, q, 0, 0, minus);
  return {kx, kx.transposed()};
}

bool is_filling(const BiPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the zero form defines no curve");
  const Field& k = f.field();
  const auto line = enum_p1(k);
  for (const auto& u : line) {
    const auto c = fix_first(f, u);
    for (const auto& v : line) {
      Elem acc = k.zero();
      if (k.is_zero(v.u0)) {
        acc = c.back();
      } else {
        for (std::size_t j = c.size(); j-- > 0;) acc = k.add(k.mul(acc, v.u1), c[j]);
      }
      if (!k.is_zero(acc)) return false;
    }
  }
  return true;
}

namespace {

// L = Z0^(q-1) Z1 - Z1^q as a binary form in X (degree q).
BiPoly l_form(const Field& k) {
  const unsigned q = k.size();
  return BiPoly::monomial(k, q - 1, 1, 0, 0, k.one()) + BiPoly::monomial(k, 0, q, 0, 0, k.neg(k.one()));
}

BiPoly exact_quotient(const BiPoly& num, const BiPoly& den) {
  auto h = divides(den, num);
  if (!h) throw std::logic_error("decompose: expected exact division failed");
  return *h;
}

}  // namespace

Decomposition decompose(const BiPoly& F) {
  const Field& k = F.field();
  const unsigned q = k.size();
  const unsigned a = F.a(), b = F.b();
  if (a < q + 1 || b < q + 1)
    throw Error(ErrorKind::BidegreeTooSmall, "decomposition needs a, b >= q + 1, got (" + std::to_string(a) + "," +
                                                 std::to_string(b) + ")");
  if (F.is_zero() || !is_filling(F)) throw Error(ErrorKind::NotFilling, "form does not vanish on all rational points");

  // (1) affine part phi(x, y) = F(1, x; 1, y) = u (x^q - x) + v (y^q - y)
  const AffinePoly phi = F.dehomogenize(Chart::X0Y0);
  std::vector<std::vector<Elem>> r(a + 1, std::vector<Elem>(b + 1, k.zero()));
  for (unsigned i = 0; i <= a; ++i)
    for (unsigned j = 0; j <= b; ++j) r[i][j] = phi.coeff(i, j);
  std::vector<std::vector<Elem>> u(a - q + 1, std::vector<Elem>(b + 1, k.zero()));
  for (unsigned i = a; i >= q; --i) {
    for (unsigned j = 0; j <= b; ++j) {
      const Elem c = r[i][j];
      if (k.is_zero(c)) continue;
      u[i - q][j] = c;
      r[i][j] = k.zero();
      r[i - q + 1][j] = k.add(r[i - q + 1][j], c);  // x^i = x^(i-q) (x^q - x) + x^(i-q+1)
    }
  }
  std::vector<std::vector<Elem>> v(a + 1, std::vector<Elem>(b - q + 1, k.zero()));
  for (unsigned i = 0; i < q; ++i) {
    for (unsigned j = b; j >= q; --j) {
      const Elem c = r[i][j];
      if (k.is_zero(c)) continue;
      v[i][j - q] = c;
      r[i][j] = k.zero();
      r[i][j - q + 1] = k.add(r[i][j - q + 1], c);
    }
  }
  for (unsigned i = 0; i < q; ++i)
    for (unsigned j = 0; j < q; ++j)
      if (!k.is_zero(r[i][j])) throw Error(ErrorKind::NotFilling, "affine part does not vanish on the rational plane");

  // (2) homogenize with signs so that F = U L_X + V L_Y, L = Z0^(q-1) Z1 - Z1^q
  BiPoly U(k, a - q, b), V(k, a, b - q);
  for (unsigned i = 0; i <= a - q; ++i)
    for (unsigned j = 0; j <= b; ++j) U.set_coeff(i, j, k.neg(u[i][j]));
  for (unsigned i = 0; i <= a; ++i)
    for (unsigned j = 0; j <= b - q; ++j) V.set_coeff(i, j, k.neg(v[i][j]));
  const BiPoly lx = l_form(k), ly = lx.transposed();
  const auto [kx, ky] = kx_ky(k);

  // (3) U = X0 U0 + X1^(a-q) f1(Y); f1 vanishes on P^1(F_q), so f1 = f2 L_Y
  BiPoly f1(k, 0, b);
  for (unsigned j = 0; j <= b; ++j) f1.set_coeff(0, j, U.coeff(a - q, j));
  BiPoly U0(k, a - q - 1, b);
  for (unsigned i = 0; i < a - q; ++i)
    for (unsigned j = 0; j <= b; ++j) U0.set_coeff(i, j, U.coeff(i, j));
  const BiPoly f2 = exact_quotient(f1, ly);
  const BiPoly x1_pow = BiPoly::monomial(k, 0, a - q, 0, 0, k.one());
  const BiPoly V0 = V + x1_pow * f2 * lx;

  // (4) V0 = Y0 G + Y1^(b-q) g1(X); g1 vanishes on P^1(F_q), so g1 = f3 K_X
  BiPoly g1(k, a, 0);
  for (unsigned i = 0; i <= a; ++i) g1.set_coeff(i, 0, V0.coeff(i, b - q));
  BiPoly G(k, a, b - q - 1);
  for (unsigned i = 0; i <= a; ++i)
    for (unsigned j = 0; j < b - q; ++j) G.set_coeff(i, j, V0.coeff(i, j));
  const BiPoly f3 = exact_quotient(g1, kx);
  const BiPoly y1_pow = BiPoly::monomial(k, 0, 0, 0, b - q, k.one());

  Decomposition d{U0 + f3 * y1_pow * ly, G, kx, ky};
  if (d.recombine() != F) throw std::logic_error("decompose: recombination mismatch");
  return d;
}

std::string_view to_string(Consistency c) {
  return c == Consistency::Consistent ? "consistent" : "contradiction";
}

Consistency min_bidegree_check(const BiPoly& f, bool irreducible) {
  if (f.is_zero() || !is_filling(f)) throw Error(ErrorKind::NotFilling, "form does not vanish on all rational points");
  const unsigned q = f.field().size();
  if (irreducible && (f.a() < q + 1 || f.b() < q + 1)) return Consistency::Contradiction;
  return Consistency::Consistent;
}

}  // namespace fillcurve

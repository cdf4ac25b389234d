#include "fillcurve/factor.hpp"

#include <algorithm>
#include <map>

#include "fillcurve/embed.hpp"

namespace fillcurve::gf {

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned r = 2; r * r <= n; ++r) {
    if (n % r) continue;
    out.push_back(r);
    while (n % r == 0) n /= r;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool poly_less(const Poly& f, const Poly& g) {
  if (f.degree() != g.degree()) return f.degree() < g.degree();
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Poly pth_root(const Poly& f) {
  const Field& k = f.field();
  const std::uint32_t p = k.characteristic();
  const std::uint64_t root_exp = k.size() / p;  // a^(Q/p) is the p-th root of a
  std::vector<Elem> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(k.pow(f.coeffs()[i], root_exp));
  return Poly(k, std::move(c));
}

Poly random_poly(const Field& k, int degree_below, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, k.size() - 1);
  std::vector<Elem> c(static_cast<std::size_t>(degree_below));
  for (auto& x : c) x = Elem{dist(rng)};
  return Poly(k, std::move(c));
}

}  // namespace

Poly frobenius_power_x(const Poly& m, std::uint64_t q, unsigned k) {
  Poly h = rem(Poly::x(m.field()), m);
  for (unsigned i = 0; i < k; ++i) h = powmod(h, q, m);
  return h;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  const Poly m = f.monic();
  const auto n = static_cast<unsigned>(m.degree());
  const std::uint64_t q = m.field().size();
  const Poly x = Poly::x(m.field());
  if (!(frobenius_power_x(m, q, n) == rem(x, m))) return false;
  for (unsigned r : prime_divisors(n)) {
    const Poly h = frobenius_power_x(m, q, n / r);
    if (gcd(m, h - x).degree() != 0) return false;
  }
  return true;
}

std::vector<Factor> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree decomposition of zero");
  const Field& k = f.field();
  const Poly one = Poly::constant(k, k.one());
  std::vector<Factor> out;
  Poly c = gcd(f, f.derivative());
  Poly w = divexact(f.monic(), c);
  unsigned i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = divexact(w, y);
    if (fac.degree() > 0) out.push_back({fac, i});
    w = y;
    c = divexact(c, y);
    ++i;
  }
  if (c.degree() > 0) {
    const unsigned p = k.characteristic();
    for (auto& [g, mult] : squarefree_decomposition(pth_root(c))) out.push_back({g, mult * p});
  }
  return out;
}

std::vector<std::pair<Poly, unsigned>> distinct_degree(const Poly& f) {
  const Field& k = f.field();
  std::vector<std::pair<Poly, unsigned>> out;
  Poly rest = f.monic();
  const Poly x = Poly::x(k);
  Poly h = rem(x, rest);
  unsigned i = 1;
  while (rest.degree() >= 2 * static_cast<int>(i)) {
    h = powmod(h, k.size(), rest);
    Poly g = gcd(rest, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      rest = divexact(rest, g);
      h = rem(h, rest);
    }
    ++i;
  }
  if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
  return out;
}

std::vector<Poly> equal_degree(const Poly& f, unsigned d, std::mt19937_64& rng) {
  const Field& k = f.field();
  const auto n = static_cast<unsigned>(f.degree());
  if (n == d) return {f.monic()};
  const std::uint64_t q = k.size();
  const Poly one = Poly::constant(k, k.one());
  for (;;) {
    Poly h = random_poly(k, static_cast<int>(n), rng);
    if (h.degree() < 1) continue;
    Poly t(k);
    if (k.characteristic() == 2) {
      // Absolute trace to GF(2): sum of h^(2^i) for i < d * log2(q).
      unsigned bits = 0;
      for (std::uint64_t s = q; s > 1; s >>= 1) ++bits;
      Poly acc = h;
      t = h;
      for (unsigned i = 1; i < bits * d; ++i) {
        acc = mulmod(acc, acc, f);
        t = t + acc;
      }
    } else {
      // h^((q^d - 1)/2) = (prod_{i<d} h^(q^i))^((q-1)/2)
      Poly norm = h, hq = h;
      for (unsigned i = 1; i < d; ++i) {
        hq = powmod(hq, q, f);
        norm = mulmod(norm, hq, f);
      }
      t = powmod(norm, (q - 1) / 2, f) - one;
    }
    Poly g = gcd(f, t);
    if (g.degree() > 0 && g.degree() < static_cast<int>(n)) {
      auto left = equal_degree(g, d, rng);
      auto right = equal_degree(divexact(f, g), d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

Factorization factor(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "factorization of the zero polynomial");
  std::mt19937_64 rng(seed);
  Factorization out{f.lead(), {}};
  std::vector<Factor> raw;
  for (auto& [s, mult] : squarefree_decomposition(f))
    for (auto& [g, d] : distinct_degree(s))
      for (auto& irr : equal_degree(g, d, rng)) raw.push_back({irr, mult});
  std::sort(raw.begin(), raw.end(), [](const Factor& a, const Factor& b) { return poly_less(a.poly, b.poly); });
  for (auto& fac : raw) {
    if (!out.factors.empty() && out.factors.back().poly == fac.poly)
      out.factors.back().multiplicity += fac.multiplicity;
    else
      out.factors.push_back(fac);
  }
  return out;
}

Poly expand(const Field& field, const Factorization& fac) {
  Poly acc = Poly::constant(field, fac.unit);
  for (const auto& f : fac.factors)
    for (unsigned i = 0; i < f.multiplicity; ++i) acc = acc * f.poly;
  return acc;
}

std::vector<Elem> roots(const Poly& f, const Field& field) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
  const Embedding emb(f.field(), field);
  const Poly g = emb.map(f);
  if (g.degree() < 1) return {};
  const Poly x = Poly::x(field);
  const Poly h = powmod(x, field.size(), g.monic());
  const Poly split = gcd(g, h - x);
  std::vector<Elem> out;
  if (split.degree() < 1) return out;
  for (const auto& fac : factor(split).factors) out.push_back(field.neg(fac.poly.coeff(0)));
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_poly(const Poly& f, char var) {
  const Field& k = f.field();
  std::string out;
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].v == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += k.format(c[i]);
      continue;
    }
    if (c[i] != k.one()) out += k.format(c[i]) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace fillcurve::gf

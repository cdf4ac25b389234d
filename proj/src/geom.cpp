#include "fillcurve/geom.hpp"

#include <thread>

#include "fillcurve/embed.hpp"
#include "fillcurve/error.hpp"

namespace fillcurve {

using gf::Elem;
using gf::Field;

std::vector<ProjPoint> enum_p1(const Field& k) {
  std::vector<ProjPoint> out;
  out.reserve(std::size_t{k.size()} + 1);
  for (Elem t : k.elements()) out.push_back({k.one(), t});
  out.push_back({k.zero(), k.one()});
  return out;
}

std::vector<PointPair> enum_p1xp1(const Field& k) {
  const auto line = enum_p1(k);
  std::vector<PointPair> out;
  out.reserve(line.size() * line.size());
  for (const auto& u : line)
    for (const auto& v : line) out.push_back({u, v});
  return out;
}

P3Point segre(const Field& k, const PointPair& p) {
  P3Point r{{k.mul(p.first.u0, p.second.u0), k.mul(p.first.u0, p.second.u1), k.mul(p.first.u1, p.second.u0),
             k.mul(p.first.u1, p.second.u1)}};
  for (Elem c : r.t) {
    if (k.is_zero(c)) continue;
    const Elem inv = k.inv(c);
    for (auto& x : r.t) x = k.mul(x, inv);
    break;
  }
  return r;
}

Field extension_of(const Field& k, unsigned m) {
  if (m == 0) throw Error(ErrorKind::BadParameters, "extension degree must be positive");
  if (m == 1) return k;
  if (k.is_prime_field()) return Field::make(k.characteristic(), m);
  return Field::make(k.characteristic(), m, k);
}

std::vector<Elem> fix_first(const BiPoly& f, const ProjPoint& x) {
  const Field& k = f.field();
  std::vector<Elem> c(f.b() + 1, k.zero());
  // x0^(a-i) x1^i for the normalized point
  std::vector<Elem> w(f.a() + 1, k.zero());
  if (k.is_zero(x.u0)) {
    w[f.a()] = k.one();
  } else {
    Elem p = k.one();
    for (unsigned i = 0; i <= f.a(); ++i) {
      w[i] = k.mul(p, k.pow(x.u0, f.a() - i));
      p = k.mul(p, x.u1);
    }
  }
  for (unsigned i = 0; i <= f.a(); ++i) {
    if (k.is_zero(w[i])) continue;
    for (unsigned j = 0; j <= f.b(); ++j) c[j] = k.add(c[j], k.mul(w[i], f.coeff(i, j)));
  }
  return c;
}

namespace {

// Zeros of a binary form of degree b among the points of P^1(k).
std::uint64_t count_form_zeros(const Field& k, const std::vector<Elem>& c) {
  bool all_zero = true;
  for (Elem x : c) all_zero = all_zero && k.is_zero(x);
  if (all_zero) return std::uint64_t{k.size()} + 1;
  std::uint64_t n = k.is_zero(c.back()) ? 1 : 0;  // the point (0, 1)
  for (std::uint32_t t = 0; t < k.size(); ++t) {
    Elem acc = k.zero();
    for (std::size_t j = c.size(); j-- > 0;) acc = k.add(k.mul(acc, Elem{t}), c[j]);
    if (k.is_zero(acc)) ++n;
  }
  return n;
}

}  // namespace

std::uint64_t count_points(const BiPoly& f, unsigned m, const CountOptions& opts) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot count points of the zero form");
  const Field& k = f.field();
  const std::uint64_t s = std::uint64_t{k.size()};
  std::uint64_t n = 1;
  for (unsigned i = 0; i < m; ++i) {
    n *= s;
    if (n > opts.budget) break;
  }
  if (m == 0 || (n + 1) * (n + 1) > opts.budget)
    throw Error(ErrorKind::Infeasible, "P1xP1 over GF(" + std::to_string(s) + "^" + std::to_string(m) +
                                           ") exceeds the enumeration budget");
  const Field big = extension_of(k, m);
  const BiPoly g = m == 1 ? f : f.mapped(gf::Embedding(k, big));
  const auto line = enum_p1(big);
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(line.size())));
  std::vector<std::uint64_t> partial(jobs, 0);
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < line.size(); i += jobs) partial[w] += count_form_zeros(big, fix_first(g, line[i]));
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::uint64_t total = 0;
  for (auto x : partial) total += x;
  return total;
}

std::vector<PointPair> rational_zeros(const BiPoly& f) {
  const Field& k = f.field();
  const auto line = enum_p1(k);
  std::vector<PointPair> out;
  for (const auto& u : line) {
    const auto c = fix_first(f, u);
    for (const auto& v : line) {
      Elem acc = k.zero();
      Elem p = k.one();
      for (unsigned j = 0; j < c.size(); ++j) {
        acc = k.add(acc, k.mul(c[j], k.mul(p, k.pow(v.u0, c.size() - 1 - j))));
        p = k.mul(p, v.u1);
      }
      if (k.is_zero(acc)) out.push_back({u, v});
    }
  }
  return out;
}

}  // namespace fillcurve

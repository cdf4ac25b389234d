#include "fillcurve/analysis.hpp"

#include <algorithm>
#include <numeric>

#include "fillcurve/embed.hpp"
#include "fillcurve/error.hpp"
#include "fillcurve/ext_field.hpp"
#include "fillcurve/geom.hpp"

namespace fillcurve {

using gf::Elem;
using gf::ExtField;
using gf::Field;
using gf::Poly;
using EPoly = gf::UniPoly<ExtField>;

namespace {

constexpr const char* kMemberNames[5] = {"F", "F_X0", "F_X1", "F_Y0", "F_Y1"};

// Smallest d dividing m with x in GF(q^d).
unsigned element_degree(const Field& big, Elem x, std::uint64_t q, unsigned m) {
  for (unsigned d = 1; d < m; ++d) {
    if (m % d) continue;
    std::uint64_t qd = 1;
    for (unsigned i = 0; i < d; ++i) qd *= q;
    if (big.pow(x, qd) == x) return d;
  }
  return m;
}

}  // namespace

std::vector<BiPoly> jacobian_system(const BiPoly& f) {
  return {f, f.partial(Var::X0), f.partial(Var::X1), f.partial(Var::Y0), f.partial(Var::Y1)};
}

std::vector<TaggedPoint> common_zeros(const std::vector<BiPoly>& forms, unsigned m_max, std::uint64_t budget) {
  if (forms.empty()) throw Error(ErrorKind::BadParameters, "no forms given");
  if (m_max == 0) throw Error(ErrorKind::BadParameters, "extension degree must be positive");
  const Field& k = forms.front().field();
  for (const auto& f : forms) gf::require_same(f.field(), k, "common_zeros");
  const std::uint64_t q = k.size();
  std::uint64_t total = 0, qm = 1;
  for (unsigned m = 1; m <= m_max; ++m) {
    qm *= q;
    total += (qm + 1) * (qm + 1);
    if (total > budget || qm > gf::kMaxTableFieldSize)
      throw Error(ErrorKind::Infeasible, "point enumeration up to degree " + std::to_string(m_max) +
                                             " exceeds the budget");
  }
  std::vector<TaggedPoint> out;
  for (unsigned m = 1; m <= m_max; ++m) {
    const Field big = extension_of(k, m);
    const gf::Embedding emb(k, big);
    std::vector<BiPoly> mapped;
    for (const auto& f : forms) mapped.push_back(m == 1 ? f : f.mapped(emb));
    const auto line = enum_p1(big);
    std::vector<unsigned> deg(line.size());
    for (std::size_t i = 0; i < line.size(); ++i) deg[i] = element_degree(big, line[i].u1, q, m);
    for (std::size_t i = 0; i < line.size(); ++i) {
      std::vector<std::vector<Elem>> rows;
      for (const auto& f : mapped) rows.push_back(fix_first(f, line[i]));
      for (std::size_t j = 0; j < line.size(); ++j) {
        if (std::lcm(deg[i], deg[j]) != m) continue;
        const ProjPoint& v = line[j];
        bool all = true;
        for (const auto& c : rows) {
          Elem acc = big.zero();
          if (big.is_zero(v.u0)) {
            acc = c.back();
          } else {
            for (std::size_t t = c.size(); t-- > 0;) acc = big.add(big.mul(acc, v.u1), c[t]);
          }
          if (!big.is_zero(acc)) {
            all = false;
            break;
          }
        }
        if (all) out.push_back({m, big, {line[i], v}});
      }
    }
  }
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Smooth: return "smooth";
    case Verdict::Singular: return "singular";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

struct Member {
  std::string name;
  AffinePoly p;
};

std::vector<Member> chart_members(const BiPoly& f, Chart chart, bool swapped) {
  const auto sys = jacobian_system(f);
  std::vector<Member> out;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    AffinePoly p = sys[i].dehomogenize(chart);
    if (swapped) p = p.swapped();
    out.push_back({kMemberNames[i], std::move(p)});
  }
  return out;
}

AffinePoly to_affine(const Field& k, const EPoly& g) {
  std::vector<Poly> ys;
  for (const auto& c : g.coeffs()) ys.emplace_back(k, c);
  if (ys.empty()) return AffinePoly(k, 0, 0);
  return AffinePoly::from_y_coeffs(k, ys);
}

// First monic irreducible (by degree, then enumeration order) not dividing lc.
Poly irreducible_avoiding(const Field& k, const Poly& lc) {
  for (unsigned d = 1;; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= k.size();
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<Elem> c(d + 1);
      std::uint64_t x = code;
      for (unsigned i = 0; i < d; ++i) {
        c[i] = Elem{static_cast<std::uint32_t>(x % k.size())};
        x /= k.size();
      }
      c[d] = k.one();
      const Poly m(k, c);
      if (!gf::is_irreducible(m)) continue;
      if (!gf::rem(lc, m).is_zero()) return m;
    }
  }
}

enum class ChartOutcome { Smooth, Singular, NeedSwap };

struct ChartResult {
  ChartOutcome outcome;
  std::optional<Witness> witness;
};

// Witness for a common factor C of all members (positive y-degree).
Witness component_witness(const Field& k, Chart chart, bool swapped, const AffinePoly& c) {
  const auto ys = c.y_coeffs();
  const Poly m = irreducible_avoiding(k, ys.back());
  const ExtField e(k, m);
  const EPoly g = c.substitute_x(e);
  return {chart, swapped, m, to_affine(k, g.monic())};
}

// Runs the factor loop of the certificate for an eliminant r(x).
ChartResult examine_factors(const Field& k, Chart chart, bool swapped, const Poly& r,
                            const std::vector<const AffinePoly*>& ys, std::uint64_t seed, std::size_t& nfactors) {
  const auto fac = gf::factor(r, seed);
  nfactors = fac.factors.size();
  for (const auto& fc : fac.factors) {
    const ExtField e(k, fc.poly);
    std::optional<EPoly> g;
    for (const AffinePoly* p : ys) {
      EPoly s = p->substitute_x(e);
      if (s.is_zero()) continue;
      g = g ? gf::gcd(*g, s) : s.monic();
      if (g->degree() == 0) break;
    }
    if (!g) return {ChartOutcome::Singular, Witness{chart, swapped, fc.poly, AffinePoly(k, 0, 0)}};
    if (g->degree() >= 1) return {ChartOutcome::Singular, Witness{chart, swapped, fc.poly, to_affine(k, *g)}};
  }
  return {ChartOutcome::Smooth, std::nullopt};
}

ChartResult analyze_chart(const Field& k, Chart chart, bool swapped, const std::vector<Member>& members,
                          std::vector<TraceStep>& trace, std::uint64_t seed) {
  std::vector<const Member*> live;
  for (const auto& mb : members)
    if (!mb.p.is_zero()) live.push_back(&mb);
  for (const Member* mb : live) {
    if (mb->p.degree_x() == 0 && mb->p.degree_y() == 0) {
      trace.push_back({chart, swapped, "constant", mb->name, "", 0, 0});
      return {ChartOutcome::Smooth, std::nullopt};
    }
  }
  std::vector<const Member*> xs, ys;
  for (const Member* mb : live) (mb->p.degree_y() == 0 ? xs : ys).push_back(mb);
  std::vector<const AffinePoly*> yp;
  for (const Member* mb : ys) yp.push_back(&mb->p);

  if (!xs.empty()) {
    Poly h(k);
    std::string names;
    for (const Member* mb : xs) {
      h = gf::gcd(h, mb->p.x_only());
      names += (names.empty() ? "" : ",") + mb->name;
    }
    std::size_t nf = 0;
    if (h.degree() == 0) {
      trace.push_back({chart, swapped, "x-gcd", names, "", 0, 0});
      return {ChartOutcome::Smooth, std::nullopt};
    }
    auto res = examine_factors(k, chart, swapped, h, yp, seed, nf);
    trace.push_back({chart, swapped, "x-gcd", names, "", h.degree(), nf});
    return res;
  }
  if (ys.size() == 1) {
    trace.push_back({chart, swapped, "component", ys[0]->name, "", -1, 0});
    return {ChartOutcome::Singular, component_witness(k, chart, swapped, ys[0]->p)};
  }
  std::optional<Poly> best;
  std::size_t bi = 0, bj = 0;
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = i + 1; j < ys.size(); ++j) {
      Poly r = resultant_elim(ys[i]->p, ys[j]->p, Elim::Y);
      if (r.is_zero()) continue;
      if (!best || r.degree() < best->degree()) {
        best = std::move(r);
        bi = i;
        bj = j;
      }
    }
  if (!best) return {ChartOutcome::NeedSwap, std::nullopt};
  std::size_t nf = 0;
  if (best->degree() == 0) {
    trace.push_back({chart, swapped, "pair", ys[bi]->name, ys[bj]->name, 0, 0});
    return {ChartOutcome::Smooth, std::nullopt};
  }
  auto res = examine_factors(k, chart, swapped, *best, yp, seed, nf);
  trace.push_back({chart, swapped, "pair", ys[bi]->name, ys[bj]->name, best->degree(), nf});
  return res;
}

}  // namespace

SmoothCertificate certify_smooth(const BiPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the zero form defines no curve");
  if (f.a() == 0 || f.b() == 0) throw Error(ErrorKind::BadParameters, "certification needs a, b >= 1");
  const Field& k = f.field();
  SmoothCertificate cert;
  bool inconclusive = false;
  for (Chart chart : kAllCharts) {
    const auto members = chart_members(f, chart, false);
    ChartResult r = analyze_chart(k, chart, false, members, cert.trace, seed);
    if (r.outcome == ChartOutcome::NeedSwap) {
      const auto swapped = chart_members(f, chart, true);
      r = analyze_chart(k, chart, true, swapped, cert.trace, seed);
      if (r.outcome == ChartOutcome::NeedSwap) {
        // every pair shares a factor in both orders; look for one common to all
        std::vector<AffinePoly> ps;
        for (const auto& mb : members) ps.push_back(mb.p);
        const AffinePoly c = common_y_factor(ps);
        std::vector<AffinePoly> pss;
        for (const auto& mb : swapped) pss.push_back(mb.p);
        const AffinePoly cs = common_y_factor(pss);
        if (c.degree_y() > 0) {
          cert.trace.push_back({chart, false, "component", "all", "", -1, 0});
          r = {ChartOutcome::Singular, component_witness(k, chart, false, c)};
        } else if (cs.degree_y() > 0) {
          cert.trace.push_back({chart, true, "component", "all", "", -1, 0});
          r = {ChartOutcome::Singular, component_witness(k, chart, true, cs)};
        } else {
          cert.trace.push_back({chart, false, "inconclusive", "", "", -1, 0});
          inconclusive = true;
          continue;
        }
      }
    }
    if (r.outcome == ChartOutcome::Singular) {
      cert.verdict = Verdict::Singular;
      cert.witness = std::move(r.witness);
      return cert;
    }
  }
  cert.verdict = inconclusive ? Verdict::Inconclusive : Verdict::Smooth;
  return cert;
}

bool verify_witness(const BiPoly& f, const Witness& w) {
  const Field& k = f.field();
  if (w.m.degree() < 1 || !gf::is_irreducible(w.m)) return false;
  const ExtField e(k, w.m);
  const EPoly g = w.g.substitute_x(e);
  const auto members = chart_members(f, w.chart, w.swapped);
  for (const auto& mb : members) {
    const EPoly s = mb.p.substitute_x(e);
    if (g.is_zero()) {
      if (!s.is_zero()) return false;
      continue;
    }
    if (g.degree() < 1) return false;
    if (!gf::rem(s, g).is_zero()) return false;
  }
  return true;
}

std::optional<unsigned> witness_point_degree(const BiPoly& f, const Witness& w) {
  const Field& k = f.field();
  const unsigned d = static_cast<unsigned>(w.m.degree());
  std::uint64_t size = 1;
  for (unsigned i = 0; i < d; ++i) {
    size *= k.size();
    if (size > gf::kMaxTableFieldSize) return std::nullopt;
  }
  const Field big = extension_of(k, d);
  const gf::Embedding emb(k, big);
  const auto rts = gf::roots(emb.map(w.m), big);
  if (rts.empty()) throw std::logic_error("witness modulus has no root in its splitting field");
  const Elem theta = rts.front();
  std::vector<Elem> c;
  for (const auto& p : w.g.y_coeffs()) c.push_back(emb.map(p)(theta));
  const Poly g(big, c);
  if (g.is_zero()) return d;
  const auto fac = gf::factor(g);
  unsigned best = 0;
  for (const auto& fc : fac.factors)
    if (best == 0 || static_cast<unsigned>(fc.poly.degree()) < best) best = static_cast<unsigned>(fc.poly.degree());
  return d * best;
}

std::optional<TaggedPoint> witness_point(const BiPoly& f, const Witness& w) {
  const auto deg = witness_point_degree(f, w);
  if (!deg) return std::nullopt;
  const Field& k = f.field();
  std::uint64_t size = 1;
  for (unsigned i = 0; i < *deg; ++i) {
    size *= k.size();
    if (size > gf::kMaxTableFieldSize) return std::nullopt;
  }
  const Field big = extension_of(k, *deg);
  const gf::Embedding emb(k, big);
  const auto xs = gf::roots(emb.map(w.m), big);
  if (xs.empty()) throw std::logic_error("witness modulus has no root in the point field");
  const Elem theta = xs.front();
  std::vector<Elem> c;
  for (const auto& p : w.g.y_coeffs()) c.push_back(emb.map(p)(theta));
  const Poly g(big, c);
  Elem other = big.zero();
  if (!g.is_zero()) {
    const auto ys = gf::roots(g, big);
    if (ys.empty()) throw std::logic_error("witness component has no point over the expected field");
    other = ys.front();
  }
  const Elem xa = w.swapped ? other : theta, ya = w.swapped ? theta : other;
  const bool x0_one = w.chart == Chart::X0Y0 || w.chart == Chart::X0Y1;
  const bool y0_one = w.chart == Chart::X0Y0 || w.chart == Chart::X1Y0;
  const ProjPoint px = x0_one ? ProjPoint::normalized(big, big.one(), xa) : ProjPoint::normalized(big, xa, big.one());
  const ProjPoint py = y0_one ? ProjPoint::normalized(big, big.one(), ya) : ProjPoint::normalized(big, ya, big.one());
  return TaggedPoint{*deg, big, {px, py}};
}

// ---- reduced system -------------------------------------------------------

namespace {

void require_shapes(const BiPoly& f, const BiPoly& g) {
  gf::require_same(f.field(), g.field(), "reduced system");
  const unsigned q = f.field().size();
  if (f.bidegree() != std::pair{0u, q + 1})
    throw Error(ErrorKind::BadShape, "f must be a binary form in Y of degree q+1 = " + std::to_string(q + 1));
  if (g.bidegree() != std::pair{q + 1, 0u})
    throw Error(ErrorKind::BadShape, "g must be a binary form in X of degree q+1 = " + std::to_string(q + 1));
}

}  // namespace

ReducedSystem reduced_system(const BiPoly& f, const BiPoly& g) {
  require_shapes(f, g);
  const Field& k = f.field();
  const unsigned q = k.size();
  const Elem one = k.one();
  const BiPoly x0q = BiPoly::monomial(k, q, 0, 0, 0, one), x1q = BiPoly::monomial(k, 0, q, 0, 0, one);
  const BiPoly y0q = BiPoly::monomial(k, 0, 0, q, 0, one), y1q = BiPoly::monomial(k, 0, 0, 0, q, one);
  const BiPoly fy0 = f.partial(Var::Y0), fy1 = f.partial(Var::Y1);
  const BiPoly gx0 = g.partial(Var::X0), gx1 = g.partial(Var::X1);
  return {x0q * fy1 + y0q * gx1, x0q * fy0 - y1q * gx1, x1q * fy1 - y0q * gx0, x1q * fy0 + y1q * gx0};
}

bool binary_form_ok(const BiPoly& h) {
  const Field& k = h.field();
  if (h.a() != 0 && h.b() != 0) throw Error(ErrorKind::BadShape, "not a binary form");
  const BiPoly x = h.a() == 0 ? h.transposed() : h;
  const unsigned d = x.a();
  std::vector<Elem> c(d + 1);
  for (unsigned i = 0; i <= d; ++i) c[i] = x.coeff(i, 0);
  const Poly p(k, c);
  if (p.degree() != static_cast<int>(d) || d == 0) return false;  // zero at (0,1)
  for (Elem t : k.elements())
    if (k.is_zero(p(t))) return false;
  return gf::gcd(p, p.derivative()).degree() == 0;
}

bool validate_setup(const BiPoly& f, const BiPoly& g) {
  require_shapes(f, g);
  return binary_form_ok(f) && binary_form_ok(g);
}

// ---- absolute irreducibility -------------------------------------------

std::string_view to_string(Irreducibility r) {
  switch (r) {
    case Irreducibility::Irreducible: return "irreducible";
    case Irreducibility::Reducible: return "reducible";
    case Irreducibility::Unknown: return "unknown";
  }
  return "?";
}

std::string_view to_string(IrrMethod m) {
  switch (m) {
    case IrrMethod::A: return "A";
    case IrrMethod::B: return "B";
    case IrrMethod::Auto: return "auto";
  }
  return "?";
}

namespace {

constexpr std::uint64_t kSaturated = ~std::uint64_t{0};

std::uint64_t sat_mul(std::uint64_t x, std::uint64_t y) {
  if (x == 0 || y == 0) return 0;
  if (x > kSaturated / y) return kSaturated;
  return x * y;
}

std::uint64_t sat_add(std::uint64_t x, std::uint64_t y) { return x > kSaturated - y ? kSaturated : x + y; }

std::uint64_t sat_pow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r = sat_mul(r, b);
  return r;
}

struct Extremes {
  int li, lj, ti, tj;  // lex-leading and lex-trailing nonzero positions
};

Extremes extremes(const BiPoly& f) {
  Extremes e{-1, -1, -1, -1};
  for (unsigned i = 0; i <= f.a(); ++i)
    for (unsigned j = 0; j <= f.b(); ++j)
      if (f.coeff(i, j).v) {
        if (e.ti < 0) {
          e.ti = static_cast<int>(i);
          e.tj = static_cast<int>(j);
        }
        e.li = static_cast<int>(i);
        e.lj = static_cast<int>(j);
      }
  return e;
}

// Candidate (lead, trail) position pairs for a factor of bi-degree (a1, b1):
// positions are flattened lex indices i*(b1+1)+j.
std::vector<std::pair<unsigned, unsigned>> shape_pairs(const BiPoly& f, unsigned a1, unsigned b1) {
  const Extremes e = extremes(f);
  const int ha = static_cast<int>(f.a() - a1), hb = static_cast<int>(f.b() - b1);
  auto ok = [&](int i, int j, int ti, int tj) {
    const int ri = ti - i, rj = tj - j;
    return ri >= 0 && rj >= 0 && ri <= ha && rj <= hb;
  };
  std::vector<std::pair<unsigned, unsigned>> out;
  const unsigned w = b1 + 1;
  for (unsigned li = 0; li <= a1; ++li)
    for (unsigned lj = 0; lj <= b1; ++lj) {
      if (!ok(static_cast<int>(li), static_cast<int>(lj), e.li, e.lj)) continue;
      const unsigned lead = li * w + lj;
      for (unsigned t = 0; t <= lead; ++t) {
        const int ti = static_cast<int>(t / w), tj = static_cast<int>(t % w);
        if (!ok(ti, tj, e.ti, e.tj)) continue;
        out.push_back({lead, t});
      }
    }
  return out;
}

}  // namespace

std::uint64_t factor_search_size(const BiPoly& f, unsigned a1, unsigned b1) {
  const std::uint64_t q = f.field().size();
  std::uint64_t total = 0;
  for (auto [lead, trail] : shape_pairs(f, a1, b1)) {
    std::uint64_t n = lead == trail ? 1 : q - 1;
    if (lead > trail + 1) n = sat_mul(n, sat_pow(q, lead - trail - 1));
    total = sat_add(total, n);
  }
  return total;
}

std::optional<BiPoly> find_factor(const BiPoly& f, unsigned a1, unsigned b1, std::uint64_t budget) {
  if (a1 > f.a() || b1 > f.b()) return std::nullopt;
  if (factor_search_size(f, a1, b1) > budget)
    throw Error(ErrorKind::Infeasible, "factor search of bi-degree (" + std::to_string(a1) + "," + std::to_string(b1) +
                                           ") exceeds the budget");
  const Field& k = f.field();
  const std::uint32_t q = k.size();
  const unsigned n = (a1 + 1) * (b1 + 1);
  std::vector<Elem> g(n), scratch;
  for (auto [lead, trail] : shape_pairs(f, a1, b1)) {
    std::fill(g.begin(), g.end(), Elem{0});
    g[lead] = k.one();
    const unsigned lo = trail == lead ? lead : trail;
    // odometer over positions trail..lead-1; trail must be nonzero
    if (trail != lead) g[trail] = Elem{1};
    while (true) {
      if (divides_raw(k, g, a1, b1, f.coeffs(), f.a(), f.b(), scratch)) {
        BiPoly out(k, a1, b1);
        for (unsigned i = 0; i <= a1; ++i)
          for (unsigned j = 0; j <= b1; ++j) out.set_coeff(i, j, g[i * (b1 + 1) + j]);
        return out;
      }
      // increment: trail digit runs over 1..q-1, the others over 0..q-1
      unsigned pos = lo;
      bool done = true;
      while (pos < lead) {
        const std::uint32_t lo_digit = pos == trail ? 1 : 0;
        if (g[pos].v + 1 < q) {
          ++g[pos].v;
          done = false;
          break;
        }
        g[pos].v = lo_digit;
        ++pos;
      }
      if (done) break;
    }
  }
  return std::nullopt;
}

namespace {

// Degree of the gcd of the binary forms obtained by fixing each Y monomial
// (the X-content); nonzero means a factor depending on X alone.
unsigned x_content_degree(const BiPoly& f) {
  const Field& k = f.field();
  Poly g(k);
  unsigned x0_mult = f.a();
  for (unsigned j = 0; j <= f.b(); ++j) {
    std::vector<Elem> c(f.a() + 1);
    for (unsigned i = 0; i <= f.a(); ++i) c[i] = f.coeff(i, j);
    const Poly p(k, c);
    if (p.is_zero()) continue;
    x0_mult = std::min(x0_mult, f.a() - static_cast<unsigned>(p.degree()));
    g = gf::gcd(g, p);
  }
  return x0_mult + static_cast<unsigned>(std::max(0, g.degree()));
}

// Unordered complementary bi-degree pairs, represented by the cheaper side.
std::vector<std::pair<unsigned, unsigned>> factor_shapes(const BiPoly& f) {
  std::vector<std::pair<unsigned, unsigned>> out;
  const unsigned a = f.a(), b = f.b();
  for (unsigned a1 = 0; a1 <= a; ++a1)
    for (unsigned b1 = 0; b1 <= b; ++b1) {
      if ((a1 == 0 && b1 == 0) || (a1 == a && b1 == b)) continue;
      const unsigned a2 = a - a1, b2 = b - b1;
      // visit each unordered pair once: (a1,b1) <= (a2,b2) lexicographically
      if (std::pair{a1, b1} > std::pair{a2, b2}) continue;
      const auto s1 = factor_search_size(f, a1, b1), s2 = factor_search_size(f, a2, b2);
      out.push_back(s1 <= s2 ? std::pair{a1, b1} : std::pair{a2, b2});
    }
  return out;
}

std::uint64_t rational_search_size(const BiPoly& f) {
  std::uint64_t total = 0;
  for (auto [a1, b1] : factor_shapes(f)) total = sat_add(total, factor_search_size(f, a1, b1));
  return total;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

struct ConjugateSearch {
  unsigned k;
  Field big;
  BiPoly mapped;
  std::uint64_t size;
};

std::vector<ConjugateSearch> conjugate_searches(const BiPoly& f, bool& feasible) {
  std::vector<ConjugateSearch> out;
  feasible = true;
  const unsigned g = std::gcd(f.a(), f.b());
  for (unsigned k : prime_divisors(g)) {
    const std::uint64_t size = sat_pow(f.field().size(), k);
    if (size > gf::kMaxTableFieldSize) {
      feasible = false;
      continue;
    }
    const Field big = extension_of(f.field(), k);
    BiPoly mapped = f.mapped(gf::Embedding(f.field(), big));
    const auto n = factor_search_size(mapped, f.a() / k, f.b() / k);
    out.push_back({k, big, std::move(mapped), n});
  }
  return out;
}

std::optional<IrreducibilityResult> trivial_cases(const BiPoly& f) {
  IrreducibilityResult r;
  r.method = "trivial";
  if (f.a() == 0 && f.b() == 0) {
    r.status = Irreducibility::Reducible;  // a unit defines no curve
    return r;
  }
  if (f.a() == 0 || f.b() == 0) {
    // binary forms split into linear factors over the closure
    r.status = f.a() + f.b() == 1 ? Irreducibility::Irreducible : Irreducibility::Reducible;
    return r;
  }
  if (x_content_degree(f) > 0 || x_content_degree(f.transposed()) > 0) {
    r.status = Irreducibility::Reducible;
    r.method = "content";
    return r;
  }
  return std::nullopt;
}

IrreducibilityResult run_b(const BiPoly& f, std::uint64_t budget, bool rational_only) {
  IrreducibilityResult r;
  r.method = "B";
  for (auto [a1, b1] : factor_shapes(f)) {
    if (auto g = find_factor(f, a1, b1, budget)) {
      r.status = Irreducibility::Reducible;
      r.factor = std::move(g);
      r.factor_field = f.field().describe();
      return r;
    }
  }
  if (std::gcd(f.a(), f.b()) == 1) {
    r.status = Irreducibility::Irreducible;
    return r;
  }
  if (rational_only) {
    r.status = Irreducibility::Unknown;
    return r;
  }
  bool feasible = true;
  for (auto& cs : conjugate_searches(f, feasible)) {
    if (auto g = find_factor(cs.mapped, f.a() / cs.k, f.b() / cs.k, budget)) {
      r.status = Irreducibility::Reducible;
      r.factor = std::move(g);
      r.factor_field = cs.big.describe();
      return r;
    }
  }
  if (!feasible) throw Error(ErrorKind::Infeasible, "conjugate factor search needs too large a field");
  r.status = Irreducibility::Irreducible;
  return r;
}

}  // namespace

IrreducibilityResult is_abs_irreducible(const BiPoly& f, const IrrOptions& opts) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the zero form defines no curve");
  if (auto t = trivial_cases(f)) return *t;

  auto method_a = [&] {
    IrreducibilityResult r;
    r.method = "A";
    const auto cert = certify_smooth(f, opts.seed);
    r.smooth = cert.verdict;
    r.status = cert.verdict == Verdict::Smooth ? Irreducibility::Irreducible : Irreducibility::Unknown;
    return r;
  };

  switch (opts.method) {
    case IrrMethod::A:
      return method_a();
    case IrrMethod::B: {
      std::uint64_t total = rational_search_size(f);
      if (std::gcd(f.a(), f.b()) > 1) {
        bool feasible = true;
        for (const auto& cs : conjugate_searches(f, feasible)) total = sat_add(total, cs.size);
        if (!feasible) total = kSaturated;
      }
      if (total > opts.budget) throw Error(ErrorKind::Infeasible, "method B candidate count exceeds the budget");
      return run_b(f, opts.budget, false);
    }
    case IrrMethod::Auto:
      break;
  }
  const std::uint64_t rational = rational_search_size(f);
  std::uint64_t total = rational;
  bool feasible = true;
  if (std::gcd(f.a(), f.b()) > 1)
    for (const auto& cs : conjugate_searches(f, feasible)) total = sat_add(total, cs.size);
  if (feasible && total <= opts.budget) return run_b(f, opts.budget, false);
  IrreducibilityResult a = method_a();
  if (a.status == Irreducibility::Irreducible) return a;
  if (rational <= opts.budget) {
    IrreducibilityResult b = run_b(f, opts.budget, true);
    b.smooth = a.smooth;
    if (b.status != Irreducibility::Unknown) return b;
  }
  return a;
}

}  // namespace fillcurve

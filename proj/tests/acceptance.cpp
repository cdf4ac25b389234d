// Acceptance checks: one PASS/FAIL line per criterion. Every comparison is
// exact. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fillcurve/analysis.hpp"
#include "fillcurve/bounds.hpp"
#include "fillcurve/error.hpp"
#include "fillcurve/factor.hpp"
#include "fillcurve/families.hpp"
#include "fillcurve/filling.hpp"
#include "fillcurve/geom.hpp"
#include "fillcurve/search.hpp"

using namespace fillcurve;
using gf::Elem;
using gf::Field;

namespace {

// Collects failed sub-checks for one criterion.
struct Checker {
  std::vector<std::string> failures;
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

int failed_criteria = 0;

void criterion(const std::string& id, const std::string& name, double limit_seconds,
               const std::function<void(Checker&)>& body) {
  Checker check;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check(secs <= limit_seconds, "time limit of " + std::to_string(limit_seconds) + " s exceeded");
  const bool ok = check.failures.empty();
  if (!ok) ++failed_criteria;
  std::printf("%s %s: %s (%.2f s)\n", ok ? "PASS" : "FAIL", id.c_str(), name.c_str(), secs);
  for (const auto& f : check.failures) std::printf("    %s\n", f.c_str());
  std::fflush(stdout);
}

std::string pair_str(unsigned a, unsigned b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

// Rank over GF(p), p prime, by plain integer elimination; independent of the
// library's field tables.
std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  auto inv = [p](std::int64_t a) {
    std::int64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t r = rank;
    while (r < m.size() && m[r][c] % p == 0) ++r;
    if (r == m.size()) continue;
    std::swap(m[r], m[rank]);
    const std::int64_t s = inv(m[rank][c]);
    for (auto& x : m[rank]) x = x * s % p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] % p == 0) continue;
      const std::int64_t t = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - t * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Evaluation matrix of degree-d binary forms at the q+1 points of P^1(GF(p)).
std::vector<std::vector<std::int64_t>> binary_eval_matrix(std::int64_t p, unsigned d) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  for (std::int64_t t = 0; t < p; ++t) pts.push_back({1, t});
  pts.push_back({0, 1});
  std::vector<std::vector<std::int64_t>> m;
  for (auto [u0, u1] : pts) {
    std::vector<std::int64_t> row;
    for (unsigned i = 0; i <= d; ++i) {
      std::int64_t v = 1;
      for (unsigned e = 0; e < d - i; ++e) v = v * u0 % p;
      for (unsigned e = 0; e < i; ++e) v = v * u1 % p;
      row.push_back(v);
    }
    m.push_back(row);
  }
  return m;
}

std::size_t rational_vanishings(const BiPoly& f) {
  std::size_t n = 0;
  for (const auto& pt : enum_p1xp1(f.field())) n += f.field().is_zero(f.eval(pt));
  return n;
}

std::set<std::string> zero_set(const std::vector<BiPoly>& forms, unsigned m_max) {
  std::set<std::string> out;
  for (const auto& p : common_zeros(forms, m_max)) out.insert(std::to_string(p.degree) + format_point(p.field, p.point));
  return out;
}

void check_decomposition(Checker& check, const BiPoly& f, const std::string& label) {
  const unsigned q = f.field().size();
  const Decomposition d = decompose(f);
  check(d.recombine() == f, label + ": f K_X + g K_Y != F");
  check(d.f.bidegree() == std::pair{f.a() - q - 1, f.b()}, label + ": f has the wrong bi-degree");
  check(d.g.bidegree() == std::pair{f.a(), f.b() - q - 1}, label + ": g has the wrong bi-degree");
}

BiPoly random_form(const Field& k, unsigned a, unsigned b, std::mt19937_64& rng) {
  BiPoly f(k, a, b);
  for (unsigned i = 0; i <= a; ++i)
    for (unsigned j = 0; j <= b; ++j) f.set_coeff(i, j, Elem{static_cast<std::uint32_t>(rng() % k.size())});
  return f;
}

}  // namespace

int main() {
  criterion("AC1", "point count bound values", 1, [](Checker& check) {
    const auto b7 = point_count_bound(2, 3, 7), b6 = point_count_bound(2, 3, 6);
    check(b7.value == 9, "bound(2,3,7) = " + std::to_string(b7.value));
    check(b7.numerator == 105 && b7.denominator == 11, "bound(2,3,7) is not 105/11");
    check(b6.value == 8, "bound(2,3,6) = " + std::to_string(b6.value));
    check(b6.numerator == 90 && b6.denominator == 11, "bound(2,3,6) is not 90/11");
  });

  criterion("AC2", "constructed (q+1,q+1) curves for q in {3,4,5,7,8,9}", 6 * 60, [](Checker& check) {
    for (unsigned q : {3u, 4u, 5u, 7u, 8u, 9u}) {
      const auto start = std::chrono::steady_clock::now();
      const Field k = Field::of_order(q);
      const BiPoly f = construct(k).curve;
      const std::string tag = "q=" + std::to_string(q);
      const std::size_t full = (q + 1) * (q + 1);
      check(f.bidegree() == std::pair{q + 1, q + 1}, tag + ": bi-degree");
      check(is_filling(f), tag + ": not filling");
      check(rational_vanishings(f) == full, tag + ": rational vanishings != (q+1)^2");
      const auto cert = certify_smooth(f);
      check(cert.verdict == Verdict::Smooth, tag + ": certificate is " + std::string(to_string(cert.verdict)));
      check(is_abs_irreducible(f).status == Irreducibility::Irreducible, tag + ": not absolutely irreducible");
      check(count_points(f, 1) == full, tag + ": point count");
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      check(secs < 60, tag + ": took more than 60 s");
    }
  });

  criterion("AC3", "no irreducible filling curve of bi-degree (3,3) over GF(2)", 10, [](Checker& check) {
    const std::size_t rank = rank_mod_p(binary_eval_matrix(2, 3), 2) * rank_mod_p(binary_eval_matrix(2, 3), 2);
    const std::size_t dim = 16 - rank;
    check(dim == 7, "rank oracle gives dimension " + std::to_string(dim));
    const auto r = census(Field::of_order(2), 3, 3);
    check(r.space_dimension == dim, "basis dimension " + std::to_string(r.space_dimension));
    check(r.candidates_scanned == 127, "candidates " + std::to_string(r.candidates_scanned));
    check(r.n_irreducible == 0, "irreducible " + std::to_string(r.n_irreducible));
    check(r.n_unknown == 0, "unknown " + std::to_string(r.n_unknown));
  });

  criterion("AC4", "the (4,3) and (3,4) curves over GF(2)", 10, [](Checker& check) {
    const Field k = Field::of_order(2);
    for (bool transposed : {false, true}) {
      const BiPoly f = construct(k, transposed).curve;
      const std::string tag = transposed ? "(3,4)" : "(4,3)";
      check(f.bidegree() == (transposed ? std::pair{3u, 4u} : std::pair{4u, 3u}), tag + ": bi-degree");
      check(is_filling(f), tag + ": not filling");
      check(certify_smooth(f).verdict == Verdict::Smooth, tag + ": not smooth");
      const auto a = is_abs_irreducible(f, {.method = IrrMethod::A});
      const auto b = is_abs_irreducible(f, {.method = IrrMethod::B});
      check(a.status == Irreducibility::Irreducible, tag + ": method A");
      check(b.status == Irreducibility::Irreducible, tag + ": method B");
      check(count_points(f, 1) == 9, tag + ": point count");
      const auto rep = check_attainment(f);
      check(rep.bound.value == 9, tag + ": bound " + std::to_string(rep.bound.value));
      check(rep.attained && *rep.attained, tag + ": bound not attained");
      check(rep.hypotheses_met, tag + ": hypotheses not met");
    }
  });

  criterion("AC5", "minimal bi-degrees and Segre degrees", 5 * 60, [](Checker& check) {
    const auto t = min_bidegree_scan(Field::of_order(2), 4, 4);
    for (const auto& c : t.cells) {
      const bool expected = (c.a >= 4 && c.b >= 3) || (c.a >= 3 && c.b >= 4);
      const CellStatus want = expected ? CellStatus::Yes : CellStatus::No;
      check(c.status == want, "q=2 cell " + pair_str(c.a, c.b) + " is " + std::string(to_string(c.status)));
    }
    check(segre_degree(4, 3) == 7 && segre_degree(3, 4) == 7, "segre degree for q=2");
    const Field k3 = Field::of_order(3);
    check(segre_degree(4, 4) == 8 && 8 == 2 * 3 + 2, "segre degree for q=3");
    const BiPoly f3 = construct(k3).curve;
    check(is_filling(f3) && certify_smooth(f3).verdict == Verdict::Smooth &&
              is_abs_irreducible(f3).status == Irreducibility::Irreducible,
          "construct(3) does not verify");
  });

  criterion("AC6", "decomposition F = f K_X + g K_Y", 2 * 60, [](Checker& check) {
    const Field k2 = Field::of_order(2);
    for (auto [a, b, n] : {std::tuple{3u, 3u, 127u}, {4u, 3u, 2047u}}) {
      const auto basis = filling_space_basis(k2, a, b);
      const std::uint64_t total = candidate_count(2, basis.size());
      check(total == n, pair_str(a, b) + ": " + std::to_string(total) + " filling forms");
      for (std::uint64_t i = 0; i < total; ++i)
        check_decomposition(check, candidate_at(basis, i), pair_str(a, b) + " #" + std::to_string(i));
    }
    for (unsigned q : {3u, 4u, 5u}) check_decomposition(check, construct(Field::of_order(q)).curve, "construct(" + std::to_string(q) + ")");
  });

  criterion("AC7", "reduced system has the Jacobian's zeros (cases I, II, III)", 5 * 60, [](Checker& check) {
    for (unsigned q : {5u, 4u, 3u}) {
      const Construction c = construct(Field::of_order(q));
      const std::string tag = "q=" + std::to_string(q);
      check(c.f && c.g, tag + ": no (f, g)");
      if (!c.f) continue;
      const auto jac = zero_set(jacobian_system(c.curve), 2);
      const auto red = zero_set(reduced_system(*c.f, *c.g).forms(), 2);
      check(jac == red, tag + ": zero sets differ");
      check(jac.empty(), tag + ": Jacobian system has " + std::to_string(jac.size()) + " zeros");
      check(red.empty(), tag + ": reduced system has " + std::to_string(red.size()) + " zeros");
    }
  });

  criterion("AC8", "smoothness certificates agree with enumeration", 10 * 60, [](Checker& check) {
    const Field k = Field::of_order(3);
    std::mt19937_64 rng(0);
    int valid = 0, smooth = 0, singular = 0, inconclusive = 0;
    for (int n = 0; n < 100; ++n) {
      // even draws are rejection-sampled until valid, odd draws are taken as is
      BiPoly f = random_form(k, 0, 4, rng), g = random_form(k, 4, 0, rng);
      while ((f.is_zero() && g.is_zero()) || (n % 2 == 0 && !validate_setup(f, g))) {
        f = random_form(k, 0, 4, rng);
        g = random_form(k, 4, 0, rng);
      }
      const bool ok = validate_setup(f, g);
      valid += ok;
      const BiPoly F = assemble_curve(f, g, false);
      if (F.is_zero()) continue;
      const auto cert = certify_smooth(F);
      const bool oracle = !singular_points(F, 2).empty();
      const std::string tag = "pair #" + std::to_string(n);
      switch (cert.verdict) {
        case Verdict::Smooth:
          ++smooth;
          check(!oracle, tag + ": certified smooth but has a singular point of degree <= 2");
          break;
        case Verdict::Singular: {
          ++singular;
          check(cert.witness && verify_witness(F, *cert.witness), tag + ": witness does not verify");
          const auto deg = cert.witness ? witness_point_degree(F, *cert.witness) : std::nullopt;
          if (deg && *deg <= 2) check(oracle, tag + ": witness of degree <= 2 but no singular point found");
          break;
        }
        case Verdict::Inconclusive:
          ++inconclusive;
          break;
      }
    }
    check(valid > 0 && valid < 100, "sample should mix valid and invalid pairs, got " + std::to_string(valid) + " valid");
    check(smooth > 0 && singular > 0, "sample should contain smooth and singular curves");
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
      for (bool t : {false, true})
        check(certify_smooth(construct(Field::of_order(q), t).curve).verdict != Verdict::Inconclusive,
              "inconclusive on construct(" + std::to_string(q) + ")");
    std::printf("    %d valid pairs; %d smooth, %d singular, %d inconclusive\n", valid, smooth, singular, inconclusive);
  });

  criterion("AC9", "union of rational fibres", 1, [](Checker& check) {
    for (unsigned q : {2u, 3u, 4u, 5u}) {
      const Field k = Field::of_order(q);
      const BiPoly f = fiber_union(k);
      const std::string tag = "q=" + std::to_string(q);
      check(is_filling(f), tag + ": not filling");
      check(is_abs_irreducible(f).status == Irreducibility::Reducible, tag + ": not reducible");
      check(segre_degree(f.a(), f.b()) == q + 1, tag + ": Segre degree");
      // components are the fibres v1 Y0 - v0 Y1 over the rational points v
      BiPoly prod = BiPoly::monomial(k, 0, 0, 0, 0, k.one());
      for (const auto& v : enum_p1(k)) {
        BiPoly comp(k, 0, 1);
        comp.set_coeff(0, 0, v.u1);
        comp.set_coeff(0, 1, k.neg(v.u0));
        check(singular_points(comp, 2).empty(), tag + ": component " + comp.to_string() + " is singular");
        check(divides(comp, f).has_value(), tag + ": " + comp.to_string() + " does not divide");
        prod = prod * comp;
      }
      check(divides(prod, f).has_value() && prod.bidegree() == f.bidegree(), tag + ": components do not multiply out");
    }
  });

  criterion("AC10", "property suites", 5 * 60, [](Checker& check) {
    std::mt19937_64 rng(0);
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 81u}) {
      const Field k = Field::of_order(q);
      auto r = [&] { return Elem{static_cast<std::uint32_t>(rng() % q)}; };
      bool ok = true;
      for (int n = 0; n < 500; ++n) {
        const Elem a = r(), b = r(), c = r();
        ok = ok && k.add(a, b) == k.add(b, a) && k.mul(a, b) == k.mul(b, a);
        ok = ok && k.add(k.add(a, b), c) == k.add(a, k.add(b, c)) && k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c));
        ok = ok && k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c));
        ok = ok && k.add(a, k.neg(a)) == k.zero();
        if (!k.is_zero(a)) ok = ok && k.mul(a, k.inv(a)) == k.one();
        ok = ok && k.frobenius(k.add(a, b), k.characteristic()) ==
                       k.add(k.frobenius(a, k.characteristic()), k.frobenius(b, k.characteristic()));
      }
      check(ok, "field axioms in GF(" + std::to_string(q) + ")");
    }
    for (unsigned q : {2u, 3u, 4u, 5u}) {
      const Field k = Field::of_order(q);
      for (unsigned m = 1; m <= 4; ++m) {
        std::uint64_t size = 1;
        for (unsigned i = 0; i < m; ++i) size *= q;
        if (size > gf::kMaxTableFieldSize) continue;
        const Field big = extension_of(k, m);
        std::size_t fixed = 0;
        for (Elem x : big.elements()) fixed += big.pow(x, q) == x;
        check(fixed == q, "x^q = x in GF(" + std::to_string(q) + "^" + std::to_string(m) + ") has " +
                              std::to_string(fixed) + " solutions");
      }
    }
    for (unsigned q : {2u, 3u, 4u, 5u, 9u}) {
      const Field k = Field::of_order(q);
      for (int n = 0; n < 50; ++n) {
        const unsigned a = rng() % 6, b = rng() % 6;
        const BiPoly f = random_form(k, a, b, rng);
        const BiPoly x0 = BiPoly::monomial(k, 1, 0, 0, 0, k.one()), x1 = BiPoly::monomial(k, 0, 1, 0, 0, k.one());
        const BiPoly y0 = BiPoly::monomial(k, 0, 0, 1, 0, k.one()), y1 = BiPoly::monomial(k, 0, 0, 0, 1, k.one());
        if (a > 0) check(x0 * f.partial(Var::X0) + x1 * f.partial(Var::X1) == f.scaled(k.from_int(a)), "X Euler identity");
        if (b > 0) check(y0 * f.partial(Var::Y0) + y1 * f.partial(Var::Y1) == f.scaled(k.from_int(b)), "Y Euler identity");
        check(BiPoly::parse(f.to_string(), k) == f, "parse/print round trip: " + f.to_string());
      }
    }
    for (unsigned q : {2u, 3u, 4u}) {
      const Field k = Field::of_order(q);
      for (int n = 0; n < 200; ++n) {
        std::vector<Elem> c(1 + rng() % 13);
        for (auto& x : c) x = Elem{static_cast<std::uint32_t>(rng() % q)};
        c.back() = Elem{static_cast<std::uint32_t>(1 + rng() % (q - 1))};
        const gf::Poly f(k, c);
        const auto fac = gf::factor(f);
        gf::Poly prod = gf::Poly::constant(k, fac.unit);
        bool irreducible = true;
        for (const auto& fc : fac.factors) {
          irreducible = irreducible && gf::is_irreducible(fc.poly);
          for (unsigned i = 0; i < fc.multiplicity; ++i) prod = prod * fc.poly;
        }
        check(prod == f && irreducible, "factorization of " + gf::format_poly(f));
      }
    }
    const Field k2 = Field::of_order(2);
    CensusOptions opts;
    opts.jobs = 1;
    const auto base = census(k2, 4, 3, opts);
    for (unsigned jobs : {2u, 4u}) {
      opts.jobs = jobs;
      const auto r = census(k2, 4, 3, opts);
      check(r.n_irreducible == base.n_irreducible && r.n_reducible == base.n_reducible &&
                r.candidates_scanned == base.candidates_scanned,
            "census totals depend on partitioning (" + std::to_string(jobs) + " partitions)");
    }
  });

  std::printf("%d criteria failed\n", failed_criteria);
  return failed_criteria == 0 ? 0 : 1;
}

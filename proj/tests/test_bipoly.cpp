#include <doctest.h>

#include <random>

#include "fillcurve/bipoly.hpp"
#include "fillcurve/error.hpp"

using namespace fillcurve;
using gf::Elem;
using gf::Field;
using gf::Poly;

namespace {

Elem rand_elem(const Field& k, std::mt19937_64& rng) { return Elem{static_cast<std::uint32_t>(rng() % k.size())}; }

BiPoly random_form(const Field& k, unsigned a, unsigned b, std::mt19937_64& rng) {
  BiPoly f(k, a, b);
  for (unsigned i = 0; i <= a; ++i)
    for (unsigned j = 0; j <= b; ++j) f.set_coeff(i, j, rand_elem(k, rng));
  return f;
}

// Monomial-by-monomial evaluation with field powers.
Elem eval_oracle(const BiPoly& f, Elem x0, Elem x1, Elem y0, Elem y1) {
  const Field& k = f.field();
  Elem acc = k.zero();
  for (unsigned i = 0; i <= f.a(); ++i)
    for (unsigned j = 0; j <= f.b(); ++j) {
      Elem t = f.coeff(i, j);
      t = k.mul(t, k.pow(x0, f.a() - i));
      t = k.mul(t, k.pow(x1, i));
      t = k.mul(t, k.pow(y0, f.b() - j));
      t = k.mul(t, k.pow(y1, j));
      acc = k.add(acc, t);
    }
  return acc;
}

// Determinant over the field by Gaussian elimination.
Elem det_oracle(std::vector<std::vector<Elem>> m, const Field& k) {
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
      const Elem f = k.mul(m[i][c], inv);
      for (std::size_t j = c; j < n; ++j) m[i][j] = k.sub(m[i][j], k.mul(f, m[c][j]));
    }
  }
  return d;
}

// Resultant in y of A(x0, y), B(x0, y) using the declared y-degrees.
Elem specialized_resultant(const AffinePoly& a, const AffinePoly& b, Elem x0, int m, int n) {
  const Field& k = a.field();
  auto coeffs = [&](const AffinePoly& p, int d) {
    std::vector<Elem> c(d + 1);
    for (int j = 0; j <= d; ++j) {
      Elem s = k.zero();
      for (int i = static_cast<int>(p.bound_x()); i >= 0; --i) s = k.add(k.mul(s, x0), p.coeff(i, j));
      c[j] = s;
    }
    return c;
  };
  const auto ac = coeffs(a, m), bc = coeffs(b, n);
  const int size = m + n;
  std::vector<std::vector<Elem>> s(size, std::vector<Elem>(size, k.zero()));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) s[r][r + j] = ac[m - j];
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) s[n + r][r + j] = bc[n - j];
  return det_oracle(s, k);
}

BiPoly kx(const Field& k) {
  const unsigned q = k.size();
  return BiPoly::monomial(k, q, 1, 0, 0, k.one()) - BiPoly::monomial(k, 1, q, 0, 0, k.one());
}

BiPoly ky(const Field& k) { return kx(k).transposed(); }

}  // namespace

TEST_CASE("parse examples") {
  const Field k3 = Field::of_order(3);
  const BiPoly f = BiPoly::parse("X0^3*X1 + 2*X0*X1^3", k3);
  CHECK(f.bidegree() == std::pair{4u, 0u});
  CHECK(f.term_count() == 2);
  CHECK(f.coeff(1, 0) == Elem{1});
  CHECK(f.coeff(3, 0) == Elem{2});

  const BiPoly g = BiPoly::parse("Y0^4 + Y1^4", k3);
  CHECK(g.bidegree() == std::pair{0u, 4u});
  CHECK(g.coeff(0, 0) == Elem{1});
  CHECK(g.coeff(0, 4) == Elem{1});
  CHECK(g.term_count() == 2);

  try {
    BiPoly::parse("X0*Y0 + X0^2", k3);
    FAIL("expected MixedBidegree");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MixedBidegree);
  }
  try {
    BiPoly::parse("X0 + * X1", k3);
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 5);
  }
  try {
    BiPoly::parse("[1,1]*X0", k3);
    FAIL("expected BadCoefficient");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadCoefficient);
  }
  CHECK_THROWS_AS(BiPoly::parse("", k3), SyntaxError);
  CHECK_THROWS_AS(BiPoly::parse("X2", k3), SyntaxError);

  // like terms combine, subtraction, repeated variables
  const BiPoly h = BiPoly::parse("X0*X0*Y1 - X0^2*Y1 + 2*X1^2*Y0", k3);
  CHECK(h.term_count() == 1);
  CHECK(h.coeff(2, 0) == Elem{2});

  const Field k4 = Field::of_order(4);
  const BiPoly w = BiPoly::parse("[0,1]*X0*Y1 + [1,1]*X1*Y0", k4);
  CHECK(w.coeff(0, 1) == Elem{2});
  CHECK(w.coeff(1, 0) == Elem{3});
}

TEST_CASE("print and parse round trip") {
  std::mt19937_64 rng(11);
  for (unsigned q : {2u, 3u, 4u, 5u, 9u}) {
    const Field k = Field::of_order(q);
    for (int t = 0; t < 40; ++t) {
      const unsigned a = rng() % 4, b = rng() % 4;
      BiPoly f = random_form(k, a, b, rng);
      if (t % 7 == 0) f = BiPoly(k, a, b);
      const std::string s = f.to_string();
      const BiPoly g = BiPoly::parse(s, k);
      CHECK(g == f);
      CHECK(g.to_string() == s);
    }
  }
  const Field k3 = Field::of_order(3);
  CHECK(BiPoly(k3, 2, 1).to_string() == "0*X0^2*Y0");
  CHECK(BiPoly::parse("2*X1*Y0^2 + X0*Y0*Y1", k3).to_string() == "X0*Y0*Y1 + 2*X1*Y0^2");
}

TEST_CASE("evaluation") {
  std::mt19937_64 rng(5);
  for (unsigned q : {2u, 3u, 4u, 7u, 8u, 9u}) {
    const Field k = Field::of_order(q);
    const BiPoly kxq = kx(k);
    for (Elem t : k.elements()) CHECK(k.is_zero(kxq.eval(k.one(), t, rand_elem(k, rng), rand_elem(k, rng))));
    CHECK(k.is_zero(kxq.eval(k.zero(), k.one(), k.one(), k.zero())));
    for (int n = 0; n < 50; ++n) {
      const unsigned a = rng() % 5, b = rng() % 5;
      const BiPoly f = random_form(k, a, b, rng), g = random_form(k, a, b, rng);
      const BiPoly h = random_form(k, rng() % 3, rng() % 3, rng);
      Elem c[4];
      for (auto& x : c) x = rand_elem(k, rng);
      const Elem fv = f.eval(c[0], c[1], c[2], c[3]);
      CHECK(fv == eval_oracle(f, c[0], c[1], c[2], c[3]));
      CHECK((f + g).eval(c[0], c[1], c[2], c[3]) == k.add(fv, g.eval(c[0], c[1], c[2], c[3])));
      CHECK((f * h).eval(c[0], c[1], c[2], c[3]) == k.mul(fv, h.eval(c[0], c[1], c[2], c[3])));
      const Elem lam = rand_elem(k, rng), mu = rand_elem(k, rng);
      const Elem scaled = f.eval(k.mul(lam, c[0]), k.mul(lam, c[1]), k.mul(mu, c[2]), k.mul(mu, c[3]));
      CHECK(scaled == k.mul(k.mul(k.pow(lam, a), k.pow(mu, b)), fv));
    }
  }
  // case-III curve passes through ((1,0),(1,0))
  const Field k3 = Field::of_order(3);
  const BiPoly f = BiPoly::parse("Y0^4 + Y1^4", k3), g = BiPoly::parse("X0^4 + X0*X1^3 + 2*X1^4", k3);
  const BiPoly F = f * kx(k3) + g * ky(k3);
  CHECK(F.bidegree() == std::pair{4u, 4u});
  CHECK(k3.is_zero(F.eval(k3.one(), k3.zero(), k3.one(), k3.zero())));
}

TEST_CASE("partial derivatives") {
  for (unsigned q : {2u, 3u, 4u, 5u, 9u}) {
    const Field k = Field::of_order(q);
    const BiPoly d = kx(k).partial(Var::X0);
    CHECK(d == BiPoly::monomial(k, 0, q, 0, 0, k.neg(k.one())));
  }
  const Field k2 = Field::of_order(2);
  CHECK(BiPoly::parse("Y0^2*Y1 + Y0*Y1^2", k2).partial(Var::Y0) == BiPoly::parse("Y1^2", k2));
  // clamped degree-0 block
  const BiPoly y = BiPoly::parse("Y0^2", k2);
  CHECK(y.partial(Var::X1).bidegree() == std::pair{0u, 2u});
  CHECK(y.partial(Var::X1).is_zero());

  std::mt19937_64 rng(7);
  for (unsigned q : {2u, 3u, 4u, 5u, 9u}) {
    const Field k = Field::of_order(q);
    for (int n = 0; n < 30; ++n) {
      const unsigned a = 1 + rng() % 5, b = 1 + rng() % 5;
      const BiPoly f = random_form(k, a, b, rng);
      const BiPoly x0 = BiPoly::monomial(k, 1, 0, 0, 0, k.one()), x1 = BiPoly::monomial(k, 0, 1, 0, 0, k.one());
      const BiPoly y0 = BiPoly::monomial(k, 0, 0, 1, 0, k.one()), y1 = BiPoly::monomial(k, 0, 0, 0, 1, k.one());
      CHECK(x0 * f.partial(Var::X0) + x1 * f.partial(Var::X1) == f.scaled(k.from_int(a)));
      CHECK(y0 * f.partial(Var::Y0) + y1 * f.partial(Var::Y1) == f.scaled(k.from_int(b)));
    }
  }
}

TEST_CASE("algebra") {
  const Field k3 = Field::of_order(3);
  CHECK(BiPoly::parse("X0 + X1", k3) * BiPoly::parse("X0 - X1", k3) == BiPoly::parse("X0^2 - X1^2", k3));
  CHECK_THROWS_AS(BiPoly::parse("X0", k3) + BiPoly::parse("Y0", k3), Error);
  const Field k9 = Field::of_order(9);
  try {
    (void)(BiPoly::parse("X0", k3) + BiPoly::parse("X0", k9));
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FieldMismatch);
  }
  const BiPoly f = BiPoly::parse("Y0^4 + Y1^4", k3) * kx(k3);
  CHECK(f.bidegree() == std::pair{4u, 4u});
}

TEST_CASE("dehomogenize") {
  const Field k3 = Field::of_order(3);
  const BiPoly F = BiPoly::parse("Y0^4 + Y1^4", k3) * kx(k3) + BiPoly::parse("X0^4 + X0*X1^3 + 2*X1^4", k3) * ky(k3);
  // (1+y^4)(x-x^3) + (1+x^3+2x^4)(y-y^3)
  AffinePoly want(k3, 4, 4);
  auto add = [&](unsigned i, unsigned j, int c) { want.set_coeff(i, j, k3.add(want.coeff(i, j), k3.from_int(c))); };
  for (auto [i, c] : {std::pair{1u, 1}, {3u, -1}})
    for (unsigned j : {0u, 4u}) add(i, j, c);
  for (auto [i, c] : {std::pair{0u, 1}, {3u, 1}, {4u, 2}})
    for (auto [j, d] : {std::pair{1u, 1}, {3u, -1}}) add(i, j, c * d);
  CHECK(F.dehomogenize(Chart::X0Y0) == want);

  const Field k2 = Field::of_order(2);
  const BiPoly G = BiPoly::parse("X0*Y0^3 + X1*Y1^3", k2) * BiPoly::parse("X0^2*X1 + X0*X1^2", k2) +
                   pow(BiPoly::parse("X0^2 + X0*X1 + X1^2", k2), 2) * BiPoly::parse("Y0^2*Y1 + Y0*Y1^2", k2);
  CHECK(G.bidegree() == std::pair{4u, 3u});
  // (1+xy^3)(x+x^2) + (1+x+x^2)^2(y+y^2) = x + x^2 + x^2y^3 + x^3y^3 + (1+x^2+x^4)(y+y^2)
  AffinePoly w2(k2, 4, 3);
  for (auto [i, j] : {std::pair{1u, 0u}, {2u, 0u}, {2u, 3u}, {3u, 3u}, {0u, 1u}, {2u, 1u}, {4u, 1u}, {0u, 2u}, {2u, 2u},
                      {4u, 2u}})
    w2.set_coeff(i, j, k2.one());
  CHECK(G.dehomogenize(Chart::X0Y0) == w2);

  AffinePoly one(k3, 0, 0);
  one.set_coeff(0, 0, k3.one());
  CHECK(BiPoly::monomial(k3, 3, 0, 2, 0, k3.one()).dehomogenize(Chart::X0Y0) == one);

  std::mt19937_64 rng(3);
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const Field k = Field::of_order(q);
    for (int n = 0; n < 20; ++n) {
      const BiPoly f = random_form(k, rng() % 5, rng() % 5, rng);
      for (Chart c : kAllCharts) {
        const AffinePoly g = f.dehomogenize(c);
        const Elem x = rand_elem(k, rng), y = rand_elem(k, rng);
        const bool xf = c == Chart::X1Y0 || c == Chart::X1Y1, yf = c == Chart::X0Y1 || c == Chart::X1Y1;
        const Elem v = f.eval(xf ? x : k.one(), xf ? k.one() : x, yf ? y : k.one(), yf ? k.one() : y);
        CHECK(g.eval(x, y) == v);
      }
    }
  }
}

TEST_CASE("divides") {
  const Field k3 = Field::of_order(3);
  const auto h = divides(BiPoly::parse("X0 + X1", k3), BiPoly::parse("X0^2 - X1^2", k3));
  REQUIRE(h);
  CHECK(*h == BiPoly::parse("X0 - X1", k3));
  const BiPoly F = BiPoly::parse("Y0^4 + Y1^4", k3) * kx(k3) + BiPoly::parse("X0^4 + X0*X1^3 + 2*X1^4", k3) * ky(k3);
  CHECK(!divides(kx(k3), F));
  CHECK_THROWS_AS(divides(BiPoly(k3, 1, 0), F), Error);

  std::mt19937_64 rng(19);
  std::vector<Elem> scratch;
  for (unsigned q : {2u, 3u, 4u, 5u, 9u}) {
    const Field k = Field::of_order(q);
    for (int n = 0; n < 100; ++n) {
      BiPoly g = random_form(k, rng() % 4, rng() % 4, rng);
      if (g.is_zero()) g.set_coeff(0, 0, k.one());
      const BiPoly hh = random_form(k, rng() % 4, rng() % 4, rng);
      const BiPoly f = g * hh;
      const auto got = divides(g, f);
      REQUIRE(got);
      CHECK(*got == hh);
      CHECK(divides_raw(k, g.coeffs(), g.a(), g.b(), f.coeffs(), f.a(), f.b(), scratch));
      // perturb: any claimed cofactor must be exact
      BiPoly f2 = f;
      f2.set_coeff(0, 0, k.add(f2.coeff(0, 0), k.one()));
      const auto got2 = divides(g, f2);
      if (got2) CHECK(g * *got2 == f2);
      CHECK(divides_raw(k, g.coeffs(), g.a(), g.b(), f2.coeffs(), f2.a(), f2.b(), scratch) == got2.has_value());
    }
  }
}

TEST_CASE("resultants") {
  const Field k5 = Field::of_order(5);
  auto affine = [&](std::initializer_list<std::tuple<unsigned, unsigned, int>> terms) {
    AffinePoly p(k5, 3, 3);
    for (auto [i, j, c] : terms) p.set_coeff(i, j, k5.from_int(c));
    return p;
  };
  const Poly r1 = resultant_elim(affine({{0, 1, 1}, {1, 0, -1}}), affine({{0, 1, 1}, {0, 0, -1}}), Elim::Y);
  const Poly xm1(k5, {k5.from_int(-1), k5.one()});
  CHECK((r1 == xm1 || r1 == -xm1));
  // y^2 - x against y: Sylvester [[1,0,-x],[1,0,0]... ] gives -x
  const Poly r2 = resultant_elim(affine({{0, 2, 1}, {1, 0, -1}}), affine({{0, 1, 1}}), Elim::Y);
  CHECK(r2 == Poly(k5, {k5.zero(), k5.from_int(-1)}));

  std::mt19937_64 rng(23);
  for (unsigned q : {2u, 3u, 4u, 7u}) {
    const Field k = Field::of_order(q);
    for (int n = 0; n < 40; ++n) {
      const BiPoly fa = random_form(k, 1 + rng() % 3, 1 + rng() % 3, rng);
      const BiPoly fb = random_form(k, 1 + rng() % 3, 1 + rng() % 3, rng);
      const AffinePoly a = fa.dehomogenize(Chart::X0Y0), b = fb.dehomogenize(Chart::X0Y0);
      const int m = a.degree_y(), nn = b.degree_y();
      if (m < 0 || nn < 0) continue;
      const Poly r = resultant_elim(a, b, Elim::Y);
      CHECK(r == resultant_bareiss(a, b, Elim::Y));
      CHECK(resultant_elim(a, b, Elim::X) == resultant_bareiss(a, b, Elim::X));
      for (Elem x0 : k.elements()) CHECK(r(x0) == specialized_resultant(a, b, x0, m, nn));
      // shared factor gives zero
      const BiPoly fc = random_form(k, 1, 1, rng);
      const AffinePoly ab = (fa * fc).dehomogenize(Chart::X0Y0);
      if (a.degree_y() > 0) {
        CHECK(resultant_elim(a, ab, Elim::Y).is_zero());
        CHECK(resultant_elim(a.swapped(), ab.swapped(), Elim::X).is_zero());
      }
    }
  }
}

TEST_CASE("common y-factor") {
  std::mt19937_64 rng(29);
  for (unsigned q : {2u, 3u, 5u}) {
    const Field k = Field::of_order(q);
    for (int n = 0; n < 30; ++n) {
      const BiPoly g = random_form(k, 1 + rng() % 2, 1 + rng() % 2, rng);
      const BiPoly u = random_form(k, rng() % 3, rng() % 3, rng), v = random_form(k, rng() % 3, rng() % 3, rng);
      const AffinePoly ga = g.dehomogenize(Chart::X0Y0);
      const AffinePoly c = common_y_factor({(g * u).dehomogenize(Chart::X0Y0), (g * v).dehomogenize(Chart::X0Y0)});
      if (ga.degree_y() > 0 && !u.is_zero() && !v.is_zero()) {
        CHECK(c.degree_y() >= ga.degree_y());
        // the common factor's y-degree is positive iff the resultant vanishes
        CHECK(resultant_elim((g * u).dehomogenize(Chart::X0Y0), (g * v).dehomogenize(Chart::X0Y0), Elim::Y).is_zero());
      }
      const AffinePoly ua = u.dehomogenize(Chart::X0Y0), va = v.dehomogenize(Chart::X0Y0);
      if (!ua.is_zero() && !va.is_zero()) {
        const bool shared = common_y_factor({ua, va}).degree_y() > 0;
        CHECK(shared == (resultant_elim(ua, va, Elim::Y).is_zero() && ua.degree_y() > 0 && va.degree_y() > 0));
      }
    }
  }
}

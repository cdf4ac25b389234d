#include "fillcurve/families.hpp"

#include <set>

#include "fillcurve/analysis.hpp"
#include "fillcurve/error.hpp"
#include "fillcurve/filling.hpp"

namespace fillcurve {

using gf::Elem;
using gf::Field;

std::string_view to_string(FamilyCase c) {
  switch (c) {
    case FamilyCase::I: return "I";
    case FamilyCase::II: return "II";
    case FamilyCase::III: return "III";
    case FamilyCase::Q2: return "q2";
  }
  return "?";
}

FamilyParams pick_params(const Field& k) {
  const unsigned q = k.size();
  if (q == 2 || q == 3)
    throw Error(ErrorKind::UnsupportedQ, "q = " + std::to_string(q) + " has its own construction");
  FamilyParams p;
  p.q = q;
  std::set<std::uint32_t> excluded;
  if (k.characteristic() == 2) {
    p.kind = FamilyCase::II;
    for (Elem u : k.elements()) excluded.insert(k.add(u, k.mul(u, u)).v);
  } else {
    p.kind = FamilyCase::I;
    std::set<std::uint32_t> squares;
    for (Elem u : k.elements()) squares.insert(k.mul(u, u).v);
    for (Elem d : k.elements())
      if (squares.count(k.neg(d).v)) excluded.insert(d.v);
  }
  for (Elem d : k.elements()) {
    if (excluded.count(d.v)) continue;
    if (!p.delta) {
      p.delta = d;
    } else {
      p.gamma = d;
      break;
    }
  }
  if (!p.gamma) throw Error(ErrorKind::UnsupportedQ, "no parameter pair exists for q = " + std::to_string(q));
  return p;
}

std::pair<BiPoly, BiPoly> family_forms(const Field& k, const FamilyParams& p) {
  const unsigned q = k.size();
  const Elem one = k.one();
  auto x_form = [&](Elem c) {
    std::vector<Elem> v(q + 2, k.zero());
    v[0] = one;
    if (p.kind == FamilyCase::II) v[q] = one;
    v[q + 1] = c;
    return BiPoly::x_form(k, v);
  };
  switch (p.kind) {
    case FamilyCase::I:
    case FamilyCase::II:
      return {x_form(*p.delta).transposed(), x_form(*p.gamma)};
    case FamilyCase::III:
      return {BiPoly::parse("Y0^4 + Y1^4", k), BiPoly::parse("X0^4 + X0*X1^3 + 2*X1^4", k)};
    case FamilyCase::Q2:
      break;
  }
  throw Error(ErrorKind::UnsupportedQ, "the q = 2 curve is not of the form f K_X + g K_Y");
}

BiPoly assemble_curve(const BiPoly& f, const BiPoly& g, bool check) {
  gf::require_same(f.field(), g.field(), "assemble_curve");
  const unsigned q = f.field().size();
  if (f.bidegree() != std::pair{0u, q + 1} || g.bidegree() != std::pair{q + 1, 0u})
    throw Error(ErrorKind::BadShape, "f, g must be binary forms of degree q+1 in Y and X");
  if (check && !validate_setup(f, g))
    throw Error(ErrorKind::SetupViolation, "f and g must be squarefree binary forms without rational zeros");
  const auto [kx, ky] = kx_ky(f.field());
  return f * kx + g * ky;
}

Construction construct(const Field& k, bool transposed) {
  const unsigned q = k.size();
  Construction c;
  c.transposed = transposed;
  c.params.q = q;
  if (q == 2) {
    c.params.kind = FamilyCase::Q2;
    c.curve = BiPoly::parse("X0*Y0^3 + X1*Y1^3", k) * BiPoly::parse("X0^2*X1 + X0*X1^2", k) +
              pow(BiPoly::parse("X0^2 + X0*X1 + X1^2", k), 2) * BiPoly::parse("Y0^2*Y1 + Y0*Y1^2", k);
  } else {
    if (q == 3)
      c.params.kind = FamilyCase::III;
    else
      c.params = pick_params(k);
    auto [f, g] = family_forms(k, c.params);
    c.curve = assemble_curve(f, g);
    if (transposed) {
      c.f = g.transposed();
      c.g = f.transposed();
    } else {
      c.f = f;
      c.g = g;
    }
  }
  if (transposed) c.curve = c.curve.transposed();
  return c;
}

BiPoly fiber_union(const Field& k) { return kx_ky(k).second; }

}  // namespace fillcurve

#include "fillcurve/bounds.hpp"

#include "fillcurve/analysis.hpp"
#include "fillcurve/error.hpp"
#include "fillcurve/field.hpp"
#include "fillcurve/geom.hpp"

namespace fillcurve {

namespace {

using u128 = unsigned __int128;

std::uint64_t narrow(u128 x) {
  if (x > ~std::uint64_t{0}) throw Error(ErrorKind::BadParameters, "bound arithmetic overflows 64 bits");
  return static_cast<std::uint64_t>(x);
}

u128 checked_mul(u128 x, u128 y) {
  if (x != 0 && y > (~u128{0}) / x) throw Error(ErrorKind::BadParameters, "bound arithmetic overflows");
  return x * y;
}

}  // namespace

BoundValue point_count_bound(std::uint64_t q, unsigned r, std::uint64_t d) {
  if (q < 2 || !gf::prime_power(q)) throw Error(ErrorKind::BadParameters, "q must be a prime power");
  if (r < 2) throw Error(ErrorKind::BadParameters, "r must be at least 2");
  u128 qr = 1;
  for (unsigned i = 0; i < r; ++i) qr = checked_mul(qr, q);
  const u128 num = checked_mul(checked_mul(q - 1, checked_mul(qr, q) - 1), d);
  const u128 pos = checked_mul(q, qr - 1), neg = checked_mul(r, q - 1);
  if (pos <= neg) throw Error(ErrorKind::BadParameters, "denominator is not positive");
  const u128 den = pos - neg;
  return {narrow(num), narrow(den), narrow(num / den)};
}

unsigned segre_degree(unsigned a, unsigned b) {
  if (a == 0 && b == 0) throw Error(ErrorKind::BadParameters, "bi-degree (0,0) is not a curve");
  return a + b;
}

BoundReport check_attainment(const BiPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the zero form defines no curve");
  BoundReport rep;
  rep.q = f.field().size();
  rep.d = segre_degree(f.a(), f.b());
  rep.bound = point_count_bound(rep.q, rep.r, rep.d);
  rep.observed = count_points(f, 1);
  rep.attained = *rep.observed == rep.bound.value;
  if (f.a() == 0 || f.b() == 0 || f.a() + f.b() < 3) {
    rep.hypotheses_note = "bi-degree too small for a nondegenerate curve in P^3";
    return rep;
  }
  IrreducibilityResult irr;
  try {
    irr = is_abs_irreducible(f);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Infeasible) throw;
    irr.status = Irreducibility::Unknown;
  }
  switch (irr.status) {
    case Irreducibility::Irreducible:
      rep.hypotheses_met = true;
      rep.hypotheses_note = "absolutely irreducible (method " + irr.method + "), a, b >= 1, a + b >= 3";
      break;
    case Irreducibility::Reducible:
      rep.hypotheses_note = "reducible: the bound does not apply";
      break;
    case Irreducibility::Unknown:
      rep.hypotheses_note = "irreducibility not established";
      break;
  }
  return rep;
}

}  // namespace fillcurve

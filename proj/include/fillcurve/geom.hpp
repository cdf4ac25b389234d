#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fillcurve/bipoly.hpp"
#include "fillcurve/field.hpp"
#include "fillcurve/point.hpp"

namespace fillcurve {

/// Point of P^3 with its first nonzero coordinate equal to 1.
struct P3Point {
  std::array<gf::Elem, 4> t;
  friend bool operator==(const P3Point&, const P3Point&) = default;
  friend auto operator<=>(const P3Point&, const P3Point&) = default;
};

/// (1, t) for t in enumeration order, then (0, 1).
std::vector<ProjPoint> enum_p1(const gf::Field& k);
/// All pairs, first component varying slowest.
std::vector<PointPair> enum_p1xp1(const gf::Field& k);

/// (u0 v0, u0 v1, u1 v0, u1 v1), normalized.
P3Point segre(const gf::Field& k, const PointPair& p);

/// GF(q^m) built over the field of order q (the field itself for m = 1).
gf::Field extension_of(const gf::Field& k, unsigned m);

struct CountOptions {
  unsigned jobs = 1;
  std::uint64_t budget = 100'000'000;  // max points examined
};

/// Zeros of F on P^1 x P^1 over GF(q^m), q = |field of F|. Throws Infeasible
/// when (q^m + 1)^2 exceeds the budget.
std::uint64_t count_points(const BiPoly& f, unsigned m, const CountOptions& opts = {});

/// Zeros of F on P^1 x P^1 over F's own field, in enumeration order.
std::vector<PointPair> rational_zeros(const BiPoly& f);

/// Binary form in Y obtained by fixing the X coordinates: coefficient j of the
/// result multiplies Y0^(b-j) Y1^j.
std::vector<gf::Elem> fix_first(const BiPoly& f, const ProjPoint& x);

}  // namespace fillcurve

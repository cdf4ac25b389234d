#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fillcurve/bipoly.hpp"

namespace fillcurve {

/// floor(num / den) with num = (q-1)(q^(r+1)-1) d and den = q(q^r-1) - r(q-1),
/// the largest number of GF(q)-points a nondegenerate irreducible curve of
/// degree d in P^r can have.
struct BoundValue {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;
  std::uint64_t value = 0;
};

/// Exact integer arithmetic. Throws BadParameters (q not a prime power,
/// r < 2, nonpositive denominator, overflow).
BoundValue point_count_bound(std::uint64_t q, unsigned r, std::uint64_t d);

/// Degree of the image of a bi-degree (a, b) curve under the Segre map: a + b.
unsigned segre_degree(unsigned a, unsigned b);

struct BoundReport {
  std::uint64_t q = 0;
  unsigned r = 3;
  unsigned d = 0;
  BoundValue bound;
  std::optional<std::uint64_t> observed;
  std::optional<bool> attained;
  /// The bound applies only to absolutely irreducible curves whose Segre
  /// image spans P^3 (taken to hold for a, b >= 1 and a + b >= 3).
  bool hypotheses_met = false;
  std::string hypotheses_note;
};

/// Counts rational points of F and compares with the bound for its Segre
/// image in P^3.
BoundReport check_attainment(const BiPoly& f);

}  // namespace fillcurve

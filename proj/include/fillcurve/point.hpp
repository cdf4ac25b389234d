#pragma once

#include <string>

#include "fillcurve/field.hpp"

namespace fillcurve {

/// Point of P^1, normalized to (1, t) or (0, 1).
struct ProjPoint {
  gf::Elem u0;
  gf::Elem u1;

  /// Throws BadParameters for (0, 0).
  static ProjPoint normalized(const gf::Field& k, gf::Elem u0, gf::Elem u1);

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

/// Point of P^1 x P^1; both factors live in the same field.
struct PointPair {
  ProjPoint first;
  ProjPoint second;

  friend bool operator==(const PointPair&, const PointPair&) = default;
  friend auto operator<=>(const PointPair&, const PointPair&) = default;
};

/// "(u0:u1)x(v0:v1)"
std::string format_point(const gf::Field& k, const PointPair& p);

}  // namespace fillcurve

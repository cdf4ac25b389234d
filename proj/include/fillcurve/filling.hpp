#pragma once

#include <string_view>
#include <utility>

#include "fillcurve/bipoly.hpp"

namespace fillcurve {

/// K_X = X0^q X1 - X0 X1^q and K_Y = Y0^q Y1 - Y0 Y1^q for q = |k|.
std::pair<BiPoly, BiPoly> kx_ky(const gf::Field& k);

/// F = f * K_X + g * K_Y.
struct Decomposition {
  BiPoly f;  // bi-degree (a - q - 1, b)
  BiPoly g;  // bi-degree (a, b - q - 1)
  BiPoly kx;
  BiPoly ky;

  BiPoly recombine() const { return f * kx + g * ky; }
};

/// True iff F vanishes at every point of P^1 x P^1 over its own field.
/// Throws ZeroPolynomial for F = 0.
bool is_filling(const BiPoly& f);

/// Writes a filling form as f * K_X + g * K_Y: reduce the affine part modulo
/// x^q - x and then y^q - y, homogenize the quotients, and move the
/// X1-leading row and the Y1-leading column across using the vanishing at the
/// points at infinity. Deterministic. Throws NotFilling, BidegreeTooSmall.
Decomposition decompose(const BiPoly& f);

enum class Consistency { Consistent, Contradiction };
std::string_view to_string(Consistency c);

/// An irreducible filling curve must have a, b >= q + 1; reports a
/// contradiction when `irreducible` is claimed for a smaller bi-degree.
/// Throws NotFilling.
Consistency min_bidegree_check(const BiPoly& f, bool irreducible);

}  // namespace fillcurve

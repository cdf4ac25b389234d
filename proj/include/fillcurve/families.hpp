#pragma once

#include <optional>
#include <string_view>

#include "fillcurve/bipoly.hpp"

namespace fillcurve {

// Curves F = f(Y) K_X + g(X) K_Y with f, g binary forms of degree q+1:
//   I   q odd >= 5:   f = Y0^(q+1) + d Y1^(q+1),           g = X0^(q+1) + c X1^(q+1)
//   II  q = 2^e >= 4: f = Y0^(q+1) + Y0 Y1^q + d Y1^(q+1),  g likewise in X with c
//   III q = 3:        f = Y0^4 + Y1^4,                      g = X0^4 + X0 X1^3 + 2 X1^4
// and, for q = 2, an explicit curve of bi-degree (4, 3).
enum class FamilyCase { I, II, III, Q2 };
std::string_view to_string(FamilyCase c);

struct FamilyParams {
  unsigned q = 0;
  FamilyCase kind = FamilyCase::I;
  std::optional<gf::Elem> delta;  // parameter of f
  std::optional<gf::Elem> gamma;  // parameter of g
};

/// Case I: the first two elements d with -d a non-square. Case II: the first
/// two elements outside {u + u^2}. Throws UnsupportedQ for q = 2, 3.
FamilyParams pick_params(const gf::Field& k);

/// The pair (f, g) for cases I-III.
std::pair<BiPoly, BiPoly> family_forms(const gf::Field& k, const FamilyParams& p);

/// f K_X + g K_Y. Throws SetupViolation unless f and g are squarefree without
/// rational zeros (skipped with check = false), BadShape for wrong shapes.
BiPoly assemble_curve(const BiPoly& f, const BiPoly& g, bool check = true);

struct Construction {
  FamilyParams params;
  std::optional<BiPoly> f;  // absent for q = 2
  std::optional<BiPoly> g;
  bool transposed = false;
  BiPoly curve;
};

/// Filling curve of minimal bi-degree over k: (q+1, q+1), or (4, 3) for
/// q = 2. `transposed` swaps the X and Y blocks.
Construction construct(const gf::Field& k, bool transposed = false);

/// K_Y: the union of the q+1 rational fibres P^1 x {P}.
BiPoly fiber_union(const gf::Field& k);

}  // namespace fillcurve

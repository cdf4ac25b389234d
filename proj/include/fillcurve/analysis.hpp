#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fillcurve/bipoly.hpp"
#include "fillcurve/factor.hpp"
#include "fillcurve/point.hpp"

namespace fillcurve {

// ---- brute-force singular points -------------------------------------------

/// F and its four partials, in the order F, F_X0, F_X1, F_Y0, F_Y1.
std::vector<BiPoly> jacobian_system(const BiPoly& f);

struct TaggedPoint {
  unsigned degree;  // smallest m with the point defined over GF(q^m)
  gf::Field field;  // GF(q^degree); coordinates live here
  PointPair point;
};

/// Points of P^1 x P^1 over GF(q^m), m <= m_max, where every form vanishes.
/// Each point is reported once, at its minimal extension degree. Throws
/// Infeasible when the total number of points examined exceeds `budget`.
std::vector<TaggedPoint> common_zeros(const std::vector<BiPoly>& forms, unsigned m_max,
                                      std::uint64_t budget = 100'000'000);

inline std::vector<TaggedPoint> singular_points(const BiPoly& f, unsigned m_max, std::uint64_t budget = 100'000'000) {
  return common_zeros(jacobian_system(f), m_max, budget);
}

// ---- exact smoothness certificate ----------------------------------------

enum class Verdict { Smooth, Singular, Inconclusive };
std::string_view to_string(Verdict v);

/// A common zero of the system in one chart: x = theta with m(theta) = 0,
/// and y any root of G(theta, y). G = 0 means the whole line x = theta.
/// With `swapped` the chart variables are exchanged first.
struct Witness {
  Chart chart = Chart::X0Y0;
  bool swapped = false;
  gf::Poly m;
  AffinePoly g;
};

struct TraceStep {
  Chart chart;
  bool swapped;
  std::string method;  // "pair", "x-gcd", "component", "constant", "inconclusive"
  std::string first;   // member names ("F", "F_X0", ...)
  std::string second;
  int degree;          // degree of the eliminant; -1 if not applicable
  std::size_t factors;  // distinct irreducible factors examined
};

struct SmoothCertificate {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Witness> witness;
  std::vector<TraceStep> trace;
};

/// Decides whether F = 0 is nonsingular over the algebraic closure by
/// elimination in each affine chart. Requires a, b >= 1.
SmoothCertificate certify_smooth(const BiPoly& f, std::uint64_t seed = 0);

/// Re-checks a witness by division over GF(q)[x]/(m), independently of the
/// elimination that produced it.
bool verify_witness(const BiPoly& f, const Witness& w);

/// Degree over GF(q) of the smallest point a witness describes, computed by
/// factoring G over GF(q^deg m). Empty when that field would be too large.
std::optional<unsigned> witness_point_degree(const BiPoly& f, const Witness& w);

/// A point of P^1 x P^1 of that smallest degree described by the witness,
/// with coordinates in GF(q^degree). Empty when the field would be too large.
std::optional<TaggedPoint> witness_point(const BiPoly& f, const Witness& w);

// ---- reduced system for F = f(Y) K_X + g(X) K_Y ---------------------------

struct ReducedSystem {
  BiPoly e1;  // X0^q f_Y1 + Y0^q g_X1
  BiPoly e2;  // X0^q f_Y0 - Y1^q g_X1
  BiPoly e3;  // X1^q f_Y1 - Y0^q g_X0
  BiPoly e4;  // X1^q f_Y0 + Y1^q g_X0
  std::vector<BiPoly> forms() const { return {e1, e2, e3, e4}; }
};

/// f of bi-degree (0, q+1), g of bi-degree (q+1, 0). Throws BadShape.
ReducedSystem reduced_system(const BiPoly& f, const BiPoly& g);

/// f and g are squarefree over the closure and have no zero on P^1(GF(q)).
/// Throws BadShape.
bool validate_setup(const BiPoly& f, const BiPoly& g);

/// Binary form of degree d (as a (d,0) or (0,d) BiPoly) is squarefree and has
/// no rational zero.
bool binary_form_ok(const BiPoly& h);

// ---- absolute irreducibility -----------------------------------------------

enum class Irreducibility { Irreducible, Reducible, Unknown };
std::string_view to_string(Irreducibility r);

enum class IrrMethod { A, B, Auto };
std::string_view to_string(IrrMethod m);

struct IrreducibilityResult {
  Irreducibility status = Irreducibility::Unknown;
  std::string method;  // "A", "B", "content", "trivial"
  std::optional<BiPoly> factor;  // a proper factor, when one was found
  std::string factor_field;      // field description of `factor`
  std::optional<Verdict> smooth;  // set when method A ran
};

struct IrrOptions {
  IrrMethod method = IrrMethod::Auto;
  std::uint64_t budget = 1u << 22;  // candidate factors examined by method B
  std::uint64_t seed = 0;
};

/// Irreducibility over the algebraic closure.
/// A: a nonsingular curve with a, b >= 1 is irreducible (two components
///    would meet). Gives Unknown for singular curves.
/// B: exhaustive search for a factor of smaller bi-degree over GF(q), then,
///    for GF(q)-irreducible F, for a factor of bi-degree (a/k, b/k) over
///    GF(q^k) for each prime k dividing gcd(a, b). Throws Infeasible when the
///    candidate count exceeds the budget.
/// Auto: B when within budget, otherwise A plus whatever part of B fits.
IrreducibilityResult is_abs_irreducible(const BiPoly& f, const IrrOptions& opts = {});

/// Proper factor of F over F's field with bi-degree (a', b'), if any; the
/// returned form has its lexicographically leading coefficient equal to 1.
/// Throws Infeasible when more than `budget` candidates would be needed.
std::optional<BiPoly> find_factor(const BiPoly& f, unsigned a1, unsigned b1, std::uint64_t budget);

/// Number of candidates find_factor would examine.
std::uint64_t factor_search_size(const BiPoly& f, unsigned a1, unsigned b1);

}  // namespace fillcurve

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fillcurve/analysis.hpp"
#include "fillcurve/bipoly.hpp"

namespace fillcurve {

/// Row-reduced basis of the forms of bi-degree (a, b) vanishing at every
/// rational point of P^1 x P^1. Basis vector k has coefficient 1 at the k-th
/// free column (in coefficient order i*(b+1)+j) and 0 at the other free
/// columns, so coordinates of a member are read off directly.
std::vector<BiPoly> filling_space_basis(const gf::Field& k, unsigned a, unsigned b);

/// Coordinates of f in the basis, or nullopt if f is not in the span.
std::optional<std::vector<gf::Elem>> space_coordinates(const std::vector<BiPoly>& basis, const BiPoly& f);

/// Candidates are nonzero coordinate vectors with the first nonzero entry 1,
/// numbered by (position of that entry, remaining entries read as a base-q
/// number with the last coordinate least significant).
std::uint64_t candidate_count(std::uint32_t q, std::size_t dim);
BiPoly candidate_at(const std::vector<BiPoly>& basis, std::uint64_t index);
/// Index of the candidate proportional to f, or nullopt if f is zero or not
/// in the span.
std::optional<std::uint64_t> candidate_index(const std::vector<BiPoly>& basis, const BiPoly& f);

struct CensusOptions {
  unsigned jobs = 1;  // also the number of index partitions
  bool smooth = false;
  std::uint64_t budget = 10'000'000;
  std::size_t exemplar_limit = 8;
  /// Stop once the first irreducible candidate in index order is known. The
  /// counts then cover only the examined prefix.
  bool stop_at_first = false;
  IrrOptions irreducibility{};
  /// Called with (examined, total) every 4096 candidates, from any worker
  /// but never concurrently.
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

struct Exemplar {
  std::uint64_t index = 0;
  BiPoly poly;
  std::optional<Verdict> smooth;
};

struct CensusReport {
  std::uint32_t q = 0;
  unsigned a = 0, b = 0;
  std::size_t space_dimension = 0;
  std::vector<BiPoly> basis;
  std::uint64_t candidates_scanned = 0;
  std::uint64_t n_irreducible = 0;
  std::uint64_t n_reducible = 0;
  std::uint64_t n_unknown = 0;
  std::optional<std::uint64_t> n_smooth;  // with CensusOptions::smooth
  std::optional<std::uint64_t> n_singular_irreducible;
  std::optional<std::uint64_t> n_smooth_inconclusive;
  std::vector<Exemplar> exemplars;  // irreducible, by candidate index
  std::uint64_t filling_rechecked = 0;
  bool complete = true;
  unsigned partitions = 1;
  double seconds = 0;
};

/// Classifies every candidate of the filling space. Throws Infeasible when
/// the candidate count exceeds the budget.
CensusReport census(const gf::Field& k, unsigned a, unsigned b, const CensusOptions& opts = {});

enum class CellStatus { Yes, No, Infeasible };
std::string_view to_string(CellStatus s);

struct ScanCell {
  unsigned a = 0, b = 0;
  CellStatus status = CellStatus::No;
  /// "degree" (a <= q or b <= q, no enumeration needed), "census", or "budget"
  std::string reason;
  std::uint64_t candidates = 0;
  std::uint64_t examined = 0;
  std::optional<BiPoly> exemplar;
};

struct ScanTable {
  std::uint32_t q = 0;
  unsigned a_max = 0, b_max = 0;
  std::vector<ScanCell> cells;  // a ascending, then b ascending
  double seconds = 0;

  const ScanCell& at(unsigned a, unsigned b) const { return cells[a * (b_max + 1) + b]; }
};

/// Whether an absolutely irreducible filling form exists at each bi-degree up
/// to (a_max, b_max). Cells with a <= q or b <= q are empty without
/// enumeration; the others stop at the first irreducible candidate.
ScanTable min_bidegree_scan(const gf::Field& k, unsigned a_max, unsigned b_max, const CensusOptions& opts = {});

}  // namespace fillcurve

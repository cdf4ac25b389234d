#include "fillcurve/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "fillcurve/error.hpp"
#include "fillcurve/filling.hpp"
#include "fillcurve/geom.hpp"

namespace fillcurve {

using gf::Elem;
using gf::Field;

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_pow(std::uint64_t q, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > kSaturated / q) return kSaturated;
    r *= q;
  }
  return r;
}

// Rows indexed by rational pairs, columns by coefficient index i*(b+1)+j.
std::vector<std::vector<Elem>> evaluation_matrix(const Field& k, unsigned a, unsigned b) {
  const auto pts = enum_p1(k);
  std::vector<std::vector<Elem>> m;
  for (const auto& u : pts) {
    for (const auto& v : pts) {
      std::vector<Elem> row;
      row.reserve((a + 1) * (b + 1));
      for (unsigned i = 0; i <= a; ++i) {
        const Elem xu = k.mul(k.pow(u.u0, a - i), k.pow(u.u1, i));
        for (unsigned j = 0; j <= b; ++j) row.push_back(k.mul(xu, k.mul(k.pow(v.u0, b - j), k.pow(v.u1, j))));
      }
      m.push_back(std::move(row));
    }
  }
  return m;
}

}  // namespace

std::vector<BiPoly> filling_space_basis(const Field& k, unsigned a, unsigned b) {
  auto m = evaluation_matrix(k, a, b);
  const std::size_t n = (a + 1) * (b + 1);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && k.is_zero(m[p][c])) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Elem inv = k.inv(m[r][c]);
    for (auto& x : m[r]) x = k.mul(x, inv);
    for (std::size_t s = 0; s < m.size(); ++s) {
      if (s == r || k.is_zero(m[s][c])) continue;
      const Elem t = m[s][c];
      for (std::size_t cc = c; cc < n; ++cc) m[s][cc] = k.sub(m[s][cc], k.mul(t, m[r][cc]));
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<BiPoly> basis;
  std::size_t next_pivot = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (next_pivot < pivots.size() && pivots[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    BiPoly v(k, a, b);
    v.set_coeff(c / (b + 1), c % (b + 1), k.one());
    for (std::size_t row = 0; row < pivots.size(); ++row) {
      const std::size_t pc = pivots[row];
      v.set_coeff(pc / (b + 1), pc % (b + 1), k.neg(m[row][c]));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// The free column of each basis vector: the first position where it is 1 and
// every other basis vector vanishes.
std::vector<std::size_t> free_columns(const std::vector<BiPoly>& basis) {
  std::vector<std::size_t> cols;
  if (basis.empty()) return cols;
  const Field& k = basis[0].field();
  const std::size_t n = basis[0].coeffs().size();
  for (std::size_t v = 0; v < basis.size(); ++v) {
    std::size_t found = n;
    for (std::size_t c = 0; c < n && found == n; ++c) {
      if (basis[v].coeffs()[c] != k.one()) continue;
      bool alone = true;
      for (std::size_t w = 0; w < basis.size() && alone; ++w)
        if (w != v && !k.is_zero(basis[w].coeffs()[c])) alone = false;
      if (alone) found = c;
    }
    if (found == n) throw Error(ErrorKind::BadShape, "basis is not in reduced form");
    cols.push_back(found);
  }
  return cols;
}

BiPoly combine(const std::vector<BiPoly>& basis, const std::vector<Elem>& lambda) {
  const Field& k = basis[0].field();
  BiPoly f(k, basis[0].a(), basis[0].b());
  std::vector<Elem> acc(f.coeffs().begin(), f.coeffs().end());
  for (std::size_t v = 0; v < basis.size(); ++v) {
    if (k.is_zero(lambda[v])) continue;
    const auto& c = basis[v].coeffs();
    for (std::size_t i = 0; i < acc.size(); ++i)
      if (!k.is_zero(c[i])) acc[i] = k.add(acc[i], k.mul(lambda[v], c[i]));
  }
  const unsigned bb = f.b() + 1;
  for (std::size_t i = 0; i < acc.size(); ++i) f.set_coeff(i / bb, i % bb, acc[i]);
  return f;
}

}  // namespace

std::optional<std::vector<Elem>> space_coordinates(const std::vector<BiPoly>& basis, const BiPoly& f) {
  if (basis.empty()) {
    if (f.is_zero()) return std::vector<Elem>{};
    return std::nullopt;
  }
  gf::require_same(basis[0].field(), f.field(), "space_coordinates");
  if (f.bidegree() != basis[0].bidegree()) return std::nullopt;
  const auto cols = free_columns(basis);
  std::vector<Elem> lambda;
  for (std::size_t c : cols) lambda.push_back(f.coeffs()[c]);
  if (combine(basis, lambda) != f) return std::nullopt;
  return lambda;
}

std::uint64_t candidate_count(std::uint32_t q, std::size_t dim) {
  if (dim == 0) return 0;
  const std::uint64_t top = sat_pow(q, dim);
  if (top == kSaturated) return kSaturated;
  return (top - 1) / (q - 1);
}

BiPoly candidate_at(const std::vector<BiPoly>& basis, std::uint64_t index) {
  const std::size_t dim = basis.size();
  if (dim == 0) throw Error(ErrorKind::BadParameters, "the filling space is zero");
  const Field& k = basis[0].field();
  const std::uint32_t q = k.size();
  if (index >= candidate_count(q, dim)) throw Error(ErrorKind::BadParameters, "candidate index out of range");
  std::size_t p = 0;
  for (;; ++p) {
    const std::uint64_t block = sat_pow(q, dim - 1 - p);
    if (index < block) break;
    index -= block;
  }
  std::vector<Elem> lambda(dim, k.zero());
  lambda[p] = k.one();
  for (std::size_t v = dim; v-- > p + 1;) {
    lambda[v] = Elem{static_cast<std::uint32_t>(index % q)};
    index /= q;
  }
  return combine(basis, lambda);
}

std::optional<std::uint64_t> candidate_index(const std::vector<BiPoly>& basis, const BiPoly& f) {
  if (f.is_zero()) return std::nullopt;
  auto lambda = space_coordinates(basis, f);
  if (!lambda) return std::nullopt;
  const Field& k = f.field();
  const std::uint32_t q = k.size();
  const std::size_t dim = lambda->size();
  std::size_t p = 0;
  while (k.is_zero((*lambda)[p])) ++p;
  const Elem s = k.inv((*lambda)[p]);
  std::uint64_t index = 0;
  for (std::size_t v = 0; v < p; ++v) index += sat_pow(q, dim - 1 - v);
  std::uint64_t rest = 0;
  for (std::size_t v = p + 1; v < dim; ++v) rest = rest * q + k.mul((*lambda)[v], s).v;
  return index + rest;
}

namespace {

struct Partial {
  std::uint64_t examined = 0, irreducible = 0, reducible = 0, unknown = 0;
  std::uint64_t smooth = 0, singular_irreducible = 0, inconclusive = 0, rechecked = 0;
  std::vector<Exemplar> exemplars;
};

struct Shared {
  std::atomic<std::uint64_t> first_found{kSaturated};
  std::atomic<std::uint64_t> done{0};
  std::mutex progress_mutex;
  std::uint64_t total = 0;
};

void classify_range(const std::vector<BiPoly>& basis, std::uint64_t lo, std::uint64_t hi, const CensusOptions& opts,
                    Shared& shared, Partial& out) {
  auto& first_found = shared.first_found;
  const unsigned a = basis[0].a(), b = basis[0].b();
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    if (opts.stop_at_first && idx > first_found.load(std::memory_order_relaxed)) break;
    const BiPoly f = candidate_at(basis, idx);
    ++out.examined;
    if (opts.progress) {
      const std::uint64_t n = ++shared.done;
      if (n % 4096 == 0) {
        std::lock_guard lock(shared.progress_mutex);
        opts.progress(n, shared.total);
      }
    }
    if (idx % 100 == 0) {
      if (!is_filling(f)) throw Error(ErrorKind::NotFilling, "enumerated candidate is not filling");
      ++out.rechecked;
    }
    std::optional<Verdict> sv;
    if (opts.smooth && a > 0 && b > 0) {
      sv = certify_smooth(f, opts.irreducibility.seed).verdict;
      if (*sv == Verdict::Smooth) ++out.smooth;
      if (*sv == Verdict::Inconclusive) ++out.inconclusive;
    }
    Irreducibility status;
    try {
      status = is_abs_irreducible(f, opts.irreducibility).status;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Infeasible) throw;
      status = Irreducibility::Unknown;
    }
    switch (status) {
      case Irreducibility::Irreducible:
        ++out.irreducible;
        if (sv && *sv != Verdict::Smooth) ++out.singular_irreducible;
        if (out.exemplars.size() < opts.exemplar_limit) out.exemplars.push_back({idx, f, sv});
        if (opts.stop_at_first) {
          std::uint64_t cur = first_found.load();
          while (idx < cur && !first_found.compare_exchange_weak(cur, idx)) {
          }
          return;
        }
        break;
      case Irreducibility::Reducible:
        ++out.reducible;
        break;
      case Irreducibility::Unknown:
        ++out.unknown;
        break;
    }
  }
}

}  // namespace

CensusReport census(const Field& k, unsigned a, unsigned b, const CensusOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  CensusReport rep;
  rep.q = k.size();
  rep.a = a;
  rep.b = b;
  rep.basis = filling_space_basis(k, a, b);
  rep.space_dimension = rep.basis.size();
  const std::uint64_t total = candidate_count(rep.q, rep.space_dimension);
  if (total > opts.budget)
    throw Error(ErrorKind::Infeasible, "census of " + std::to_string(total) + " candidates exceeds the budget of " +
                                           std::to_string(opts.budget));
  const unsigned parts = std::max(1u, opts.jobs);
  rep.partitions = parts;
  std::vector<Partial> partial(parts);
  std::vector<std::exception_ptr> errors(parts);
  Shared shared;
  shared.total = total;
  auto work = [&](unsigned w) {
    try {
      const std::uint64_t lo = total * w / parts, hi = total * (w + 1) / parts;
      classify_range(rep.basis, lo, hi, opts, shared, partial[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (total > 0) {
    if (parts == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < parts; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::uint64_t examined = 0, smooth = 0, sing_irr = 0, inconclusive = 0;
  for (auto& p : partial) {
    examined += p.examined;
    rep.n_irreducible += p.irreducible;
    rep.n_reducible += p.reducible;
    rep.n_unknown += p.unknown;
    rep.filling_rechecked += p.rechecked;
    smooth += p.smooth;
    sing_irr += p.singular_irreducible;
    inconclusive += p.inconclusive;
    for (auto& e : p.exemplars) rep.exemplars.push_back(std::move(e));
  }
  std::sort(rep.exemplars.begin(), rep.exemplars.end(),
            [](const Exemplar& x, const Exemplar& y) { return x.index < y.index; });
  if (opts.stop_at_first && !rep.exemplars.empty()) rep.exemplars.resize(1);
  if (rep.exemplars.size() > opts.exemplar_limit) rep.exemplars.resize(opts.exemplar_limit);
  rep.candidates_scanned = examined;
  rep.complete = examined == total;
  if (opts.smooth) {
    rep.n_smooth = smooth;
    rep.n_singular_irreducible = sing_irr;
    rep.n_smooth_inconclusive = inconclusive;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::string_view to_string(CellStatus s) {
  switch (s) {
    case CellStatus::Yes: return "yes";
    case CellStatus::No: return "no";
    case CellStatus::Infeasible: return "infeasible";
  }
  return "?";
}

ScanTable min_bidegree_scan(const Field& k, unsigned a_max, unsigned b_max, const CensusOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  ScanTable t;
  t.q = k.size();
  t.a_max = a_max;
  t.b_max = b_max;
  CensusOptions cell_opts = opts;
  cell_opts.stop_at_first = true;
  cell_opts.smooth = false;
  cell_opts.exemplar_limit = 1;
  for (unsigned a = 0; a <= a_max; ++a) {
    for (unsigned b = 0; b <= b_max; ++b) {
      ScanCell cell;
      cell.a = a;
      cell.b = b;
      if (a <= t.q || b <= t.q) {
        cell.status = CellStatus::No;
        cell.reason = "degree";
      } else {
        try {
          const CensusReport r = census(k, a, b, cell_opts);
          cell.candidates = candidate_count(t.q, r.space_dimension);
          cell.examined = r.candidates_scanned;
          cell.reason = "census";
          if (r.n_irreducible > 0) {
            cell.status = CellStatus::Yes;
            cell.exemplar = r.exemplars.front().poly;
          } else if (r.n_unknown > 0) {
            cell.status = CellStatus::Infeasible;
            cell.reason = "budget";
          } else {
            cell.status = CellStatus::No;
          }
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::Infeasible) throw;
          cell.status = CellStatus::Infeasible;
          cell.reason = "budget";
        }
      }
      t.cells.push_back(std::move(cell));
    }
  }
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return t;
}

}  // namespace fillcurve

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fillcurve/field.hpp"
#include "fillcurve/unipoly.hpp"

namespace fillcurve::gf {

using Poly = UniPoly<Field>;

struct Factor {
  Poly poly;  // monic irreducible
  unsigned multiplicity = 0;
};

struct Factorization {
  Elem unit;  // leading coefficient of the input
  std::vector<Factor> factors;  // sorted by degree, then coefficients
};

/// Rabin's test.
bool is_irreducible(const Poly& f);

/// Monic squarefree parts s_i with f = lead * prod s_i^{m_i}.
std::vector<Factor> squarefree_decomposition(const Poly& f);

/// For a monic squarefree f: products of all irreducible factors of each degree.
std::vector<std::pair<Poly, unsigned>> distinct_degree(const Poly& f);

/// Splits a monic squarefree product of degree-d irreducibles (Cantor-Zassenhaus).
std::vector<Poly> equal_degree(const Poly& f, unsigned d, std::mt19937_64& rng);

/// Throws ZeroPolynomial for f = 0. Deterministic for a fixed seed.
Factorization factor(const Poly& f, std::uint64_t seed = 0);

/// Multiplies a factorization back out.
Poly expand(const Field& field, const Factorization& fac);

/// Zeros of f in `field`, which must equal or extend f's field. Sorted.
std::vector<Elem> roots(const Poly& f, const Field& field);

/// x^(q^k) mod m by repeated q-th powering.
Poly frobenius_power_x(const Poly& m, std::uint64_t q, unsigned k);

/// "t^2 + t + 1"; coefficients in the field's element syntax.
std::string format_poly(const Poly& f, char var = 't');

}  // namespace fillcurve::gf

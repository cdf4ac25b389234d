#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fillcurve::gf {

// A field element is its position in the field's enumeration order. For
// GF(Q^e) over a base of size Q the position is sum_i c_i * Q^i where c_i is
// the base-field position of the coefficient of t^i, so 0 and 1 are always
// the additive and multiplicative identities and the prime subfield occupies
// positions 0..p-1.
struct Elem {
  std::uint32_t v = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  unsigned degree = 1;      // over the base (over GF(p) when base is prime)
  unsigned abs_degree = 1;  // over GF(p)
  std::uint32_t size = 0;
  std::uint32_t base_size = 0;
  std::shared_ptr<const FieldData> base;  // null for prime fields
  std::vector<Elem> modulus;              // over base, monic, constant first
  bool tower = false;                     // base is itself an extension

  // prime fields
  std::vector<std::uint32_t> inv_table;

  // extension fields: discrete log tables for a primitive element
  std::vector<std::uint32_t> exp;  // length 2*(size-1)
  std::vector<std::uint32_t> log;  // length size, log[0] unused
  std::vector<std::int32_t> zech;  // odd characteristic: log(1 + g^k), -1 if zero
  std::uint32_t half_order = 0;    // log(-1) in odd characteristic
};

}  // namespace detail

// Largest extension field that gets log tables. Prime fields have no limit
// beyond 32-bit arithmetic.
inline constexpr std::uint32_t kMaxTableFieldSize = 1u << 16;

bool is_prime(std::uint64_t n);

// Returns (p, e) when n = p^e with p prime, e >= 1.
std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t n);

/// Finite field GF(p^e), or GF(q^m) built over a GF(q), with table-driven
/// arithmetic on enumeration indices. Handles are cheap to copy and the
/// underlying tables are immutable, so a Field may be shared across threads.
class Field {
 public:
  using value_type = Elem;

  Field() = default;

  /// Canonical field: modulus is the lexicographically smallest monic
  /// irreducible of degree e over `base` (GF(p) when absent). Results are
  /// cached, so equal arguments give the same handle.
  static Field make(std::uint32_t p, unsigned e, const std::optional<Field>& base = std::nullopt);
  static Field prime(std::uint32_t p) { return make(p, 1); }
  /// Canonical GF(q) for a prime power q.
  static Field of_order(std::uint64_t q);
  /// Extension of `base` (GF(p) when absent) by an explicit monic irreducible.
  static Field with_modulus(std::uint32_t p, std::vector<Elem> modulus,
                            const std::optional<Field>& base = std::nullopt);
  /// "q=9" or "p=3,e=2,mod=[1,0,1]".
  static Field parse(std::string_view text);

  bool valid() const { return d_ != nullptr; }
  std::uint32_t characteristic() const { return d_->p; }
  unsigned degree() const { return d_->degree; }
  unsigned absolute_degree() const { return d_->abs_degree; }
  std::uint32_t size() const { return d_->size; }
  bool is_prime_field() const { return d_->base == nullptr; }
  bool is_tower() const { return d_->tower; }
  /// Field the modulus lives over; GF(p) for non-tower extensions.
  Field base() const;
  Field prime_field() const { return Field::prime(d_->p); }
  const std::vector<Elem>& modulus() const { return d_->modulus; }

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }
  bool is_zero(Elem a) const { return a.v == 0; }
  Elem from_int(std::int64_t n) const;
  Elem at(std::uint32_t index) const;

  Elem add(Elem a, Elem b) const {
    const auto& d = *d_;
    if (!d.base) {
      const std::uint32_t s = a.v + b.v;
      return {s >= d.p ? s - d.p : s};
    }
    if (d.p == 2) return {a.v ^ b.v};
    if (a.v == 0) return b;
    if (b.v == 0) return a;
    const std::uint32_t la = d.log[a.v];
    const std::uint32_t lb = d.log[b.v];
    const std::uint32_t n1 = d.size - 1;
    const std::uint32_t diff = lb >= la ? lb - la : lb + n1 - la;
    const std::int32_t z = d.zech[diff];
    if (z < 0) return {0};
    return {d.exp[la + static_cast<std::uint32_t>(z)]};
  }

  Elem neg(Elem a) const {
    const auto& d = *d_;
    if (a.v == 0) return a;
    if (!d.base) return {d.p - a.v};
    if (d.p == 2) return a;
    return {d.exp[d.log[a.v] + d.half_order]};
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    const auto& d = *d_;
    if (!d.base) return {static_cast<std::uint32_t>(std::uint64_t{a.v} * b.v % d.p)};
    if (a.v == 0 || b.v == 0) return {0};
    return {d.exp[d.log[a.v] + d.log[b.v]]};
  }

  /// Throws DivisionByZero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// Square-and-multiply.
  Elem pow(Elem a, std::uint64_t e) const;
  /// x -> x^q; fixes exactly the subfield of order q.
  Elem frobenius(Elem a, std::uint64_t q) const { return pow(a, q); }

  /// Coefficients over base(), constant term first, length degree().
  std::vector<Elem> coeffs(Elem a) const;
  Elem from_coeffs(std::span<const Elem> c) const;
  /// All elements in enumeration order.
  std::vector<Elem> elements() const;

  /// Integers for prime fields, "[c0,c1,...]" otherwise.
  std::string format(Elem a) const;
  /// Inverse of format; a bare integer n denotes n*1.
  Elem parse_element(std::string_view text) const;
  /// e.g. "GF(9) = GF(3)[t]/(t^2 + 1)".
  std::string describe() const;
  /// Text form accepted by parse().
  std::string spec_string() const;

  friend bool operator==(const Field& x, const Field& y);

  const detail::FieldData* data() const { return d_.get(); }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> d_;
};

/// Throws FieldMismatch unless the two fields are equal.
void require_same(const Field& x, const Field& y, std::string_view where);

}  // namespace fillcurve::gf

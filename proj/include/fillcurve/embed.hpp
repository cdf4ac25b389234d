#pragma once

#include <optional>
#include <vector>

#include "fillcurve/factor.hpp"
#include "fillcurve/field.hpp"

namespace fillcurve::gf {

/// Ring embedding GF(s) -> GF(s^m). When `sup` is built directly over `sub`
/// the embedding is the inclusion as constants; otherwise the generator of
/// `sub` goes to the enumeration-smallest root of its modulus in `sup`.
class Embedding {
 public:
  Embedding() = default;
  /// Throws NotASubfield.
  Embedding(Field sub, Field sup);

  const Field& sub() const { return sub_; }
  const Field& sup() const { return sup_; }
  Elem operator()(Elem x) const { return Elem{table_[x.v]}; }
  /// Element of `sub` mapping to y, if any.
  std::optional<Elem> preimage(Elem y) const;
  Poly map(const Poly& f) const;

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;
  void build_inverse();

  Field sub_, sup_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
};

inline Elem embed(const Field& sub, const Field& sup, Elem x) { return Embedding(sub, sup)(x); }

/// True when sub is (isomorphic to) a subfield of sup.
bool is_subfield(const Field& sub, const Field& sup);

}  // namespace fillcurve::gf

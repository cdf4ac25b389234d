#include "fillcurve/embed.hpp"

#include <numeric>

namespace fillcurve::gf {

bool is_subfield(const Field& sub, const Field& sup) {
  return sub.characteristic() == sup.characteristic() && sup.absolute_degree() % sub.absolute_degree() == 0;
}

Embedding::Embedding(Field sub, Field sup) : sub_(std::move(sub)), sup_(std::move(sup)) {
  if (!is_subfield(sub_, sup_))
    throw Error(ErrorKind::NotASubfield, sub_.describe() + " is not a subfield of " + sup_.describe());
  table_.resize(sub_.size());
  // Prime subfields and direct towers keep their enumeration indices.
  if (sub_ == sup_ || sub_.is_prime_field() || (sup_.is_tower() && sup_.base() == sub_)) {
    std::iota(table_.begin(), table_.end(), 0u);
    build_inverse();
    return;
  }
  const Embedding base_emb(sub_.base(), sup_);
  std::vector<Elem> mapped;
  for (Elem c : sub_.modulus()) mapped.push_back(base_emb(c));
  const Poly m(sup_, mapped);
  std::optional<Elem> root;
  for (Elem r : sup_.elements()) {
    if (sup_.is_zero(m(r))) {
      root = r;
      break;
    }
  }
  if (!root) throw Error(ErrorKind::NotASubfield, "modulus of " + sub_.describe() + " has no root in " + sup_.describe());
  for (std::uint32_t x = 0; x < sub_.size(); ++x) {
    const auto c = sub_.coeffs(Elem{x});
    Elem acc = sup_.zero();
    for (std::size_t i = c.size(); i-- > 0;) acc = sup_.add(sup_.mul(acc, *root), base_emb(c[i]));
    table_[x] = acc.v;
  }
  build_inverse();
}

void Embedding::build_inverse() {
  inverse_.assign(sup_.size(), kNone);
  for (std::uint32_t x = 0; x < table_.size(); ++x) inverse_[table_[x]] = x;
}

std::optional<Elem> Embedding::preimage(Elem y) const {
  const std::uint32_t x = inverse_[y.v];
  if (x == kNone) return std::nullopt;
  return Elem{x};
}

Poly Embedding::map(const Poly& f) const {
  std::vector<Elem> c;
  c.reserve(f.coeffs().size());
  for (Elem x : f.coeffs()) c.push_back((*this)(x));
  return Poly(sup_, std::move(c));
}

}  // namespace fillcurve::gf

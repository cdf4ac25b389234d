#include "fillcurve/field.hpp"

#include <charconv>
#include <map>
#include <mutex>
#include <sstream>

#include "fillcurve/error.hpp"
#include "fillcurve/factor.hpp"

namespace fillcurve::gf {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

std::string trim(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') out.push_back(c);
  return out;
}

std::uint64_t parse_nat(std::string_view s, ErrorKind kind) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(kind, "expected a non-negative integer, got '" + std::string(s) + "'");
  return v;
}

std::vector<std::uint64_t> parse_list(std::string_view s, ErrorKind kind) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw Error(kind, "expected a bracketed list, got '" + std::string(s) + "'");
  std::vector<std::uint64_t> out;
  std::string_view body = s.substr(1, s.size() - 2);
  while (!body.empty()) {
    auto comma = body.find(',');
    out.push_back(parse_nat(body.substr(0, comma), kind));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

// Coefficient-vector arithmetic used only while building tables.
struct VecArith {
  Field base;
  std::vector<Elem> modulus;  // monic
  std::uint32_t q;            // base size
  unsigned e;

  std::uint32_t index(const std::vector<Elem>& c) const {
    std::uint32_t idx = 0;
    for (std::size_t i = c.size(); i-- > 0;) idx = idx * q + c[i].v;
    return idx;
  }

  std::vector<Elem> decode(std::uint32_t idx) const {
    std::vector<Elem> c(e);
    for (unsigned i = 0; i < e; ++i) {
      c[i] = Elem{idx % q};
      idx /= q;
    }
    return c;
  }

  std::vector<Elem> mul(const std::vector<Elem>& a, const std::vector<Elem>& b) const {
    std::vector<Elem> r(2 * e - 1, base.zero());
    for (unsigned i = 0; i < e; ++i) {
      if (a[i].v == 0) continue;
      for (unsigned j = 0; j < e; ++j) r[i + j] = base.add(r[i + j], base.mul(a[i], b[j]));
    }
    for (std::size_t k = r.size(); k-- > e;) {
      if (r[k].v == 0) continue;
      const Elem c = r[k];
      for (unsigned j = 0; j < e; ++j) r[k - e + j] = base.sub(r[k - e + j], base.mul(c, modulus[j]));
      r[k] = base.zero();
    }
    r.resize(e);
    return r;
  }
};

std::shared_ptr<detail::FieldData> build_prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw Error(ErrorKind::BadParameters, "characteristic must be below 2^31");
  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->size = p;
  d->base_size = p;
  d->modulus = {Elem{0}, Elem{1}};
  if (p <= kMaxTableFieldSize) {
    d->inv_table.assign(p, 0);
    for (std::uint32_t a = 1; a < p; ++a) d->inv_table[a] = static_cast<std::uint32_t>(powmod64(a, p - 2, p));
  }
  return d;
}

std::shared_ptr<detail::FieldData> build_extension(const Field& base, std::vector<Elem> modulus) {
  const unsigned e = static_cast<unsigned>(modulus.size() - 1);
  std::uint64_t size = 1;
  for (unsigned i = 0; i < e; ++i) {
    size *= base.size();
    if (size > kMaxTableFieldSize)
      throw Error(ErrorKind::Infeasible, "extension field larger than " + std::to_string(kMaxTableFieldSize) +
                                             " elements is not table-representable");
  }
  auto d = std::make_shared<detail::FieldData>();
  d->p = base.characteristic();
  d->degree = e;
  d->abs_degree = e * base.absolute_degree();
  d->size = static_cast<std::uint32_t>(size);
  d->base_size = base.size();
  d->base = std::shared_ptr<const detail::FieldData>(base.data(), [keep = base](const detail::FieldData*) {});
  d->modulus = modulus;
  d->tower = !base.is_prime_field();

  VecArith va{base, modulus, base.size(), e};
  const std::uint32_t n1 = d->size - 1;
  d->exp.assign(2 * std::size_t{n1}, 0);
  d->log.assign(d->size, 0);
  std::vector<Elem> one(e, base.zero());
  one[0] = base.one();
  bool found = false;
  for (std::uint32_t cand = 2; cand < d->size && !found; ++cand) {
    const auto g = va.decode(cand);
    auto cur = one;
    std::uint32_t k = 0;
    bool cycled_early = false;
    for (; k < n1; ++k) {
      const std::uint32_t idx = va.index(cur);
      if (k > 0 && idx == 1) {
        cycled_early = true;
        break;
      }
      d->exp[k] = idx;
      cur = va.mul(cur, g);
    }
    if (!cycled_early && va.index(cur) == 1) found = true;
  }
  if (!found) throw std::logic_error("no primitive element found; modulus not irreducible");
  for (std::uint32_t k = 0; k < n1; ++k) {
    d->exp[k + n1] = d->exp[k];
    d->log[d->exp[k]] = k;
  }
  if (d->p != 2) {
    d->half_order = n1 / 2;
    d->zech.assign(n1, -1);
    for (std::uint32_t k = 0; k < n1; ++k) {
      auto c = va.decode(d->exp[k]);
      c[0] = base.add(c[0], base.one());
      const std::uint32_t idx = va.index(c);
      d->zech[k] = idx == 0 ? -1 : static_cast<std::int32_t>(d->log[idx]);
    }
  }
  return d;
}

std::string format_univariate(const Field& k, const std::vector<Elem>& c, char var) {
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].v == 0) continue;
    if (!out.empty()) out += " + ";
    const bool unit = c[i] == k.one();
    if (i == 0) {
      out += k.format(c[i]);
      continue;
    }
    if (!unit) out += k.format(c[i]) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::mutex g_cache_mutex;
std::map<std::string, Field>& cache() {
  static std::map<std::string, Field> c;
  return c;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % sp == 0) return n == sp;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for all 64-bit n with these witnesses.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (n != 1) return std::nullopt;
    return std::pair{static_cast<std::uint32_t>(p), e};
  }
  if (n > 0xffffffffull) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(n), 1u};
}

Field Field::make(std::uint32_t p, unsigned e, const std::optional<Field>& base) {
  if (e == 0) throw Error(ErrorKind::BadParameters, "extension degree must be at least 1");
  if (base && base->characteristic() != p)
    throw Error(ErrorKind::BadParameters, "base field characteristic differs from p");
  if (base && base->is_tower()) throw Error(ErrorKind::BadParameters, "tower height is limited to 2");
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");

  const std::string key = std::to_string(p) + ":" + std::to_string(e) + "/" + (base ? base->spec_string() : "");
  {
    std::lock_guard lock(g_cache_mutex);
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
  }

  Field result;
  if (!base && e == 1) {
    result = Field(build_prime(p));
  } else if (base && e == 1) {
    result = *base;
  } else {
    const Field k = base ? *base : Field::prime(p);
    const std::uint32_t q = k.size();
    std::uint64_t total = 1;
    for (unsigned i = 0; i < e; ++i) {
      total *= q;
      if (total > kMaxTableFieldSize)
        throw Error(ErrorKind::Infeasible, "extension field larger than " + std::to_string(kMaxTableFieldSize) +
                                               " elements is not table-representable");
    }
    // Lexicographic scan with the constant coefficient most significant.
    std::vector<std::uint32_t> digits(e, 0);
    std::optional<std::vector<Elem>> modulus;
    while (!modulus) {
      std::vector<Elem> c(e + 1);
      for (unsigned i = 0; i < e; ++i) c[i] = Elem{digits[i]};
      c[e] = k.one();
      if (is_irreducible(UniPoly<Field>(k, c))) {
        modulus = std::move(c);
        break;
      }
      unsigned pos = e;
      while (pos-- > 0) {
        if (++digits[pos] < q) break;
        digits[pos] = 0;
        if (pos == 0) throw std::logic_error("no irreducible polynomial found");
      }
    }
    result = Field(build_extension(k, std::move(*modulus)));
  }

  std::lock_guard lock(g_cache_mutex);
  return cache().emplace(key, result).first->second;
}

Field Field::of_order(std::uint64_t q) {
  auto pp = prime_power(q);
  if (!pp) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  return make(pp->first, pp->second);
}

Field Field::with_modulus(std::uint32_t p, std::vector<Elem> modulus, const std::optional<Field>& base) {
  if (base && base->characteristic() != p)
    throw Error(ErrorKind::BadParameters, "base field characteristic differs from p");
  if (base && base->is_tower()) throw Error(ErrorKind::BadParameters, "tower height is limited to 2");
  const Field k = base ? *base : Field::prime(p);
  while (!modulus.empty() && modulus.back().v == 0) modulus.pop_back();
  if (modulus.size() < 2) throw Error(ErrorKind::BadParameters, "modulus must have degree at least 1");
  for (Elem c : modulus)
    if (c.v >= k.size()) throw Error(ErrorKind::BadCoefficient, "modulus coefficient out of range");
  if (modulus.back() != k.one()) throw Error(ErrorKind::BadParameters, "modulus must be monic");
  if (modulus.size() == 2) return k;
  if (!is_irreducible(UniPoly<Field>(k, modulus)))
    throw Error(ErrorKind::BadParameters, "modulus is not irreducible over the base field");
  return Field(build_extension(k, std::move(modulus)));
}

Field Field::parse(std::string_view text) {
  const std::string s = trim(text);
  std::map<std::string, std::string> kv;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto eq = s.find('=', pos);
    if (eq == std::string::npos) throw Error(ErrorKind::BadParameters, "malformed field spec '" + s + "'");
    std::string key = s.substr(pos, eq - pos);
    std::size_t end;
    if (eq + 1 < s.size() && s[eq + 1] == '[') {
      end = s.find(']', eq);
      if (end == std::string::npos) throw Error(ErrorKind::BadParameters, "unterminated list in '" + s + "'");
      ++end;
    } else {
      end = s.find(',', eq);
      if (end == std::string::npos) end = s.size();
    }
    kv[key] = s.substr(eq + 1, end - eq - 1);
    pos = end < s.size() && s[end] == ',' ? end + 1 : end;
  }
  auto nat = [&](const std::string& k) { return parse_nat(kv.at(k), ErrorKind::BadParameters); };
  if (kv.count("q")) {
    const Field base = of_order(nat("q"));
    if (!kv.count("m")) return base;
    const auto m = static_cast<unsigned>(nat("m"));
    if (!kv.count("mod")) return make(base.characteristic(), m, base);
    std::vector<Elem> mod;
    for (auto v : parse_list(kv.at("mod"), ErrorKind::BadParameters)) mod.push_back(Elem{static_cast<std::uint32_t>(v)});
    if (mod.size() != m + 1) throw Error(ErrorKind::BadParameters, "modulus length does not match m");
    return with_modulus(base.characteristic(), std::move(mod), base);
  }
  if (!kv.count("p")) throw Error(ErrorKind::BadParameters, "field spec needs q= or p=");
  const auto p = static_cast<std::uint32_t>(nat("p"));
  const unsigned e = kv.count("e") ? static_cast<unsigned>(nat("e")) : 1;
  if (!kv.count("mod")) return make(p, e);
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  std::vector<Elem> mod;
  for (auto v : parse_list(kv.at("mod"), ErrorKind::BadParameters)) mod.push_back(Elem{static_cast<std::uint32_t>(v)});
  if (mod.size() != e + 1) throw Error(ErrorKind::BadParameters, "modulus length does not match e");
  if (e == 1) return make(p, 1);
  return with_modulus(p, std::move(mod));
}

Field Field::base() const {
  if (!d_->base) throw Error(ErrorKind::BadParameters, "prime field has no base");
  auto keep = d_;
  return Field(std::shared_ptr<const detail::FieldData>(keep, keep->base.get()));
}

Elem Field::from_int(std::int64_t n) const {
  const std::int64_t p = d_->p;
  std::int64_t r = n % p;
  if (r < 0) r += p;
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::at(std::uint32_t index) const {
  if (index >= d_->size) throw Error(ErrorKind::BadCoefficient, "element index out of range");
  return Elem{index};
}

Elem Field::inv(Elem a) const {
  const auto& d = *d_;
  if (a.v == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (!d.base) {
    if (!d.inv_table.empty()) return Elem{d.inv_table[a.v]};
    return Elem{static_cast<std::uint32_t>(powmod64(a.v, d.p - 2, d.p))};
  }
  const std::uint32_t n1 = d.size - 1;
  return Elem{d.exp[n1 - d.log[a.v]]};
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

std::vector<Elem> Field::coeffs(Elem a) const {
  if (is_prime_field()) return {a};
  std::vector<Elem> c(d_->degree);
  std::uint32_t idx = a.v;
  for (unsigned i = 0; i < d_->degree; ++i) {
    c[i] = Elem{idx % d_->base_size};
    idx /= d_->base_size;
  }
  return c;
}

Elem Field::from_coeffs(std::span<const Elem> c) const {
  if (c.size() > d_->degree) throw Error(ErrorKind::BadCoefficient, "too many coefficients for field element");
  std::uint32_t idx = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].v >= d_->base_size) throw Error(ErrorKind::BadCoefficient, "coefficient out of range");
    idx = idx * d_->base_size + c[i].v;
  }
  return Elem{idx};
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(d_->size);
  for (std::uint32_t i = 0; i < d_->size; ++i) out[i] = Elem{i};
  return out;
}

std::string Field::format(Elem a) const {
  if (is_prime_field()) return std::to_string(a.v);
  std::string out = "[";
  const auto c = coeffs(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c[i].v);
  }
  return out + "]";
}

Elem Field::parse_element(std::string_view text) const {
  const std::string s = trim(text);
  if (!s.empty() && s.front() == '[') {
    const auto list = parse_list(s, ErrorKind::BadCoefficient);
    if (is_prime_field()) {
      if (list.size() != 1 || list[0] >= d_->p) throw Error(ErrorKind::BadCoefficient, "bad prime field element '" + s + "'");
      return Elem{static_cast<std::uint32_t>(list[0])};
    }
    std::vector<Elem> c;
    for (auto v : list) {
      if (v >= d_->base_size) throw Error(ErrorKind::BadCoefficient, "coefficient out of range in '" + s + "'");
      c.push_back(Elem{static_cast<std::uint32_t>(v)});
    }
    return from_coeffs(c);
  }
  const auto n = parse_nat(s, ErrorKind::BadCoefficient);
  return from_int(static_cast<std::int64_t>(n % d_->p));
}

std::string Field::describe() const {
  const std::string name = "GF(" + std::to_string(size()) + ")";
  if (is_prime_field()) return name;
  const Field k = base();
  return name + " = GF(" + std::to_string(k.size()) + ")[" + (is_tower() ? "u" : "t") + "]/(" +
         format_univariate(k, modulus(), is_tower() ? 'u' : 't') + ")";
}

std::string Field::spec_string() const {
  auto list = [](const std::vector<Elem>& c) {
    std::string out = "[";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i].v);
    return out + "]";
  };
  if (is_prime_field()) return "p=" + std::to_string(d_->p);
  if (!is_tower())
    return "p=" + std::to_string(d_->p) + ",e=" + std::to_string(d_->degree) + ",mod=" + list(modulus());
  return "q=" + std::to_string(d_->base_size) + ",m=" + std::to_string(d_->degree) + ",mod=" + list(modulus());
}

bool operator==(const Field& x, const Field& y) {
  if (x.d_ == y.d_) return true;
  if (!x.d_ || !y.d_) return false;
  if (x.d_->p != y.d_->p || x.d_->degree != y.d_->degree || x.d_->modulus != y.d_->modulus) return false;
  if (!x.d_->base || !y.d_->base) return !x.d_->base && !y.d_->base;
  return x.base() == y.base();
}

void require_same(const Field& x, const Field& y, std::string_view where) {
  if (!(x == y)) throw Error(ErrorKind::FieldMismatch, std::string(where) + ": operands live in different fields");
}

}  // namespace fillcurve::gf

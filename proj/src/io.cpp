#include "fillcurve/io.hpp"

#include "fillcurve/error.hpp"
#include "fillcurve/factor.hpp"

namespace fillcurve::io {

using gf::Elem;
using gf::Field;

json to_json(const Field& k) {
  json j;
  j["q"] = k.size();
  j["p"] = k.characteristic();
  j["degree"] = k.degree();
  json mod = json::array();
  if (!k.is_prime_field())
    for (Elem c : k.modulus()) mod.push_back(c.v);
  j["modulus"] = mod;
  j["spec"] = k.spec_string();
  return j;
}

json element_to_json(const Field& k, Elem x) {
  if (k.is_prime_field()) return x.v;
  json a = json::array();
  for (Elem c : k.coeffs(x)) a.push_back(c.v);
  return a;
}

Elem element_from_json(const Field& k, const json& j) {
  auto natural = [](const json& x) { return x.is_number_integer() && x.get<std::int64_t>() >= 0; };
  if (natural(j)) return k.parse_element(std::to_string(j.get<std::uint64_t>()));
  if (!j.is_array()) throw Error(ErrorKind::BadCoefficient, "element must be an integer or a coefficient list");
  std::string text = "[";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!natural(j[i])) throw Error(ErrorKind::BadCoefficient, "coefficients must be natural numbers");
    text += (i ? "," : "") + std::to_string(j[i].get<std::uint64_t>());
  }
  return k.parse_element(text + "]");
}

json to_json(const BiPoly& f) {
  const Field& k = f.field();
  json rows = json::array();
  for (unsigned i = 0; i <= f.a(); ++i) {
    json row = json::array();
    for (unsigned j = 0; j <= f.b(); ++j) row.push_back(element_to_json(k, f.coeff(i, j)));
    rows.push_back(std::move(row));
  }
  json out;
  out["bidegree"] = {f.a(), f.b()};
  out["coeffs"] = std::move(rows);
  out["field"] = to_json(k);
  return out;
}

BiPoly bipoly_from_json(const json& j, const std::optional<Field>& k) {
  try {
    const Field field = k ? *k : Field::parse(j.at("field").at("spec").get<std::string>());
    const unsigned a = j.at("bidegree").at(0).get<unsigned>(), b = j.at("bidegree").at(1).get<unsigned>();
    const json& rows = j.at("coeffs");
    if (rows.size() != a + 1) throw Error(ErrorKind::BadShape, "coefficient rows do not match the bi-degree");
    BiPoly f(field, a, b);
    for (unsigned i = 0; i <= a; ++i) {
      if (rows[i].size() != b + 1) throw Error(ErrorKind::BadShape, "coefficient columns do not match the bi-degree");
      for (unsigned c = 0; c <= b; ++c) f.set_coeff(i, c, element_from_json(field, rows[i][c]));
    }
    return f;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::BadShape, std::string("malformed polynomial JSON: ") + e.what());
  }
}

json poly_entry(const BiPoly& f) {
  json j;
  j["text"] = f.to_string();
  j["poly"] = to_json(f);
  return j;
}

json to_json(const Witness& w) {
  const Field& k = w.g.field();
  json j;
  j["chart"] = std::string(to_string(w.chart));
  j["swapped"] = w.swapped;
  json m = json::array();
  for (Elem c : w.m.coeffs()) m.push_back(element_to_json(k, c));
  j["m"] = {{"text", gf::format_poly(w.m, 'x')}, {"coeffs", m}};
  json rows = json::array();
  for (unsigned i = 0; i <= w.g.bound_x(); ++i) {
    json row = json::array();
    for (unsigned c = 0; c <= w.g.bound_y(); ++c) row.push_back(element_to_json(k, w.g.coeff(i, c)));
    rows.push_back(std::move(row));
  }
  j["g"] = {{"text", w.g.to_string()}, {"coeffs", rows}};
  return j;
}

json to_json(const SmoothCertificate& c) {
  json j;
  j["verdict"] = std::string(to_string(c.verdict));
  j["witness"] = c.witness ? to_json(*c.witness) : json(nullptr);
  json trace = json::array();
  for (const auto& s : c.trace) {
    trace.push_back({{"chart", std::string(to_string(s.chart))},
                     {"swapped", s.swapped},
                     {"method", s.method},
                     {"first", s.first},
                     {"second", s.second},
                     {"degree", s.degree},
                     {"factors", s.factors}});
  }
  j["trace"] = std::move(trace);
  return j;
}

json to_json(const IrreducibilityResult& r) {
  json j;
  j["status"] = std::string(to_string(r.status));
  j["method"] = r.method;
  j["factor"] = r.factor ? poly_entry(*r.factor) : json(nullptr);
  return j;
}

json to_json(const Decomposition& d, const BiPoly& original) {
  json j;
  j["f"] = poly_entry(d.f);
  j["g"] = poly_entry(d.g);
  j["verified"] = d.recombine() == original;
  return j;
}

json to_json(const FamilyParams& p, const Field& k) {
  json j;
  j["q"] = p.q;
  j["case"] = std::string(to_string(p.kind));
  j["delta"] = p.delta ? element_to_json(k, *p.delta) : json(nullptr);
  j["gamma"] = p.gamma ? element_to_json(k, *p.gamma) : json(nullptr);
  return j;
}

std::string decimal_quotient(std::uint64_t num, std::uint64_t den, unsigned digits) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  std::string s = std::to_string(num / den);
  std::uint64_t rem = num % den;
  if (digits == 0) return s;
  s += '.';
  for (unsigned i = 0; i < digits; ++i) {
    // rem < den <= 2^64 / 10 for every bound the CLI can reach; use 128 bits
    // anyway so that the expansion never wraps.
    const unsigned __int128 t = static_cast<unsigned __int128>(rem) * 10;
    s += static_cast<char>('0' + static_cast<int>(t / den));
    rem = static_cast<std::uint64_t>(t % den);
  }
  return s;
}

json to_json(const BoundValue& v) {
  json j;
  j["numerator"] = v.numerator;
  j["denominator"] = v.denominator;
  j["quotient"] = decimal_quotient(v.numerator, v.denominator);
  j["floor"] = v.value;
  return j;
}

json to_json(const BoundReport& r) {
  json j;
  j["q"] = r.q;
  j["r"] = r.r;
  j["d"] = r.d;
  j["bound"] = to_json(r.bound);
  j["observed"] = r.observed ? json(*r.observed) : json(nullptr);
  j["attained"] = r.attained ? json(*r.attained) : json(nullptr);
  j["hypotheses_met"] = r.hypotheses_met;
  j["hypotheses_note"] = r.hypotheses_note;
  return j;
}

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json to_json(const CensusReport& r, bool timing) {
  json j;
  j["q"] = r.q;
  j["bidegree"] = {r.a, r.b};
  j["space_dimension"] = r.space_dimension;
  j["candidates_scanned"] = r.candidates_scanned;
  j["complete"] = r.complete;
  j["n_irreducible"] = r.n_irreducible;
  j["n_reducible"] = r.n_reducible;
  j["n_unknown"] = r.n_unknown;
  j["n_smooth"] = opt(r.n_smooth);
  j["n_singular_irreducible"] = opt(r.n_singular_irreducible);
  j["n_smooth_inconclusive"] = opt(r.n_smooth_inconclusive);
  json ex = json::array();
  for (const auto& e : r.exemplars) {
    json x = poly_entry(e.poly);
    x["index"] = e.index;
    x["smooth"] = e.smooth ? json(std::string(to_string(*e.smooth))) : json(nullptr);
    ex.push_back(std::move(x));
  }
  j["exemplars"] = std::move(ex);
  j["filling_rechecked"] = r.filling_rechecked;
  j["partitions"] = r.partitions;
  if (timing) j["seconds"] = r.seconds;
  json basis = json::array();
  for (const auto& v : r.basis) basis.push_back(poly_entry(v));
  j["basis"] = std::move(basis);
  return j;
}

json to_json(const ScanTable& t, bool timing) {
  json j;
  j["q"] = t.q;
  j["max"] = {t.a_max, t.b_max};
  json cells = json::array();
  for (const auto& c : t.cells) {
    cells.push_back({{"bidegree", {c.a, c.b}},
                     {"status", std::string(to_string(c.status))},
                     {"reason", c.reason},
                     {"candidates", c.candidates},
                     {"examined", c.examined},
                     {"exemplar", c.exemplar ? poly_entry(*c.exemplar) : json(nullptr)}});
  }
  j["cells"] = std::move(cells);
  if (timing) j["seconds"] = t.seconds;
  return j;
}

}  // namespace fillcurve::io

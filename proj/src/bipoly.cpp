#include "fillcurve/bipoly.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <tuple>

#include "fillcurve/error.hpp"

namespace fillcurve {

using gf::Elem;
using gf::Field;

ProjPoint ProjPoint::normalized(const Field& k, Elem u0, Elem u1) {
  if (!k.is_zero(u0)) return {k.one(), k.div(u1, u0)};
  if (!k.is_zero(u1)) return {k.zero(), k.one()};
  throw Error(ErrorKind::BadParameters, "(0:0) is not a point of P^1");
}

std::string format_point(const Field& k, const PointPair& p) {
  return "(" + k.format(p.first.u0) + ":" + k.format(p.first.u1) + ")x(" + k.format(p.second.u0) + ":" +
         k.format(p.second.u1) + ")";
}

std::string_view to_string(Var v) {
  switch (v) {
    case Var::X0: return "X0";
    case Var::X1: return "X1";
    case Var::Y0: return "Y0";
    case Var::Y1: return "Y1";
  }
  return "?";
}

std::string_view to_string(Chart c) {
  switch (c) {
    case Chart::X0Y0: return "X0=1,Y0=1";
    case Chart::X0Y1: return "X0=1,Y1=1";
    case Chart::X1Y0: return "X1=1,Y0=1";
    case Chart::X1Y1: return "X1=1,Y1=1";
  }
  return "?";
}

BiPoly::BiPoly(Field field, unsigned a, unsigned b)
    : field_(std::move(field)), a_(a), b_(b), c_(std::size_t{a + 1} * (b + 1), Elem{0}) {}

BiPoly BiPoly::monomial(const Field& field, unsigned x0, unsigned x1, unsigned y0, unsigned y1, Elem c) {
  BiPoly f(field, x0 + x1, y0 + y1);
  f.set_coeff(x1, y1, c);
  return f;
}

BiPoly BiPoly::x_form(const Field& field, std::span<const Elem> coeffs) {
  if (coeffs.empty()) throw Error(ErrorKind::BadParameters, "empty binary form");
  BiPoly f(field, static_cast<unsigned>(coeffs.size() - 1), 0);
  for (unsigned i = 0; i < coeffs.size(); ++i) f.set_coeff(i, 0, coeffs[i]);
  return f;
}

BiPoly BiPoly::y_form(const Field& field, std::span<const Elem> coeffs) {
  return x_form(field, coeffs).transposed();
}

bool BiPoly::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Elem c) { return c.v == 0; });
}

std::size_t BiPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](Elem c) { return c.v != 0; }));
}

Elem BiPoly::eval(Elem x0, Elem x1, Elem y0, Elem y1) const {
  const Field& k = field_;
  // Horner in Y1/Y0 per row, then in X1/X0 across rows.
  std::vector<Elem> y0p(b_ + 1), x0p(a_ + 1);
  y0p[0] = k.one();
  for (unsigned j = 1; j <= b_; ++j) y0p[j] = k.mul(y0p[j - 1], y0);
  x0p[0] = k.one();
  for (unsigned i = 1; i <= a_; ++i) x0p[i] = k.mul(x0p[i - 1], x0);
  Elem acc = k.zero();
  Elem x1p = k.one();
  for (unsigned i = 0; i <= a_; ++i) {
    Elem row = k.zero();
    Elem y1p = k.one();
    for (unsigned j = 0; j <= b_; ++j) {
      const Elem c = coeff(i, j);
      if (c.v) row = k.add(row, k.mul(c, k.mul(y0p[b_ - j], y1p)));
      y1p = k.mul(y1p, y1);
    }
    if (row.v) acc = k.add(acc, k.mul(row, k.mul(x0p[a_ - i], x1p)));
    x1p = k.mul(x1p, x1);
  }
  return acc;
}

BiPoly BiPoly::partial(Var v) const {
  const Field& k = field_;
  const bool in_x = v == Var::X0 || v == Var::X1;
  const unsigned d = in_x ? a_ : b_;
  if (d == 0) return BiPoly(k, a_, b_);
  BiPoly r(k, in_x ? a_ - 1 : a_, in_x ? b_ : b_ - 1);
  for (unsigned i = 0; i <= a_; ++i) {
    for (unsigned j = 0; j <= b_; ++j) {
      const Elem c = coeff(i, j);
      if (!c.v) continue;
      switch (v) {
        case Var::X0:
          if (i < a_) r.set_coeff(i, j, k.mul(k.from_int(a_ - i), c));
          break;
        case Var::X1:
          if (i > 0) r.set_coeff(i - 1, j, k.mul(k.from_int(i), c));
          break;
        case Var::Y0:
          if (j < b_) r.set_coeff(i, j, k.mul(k.from_int(b_ - j), c));
          break;
        case Var::Y1:
          if (j > 0) r.set_coeff(i, j - 1, k.mul(k.from_int(j), c));
          break;
      }
    }
  }
  return r;
}

BiPoly BiPoly::transposed() const {
  BiPoly r(field_, b_, a_);
  for (unsigned i = 0; i <= a_; ++i)
    for (unsigned j = 0; j <= b_; ++j) r.set_coeff(j, i, coeff(i, j));
  return r;
}

BiPoly BiPoly::mapped(const gf::Embedding& emb) const {
  gf::require_same(emb.sub(), field_, "BiPoly::mapped");
  BiPoly r(emb.sup(), a_, b_);
  for (std::size_t n = 0; n < c_.size(); ++n) r.c_[n] = emb(c_[n]);
  return r;
}

BiPoly BiPoly::scaled(Elem s) const {
  BiPoly r = *this;
  for (auto& c : r.c_) c = field_.mul(c, s);
  return r;
}

AffinePoly BiPoly::dehomogenize(Chart chart) const {
  const bool x_flip = chart == Chart::X1Y0 || chart == Chart::X1Y1;
  const bool y_flip = chart == Chart::X0Y1 || chart == Chart::X1Y1;
  AffinePoly r(field_, a_, b_);
  for (unsigned i = 0; i <= a_; ++i)
    for (unsigned j = 0; j <= b_; ++j) r.set_coeff(x_flip ? a_ - i : i, y_flip ? b_ - j : j, coeff(i, j));
  return r;
}

namespace {

void append_power(std::string& out, std::string_view var, unsigned e) {
  if (e == 0) return;
  if (!out.empty() && out.back() != ' ') out += '*';
  out += var;
  if (e > 1) out += "^" + std::to_string(e);
}

std::string monomial_text(unsigned x0, unsigned x1, unsigned y0, unsigned y1) {
  std::string m;
  append_power(m, "X0", x0);
  append_power(m, "X1", x1);
  append_power(m, "Y0", y0);
  append_power(m, "Y1", y1);
  return m;
}

}  // namespace

std::string BiPoly::to_string() const {
  std::string out;
  for (unsigned i = 0; i <= a_; ++i) {
    for (unsigned j = 0; j <= b_; ++j) {
      const Elem c = coeff(i, j);
      if (!c.v) continue;
      const std::string m = monomial_text(a_ - i, i, b_ - j, j);
      if (!out.empty()) out += " + ";
      if (m.empty()) {
        out += field_.format(c);
      } else if (c == field_.one()) {
        out += m;
      } else {
        out += field_.format(c) + "*" + m;
      }
    }
  }
  if (out.empty()) {
    const std::string m = monomial_text(a_, 0, b_, 0);
    out = m.empty() ? "0" : "0*" + m;
  }
  return out;
}

BiPoly operator+(const BiPoly& f, const BiPoly& g) {
  gf::require_same(f.field_, g.field_, "BiPoly +");
  if (f.bidegree() != g.bidegree()) throw Error(ErrorKind::BidegreeMismatch, "sum of forms of different bi-degree");
  BiPoly r = f;
  for (std::size_t n = 0; n < r.c_.size(); ++n) r.c_[n] = f.field_.add(r.c_[n], g.c_[n]);
  return r;
}

BiPoly operator-(const BiPoly& f, const BiPoly& g) {
  gf::require_same(f.field_, g.field_, "BiPoly -");
  if (f.bidegree() != g.bidegree())
    throw Error(ErrorKind::BidegreeMismatch, "difference of forms of different bi-degree");
  BiPoly r = f;
  for (std::size_t n = 0; n < r.c_.size(); ++n) r.c_[n] = f.field_.sub(r.c_[n], g.c_[n]);
  return r;
}

BiPoly operator*(const BiPoly& f, const BiPoly& g) {
  gf::require_same(f.field_, g.field_, "BiPoly *");
  const Field& k = f.field_;
  BiPoly r(k, f.a_ + g.a_, f.b_ + g.b_);
  for (unsigned i = 0; i <= f.a_; ++i) {
    for (unsigned j = 0; j <= f.b_; ++j) {
      const Elem c = f.coeff(i, j);
      if (!c.v) continue;
      for (unsigned u = 0; u <= g.a_; ++u) {
        for (unsigned v = 0; v <= g.b_; ++v) {
          const Elem d = g.coeff(u, v);
          if (!d.v) continue;
          r.set_coeff(i + u, j + v, k.add(r.coeff(i + u, j + v), k.mul(c, d)));
        }
      }
    }
  }
  return r;
}

BiPoly pow(const BiPoly& f, unsigned n) {
  BiPoly r = BiPoly::monomial(f.field(), 0, 0, 0, 0, f.field().one());
  for (unsigned i = 0; i < n; ++i) r = r * f;
  return r;
}

bool divides_raw(const Field& k, std::span<const Elem> g, unsigned ga, unsigned gb, std::span<const Elem> f,
                 unsigned fa, unsigned fb, std::vector<Elem>& scratch) {
  if (ga > fa || gb > fb) return false;
  const unsigned gw = gb + 1, fw = fb + 1;
  // lex-leading term of g: largest X1 power, then largest Y1 power
  int li = -1, lj = -1;
  for (int i = static_cast<int>(ga); i >= 0 && li < 0; --i)
    for (int j = static_cast<int>(gb); j >= 0; --j)
      if (g[i * gw + j].v) {
        li = i;
        lj = j;
        break;
      }
  if (li < 0) throw Error(ErrorKind::ZeroDivisor, "division by the zero form");
  const Elem lead_inv = k.inv(g[li * gw + lj]);
  scratch.assign(f.begin(), f.end());
  for (int i = static_cast<int>(fa); i >= 0; --i) {
    for (int j = static_cast<int>(fb); j >= 0; --j) {
      const Elem r = scratch[i * fw + j];
      if (!r.v) continue;
      const int qi = i - li, qj = j - lj;
      if (qi < 0 || qj < 0 || qi > static_cast<int>(fa - ga) || qj > static_cast<int>(fb - gb)) return false;
      const Elem c = k.mul(r, lead_inv);
      for (unsigned u = 0; u <= ga; ++u)
        for (unsigned v = 0; v <= gb; ++v) {
          const Elem d = g[u * gw + v];
          if (!d.v) continue;
          Elem& t = scratch[(qi + u) * fw + (qj + v)];
          t = k.sub(t, k.mul(c, d));
        }
    }
  }
  return true;
}

std::optional<BiPoly> divides(const BiPoly& g, const BiPoly& f) {
  gf::require_same(g.field(), f.field(), "divides");
  if (g.is_zero()) throw Error(ErrorKind::ZeroDivisor, "division by the zero form");
  if (g.a() > f.a() || g.b() > f.b()) return std::nullopt;
  const Field& k = f.field();
  const unsigned ha = f.a() - g.a(), hb = f.b() - g.b();
  int li = -1, lj = -1;
  for (int i = static_cast<int>(g.a()); i >= 0 && li < 0; --i)
    for (int j = static_cast<int>(g.b()); j >= 0; --j)
      if (g.coeff(i, j).v) {
        li = i;
        lj = j;
        break;
      }
  const Elem lead_inv = k.inv(g.coeff(li, lj));
  BiPoly r = f;
  BiPoly h(k, ha, hb);
  for (int i = static_cast<int>(f.a()); i >= 0; --i) {
    for (int j = static_cast<int>(f.b()); j >= 0; --j) {
      const Elem t = r.coeff(i, j);
      if (!t.v) continue;
      const int qi = i - li, qj = j - lj;
      if (qi < 0 || qj < 0 || qi > static_cast<int>(ha) || qj > static_cast<int>(hb)) return std::nullopt;
      const Elem c = k.mul(t, lead_inv);
      h.set_coeff(qi, qj, c);
      for (unsigned u = 0; u <= g.a(); ++u)
        for (unsigned v = 0; v <= g.b(); ++v) {
          const Elem d = g.coeff(u, v);
          if (d.v) r.set_coeff(qi + u, qj + v, k.sub(r.coeff(qi + u, qj + v), k.mul(c, d)));
        }
    }
  }
  return h;
}

// ---- parser ----

namespace {

class Parser {
 public:
  Parser(std::string_view s, const Field& k) : s_(s), k_(k) {}

  BiPoly run() {
    skip();
    if (pos_ >= s_.size()) fail("empty polynomial");
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    term(negate);
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      term(op == '-');
    }
    BiPoly f(k_, dx_, dy_);
    for (const auto& [key, c] : terms_) {
      const auto [x1, y1] = key;
      f.set_coeff(x1, y1, k_.add(f.coeff(x1, y1), c));
    }
    return f;
  }

 private:
  char peek() const { return s_[pos_]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(pos_, what);
  }

  unsigned nat() {
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t n = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      n = n * 10 + static_cast<unsigned>(peek() - '0');
      if (n > 1'000'000'000) fail("number too large");
      ++pos_;
    }
    return static_cast<unsigned>(n);
  }

  Elem coefficient() {
    skip();
    const std::size_t start = pos_;
    if (peek() == '[') {
      const auto close = s_.find(']', pos_);
      if (close == std::string_view::npos) fail("unterminated '['");
      pos_ = close + 1;
    } else {
      nat();
    }
    return k_.parse_element(s_.substr(start, pos_ - start));
  }

  void term(bool negate) {
    skip();
    if (pos_ >= s_.size()) fail("expected a term");
    const std::size_t start = pos_;
    Elem c = k_.one();
    if (peek() == '[' || std::isdigit(static_cast<unsigned char>(peek()))) {
      c = coefficient();
      skip();
      if (pos_ < s_.size() && peek() == '*') {
        ++pos_;
      } else {
        finish(start, c, negate, {0, 0, 0, 0});
        return;
      }
    }
    unsigned e[4] = {0, 0, 0, 0};
    while (true) {
      skip();
      if (pos_ + 2 > s_.size() || (peek() != 'X' && peek() != 'Y') || (s_[pos_ + 1] != '0' && s_[pos_ + 1] != '1'))
        fail("expected X0, X1, Y0 or Y1");
      const unsigned v = (peek() == 'Y' ? 2 : 0) + static_cast<unsigned>(s_[pos_ + 1] - '0');
      pos_ += 2;
      skip();
      unsigned n = 1;
      if (pos_ < s_.size() && peek() == '^') {
        ++pos_;
        n = nat();
      }
      e[v] += n;
      skip();
      if (pos_ < s_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    finish(start, c, negate, {e[0], e[1], e[2], e[3]});
  }

  void finish(std::size_t start, Elem c, bool negate, std::array<unsigned, 4> e) {
    const unsigned a = e[0] + e[1], b = e[2] + e[3];
    if (!have_) {
      dx_ = a;
      dy_ = b;
      have_ = true;
    } else if (a != dx_ || b != dy_) {
      throw Error(ErrorKind::MixedBidegree, "term at position " + std::to_string(start) + " has bi-degree (" +
                                                std::to_string(a) + "," + std::to_string(b) + "), expected (" +
                                                std::to_string(dx_) + "," + std::to_string(dy_) + ")");
    }
    if (negate) c = k_.neg(c);
    auto& slot = terms_[{e[1], e[3]}];
    slot = k_.add(slot, c);
  }

  std::string_view s_;
  const Field& k_;
  std::size_t pos_ = 0;
  bool have_ = false;
  unsigned dx_ = 0, dy_ = 0;
  std::map<std::pair<unsigned, unsigned>, Elem> terms_;
};

}  // namespace

BiPoly BiPoly::parse(std::string_view text, const Field& field) { return Parser(text, field).run(); }

}  // namespace fillcurve

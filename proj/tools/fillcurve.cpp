// fillcurve: command-line front end.
//
// Exit codes: 0 success, 1 a requested or built-in check failed (or the
// computation could not be completed), 2 usage error.

#include <unistd.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "fillcurve/analysis.hpp"
#include "fillcurve/bounds.hpp"
#include "fillcurve/error.hpp"
#include "fillcurve/families.hpp"
#include "fillcurve/filling.hpp"
#include "fillcurve/geom.hpp"
#include "fillcurve/io.hpp"
#include "fillcurve/search.hpp"

namespace {

using namespace fillcurve;
using gf::Field;
using io::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> q;
  std::optional<std::string> field;
  unsigned jobs = 1;
  std::string command;
};

Globals g;

Field resolve_field() {
  if (g.field) {
    const Field k = Field::parse(*g.field);
    if (g.q && *g.q != k.size())
      throw UsageError("--q " + std::to_string(*g.q) + " does not match --field of order " + std::to_string(k.size()));
    return k;
  }
  if (g.q) return Field::of_order(*g.q);
  throw UsageError("one of --q or --field is required");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline text, @file with polynomial text, or @file with canonical JSON.
BiPoly load_poly(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') text = read_file(arg.substr(1));
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("bad JSON polynomial: ") + e.what());
    }
    // accept the canonical form or any report carrying it under "poly" or
    // "curve" (possibly wrapped as {"text", "poly"})
    for (const char* key : {"curve", "poly"})
      if (!j.contains("bidegree") && j.contains(key)) j = j[key];
    if (!j.contains("bidegree") && j.contains("poly")) j = j["poly"];
    if (g.q || g.field) return io::bipoly_from_json(j, resolve_field());
    return io::bipoly_from_json(j);
  }
  return BiPoly::parse(text, resolve_field());
}

std::pair<unsigned, unsigned> parse_pair(const std::string& s, const std::string& flag) {
  unsigned a = 0, b = 0;
  char comma = 0;
  std::istringstream in(s);
  if (!(in >> a >> comma >> b) || comma != ',' || !(in >> std::ws).eof())
    throw UsageError(flag + " expects A,B");
  return {a, b};
}

json header() {
  json j;
  j["command"] = g.command;
  j["seed"] = g.seed;
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

const char* yes_no(bool v) { return v ? "true" : "false"; }

void print_census_progress(std::uint64_t done, std::uint64_t total) {
  std::cerr << "\r" << done << " / " << total << " candidates" << std::flush;
}

bool progress_enabled(bool flag) { return flag || isatty(STDERR_FILENO); }

// ---- commands ---------------------------------------------------------------

int cmd_construct(bool transposed) {
  const Field k = resolve_field();
  const Construction c = construct(k, transposed);
  const bool filling = is_filling(c.curve);
  const SmoothCertificate cert = certify_smooth(c.curve, g.seed);
  const IrreducibilityResult irr = is_abs_irreducible(c.curve, {.seed = g.seed});
  const std::uint64_t points = count_points(c.curve, 1, {.jobs = 1});
  const std::uint64_t expected = std::uint64_t{k.size() + 1} * (k.size() + 1);
  const bool ok = filling && cert.verdict == Verdict::Smooth && irr.status == Irreducibility::Irreducible &&
                  points == expected;
  if (g.json) {
    json j = header();
    j["field"] = io::to_json(k);
    j["params"] = io::to_json(c.params, k);
    j["transposed"] = transposed;
    j["f"] = c.f ? io::poly_entry(*c.f) : json(nullptr);
    j["g"] = c.g ? io::poly_entry(*c.g) : json(nullptr);
    j["curve"] = io::poly_entry(c.curve);
    j["summary"] = {{"filling", filling},
                    {"smooth", cert.verdict == Verdict::Smooth},
                    {"irreducible", irr.status == Irreducibility::Irreducible},
                    {"points", points}};
    j["certificate"] = io::to_json(cert);
    j["irreducibility"] = io::to_json(irr);
    emit(j);
  } else {
    std::cout << "field: " << k.describe() << "\n";
    std::cout << "case: " << to_string(c.params.kind) << "\n";
    if (c.params.delta) std::cout << "delta: " << k.format(*c.params.delta) << "\n";
    if (c.params.gamma) std::cout << "gamma: " << k.format(*c.params.gamma) << "\n";
    if (c.f) std::cout << "f: " << c.f->to_string() << "\n";
    if (c.g) std::cout << "g: " << c.g->to_string() << "\n";
    std::cout << "F: " << c.curve.to_string() << "\n";
    std::cout << "bidegree: (" << c.curve.a() << "," << c.curve.b() << ")\n";
    std::cout << "summary:\n";
    std::cout << "  filling: " << yes_no(filling) << "\n";
    std::cout << "  smooth: " << yes_no(cert.verdict == Verdict::Smooth) << "\n";
    std::cout << "  irreducible: " << yes_no(irr.status == Irreducibility::Irreducible) << " (method " << irr.method
              << ")\n";
    std::cout << "  points: " << points << "\n";
    std::cout << "seed: " << g.seed << "\n";
  }
  return ok ? 0 : 1;
}

struct VerifyFlags {
  std::string poly;
  std::string method = "auto";
  std::uint64_t budget = 1u << 22;
  unsigned singular_m = 0;
  bool expect_smooth = false;
  bool expect_irreducible = false;
  bool expect_filling = false;
};

int cmd_verify(const VerifyFlags& v) {
  IrrMethod method;
  if (v.method == "A" || v.method == "a")
    method = IrrMethod::A;
  else if (v.method == "B" || v.method == "b")
    method = IrrMethod::B;
  else if (v.method == "auto")
    method = IrrMethod::Auto;
  else
    throw UsageError("--method must be A, B or auto");
  const BiPoly f = load_poly(v.poly);
  if (f.is_zero()) throw UsageError("the zero form defines no curve");
  const Field& k = f.field();
  const bool filling = is_filling(f);
  std::optional<SmoothCertificate> cert;
  std::optional<unsigned> witness_degree;
  if (f.a() > 0 && f.b() > 0) {
    cert = certify_smooth(f, g.seed);
    if (cert->witness) witness_degree = witness_point_degree(f, *cert->witness);
  }
  std::optional<IrreducibilityResult> irr;
  std::string irr_error;
  try {
    irr = is_abs_irreducible(f, {.method = method, .budget = v.budget, .seed = g.seed});
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Infeasible) throw;
    irr_error = e.what();
  }
  const std::uint64_t points = count_points(f, 1, {.jobs = g.jobs});
  std::optional<std::vector<TaggedPoint>> sing;
  if (v.singular_m > 0) sing = singular_points(f, v.singular_m);

  const bool smooth = cert && cert->verdict == Verdict::Smooth;
  const bool irreducible = irr && irr->status == Irreducibility::Irreducible;
  bool ok = true;
  if (v.expect_smooth && !smooth) ok = false;
  if (v.expect_irreducible && !irreducible) ok = false;
  if (v.expect_filling && !filling) ok = false;

  if (g.json) {
    json j = header();
    j["field"] = io::to_json(k);
    j["poly"] = io::poly_entry(f);
    j["bidegree"] = {f.a(), f.b()};
    j["filling"] = filling;
    j["points"] = points;
    j["certificate"] = cert ? io::to_json(*cert) : json(nullptr);
    j["witness_point_degree"] = witness_degree ? json(*witness_degree) : json(nullptr);
    j["irreducibility"] = irr ? io::to_json(*irr) : json(nullptr);
    if (!irr_error.empty()) j["irreducibility_error"] = irr_error;
    if (sing) {
      json pts = json::array();
      for (const auto& p : *sing) pts.push_back({{"degree", p.degree}, {"point", format_point(p.field, p.point)}});
      j["singular_points"] = {{"max_degree", v.singular_m}, {"points", pts}};
    }
    j["ok"] = ok;
    emit(j);
  } else {
    std::cout << "field: " << k.describe() << "\n";
    std::cout << "F: " << f.to_string() << "\n";
    std::cout << "bidegree: (" << f.a() << "," << f.b() << ")\n";
    std::cout << "filling: " << yes_no(filling) << "\n";
    std::cout << "points: " << points << "\n";
    if (cert) {
      std::cout << "smooth: " << to_string(cert->verdict) << "\n";
      if (cert->witness) {
        std::cout << "  witness chart " << to_string(cert->witness->chart)
                  << (cert->witness->swapped ? " (swapped)" : "") << "\n";
        std::cout << "  m(x) = " << gf::format_poly(cert->witness->m, 'x') << "\n";
        std::cout << "  G = " << cert->witness->g.to_string() << "\n";
        if (witness_degree) std::cout << "  point degree: " << *witness_degree << "\n";
      }
    } else {
      std::cout << "smooth: not applicable (a or b is 0)\n";
    }
    if (irr) {
      std::cout << "irreducible: " << to_string(irr->status) << " (method " << irr->method << ")\n";
      if (irr->factor) std::cout << "  factor over " << irr->factor->field().describe() << ": " << irr->factor->to_string() << "\n";
    } else {
      std::cout << "irreducible: " << irr_error << "\n";
    }
    if (sing) {
      std::cout << "singular points up to degree " << v.singular_m << ": " << sing->size() << "\n";
      for (const auto& p : *sing) std::cout << "  [" << p.degree << "] " << format_point(p.field, p.point) << "\n";
    }
    std::cout << "seed: " << g.seed << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_decompose(const std::string& poly) {
  const BiPoly f = load_poly(poly);
  const Decomposition d = decompose(f);
  const bool verified = d.recombine() == f;
  if (g.json) {
    json j = header();
    j["field"] = io::to_json(f.field());
    j["poly"] = io::poly_entry(f);
    j["decomposition"] = io::to_json(d, f);
    emit(j);
  } else {
    std::cout << "F: " << f.to_string() << "\n";
    std::cout << "f: " << d.f.to_string() << "\n";
    std::cout << "g: " << d.g.to_string() << "\n";
    std::cout << "verified: " << yes_no(verified) << "\n";
  }
  return verified ? 0 : 1;
}

struct CensusFlags {
  std::string bidegree;
  bool smooth = false;
  std::uint64_t budget = 10'000'000;
  std::size_t exemplars = 8;
  bool timing = false;
  bool progress = false;
};

int cmd_census(const CensusFlags& c) {
  const auto [a, b] = parse_pair(c.bidegree, "--bidegree");
  const Field k = resolve_field();
  CensusOptions opts;
  opts.jobs = g.jobs;
  opts.smooth = c.smooth;
  opts.budget = c.budget;
  opts.exemplar_limit = c.exemplars;
  opts.irreducibility.seed = g.seed;
  const bool show = progress_enabled(c.progress);
  if (show) opts.progress = print_census_progress;
  const CensusReport r = census(k, a, b, opts);
  if (show && r.candidates_scanned >= 4096) std::cerr << "\n";
  if (g.json) {
    json j = header();
    j["field"] = io::to_json(k);
    j["report"] = io::to_json(r, c.timing);
    emit(j);
  } else {
    std::cout << "field: " << k.describe() << "\n";
    std::cout << "bidegree: (" << a << "," << b << ")\n";
    std::cout << "space dimension: " << r.space_dimension << "\n";
    std::cout << "candidates: " << r.candidates_scanned << "\n";
    std::cout << "irreducible: " << r.n_irreducible << "\n";
    std::cout << "reducible: " << r.n_reducible << "\n";
    std::cout << "unknown: " << r.n_unknown << "\n";
    if (r.n_smooth) {
      std::cout << "smooth: " << *r.n_smooth << "\n";
      std::cout << "singular irreducible: " << *r.n_singular_irreducible << "\n";
    }
    for (const auto& e : r.exemplars) std::cout << "  #" << e.index << ": " << e.poly.to_string() << "\n";
    if (c.timing) std::cout << "seconds: " << r.seconds << "\n";
    std::cout << "seed: " << g.seed << "\n";
  }
  return 0;
}

int cmd_scan(const std::string& max, std::uint64_t budget, bool timing) {
  const auto [a, b] = parse_pair(max, "--max");
  const Field k = resolve_field();
  CensusOptions opts;
  opts.jobs = g.jobs;
  opts.budget = budget;
  opts.irreducibility.seed = g.seed;
  const ScanTable t = min_bidegree_scan(k, a, b, opts);
  if (g.json) {
    json j = header();
    j["field"] = io::to_json(k);
    j["table"] = io::to_json(t, timing);
    emit(j);
  } else {
    std::cout << "field: " << k.describe() << "\n";
    std::cout << "a\\b";
    for (unsigned bb = 0; bb <= b; ++bb) std::cout << "\t" << bb;
    std::cout << "\n";
    for (unsigned aa = 0; aa <= a; ++aa) {
      std::cout << aa;
      for (unsigned bb = 0; bb <= b; ++bb) std::cout << "\t" << to_string(t.at(aa, bb).status);
      std::cout << "\n";
    }
    for (const auto& c : t.cells)
      if (c.exemplar) std::cout << "(" << c.a << "," << c.b << "): " << c.exemplar->to_string() << "\n";
    if (timing) std::cout << "seconds: " << t.seconds << "\n";
    std::cout << "seed: " << g.seed << "\n";
  }
  return 0;
}

int cmd_bound(std::optional<unsigned> r, std::optional<std::uint64_t> d, const std::optional<std::string>& poly) {
  if (poly) {
    if (r || d) throw UsageError("--poly cannot be combined with --r or --d");
    const BiPoly f = load_poly(*poly);
    const BoundReport rep = check_attainment(f);
    if (g.json) {
      json j = header();
      j["poly"] = io::poly_entry(f);
      j["report"] = io::to_json(rep);
      emit(j);
    } else {
      std::cout << "q: " << rep.q << "\n";
      std::cout << "degree: " << rep.d << "\n";
      std::cout << "bound: " << rep.bound.value << "\n";
      std::cout << "observed: " << *rep.observed << "\n";
      std::cout << "attained: " << yes_no(*rep.attained) << "\n";
      std::cout << "hypotheses met: " << yes_no(rep.hypotheses_met) << " (" << rep.hypotheses_note << ")\n";
    }
    return 0;
  }
  if (!g.q) throw UsageError("bound needs --q (and --d), or --poly");
  if (!d) throw UsageError("bound needs --d");
  const unsigned rr = r.value_or(3);
  const BoundValue v = point_count_bound(*g.q, rr, *d);
  if (g.json) {
    json j = header();
    j["q"] = *g.q;
    j["r"] = rr;
    j["d"] = *d;
    j["bound"] = io::to_json(v);
    emit(j);
  } else {
    std::cout << "numerator: " << v.numerator << "\n";
    std::cout << "denominator: " << v.denominator << "\n";
    std::cout << "quotient: " << io::decimal_quotient(v.numerator, v.denominator) << "\n";
    std::cout << "floor: " << v.value << "\n";
  }
  return 0;
}

int cmd_count(const std::string& poly, unsigned m, std::uint64_t budget) {
  const BiPoly f = load_poly(poly);
  const std::uint64_t n = count_points(f, m, {.jobs = g.jobs, .budget = budget});
  if (g.json) {
    json j = header();
    j["poly"] = io::poly_entry(f);
    j["m"] = m;
    j["field"] = io::to_json(extension_of(f.field(), m));
    j["points"] = n;
    emit(j);
  } else {
    std::cout << "field: " << extension_of(f.field(), m).describe() << "\n";
    std::cout << "points: " << n << "\n";
  }
  return 0;
}

int cmd_field_info(bool elements) {
  const Field k = resolve_field();
  if (g.json) {
    json j = header();
    j["field"] = io::to_json(k);
    j["description"] = k.describe();
    if (elements) {
      json e = json::array();
      for (auto x : k.elements()) e.push_back(io::element_to_json(k, x));
      j["elements"] = e;
    }
    emit(j);
  } else {
    std::cout << "field: " << k.describe() << "\n";
    std::cout << "spec: " << k.spec_string() << "\n";
    std::cout << "order: " << k.size() << "\n";
    std::cout << "characteristic: " << k.characteristic() << "\n";
    std::cout << "degree: " << k.degree() << "\n";
    if (elements) {
      std::cout << "elements:";
      for (auto x : k.elements()) std::cout << " " << k.format(x);
      std::cout << "\n";
    }
  }
  return 0;
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime:
    case ErrorKind::SyntaxError:
    case ErrorKind::MixedBidegree:
    case ErrorKind::BadCoefficient:
    case ErrorKind::BadParameters:
    case ErrorKind::BadShape:
    case ErrorKind::UnsupportedQ:
    case ErrorKind::FieldMismatch:
    case ErrorKind::BidegreeMismatch:
    case ErrorKind::BidegreeTooSmall:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Filling curves on P^1 x P^1 over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g.json, "Emit one JSON document on standard output");
  app.add_option("--seed", g.seed, "Seed for randomized steps (echoed in output)");
  app.add_option("--q", g.q, "Field order (canonical modulus)");
  app.add_option("--field", g.field, "Field spec, e.g. \"p=3,e=2,mod=[1,0,1]\"");

  auto* construct_cmd = app.add_subcommand("construct", "Build the minimal filling curve and verify it");
  bool transposed = false;
  construct_cmd->add_flag("--transposed", transposed, "Swap the X and Y blocks");

  auto* verify_cmd = app.add_subcommand("verify", "Check filling, smoothness and irreducibility of a curve");
  VerifyFlags vf;
  verify_cmd->add_option("--poly", vf.poly, "Polynomial text, @file, or @file.json")->required();
  verify_cmd->add_option("--method", vf.method, "Irreducibility method: A, B or auto");
  verify_cmd->add_option("--budget", vf.budget, "Candidate budget for the factor search");
  verify_cmd->add_option("--singular-points", vf.singular_m, "Also list singular points up to this extension degree");
  verify_cmd->add_flag("--expect-smooth", vf.expect_smooth, "Exit 1 unless the curve is certified smooth");
  verify_cmd->add_flag("--expect-irreducible", vf.expect_irreducible, "Exit 1 unless absolutely irreducible");
  verify_cmd->add_flag("--expect-filling", vf.expect_filling, "Exit 1 unless filling");
  verify_cmd->add_option("--jobs", g.jobs, "Worker threads for point counting");

  auto* decompose_cmd = app.add_subcommand("decompose", "Write a filling form as f K_X + g K_Y");
  std::string decompose_poly;
  decompose_cmd->add_option("--poly", decompose_poly, "Polynomial text or @file")->required();

  auto* census_cmd = app.add_subcommand("census", "Classify every filling form of one bi-degree");
  CensusFlags cf;
  census_cmd->add_option("--bidegree", cf.bidegree, "A,B")->required();
  census_cmd->add_flag("--smooth", cf.smooth, "Also certify smoothness of every candidate");
  census_cmd->add_option("--jobs", g.jobs, "Worker threads (and partitions)");
  census_cmd->add_option("--budget", cf.budget, "Maximum number of candidates");
  census_cmd->add_option("--exemplars", cf.exemplars, "Irreducible exemplars to report");
  census_cmd->add_flag("--timing", cf.timing, "Report wall time (output no longer reproducible)");
  census_cmd->add_flag("--progress", cf.progress, "Report progress on standard error");

  auto* scan_cmd = app.add_subcommand("scan", "Existence of irreducible filling curves by bi-degree");
  std::string scan_max;
  std::uint64_t scan_budget = 10'000'000;
  bool scan_timing = false;
  scan_cmd->add_option("--max", scan_max, "A,B")->required();
  scan_cmd->add_option("--jobs", g.jobs, "Worker threads");
  scan_cmd->add_option("--budget", scan_budget, "Maximum candidates per cell");
  scan_cmd->add_flag("--timing", scan_timing, "Report wall time");

  auto* bound_cmd = app.add_subcommand("bound", "Point-count bound for curves of degree d in P^r");
  std::optional<unsigned> bound_r;
  std::optional<std::uint64_t> bound_d;
  std::optional<std::string> bound_poly;
  bound_cmd->add_option("--r", bound_r, "Ambient dimension (default 3)");
  bound_cmd->add_option("--d", bound_d, "Curve degree");
  bound_cmd->add_option("--poly", bound_poly, "Check attainment for this curve instead");

  auto* count_cmd = app.add_subcommand("count", "Count points of a curve over GF(q^m)");
  std::string count_poly;
  unsigned count_m = 1;
  std::uint64_t count_budget = 100'000'000;
  count_cmd->add_option("--poly", count_poly, "Polynomial text or @file")->required();
  count_cmd->add_option("--m", count_m, "Extension degree")->check(CLI::PositiveNumber);
  count_cmd->add_option("--jobs", g.jobs, "Worker threads");
  count_cmd->add_option("--budget", count_budget, "Maximum number of points examined");

  auto* info_cmd = app.add_subcommand("field-info", "Describe a field");
  bool list_elements = false;
  info_cmd->add_flag("--elements", list_elements, "List the elements in enumeration order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (g.jobs == 0) {
    std::cerr << "error: --jobs must be at least 1\n";
    return 2;
  }

  auto* sub = app.get_subcommands().front();
  g.command = sub->get_name();
  try {
    if (sub == construct_cmd) return cmd_construct(transposed);
    if (sub == verify_cmd) return cmd_verify(vf);
    if (sub == decompose_cmd) return cmd_decompose(decompose_poly);
    if (sub == census_cmd) return cmd_census(cf);
    if (sub == scan_cmd) return cmd_scan(scan_max, scan_budget, scan_timing);
    if (sub == bound_cmd) return cmd_bound(bound_r, bound_d, bound_poly);
    if (sub == count_cmd) return cmd_count(count_poly, count_m, count_budget);
    if (sub == info_cmd) return cmd_field_info(list_elements);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (g.json) {
      json j = header();
      j["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
      emit(j);
    }
    return is_input_error(e.kind()) ? 2 : 1;
  }
  return 2;
}

// Copyright 2026 The persum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "persum/catalog.hpp"
#include "persum/error.hpp"
#include "persum/expr.hpp"
#include "persum/periodic.hpp"
#include "persum/series.hpp"
#include "persum/special.hpp"
#include "persum/sums.hpp"
#include "persum/verify.hpp"
#include "report.hpp"

namespace persum::cli {

namespace {

constexpr double kDefaultTolerance = 1e-9;
constexpr const char* kToleranceEnv = "PERIODIC_SUM_TOL";
constexpr double kWeightMatchTol = 1e-12;

/// Bad flag combinations and unparsable values detected after CLI11 ran.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr const char* kExpressionHelp = R"txt(Expressions (--f, --weight) are functions of the integer k:
  numbers      3, 0.25, 1.5
  constants    pi, e
  operators    + - * / ^   (^ is right associative)
  functions    sin cos tan log exp abs floor
  examples     "sin(k*pi/2)"  "cos(2*k*pi/3)"  "(-1)^k"  "1/(k+1)"

Exit codes: 0 all checks pass, 1 numerical check failed, 2 usage or config error.)txt";

struct Globals {
  std::string format;
  std::string out_path;
  std::optional<double> tol;
};

double parse_double(std::string_view text, std::string_view what) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError(fmt::format("invalid {} '{}'", what, text));
  }
  return v;
}

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw UsageError(fmt::format("invalid {} '{}'", what, text));
  }
  return v;
}

double resolve_tolerance(const Globals& g) {
  double tol = kDefaultTolerance;
  if (g.tol) {
    tol = *g.tol;
  } else if (const char* env = std::getenv(kToleranceEnv); env && *env) {
    tol = parse_double(env, kToleranceEnv);
  }
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw UsageError(fmt::format("tolerance must be > 0, got {}", tol));
  }
  return tol;
}

/// True when a tolerance was supplied by flag or environment.
bool tolerance_overridden(const Globals& g) {
  if (g.tol) return true;
  const char* env = std::getenv(kToleranceEnv);
  return env && *env;
}

struct NRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

NRange parse_range(const std::string& text) {
  NRange r;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    r.lo = parse_int(std::string_view(text).substr(0, dots), "n");
    r.hi = parse_int(std::string_view(text).substr(dots + 2), "n");
  } else {
    r.lo = r.hi = parse_int(text, "n");
  }
  if (r.lo < 0) throw UsageError("n must be >= 0");
  if (r.hi < r.lo) throw UsageError(fmt::format("empty range '{}'", text));
  return r;
}

CatalogEntry require_entry(const std::string& id) {
  auto entry = find_entry(id);
  if (!entry) throw UnsupportedFamily(fmt::format("unknown family '{}'", id));
  return *entry;
}

/// Copies w onto period q when w.q() divides q.
std::optional<PeriodicWeight> lift_weight(const PeriodicWeight& w, int q) {
  if (q % w.q() != 0) return std::nullopt;
  std::vector<Complex> values(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) values[static_cast<std::size_t>(i)] = w(i);
  return PeriodicWeight(std::move(values));
}

bool weights_close(const PeriodicWeight& a, const PeriodicWeight& b) {
  if (a.q() != b.q()) return false;
  for (int i = 0; i < a.q(); ++i) {
    if (std::abs(a(i) - b(i)) > kWeightMatchTol) return false;
  }
  return true;
}

nlohmann::ordered_json weight_json(const PeriodicWeight& w) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : w.values()) {
    if (v.imag() == 0.0) {
      arr.push_back(v.real());
    } else {
      arr.push_back({v.real(), v.imag()});
    }
  }
  return arr;
}

std::string caret_line(std::string_view src, std::size_t offset) {
  return fmt::format("  {}\n  {}^", src, std::string(std::min(offset, src.size()), ' '));
}

/// Parses an expression flag; syntax errors carry the source and a caret.
Expr parse_flag(std::string_view flag, const std::string& src) {
  try {
    return parse_expression(src);
  } catch (const SyntaxError& e) {
    throw UsageError(fmt::format("{}: {}\n{}", flag, e.what(), caret_line(src, e.offset())));
  }
}

nlohmann::ordered_json nullable(const std::string& s) {
  return s.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(s);
}

Sequence sequence_of(const Expr& e) {
  return [e](std::int64_t k) { return e(k); };
}

double scaled(double abs_err, Complex ref) {
  return abs_err / std::max(1.0, std::abs(ref));
}

double relative(double abs_err, Complex ref) {
  double m = std::abs(ref);
  return m > 0.0 ? abs_err / m : abs_err;
}

// ---------------------------------------------------------------- sum

struct SumArgs {
  std::string family;
  std::string weight;
  std::string f;
  std::string n = "0..10";
};

int cmd_sum(const SumArgs& a, double tol, Report& report) {
  if (a.family.empty() && a.f.empty()) {
    throw UsageError("sum needs --family or --f");
  }
  std::optional<CatalogEntry> entry;
  if (!a.family.empty()) entry = require_entry(a.family);

  Sequence f;
  if (!a.f.empty()) {
    f = sequence_of(parse_flag("--f", a.f));
  } else {
    f = entry->f;
  }

  std::optional<PeriodicWeight> w;
  if (!a.weight.empty()) {
    w = weight_from_expression(parse_flag("--weight", a.weight));
  } else if (entry) {
    w = entry->weight;
  } else {
    throw UsageError("sum with --f needs --weight");
  }
  NRange range = parse_range(a.n);

  // Closed values exist only for an unmodified catalog summand.
  std::function<Complex(std::int64_t)> closed;
  std::string route = "none";
  if (entry && a.f.empty()) {
    if (entry->closed_S && weights_close(*w, entry->weight)) {
      closed = *entry->closed_S;
      route = "catalog";
    } else if (auto lifted = lift_weight(*w, entry->q)) {
      SequenceFamily fam = entry->family();
      closed = [fam, wl = *lifted](std::int64_t n) {
        return weighted_sum_from_anti(wl, fam, n);
      };
      route = "anti-difference";
    }
  }

  report.params["family"] = nullable(a.family);
  report.params["weight"] = nullable(a.weight);
  report.params["weight_values"] = weight_json(*w);
  report.params["f"] = nullable(a.f);
  report.params["n_min"] = range.lo;
  report.params["n_max"] = range.hi;
  report.params["closed_route"] = route;
  report.params["tol"] = tol;
  report.columns = {"n", "brute_re", "brute_im", "closed_re", "closed_im", "abs_err"};

  double worst = 0.0;
  for (std::int64_t n = range.lo; n <= range.hi; ++n) {
    Complex brute = brute_S(f, *w, n);
    if (!closed) {
      report.add_row({n, brute.real(), brute.imag(), {}, {}, {}});
      continue;
    }
    Complex c = closed(n);
    double err = std::abs(brute - c);
    report.note_error(err, relative(err, c));
    worst = std::max(worst, std::isnan(err) ? INFINITY : scaled(err, c));
    report.add_row({n, brute.real(), brute.imag(), c.real(), c.imag(), err});
  }
  report.passed = worst <= tol;
  // A mismatch is reported as data, not as a failing exit status.
  return kExitPass;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::vector<std::string> suites;
  int qmax = 12;
  bool inject_fault = false;
  bool serial = false;
};

std::string_view mode_name(ErrorMode m) {
  switch (m) {
    case ErrorMode::Absolute:
      return "absolute";
    case ErrorMode::Scaled:
      return "scaled";
    case ErrorMode::Relative:
      return "relative";
  }
  return "?";
}

int cmd_verify(const VerifyArgs& a, const Globals& g, Report& report,
               std::ostream& err) {
  VerifyOptions opts;
  opts.suites = a.suites;
  opts.qmax = a.qmax;
  opts.inject_fault = a.inject_fault;
  opts.parallel = !a.serial;
  if (tolerance_overridden(g)) opts.tolerance = resolve_tolerance(g);

  auto results = run_verification(opts);

  auto names = nlohmann::ordered_json::array();
  for (const auto& r : results) names.push_back(r.name);
  report.params["suites"] = names;
  report.params["qmax"] = a.qmax;
  report.params["tol"] = opts.tolerance ? nlohmann::ordered_json(*opts.tolerance)
                                        : nlohmann::ordered_json("per-suite");
  report.params["inject_fault"] = a.inject_fault;
  report.columns = {"suite",       "mode",        "tolerance", "cases",
                    "max_abs_err", "max_rel_err", "max_err",   "worst_case",
                    "passed",      "failure"};
  bool all = true;
  for (const auto& r : results) {
    report.note_error(r.max_abs_err, r.max_rel_err);
    report.add_row({r.name, std::string(mode_name(r.mode)), r.tolerance, r.cases,
                    r.max_abs_err, r.max_rel_err, r.max_err, r.worst_case,
                    r.passed, r.failure});
    if (!r.passed) {
      all = false;
      err << fmt::format("suite {} failed at {}; worst case {} (error {:.3g}, tol {:.3g})\n",
                         r.name, r.failure, r.worst_case, r.max_err, r.tolerance);
    }
  }
  report.passed = all;
  return all ? kExitPass : kExitNumeric;
}

// ---------------------------------------------------------------- gauss

struct GaussArgs {
  int p = 0;
  int q = 0;
};

int cmd_gauss(const GaussArgs& a, double tol, Report& report) {
  if (a.q < 2 || a.p < 1 || a.p >= a.q) {
    throw InvalidParameter(fmt::format("gauss needs 1 <= p < q, got p={} q={}", a.p, a.q));
  }
  double x = static_cast<double>(a.p) / static_cast<double>(a.q);
  double oracle = harmonic_by_series(x);
  double exact = harmonic(Rational(a.p, a.q));

  report.params["p"] = a.p;
  report.params["q"] = a.q;
  report.params["tol"] = tol;
  report.columns = {"form", "formula", "harmonic", "series_oracle", "diff"};
  bool ok = true;
  for (auto [form, name] : {std::pair{GaussSum::Folded, "folded"},
                            std::pair{GaussSum::Full, "full"}}) {
    double value = gauss_fractional_harmonic(a.p, a.q, form);
    double diff = value - oracle;
    double d_exact = std::abs(value - exact);
    report.note_error(std::max(std::abs(diff), d_exact),
                      relative(std::max(std::abs(diff), d_exact), oracle));
    ok = ok && std::abs(diff) <= tol && d_exact <= tol;
    report.add_row({std::string(name), value, exact, oracle, diff});
  }
  report.passed = ok;
  return ok ? kExitPass : kExitNumeric;
}

// ---------------------------------------------------------------- gf

struct GfArgs {
  std::string family;
  std::string f;
  std::string weight;
  std::optional<int> q;
  std::optional<int> p;
  int N = 32;
};

void add_complex(std::vector<Cell>& row, Complex z) {
  row.emplace_back(z.real());
  row.emplace_back(z.imag());
}

int cmd_gf(const GfArgs& a, double tol, Report& report) {
  if (a.N < 1 || static_cast<std::size_t>(a.N) > kMaxSeriesOrder) {
    throw InvalidParameter(
        fmt::format("--N must be in 1..{}, got {}", kMaxSeriesOrder, a.N));
  }
  if (a.family.empty() && a.f.empty()) throw UsageError("gf needs --family or --f");
  std::optional<CatalogEntry> entry;
  if (!a.family.empty()) entry = require_entry(a.family);
  Sequence f = a.f.empty() ? entry->f : sequence_of(parse_flag("--f", a.f));
  auto N = static_cast<std::size_t>(a.N);
  TruncatedSeries F = series_from_sequence(f, N);

  report.params["family"] = nullable(a.family);
  report.params["f"] = nullable(a.f);
  report.params["N"] = a.N;
  report.params["tol"] = tol;

  TruncatedSeries first;
  TruncatedSeries second;
  std::function<Complex(std::int64_t)> direct;
  if (!a.weight.empty()) {
    if (a.q || a.p) throw UsageError("--q/--p cannot be combined with --weight");
    PeriodicWeight w = weight_from_expression(parse_flag("--weight", a.weight));
    report.params["weight"] = a.weight;
    report.params["weight_values"] = weight_json(w);
    report.columns = {"n",           "filtered_re", "filtered_im", "rotations_re",
                      "rotations_im", "direct_re",  "direct_im",   "abs_err"};
    first = gf_weighted(F, w);
    second = gf_weighted_rotations(F, w);
    direct = [f, w](std::int64_t n) { return brute_S(f, w, n); };
  } else {
    int q = a.q.value_or(entry ? entry->q : 2);
    int p = a.p.value_or(0);
    if (q < 2 || p < 0 || p >= q) {
      throw InvalidParameter(fmt::format("need q >= 2 and 0 <= p < q, got q={} p={}", q, p));
    }
    report.params["q"] = q;
    report.params["p"] = p;
    report.columns = {"n",           "dft_re",    "dft_im",    "decimate_re",
                      "decimate_im", "direct_re", "direct_im", "abs_err"};
    first = gf_S_p_dft(F, q, p);
    second = gf_S_p_decimate(F, q, p);
    direct = [f, q, p](std::int64_t n) { return brute_S_p(f, q, p, n); };
  }

  double worst = 0.0;
  for (std::size_t n = 0; n < N; ++n) {
    Complex d = direct(static_cast<std::int64_t>(n));
    double err = std::max({std::abs(first[n] - d), std::abs(second[n] - d),
                           std::abs(first[n] - second[n])});
    report.note_error(err, relative(err, d));
    worst = std::max(worst, std::isnan(err) ? INFINITY : scaled(err, d));
    std::vector<Cell> row{static_cast<std::int64_t>(n)};
    add_complex(row, first[n]);
    add_complex(row, second[n]);
    add_complex(row, d);
    row.emplace_back(err);
    report.add_row(std::move(row));
  }
  report.passed = worst <= tol;
  return report.passed ? kExitPass : kExitNumeric;
}

// ---------------------------------------------------------------- binomial

struct BinomialArgs {
  int m = 0;
  int q = 2;
  int p = 0;
  std::string h = "one";
};

int cmd_binomial(const BinomialArgs& a, double tol, Report& report) {
  BinomialWeight h;
  if (a.h == "one") {
    h = BinomialWeight::One;
  } else if (a.h == "recip") {
    h = BinomialWeight::ReciprocalShift;
  } else {
    throw UsageError(fmt::format("--h must be 'one' or 'recip', got '{}'", a.h));
  }
  double closed = binomial_progression_sum(a.m, a.q, a.p, h);
  double brute = binomial_progression_brute(a.m, a.q, a.p, h);
  double abs_err = std::abs(closed - brute);
  double rel_err = relative(abs_err, brute);

  report.params["m"] = a.m;
  report.params["q"] = a.q;
  report.params["p"] = a.p;
  report.params["h"] = a.h;
  report.params["tol"] = tol;
  report.columns = {"m", "q", "p", "h", "closed", "brute", "abs_err", "rel_err"};
  report.add_row({static_cast<std::int64_t>(a.m), static_cast<std::int64_t>(a.q),
                  static_cast<std::int64_t>(a.p), a.h, closed, brute, abs_err, rel_err});
  report.note_error(abs_err, rel_err);
  report.passed = rel_err <= tol;
  return report.passed ? kExitPass : kExitNumeric;
}

// ---------------------------------------------------------------- catalog

int cmd_catalog(Report& report) {
  report.columns = {"id", "q", "weight", "closed", "variant", "closed_from", "description"};
  for (const auto& e : catalog()) {
    std::string weight;
    for (const auto& v : e.weight.values()) {
      if (!weight.empty()) weight += ' ';
      weight += format_number(v.real());
    }
    report.add_row({e.id, static_cast<std::int64_t>(e.q), weight,
                    e.closed_S.has_value(), e.closed_S_variant.has_value(),
                    e.closed_from, e.description});
  }
  report.add_row({std::string("binomial"), {}, {}, true, false, std::int64_t{0},
                  std::string("binomial row sums over k = p mod q, h(k) = 1 or 1/(k+1)")});
  return kExitPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Periodic-weighted sums, progression sums and their closed forms."};
  app.footer(kExpressionHelp);
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", g.out_path,
                 "Write the report to PATH (format from .json/.csv unless --format)");
  app.add_option("--tol", g.tol, "Tolerance; overrides " + std::string(kToleranceEnv));

  SumArgs sum_args;
  auto* sum = app.add_subcommand("sum", "Brute S(n) next to the closed or anti-difference value");
  sum->add_option("--family", sum_args.family, "Catalog family id");
  sum->add_option("--weight", sum_args.weight, "Periodic weight g(k) as an expression");
  sum->add_option("--f", sum_args.f, "Summand f(k) as an expression");
  sum->add_option("--n", sum_args.n, "n or lo..hi")->capture_default_str();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  std::string suite_list;
  for (const auto& s : suite_names()) suite_list += (suite_list.empty() ? "" : ", ") + s;
  verify->add_option("--suite", verify_args.suites, "Suite to run (repeatable): " + suite_list);
  verify->add_option("--qmax", verify_args.qmax, "Largest period in the Gauss sweep")
      ->capture_default_str();
  verify->add_flag("--inject-fault", verify_args.inject_fault,
                   "Perturb closed forms to exercise the failure path");
  verify->add_flag("--serial", verify_args.serial, "Run suites on one thread");

  GaussArgs gauss_args;
  auto* gauss = app.add_subcommand("gauss", "Harmonic number at p/q by the finite trigonometric formula");
  gauss->add_option("p", gauss_args.p, "Numerator, 1 <= p < q")->required();
  gauss->add_option("q", gauss_args.q, "Denominator")->required();

  GfArgs gf_args;
  auto* gf = app.add_subcommand("gf", "Compare generating-function routes coefficient by coefficient");
  gf->add_option("--family", gf_args.family, "Catalog family id");
  gf->add_option("--f", gf_args.f, "Summand f(k) as an expression");
  gf->add_option("--weight", gf_args.weight, "Periodic weight; compares weighted series");
  gf->add_option("--q", gf_args.q, "Progression modulus");
  gf->add_option("--p", gf_args.p, "Progression residue");
  gf->add_option("--N", gf_args.N, "Series order")->capture_default_str();

  BinomialArgs bin_args;
  auto* binomial = app.add_subcommand("binomial", "Binomial row sums over a residue class");
  binomial->set_help_flag("--help", "Print this help message and exit");
  binomial->add_option("--m", bin_args.m, "Row index")->required();
  binomial->add_option("--q", bin_args.q, "Modulus")->required();
  binomial->add_option("--p", bin_args.p, "Residue")->required();
  binomial->add_option("--h", bin_args.h, "one or recip")->capture_default_str();

  auto* list = app.add_subcommand("catalog", "List catalog families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  Report report;
  int code = kExitPass;
  try {
    double tol = resolve_tolerance(g);
    if (*sum) {
      report.command = "sum";
      code = cmd_sum(sum_args, tol, report);
    } else if (*verify) {
      report.command = "verify";
      code = cmd_verify(verify_args, g, report, err);
    } else if (*gauss) {
      report.command = "gauss";
      code = cmd_gauss(gauss_args, tol, report);
    } else if (*gf) {
      report.command = "gf";
      code = cmd_gf(gf_args, tol, report);
    } else if (*binomial) {
      report.command = "binomial";
      code = cmd_binomial(bin_args, tol, report);
    } else if (*list) {
      report.command = "catalog";
      code = cmd_catalog(report);
    }
  } catch (const InconsistencyError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Format format = Format::Text;
  if (!g.format.empty()) {
    format = *parse_format(g.format);
  } else if (!g.out_path.empty()) {
    format = format_for_path(g.out_path);
  }
  if (g.out_path.empty()) {
    render(report, format, out);
  } else {
    std::ofstream file(g.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << g.out_path << "' for writing\n";
      return kExitUsage;
    }
    render(report, format, file);
  }
  return code;
}

}  // namespace persum::cli

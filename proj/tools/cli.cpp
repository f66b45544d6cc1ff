#include "cli.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "dilbasis/appendix_bounds.hpp"
#include "dilbasis/criterion.hpp"
#include "dilbasis/dirichlet.hpp"
#include "dilbasis/errors.hpp"
#include "dilbasis/profiles.hpp"
#include "dilbasis/ptrig.hpp"
#include "dilbasis/serialize.hpp"
#include "dilbasis/thresholds.hpp"
#include "dilbasis/torusmin.hpp"
#include "dilbasis/zeta.hpp"
#include "json.hpp"

#ifndef DILBASIS_VERSION
#define DILBASIS_VERSION "unknown"
#endif

namespace dilbasis::cli {

namespace {

// Profile selector shared by coeffs / check / multiplier.
struct ProfileArgs {
  std::string family;
  std::optional<double> param;
  std::optional<double> alpha, beta, p, eps;

  void attach(CLI::App* sub) {
    sub->add_option("--profile", family, "jump | jump-smoothed | trapezoid | cubic | psine")
        ->required()
        ->check(CLI::IsMember({"jump", "jump-smoothed", "trapezoid", "cubic", "psine"}));
    sub->add_option("--param", param, "profile parameter (alpha, beta, p or eps)");
    sub->add_option("--alpha", alpha, "trapezoid parameter");
    sub->add_option("--beta", beta, "cubic parameter");
    sub->add_option("--p", p, "p-sine exponent");
    sub->add_option("--eps", eps, "jump-smoothed exponent");
  }

  ProfileSpec resolve() const {
    auto pick = [&](const std::optional<double>& named, const char* flag) {
      if (named && param) throw std::invalid_argument(std::string("give either --param or ") + flag);
      if (named) return *named;
      if (param) return *param;
      throw std::invalid_argument("profile '" + family + "' needs " + flag + " (or --param)");
    };
    auto none_of = [&](std::initializer_list<std::pair<const std::optional<double>*, const char*>> flags) {
      for (const auto& [opt, name] : flags) {
        if (opt->has_value()) throw std::invalid_argument(std::string(name) + " does not apply to " + family);
      }
    };
    if (family == "jump") {
      none_of({{&param, "--param"}, {&alpha, "--alpha"}, {&beta, "--beta"}, {&p, "--p"}, {&eps, "--eps"}});
      return ProfileSpec::jump();
    }
    if (family == "jump-smoothed") {
      none_of({{&alpha, "--alpha"}, {&beta, "--beta"}, {&p, "--p"}});
      return ProfileSpec::jump_smoothed(pick(eps, "--eps"));
    }
    if (family == "trapezoid") {
      none_of({{&beta, "--beta"}, {&p, "--p"}, {&eps, "--eps"}});
      return ProfileSpec::trapezoid(pick(alpha, "--alpha"));
    }
    if (family == "cubic") {
      none_of({{&alpha, "--alpha"}, {&p, "--p"}, {&eps, "--eps"}});
      return ProfileSpec::cubic(pick(beta, "--beta"));
    }
    none_of({{&alpha, "--alpha"}, {&beta, "--beta"}, {&eps, "--eps"}});
    return ProfileSpec::psine(pick(p, "--p"));
  }
};

struct Common {
  std::string format;
  std::string out_path;
  std::optional<double> tol;
  int grid_n = 0;
  int jobs = 1;
  bool strict = false;
  int digits = 17;

  void attach(CLI::App* sub, bool csv_capable) {
    if (csv_capable) {
      sub->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    } else {
      sub->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));
    }
    sub->add_option("--out", out_path, "output file (default: standard output)");
    sub->add_option("--tol", tol, "tolerance override")->check(CLI::PositiveNumber);
    sub->add_option("--grid-n", grid_n, "torus grid points per axis (0: automatic, else >= 64)")
        ->check(CLI::Range(0, 1 << 20));
    sub->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 1024));
    sub->add_option("--strict", strict)->expected(0)->default_str("false");
    if (csv_capable) sub->add_option("--digits", digits, "significant digits in CSV")->check(CLI::Range(1, 17));
  }

  TorusMinOptions torus() const {
    TorusMinOptions t;
    t.grid_n = grid_n;
    t.jobs = jobs;
    if (grid_n != 0 && grid_n < 64) throw std::invalid_argument("--grid-n must be 0 or >= 64");
    return t;
  }
};

int verdict_code(Verdict v, bool strict) { return strict && v == Verdict::Inconclusive ? kInconclusive : kOk; }

void emit(const Common& c, std::ostream& out, const std::string& text) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open '" + c.out_path + "' for writing");
  f << text;
  if (!f) throw std::runtime_error("failed writing '" + c.out_path + "'");
}

std::string render_table(const Table& t, const std::string& format, int digits) {
  if (format == "json") return to_json(t) + "\n";
  std::ostringstream ss;
  write_csv(ss, t, digits);
  return ss.str();
}

std::string profile_label(const ProfileSpec& s) { return s.name(); }

// ---- subcommands ----------------------------------------------------------

struct CoeffsArgs {
  ProfileArgs profile;
  Common common;
  int jmax = 51;
};

int run_coeffs(const CoeffsArgs& a, std::ostream& out) {
  const auto spec = a.profile.resolve();
  if (a.jmax < 1) throw std::invalid_argument("--jmax must be >= 1");
  PSineQuadratureOptions q;
  if (a.common.tol) q.tolerance = *a.common.tol;
  const CoefficientSeries series(spec, a.jmax, q);
  Table t;
  t.columns = {"j", "coeff"};
  if (spec.has_envelope()) t.columns.push_back("envelope");
  for (int j = 1; j <= a.jmax; ++j) {
    std::vector<double> row{static_cast<double>(j), series.coeff(j)};
    if (spec.has_envelope()) row.push_back(series.envelope(j));
    t.rows.push_back(std::move(row));
  }
  const std::string format = a.common.format.empty() ? "json" : a.common.format;
  if (format == "csv") {
    emit(a.common, out, render_table(t, "csv", a.common.digits));
    return kOk;
  }
  nlohmann::ordered_json j;
  j["profile"] = profile_label(spec);
  j["param"] = spec.param();
  j["jmax"] = a.jmax;
  j["error_estimate"] = series.error_estimate();
  if (spec.has_envelope()) j["envelope_sum"] = series.envelope_sum();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r;
    r["j"] = static_cast<int>(row[0]);
    r["coeff"] = row[1];
    if (row.size() > 2) r["envelope"] = row[2];
    rows.push_back(r);
  }
  j["coefficients"] = rows;
  emit(a.common, out, j.dump(2) + "\n");
  return kOk;
}

struct CheckArgs {
  ProfileArgs profile;
  Common common;
  std::vector<std::int64_t> support{1};
  int k = 0;
  std::optional<std::int64_t> prime;
  bool three_term = false;
};

int run_check(const CheckArgs& a, std::ostream& out) {
  const auto spec = a.profile.resolve();
  if (a.k < 0) throw std::invalid_argument("--k must be >= 0");
  CriterionOptions opts;
  opts.torus = a.common.torus();
  if (a.common.tol) opts.torus.refine_tol = *a.common.tol;

  if (a.three_term) {
    if (spec.kind() != ProfileKind::PSine) throw std::invalid_argument("--three-term needs --profile psine");
    const auto r = psine_three_term_check(spec.param(), a.k, opts.psine);
    emit(a.common, out, to_json(r) + "\n");
    return verdict_code(r.verdict, a.common.strict);
  }
  if (a.prime) {
    const auto r = check_two_term(spec, *a.prime, a.k, opts);
    emit(a.common, out, to_json(r) + "\n");
    return verdict_code(r.verdict, a.common.strict);
  }
  const auto r = check_multi_term(spec, SupportSet(a.support), a.k, opts);
  emit(a.common, out, to_json(r) + "\n");
  return verdict_code(r.verdict, a.common.strict);
}

struct ThresholdArgs {
  Common common;
  std::string name;
  bool all = false;
  int k = -1;
  int d = -1;
};

int run_threshold(const ThresholdArgs& a, std::ostream& out) {
  if (a.all == !a.name.empty()) throw std::invalid_argument("give exactly one of --name and --all");
  if (a.name == "alpha3") {
    const auto w = alpha3_witness(0.04, a.k >= 0 ? a.k : 111);
    emit(a.common, out, to_json(w) + "\n");
    return kOk;
  }
  RecipeOptions opts;
  opts.k = a.k;
  opts.d = a.d;
  if (a.common.tol) opts.tol = *a.common.tol;
  opts.torus = a.common.torus();
  if (a.all) {
    emit(a.common, out, to_json(named_thresholds(opts)) + "\n");
  } else {
    emit(a.common, out, to_json(solve(make_recipe(a.name, opts))) + "\n");
  }
  return kOk;
}

struct ScanArgs {
  Common common;
  std::string figure;
  int n = 200;
  int k_step = 0;
};

int run_scan(const ScanArgs& a, std::ostream& out) {
  FigureOptions opts;
  opts.n = a.n;
  opts.jobs = a.common.jobs;
  opts.k_step = a.k_step;
  if (a.common.tol) opts.tol = *a.common.tol;
  opts.torus = a.common.torus();
  opts.torus.jobs = 1;  // the scan itself is parallel
  const auto table = figure_table(a.figure, opts);
  emit(a.common, out, render_table(table, a.common.format.empty() ? "csv" : a.common.format, a.common.digits));
  return kOk;
}

struct BoundArgs {
  Common common;
  int k = 3;
  std::optional<double> p;
  std::optional<double> lambda;
  std::vector<int> m_minus;
  std::vector<int> m_plus;
  std::string placement = "uniform";
  int grid = 200;
  double p_min = 1.001;
};

int run_bound(const BoundArgs& a, std::ostream& out) {
  if (a.p.has_value() == a.lambda.has_value()) throw std::invalid_argument("give exactly one of --p and --lambda");
  const Placement placement = a.placement == "uniform" ? Placement::Uniform : Placement::UniformInValue;
  if (a.p) {
    const auto r = lower_bound_spk(a.k, *a.p, a.m_minus, a.m_plus, placement);
    emit(a.common, out, to_json(r) + "\n");
  } else {
    const auto r = interval_bound(a.k, *a.lambda, a.m_minus, a.m_plus, a.grid, a.p_min, a.common.jobs, placement);
    emit(a.common, out, to_json(r) + "\n");
  }
  return kOk;
}

struct MultiplierArgs {
  ProfileArgs profile;
  Common common;
  double re = 0.0;
  double im = 0.0;
  int jmax = 100000;
};

int run_multiplier(const MultiplierArgs& a, std::ostream& out) {
  const auto spec = a.profile.resolve();
  if (!(a.re > 0.0)) throw std::invalid_argument("--re must be > 0");
  const std::complex<double> z(a.re, a.im);
  const auto m = eval_multiplier_truncated(spec, z, a.jmax);
  nlohmann::ordered_json j;
  j["profile"] = profile_label(spec);
  j["param"] = spec.param();
  j["z"] = {a.re, a.im};
  j["jmax"] = a.jmax;
  j["value"] = {m.value.real(), m.value.imag()};
  j["tail_bound"] = m.tail_bound;
  if (spec.kind() == ProfileKind::JumpSmoothed) {
    const auto exact = jump_smoothed_multiplier(spec.param(), z);
    j["closed_form"] = {exact.real(), exact.imag()};
  }
  emit(a.common, out, j.dump(2) + "\n");
  return kOk;
}

int run_selftest(std::ostream& out) {
  const auto items = selftest();
  bool ok = true;
  for (const auto& item : items) {
    out << (item.passed ? "PASS " : "FAIL ") << item.name;
    if (!item.detail.empty()) out << "  (" << item.detail << ")";
    out << "\n";
    ok = ok && item.passed;
  }
  return ok ? kOk : kInconclusive;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dilation-system basis criteria, thresholds and coefficient bounds", "dilbasis"};
  app.set_version_flag("--version", DILBASIS_VERSION);
  app.require_subcommand(1);

  CoeffsArgs coeffs;
  auto* c = app.add_subcommand("coeffs", "Fourier sine coefficients and envelope of a profile");
  coeffs.profile.attach(c);
  coeffs.common.attach(c, true);
  c->add_option("--jmax", coeffs.jmax, "largest index");

  CheckArgs check;
  auto* ch = app.add_subcommand("check", "Evaluate the sufficient conditions for a profile");
  check.profile.attach(ch);
  check.common.attach(ch, false);
  ch->add_option("--support", check.support, "support set (must contain 1)");
  ch->add_option("--k", check.k, "number of explicit tail terms");
  ch->add_option("--prime", check.prime, "two-term form on {1, prime, prime^2}");
  ch->add_flag("--three-term", check.three_term, "p-sine three-term form on {1, 3, 9}");

  ThresholdArgs threshold;
  auto* th = app.add_subcommand("threshold", "Solve a named threshold");
  threshold.common.attach(th, false);
  std::vector<std::string> names = recipe_names();
  names.push_back("alpha3");
  th->add_option("--name", threshold.name, "threshold name")->check(CLI::IsMember(names));
  th->add_flag("--all", threshold.all, "solve every named threshold");
  th->add_option("--k", threshold.k, "override the recipe's order");
  th->add_option("--d", threshold.d, "override the recipe's dimension")->check(CLI::IsMember({1, 2}));

  ScanArgs scanargs;
  auto* sc = app.add_subcommand("scan", "Tabulate figure data");
  scanargs.common.attach(sc, true);
  sc->add_option("--figure", scanargs.figure, "figure id")->required()->check(CLI::IsMember(figure_ids()));
  sc->add_option("--n", scanargs.n, "grid size of value scans")->check(CLI::Range(2, 1000000));
  sc->add_option("--k-step", scanargs.k_step, "k spacing of k-sweeps (0: figure default)")->check(CLI::Range(0, 1000));

  BoundArgs bound;
  auto* bo = app.add_subcommand("bound", "Chord/tangent lower bound for an odd p-sine coefficient");
  bound.common.attach(bo, false);
  bo->add_option("--k", bound.k, "odd coefficient index")->required();
  bo->add_option("--p", bound.p, "exponent");
  bo->add_option("--lambda", bound.lambda, "upper end of a p-interval (scan mode)");
  bo->add_option("--m-minus", bound.m_minus, "point counts on decreasing segments")->required();
  bo->add_option("--m-plus", bound.m_plus, "point counts on increasing segments");
  bo->add_option("--placement", bound.placement, "uniform | value")->check(CLI::IsMember({"uniform", "value"}));
  bo->add_option("--grid", bound.grid, "p-grid size in scan mode")->check(CLI::Range(2, 1000000));
  bo->add_option("--p-min", bound.p_min, "lower end of the p-grid in scan mode");

  MultiplierArgs mult;
  auto* mu = app.add_subcommand("multiplier", "Truncated multiplier sum f(j) j^-z");
  mult.profile.attach(mu);
  mult.common.attach(mu, false);
  mu->add_option("--re", mult.re, "Re z")->required();
  mu->add_option("--im", mult.im, "Im z");
  mu->add_option("--jmax", mult.jmax, "truncation index")->check(CLI::Range(1, 100000000));

  auto* st = app.add_subcommand("selftest", "Fast consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << DILBASIS_VERSION << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (c->parsed()) return run_coeffs(coeffs, out);
    if (ch->parsed()) return run_check(check, out);
    if (th->parsed()) return run_threshold(threshold, out);
    if (sc->parsed()) return run_scan(scanargs, out);
    if (bo->parsed()) return run_bound(bound, out);
    if (mu->parsed()) return run_multiplier(mult, out);
    if (st->parsed()) return run_selftest(out);
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << " (achieved error " << e.achieved_error() << ")\n";
    return kNumerical;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  }
  err << app.help();
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"dilbasis"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

// ---- selftest -----------------------------------------------------------------

std::vector<SelftestItem> selftest(const SelftestOptions& opts) {
  std::vector<SelftestItem> items;
  auto add = [&](const std::string& name, auto&& body) {
    SelftestItem item{name};
    try {
      body(item);
    } catch (const std::exception& e) {
      item.passed = false;
      item.detail = e.what();
    }
    items.push_back(item);
  };
  auto near = [](SelftestItem& item, double got, double want, double tol) {
    std::ostringstream ss;
    ss.precision(12);
    ss << "got " << got << ", expected " << want << " +- " << tol;
    item.detail = ss.str();
    item.passed = std::abs(got - want) <= tol;
  };
  const double pi = std::numbers::pi;

  RecipeOptions ropts;
  ropts.zeta3 = opts.zeta3;

  add("alpha0 closed form", [&](SelftestItem& it) {
    const double closed = std::asin(pi * pi / 8.0 - 1.0) / pi;
    const double root = solve(make_recipe("alpha0", ropts)).value;
    near(it, root, closed, 1e-8);
    it.passed = it.passed && std::abs(root - 0.0750835) < 1e-6;
  });
  add("beta0 regression", [&](SelftestItem& it) { near(it, solve(make_recipe("beta0", ropts)).value, 0.159059, 1e-4); });
  add("betaTilde0 regression",
      [&](SelftestItem& it) { near(it, solve(make_recipe("betaTilde0", ropts)).value, 0.180340, 1e-4); });
  add("alpha4 regression", [&](SelftestItem& it) { near(it, solve(make_recipe("alpha4", ropts)).value, 0.0318993, 1e-5); });
  add("alpha3 witness", [&](SelftestItem& it) {
    const auto w = alpha3_witness();
    it.passed = w.holds;
    it.detail = "tail " + format_number(w.tail_sum, 8) + " vs first " + format_number(w.first, 8);
  });
  add("zeta(3)", [&](SelftestItem& it) { near(it, zeta(3.0), 1.2020569031595942854, 1e-14); });
  add("p = 2 trigonometry", [&](SelftestItem& it) {
    const PTrigContext ctx{PExponent(2.0)};
    double worst = std::abs(ctx.pi_p() - pi);
    for (int i = 0; i <= 20; ++i) {
      const double x = pi * i / 20.0;
      worst = std::max(worst, std::abs(ctx.sin(x) - std::sin(x)));
      const double y = i / 20.0;
      worst = std::max(worst, std::abs(ctx.I(y) - 2.0 / pi * std::asin(y)));
    }
    near(it, worst, 0.0, 1e-12);
  });
  add("p = 2 sine coefficients", [&](SelftestItem& it) {
    const auto c = psine_coefficients(2.0, 51);
    double worst = std::abs(c.values[1] - 1.0);
    for (int j = 3; j <= 51; j += 2) worst = std::max(worst, std::abs(c.values[j]));
    near(it, worst, 0.0, 1e-10);
  });
  add("d = 1 minimum modulus", [&](SelftestItem& it) {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> pos(0.05, 2.0), any(-3.0, 3.0);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const double c1 = pos(rng), c2 = any(rng), c3 = pos(rng);
      double grid = std::numeric_limits<double>::infinity();
      constexpr int n = 20000;
      for (int i = 0; i < n; ++i) {
        const std::complex<double> w = std::polar(1.0, 2.0 * pi * i / n);
        grid = std::min(grid, std::abs(c1 + c2 * w + c3 * w * w));
      }
      worst = std::max(worst, std::abs(min_modulus_three_term(c1, c2, c3) - grid));
    }
    near(it, worst, 0.0, 1e-4);
  });
  return items;
}

}  // namespace dilbasis::cli

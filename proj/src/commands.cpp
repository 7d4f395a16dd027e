// Copyright 2026 The fgsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fgsep/commands.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fgsep/bounds.hpp"
#include "fgsep/composer.hpp"
#include "fgsep/detector.hpp"
#include "fgsep/error.hpp"
#include "fgsep/families.hpp"
#include "fgsep/io.hpp"
#include "fgsep/measurements.hpp"

namespace fgsep::cli {

namespace {

std::string num(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::ShapeMismatch:
    case ErrorKind::NotPrime:
    case ErrorKind::RangeError:
    case ErrorKind::NoSignChange:
      return kUsageError;
    default:
      return kValidationFailure;
  }
}

std::vector<ComposedMeasurement> suite_for_dim(int d) {
  return d == 3 ? qutrit_suite() : mub_cyclic_suite(d);
}

BoundValue resolve_bound(const std::string& name, int n, BipartiteDims dims, std::optional<double> kappa) {
  if (name == "best") {
    BoundContext ctx{n, dims.a, dims.b, kappa, false};
    return best_bound(ctx);
  }
  const BoundKind kind = parse_bound_kind(name);
  if (kind == BoundKind::Fngpq && !kappa) throw Error(ErrorKind::ParseError, "--bound fngpq needs --kappa");
  if (kind != BoundKind::Fngpq && kind != BoundKind::Qutrit3 && dims.b != dims.a) {
    // Both subsystem dimensions give a valid bound; use the tighter one.
    BoundValue a = make_bound(kind, n, dims.a, kappa);
    BoundValue b = make_bound(kind, n, dims.b, kappa);
    return a.value <= b.value ? a : b;
  }
  return make_bound(kind, n, dims.a, kappa);
}

io::Json report_to_json(const DetectionReport& r) {
  io::Json per = io::Json::array();
  for (const auto& m : r.per_measurement) {
    per.push_back(io::Json{{"id", m.id}, {"p_max", m.p_max}, {"argmax", m.argmax}});
  }
  io::Json bound{{"name", r.bound.name()}, {"value", r.bound.value}, {"n", r.bound.n}, {"d", r.bound.d}};
  if (r.bound.kappa) bound["kappa"] = *r.bound.kappa;
  return io::Json{{"per_measurement", std::move(per)}, {"sum_pmax", r.sum_pmax}, {"bound", std::move(bound)},
                  {"violated", r.violated}, {"margin", r.margin}, {"verdict", std::string(to_string(r.verdict()))}};
}

void print_report(const DetectionReport& r, std::ostream& out) {
  for (const auto& m : r.per_measurement) {
    out << "  " << m.id << "  p_max=" << num(m.p_max, 12) << "  argmax={";
    for (std::size_t i = 0; i < m.argmax.size(); ++i) out << (i ? "," : "") << m.argmax[i];
    out << "}\n";
  }
  out << "sum_pmax=" << num(r.sum_pmax, 12) << "\n"
      << "bound=" << r.bound.name() << " " << num(r.bound.value, 12) << "\n"
      << "margin=" << num(r.margin, 12) << "\n"
      << "verdict=" << to_string(r.verdict()) << "\n";
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string what;
  int dim = 0;
  int count = 0;
  double mu = 1.0;
  std::string out;
  std::string psi = "mqtr";
  std::string sep = "mixed";
  double s = 0.0;
  int index = 0;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  io::Json doc;
  if (a.what == "mub" || a.what == "mum") {
    const MubSet full = prime_mub_set(a.dim);
    const int count = a.count == 0 ? static_cast<int>(full.size()) : a.count;
    if (count < 1 || count > static_cast<int>(full.size())) {
      throw Error(ErrorKind::RangeError, "--count must lie in [1, " + std::to_string(full.size()) + "]");
    }
    const MubSet mubs(std::vector<Basis>(full.bases().begin(), full.bases().begin() + count));
    doc = a.what == "mub" ? io::to_json(mubs) : io::to_json(smooth_mum(mubs, a.mu));
  } else if (a.what == "state") {
    const int d = a.dim;
    doc = io::to_json(werner_mixture(named_separable(d, a.sep), named_target(d, a.psi), a.s));
  } else if (a.what == "measurement") {
    const auto suite = suite_for_dim(a.dim);
    if (a.index < 0 || a.index >= static_cast<int>(suite.size())) {
      throw Error(ErrorKind::RangeError, "--index must lie in [0, " + std::to_string(suite.size() - 1) + "]");
    }
    doc = io::to_json(suite[a.index]);
  } else {
    throw Error(ErrorKind::ParseError, "unknown generator '" + a.what + "'");
  }
  if (a.out.empty() || a.out == "-") {
    out << doc.dump(1) << '\n';
  } else {
    io::write_file(a.out, doc);
  }
  return kInconclusive;
}

// ---------------------------------------------------------------- validate

int cmd_validate(const std::string& file, const std::string& kind, std::ostream& out) {
  const io::Json doc = io::read_file(file);
  std::optional<io::FileKind> expected;
  if (!kind.empty()) expected = io::parse_file_kind(kind);
  const auto checks = io::validate(doc, expected);
  bool ok = true;
  out << "kind=" << io::to_string(io::kind_of(doc)) << "\n";
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << "  residual=" << num(c.residual, 3)
        << "  threshold=" << num(c.threshold, 3) << "\n";
    ok = ok && c.pass;
  }
  return ok ? kInconclusive : kValidationFailure;
}

// ---------------------------------------------------------------- detect

struct DetectArgs {
  std::string state;
  std::vector<std::string> measurements;
  std::string bound = "best";
  std::optional<double> kappa;
  bool json = false;
};

int cmd_detect(const DetectArgs& a, std::ostream& out) {
  const DensityMatrix rho = io::state_from_json(io::read_file(a.state));
  std::vector<ComposedMeasurement> suite;
  for (const auto& f : a.measurements) suite.push_back(io::measurement_from_json(io::read_file(f)));
  const BoundValue bound = resolve_bound(a.bound, static_cast<int>(suite.size()), rho.dims(), a.kappa);
  const DetectionReport report = evaluate(rho, suite, bound);
  if (a.json) {
    out << report_to_json(report).dump(1) << '\n';
  } else {
    print_report(report, out);
  }
  return report.violated ? kEntangled : kInconclusive;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  std::string family = "werner";
  int dim = 3;
  std::string psi = "mqtr";
  std::string sep = "mixed";
  std::string bound = "best";
  bool bisect = false;
  std::string grid;
  bool csv = false;
  bool all_measurements = false;
  double tol = 1e-8;
};

struct Grid {
  double lo = 0.0;
  double hi = 1.0;
  double step = 0.1;
};

Grid parse_grid(const std::string& spec) {
  Grid g{};
  char tail = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &g.lo, &g.hi, &g.step, &tail) != 3) {
    throw Error(ErrorKind::ParseError, "--grid expects a:b:step");
  }
  if (!(g.lo >= 0.0 && g.hi <= 1.0 && g.lo <= g.hi && g.step > 0.0)) {
    throw Error(ErrorKind::RangeError, "--grid needs 0 <= a <= b <= 1 and step > 0");
  }
  return g;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  if (a.family != "werner") throw Error(ErrorKind::ParseError, "unknown family '" + a.family + "'");
  if (!(a.tol > 0.0)) throw Error(ErrorKind::RangeError, "--tol must be positive");
  const bool has_grid = !a.grid.empty();
  const Grid grid = has_grid ? parse_grid(a.grid) : Grid{};
  const int d = a.dim;
  const Ket psi = named_target(d, a.psi);
  const StateFamily family = werner_family(named_separable(d, a.sep), psi);
  const std::string comment = a.csv ? "# " : "";

  const auto full = suite_for_dim(d);
  std::vector<ComposedMeasurement> suite = full;
  if (!a.all_measurements) {
    suite = select_informative(full, pure_state(psi, BipartiteDims{d, d}));
    if (suite.empty()) {
      out << comment << "no measurement separates the target from uniform; using all " << full.size() << "\n";
      suite = full;
    }
  }
  const int n = static_cast<int>(suite.size());
  BoundValue bound;
  if (a.bound == "best") {
    // Subsets of the verbatim qutrit bases qualify for the three-basis bound.
    bound = best_bound(BoundContext{n, d, d, std::nullopt, d == 3 && n == 3});
  } else {
    bound = resolve_bound(a.bound, n, BipartiteDims{d, d}, std::nullopt);
  }

  out << comment << "measurements:";
  for (const auto& m : suite) out << " " << m.id;
  out << "\n" << comment << "bound=" << bound.name() << " " << num(bound.value, 12) << "\n";

  if (has_grid) {
    out << (a.csv ? "s,sum_pmax,bound,violated" : "s  sum_pmax  bound  violated") << "\n";
    const char* sep = a.csv ? "," : "  ";
    const auto steps = static_cast<long>(std::floor((grid.hi - grid.lo) / grid.step + 1e-9));
    for (long i = 0; i <= steps; ++i) {
      const double s = std::min(grid.hi, grid.lo + static_cast<double>(i) * grid.step);
      const DetectionReport r = evaluate(family(s), suite, bound);
      out << num(s, 10) << sep << num(r.sum_pmax, 12) << sep << num(bound.value, 12) << sep
          << (r.violated ? "true" : "false") << "\n";
    }
  }
  if (a.bisect || !has_grid) {
    try {
      const ThresholdResult t = threshold_bisect(family, suite, bound, a.tol);
      out << comment << "s_star=" << num(t.s_star, 9) << " bracket=[" << num(t.s_low, 12) << ", "
          << num(t.s_high, 12) << "] iterations=" << t.iterations << "\n";
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoSignChange) throw;
      const bool always = evaluate(family(0.0), suite, bound).violated;
      out << comment << (always ? "detection over all of [0,1]" : "no detection over [0,1]") << "\n";
    }
  }
  return kInconclusive;
}

// ---------------------------------------------------------------- seesaw

struct SeesawArgs {
  int dim = 3;
  std::vector<int> indices;
  std::vector<std::string> measurements;
  int restarts = 64;
  std::uint64_t seed = 0;
};

int cmd_seesaw(const SeesawArgs& a, std::ostream& out) {
  std::vector<ComposedMeasurement> suite;
  if (!a.measurements.empty()) {
    for (const auto& f : a.measurements) suite.push_back(io::measurement_from_json(io::read_file(f)));
  } else {
    const auto full = suite_for_dim(a.dim);
    if (a.indices.empty()) {
      suite = full;
    } else {
      for (int i : a.indices) {
        if (i < 0 || i >= static_cast<int>(full.size())) throw Error(ErrorKind::RangeError, "--indices out of range");
        suite.push_back(full[i]);
      }
    }
  }
  SeesawOptions opts;
  opts.restarts = a.restarts;
  opts.seed = a.seed;
  const SeesawResult r = seesaw_max_product(suite, opts);
  out << "measurements:";
  for (const auto& m : suite) out << " " << m.id;
  out << "\nbest_sum=" << num(r.best_sum, 12) << "\nrestarts=" << r.restarts << "\n";
  out << "witness_a=" << io::vector_to_json(r.witness_a.amplitudes()).dump() << "\n";
  out << "witness_b=" << io::vector_to_json(r.witness_b.amplitudes()).dump() << "\n";
  return kInconclusive;
}

// ---------------------------------------------------------------- demo

class Checker {
 public:
  explicit Checker(std::ostream& out) : out_(out) {}

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      out_ << "  CROSS-CHECK FAILED: " << what << "\n";
      failed_ = true;
    }
  }
  bool failed() const { return failed_; }

 private:
  std::ostream& out_;
  bool failed_ = false;
};

int cmd_demo(std::uint64_t seed, std::ostream& out) {
  Checker check(out);
  const int d = 3;
  const BipartiteDims dims{d, d};
  const auto suite = qutrit_suite();
  const Ket psi = zx_entangled(d);
  const Ket phi = diagonal_entangled(d);

  out << "Two-qutrit entanglement detection with cyclically composed MUB measurements\n\n";

  out << "Outcome probabilities on the Z(x)X-aligned maximally entangled state:\n";
  const double expected_pmax[] = {1.0, 1.0, 1.0, 1.0 / 3.0};
  for (std::size_t t = 0; t < suite.size(); ++t) {
    const auto p = measure(suite[t].povm, pure_state(psi, dims));
    out << "  " << suite[t].id << ":";
    for (std::size_t k = 0; k < p.size(); ++k) out << "  " << suite[t].povm.labels()[k] << "=" << fixed(p[k], 4);
    out << "\n";
    check.expect(std::abs(max_of(p).value - expected_pmax[t]) < 1e-10, suite[t].id + " p_max");
  }

  out << "\nOutcome probabilities on (1/sqrt 3) sum_i |ii>:\n";
  for (const auto& m : suite) {
    const auto p = measure(m.povm, pure_state(phi, dims));
    out << "  " << m.id << ":";
    for (std::size_t k = 0; k < p.size(); ++k) out << "  " << m.povm.labels()[k] << "=" << fixed(p[k], 4);
    out << "\n";
    for (double x : p) check.expect(std::abs(x - 1.0 / 3.0) < 1e-10, m.id + " uniform on |ii> state");
  }

  const double q3 = bound_qutrit_three();
  out << "\nSeparability bounds (d = 3):\n"
      << "  fngef  N=3: " << fixed(bound_fngef(3, 3), 4) << "\n"
      << "  fnmim6 N=3: " << fixed(bound_fnmim6(3, 3), 4) << "\n"
      << "  qutrit3 N=3: " << fixed(q3, 4) << "\n"
      << "  fngef  N=4: " << fixed(bound_fngef(4, 3), 4) << "\n"
      << "  fnmim6 N=4: " << fixed(bound_fnmim6(4, 3), 4) << "\n";
  check.expect(std::abs(bound_fngef(3, 3) - (1.0 + 2.0 / std::sqrt(3.0))) < 1e-12, "fngef(3,3) = 1 + 2/sqrt 3");
  check.expect(q3 < bound_fngef(3, 3), "qutrit3 tighter than fngef");

  const StateFamily werner = werner_family(completely_mixed(dims), psi);
  const Transition ppt = ppt_threshold(werner, 1e-9);
  out << "\nPPT threshold (Werner, completely mixed + aligned state): s = " << fixed(ppt.midpoint(), 4) << "\n";
  check.expect(std::abs(ppt.midpoint() - 1.0 / (d + 1)) < 1e-6, "PPT threshold = 1/(d+1)");

  const auto aligned = select_informative(suite, pure_state(psi, dims));
  const BoundValue bound = make_bound(BoundKind::Qutrit3, 3, 3);
  const ThresholdResult mixed = threshold_bisect(werner, aligned, bound);
  const ThresholdResult zz = threshold_bisect(werner_family(classically_correlated_qutrit(), psi), aligned, bound);
  const double closed_form = std::cos(std::numbers::pi / 18.0) / std::sqrt(3.0);
  out << "Detection threshold with " << aligned.size() << " aligned measurements and qutrit3:\n"
      << "  completely mixed background: s > " << fixed(mixed.s_star, 4) << "\n"
      << "  classically correlated background: s > " << fixed(zz.s_star, 4) << "\n";
  check.expect(aligned.size() == 3, "three aligned measurements");
  check.expect(std::abs(mixed.s_star - closed_form) < 1e-6, "threshold matches cos(pi/18)/sqrt 3");
  check.expect(std::abs(zz.s_star - closed_form) < 1e-6, "threshold with classically correlated background");

  bool phi_detected = false;
  const StateFamily phi_family = werner_family(completely_mixed(dims), phi);
  for (int i = 0; i <= 100; ++i) {
    phi_detected = phi_detected || evaluate(phi_family(i / 100.0), suite, make_bound(BoundKind::Fngef, 4, 3)).violated;
  }
  out << "Werner family on the |ii> state: " << (phi_detected ? "detected" : "no detection over [0,1]") << "\n";
  check.expect(!phi_detected, "no detection for the |ii> family");

  SeesawOptions opts;
  opts.seed = seed;
  const SeesawResult ss = seesaw_max_product(aligned, opts);
  out << "See-saw product-state maximum of the aligned sum: " << fixed(ss.best_sum, 6) << " (<= "
      << fixed(q3, 6) << ")\n";
  check.expect(ss.best_sum <= q3 + 1e-9, "see-saw maximum below qutrit3");

  out << (check.failed() ? "\ncross-checks FAILED\n" : "\nall cross-checks passed\n");
  return check.failed() ? kValidationFailure : kInconclusive;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement detection from fine-grained uncertainty bounds", "fgsep"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate MUB/MUM sets, Werner states or suite measurements");
  gen_cmd->add_option("what", gen.what, "mub | mum | state | measurement")->required()
      ->check(CLI::IsMember({"mub", "mum", "state", "measurement"}));
  gen_cmd->add_option("--dim", gen.dim, "Local dimension (prime)")->required();
  gen_cmd->add_option("--count", gen.count, "Number of bases (default d + 1)");
  gen_cmd->add_option("--mu", gen.mu, "MUM smoothing parameter in (0, 1]");
  gen_cmd->add_option("--psi", gen.psi, "Entangled component: mqtr | mqtr1 | phi+");
  gen_cmd->add_option("--sep", gen.sep, "Separable component: mixed | zz");
  gen_cmd->add_option("--s", gen.s, "Mixing weight of the entangled component");
  gen_cmd->add_option("--index", gen.index, "Suite measurement index");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  std::string validate_file;
  std::string validate_kind;
  auto* validate_cmd = app.add_subcommand("validate", "Check a JSON file against its invariants");
  validate_cmd->add_option("file", validate_file)->required();
  validate_cmd->add_option("--kind", validate_kind, "Expected kind");

  DetectArgs detect;
  auto* detect_cmd = app.add_subcommand("detect", "Evaluate the separability condition on a state");
  detect_cmd->add_option("--state", detect.state)->required();
  detect_cmd->add_option("--measurements", detect.measurements, "Composed POVM files")->required();
  detect_cmd->add_option("--bound", detect.bound, "fngef | fnmim6 | fngpq | qutrit3 | best");
  detect_cmd->add_option("--kappa", detect.kappa, "MUM efficiency for fngpq");
  detect_cmd->add_flag("--json", detect.json, "Machine-readable report");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Scan or bisect a one-parameter state family");
  sweep_cmd->add_option("--family", sweep.family);
  sweep_cmd->add_option("--dim", sweep.dim);
  sweep_cmd->add_option("--psi", sweep.psi, "mqtr | mqtr1 | phi+");
  sweep_cmd->add_option("--sep", sweep.sep, "mixed | zz");
  sweep_cmd->add_option("--bound", sweep.bound, "fngef | fnmim6 | qutrit3 | best");
  sweep_cmd->add_flag("--bisect", sweep.bisect);
  sweep_cmd->add_option("--grid", sweep.grid, "a:b:step");
  sweep_cmd->add_option("--tol", sweep.tol, "Bisection tolerance on s");
  sweep_cmd->add_flag("--csv", sweep.csv);
  sweep_cmd->add_flag("--all-measurements", sweep.all_measurements,
                      "Keep measurements that are uniform on the target state");

  SeesawArgs seesaw;
  auto* seesaw_cmd = app.add_subcommand("seesaw", "Lower-bound the product-state maximum of a suite");
  seesaw_cmd->add_option("--dim", seesaw.dim);
  seesaw_cmd->add_option("--indices", seesaw.indices, "Suite measurement indices");
  seesaw_cmd->add_option("--measurements", seesaw.measurements, "Composed POVM files");
  seesaw_cmd->add_option("--restarts", seesaw.restarts);
  seesaw_cmd->add_option("--seed", seesaw.seed);

  std::uint64_t demo_seed = 0;
  auto* demo_cmd = app.add_subcommand("demo", "Two-qutrit reproduction run");
  demo_cmd->add_option("--seed", demo_seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*validate_cmd) return cmd_validate(validate_file, validate_kind, out);
    if (*detect_cmd) return cmd_detect(detect, out);
    if (*sweep_cmd) return cmd_sweep(sweep, out);
    if (*seesaw_cmd) return cmd_seesaw(seesaw, out);
    if (*demo_cmd) return cmd_demo(demo_seed, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace fgsep::cli

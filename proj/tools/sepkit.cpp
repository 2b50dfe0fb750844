// sepkit — separability tests for bipartite density matrices via extended
// correlation tensors.
//
// Subcommands:
//   detect     evaluate one criterion on one state; exit 2 if entangled,
//              0 if inconclusive
//   threshold  bisection thresholds of a criterion over a state family
//   sweep      grid sweep over (n, y, p) with x = alpha*y + beta, CSV output
//   witness    build the optimal witness for a state (Hermitian bases only)
//   reproduce  recompute the shipped reference benchmarks
//
// Exit codes: 0 success / inconclusive, 2 entangled (detect only), 1 error.
// SEPKIT_THREADS caps the worker pool used by sweeps and searches.

#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sepkit/io.hpp"
#include "sepkit/reproduce.hpp"
#include "sepkit/search.hpp"
#include "sepkit/witness.hpp"

namespace {

using namespace sepkit;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitEntangled = 2;

struct StateOptions {
  std::string state_path;
  std::string family;
  double p = 0.0;
  int d = 3;
};

struct CriterionOptions {
  std::string preset_name;
  std::string basis = "gm";  // gm | hw
  double kappa = 0.0;        // 0 = basis default
  std::string convention = "plain";
  double x = 0.0;
  double y = 0.0;
  int n = 1;
};

void add_state_options(CLI::App* cmd, StateOptions& opts,
                       bool require_file) {
  if (require_file) {
    cmd->add_option("--state", opts.state_path,
                    "path to a state JSON file {dA, dB, re[, im]}")
        ->required();
    return;
  }
  CLI::Option* state = cmd->add_option("--state", opts.state_path,
                                       "path to a state JSON file");
  CLI::Option* family = cmd->add_option(
      "--family", opts.family, "named family: tiles | isotropic | werner");
  CLI::Option* p =
      cmd->add_option("--p", opts.p, "family mixing parameter");
  cmd->add_option("--d", opts.d, "local dimension for isotropic/werner")
      ->check(CLI::Range(2, 16));
  family->excludes(state);
  p->needs(family);
}

void add_criterion_options(CLI::App* cmd, CriterionOptions& opts,
                           bool allow_preset) {
  if (allow_preset)
    cmd->add_option("--preset", opts.preset_name,
                    "ccnr | sarbicki | dv | li | shen | thm1-hw | prop1-hw");
  cmd->add_option("--basis", opts.basis, "operator basis: gm | hw")
      ->check(CLI::IsMember({"gm", "hw"}));
  cmd->add_option("--kappa", opts.kappa,
                  "orthogonality constant (default: basis native)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--convention", opts.convention,
                  "coefficient convention: plain | hatted")
      ->check(CLI::IsMember({"plain", "hatted"}));
  cmd->add_option("--x", opts.x, "row padding weight")
      ->check(CLI::Range(0.0, 1e6));
  cmd->add_option("--y", opts.y, "column padding weight")
      ->check(CLI::Range(0.0, 1e6));
  cmd->add_option("--n", opts.n, "padding replication count")
      ->check(CLI::Range(1, 10000));
}

DensityMatrix resolve_state(const StateOptions& opts) {
  if (!opts.state_path.empty()) return load_state_json(opts.state_path);
  if (opts.family.empty())
    throw std::invalid_argument("need either --state or --family");
  const FamilySpec spec{family_from_name(opts.family),
                        opts.family == "tiles" ? 3 : opts.d};
  return make_state(spec, opts.p);
}

OperatorBasis resolve_basis(const std::string& kind, int d, double kappa) {
  OperatorBasis basis =
      kind == "hw" ? heisenberg_weyl_basis(d) : gell_mann_basis(d);
  if (kappa > 0.0 && kappa != basis.kappa) basis = rescaled(basis, kappa);
  return basis;
}

Criterion resolve_criterion(const CriterionOptions& opts, int da, int db) {
  if (!opts.preset_name.empty())
    return preset(opts.preset_name, da, db, opts.x, opts.y, opts.n);
  Criterion criterion;
  criterion.name = opts.basis == "hw" ? "custom-hw" : "custom-gm";
  criterion.basis_a = resolve_basis(opts.basis, da, opts.kappa);
  criterion.basis_b = resolve_basis(opts.basis, db, opts.kappa);
  criterion.params = {opts.x, opts.y, opts.n,
                      opts.convention == "hatted" ? Convention::Hatted
                                                  : Convention::Plain};
  return criterion;
}

void emit(const nlohmann::json& doc, const std::string& out_path) {
  if (out_path.empty())
    std::cout << doc.dump(2) << "\n";
  else
    write_text_file(out_path, doc.dump(2) + "\n");
}

int run_detect(const StateOptions& state_opts,
               const CriterionOptions& criterion_opts,
               const std::string& out_path) {
  const DensityMatrix rho = resolve_state(state_opts);
  const Criterion criterion =
      resolve_criterion(criterion_opts, rho.dim_a(), rho.dim_b());
  const CriterionReport report = evaluate(rho, criterion);
  emit(to_json(report), out_path);
  return report.verdict == Verdict::Entangled ? kExitEntangled : kExitOk;
}

int run_threshold(const std::string& family, int d,
                  const CriterionOptions& criterion_opts, double tolerance,
                  const std::string& out_path) {
  const FamilySpec spec{family_from_name(family), family == "tiles" ? 3 : d};
  const int dim = spec.family == Family::Tiles ? 3 : spec.d;
  const Criterion criterion = resolve_criterion(criterion_opts, dim, dim);
  const std::vector<ThresholdResult> results =
      find_threshold(spec, criterion, tolerance);
  nlohmann::json doc;
  doc["family"] = family;
  doc["d"] = dim;
  doc["criterion"] = criterion.name;
  doc["tolerance"] = tolerance;
  doc["results"] = to_json(results);
  emit(doc, out_path);
  return kExitOk;
}

std::vector<double> parse_grid(const std::string& text) {
  // "lo:hi:count" inclusive grid
  double lo = 0.0, hi = 0.0;
  int count = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d", &lo, &hi, &count) != 3 ||
      count < 2)
    throw std::invalid_argument("grid spec must be lo:hi:count with count>=2");
  return linspace(lo, hi, count);
}

int run_sweep(const std::string& family, int d,
              const CriterionOptions& criterion_opts,
              const std::string& n_set_text, const std::string& x_rule_text,
              const std::string& y_grid_text, const std::string& p_grid_text,
              const std::string& out_path) {
  const FamilySpec spec{family_from_name(family), family == "tiles" ? 3 : d};
  const int dim = spec.family == Family::Tiles ? 3 : spec.d;
  const Criterion base = resolve_criterion(criterion_opts, dim, dim);

  std::vector<int> n_set;
  {
    std::string token;
    std::istringstream stream(n_set_text);
    while (std::getline(stream, token, ','))
      n_set.push_back(std::stoi(token));
    if (n_set.empty())
      throw std::invalid_argument("--n-set must list at least one n");
  }
  XRule rule;
  if (std::sscanf(x_rule_text.c_str(), "%lf,%lf", &rule.alpha, &rule.beta) <
      1)
    throw std::invalid_argument("--x-rule must be alpha[,beta]");

  const std::vector<SweepRow> rows =
      grid_sweep(spec, base, n_set, rule, parse_grid(y_grid_text),
                 parse_grid(p_grid_text));
  write_sweep_csv(out_path, rows);
  std::cout << "wrote " << rows.size() << " rows to " << out_path << "\n";
  return kExitOk;
}

int run_witness(const StateOptions& state_opts,
                const CriterionOptions& criterion_opts,
                const std::string& out_path) {
  const DensityMatrix rho = resolve_state(state_opts);
  if (criterion_opts.basis == "hw")
    throw std::invalid_argument(
        "witness needs a Hermitian basis; use --basis gm --kappa <value> "
        "(e.g. --kappa equal to the Heisenberg-Weyl kappa d) for an "
        "equivalent evaluation");
  const OperatorBasis basis_a =
      resolve_basis(criterion_opts.basis, rho.dim_a(), criterion_opts.kappa);
  const OperatorBasis basis_b =
      resolve_basis(criterion_opts.basis, rho.dim_b(), criterion_opts.kappa);
  const TensorParams params{criterion_opts.x, criterion_opts.y,
                            criterion_opts.n, Convention::Plain};
  const Witness witness = optimal_witness(rho, basis_a, basis_b, params);
  if (!out_path.empty()) save_witness_json(witness, out_path);
  nlohmann::json doc;
  doc["expectation"] = round_sig(expectation(witness, rho));
  doc["bound"] = round_sig(witness.bound);
  if (!out_path.empty()) doc["witness"] = out_path;
  std::cout << doc.dump(2) << "\n";
  return kExitOk;
}

int run_reproduce(const std::string& target, const std::string& outdir) {
  const ReproduceOutcome outcome = reproduce(target, outdir);
  for (const std::string& line : outcome.lines) std::cout << line << "\n";
  std::cout << (outcome.passed ? "reproduce: all checks passed"
                               : "reproduce: CHECKS FAILED")
            << "\n";
  return outcome.passed ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "separability tests for bipartite states via extended correlation "
      "tensors"};
  app.require_subcommand(1);

  StateOptions detect_state, witness_state;
  CriterionOptions detect_criterion, threshold_criterion, sweep_criterion,
      witness_criterion;
  std::string out_path, threshold_family = "tiles", sweep_family = "tiles";
  std::string n_set = "1", x_rule = "1,0", y_grid = "0:1:11",
              p_grid = "0:1:11", sweep_out = "sweep.csv";
  std::string reproduce_target = "all", reproduce_outdir = "reproduce-out";
  int threshold_d = 3, sweep_d = 3;
  double tolerance = 1e-6;
  std::string threshold_out, witness_out;

  CLI::App* detect = app.add_subcommand(
      "detect", "evaluate a criterion on a state (exit 2 if entangled)");
  add_state_options(detect, detect_state, false);
  add_criterion_options(detect, detect_criterion, true);
  detect->add_option("--out", out_path, "write the report JSON here");

  CLI::App* threshold = app.add_subcommand(
      "threshold", "bisection detection thresholds over a family");
  threshold->add_option("--family", threshold_family,
                        "tiles | isotropic | werner")
      ->required();
  threshold->add_option("--d", threshold_d, "local dimension")
      ->check(CLI::Range(2, 16));
  add_criterion_options(threshold, threshold_criterion, true);
  threshold->add_option("--tol", tolerance, "bisection tolerance")
      ->check(CLI::PositiveNumber);
  threshold->add_option("--out", threshold_out, "write result JSON here");

  CLI::App* sweep =
      app.add_subcommand("sweep", "margin grid sweep, CSV output");
  sweep->add_option("--family", sweep_family, "tiles | isotropic | werner")
      ->required();
  sweep->add_option("--d", sweep_d, "local dimension")
      ->check(CLI::Range(2, 16));
  add_criterion_options(sweep, sweep_criterion, true);
  sweep->add_option("--n-set", n_set, "comma-separated n values");
  sweep->add_option("--x-rule", x_rule, "alpha[,beta] for x = alpha*y + beta");
  sweep->add_option("--y-grid", y_grid, "lo:hi:count");
  sweep->add_option("--p-grid", p_grid, "lo:hi:count");
  sweep->add_option("--out", sweep_out, "CSV path");

  CLI::App* witness = app.add_subcommand(
      "witness", "optimal entanglement witness for a state");
  add_state_options(witness, witness_state, true);
  add_criterion_options(witness, witness_criterion, false);
  witness->add_option("--out", witness_out, "write the witness JSON here");

  CLI::App* repro = app.add_subcommand(
      "reproduce", "recompute the shipped reference benchmarks");
  repro->add_option("target", reproduce_target,
                    "table1 | example2 | example3 | figures | all");
  repro->add_option("--outdir", reproduce_outdir, "artifact directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (detect->parsed())
      return run_detect(detect_state, detect_criterion, out_path);
    if (threshold->parsed())
      return run_threshold(threshold_family, threshold_d, threshold_criterion,
                           tolerance, threshold_out);
    if (sweep->parsed())
      return run_sweep(sweep_family, sweep_d, sweep_criterion, n_set, x_rule,
                       y_grid, p_grid, sweep_out);
    if (witness->parsed())
      return run_witness(witness_state, witness_criterion, witness_out);
    if (repro->parsed())
      return run_reproduce(reproduce_target, reproduce_outdir);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

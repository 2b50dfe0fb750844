#include "sepkit/criteria.hpp"

#include <cmath>
#include <stdexcept>

#include "sepkit/matrix_core.hpp"

namespace sepkit {

namespace {

Verdict verdict_from_margin(double margin) {
  return margin < -tol::kVerdict ? Verdict::Entangled : Verdict::Inconclusive;
}

CriterionReport report_for(const DensityMatrix& rho,
                           const OperatorBasis& basis_a,
                           const OperatorBasis& basis_b,
                           const TensorParams& params,
                           const std::string& name) {
  const BlochDecomposition bloch =
      decompose(rho, basis_a, basis_b, params.convention);
  CriterionReport report;
  report.name = name;
  report.lhs = trace_norm(build_extended_tensor(bloch, params));
  report.rhs = criterion_bound(rho.dim_a(), rho.dim_b(), basis_a.kappa,
                               basis_b.kappa, params);
  report.margin = report.rhs - report.lhs;
  report.verdict = verdict_from_margin(report.margin);
  report.params = params;
  report.basis_a = basis_a.name;
  report.basis_b = basis_b.name;
  report.kappa_a = basis_a.kappa;
  report.kappa_b = basis_b.kappa;
  return report;
}

}  // namespace

void validate_params(const TensorParams& params) {
  if (!(params.x >= 0.0) || !std::isfinite(params.x) || !(params.y >= 0.0) ||
      !std::isfinite(params.y))
    throw std::invalid_argument(
        "TensorParams: weights must be finite and nonnegative");
  if (params.n < 1) throw std::invalid_argument("TensorParams: need n >= 1");
}

Matrix build_extended_tensor(const BlochDecomposition& bloch,
                             const TensorParams& params) {
  validate_params(params);
  if (bloch.convention != params.convention)
    throw std::invalid_argument(
        "build_extended_tensor: decomposition and parameters use different "
        "conventions");
  const int da = bloch.basis_a.dim;
  const int db = bloch.basis_b.dim;
  const double ka = bloch.basis_a.kappa;
  const double kb = bloch.basis_b.kappa;
  const int n = params.n;

  double corner, row_weight, col_weight;
  if (params.convention == Convention::Plain) {
    corner = params.x * params.y / std::sqrt(ka * kb * da * db);
    row_weight = params.x / std::sqrt(ka * da);
    col_weight = params.y / std::sqrt(kb * db);
  } else {
    corner = params.x * params.y;
    row_weight = params.x;
    col_weight = params.y;
  }

  const Eigen::Index rows = n + bloch.r.size();
  const Eigen::Index cols = n + bloch.s.size();
  Matrix m(rows, cols);
  m.topLeftCorner(n, n).setConstant(corner);
  for (int a = 0; a < n; ++a) {
    m.row(a).tail(bloch.s.size()) = row_weight * bloch.s.transpose();
    m.col(a).tail(bloch.r.size()) = col_weight * bloch.r;
  }
  m.bottomRightCorner(bloch.r.size(), bloch.s.size()) = bloch.t;
  return m;
}

double theorem1_bound(int dim_a, int dim_b, double kappa_a, double kappa_b,
                      const TensorParams& params) {
  validate_params(params);
  const double fa =
      (params.n * params.x * params.x + dim_a - 1.0) / (kappa_a * dim_a);
  const double fb =
      (params.n * params.y * params.y + dim_b - 1.0) / (kappa_b * dim_b);
  return std::sqrt(fa * fb);
}

double proposition1_bound(int dim_a, int dim_b, double kappa_a,
                          double kappa_b, const TensorParams& params) {
  validate_params(params);
  const double fa = params.n * params.x * params.x +
                    (static_cast<double>(dim_a) * dim_a - dim_a) / kappa_a;
  const double fb = params.n * params.y * params.y +
                    (static_cast<double>(dim_b) * dim_b - dim_b) / kappa_b;
  return std::sqrt(fa * fb);
}

double criterion_bound(int dim_a, int dim_b, double kappa_a, double kappa_b,
                       const TensorParams& params) {
  return params.convention == Convention::Plain
             ? theorem1_bound(dim_a, dim_b, kappa_a, kappa_b, params)
             : proposition1_bound(dim_a, dim_b, kappa_a, kappa_b, params);
}

CriterionReport evaluate(const DensityMatrix& rho,
                         const OperatorBasis& basis_a,
                         const OperatorBasis& basis_b,
                         const TensorParams& params, const std::string& name) {
  validate_params(params);
  return report_for(rho, basis_a, basis_b, params, name);
}

CriterionReport evaluate(const DensityMatrix& rho,
                         const Criterion& criterion) {
  return evaluate(rho, criterion.basis_a, criterion.basis_b, criterion.params,
                  criterion.name);
}

Criterion preset(const std::string& name, int dim_a, int dim_b, double x,
                 double y, int n) {
  Criterion c;
  c.name = name;
  if (name == "ccnr") {
    c.basis_a = rescaled(gell_mann_basis(dim_a), 1.0);
    c.basis_b = rescaled(gell_mann_basis(dim_b), 1.0);
    c.params = {1.0, 1.0, 1, Convention::Plain};
  } else if (name == "sarbicki") {
    c.basis_a = rescaled(gell_mann_basis(dim_a), 1.0);
    c.basis_b = rescaled(gell_mann_basis(dim_b), 1.0);
    c.params = {x, y, 1, Convention::Plain};
  } else if (name == "dv") {
    c.basis_a = gell_mann_basis(dim_a);
    c.basis_b = gell_mann_basis(dim_b);
    c.params = {0.0, 0.0, 1, Convention::Hatted};
  } else if (name == "li") {
    c.basis_a = gell_mann_basis(dim_a);
    c.basis_b = gell_mann_basis(dim_b);
    c.params = {1.0, 1.0, 1, Convention::Hatted};
  } else if (name == "shen") {
    c.basis_a = gell_mann_basis(dim_a);
    c.basis_b = gell_mann_basis(dim_b);
    c.params = {x, y, n, Convention::Hatted};
  } else if (name == "thm1-hw") {
    c.basis_a = heisenberg_weyl_basis(dim_a);
    c.basis_b = heisenberg_weyl_basis(dim_b);
    c.params = {x, y, n, Convention::Plain};
  } else if (name == "prop1-hw") {
    c.basis_a = heisenberg_weyl_basis(dim_a);
    c.basis_b = heisenberg_weyl_basis(dim_b);
    c.params = {x, y, n, Convention::Hatted};
  } else {
    throw std::invalid_argument("preset: unknown name '" + name + "'");
  }
  validate_params(c.params);
  return c;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "ccnr", "sarbicki", "dv", "li", "shen", "thm1-hw", "prop1-hw"};
  return names;
}

CheckReport ppt_check(const DensityMatrix& rho) {
  const RealVector eigs = hermitian_eigenvalues(
      partial_transpose(rho.matrix(), rho.dim_a(), rho.dim_b()));
  CheckReport report;
  report.value = eigs(0);
  report.verdict = report.value < -tol::kVerdict ? Verdict::Entangled
                                                 : Verdict::Inconclusive;
  return report;
}

CheckReport realignment_check(const DensityMatrix& rho) {
  CheckReport report;
  report.value =
      trace_norm(realign(rho.matrix(), rho.dim_a(), rho.dim_b()));
  report.verdict = report.value > 1.0 + tol::kVerdict ? Verdict::Entangled
                                                      : Verdict::Inconclusive;
  return report;
}

}  // namespace sepkit

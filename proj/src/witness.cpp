#include "sepkit/witness.hpp"

#include <cmath>
#include <stdexcept>

#include "sepkit/matrix_core.hpp"

namespace sepkit {

void validate_isometry(const Isometry& iso) {
  const Eigen::Index p = iso.o.rows();
  const Eigen::Index q = iso.o.cols();
  const Matrix gram = p >= q ? Matrix(iso.o.adjoint() * iso.o)
                             : Matrix(iso.o * iso.o.adjoint());
  const Eigen::Index k = std::min(p, q);
  if ((gram - Matrix::Identity(k, k)).cwiseAbs().maxCoeff() > tol::kIsometry)
    throw std::invalid_argument("validate_isometry: O^dag O != I");
}

Isometry optimal_isometry(const Matrix& m) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  Isometry iso;
  if (m.imag().cwiseAbs().maxCoeff() <= tol::kImagResidue * scale) {
    Eigen::JacobiSVD<RealMatrix> svd(
        m.real(), Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.info() != Eigen::Success)
      throw std::runtime_error("optimal_isometry: SVD did not converge");
    const RealMatrix u = svd.matrixU();
    const RealMatrix v = svd.matrixV();
    const Eigen::Index k = std::min(m.rows(), m.cols());
    iso.o = (u.leftCols(k) * v.leftCols(k).transpose()).cast<Complex>();
  } else {
    Eigen::JacobiSVD<Matrix> svd(m,
                                 Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.info() != Eigen::Success)
      throw std::runtime_error("optimal_isometry: SVD did not converge");
    const Eigen::Index k = std::min(m.rows(), m.cols());
    iso.o = svd.matrixU().leftCols(k) * svd.matrixV().leftCols(k).adjoint();
  }
  validate_isometry(iso);
  return iso;
}

double overlap(const Isometry& iso, const Matrix& m) {
  if (iso.o.rows() != m.rows() || iso.o.cols() != m.cols())
    throw std::invalid_argument("overlap: shape mismatch");
  return (iso.o.adjoint() * m).trace().real();
}

Witness build_witness(const Isometry& iso, const OperatorBasis& basis_a,
                      const OperatorBasis& basis_b,
                      const TensorParams& params) {
  validate_params(params);
  if (params.convention != Convention::Plain)
    throw std::invalid_argument(
        "build_witness: witness extraction is defined in the Plain "
        "convention");
  if (!basis_a.hermitian || !basis_b.hermitian)
    throw std::invalid_argument(
        "build_witness: needs Hermitian bases (e.g. Gell-Mann rescaled to "
        "the evaluation kappa)");
  const int da = basis_a.dim;
  const int db = basis_b.dim;
  const int n = params.n;
  const Eigen::Index rows = n + (da * da - 1);
  const Eigen::Index cols = n + (db * db - 1);
  if (iso.o.rows() != rows || iso.o.cols() != cols)
    throw std::invalid_argument("build_witness: isometry has wrong shape");

  const double ka = basis_a.kappa;
  const double kb = basis_b.kappa;
  const double inv = 1.0 / (ka * kb);
  const double head = std::sqrt((n * params.x * params.x + da - 1.0) *
                                (n * params.y * params.y + db - 1.0)) *
                      inv;

  Witness w;
  w.basis_a = basis_a;
  w.basis_b = basis_b;
  w.params = params;
  w.bound = theorem1_bound(da, db, ka, kb, params);
  w.coefficients = Matrix::Zero(da * da, db * db);

  Complex corner_sum = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) corner_sum += std::conj(iso.o(a, b));
  w.coefficients(0, 0) = head - params.x * params.y * inv * corner_sum;
  for (int j = 1; j < db * db; ++j) {
    Complex sum = 0.0;
    for (int a = 0; a < n; ++a) sum += std::conj(iso.o(a, n + j - 1));
    w.coefficients(0, j) = -params.x * inv * sum;
  }
  for (int i = 1; i < da * da; ++i) {
    Complex sum = 0.0;
    for (int b = 0; b < n; ++b) sum += std::conj(iso.o(n + i - 1, b));
    w.coefficients(i, 0) = -params.y * inv * sum;
  }
  for (int i = 1; i < da * da; ++i)
    for (int j = 1; j < db * db; ++j)
      w.coefficients(i, j) = -inv * std::conj(iso.o(n + i - 1, n + j - 1));

  w.op = Matrix::Zero(da * db, da * db);
  for (int i = 0; i < da * da; ++i)
    for (int j = 0; j < db * db; ++j) {
      if (w.coefficients(i, j) == Complex(0.0)) continue;
      w.op += w.coefficients(i, j) * kron(basis_a.ops[i], basis_b.ops[j]);
    }
  if ((w.op - w.op.adjoint()).cwiseAbs().maxCoeff() > tol::kHermiticity)
    throw std::runtime_error("build_witness: assembled operator not Hermitian");
  return w;
}

Witness optimal_witness(const DensityMatrix& rho,
                        const OperatorBasis& basis_a,
                        const OperatorBasis& basis_b,
                        const TensorParams& params) {
  if (params.convention != Convention::Plain)
    throw std::invalid_argument(
        "optimal_witness: witness extraction is defined in the Plain "
        "convention");
  const BlochDecomposition bloch =
      decompose(rho, basis_a, basis_b, Convention::Plain);
  const Matrix m = build_extended_tensor(bloch, params);
  return build_witness(optimal_isometry(m), basis_a, basis_b, params);
}

double expectation(const Witness& witness, const DensityMatrix& rho) {
  if (witness.op.rows() != rho.matrix().rows())
    throw std::invalid_argument("expectation: dimension mismatch");
  const Complex value = (witness.op * rho.matrix()).trace();
  if (std::abs(value.imag()) > tol::kImagResidue)
    throw std::runtime_error("expectation: nonreal witness expectation");
  return value.real();
}

}  // namespace sepkit

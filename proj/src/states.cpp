#include "sepkit/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "sepkit/matrix_core.hpp"
#include "sepkit/rng.hpp"

namespace sepkit {

namespace {

void check_probability(double p, double lo, double hi, const char* who) {
  if (!(p >= lo && p <= hi))
    throw std::invalid_argument(std::string(who) +
                                ": mixing parameter out of range");
}

Vector normalized_gaussian_vector(int d, Stream& stream) {
  Vector v(d);
  for (int i = 0; i < d; ++i) v(i) = stream.complex_normal();
  return v / v.norm();
}

Matrix pure_product_matrix(int da, int db, Stream& stream) {
  const Vector a = normalized_gaussian_vector(da, stream);
  const Vector b = normalized_gaussian_vector(db, stream);
  const Vector ab = kron(a, b);
  return ab * ab.adjoint();
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix m, int dim_a, int dim_b)
    : m_(std::move(m)), da_(dim_a), db_(dim_b) {
  if (da_ < 1 || db_ < 1 || m_.rows() != m_.cols() ||
      m_.rows() != static_cast<Eigen::Index>(da_) * db_)
    throw std::invalid_argument("DensityMatrix: shape does not match (dA, dB)");
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > tol::kHermiticity)
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  if (std::abs(m_.trace() - Complex(1.0)) > tol::kTraceOne)
    throw std::invalid_argument("DensityMatrix: trace != 1");
  const RealVector eigs = hermitian_eigenvalues(m_);
  if (eigs(0) < tol::kPsdFloor)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue");
}

DensityMatrix tiles_state() {
  auto ket = [](int i) {
    Vector v = Vector::Zero(3);
    v(i) = 1.0;
    return v;
  };
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<Vector> psi;
  psi.push_back(inv_sqrt2 * kron(ket(0), Vector(ket(0) - ket(1))));
  psi.push_back(inv_sqrt2 * kron(Vector(ket(0) - ket(1)), ket(2)));
  psi.push_back(inv_sqrt2 * kron(ket(2), Vector(ket(1) - ket(2))));
  psi.push_back(inv_sqrt2 * kron(Vector(ket(1) - ket(2)), ket(0)));
  psi.push_back(kron(Vector(ket(0) + ket(1) + ket(2)),
                     Vector(ket(0) + ket(1) + ket(2))) /
                3.0);
  Matrix m = Matrix::Identity(9, 9);
  for (const Vector& v : psi) m -= v * v.adjoint();
  return DensityMatrix(m / 4.0, 3, 3);
}

DensityMatrix white_noise_mix(const DensityMatrix& rho, double p) {
  check_probability(p, 0.0, 1.0, "white_noise_mix");
  const int dim = rho.dim();
  Matrix m = ((1.0 - p) / dim) * Matrix::Identity(dim, dim) +
             p * rho.matrix();
  return DensityMatrix(std::move(m), rho.dim_a(), rho.dim_b());
}

DensityMatrix isotropic_state(int d, double p) {
  if (d < 2) throw std::invalid_argument("isotropic_state: need d >= 2");
  check_probability(p, 0.0, 1.0, "isotropic_state");
  return white_noise_mix(max_entangled(d), p);
}

DensityMatrix werner_state(int d, double p) {
  if (d < 2) throw std::invalid_argument("werner_state: need d >= 2");
  check_probability(p, -1.0, 1.0, "werner_state");
  const int dim = d * d;
  Matrix swap = Matrix::Zero(dim, dim);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) swap(i * d + j, j * d + i) = 1.0;
  Matrix m = ((d - p) * Matrix::Identity(dim, dim) + (d * p - 1.0) * swap) /
             (static_cast<double>(d) * d * d - d);
  return DensityMatrix(std::move(m), d, d);
}

DensityMatrix max_entangled(int d) {
  if (d < 2) throw std::invalid_argument("max_entangled: need d >= 2");
  Vector v = Vector::Zero(d * d);
  for (int i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(d);
  return DensityMatrix(v * v.adjoint(), d, d);
}

DensityMatrix random_density(int dim_a, int dim_b, std::uint64_t seed) {
  if (dim_a < 1 || dim_b < 1)
    throw std::invalid_argument("random_density: bad dimensions");
  const int dim = dim_a * dim_b;
  Stream stream(seed);
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = stream.complex_normal();
  Matrix m = g * g.adjoint();
  m /= m.trace();
  return DensityMatrix(std::move(m), dim_a, dim_b);
}

DensityMatrix random_pure_product(int dim_a, int dim_b, std::uint64_t seed) {
  if (dim_a < 1 || dim_b < 1)
    throw std::invalid_argument("random_pure_product: bad dimensions");
  Stream stream(seed);
  return DensityMatrix(pure_product_matrix(dim_a, dim_b, stream), dim_a,
                       dim_b);
}

DensityMatrix random_separable(int dim_a, int dim_b, int k,
                               std::uint64_t seed) {
  if (dim_a < 1 || dim_b < 1)
    throw std::invalid_argument("random_separable: bad dimensions");
  if (k < 1) throw std::invalid_argument("random_separable: need k >= 1");
  Stream stream(seed);
  // Flat Dirichlet weights from normalized exponentials, drawn first so the
  // per-term draws line up for any fixed k.
  std::vector<double> weights(k);
  double total = 0.0;
  for (int i = 0; i < k; ++i) {
    weights[i] = -std::log(1.0 - stream.uniform());
    total += weights[i];
  }
  Matrix m = Matrix::Zero(dim_a * dim_b, dim_a * dim_b);
  for (int i = 0; i < k; ++i)
    m += (weights[i] / total) * pure_product_matrix(dim_a, dim_b, stream);
  return DensityMatrix(std::move(m), dim_a, dim_b);
}

}  // namespace sepkit

#include "sepkit/bloch.hpp"

#include <cmath>
#include <stdexcept>

#include "sepkit/matrix_core.hpp"

namespace sepkit {

namespace {

// Tr((A (x) B)^dag rho) accumulated without forming the Kronecker product:
// sum_{a,b,a',b'} conj(A(a,a')) conj(B(b,b')) rho((a,b),(a',b')).
Complex product_pairing(const Matrix& a, const Matrix& b, const Matrix& rho,
                        int da, int db) {
  Complex total = 0.0;
  for (int i = 0; i < da; ++i)
    for (int k = 0; k < da; ++k) {
      const Complex ca = std::conj(a(i, k));
      if (ca == Complex(0.0)) continue;
      for (int j = 0; j < db; ++j)
        for (int l = 0; l < db; ++l)
          total += ca * std::conj(b(j, l)) * rho(i * db + j, k * db + l);
    }
  return total;
}

}  // namespace

BlochDecomposition decompose(const DensityMatrix& rho,
                             const OperatorBasis& basis_a,
                             const OperatorBasis& basis_b,
                             Convention convention) {
  const int da = rho.dim_a();
  const int db = rho.dim_b();
  if (basis_a.dim != da || basis_b.dim != db)
    throw std::invalid_argument("decompose: basis dimension mismatch");

  const int na = da * da - 1;
  const int nb = db * db - 1;
  BlochDecomposition bloch;
  bloch.convention = convention;
  bloch.basis_a = basis_a;
  bloch.basis_b = basis_b;
  bloch.r = Vector(na);
  bloch.s = Vector(nb);
  bloch.t = Matrix(na, nb);

  const Matrix& m = rho.matrix();
  const Matrix ida = Matrix::Identity(da, da);
  const Matrix idb = Matrix::Identity(db, db);
  for (int i = 1; i <= na; ++i)
    bloch.r(i - 1) =
        product_pairing(basis_a.ops[i], idb, m, da, db) / basis_a.kappa;
  for (int j = 1; j <= nb; ++j)
    bloch.s(j - 1) =
        product_pairing(ida, basis_b.ops[j], m, da, db) / basis_b.kappa;
  for (int i = 1; i <= na; ++i)
    for (int j = 1; j <= nb; ++j)
      bloch.t(i - 1, j - 1) =
          product_pairing(basis_a.ops[i], basis_b.ops[j], m, da, db) /
          (basis_a.kappa * basis_b.kappa);

  if (convention == Convention::Hatted) {
    bloch.r *= static_cast<double>(da);
    bloch.s *= static_cast<double>(db);
    bloch.t *= static_cast<double>(da) * db;
  }
  return bloch;
}

Matrix reconstruct(const BlochDecomposition& bloch) {
  const BlochDecomposition plain = convention_convert(bloch, Convention::Plain);
  const int da = plain.basis_a.dim;
  const int db = plain.basis_b.dim;
  const Matrix ida = Matrix::Identity(da, da) / static_cast<double>(da);
  const Matrix idb = Matrix::Identity(db, db) / static_cast<double>(db);

  Matrix m = kron(Matrix::Identity(da, da), Matrix::Identity(db, db)) /
             (static_cast<double>(da) * db);
  for (int i = 1; i < da * da; ++i)
    m += plain.r(i - 1) * kron(plain.basis_a.ops[i], idb);
  for (int j = 1; j < db * db; ++j)
    m += plain.s(j - 1) * kron(ida, plain.basis_b.ops[j]);
  for (int i = 1; i < da * da; ++i)
    for (int j = 1; j < db * db; ++j)
      m += plain.t(i - 1, j - 1) *
           kron(plain.basis_a.ops[i], plain.basis_b.ops[j]);
  return m;
}

Vector bloch_vector(const Matrix& rho, const OperatorBasis& basis) {
  const int d = basis.dim;
  if (rho.rows() != d || rho.cols() != d)
    throw std::invalid_argument("bloch_vector: dimension mismatch");
  Vector v(d * d - 1);
  for (int i = 1; i < d * d; ++i)
    v(i - 1) = hs_inner(basis.ops[i], rho) / basis.kappa;
  const double limit =
      std::sqrt((d - 1.0) / (basis.kappa * d)) + tol::kVerdict;
  if (v.norm() > limit)
    throw std::runtime_error(
        "bloch_vector: norm exceeds the pure-state bound; input is not a "
        "valid state");
  return v;
}

BlochDecomposition convention_convert(const BlochDecomposition& bloch,
                                      Convention target) {
  if (bloch.convention == target) return bloch;
  BlochDecomposition out = bloch;
  const double da = bloch.basis_a.dim;
  const double db = bloch.basis_b.dim;
  if (target == Convention::Hatted) {
    out.r *= da;
    out.s *= db;
    out.t *= da * db;
  } else {
    out.r /= da;
    out.s /= db;
    out.t /= da * db;
  }
  out.convention = target;
  return out;
}

}  // namespace sepkit

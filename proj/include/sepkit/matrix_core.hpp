#pragma once

// Dense linear-algebra primitives used by every other module: Kronecker
// products, Hilbert-Schmidt geometry, singular-value machinery, and the two
// index reshuffles that separability tests are built on (partial transpose
// and realignment).
//
// Index conventions, fixed once for the whole library:
//   * bipartite product index (a, b) -> a * dB + b  (A-major, row-major)
//   * partial transpose acts on the B factor:
//       (rho^T_B)_{(i,j),(k,l)} = rho_{(i,l),(k,j)}
//   * realignment maps a dA dB x dA dB matrix to a dA^2 x dB^2 matrix:
//       R(i * dA + k, j * dB + l) = rho_{(i,j),(k,l)}
//     so a product state rho_A (x) rho_B realigns to the rank-one matrix
//     vec_r(rho_A) vec_r(rho_B)^T with row-major vec.
//
// Everything is a free function template over Eigen expressions and returns
// a plain evaluated matrix.

#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "sepkit/types.hpp"

namespace sepkit {

template <typename DerivedA, typename DerivedB>
Matrix kron(const Eigen::MatrixBase<DerivedA>& a,
            const Eigen::MatrixBase<DerivedB>& b) {
  const Matrix bc = b.template cast<Complex>();
  Matrix out(a.rows() * bc.rows(), a.cols() * bc.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * bc.rows(), j * bc.cols(), bc.rows(), bc.cols()) =
          Complex(a(i, j)) * bc;
  return out;
}

template <typename Derived>
Matrix dagger(const Eigen::MatrixBase<Derived>& m) {
  return m.adjoint().template cast<Complex>();
}

// Hilbert-Schmidt inner product <a, b> = Tr(a^dag b); conjugate-linear in the
// first argument. Shapes must agree.
template <typename DerivedA, typename DerivedB>
Complex hs_inner(const Eigen::MatrixBase<DerivedA>& a,
                 const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("hs_inner: shape mismatch");
  return (a.adjoint().template cast<Complex>() * b.template cast<Complex>())
      .trace();
}

// Singular values in nonincreasing order.
template <typename Derived>
RealVector singular_values(const Eigen::MatrixBase<Derived>& m) {
  Eigen::JacobiSVD<Matrix> svd(m.template cast<Complex>());
  if (svd.info() != Eigen::Success)
    throw std::runtime_error("singular_values: SVD did not converge");
  return svd.singularValues();
}

// Trace norm ||m||_1 = sum of singular values.
template <typename Derived>
double trace_norm(const Eigen::MatrixBase<Derived>& m) {
  return singular_values(m).sum();
}

// Eigenvalues of a Hermitian matrix, ascending. Rejects inputs that are not
// Hermitian to the validation tolerance.
template <typename Derived>
RealVector hermitian_eigenvalues(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("hermitian_eigenvalues: matrix not square");
  const Matrix mm = m.template cast<Complex>();
  if ((mm - mm.adjoint()).cwiseAbs().maxCoeff() > tol::kHermiticity)
    throw std::invalid_argument("hermitian_eigenvalues: matrix not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(mm, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigenvalues: solver did not converge");
  return solver.eigenvalues();
}

namespace detail {
inline void check_bipartite_shape(Eigen::Index rows, Eigen::Index cols, int da,
                                  int db, const char* who) {
  if (da < 1 || db < 1 || rows != cols ||
      rows != static_cast<Eigen::Index>(da) * db)
    throw std::invalid_argument(std::string(who) +
                                ": dimensions do not match matrix shape");
}
}  // namespace detail

// Partial transpose on the B factor.
template <typename Derived>
Matrix partial_transpose(const Eigen::MatrixBase<Derived>& m, int da, int db) {
  detail::check_bipartite_shape(m.rows(), m.cols(), da, db,
                                "partial_transpose");
  Matrix out(m.rows(), m.cols());
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j)
      for (int k = 0; k < da; ++k)
        for (int l = 0; l < db; ++l)
          out(i * db + j, k * db + l) = Complex(m(i * db + l, k * db + j));
  return out;
}

// Realignment R(rho): dA^2 x dB^2, see the header comment for the index map.
template <typename Derived>
Matrix realign(const Eigen::MatrixBase<Derived>& m, int da, int db) {
  detail::check_bipartite_shape(m.rows(), m.cols(), da, db, "realign");
  Matrix out(static_cast<Eigen::Index>(da) * da,
             static_cast<Eigen::Index>(db) * db);
  for (int i = 0; i < da; ++i)
    for (int k = 0; k < da; ++k)
      for (int j = 0; j < db; ++j)
        for (int l = 0; l < db; ++l)
          out(i * da + k, j * db + l) = Complex(m(i * db + j, k * db + l));
  return out;
}

}  // namespace sepkit

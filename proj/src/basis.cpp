#include "sepkit/basis.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sepkit/matrix_core.hpp"

namespace sepkit {

namespace {

bool all_hermitian(const std::vector<Matrix>& ops) {
  for (const Matrix& g : ops)
    if ((g - g.adjoint()).cwiseAbs().maxCoeff() > tol::kHermiticity)
      return false;
  return true;
}

std::string basis_name(const char* family, int d, double kappa) {
  std::ostringstream out;
  out << family << "(d=" << d << ",kappa=" << kappa << ")";
  return out.str();
}

}  // namespace

OperatorBasis gell_mann_basis(int d) {
  if (d < 2) throw std::invalid_argument("gell_mann_basis: need d >= 2");
  OperatorBasis basis;
  basis.dim = d;
  basis.kappa = 2.0;
  basis.hermitian = true;
  basis.name = basis_name("gell-mann", d, 2.0);
  basis.ops.reserve(static_cast<std::size_t>(d) * d);

  basis.ops.push_back(std::sqrt(2.0 / d) * Matrix::Identity(d, d));
  // Symmetric off-diagonal pairs.
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      Matrix g = Matrix::Zero(d, d);
      g(j, k) = 1.0;
      g(k, j) = 1.0;
      basis.ops.push_back(g);
    }
  // Antisymmetric off-diagonal pairs.
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      Matrix g = Matrix::Zero(d, d);
      g(j, k) = Complex(0.0, -1.0);
      g(k, j) = Complex(0.0, 1.0);
      basis.ops.push_back(g);
    }
  // Diagonal elements.
  for (int l = 1; l < d; ++l) {
    Matrix g = Matrix::Zero(d, d);
    for (int j = 0; j < l; ++j) g(j, j) = 1.0;
    g(l, l) = -static_cast<double>(l);
    basis.ops.push_back(std::sqrt(2.0 / (l * (l + 1.0))) * g);
  }
  return basis;
}

OperatorBasis heisenberg_weyl_basis(int d) {
  if (d < 2)
    throw std::invalid_argument("heisenberg_weyl_basis: need d >= 2");
  OperatorBasis basis;
  basis.dim = d;
  basis.kappa = static_cast<double>(d);
  basis.name = basis_name("heisenberg-weyl", d, basis.kappa);
  basis.ops.reserve(static_cast<std::size_t>(d) * d);

  const double two_pi = 2.0 * 3.14159265358979323846;
  for (int l = 0; l < d; ++l)
    for (int m = 0; m < d; ++m) {
      Matrix w = Matrix::Zero(d, d);
      for (int k = 0; k < d; ++k)
        w(k, (k + m) % d) = std::polar(1.0, two_pi * k * l / d);
      basis.ops.push_back(w);
    }
  basis.hermitian = all_hermitian(basis.ops);
  return basis;
}

OperatorBasis rescaled(const OperatorBasis& basis, double kappa) {
  if (!(kappa > 0.0))
    throw std::invalid_argument("rescaled: kappa must be positive");
  OperatorBasis out = basis;
  const double factor = std::sqrt(kappa / basis.kappa);
  for (Matrix& g : out.ops) g *= factor;
  out.kappa = kappa;
  std::ostringstream tail;
  const std::string::size_type cut = out.name.find(",kappa=");
  if (cut != std::string::npos) {
    out.name.resize(cut);
    tail << ",kappa=" << kappa << ")";
  } else {
    tail << "@kappa=" << kappa;
  }
  out.name += tail.str();
  return out;
}

void validate_basis(const OperatorBasis& basis) {
  const int d = basis.dim;
  if (d < 2) throw std::invalid_argument("validate_basis: dim < 2");
  const std::size_t count = static_cast<std::size_t>(d) * d;
  if (basis.ops.size() != count)
    throw std::invalid_argument("validate_basis: expected d^2 elements");
  const Matrix g0 = std::sqrt(basis.kappa / d) * Matrix::Identity(d, d);
  if ((basis.ops[0] - g0).cwiseAbs().maxCoeff() > tol::kBasis)
    throw std::invalid_argument(
        "validate_basis: ops[0] != sqrt(kappa/d) * identity");
  for (std::size_t i = 0; i < count; ++i) {
    if (basis.ops[i].rows() != d || basis.ops[i].cols() != d)
      throw std::invalid_argument("validate_basis: element with wrong shape");
    if (i > 0 && std::abs(basis.ops[i].trace()) > tol::kBasis)
      throw std::invalid_argument("validate_basis: element not traceless");
    for (std::size_t j = i; j < count; ++j) {
      const Complex inner = hs_inner(basis.ops[i], basis.ops[j]);
      const Complex expected = (i == j) ? Complex(basis.kappa) : Complex(0.0);
      if (std::abs(inner - expected) > tol::kBasis)
        throw std::invalid_argument(
            "validate_basis: orthogonality relation violated");
    }
  }
  if (basis.hermitian != all_hermitian(basis.ops))
    throw std::invalid_argument("validate_basis: hermitian flag inconsistent");
}

}  // namespace sepkit

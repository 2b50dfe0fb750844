// Operator bases: exact Pauli limit of the Gell-Mann construction, the
// Heisenberg-Weyl commutation/dagger relations, orthogonality under the
// daggered pairing across dimensions, and the rescaling machinery.

#include <doctest.h>

#include <cmath>
#include <complex>

#include "sepkit/basis.hpp"
#include "sepkit/matrix_core.hpp"
#include "sepkit/types.hpp"

using namespace sepkit;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

}  // namespace

TEST_SUITE("basis") {

TEST_CASE("gell-mann at d = 2 is exactly {I, X, Y, Z}") {
  const OperatorBasis basis = gell_mann_basis(2);
  REQUIRE(basis.ops.size() == 4);
  CHECK(basis.kappa == 2.0);
  CHECK(basis.hermitian);

  Matrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  z << 1, 0, 0, -1;
  CHECK(max_abs(basis.ops[0] - Matrix::Identity(2, 2)) == 0.0);
  CHECK(max_abs(basis.ops[1] - x) == 0.0);
  CHECK(max_abs(basis.ops[2] - y) == 0.0);
  CHECK(max_abs(basis.ops[3] - z) == 0.0);
}

TEST_CASE("gell-mann element order at d = 3") {
  const OperatorBasis basis = gell_mann_basis(3);
  REQUIRE(basis.ops.size() == 9);

  // Symmetric pairs come first, in (0,1), (0,2), (1,2) order.
  CHECK(basis.ops[1](0, 1) == Complex(1, 0));
  CHECK(basis.ops[2](0, 2) == Complex(1, 0));
  CHECK(basis.ops[3](1, 2) == Complex(1, 0));
  // Then the antisymmetric pairs with -i above the diagonal.
  CHECK(basis.ops[4](0, 1) == Complex(0, -1));
  CHECK(basis.ops[4](1, 0) == Complex(0, 1));
  CHECK(basis.ops[6](1, 2) == Complex(0, -1));
  // Finally the diagonal elements diag(1,-1,0) and diag(1,1,-2)/sqrt(3).
  CHECK(basis.ops[7](0, 0) == Complex(1, 0));
  CHECK(basis.ops[7](1, 1) == Complex(-1, 0));
  CHECK(std::abs(basis.ops[8](2, 2) - Complex(-2.0 / std::sqrt(3.0), 0)) <
        1e-15);
}

TEST_CASE("heisenberg-weyl entries are shift-and-phase operators") {
  const OperatorBasis basis = heisenberg_weyl_basis(3);
  REQUIRE(basis.ops.size() == 9);
  CHECK(basis.kappa == 3.0);
  CHECK_FALSE(basis.hermitian);
  CHECK(max_abs(basis.ops[0] - Matrix::Identity(3, 3)) == 0.0);

  // W(1, 2) sits at index 1*3 + 2 and maps |k> -> w^k |k><(k+2) mod 3|.
  const Complex w = std::polar(1.0, kTwoPi / 3.0);
  const Matrix& w12 = basis.ops[5];
  CHECK(std::abs(w12(0, 2) - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(w12(1, 0) - w) < 1e-15);
  CHECK(std::abs(w12(2, 1) - w * w) < 1e-15);
  CHECK(std::abs(w12(0, 0)) == 0.0);
}

TEST_CASE("heisenberg-weyl dagger relation W(l,m)^dag = w^{lm} W(-l,-m)") {
  for (int d : {2, 3, 4}) {
    const OperatorBasis basis = heisenberg_weyl_basis(d);
    for (int l = 0; l < d; ++l)
      for (int m = 0; m < d; ++m) {
        const Matrix& w = basis.ops[l * d + m];
        const Matrix& w_inv =
            basis.ops[((d - l) % d) * d + ((d - m) % d)];
        const Complex phase = std::polar(1.0, kTwoPi * l * m / d);
        CHECK(max_abs(dagger(w) - phase * w_inv) < 1e-14);
      }
  }
}

TEST_CASE("heisenberg-weyl orthogonality needs the daggered pairing") {
  const OperatorBasis basis = heisenberg_weyl_basis(3);
  // Tr(W^dag W) = 3, while the naive Tr(W W) vanishes for W(1, 0).
  const Matrix& w10 = basis.ops[3];
  CHECK(std::abs(hs_inner(w10, w10) - Complex(3, 0)) < 1e-14);
  CHECK(std::abs((w10 * w10).trace()) < 1e-14);
}

TEST_CASE("both constructions validate for d = 2..5") {
  for (int d = 2; d <= 5; ++d) {
    CHECK_NOTHROW(validate_basis(gell_mann_basis(d)));
    CHECK_NOTHROW(validate_basis(heisenberg_weyl_basis(d)));
  }
  CHECK_THROWS_AS(gell_mann_basis(1), std::invalid_argument);
  CHECK_THROWS_AS(heisenberg_weyl_basis(0), std::invalid_argument);
}

TEST_CASE("validate_basis rejects tampered bases") {
  OperatorBasis basis = gell_mann_basis(3);
  basis.ops[5] *= 1.01;  // breaks normalization
  CHECK_THROWS_AS(validate_basis(basis), std::invalid_argument);

  basis = gell_mann_basis(3);
  basis.ops[2](0, 0) += 0.05;  // breaks tracelessness
  CHECK_THROWS_AS(validate_basis(basis), std::invalid_argument);

  basis = gell_mann_basis(3);
  basis.hermitian = false;  // flag out of sync with the elements
  CHECK_THROWS_AS(validate_basis(basis), std::invalid_argument);

  basis = gell_mann_basis(3);
  basis.ops.pop_back();  // wrong element count
  CHECK_THROWS_AS(validate_basis(basis), std::invalid_argument);

  basis = gell_mann_basis(3);
  basis.ops[0] = basis.ops[1];  // G_0 must stay the scaled identity
  CHECK_THROWS_AS(validate_basis(basis), std::invalid_argument);
}

TEST_CASE("rescaled changes kappa and keeps orthogonality") {
  for (double kappa : {1.0, 0.5, 6.0}) {
    const OperatorBasis basis = rescaled(gell_mann_basis(3), kappa);
    CHECK(basis.kappa == kappa);
    CHECK(basis.hermitian);
    CHECK_NOTHROW(validate_basis(basis));
    // Elements scale by sqrt(kappa / 2) relative to the parent.
    const double factor = std::sqrt(kappa / 2.0);
    CHECK(max_abs(basis.ops[1] - factor * gell_mann_basis(3).ops[1]) < 1e-15);
  }
  CHECK_THROWS_AS(rescaled(gell_mann_basis(2), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(rescaled(gell_mann_basis(2), -1.0), std::invalid_argument);
}

TEST_CASE("rescaled names advertise the new kappa") {
  const OperatorBasis basis = rescaled(heisenberg_weyl_basis(3), 1.0);
  CHECK(basis.name.find("heisenberg-weyl") != std::string::npos);
  CHECK(basis.name.find("kappa=1") != std::string::npos);
  CHECK(basis.name.find("kappa=3") == std::string::npos);
}

TEST_CASE("rescaling round-trips") {
  const OperatorBasis original = heisenberg_weyl_basis(4);
  const OperatorBasis back = rescaled(rescaled(original, 1.0), 4.0);
  for (std::size_t i = 0; i < original.ops.size(); ++i)
    CHECK(max_abs(back.ops[i] - original.ops[i]) < 1e-15);
  CHECK(back.kappa == original.kappa);
}

}  // TEST_SUITE

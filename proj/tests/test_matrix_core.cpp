// Linear-algebra primitives: Kronecker products, Hilbert-Schmidt pairing,
// singular values, and the partial-transpose / realignment reshuffles.
// Oracles are hand-expanded small matrices and algebraic identities
// ((A(x)B)(C(x)D) = AC (x) BD, product states realigning to rank one, the
// known negative eigenvalue of a transposed Bell state).

#include <doctest.h>

#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "sepkit/matrix_core.hpp"
#include "sepkit/rng.hpp"
#include "sepkit/states.hpp"
#include "sepkit/types.hpp"

using namespace sepkit;

namespace {

Matrix random_matrix(int rows, int cols, std::uint64_t seed) {
  Stream stream(seed);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = stream.complex_normal();
  return m;
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_SUITE("matrix_core") {

TEST_CASE("kron expands a 2x2 pair entry by entry") {
  Matrix a(2, 2), b(2, 2);
  a << Complex(1, 0), Complex(2, 0), Complex(3, 0), Complex(4, 0);
  b << Complex(0, 1), Complex(1, 0), Complex(0, 0), Complex(-1, 0);

  const Matrix k = kron(a, b);
  REQUIRE(k.rows() == 4);
  REQUIRE(k.cols() == 4);
  // Top-left block is 1*b, top-right 2*b, bottom-left 3*b, bottom-right 4*b.
  CHECK(k(0, 0) == Complex(0, 1));
  CHECK(k(0, 2) == Complex(0, 2));
  CHECK(k(1, 1) == Complex(-1, 0));
  CHECK(k(2, 0) == Complex(0, 3));
  CHECK(k(3, 3) == Complex(-4, 0));
}

TEST_CASE("kron satisfies the mixed-product identity") {
  const Matrix a = random_matrix(3, 2, 11);
  const Matrix b = random_matrix(2, 4, 12);
  const Matrix c = random_matrix(2, 3, 13);
  const Matrix d = random_matrix(4, 2, 14);

  const Matrix lhs = kron(a, b) * kron(c, d);
  const Matrix rhs = kron((a * c).eval(), (b * d).eval());
  CHECK(max_abs(lhs - rhs) < 1e-12);
}

TEST_CASE("kron of identities is the identity") {
  const Matrix id6 = kron(Matrix::Identity(2, 2), Matrix::Identity(3, 3));
  CHECK(max_abs(id6 - Matrix::Identity(6, 6)) == 0.0);
}

TEST_CASE("kron accepts real Eigen expressions") {
  Eigen::MatrixXd a(2, 2);
  a << 1, 0, 0, -1;
  const Matrix k = kron(a, Matrix::Identity(2, 2));
  CHECK(k(0, 0) == Complex(1, 0));
  CHECK(k(3, 3) == Complex(-1, 0));
}

TEST_CASE("dagger conjugate-transposes") {
  const Matrix m = random_matrix(3, 2, 21);
  const Matrix d = dagger(m);
  REQUIRE(d.rows() == 2);
  REQUIRE(d.cols() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) CHECK(d(j, i) == std::conj(m(i, j)));
}

TEST_CASE("hs_inner is the daggered trace pairing") {
  const Matrix a = random_matrix(3, 3, 31);
  const Matrix b = random_matrix(3, 3, 32);

  // <a, a> is the squared Frobenius norm, and <a, b> = conj(<b, a>).
  CHECK(std::abs(hs_inner(a, a) - Complex(a.squaredNorm(), 0)) < 1e-12);
  CHECK(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))) < 1e-12);

  // Conjugate-linear in the first slot.
  const Complex c(0.3, -1.7);
  CHECK(std::abs(hs_inner((c * a).eval(), b) - std::conj(c) * hs_inner(a, b)) <
        1e-12);
}

TEST_CASE("hs_inner rejects mismatched shapes") {
  CHECK_THROWS_AS(hs_inner(Matrix::Identity(2, 2), Matrix::Identity(3, 3)),
                  std::invalid_argument);
}

TEST_CASE("singular values of small hand-solved matrices") {
  Matrix ones = Matrix::Constant(2, 2, Complex(1, 0));
  const RealVector sv = singular_values(ones);
  REQUIRE(sv.size() == 2);
  CHECK(sv(0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(sv(1) == doctest::Approx(0.0).epsilon(1e-12));

  Matrix diag = Matrix::Zero(2, 2);
  diag(0, 0) = Complex(3, 0);
  diag(1, 1) = Complex(0, -4);  // singular value |-4i| = 4
  const RealVector sv2 = singular_values(diag);
  CHECK(sv2(0) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(sv2(1) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("singular values are nonincreasing and unitarily invariant") {
  const Matrix m = random_matrix(4, 3, 41);
  const RealVector sv = singular_values(m);
  for (int i = 0; i + 1 < sv.size(); ++i) CHECK(sv(i) >= sv(i + 1));

  // Multiply by the unitary from a QR factorization and compare spectra.
  Eigen::HouseholderQR<Matrix> qr(random_matrix(4, 4, 42));
  const Matrix q = qr.householderQ();
  const RealVector sv2 = singular_values((q * m).eval());
  CHECK((sv - sv2).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("trace norm matches the eigenvalue sum for Hermitian input") {
  Matrix h = random_matrix(4, 4, 51);
  h = ((h + dagger(h)) / 2.0).eval();
  const RealVector eigs = hermitian_eigenvalues(h);
  CHECK(trace_norm(h) ==
        doctest::Approx(eigs.cwiseAbs().sum()).epsilon(1e-12));
}

TEST_CASE("trace norm of a nilpotent block") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = Complex(2, 0);
  CHECK(trace_norm(m) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eigenvalues sorts ascending and validates input") {
  Matrix x(2, 2);
  x << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
  const RealVector eigs = hermitian_eigenvalues(x);
  CHECK(eigs(0) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(eigs(1) == doctest::Approx(1.0).epsilon(1e-12));

  Matrix bad(2, 2);
  bad << Complex(0, 0), Complex(1, 0), Complex(0, 0), Complex(0, 0);
  CHECK_THROWS_AS(hermitian_eigenvalues(bad), std::invalid_argument);
  CHECK_THROWS_AS(hermitian_eigenvalues(random_matrix(2, 3, 52)),
                  std::invalid_argument);
}

TEST_CASE("partial transpose of a product state transposes the B factor") {
  const Matrix rho_a = random_density(3, 1, 61).matrix();
  const Matrix rho_b = random_density(2, 1, 62).matrix();
  const Matrix rho = kron(rho_a, rho_b);

  const Matrix pt = partial_transpose(rho, 3, 2);
  CHECK(max_abs(pt - kron(rho_a, rho_b.transpose().eval())) < 1e-14);
}

TEST_CASE("partial transpose is an involution and preserves the trace") {
  const Matrix rho = random_density(2, 3, 63).matrix();
  const Matrix pt = partial_transpose(rho, 2, 3);
  CHECK(std::abs(pt.trace() - Complex(1, 0)) < 1e-14);
  CHECK(max_abs(partial_transpose(pt, 2, 3) - rho) == 0.0);
}

TEST_CASE("partial transpose of the 2x2 Bell state has eigenvalue -1/2") {
  const Matrix pt = partial_transpose(max_entangled(2).matrix(), 2, 2);
  const RealVector eigs = hermitian_eigenvalues(pt);
  CHECK(eigs(0) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(eigs(1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(eigs(3) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("partial transpose and realign check the bipartite shape") {
  const Matrix m = Matrix::Identity(6, 6);
  CHECK_THROWS_AS(partial_transpose(m, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(realign(m, 4, 2), std::invalid_argument);
  CHECK_THROWS_AS(realign(random_matrix(6, 5, 64), 2, 3),
                  std::invalid_argument);
}

TEST_CASE("realignment of a product state is the rank-one vec outer product") {
  const Matrix rho_a = random_density(2, 1, 71).matrix();
  const Matrix rho_b = random_density(3, 1, 72).matrix();
  const Matrix r = realign(kron(rho_a, rho_b), 2, 3);
  REQUIRE(r.rows() == 4);
  REQUIRE(r.cols() == 9);

  // Row-major vectorizations.
  Vector va(4), vb(9);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) va(i * 2 + k) = rho_a(i, k);
  for (int j = 0; j < 3; ++j)
    for (int l = 0; l < 3; ++l) vb(j * 3 + l) = rho_b(j, l);

  CHECK(max_abs(r - va * vb.transpose()) < 1e-14);
  const RealVector sv = singular_values(r);
  CHECK(sv(1) < 1e-14);  // rank one
}

TEST_CASE("realignment trace norms of reference states") {
  // The realigned maximally mixed state is rank one with singular value 1/d,
  // comfortably below the separability threshold of 1.
  const int d = 3;
  const Matrix mixed = Matrix::Identity(d * d, d * d) / double(d * d);
  CHECK(trace_norm(realign(mixed, d, d)) ==
        doctest::Approx(1.0 / d).epsilon(1e-12));

  // Maximally entangled on 3x3: ||R||_1 = d = 3.
  CHECK(trace_norm(realign(max_entangled(3).matrix(), 3, 3)) ==
        doctest::Approx(3.0).epsilon(1e-12));
}

}  // TEST_SUITE

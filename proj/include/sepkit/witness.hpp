#pragma once

// Entanglement witnesses extracted from a violated tensor criterion.
//
// For any isometry O of the extended tensor's shape, the operator
//   W = sum_ij w_ij G_i^A (x) G_j^B
// with coefficients (Plain convention, Hermitian bases, indices i, j >= 1)
//   w_00 = sqrt((n x^2 + dA - 1)(n y^2 + dB - 1)) / (kA kB)
//          - (x y / (kA kB)) sum_{a,b < n} conj(O_ab)
//   w_0j = -(x / (kA kB)) sum_{a < n} conj(O_{a, n+j-1})
//   w_i0 = -(y / (kA kB)) sum_{b < n} conj(O_{n+i-1, b})
//   w_ij = -(1 / (kA kB)) conj(O_{n+i-1, n+j-1})
// satisfies the duality identity
//   Tr(W rho) = bound - Re Tr(O^dag M(rho))   for every state rho,
// so Tr(W rho) >= bound - ||M(rho)||_1 >= 0 on all separable states, and the
// choice O = U V^dag from the SVD of M(rho*) makes Tr(W rho*) equal the
// criterion margin of rho* — strictly negative exactly when the criterion
// fires.
//
// Construction requires Hermitian bases (so W is Hermitian) and the Plain
// convention; for a Heisenberg-Weyl evaluation, rebuild with a Gell-Mann
// basis rescaled to the same kappa, which leaves the verdict unchanged.

#include "sepkit/basis.hpp"
#include "sepkit/bloch.hpp"
#include "sepkit/criteria.hpp"
#include "sepkit/states.hpp"
#include "sepkit/types.hpp"

namespace sepkit {

struct Isometry {
  Matrix o;  // p x q with O^dag O = I (p >= q) or O O^dag = I (p < q)
};

// Throws if the (co)isometry property fails beyond tol::kIsometry.
void validate_isometry(const Isometry& iso);

// Maximizer of Re Tr(O^dag m) over isometries: U V^dag from the SVD. When m
// is real up to tol::kImagResidue the SVD runs over the reals so the result
// is real and the derived witness manifestly Hermitian.
Isometry optimal_isometry(const Matrix& m);

// Re Tr(O^dag m); equals ||m||_1 at the optimal isometry.
double overlap(const Isometry& iso, const Matrix& m);

struct Witness {
  Matrix coefficients;  // dA^2 x dB^2, entry (i, j) multiplies G_i (x) G_j
  Matrix op;            // assembled (dA dB) x (dA dB) Hermitian operator
  OperatorBasis basis_a;
  OperatorBasis basis_b;
  TensorParams params;
  double bound = 0.0;
};

// Assembles W from an isometry (shape (dA^2+n-1) x (dB^2+n-1)). Requires
// Hermitian bases and Plain-convention parameters; throws otherwise. The
// isometry is taken as given (degenerate maps are allowed for consistency
// probes), only its shape is checked.
Witness build_witness(const Isometry& iso, const OperatorBasis& basis_a,
                      const OperatorBasis& basis_b,
                      const TensorParams& params);

// Witness optimized for rho: decompose, build the extended tensor, take the
// SVD isometry. Its expectation on rho equals the criterion margin.
Witness optimal_witness(const DensityMatrix& rho,
                        const OperatorBasis& basis_a,
                        const OperatorBasis& basis_b,
                        const TensorParams& params);

// Tr(W rho), checked real to tol::kImagResidue.
double expectation(const Witness& witness, const DensityMatrix& rho);

}  // namespace sepkit

#pragma once

// Bloch-type coefficient decompositions over a pair of operator bases.
//
// In the Plain convention a state expands as
//   rho = I/dA (x) I/dB + sum_i r_i G_i^A (x) I_B/dB
//       + sum_j s_j I_A/dA (x) G_j^B + sum_ij t_ij G_i^A (x) G_j^B
// with coefficients recovered through the daggered Hilbert-Schmidt pairing:
//   r_i = Tr((G_i^A (x) I)^dag rho) / kA,  s_j likewise / kB,
//   t_ij = Tr((G_i^A (x) G_j^B)^dag rho) / (kA kB).
// The Hatted convention stores r^ = dA r, s^ = dB s, T^ = dA dB T.
//
// Coefficients are real for Hermitian bases and genuinely complex for the
// Heisenberg-Weyl basis; either way the expansion reproduces rho exactly
// (round-trip accuracy ~1e-15), and the purity identity
//   Tr rho^2 = 1/(dA dB) + kA ||r||^2 + kB ||s||^2 + kA kB ||T||_F^2
// holds in the Plain convention.

#include "sepkit/basis.hpp"
#include "sepkit/states.hpp"
#include "sepkit/types.hpp"

namespace sepkit {

struct BlochDecomposition {
  Vector r;  // length dA^2 - 1, coefficient i-1 pairs with basis_a.ops[i]
  Vector s;  // length dB^2 - 1
  Matrix t;  // (dA^2 - 1) x (dB^2 - 1)
  Convention convention = Convention::Plain;
  OperatorBasis basis_a;
  OperatorBasis basis_b;
};

// Requires basis_a.dim == rho.dim_a() and basis_b.dim == rho.dim_b().
BlochDecomposition decompose(const DensityMatrix& rho,
                             const OperatorBasis& basis_a,
                             const OperatorBasis& basis_b,
                             Convention convention);

// Rebuilds the matrix from the coefficients (not necessarily a valid state if
// the coefficients were edited by hand).
Matrix reconstruct(const BlochDecomposition& bloch);

// Single-system Bloch vector of a d x d density matrix over one basis
// (Plain-convention coefficients of G_1..G_{d^2-1}). For any valid state
// ||v|| <= sqrt((d-1)/(kappa d)), with equality exactly on pure states; the
// bound is enforced as an internal consistency check.
Vector bloch_vector(const Matrix& rho, const OperatorBasis& basis);

// Switches the stored coefficients between Plain and Hatted. Round-trips
// exactly up to floating-point scaling.
BlochDecomposition convention_convert(const BlochDecomposition& bloch,
                                      Convention target);

}  // namespace sepkit

#pragma once

// Traceless orthogonal operator bases {G_0, ..., G_{d^2-1}} of M_d(C) with
//   Tr(G_i^dag G_j) = kappa delta_ij,   G_0 = sqrt(kappa/d) I,
// so G_1..G_{d^2-1} are traceless. The daggered inner product matters: the
// Heisenberg-Weyl elements are unitary but not Hermitian, and only
// Tr(W^dag W') is diagonal on them.
//
// Two constructions ship:
//   * gell_mann_basis(d): the generalized Gell-Mann matrices, kappa = 2,
//     Hermitian; for d = 2 exactly {sqrt(2) I/sqrt(2)... } i.e. {G_0, X, Y, Z}.
//     Element order after G_0: symmetric pairs (j<k, lexicographic), then
//     antisymmetric pairs (same order), then the d-1 diagonal elements.
//   * heisenberg_weyl_basis(d): W(l, m) = sum_k w^{kl} |k><(k+m) mod d| with
//     w = exp(2 pi i / d), kappa = d, index l * d + m, W(0,0) = I. Satisfies
//     W(l, m)^dag = w^{lm} W(-l, -m).
//
// rescaled() rebuilds any basis at a different kappa (elements scale by
// sqrt(kappa'/kappa)); criteria verdicts are invariant under that rescaling,
// but the convention in which parameters are quoted is not, which is why the
// presets fix kappa explicitly.

#include <string>
#include <vector>

#include "sepkit/types.hpp"

namespace sepkit {

struct OperatorBasis {
  int dim = 0;            // d
  double kappa = 0.0;     // orthogonality constant
  bool hermitian = false; // every element Hermitian?
  std::string name;       // e.g. "gell-mann(d=3,kappa=2)"
  std::vector<Matrix> ops;  // d^2 elements, ops[0] = sqrt(kappa/d) I
};

OperatorBasis gell_mann_basis(int d);
OperatorBasis heisenberg_weyl_basis(int d);

// Same basis scaled to a new orthogonality constant.
OperatorBasis rescaled(const OperatorBasis& basis, double kappa);

// Throws std::invalid_argument if the orthogonality relation, the traceless
// property, the fixed G_0, or the element count is violated.
void validate_basis(const OperatorBasis& basis);

}  // namespace sepkit

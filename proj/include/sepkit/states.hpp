#pragma once

// Bipartite density matrices and the state families the toolkit ships with.
//
// DensityMatrix validates on construction (Hermitian, unit trace, positive
// semidefinite up to the pinned tolerances) and carries the bipartition
// (dA, dB) with the A-major product index (a, b) -> a * dB + b.
//
// Families:
//   * tiles_state(): the 3x3 bound entangled state built from the "tiles"
//     unextendible product basis, rho = (I - sum_i |psi_i><psi_i|) / 4. It is
//     PPT, so it is invisible to the partial-transpose test and serves as the
//     standard stress case for correlation-tensor criteria.
//   * white_noise_mix(rho, p) = (1-p)/(dA dB) I + p rho.
//   * isotropic_state(d, p) = (1-p)/d^2 I + p |phi+><phi+|, p in [0, 1].
//   * werner_state(d, p) = ((d-p) I + (dp-1) F) / (d^3 - d), p in [-1, 1],
//     F the swap operator. p equals the swap expectation Tr(rho F), so the
//     state is separable (equivalently PPT) iff p >= 0; tensor criteria
//     detect only the deeper slice p < (2-d)/d.
//   * max_entangled(d) = |phi+><phi+| with |phi+> = sum_i |ii>/sqrt(d).
//
// Random ensembles (all deterministic in the seed, see rng.hpp):
//   * random_density: Ginibre construction G G^dag / Tr.
//   * random_pure_product: |a><a| (x) |b><b| with Gaussian ray vectors.
//   * random_separable: mixture of k pure products with flat Dirichlet
//     weights, separable by construction.

#include <cstdint>

#include "sepkit/types.hpp"

namespace sepkit {

class DensityMatrix {
 public:
  // Throws std::invalid_argument on shape mismatch, non-Hermiticity,
  // trace != 1, or an eigenvalue below the PSD floor.
  DensityMatrix(Matrix m, int dim_a, int dim_b);

  const Matrix& matrix() const { return m_; }
  int dim_a() const { return da_; }
  int dim_b() const { return db_; }
  int dim() const { return da_ * db_; }

 private:
  Matrix m_;
  int da_;
  int db_;
};

DensityMatrix tiles_state();
DensityMatrix white_noise_mix(const DensityMatrix& rho, double p);
DensityMatrix isotropic_state(int d, double p);
DensityMatrix werner_state(int d, double p);
DensityMatrix max_entangled(int d);

DensityMatrix random_density(int dim_a, int dim_b, std::uint64_t seed);
DensityMatrix random_pure_product(int dim_a, int dim_b, std::uint64_t seed);
DensityMatrix random_separable(int dim_a, int dim_b, int k,
                               std::uint64_t seed);

}  // namespace sepkit

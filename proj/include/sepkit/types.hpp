#pragma once

// Shared scalar/matrix aliases and the numerical tolerances used across the
// library. Tolerances are deliberately centralized: verdicts, state
// validation, and the reproduction targets all pin against these constants,
// so changing one here changes it everywhere consistently.

#include <complex>

#include <Eigen/Dense>

namespace sepkit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Verdict of a separability test. The criteria implemented here are
// necessary-for-separability conditions: a violation certifies entanglement,
// while satisfaction proves nothing.
enum class Verdict { Entangled, Inconclusive };

// Normalization convention for Bloch-type coefficients.
//   Plain:  rho = I/dA (x) I/dB + sum_i r_i G_i (x) I/dB
//                + sum_j s_j I/dA (x) G_j + sum_ij t_ij G_i (x) G_j
//   Hatted: r^ = dA r, s^ = dB s, T^ = dA dB T  (the convention in which the
//           de Vicente / Li-Qiao style bounds are usually quoted)
enum class Convention { Plain, Hatted };

namespace tol {

// Maximum entrywise deviation tolerated when validating Hermiticity.
inline constexpr double kHermiticity = 1e-10;
// Smallest eigenvalue accepted as "numerically nonnegative" for states.
inline constexpr double kPsdFloor = -1e-9;
// Trace-one validation for density matrices.
inline constexpr double kTraceOne = 1e-10;
// A criterion reports Entangled only when margin < -kVerdict, so roundoff
// around zero never certifies entanglement.
inline constexpr double kVerdict = 1e-9;
// Decompose -> reconstruct round-trip accuracy.
inline constexpr double kRoundtrip = 1e-10;
// Operator-basis validation (orthogonality relation and fixed first element).
inline constexpr double kBasis = 1e-10;
// Largest imaginary residue tolerated where a quantity must be real
// (witness expectations, overlaps with real isometries).
inline constexpr double kImagResidue = 1e-9;
// Isometry validation: ||O^dag O - I||_max.
inline constexpr double kIsometry = 1e-10;

}  // namespace tol

}  // namespace sepkit

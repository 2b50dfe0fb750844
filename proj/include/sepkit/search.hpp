#pragma once

// Threshold searches and parameter scans over one-parameter state families.
//
// A FamilySpec names a family and its parameter range:
//   tiles      sigma_p = (1-p)/9 I + p * tiles_state(),   p in [0, 1]
//   isotropic  p in [0, 1]
//   werner     p in [-1, 1]
//
// find_threshold locates every boundary of the detected set {p : margin(p) <
// -tol::kVerdict} by a 64-point prescan followed by bisection on each
// sign-change bracket; Werner states can have an interior inconclusive
// interval, so all brackets are refined and returned in increasing p order.
//
// grid_sweep evaluates a criterion template over n in n_set, y in y_grid
// (with x = alpha y + beta) and p in p_grid, in deterministic row order
// (n outer, then y, then p). Rows are computed into index-addressed slots by
// a small worker pool capped by the SEPKIT_THREADS environment variable, so
// the output is identical for any thread count.
//
// optimize_params grid-searches (x, y) for the most negative margin on a
// fixed state, breaking ties toward lexicographically smaller (x, y).

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "sepkit/criteria.hpp"
#include "sepkit/states.hpp"
#include "sepkit/types.hpp"

namespace sepkit {

enum class Family { Tiles, Isotropic, Werner };

struct FamilySpec {
  Family family = Family::Tiles;
  int d = 3;  // local dimension; tiles is fixed at 3x3

  double p_min() const { return family == Family::Werner ? -1.0 : 0.0; }
  double p_max() const { return 1.0; }
};

Family family_from_name(const std::string& name);
std::string family_name(Family family);

DensityMatrix make_state(const FamilySpec& spec, double p);

struct MarginPoint {
  double p = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
};

std::vector<MarginPoint> margin_curve(const FamilySpec& spec,
                                      const Criterion& criterion,
                                      const std::vector<double>& p_grid);

struct ThresholdResult {
  double p_star = 0.0;  // bracket midpoint after refinement
  double p_lo = 0.0;    // final bracket, p_lo < p_hi
  double p_hi = 0.0;
  int iterations = 0;
};

// Empty result means the detected set has no boundary in range (criterion
// either never fires on the family or fires everywhere).
std::vector<ThresholdResult> find_threshold(const FamilySpec& spec,
                                            const Criterion& criterion,
                                            double tolerance = 1e-6);

struct SweepRow {
  int n = 1;
  double x = 0.0;
  double y = 0.0;
  double p = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
};

// x as an affine function of y.
struct XRule {
  double alpha = 1.0;
  double beta = 0.0;
  double x_of(double y) const { return alpha * y + beta; }
};

std::vector<SweepRow> grid_sweep(const FamilySpec& spec,
                                 const Criterion& base,
                                 const std::vector<int>& n_set,
                                 const XRule& rule,
                                 const std::vector<double>& y_grid,
                                 const std::vector<double>& p_grid);

struct OptimizeResult {
  double x = 0.0;
  double y = 0.0;
  double margin = 0.0;
};

OptimizeResult optimize_params(const DensityMatrix& rho,
                               const Criterion& base, int n,
                               const std::vector<double>& x_grid,
                               const std::vector<double>& y_grid);

// Evenly spaced grid including both endpoints (count >= 2).
std::vector<double> linspace(double lo, double hi, int count);

// Worker count resolved from SEPKIT_THREADS (clamped to [1, hardware]).
unsigned worker_threads();

// Runs fn(0..count-1) on the worker pool; order of execution is unspecified,
// so fn must only write state owned by its index.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& fn);

}  // namespace sepkit

// Threshold searches and grid sweeps: bisection against closed-form
// crossings, deterministic row order, the (x, y) grid optimizer, and the
// SEPKIT_THREADS-capped worker pool.

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "sepkit/criteria.hpp"
#include "sepkit/search.hpp"
#include "sepkit/states.hpp"
#include "sepkit/types.hpp"

using namespace sepkit;

namespace {

Criterion gm_sqrt_d(int d) {
  Criterion c;
  c.name = "gm-sqrt-d";
  c.basis_a = gell_mann_basis(d);
  c.basis_b = gell_mann_basis(d);
  c.params = {std::sqrt(double(d)), std::sqrt(double(d)), 2,
              Convention::Plain};
  return c;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("families resolve by name and validate their parameters") {
  for (Family family : {Family::Tiles, Family::Isotropic, Family::Werner})
    CHECK(family_from_name(family_name(family)) == family);
  CHECK_THROWS_AS(family_from_name("ghz"), std::invalid_argument);

  CHECK_THROWS_AS(make_state({Family::Tiles, 4}, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_state({Family::Isotropic, 3}, 1.5),
                  std::invalid_argument);
  CHECK(make_state({Family::Werner, 2}, -1.0).dim() == 4);

  CHECK(FamilySpec{Family::Werner, 3}.p_min() == -1.0);
  CHECK(FamilySpec{Family::Tiles, 3}.p_min() == 0.0);
}

TEST_CASE("linspace hits both endpoints exactly") {
  const std::vector<double> grid = linspace(0.85, 1.0, 31);
  REQUIRE(grid.size() == 31);
  CHECK(grid.front() == 0.85);
  CHECK(grid.back() == 1.0);
  CHECK(grid[1] == doctest::Approx(0.855).epsilon(1e-14));
  CHECK_THROWS_AS(linspace(0.0, 1.0, 1), std::invalid_argument);
}

TEST_CASE("margin_curve matches pointwise evaluation") {
  const FamilySpec spec{Family::Isotropic, 3};
  const Criterion crit = gm_sqrt_d(3);
  const std::vector<double> grid = linspace(0.0, 1.0, 5);
  const std::vector<MarginPoint> curve = margin_curve(spec, crit, grid);
  REQUIRE(curve.size() == 5);
  for (std::size_t i = 0; i < curve.size(); ++i) {
    CHECK(curve[i].p == grid[i]);
    const CriterionReport report = evaluate(make_state(spec, grid[i]), crit);
    CHECK(curve[i].lhs == report.lhs);
    CHECK(curve[i].margin == report.margin);
  }
}

TEST_CASE("find_threshold recovers the isotropic crossing at 1/(d+1)") {
  const FamilySpec spec{Family::Isotropic, 3};
  const std::vector<ThresholdResult> results =
      find_threshold(spec, gm_sqrt_d(3), 1e-7);
  REQUIRE(results.size() == 1);
  CHECK(results[0].p_star == doctest::Approx(0.25).epsilon(1e-6));
  CHECK(results[0].p_hi - results[0].p_lo <= 1e-7);
  CHECK(results[0].p_lo <= results[0].p_star);
  CHECK(results[0].p_star <= results[0].p_hi);
  CHECK(results[0].iterations > 10);

  CHECK_THROWS_AS(find_threshold(spec, gm_sqrt_d(3), 0.0),
                  std::invalid_argument);
}

TEST_CASE("find_threshold locates the werner boundary at (2-d)/d") {
  const std::vector<ThresholdResult> results =
      find_threshold({Family::Werner, 3}, gm_sqrt_d(3), 1e-6);
  REQUIRE(results.size() == 1);
  CHECK(results[0].p_star == doctest::Approx(-1.0 / 3.0).epsilon(1e-5));
}

TEST_CASE("find_threshold reproduces the ccnr tiles threshold") {
  const FamilySpec spec{Family::Tiles, 3};
  const std::vector<ThresholdResult> results =
      find_threshold(spec, preset("ccnr", 3, 3), 1e-5);
  REQUIRE(results.size() == 1);
  CHECK(results[0].p_star == doctest::Approx(0.8897).epsilon(1e-3));
}

TEST_CASE("find_threshold returns empty when nothing crosses") {
  // Isotropic states have vanishing marginal vectors, so with y = 0 the
  // padded tensor is block diagonal and its trace norm tops out at
  // ||T||_1 = 4/3 (p = 1), while the lopsided x = 10 inflates the bound
  // to sqrt(102*2)/6 ~ 2.38: the criterion never fires on this family.
  Criterion blind = gm_sqrt_d(3);
  blind.params.x = 10.0;
  blind.params.y = 0.0;
  blind.params.n = 1;
  const std::vector<ThresholdResult> results =
      find_threshold({Family::Isotropic, 3}, blind, 1e-4);
  CHECK(results.empty());
}

TEST_CASE("grid_sweep enumerates n-outer, y-middle, p-inner") {
  const FamilySpec spec{Family::Isotropic, 2};
  Criterion base = gm_sqrt_d(2);
  const std::vector<int> n_set = {1, 2};
  const std::vector<double> y_grid = {0.5, 1.0, 1.5};
  const std::vector<double> p_grid = {0.2, 0.6};
  const XRule rule{0.5, 0.1};  // x = y/2 + 0.1

  const std::vector<SweepRow> rows =
      grid_sweep(spec, base, n_set, rule, y_grid, p_grid);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0].n == 1);
  CHECK(rows[0].y == 0.5);
  CHECK(rows[0].p == 0.2);
  CHECK(rows[0].x == doctest::Approx(0.35).epsilon(1e-14));
  CHECK(rows[1].p == 0.6);   // p varies fastest
  CHECK(rows[2].y == 1.0);   // then y
  CHECK(rows[6].n == 2);     // n varies slowest
  CHECK(rows[11].y == 1.5);
  CHECK(rows[11].p == 0.6);

  // Each row is a faithful evaluation at its own parameters.
  Criterion check = base;
  check.params.n = rows[7].n;
  check.params.x = rows[7].x;
  check.params.y = rows[7].y;
  const CriterionReport report =
      evaluate(make_state(spec, rows[7].p), check);
  CHECK(rows[7].lhs == report.lhs);
  CHECK(rows[7].margin == report.margin);
}

TEST_CASE("optimize_params picks the deepest margin deterministically") {
  const DensityMatrix rho = white_noise_mix(tiles_state(), 0.885);
  const Criterion base = preset("thm1-hw", 3, 3, 0.0, 0.0, 3);
  const std::vector<double> grid = {1.0 / 81.0, 1.0 / 27.0, 1.0 / 9.0,
                                    1.0 / 3.0,  2.0 / std::sqrt(3.0),
                                    std::sqrt(3.0)};

  const OptimizeResult best = optimize_params(rho, base, 3, grid, grid);
  // The strong symmetric points beat the published-style tiny weights here.
  CHECK(best.margin < -1e-5);
  CHECK(best.x > 1.0);

  Criterion chosen = base;
  chosen.params.x = best.x;
  chosen.params.y = best.y;
  chosen.params.n = 3;
  CHECK(evaluate(rho, chosen).margin == best.margin);

  const OptimizeResult again = optimize_params(rho, base, 3, grid, grid);
  CHECK(again.x == best.x);
  CHECK(again.y == best.y);
  CHECK(again.margin == best.margin);

  CHECK_THROWS_AS(optimize_params(rho, base, 3, {}, grid),
                  std::invalid_argument);
}

TEST_CASE("worker_threads respects SEPKIT_THREADS") {
  setenv("SEPKIT_THREADS", "1", 1);
  CHECK(worker_threads() == 1);
  setenv("SEPKIT_THREADS", "3", 1);
  CHECK(worker_threads() >= 1);
  CHECK(worker_threads() <= 3);
  setenv("SEPKIT_THREADS", "garbage", 1);
  CHECK(worker_threads() >= 1);  // falls back to hardware
  unsetenv("SEPKIT_THREADS");
  CHECK(worker_threads() >= 1);
}

TEST_CASE("parallel_for covers every index once and propagates errors") {
  std::vector<int> hits(257, 0);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);

  parallel_for(0, [&](std::size_t) { throw std::logic_error("never runs"); });

  CHECK_THROWS_AS(
      parallel_for(8,
                   [](std::size_t i) {
                     if (i == 5) throw std::runtime_error("boom");
                   }),
      std::runtime_error);
}

TEST_CASE("sweep output is identical for any thread cap") {
  const FamilySpec spec{Family::Isotropic, 2};
  const Criterion base = gm_sqrt_d(2);
  const std::vector<int> n_set = {1, 2};
  const std::vector<double> y_grid = linspace(0.0, 1.5, 4);
  const std::vector<double> p_grid = linspace(0.0, 1.0, 3);

  setenv("SEPKIT_THREADS", "1", 1);
  const std::vector<SweepRow> serial =
      grid_sweep(spec, base, n_set, {1.0, 0.0}, y_grid, p_grid);
  setenv("SEPKIT_THREADS", "4", 1);
  const std::vector<SweepRow> pooled =
      grid_sweep(spec, base, n_set, {1.0, 0.0}, y_grid, p_grid);
  unsetenv("SEPKIT_THREADS");

  REQUIRE(serial.size() == pooled.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].x == pooled[i].x);
    CHECK(serial[i].lhs == pooled[i].lhs);
    CHECK(serial[i].margin == pooled[i].margin);
  }
}

}  // TEST_SUITE

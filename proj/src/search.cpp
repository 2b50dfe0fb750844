#include "sepkit/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace sepkit {

namespace {

double margin_at(const FamilySpec& spec, const Criterion& criterion,
                 double p) {
  return evaluate(make_state(spec, p), criterion).margin;
}

bool detected(double margin) { return margin < -tol::kVerdict; }

}  // namespace

Family family_from_name(const std::string& name) {
  if (name == "tiles") return Family::Tiles;
  if (name == "isotropic") return Family::Isotropic;
  if (name == "werner") return Family::Werner;
  throw std::invalid_argument("family_from_name: unknown family '" + name +
                              "'");
}

std::string family_name(Family family) {
  switch (family) {
    case Family::Tiles: return "tiles";
    case Family::Isotropic: return "isotropic";
    case Family::Werner: return "werner";
  }
  throw std::logic_error("family_name: bad enum");
}

DensityMatrix make_state(const FamilySpec& spec, double p) {
  switch (spec.family) {
    case Family::Tiles:
      if (spec.d != 3)
        throw std::invalid_argument("make_state: tiles family is 3x3 only");
      return white_noise_mix(tiles_state(), p);
    case Family::Isotropic: return isotropic_state(spec.d, p);
    case Family::Werner: return werner_state(spec.d, p);
  }
  throw std::logic_error("make_state: bad enum");
}

std::vector<MarginPoint> margin_curve(const FamilySpec& spec,
                                      const Criterion& criterion,
                                      const std::vector<double>& p_grid) {
  std::vector<MarginPoint> curve(p_grid.size());
  parallel_for(p_grid.size(), [&](std::size_t i) {
    const CriterionReport report =
        evaluate(make_state(spec, p_grid[i]), criterion);
    curve[i] = {p_grid[i], report.lhs, report.rhs, report.margin};
  });
  return curve;
}

std::vector<ThresholdResult> find_threshold(const FamilySpec& spec,
                                            const Criterion& criterion,
                                            double tolerance) {
  if (!(tolerance > 0.0))
    throw std::invalid_argument("find_threshold: tolerance must be positive");
  constexpr int kPrescan = 64;
  const std::vector<double> grid =
      linspace(spec.p_min(), spec.p_max(), kPrescan);
  std::vector<double> margins(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    margins[i] = margin_at(spec, criterion, grid[i]);
  });

  std::vector<ThresholdResult> results;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (detected(margins[i]) == detected(margins[i + 1])) continue;
    // Invariant: the two bracket ends always disagree on detection.
    double lo = grid[i], hi = grid[i + 1];
    bool lo_detected = detected(margins[i]);
    int iterations = 0;
    while (hi - lo > tolerance) {
      const double mid = 0.5 * (lo + hi);
      const bool mid_detected = detected(margin_at(spec, criterion, mid));
      if (mid_detected == lo_detected) lo = mid;
      else hi = mid;
      ++iterations;
    }
    results.push_back({0.5 * (lo + hi), lo, hi, iterations});
  }
  return results;
}

std::vector<SweepRow> grid_sweep(const FamilySpec& spec, const Criterion& base,
                                 const std::vector<int>& n_set,
                                 const XRule& rule,
                                 const std::vector<double>& y_grid,
                                 const std::vector<double>& p_grid) {
  std::vector<SweepRow> rows;
  rows.resize(n_set.size() * y_grid.size() * p_grid.size());
  const std::size_t per_n = y_grid.size() * p_grid.size();
  parallel_for(rows.size(), [&](std::size_t index) {
    const std::size_t in = index / per_n;
    const std::size_t iy = (index % per_n) / p_grid.size();
    const std::size_t ip = index % p_grid.size();
    Criterion criterion = base;
    criterion.params.n = n_set[in];
    criterion.params.y = y_grid[iy];
    criterion.params.x = rule.x_of(y_grid[iy]);
    const CriterionReport report =
        evaluate(make_state(spec, p_grid[ip]), criterion);
    rows[index] = {criterion.params.n, criterion.params.x, criterion.params.y,
                   p_grid[ip],         report.lhs,         report.rhs,
                   report.margin};
  });
  return rows;
}

OptimizeResult optimize_params(const DensityMatrix& rho, const Criterion& base,
                               int n, const std::vector<double>& x_grid,
                               const std::vector<double>& y_grid) {
  if (x_grid.empty() || y_grid.empty())
    throw std::invalid_argument("optimize_params: empty grid");
  std::vector<double> margins(x_grid.size() * y_grid.size());
  parallel_for(margins.size(), [&](std::size_t index) {
    Criterion criterion = base;
    criterion.params.n = n;
    criterion.params.x = x_grid[index / y_grid.size()];
    criterion.params.y = y_grid[index % y_grid.size()];
    margins[index] = evaluate(rho, criterion).margin;
  });
  // Scan in lexicographic (x, y) order; strict improvement keeps the first
  // (smallest) pair on ties.
  OptimizeResult best{x_grid[0], y_grid[0], margins[0]};
  for (std::size_t index = 1; index < margins.size(); ++index) {
    if (margins[index] < best.margin) {
      best = {x_grid[index / y_grid.size()], y_grid[index % y_grid.size()],
              margins[index]};
    }
  }
  return best;
}

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 2) throw std::invalid_argument("linspace: need count >= 2");
  std::vector<double> grid(count);
  for (int i = 0; i < count; ++i)
    grid[i] = lo + (hi - lo) * i / (count - 1);
  grid.back() = hi;
  return grid;
}

unsigned worker_threads() {
  unsigned hardware = std::thread::hardware_concurrency();
  if (hardware == 0) hardware = 1;
  if (const char* env = std::getenv("SEPKIT_THREADS")) {
    char* end = nullptr;
    const long requested = std::strtol(env, &end, 10);
    if (end != env && requested >= 1)
      return static_cast<unsigned>(
          std::min<long>(requested, static_cast<long>(hardware)));
  }
  return hardware;
}

void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& fn) {
  const unsigned workers =
      std::min<std::size_t>(worker_threads(), count ? count : 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&]() {
      try {
        for (std::size_t i = next.fetch_add(1); i < count;
             i = next.fetch_add(1))
          fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> hold(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);  // stop handing out work
      }
    });
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace sepkit

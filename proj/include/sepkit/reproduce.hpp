#pragma once

// Reference reproductions: each target recomputes a published-style benchmark
// from scratch, writes machine-readable artifacts into an output directory,
// and reports pass/fail against pinned expected values.
//
//   table1    Detection thresholds of four tensor criteria on the noisy tiles
//             family sigma_p: de Vicente 0.9493, CCNR 0.8897, Li-Qiao 0.8925,
//             and the unified criterion (Heisenberg-Weyl, n=3, x=y=2/sqrt(3))
//             0.8843, each to +-0.002. Also checks the strict ordering
//             unified < ccnr < li < dv.
//   example2  Isotropic states: threshold exactly 1/(d+1) for d in {2,3,4}
//             (Gell-Mann, n=2, x=y=sqrt(d)) and the closed-form singular
//             spectrum {xy/d} u {p/(2d)} x (d^2-1) u {0}.
//   example3  Werner states: detection boundary exactly (2-d)/d for d in
//             {3,4}, an inconclusive upper interval, and the spectrum
//             {xy/d} u {|dp-1|/(2d(d^2-1))} x (d^2-1) u {0}.
//   figures   Tiles sweep over n in {1,2,3} and symmetric weights x = y on a
//             y grid: per-(n, y) thresholds to CSV, minimum detected p within
//             0.88 +- 0.01.
//
// Artifacts land in <outdir>/{table1,example2,example3,figures}.json plus
// figures_n{1,2,3}.csv.

#include <string>
#include <vector>

#include <json.hpp>

namespace sepkit {

struct ReproduceOutcome {
  bool passed = true;
  std::vector<std::string> lines;  // one human-readable line per check
  nlohmann::json artifact;
};

ReproduceOutcome reproduce_table1(const std::string& outdir);
ReproduceOutcome reproduce_example2(const std::string& outdir);
ReproduceOutcome reproduce_example3(const std::string& outdir);
ReproduceOutcome reproduce_figures(const std::string& outdir);

// Runs one target by name ("table1", "example2", "example3", "figures", or
// "all"); throws on unknown names.
ReproduceOutcome reproduce(const std::string& target,
                           const std::string& outdir);

}  // namespace sepkit

#pragma once

// Serialization boundary: density-matrix JSON files, report/threshold JSON,
// sweep CSV, and witness JSON.
//
// State file format (row-major, dense):
//   { "dA": 3, "dB": 3, "re": [[...], ...], "im": [[...], ...] }
// "im" may be omitted for real matrices. Loading runs the full DensityMatrix
// validation, so malformed or unphysical inputs are rejected with a message.
//
// Sweep CSV schema (one row per grid point, deterministic order):
//   n,x,y,p,lhs,rhs,margin
//
// Doubles in artifacts are rounded through "%.15g" so files are stable and
// diffable across runs.

#include <string>
#include <vector>

#include <json.hpp>

#include "sepkit/criteria.hpp"
#include "sepkit/search.hpp"
#include "sepkit/states.hpp"
#include "sepkit/witness.hpp"

namespace sepkit {

std::string format_double(double value);  // "%.17g", full round-trip
double round_sig(double value);           // value rounded through "%.15g"

DensityMatrix load_state_json(const std::string& path);
void save_state_json(const DensityMatrix& rho, const std::string& path);

nlohmann::json to_json(const CriterionReport& report);
nlohmann::json to_json(const CheckReport& report);
nlohmann::json to_json(const ThresholdResult& result);
nlohmann::json to_json(const std::vector<ThresholdResult>& results);

std::string verdict_name(Verdict verdict);
std::string convention_name(Convention convention);

void write_sweep_csv(const std::string& path,
                     const std::vector<SweepRow>& rows);

void save_witness_json(const Witness& witness, const std::string& path);

void write_text_file(const std::string& path, const std::string& content);
nlohmann::json load_json_file(const std::string& path);

}  // namespace sepkit

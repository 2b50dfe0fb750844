#include "sepkit/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sepkit {

namespace {

using nlohmann::json;

json real_part_rows(const Matrix& m, bool imag) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(round_sig(imag ? m(i, j).imag() : m(i, j).real()));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_parts(const json& re, const json& im, int rows, int cols) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!re.at(i).is_array() || static_cast<int>(re.at(i).size()) != cols)
      throw std::invalid_argument("state file: ragged 're' rows");
    if (!im.is_null() &&
        (!im.at(i).is_array() || static_cast<int>(im.at(i).size()) != cols))
      throw std::invalid_argument("state file: ragged 'im' rows");
    for (int j = 0; j < cols; ++j) {
      double real = re.at(i).at(j).get<double>();
      double imag = 0.0;
      if (!im.is_null()) imag = im.at(i).at(j).get<double>();
      m(i, j) = Complex(real, imag);
    }
  }
  return m;
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

double round_sig(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.15g", value);
  return std::strtod(buffer, nullptr);
}

DensityMatrix load_state_json(const std::string& path) {
  const json doc = load_json_file(path);
  if (!doc.contains("dA") || !doc.contains("dB") || !doc.contains("re"))
    throw std::invalid_argument("state file: need keys dA, dB, re");
  const int da = doc.at("dA").get<int>();
  const int db = doc.at("dB").get<int>();
  if (da < 1 || db < 1)
    throw std::invalid_argument("state file: bad dimensions");
  const int dim = da * db;
  const json& re = doc.at("re");
  const json im = doc.value("im", json());
  if (!re.is_array() || static_cast<int>(re.size()) != dim)
    throw std::invalid_argument("state file: 're' must be dA*dB rows");
  if (!im.is_null() &&
      (!im.is_array() || static_cast<int>(im.size()) != dim))
    throw std::invalid_argument("state file: 'im' must be dA*dB rows");
  return DensityMatrix(matrix_from_parts(re, im, dim, dim), da, db);
}

void save_state_json(const DensityMatrix& rho, const std::string& path) {
  json doc;
  doc["dA"] = rho.dim_a();
  doc["dB"] = rho.dim_b();
  doc["re"] = real_part_rows(rho.matrix(), false);
  doc["im"] = real_part_rows(rho.matrix(), true);
  write_text_file(path, doc.dump(2) + "\n");
}

json to_json(const CriterionReport& report) {
  json doc;
  doc["name"] = report.name;
  doc["lhs"] = round_sig(report.lhs);
  doc["rhs"] = round_sig(report.rhs);
  doc["margin"] = round_sig(report.margin);
  doc["verdict"] = verdict_name(report.verdict);
  doc["x"] = round_sig(report.params.x);
  doc["y"] = round_sig(report.params.y);
  doc["n"] = report.params.n;
  doc["convention"] = convention_name(report.params.convention);
  doc["basisA"] = report.basis_a;
  doc["basisB"] = report.basis_b;
  doc["kappaA"] = round_sig(report.kappa_a);
  doc["kappaB"] = round_sig(report.kappa_b);
  return doc;
}

json to_json(const CheckReport& report) {
  json doc;
  doc["value"] = round_sig(report.value);
  doc["verdict"] = verdict_name(report.verdict);
  return doc;
}

json to_json(const ThresholdResult& result) {
  json doc;
  doc["p_star"] = round_sig(result.p_star);
  doc["p_lo"] = round_sig(result.p_lo);
  doc["p_hi"] = round_sig(result.p_hi);
  doc["iterations"] = result.iterations;
  return doc;
}

json to_json(const std::vector<ThresholdResult>& results) {
  json doc = json::array();
  for (const ThresholdResult& result : results) doc.push_back(to_json(result));
  return doc;
}

std::string verdict_name(Verdict verdict) {
  return verdict == Verdict::Entangled ? "ENTANGLED" : "INCONCLUSIVE";
}

std::string convention_name(Convention convention) {
  return convention == Convention::Plain ? "plain" : "hatted";
}

void write_sweep_csv(const std::string& path,
                     const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "n,x,y,p,lhs,rhs,margin\n";
  char buffer[256];
  for (const SweepRow& row : rows) {
    std::snprintf(buffer, sizeof buffer,
                  "%d,%.15g,%.15g,%.15g,%.15g,%.15g,%.15g\n", row.n, row.x,
                  row.y, row.p, row.lhs, row.rhs, row.margin);
    out << buffer;
  }
  write_text_file(path, out.str());
}

void save_witness_json(const Witness& witness, const std::string& path) {
  json doc;
  doc["basisA"] = witness.basis_a.name;
  doc["basisB"] = witness.basis_b.name;
  doc["dA"] = witness.basis_a.dim;
  doc["dB"] = witness.basis_b.dim;
  doc["kappaA"] = round_sig(witness.basis_a.kappa);
  doc["kappaB"] = round_sig(witness.basis_b.kappa);
  doc["x"] = round_sig(witness.params.x);
  doc["y"] = round_sig(witness.params.y);
  doc["n"] = witness.params.n;
  doc["convention"] = convention_name(witness.params.convention);
  doc["bound"] = round_sig(witness.bound);
  doc["coefficients"] = {{"re", real_part_rows(witness.coefficients, false)},
                         {"im", real_part_rows(witness.coefficients, true)}};
  doc["operator"] = {{"re", real_part_rows(witness.op, false)},
                     {"im", real_part_rows(witness.op, true)}};
  write_text_file(path, doc.dump(2) + "\n");
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& err) {
    throw std::invalid_argument("invalid JSON in " + path + ": " +
                                err.what());
  }
  return doc;
}

}  // namespace sepkit

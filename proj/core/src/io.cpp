#include "sdiep/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "sdiep/cycle_basis.hpp"
#include "sdiep/error.hpp"
#include "sdiep/phase_basis.hpp"

namespace sdiep::io {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  return out;
}

}  // namespace

Spectrum read_spectrum_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedJson, e.what());
  }
  if (!j.is_object() || !j.contains("values") || !j["values"].is_array()) {
    throw Error(ErrorCode::MalformedJson, R"(expected {"values":[...]})");
  }
  std::vector<double> values;
  for (const auto& v : j["values"]) {
    if (!v.is_number()) throw Error(ErrorCode::MalformedJson, "spectrum values must be numbers");
    values.push_back(v.get<double>());
  }
  return validate_spectrum(std::move(values));
}

void write_spectrum_json(std::ostream& out, const Spectrum& s) {
  out << "{\"values\":[";
  for (std::size_t j = 0; j < s.size(); ++j) out << (j ? "," : "") << format_double(s[j]);
  out << "]}\n";
}

Matrix read_matrix_csv(std::istream& in) {
  std::vector<double> data;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::size_t count = 0;
    std::stringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      const std::string t = trim(field);
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
        throw Error(ErrorCode::MalformedCsv,
                    "line " + std::to_string(line_no) + ": bad number '" + t + "'");
      }
      data.push_back(v);
      ++count;
    }
    if (rows == 0) {
      cols = count;
    } else if (count != cols) {
      throw Error(ErrorCode::MalformedCsv, "line " + std::to_string(line_no) + " has " +
                                               std::to_string(count) + " fields, expected " +
                                               std::to_string(cols));
    }
    ++rows;
  }
  if (rows == 0) throw Error(ErrorCode::MalformedCsv, "empty matrix");
  return Matrix(rows, cols, std::move(data));
}

void write_matrix_csv(std::ostream& out, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? "," : "") << format_double(m(r, c));
    out << '\n';
  }
}

void write_hadamard_csv(std::ostream& out, const hadamard::HadamardMatrix& h) {
  for (std::size_t r = 0; r < h.order(); ++r) {
    for (std::size_t c = 0; c < h.order(); ++c) out << (c ? "," : "") << h(r, c);
    out << '\n';
  }
}

Spectrum load_spectrum(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_spectrum_json(in);
}

Matrix load_matrix(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_matrix_csv(in);
}

void save_spectrum(const std::filesystem::path& path, const Spectrum& s) {
  auto out = open_out(path);
  write_spectrum_json(out, s);
}

void save_matrix(const std::filesystem::path& path, const Matrix& m) {
  auto out = open_out(path);
  write_matrix_csv(out, m);
}

void save_json(const std::filesystem::path& path, const nlohmann::json& j) {
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

nlohmann::json to_json(const RealisationReport& r, const ToleranceConfig& tol) {
  nlohmann::json j{
      {"n", r.p.rows()},
      {"sym_defect", r.sym_defect},
      {"row_sum_defect", r.row_sum_defect},
      {"col_sum_defect", r.col_sum_defect},
      {"min_entry", r.min_entry},
      {"min_cell", {r.min_cell.row, r.min_cell.col}},
      {"nonnegative", r.nonnegative(tol)},
      {"passes", r.passes(tol)},
  };
  if (r.spectrum_residual) {
    j["spectrum_residual"] = *r.spectrum_residual;
  } else {
    j["spectrum_residual"] = nullptr;
  }
  return j;
}

nlohmann::json to_json(const Threshold& t) {
  return {{"delta", t.delta},     {"n", t.n},
          {"family", to_string(t.family)}, {"modulus", t.modulus},
          {"residue", t.residue}, {"provenance", t.provenance}};
}

nlohmann::json oracle_golden(std::size_t n_max, std::size_t scan_steps) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t n = 3; n <= n_max; ++n) {
    const oracle::CnResult cn = oracle::brute_cn(n);
    nlohmann::json row{
        {"n", n},
        {"c", cn.c},
        {"argmax", {cn.j, cn.k, cn.l}},
        {"rho", oracle::brute_rho(n)},
        {"delta_angle", oracle::brute_delta_angle(n)},
        {"coherence_canonical", oracle::brute_coherence(cycle::build_canonical(n))},
        {"coherence_phase", oracle::brute_coherence(phase::build_phase_optimised(n))},
    };
    if (hadamard::hadamard_available(n).any()) {
      row["coherence_hadamard"] = oracle::brute_coherence(hadamard::hadamard_basis(n));
    }
    rows.push_back(std::move(row));
  }
  nlohmann::json scans = nlohmann::json::array();
  for (auto [n, j] : {std::pair<std::size_t, std::size_t>{5, 1}, {8, 1}, {6, 2}}) {
    const oracle::PhaseScan s = oracle::phase_scan(n, j, scan_steps);
    scans.push_back({{"n", n}, {"j", j}, {"steps", s.steps}, {"minimum", s.minimum},
                     {"best_phase", s.best_phase}, {"resolution", s.resolution}});
  }
  return {{"n_max", n_max}, {"values", rows}, {"phase_scans", scans}};
}

}  // namespace sdiep::io

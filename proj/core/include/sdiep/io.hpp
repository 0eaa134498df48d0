#pragma once

// File formats:
//   spectrum  JSON  {"values":[1.0,-0.3,...]}
//   matrix    CSV   one row per line, comma separated, 17 significant digits, no header
//   Hadamard  CSV   the same layout with integer ±1 entries
//   report    JSON  every RealisationReport field

#include <filesystem>
#include <iosfwd>

#include <nlohmann/json.hpp>

#include "sdiep/core.hpp"
#include "sdiep/hadamard.hpp"
#include "sdiep/oracle.hpp"

namespace sdiep::io {

/// Throws MalformedJson, or any validate_spectrum error.
Spectrum read_spectrum_json(std::istream& in);
void write_spectrum_json(std::ostream& out, const Spectrum& s);

/// Rectangular numeric CSV. Throws MalformedCsv on ragged rows or bad numbers.
Matrix read_matrix_csv(std::istream& in);
void write_matrix_csv(std::ostream& out, const Matrix& m);
void write_hadamard_csv(std::ostream& out, const hadamard::HadamardMatrix& h);

// Path wrappers; a file that cannot be opened raises Io.
Spectrum load_spectrum(const std::filesystem::path& path);
Matrix load_matrix(const std::filesystem::path& path);
void save_spectrum(const std::filesystem::path& path, const Spectrum& s);
void save_matrix(const std::filesystem::path& path, const Matrix& m);
void save_json(const std::filesystem::path& path, const nlohmann::json& j);

nlohmann::json to_json(const RealisationReport& r, const ToleranceConfig& tol = {});
nlohmann::json to_json(const Threshold& t);

/// Oracle values for 3 ≤ n ≤ n_max: brute c_n with argmax, brute ρ and Δ_n,
/// triple-loop coherence of the canonical, phase and Hadamard bases, plus the
/// phase scans at (5,1), (8,1), (6,2).
nlohmann::json oracle_golden(std::size_t n_max, std::size_t scan_steps = 20000);

}  // namespace sdiep::io

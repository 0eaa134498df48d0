#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>

#include "sdiep/coherence.hpp"
#include "sdiep/cycle_basis.hpp"
#include "sdiep/error.hpp"
#include "sdiep/hadamard.hpp"
#include "sdiep/io.hpp"
#include "sdiep/oracle.hpp"
#include "sdiep/phase_basis.hpp"
#include "sdiep/realise.hpp"

namespace sdiep::cli {

namespace {

// glibc's printf converts the exact binary value and breaks exact ties to even,
// which is the rounding used by every printed decimal below.
std::string fixed10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10f", v);
  return buf;
}

const std::vector<std::size_t> kAppendixOrders{3,  4,  5,  6,  7,  8,  9,  10,
                                               12, 16, 20, 24, 30, 40, 60, 100};

OrthogonalBasis basis_for(const std::string& family, std::size_t n, const ToleranceConfig& tol) {
  if (family == "cycle") return cycle::build_canonical(n, tol);
  if (family == "phase") return phase::build_phase_optimised(n, tol);
  if (family == "hadamard") return hadamard::hadamard_basis(n, tol);
  // auto: δ = 0 beats δ^(ph) beats δ_n
  if (hadamard::hadamard_available(n).any() && n >= 2) return hadamard::hadamard_basis(n, tol);
  if (n >= 3) return phase::build_phase_optimised(n, tol);
  throw Error(ErrorCode::DimensionTooSmall, "no basis family available at n = " + std::to_string(n));
}

void print_report(std::ostream& out, const RealisationReport& r, const ToleranceConfig& tol) {
  out << "sym_defect:        " << r.sym_defect << '\n'
      << "row_sum_defect:    " << r.row_sum_defect << '\n'
      << "col_sum_defect:    " << r.col_sum_defect << '\n'
      << "min_entry:         " << fixed10(r.min_entry) << " at (" << r.min_cell.row << ", "
      << r.min_cell.col << ")\n";
  if (r.spectrum_residual) {
    out << "spectrum_residual: " << *r.spectrum_residual << '\n';
  }
  if (!r.nonnegative(tol)) {
    out << "negative entry " << fixed10(r.min_entry) << " at (" << r.min_cell.row << ", "
        << r.min_cell.col << ")\n";
  }
  out << "result:            " << (r.passes(tol) ? "pass" : "fail") << '\n';
}

struct ThresholdArgs {
  std::size_t n = 0;
  std::string family = "phase";
  std::string basis;
};

int cmd_threshold(const ThresholdArgs& a, const ToleranceConfig& tol, std::ostream& out) {
  Threshold t;
  if (a.family == "cycle") {
    t = cycle::delta_cycle(a.n);
  } else if (a.family == "phase") {
    t = phase::delta_phase(a.n);
  } else if (a.family == "hadamard") {
    if (a.n < 2) throw Error(ErrorCode::DimensionTooSmall, "hadamard thresholds need n >= 2");
    t = hadamard::delta_hadamard(a.n);
  } else {
    if (a.basis.empty()) throw Error(ErrorCode::InvalidArgument, "--basis is required");
    const Matrix q = io::load_matrix(a.basis);
    const CoherenceResult c = coherence(q, tol);
    t = delta_from_coherence(c.m, Family::External, q.rows());
  }
  out << fixed10(t.delta) << '\n' << t.provenance << '\n';
  return kOk;
}

struct RealiseArgs {
  std::string spectrum;
  std::string family = "auto";
  std::string output;
  std::string report;
};

int cmd_realise(const RealiseArgs& a, const ToleranceConfig& tol, std::ostream& out) {
  const Spectrum s = io::load_spectrum(a.spectrum);
  const OrthogonalBasis q = basis_for(a.family, s.size(), tol);
  const RealisationReport r = realise(s, q);

  io::save_matrix(a.output, r.p);
  const std::string report_path = a.report.empty() ? a.output + ".report.json" : a.report;
  nlohmann::json j = io::to_json(r, tol);
  j["family"] = to_string(q.family());
  j["trace_sum"] = s.trace_sum();
  j["trace_status"] = to_string(s.status());
  io::save_json(report_path, j);

  out << "family:            " << to_string(q.family()) << '\n'
      << "trace_sum:         " << fixed10(s.trace_sum()) << " (" << to_string(s.status()) << ")\n";
  print_report(out, r, tol);
  return r.passes(tol) ? kOk : kNotRealised;
}

int cmd_table(const std::vector<std::size_t>& ns, std::ostream& out) {
  out << "n,delta\n";
  for (std::size_t n : ns) out << n << ',' << fixed10(phase::delta_phase(n).delta) << '\n';
  return kOk;
}

struct PlotArgs {
  std::size_t n_max = 60;
  std::string output;
  std::string envelope;
};

int cmd_plotdata(const PlotArgs& a, std::ostream& out) {
  const phase::PlotData d = phase::emit_plot_data(a.n_max);
  std::string envelope = a.envelope;
  if (envelope.empty()) {
    std::filesystem::path p(a.output);
    envelope = (p.parent_path() / (p.stem().string() + "_envelope.csv")).string();
  }
  {
    std::ofstream f(a.output);
    if (!f) throw Error(ErrorCode::Io, "cannot write " + a.output);
    f << "n,class,delta\n";
    for (const auto& r : d.rows) f << r.n << ',' << r.cls << ',' << fixed10(r.delta) << '\n';
  }
  {
    std::ofstream f(envelope);
    if (!f) throw Error(ErrorCode::Io, "cannot write " + envelope);
    f << "curve,n,value\n";
    for (const auto& r : d.envelopes) f << r.curve << ',' << r.n << ',' << fixed10(r.value) << '\n';
  }
  out << "wrote " << d.rows.size() << " rows to " << a.output << " and " << d.envelopes.size()
      << " envelope samples to " << envelope << '\n';
  return kOk;
}

struct VerifyArgs {
  std::string matrix;
  std::string spectrum;
  std::string basis;
};

int cmd_verify(const VerifyArgs& a, const ToleranceConfig& tol, std::ostream& out) {
  RealisationReport r = inspect(io::load_matrix(a.matrix));
  if (!a.spectrum.empty()) {
    const Spectrum s = io::load_spectrum(a.spectrum);
    if (a.basis.empty()) {
      out << "spectrum check:    unavailable (no --basis supplied)\n";
    } else {
      const OrthogonalBasis q(io::load_matrix(a.basis), Family::External, tol);
      r.spectrum_residual = eigenpair_residual(r.p, s, q);
    }
  }
  print_report(out, r, tol);
  return r.passes(tol) ? kOk : kNotRealised;
}

struct WitnessArgs {
  std::size_t n = 0;
  double epsilon = 0.01;
  std::string output;
};

int cmd_witness(const WitnessArgs& a, std::ostream& out) {
  const cycle::SharpnessWitness w = cycle::sharpness_witness(a.n, a.epsilon);
  out << "eigenvalue slot j: " << w.j << '\n'
      << "t:                 " << fixed10(w.t) << '\n'
      << "trace_sum:         " << fixed10(w.spectrum.trace_sum()) << '\n'
      << "cell:              (" << w.k << ", " << w.k << ")\n"
      << "entry:             " << fixed10(w.entry_value) << '\n';
  if (!a.output.empty()) io::save_spectrum(a.output, w.spectrum);
  return kOk;
}

struct CoherenceArgs {
  std::size_t n = 0;
  std::string family;
  std::string basis;
  bool oracle = false;
};

int cmd_coherence(const CoherenceArgs& a, const ToleranceConfig& tol, std::ostream& out) {
  const OrthogonalBasis q = a.basis.empty()
                                ? basis_for(a.family.empty() ? "auto" : a.family, a.n, tol)
                                : OrthogonalBasis(io::load_matrix(a.basis), Family::External, tol);
  const CoherenceResult c = coherence(q);
  out << "family:            " << to_string(q.family()) << '\n'
      << "n:                 " << q.dimension() << '\n'
      << "M:                 " << fixed10(c.m) << '\n'
      << "argmax (col, row): (" << c.column << ", " << c.row << ")\n"
      << "implied delta:     " << fixed10(c.implied_delta) << '\n';
  if (a.oracle) out << "oracle M:          " << fixed10(oracle::brute_coherence(q)) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric doubly stochastic matrices with prescribed Suleimanova spectra"};
  app.name("sdiep");
  app.require_subcommand(1);

  ThresholdArgs threshold_args;
  auto* threshold = app.add_subcommand("threshold", "Print the sufficient trace threshold delta");
  threshold->add_option("--n", threshold_args.n, "Dimension");
  threshold->add_option("--family", threshold_args.family, "Basis family")
      ->check(CLI::IsMember({"cycle", "phase", "hadamard", "coherence-of-file"}));
  threshold->add_option("--basis", threshold_args.basis, "Basis CSV for coherence-of-file");

  RealiseArgs realise_args;
  auto* realise_cmd = app.add_subcommand("realise", "Build P = Q diag(spectrum) Q^T and check it");
  realise_cmd->add_option("--spectrum", realise_args.spectrum, "Spectrum JSON")->required();
  realise_cmd->add_option("--family", realise_args.family, "Basis family")
      ->check(CLI::IsMember({"auto", "cycle", "phase", "hadamard"}));
  realise_cmd->add_option("--output", realise_args.output, "Matrix CSV to write")->required();
  realise_cmd->add_option("--report", realise_args.report,
                          "Report JSON (default: <output>.report.json)");

  std::vector<std::size_t> table_ns = kAppendixOrders;
  auto* table = app.add_subcommand("table", "Phase-optimised thresholds to 10 decimals");
  table->add_option("--n", table_ns, "Orders to tabulate")->delimiter(',');

  PlotArgs plot_args;
  auto* plot = app.add_subcommand("plot-data", "Per-n thresholds and envelope curves as CSV");
  plot->add_option("--n-max", plot_args.n_max, "Largest n")->required();
  plot->add_option("--output", plot_args.output, "Threshold CSV")->required();
  plot->add_option("--envelope", plot_args.envelope, "Envelope CSV (default: <output>_envelope.csv)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check a matrix CSV for double stochasticity");
  verify->add_option("--matrix", verify_args.matrix, "Matrix CSV")->required();
  verify->add_option("--spectrum", verify_args.spectrum, "Spectrum JSON");
  verify->add_option("--basis", verify_args.basis, "Eigenbasis CSV for the spectrum check");

  WitnessArgs witness_args;
  auto* witness = app.add_subcommand("witness", "Sharpness witness for the canonical cycle basis");
  witness->add_option("--n", witness_args.n, "Dimension")->required();
  witness->add_option("--epsilon", witness_args.epsilon, "Overshoot beyond the threshold");
  witness->add_option("--output", witness_args.output, "Write the witness spectrum JSON here");

  CoherenceArgs coherence_args;
  auto* coherence_cmd = app.add_subcommand("coherence", "Coherence M(Q) of a basis");
  coherence_cmd->add_option("--n", coherence_args.n, "Dimension");
  coherence_cmd->add_option("--family", coherence_args.family, "Basis family")
      ->check(CLI::IsMember({"auto", "cycle", "phase", "hadamard"}));
  coherence_cmd->add_option("--basis", coherence_args.basis, "Basis CSV");
  coherence_cmd->add_flag("--oracle", coherence_args.oracle, "Also run the brute-force scan");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const ToleranceConfig tol = ToleranceConfig::from_environment();
    if (*threshold) return cmd_threshold(threshold_args, tol, out);
    if (*realise_cmd) return cmd_realise(realise_args, tol, out);
    if (*table) return cmd_table(table_ns, out);
    if (*plot) return cmd_plotdata(plot_args, out);
    if (*verify) return cmd_verify(verify_args, tol, out);
    if (*witness) return cmd_witness(witness_args, out);
    if (*coherence_cmd) return cmd_coherence(coherence_args, tol, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::Io ? kIoError : kUsage;
  }
  return kUsage;
}

}  // namespace sdiep::cli

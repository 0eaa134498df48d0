// Acceptance suite. With no argument every criterion runs; with an argument N
// only criterion N runs. Each criterion prints one [PASS]/[FAIL] line and the
// exit status is nonzero when any selected criterion fails.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sdiep/coherence.hpp"
#include "sdiep/cycle_basis.hpp"
#include "sdiep/hadamard.hpp"
#include "sdiep/oracle.hpp"
#include "sdiep/phase_basis.hpp"
#include "sdiep/realise.hpp"
#include "test_support.hpp"

namespace {

using namespace sdiep;

constexpr double kPi = std::numbers::pi;

// Pinned tolerances.
constexpr double kTableTol = 5e-11;
constexpr double kAngleTol = 1e-14;
constexpr double kCnTol = 1e-12;
constexpr double kBoundaryTol = 1e-15;
constexpr double kBelowHalfMargin = 1e-6;
constexpr double kCoherenceTol = 1e-9;
constexpr double kWitnessZeroTol = 1e-12;
constexpr double kHadamardFloorTol = 1e-12;
constexpr double kSymTol = 1e-12;
constexpr double kSumTol = 1e-10;
constexpr double kResidualTol = 1e-9;
constexpr double kTensorTol = 1e-12;
constexpr double kAsymptoticConstant = 10.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Every realisation made by the suite is folded into this record for criterion 7.
struct ContractRecord {
  std::size_t count = 0;
  double sym = 0.0;
  double sum = 0.0;
  double residual = 0.0;

  const RealisationReport& add(const RealisationReport& r) {
    ++count;
    sym = std::max(sym, r.sym_defect);
    sum = std::max({sum, r.row_sum_defect, r.col_sum_defect});
    residual = std::max(residual, r.spectrum_residual.value_or(INFINITY));
    return r;
  }
};

ContractRecord contract;

RealisationReport tracked(const Spectrum& s, const OrthogonalBasis& q) { return contract.add(realise(s, q)); }

Outcome appendix_table() {
  const std::map<std::size_t, double> table{
      {3, 0.4641016151},  {4, 0.0},           {5, 0.4874571845},  {6, 0.4641016151},
      {7, 0.4936524043},  {8, 0.4142135624},  {9, 0.4961728669},  {10, 0.4874571845},
      {12, 0.4641016151}, {16, 0.4802169351}, {20, 0.4874571845}, {24, 0.4913338099},
      {30, 0.4986267123}, {40, 0.4969030207}, {60, 0.4986267123}, {100, 0.4995061949}};
  double worst = 0.0;
  std::size_t worst_n = 0;
  for (const auto& [n, expected] : table) {
    const double err = std::abs(phase::delta_phase(n).delta - expected);
    if (err > worst) {
      worst = err;
      worst_n = n;
    }
  }
  return {worst <= kTableTol, "16 orders, max error " + fmt("%.3e", worst) + " at n=" + std::to_string(worst_n)};
}

unsigned rho_table(std::size_t n) {
  switch (n % 8) {
    case 0: return 0;
    case 4: return 4;
    case 2:
    case 6: return 2;
    default: return 1;
  }
}

Outcome mod8_mechanism() {
  std::size_t bad = 0;
  double worst_angle = 0.0;
  for (std::size_t n = 3; n <= 200; ++n) {
    const unsigned r = rho_table(n);
    if (oracle::brute_rho(n) != r || cycle::rho(n) != r) ++bad;
    const double err = std::abs(oracle::brute_delta_angle(n) - kPi * r / (4.0 * static_cast<double>(n)));
    worst_angle = std::max(worst_angle, err);
  }
  double worst_cn = 0.0;
  for (std::size_t n = 3; n <= 64; ++n) {
    const double d = kPi * rho_table(n) / (4.0 * static_cast<double>(n));
    worst_cn = std::max(worst_cn, std::abs(oracle::brute_cn(n).c - std::cos(d) * std::cos(d)));
  }
  return {bad == 0 && worst_angle <= kAngleTol && worst_cn <= kCnTol,
          std::to_string(bad) + " rho mismatches (n<=200), angle err " + fmt("%.2e", worst_angle) +
              ", c_n err " + fmt("%.2e", worst_cn) + " (n<=64)"};
}

Outcome cycle_boundary() {
  double worst_eq = 0.0;
  double closest_below = 0.0;
  std::size_t failures = 0;
  for (std::size_t n = 3; n <= 48; ++n) {
    const double d = cycle::delta_cycle(n).delta;
    if (n % 8 == 0) {
      worst_eq = std::max(worst_eq, std::abs(d - 0.5));
      if (std::abs(d - 0.5) > kBoundaryTol) ++failures;
    } else {
      closest_below = std::max(closest_below, d);
      if (!(d < 0.5 - kBelowHalfMargin)) ++failures;
    }
  }
  return {failures == 0, "|delta-1/2| " + fmt("%.1e", worst_eq) + " on 8|n, largest other delta " +
                             fmt("%.10f", closest_below)};
}

Outcome phase_coherence() {
  double worst = 0.0;
  std::size_t worst_n = 0;
  for (std::size_t n = 3; n <= 64; ++n) {
    const double err = std::abs(oracle::brute_coherence(phase::build_phase_optimised(n)) -
                                phase::coherence_closed_form(n));
    if (err > worst) {
      worst = err;
      worst_n = n;
    }
  }
  return {worst <= kCoherenceTol, "n=3..64, max error " + fmt("%.2e", worst) + " at n=" + std::to_string(worst_n)};
}

Outcome sharpness() {
  bool ok = true;
  std::ostringstream detail;
  for (std::size_t n : {5u, 6u, 7u, 12u}) {
    const OrthogonalBasis q = cycle::build_canonical(n);
    const cycle::SharpnessWitness at = cycle::sharpness_witness(n, 0.0);
    const RealisationReport r0 = tracked(at.spectrum, q);
    const double zero = r0.p(at.k, at.k);
    const cycle::SharpnessWitness past = cycle::sharpness_witness(n, 0.01);
    const RealisationReport r1 = tracked(past.spectrum, q);
    const bool this_ok = std::abs(zero) <= kWitnessZeroTol && r1.min_entry < 0.0;
    ok = ok && this_ok;
    detail << "n=" << n << ":" << fmt("%.1e", zero) << "/" << fmt("%.4f", r1.min_entry) << " ";
  }
  // Trace sum 0.48 with a single negative eigenvalue.
  const OrthogonalBasis q5 = cycle::build_canonical(5);
  bool found = false;
  for (std::size_t j = 1; j < 5; ++j) {
    std::vector<double> v(5, 0.0);
    v[0] = 1.0;
    v[j] = -0.52;
    found = tracked(validate_spectrum(v), q5).min_entry < 0.0 || found;
  }
  detail << "trace 0.48 negative: " << (found ? "yes" : "no");
  return {ok && found, detail.str()};
}

std::vector<OrthogonalBasis> hadamard_bases(std::size_t n) {
  std::vector<OrthogonalBasis> out;
  const hadamard::Availability a = hadamard::hadamard_available(n);
  if (a.sylvester) out.push_back(hadamard::normalise_perron(hadamard::sylvester(std::countr_zero(n))));
  if (a.paley1) out.push_back(hadamard::normalise_perron(hadamard::paley1(n - 1)));
  return out;
}

Outcome hadamard_sufficiency() {
  std::mt19937_64 rng(20240601);
  std::size_t runs = 0;
  std::size_t failures = 0;
  double worst_gap = INFINITY;
  for (std::size_t n : {4u, 8u, 12u, 16u}) {
    for (const OrthogonalBasis& q : hadamard_bases(n)) {
      for (int trial = 0; trial < 200; ++trial) {
        const double trace = testing::uniform(1e-6, 1.0, rng);
        const RealisationReport r = tracked(testing::random_spectrum(n, trace, rng), q);
        const double gap = r.min_entry - trace / static_cast<double>(n);
        worst_gap = std::min(worst_gap, gap);
        if (!r.passes() || gap < -kHadamardFloorTol) ++failures;
        ++runs;
      }
    }
  }
  return {failures == 0, std::to_string(runs) + " realisations, " + std::to_string(failures) +
                             " failures, min(min_entry - trace/n) " + fmt("%.2e", worst_gap)};
}

Outcome realisation_contract() {
  // A sweep of its own over every family and n <= 32, on top of whatever the
  // other criteria have already recorded.
  std::mt19937_64 rng(7);
  for (std::size_t n = 2; n <= 32; ++n) {
    for (testing::BasisKind kind : testing::kinds_available(n)) {
      const OrthogonalBasis q = testing::make_basis(kind, n);
      for (int trial = 0; trial < 10; ++trial) {
        tracked(testing::random_spectrum(n, testing::uniform(-0.5, 1.0, rng), rng), q);
      }
    }
  }
  const bool ok = contract.sym <= kSymTol && contract.sum <= kSumTol && contract.residual <= kResidualTol;
  return {ok, std::to_string(contract.count) + " realisations, sym " + fmt("%.1e", contract.sym) + ", sums " +
                  fmt("%.1e", contract.sum) + ", residual " + fmt("%.1e", contract.residual)};
}

Outcome tensor_bound() {
  std::mt19937_64 rng(99);
  std::size_t violations = 0;
  double worst = -INFINITY;
  for (int pair = 0; pair < 50; ++pair) {
    const OrthogonalBasis a = testing::random_basis(12, rng);
    const OrthogonalBasis b = testing::random_basis(12, rng);
    const double lhs = coherence(tensor_basis(a, b)).m;
    const double rhs = coherence(a).m * coherence(b).m;
    worst = std::max(worst, lhs - rhs);
    if (lhs > rhs + kTensorTol) ++violations;
  }
  return {violations == 0, "50 pairs, max M(A(x)B) - M(A)M(B) = " + fmt("%.2e", worst)};
}

Outcome asymptotics() {
  struct Class {
    std::string name;
    std::function<bool(std::size_t)> member;
    std::function<double(std::size_t)> exact;
    AsymptoticFamily family;
  };
  const std::vector<Class> classes{
      {"phase 0mod4", [](std::size_t n) { return n % 4 == 0; },
       [](std::size_t n) { return phase::delta_phase(n).delta; }, AsymptoticFamily::Phase},
      {"phase 2mod4", [](std::size_t n) { return n % 4 == 2; },
       [](std::size_t n) { return phase::delta_phase(n).delta; }, AsymptoticFamily::Phase},
      {"phase odd", [](std::size_t n) { return n % 2 == 1; },
       [](std::size_t n) { return phase::delta_phase(n).delta; }, AsymptoticFamily::Phase},
      {"cycle 4mod8", [](std::size_t n) { return n % 8 == 4; },
       [](std::size_t n) { return cycle::delta_cycle(n).delta; }, AsymptoticFamily::Cycle},
      {"cycle 2mod4", [](std::size_t n) { return n % 4 == 2; },
       [](std::size_t n) { return cycle::delta_cycle(n).delta; }, AsymptoticFamily::Cycle},
      {"cycle odd", [](std::size_t n) { return n % 2 == 1; },
       [](std::size_t n) { return cycle::delta_cycle(n).delta; }, AsymptoticFamily::Cycle},
  };
  bool ok = true;
  std::ostringstream detail;
  detail << "max n^4|err| ";
  for (const Class& c : classes) {
    double worst = 0.0;
    for (std::size_t n = 16; n <= 512; ++n) {
      if (!c.member(n)) continue;
      const double dn = static_cast<double>(n);
      worst = std::max(worst, dn * dn * dn * dn * std::abs(c.exact(n) - asymptotic_delta(n, c.family)));
    }
    ok = ok && worst <= kAsymptoticConstant;
    detail << c.name << "=" << fmt("%.3f", worst) << " ";
  }
  detail << "(limit " << kAsymptoticConstant << ")";
  return {ok, detail.str()};
}

Outcome hadamard_identity() {
  std::size_t checked = 0;
  std::size_t bad = 0;
  for (unsigned d = 0; d <= 6; ++d) {
    bad += hadamard::sylvester(d).is_hadamard() ? 0 : 1;
    ++checked;
  }
  for (std::size_t q : {3u, 7u, 11u, 19u, 23u}) {
    bad += hadamard::paley1(q).is_hadamard() ? 0 : 1;
    ++checked;
  }
  return {bad == 0, std::to_string(checked) + " matrices, " + std::to_string(bad) + " fail H^T H = nI"};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"appendix table", appendix_table},
      {"mod-8 mechanism", mod8_mechanism},
      {"canonical boundary at 8|n", cycle_boundary},
      {"phase-optimised coherence", phase_coherence},
      {"sharpness witnesses", sharpness},
      {"hadamard sufficiency", hadamard_sufficiency},
      {"realisation contract", realisation_contract},
      {"tensor coherence bound", tensor_bound},
      {"asymptotic expansion", asymptotics},
      {"exact hadamard identity", hadamard_identity},
  };
  return all;
}

bool report(std::size_t index) {
  const Criterion& c = criteria()[index - 1];
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::printf("[%s] criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str());
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t total = criteria().size();
  if (argc > 2) {
    std::fprintf(stderr, "usage: %s [criterion 1..%zu]\n", argv[0], total);
    return 1;
  }
  if (argc == 2) {
    const long which = std::strtol(argv[1], nullptr, 10);
    if (which < 1 || static_cast<std::size_t>(which) > total) {
      std::fprintf(stderr, "criterion must be in 1..%zu\n", total);
      return 1;
    }
    // Criterion 7 audits the realisations of the criteria that make them.
    if (which == 7) {
      criteria()[4].run();
      criteria()[5].run();
    }
    return report(static_cast<std::size_t>(which)) ? 0 : 1;
  }
  bool ok = true;
  for (std::size_t i = 1; i <= total; ++i) ok = report(i) && ok;
  return ok ? 0 : 1;
}

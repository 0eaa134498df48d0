#include "sdiep/phase_basis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "sdiep/coherence.hpp"
#include "sdiep/error.hpp"

namespace sdiep::phase {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuarter = kPi / 2.0;  // the reduction modulus L = π/2

void require_dimension(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::DimensionTooSmall, "phase bases need n >= 3");
}

double distance_to_lattice(double x) {
  double r = std::fmod(x, kQuarter);
  if (r < 0.0) r += kQuarter;
  return std::min(r, kQuarter - r);
}

double envelope(std::size_t n, unsigned divisor) {
  const double c = std::cos(kPi / (static_cast<double>(divisor) * static_cast<double>(n)));
  return 1.0 - 1.0 / (2.0 * c * c);
}

}  // namespace

double delta_star(std::size_t n_prime) {
  if (n_prime == 0) throw Error(ErrorCode::InvalidArgument, "n' must be positive");
  const double np = static_cast<double>(n_prime);
  if (n_prime % 4 == 0) return kPi / np;
  if (n_prime % 2 == 0) return kPi / (2.0 * np);
  return kPi / (4.0 * np);
}

double effective_spacing(std::size_t n_prime) {
  if (n_prime == 0) throw Error(ErrorCode::InvalidArgument, "n' must be positive");
  return kQuarter * static_cast<double>(std::gcd(n_prime, std::size_t{4})) /
         static_cast<double>(n_prime);
}

PhasePlan plan_phases(std::size_t n) {
  require_dimension(n);
  PhasePlan plan;
  plan.n = n;
  const double dn = static_cast<double>(n);

  for (std::size_t j = 1; j <= (n - 1) / 2; ++j) {
    EigenspacePhase e;
    e.j = j;
    e.n_prime = n / std::gcd(j, n);
    e.s_eff = effective_spacing(e.n_prime);
    e.delta_star = delta_star(e.n_prime);

    // 2πjk/n mod π/2 = (π/2)·((4jk) mod n)/n. Locate the grid's offset from
    // the origin over the full index set, then put the origin mid-arc.
    std::size_t offset_units = n;
    for (std::size_t k = 0; k < n; ++k) offset_units = std::min(offset_units, (4 * j * k) % n);
    const double offset = kQuarter * static_cast<double>(offset_units) / dn;
    e.phi = e.s_eff / 2.0 - offset;

    e.min_distance = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      const double x = kQuarter * static_cast<double>((4 * j * k) % n) / dn + e.phi;
      e.min_distance = std::min(e.min_distance, distance_to_lattice(x));
    }
    if (e.min_distance < e.s_eff / 2.0 - 1e-12) {
      throw Error(ErrorCode::ConstructionFailed,
                  "phase for j = " + std::to_string(j) + " misses the covering radius");
    }
    plan.pairs.push_back(e);
  }
  if (n % 2 == 0) plan.half_phase = kPi / 4.0;
  return plan;
}

OrthogonalBasis build_phase_optimised(std::size_t n, const ToleranceConfig& tol) {
  const PhasePlan plan = plan_phases(n);
  const double dn = static_cast<double>(n);
  const double scale = std::sqrt(2.0 / dn);
  Matrix q(n, n);
  for (std::size_t k = 0; k < n; ++k) q(k, 0) = 1.0 / std::sqrt(dn);

  std::size_t col = 1;
  for (const EigenspacePhase& e : plan.pairs) {
    for (std::size_t k = 0; k < n; ++k) {
      const double arg =
          2.0 * kPi * static_cast<double>((e.j * k) % n) / dn + e.phi;
      q(k, col) = scale * std::sin(arg);
      q(k, col + 1) = scale * std::cos(arg);
    }
    col += 2;
  }
  if (plan.half_phase) {
    // √(2/n)·sin(πk + π/4) = (-1)^k/√n
    for (std::size_t k = 0; k < n; ++k) q(k, col) = (k % 2 == 0 ? 1.0 : -1.0) / std::sqrt(dn);
    ++col;
  }

  OrthogonalBasis basis(std::move(q), Family::CyclePhase, tol);
  const double m = coherence(basis).m;
  if (std::abs(m - coherence_closed_form(n)) > tol.closed_form) {
    throw Error(ErrorCode::ConstructionFailed,
                "coherence " + std::to_string(m) + " differs from the closed form");
  }
  return basis;
}

double coherence_closed_form(std::size_t n) {
  require_dimension(n);
  const double c = std::cos(delta_star(n));
  return 2.0 * c * c;
}

Threshold delta_phase(std::size_t n) {
  require_dimension(n);
  Threshold t;
  t.delta = 1.0 - 1.0 / coherence_closed_form(n);
  t.n = n;
  t.family = Family::CyclePhase;
  t.modulus = 4;
  t.residue = static_cast<unsigned>(n % 4);
  t.provenance = "phase-optimised cycle basis, class " + congruence_class(n);
  return t;
}

std::string congruence_class(std::size_t n) {
  if (n % 4 == 0) return "0mod4";
  if (n % 2 == 0) return "2mod4";
  return "odd";
}

PlotData emit_plot_data(std::size_t n_max) {
  require_dimension(n_max);
  PlotData out;
  for (std::size_t n = 3; n <= n_max; ++n) {
    out.rows.push_back({n, congruence_class(n), delta_phase(n).delta});
  }
  struct Curve {
    const char* name;
    std::size_t first;
    unsigned divisor;
  };
  for (const Curve c : {Curve{"0mod4", 4, 1}, Curve{"2mod4", 6, 2}, Curve{"odd", 3, 4}}) {
    for (std::size_t n = c.first; n <= n_max; ++n) {
      out.envelopes.push_back({c.name, n, envelope(n, c.divisor)});
    }
  }
  return out;
}

}  // namespace sdiep::phase

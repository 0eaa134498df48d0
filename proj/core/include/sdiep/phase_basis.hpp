#pragma once

// Phase-optimised cycle basis: each two-dimensional cycle eigenspace E_j is
// rotated by a phase φ_j that keeps the grid {2πjk/n + φ_j} as far as possible
// from the multiples of π/2, which minimises the larger sup-norm of the pair.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sdiep/core.hpp"

namespace sdiep::phase {

/// Covering radius Δ*(n'): π/n' if 4 | n', π/(2n') if n' ≡ 2 (mod 4), π/(4n') if n' odd.
double delta_star(std::size_t n_prime);

/// Spacing of the grid {2πm/n'} reduced mod π/2: (π/2)·gcd(n', 4)/n'.
double effective_spacing(std::size_t n_prime);

struct EigenspacePhase {
  std::size_t j = 0;
  std::size_t n_prime = 0;     ///< n / gcd(j, n)
  double s_eff = 0.0;
  double phi = 0.0;
  double delta_star = 0.0;
  double min_distance = 0.0;   ///< achieved distance of the shifted grid from (π/2)ℤ
};

struct PhasePlan {
  std::size_t n = 0;
  std::vector<EigenspacePhase> pairs;  ///< j = 1 .. ⌊(n-1)/2⌋
  std::optional<double> half_phase;    ///< π/4 for the j = n/2 column when n is even
};

/// Throws ConstructionFailed if some phase misses the target distance s_eff/2.
PhasePlan plan_phases(std::size_t n);

/// Columns: Perron, then (sin, cos) for each j, then (-1)^k/√n when n is even.
/// The coherence of the result is checked against coherence_closed_form(n).
OrthogonalBasis build_phase_optimised(std::size_t n, const ToleranceConfig& tol = {});

/// 2cos²(Δ*(n)).
double coherence_closed_form(std::size_t n);

Threshold delta_phase(std::size_t n);

/// "0mod4", "2mod4" or "odd".
std::string congruence_class(std::size_t n);

struct PlotRow {
  std::size_t n = 0;
  std::string cls;
  double delta = 0.0;
};

struct EnvelopeRow {
  std::string curve;
  std::size_t n = 0;
  double value = 0.0;
};

struct PlotData {
  std::vector<PlotRow> rows;
  std::vector<EnvelopeRow> envelopes;
};

/// Rows for 3 ≤ n ≤ n_max, plus each class formula sampled at every integer n
/// from its first member (4, 6, 3) up to n_max.
PlotData emit_plot_data(std::size_t n_max);

}  // namespace sdiep::phase

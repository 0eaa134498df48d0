#pragma once

// Brute-force verifiers for the closed forms in the cycle, phase and coherence
// modules. Nothing in here is used on the main construction path; the oracle
// only evaluates the defining sup/min expressions by exhaustive scans.

#include <cstddef>

#include "sdiep/core.hpp"

namespace sdiep::oracle {

struct CnResult {
  double c = 0.0;
  std::size_t j = 0;
  std::size_t k = 0;
  std::size_t l = 0;
};

/// max_{1≤j≤n-1} max_{k,l} S_j(k) S_j(l) with S_j(k) = sin(2πkj/n + π/4).
/// Ties (within 1e-14) resolve to the lexicographically smallest (j, k, l).
CnResult brute_cn(std::size_t n);

/// min_{m,t} |2πm/n - (2t+1)π/4| over m in [0, n) and t in [0, 8).
double brute_delta_angle(std::size_t n);

/// min_{m,t} |8m - (2t+1)n| over the same range, in exact integer arithmetic.
unsigned brute_rho(std::size_t n);

struct CoherenceScan {
  double m = 0.0;
  std::size_t j = 0;
  std::size_t k = 0;
  std::size_t l = 0;
};

/// sup_{j≥1} sup_{k,l} n |q_j(k) q_j(l)| by a triple loop.
CoherenceScan brute_coherence_scan(const OrthogonalBasis& q);
double brute_coherence(const OrthogonalBasis& q);

struct PhaseScan {
  double minimum = 0.0;     ///< min over scanned φ of max(‖w^φ‖_∞, ‖w̃^φ‖_∞)
  double best_phase = 0.0;  ///< first φ attaining the minimum
  double resolution = 0.0;  ///< scan step (π/2)/steps
  std::size_t steps = 0;
};

/// Dense scan of φ over [0, π/2). Throws InvalidArgument when steps < 1000.
PhaseScan phase_scan(std::size_t n, std::size_t j, std::size_t steps);

}  // namespace sdiep::oracle

#pragma once

#include <cstddef>

#include "sdiep/core.hpp"

namespace sdiep {

/// M(Q) = n·max_{j≥1} ‖q_j‖_∞² together with the entry attaining it.
struct CoherenceResult {
  double m = 0.0;
  std::size_t column = 0;  ///< j
  std::size_t row = 0;     ///< k; the double sup over (k, l) is attained at k = l = row
  double implied_delta = 0.0;
  /// True when 1 - 1/m came out negative from rounding (m a hair below 1) and
  /// was clamped to 0. The threshold is strict either way: trace_sum > delta.
  bool clamped = false;
};

CoherenceResult coherence(const OrthogonalBasis& q);

/// Validates a raw matrix as a basis first (NotSquare, NotOrthogonal,
/// PerronColumnMissing), then measures it.
CoherenceResult coherence(const Matrix& q, const ToleranceConfig& tol = {});

/// 1 - 1/m. Values of m within 1e-12 below 1 are treated as 1; anything
/// smaller throws CoherenceBelowOne.
Threshold delta_from_coherence(double m, Family family = Family::External, std::size_t n = 0);

/// Kronecker product; column (j1, j2) lands at j1·n2 + j2, so column 0 stays Perron.
OrthogonalBasis tensor_basis(const OrthogonalBasis& a, const OrthogonalBasis& b,
                             const ToleranceConfig& tol = {});

enum class AsymptoticFamily { Cycle, Phase };

/// Second-order small-angle expansion 1/2 - θ²/2 of the family threshold.
/// Throws Mod8Unsupported for the canonical cycle when 8 | n.
double asymptotic_delta(std::size_t n, AsymptoticFamily family);

}  // namespace sdiep

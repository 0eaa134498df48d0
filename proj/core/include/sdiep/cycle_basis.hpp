#pragma once

// Canonical cycle-walk basis: column k ≥ 1 is √(2/n)·sin(2πkj/n + π/4) over
// rows j, column 0 is the Perron vector.

#include <cstddef>

#include "sdiep/core.hpp"

namespace sdiep::cycle {

/// ρ(n) ∈ {0, 1, 2, 4} from n mod 8: 0 if 8 | n, 1 if n odd, 2 if n ≡ 2, 6, 4 if n ≡ 4.
unsigned rho(std::size_t n) noexcept;

struct CycleParams {
  std::size_t n = 0;
  unsigned rho = 0;
  double delta_angle = 0.0;  ///< Δ_n = (π/4n)·ρ(n), radians
  double c = 0.0;            ///< c_n = cos²Δ_n
};

/// sin(2πkj/n + π/4). Throws IndexOutOfRange unless 1 ≤ j < n and k < n.
double s_value(std::size_t n, std::size_t j, std::size_t k);

OrthogonalBasis build_canonical(std::size_t n, const ToleranceConfig& tol = {});

CycleParams cycle_params(std::size_t n);

/// δ_n = 1 - 1/(2cos²Δ_n); equals 1/2 exactly when 8 | n.
Threshold delta_cycle(std::size_t n);

/// Single-eigenvalue spectrum that makes one diagonal entry of P hit zero at
/// the threshold (epsilon = 0) and go negative beyond it.
struct SharpnessWitness {
  Spectrum spectrum;
  std::size_t j = 0;  ///< eigenvalue slot carrying t
  std::size_t k = 0;  ///< the witness cell is (k, k)
  double t = 0.0;
  double entry_value = 0.0;  ///< p_kk = (1/n)(1 + 2t·S_j(k)²)
};

/// t = -1/(2c_n) - epsilon placed at the oracle's maximiser (j*, k*).
/// Throws EpsilonTooLarge when t < -1, InvalidArgument when epsilon < 0.
SharpnessWitness sharpness_witness(std::size_t n, double epsilon);

}  // namespace sdiep::cycle

#include "sdiep/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sdiep/cycle_basis.hpp"
#include "sdiep/error.hpp"

namespace sdiep {

CoherenceResult coherence(const OrthogonalBasis& q) {
  const std::size_t n = q.dimension();
  CoherenceResult r;
  double best_abs = 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const double a = std::abs(q(k, j));
      if (a > best_abs) {
        best_abs = a;
        r.column = j;
        r.row = k;
      }
    }
  }
  r.m = static_cast<double>(n) * best_abs * best_abs;
  const double raw = n > 1 ? 1.0 - 1.0 / r.m : 0.0;
  r.clamped = raw < 0.0;
  r.implied_delta = std::max(raw, 0.0);
  return r;
}

CoherenceResult coherence(const Matrix& q, const ToleranceConfig& tol) {
  return coherence(OrthogonalBasis(q, Family::External, tol));
}

Threshold delta_from_coherence(double m, Family family, std::size_t n) {
  if (!(m >= 1.0 - 1e-12)) {
    throw Error(ErrorCode::CoherenceBelowOne, "coherence " + std::to_string(m) + " is below 1");
  }
  Threshold t;
  t.delta = std::max(0.0, 1.0 - 1.0 / m);
  t.n = n;
  t.family = family;
  t.provenance = "coherence M = " + std::to_string(m);
  return t;
}

OrthogonalBasis tensor_basis(const OrthogonalBasis& a, const OrthogonalBasis& b,
                             const ToleranceConfig& tol) {
  return OrthogonalBasis(kronecker(a.matrix(), b.matrix()), Family::Tensor, tol);
}

double asymptotic_delta(std::size_t n, AsymptoticFamily family) {
  if (n < 3) throw Error(ErrorCode::DimensionTooSmall, "asymptotics need n >= 3");
  constexpr double kPi = std::numbers::pi;
  const double dn = static_cast<double>(n);
  double theta = 0.0;
  if (family == AsymptoticFamily::Cycle) {
    const unsigned r = cycle::rho(n);
    if (r == 0) throw Error(ErrorCode::Mod8Unsupported, "delta_n = 1/2 exactly when 8 | n");
    theta = kPi * static_cast<double>(r) / (4.0 * dn);
  } else if (n % 4 == 0) {
    theta = kPi / dn;
  } else if (n % 2 == 0) {
    theta = kPi / (2.0 * dn);
  } else {
    theta = kPi / (4.0 * dn);
  }
  return 0.5 - theta * theta / 2.0;
}

}  // namespace sdiep

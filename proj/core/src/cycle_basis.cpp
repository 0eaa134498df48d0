#include "sdiep/cycle_basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sdiep/error.hpp"
#include "sdiep/oracle.hpp"

namespace sdiep::cycle {

namespace {

constexpr double kPi = std::numbers::pi;

void require_dimension(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::DimensionTooSmall, "cycle bases need n >= 3");
}

// Reducing kj mod n first keeps the argument in [0, 2π) for large n.
double sine_entry(std::size_t n, std::size_t j, std::size_t k) {
  const auto r = static_cast<double>((k * j) % n);
  return std::sin(2.0 * kPi * r / static_cast<double>(n) + kPi / 4.0);
}

}  // namespace

unsigned rho(std::size_t n) noexcept {
  switch (n % 8) {
    case 0: return 0;
    case 4: return 4;
    case 2:
    case 6: return 2;
    default: return 1;
  }
}

double s_value(std::size_t n, std::size_t j, std::size_t k) {
  if (j < 1 || j >= n || k >= n) {
    throw Error(ErrorCode::IndexOutOfRange, "s_value needs 1 <= j < n and 0 <= k < n");
  }
  return sine_entry(n, j, k);
}

OrthogonalBasis build_canonical(std::size_t n, const ToleranceConfig& tol) {
  require_dimension(n);
  const double dn = static_cast<double>(n);
  const double scale = std::sqrt(2.0 / dn);
  Matrix q(n, n);
  for (std::size_t row = 0; row < n; ++row) {
    q(row, 0) = 1.0 / std::sqrt(dn);
    for (std::size_t col = 1; col < n; ++col) q(row, col) = scale * sine_entry(n, col, row);
  }

  // The √(2/n) scaling gives unit columns at every frequency, including k = n/2;
  // renormalise anything that drifted and let the basis check reject the rest.
  for (std::size_t col = 1; col < n; ++col) {
    double norm2 = 0.0;
    for (std::size_t row = 0; row < n; ++row) norm2 += q(row, col) * q(row, col);
    const double norm = std::sqrt(norm2);
    if (std::abs(norm - 1.0) > tol.orth) {
      for (std::size_t row = 0; row < n; ++row) q(row, col) /= norm;
    }
  }
  return OrthogonalBasis(std::move(q), Family::CycleCanonical, tol);
}

CycleParams cycle_params(std::size_t n) {
  require_dimension(n);
  const unsigned r = rho(n);
  const double angle = kPi / (4.0 * static_cast<double>(n)) * static_cast<double>(r);
  const double cosine = std::cos(angle);
  return {n, r, angle, cosine * cosine};
}

Threshold delta_cycle(std::size_t n) {
  const CycleParams p = cycle_params(n);
  Threshold t;
  // ρ = 0 is kept exact rather than going through cos(0).
  t.delta = p.rho == 0 ? 0.5 : 1.0 - 1.0 / (2.0 * p.c);
  t.n = n;
  t.family = Family::CycleCanonical;
  t.modulus = 8;
  t.residue = static_cast<unsigned>(n % 8);
  t.provenance = "canonical cycle basis, n mod 8 = " + std::to_string(t.residue) +
                 ", rho = " + std::to_string(p.rho);
  return t;
}

SharpnessWitness sharpness_witness(std::size_t n, double epsilon) {
  require_dimension(n);
  if (!(epsilon >= 0.0)) throw Error(ErrorCode::InvalidArgument, "epsilon must be >= 0");
  const CycleParams p = cycle_params(n);
  const double t = -1.0 / (2.0 * p.c) - epsilon;
  // 1e-15 absorbs the rounding in -1/(2·0.5) for n ≡ 4 (mod 8) at n = 4.
  if (t < -1.0 - 1e-15) {
    throw Error(ErrorCode::EpsilonTooLarge,
                "t = " + std::to_string(t) + " is below -1 for n = " + std::to_string(n));
  }
  const double t_clamped = std::max(t, -1.0);

  const oracle::CnResult arg = oracle::brute_cn(n);
  std::vector<double> values(n, 0.0);
  values[0] = 1.0;
  values[arg.j] = t_clamped;

  const double s = sine_entry(n, arg.j, arg.k);
  SharpnessWitness w{validate_spectrum(std::move(values)), arg.j, arg.k, t_clamped, 0.0};
  w.entry_value = (1.0 + 2.0 * t_clamped * s * s) / static_cast<double>(n);
  return w;
}

}  // namespace sdiep::cycle

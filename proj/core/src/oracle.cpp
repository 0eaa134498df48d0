#include "sdiep/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sdiep/error.hpp"

namespace sdiep::oracle {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTieTol = 1e-14;

void require_dimension(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::DimensionTooSmall, "oracle scans need n >= 3");
}

}  // namespace

CnResult brute_cn(std::size_t n) {
  require_dimension(n);
  const double dn = static_cast<double>(n);
  std::vector<double> s(n);
  CnResult best{-std::numeric_limits<double>::infinity(), 0, 0, 0};
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      s[k] = std::sin(2.0 * kPi * static_cast<double>(k) * static_cast<double>(j) / dn + kPi / 4.0);
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = 0; l < n; ++l) {
        const double v = s[k] * s[l];
        if (v > best.c + kTieTol) best = {v, j, k, l};
      }
    }
  }
  return best;
}

double brute_delta_angle(std::size_t n) {
  require_dimension(n);
  const double dn = static_cast<double>(n);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t m = 0; m < n; ++m) {
    for (int t = 0; t < 8; ++t) {
      const double d = std::abs(2.0 * kPi * static_cast<double>(m) / dn -
                                static_cast<double>(2 * t + 1) * kPi / 4.0);
      best = std::min(best, d);
    }
  }
  return best;
}

unsigned brute_rho(std::size_t n) {
  require_dimension(n);
  long long best = std::numeric_limits<long long>::max();
  const auto ln = static_cast<long long>(n);
  for (long long m = 0; m < ln; ++m) {
    for (long long t = 0; t < 8; ++t) {
      best = std::min(best, std::llabs(8 * m - (2 * t + 1) * ln));
    }
  }
  return static_cast<unsigned>(best);
}

CoherenceScan brute_coherence_scan(const OrthogonalBasis& q) {
  const std::size_t n = q.dimension();
  const double dn = static_cast<double>(n);
  CoherenceScan best{-1.0, 0, 0, 0};
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = 0; l < n; ++l) {
        const double v = dn * std::abs(q(k, j) * q(l, j));
        if (v > best.m + kTieTol) best = {v, j, k, l};
      }
    }
  }
  return best;
}

double brute_coherence(const OrthogonalBasis& q) { return brute_coherence_scan(q).m; }

PhaseScan phase_scan(std::size_t n, std::size_t j, std::size_t steps) {
  require_dimension(n);
  if (steps < 1000) throw Error(ErrorCode::InvalidArgument, "phase_scan needs at least 1000 steps");
  if (j == 0 || j >= n) throw Error(ErrorCode::IndexOutOfRange, "eigenspace index out of range");
  const double dn = static_cast<double>(n);
  const double scale = std::sqrt(2.0 / dn);
  const double step = (kPi / 2.0) / static_cast<double>(steps);

  std::vector<double> theta(n);
  for (std::size_t k = 0; k < n; ++k) {
    theta[k] = 2.0 * kPi * static_cast<double>(k) * static_cast<double>(j) / dn;
  }

  PhaseScan out{std::numeric_limits<double>::infinity(), 0.0, step, steps};
  for (std::size_t i = 0; i < steps; ++i) {
    const double phi = static_cast<double>(i) * step;
    double sup = 0.0;
    for (double th : theta) {
      sup = std::max({sup, std::abs(std::sin(th + phi)), std::abs(std::cos(th + phi))});
    }
    sup *= scale;
    if (sup < out.minimum - kTieTol) {
      out.minimum = sup;
      out.best_phase = phi;
    }
  }
  return out;
}

}  // namespace sdiep::oracle

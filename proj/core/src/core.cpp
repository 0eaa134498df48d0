#include "sdiep/core.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

#include "sdiep/error.hpp"

namespace sdiep {

void ToleranceConfig::validate() const {
  for (double v : {orth, sum, nonneg, eig, closed_form}) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::InvalidArgument, "tolerances must be finite and strictly positive");
    }
  }
}

namespace {

void override_from(const char* name, double& field) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0') {
    throw Error(ErrorCode::InvalidArgument, std::string(name) + " is not a number: " + raw);
  }
  field = v;
}

}  // namespace

ToleranceConfig ToleranceConfig::from_environment() { return from_environment(ToleranceConfig{}); }

ToleranceConfig ToleranceConfig::from_environment(ToleranceConfig base) {
  override_from("SDIEP_TOL_ORTH", base.orth);
  override_from("SDIEP_TOL_SUM", base.sum);
  override_from("SDIEP_TOL_NONNEG", base.nonneg);
  override_from("SDIEP_TOL_EIG", base.eig);
  override_from("SDIEP_TOL_CLOSED_FORM", base.closed_form);
  base.validate();
  return base;
}

std::string_view to_string(TraceStatus status) noexcept {
  switch (status) {
    case TraceStatus::Positive: return "positive";
    case TraceStatus::Boundary: return "boundary: realisability not guaranteed";
    case TraceStatus::Negative: return "negative: not realisable";
  }
  return "unknown";
}

Spectrum validate_spectrum(std::vector<double> values, double boundary_tol) {
  if (values.size() < 2) {
    throw Error(ErrorCode::TooShort, "a spectrum needs at least two values");
  }
  if (values[0] != 1.0) {
    throw Error(ErrorCode::FirstNotOne, "values[0] must be exactly 1");
  }
  for (std::size_t j = 1; j < values.size(); ++j) {
    if (!(values[j] >= -1.0 && values[j] <= 0.0)) {
      throw Error(ErrorCode::OutOfRange,
                  "values[" + std::to_string(j) + "] = " + std::to_string(values[j]) +
                      " is outside [-1, 0]");
    }
  }
  const double t = std::accumulate(values.begin(), values.end(), 0.0);
  TraceStatus status = TraceStatus::Positive;
  if (std::abs(t) <= boundary_tol) {
    status = TraceStatus::Boundary;
  } else if (t < 0.0) {
    status = TraceStatus::Negative;
  }
  return Spectrum(std::move(values), t, status);
}

double trace_sum(const Spectrum& s) noexcept { return s.trace_sum(); }

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::CycleCanonical: return "cycle-canonical";
    case Family::CyclePhase: return "cycle-phase";
    case Family::HadamardSylvester: return "hadamard-sylvester";
    case Family::HadamardPaley: return "hadamard-paley";
    case Family::Tensor: return "tensor";
    case Family::External: return "external";
  }
  return "unknown";
}

OrthogonalBasis::OrthogonalBasis(Matrix q, Family family, const ToleranceConfig& tol)
    : q_(std::move(q)), family_(family) {
  if (!q_.square() || q_.rows() == 0) {
    throw Error(ErrorCode::NotSquare, "basis must be a non-empty square matrix");
  }
  const std::size_t n = q_.rows();
  orth_defect_ = sdiep::orthogonality_defect(q_);
  if (!(orth_defect_ <= tol.orth)) {
    throw Error(ErrorCode::NotOrthogonal,
                "‖QᵀQ − I‖ = " + std::to_string(orth_defect_) + " exceeds tolerance");
  }
  const double perron = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t r = 0; r < n; ++r) {
    if (!(std::abs(q_(r, 0) - perron) <= tol.orth)) {
      throw Error(ErrorCode::PerronColumnMissing,
                  "column 0 differs from 1/sqrt(n) at row " + std::to_string(r));
    }
  }
}

bool RealisationReport::nonnegative(const ToleranceConfig& tol) const noexcept {
  return min_entry >= -tol.nonneg;
}

bool RealisationReport::stochastic(const ToleranceConfig& tol) const noexcept {
  return sym_defect <= tol.sum && row_sum_defect <= tol.sum && col_sum_defect <= tol.sum;
}

bool RealisationReport::passes(const ToleranceConfig& tol) const noexcept {
  const bool spectrum_ok = !spectrum_residual || *spectrum_residual <= tol.eig;
  return stochastic(tol) && nonnegative(tol) && spectrum_ok;
}

}  // namespace sdiep

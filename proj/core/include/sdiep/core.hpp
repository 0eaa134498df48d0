#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdiep/matrix.hpp"

namespace sdiep {

/// Numerical tolerances used by every verification predicate.
///
/// Defaults suit double precision at n up to a few hundred. Each field can be
/// overridden through the environment (SDIEP_TOL_ORTH, SDIEP_TOL_SUM,
/// SDIEP_TOL_NONNEG, SDIEP_TOL_EIG, SDIEP_TOL_CLOSED_FORM).
struct ToleranceConfig {
  double orth = 1e-10;
  double sum = 1e-10;
  double nonneg = 1e-12;
  double eig = 1e-9;
  double closed_form = 1e-9;

  /// Throws InvalidArgument unless every field is strictly positive and finite.
  void validate() const;

  static ToleranceConfig from_environment();
  static ToleranceConfig from_environment(ToleranceConfig base);
};

enum class TraceStatus {
  Positive,  ///< 1 + Σλ > 0
  Boundary,  ///< 1 + Σλ = 0: accepted, realisability not guaranteed
  Negative,  ///< 1 + Σλ < 0: no nonnegative matrix has this trace
};

std::string_view to_string(TraceStatus status) noexcept;

/// A Suleĭmanova list (1, λ_1, …, λ_{n-1}) with every λ_j in [-1, 0].
///
/// Index 0 is the Perron eigenvalue. The non-Perron values are kept in the
/// order given; nothing here sorts them.
class Spectrum {
 public:
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t j) const noexcept { return values_[j]; }

  double trace_sum() const noexcept { return trace_sum_; }
  TraceStatus status() const noexcept { return status_; }

 private:
  friend Spectrum validate_spectrum(std::vector<double> values, double boundary_tol);
  Spectrum(std::vector<double> values, double trace_sum, TraceStatus status)
      : values_(std::move(values)), trace_sum_(trace_sum), status_(status) {}

  std::vector<double> values_;
  double trace_sum_ = 0.0;
  TraceStatus status_ = TraceStatus::Positive;
};

/// Checks the Suleĭmanova invariants. Traces within `boundary_tol` of zero are
/// classed as Boundary.
///
/// Throws FirstNotOne, OutOfRange or TooShort.
Spectrum validate_spectrum(std::vector<double> values, double boundary_tol = 1e-12);

/// 1 + Σ_{j≥1} λ_j
double trace_sum(const Spectrum& s) noexcept;

enum class Family {
  CycleCanonical,
  CyclePhase,
  HadamardSylvester,
  HadamardPaley,
  Tensor,
  External,
};

std::string_view to_string(Family family) noexcept;

/// Real orthogonal n×n matrix whose column 0 is 1/√n.
///
/// Construction checks both properties against `tol.orth` and throws
/// NotSquare, NotOrthogonal or PerronColumnMissing; an instance is therefore
/// always valid.
class OrthogonalBasis {
 public:
  OrthogonalBasis(Matrix q, Family family, const ToleranceConfig& tol = {});

  std::size_t dimension() const noexcept { return q_.rows(); }
  const Matrix& matrix() const noexcept { return q_; }
  Family family() const noexcept { return family_; }
  double operator()(std::size_t row, std::size_t col) const noexcept { return q_(row, col); }
  double orthogonality_defect() const noexcept { return orth_defect_; }

 private:
  Matrix q_;
  Family family_;
  double orth_defect_ = 0.0;
};

/// Sufficient trace threshold δ: realisation is guaranteed when 1 + Σλ > δ.
struct Threshold {
  double delta = 0.0;
  std::size_t n = 0;
  Family family = Family::External;
  unsigned modulus = 0;  ///< 8 for the canonical cycle, 4 for the phase basis, 0 otherwise
  unsigned residue = 0;  ///< n mod modulus
  std::string provenance;
};

struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// P = QΛQ^T together with every defect measured on it.
struct RealisationReport {
  Matrix p;
  double sym_defect = 0.0;
  double row_sum_defect = 0.0;
  double col_sum_defect = 0.0;
  double min_entry = 0.0;
  Cell min_cell;
  /// max_j ‖P q_j - λ_j q_j‖_∞; empty when no basis was available to check against.
  std::optional<double> spectrum_residual;

  bool nonnegative(const ToleranceConfig& tol = {}) const noexcept;
  bool stochastic(const ToleranceConfig& tol = {}) const noexcept;
  bool passes(const ToleranceConfig& tol = {}) const noexcept;
};

}  // namespace sdiep

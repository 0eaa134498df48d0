#pragma once

// Schur template P(Λ) = QΛQ^T and the checks that certify it.

#include <cstddef>

#include "sdiep/core.hpp"

namespace sdiep {

/// Forms P = (QΛ)Q^T and measures every defect, including the eigenpair
/// residual max_j ‖P q_j - λ_j q_j‖_∞. Spectra that miss the threshold are
/// realised anyway; the report says honestly whether P came out nonnegative.
/// Throws DimensionMismatch.
RealisationReport realise(const Spectrum& spectrum, const OrthogonalBasis& q);

/// p_kl = (1/n)(1 + Σ_{j≥1} λ_j·n·q_j(k)q_j(l)) without forming P.
/// Throws DimensionMismatch or IndexOutOfRange.
double entry(const Spectrum& spectrum, const OrthogonalBasis& q, std::size_t k, std::size_t l);

/// (1/n)(1 + m·Σ_{j≥1} λ_j): a lower bound on every entry of P for any basis
/// with coherence at most m.
double lower_bound(const Spectrum& spectrum, double m);

/// Symmetry, row/column sums and minimum entry of an arbitrary square matrix.
/// The spectrum residual is left empty. Throws NotSquare.
RealisationReport inspect(Matrix p);

/// max_j ‖P q_j - λ_j q_j‖_∞. Throws DimensionMismatch.
double eigenpair_residual(const Matrix& p, const Spectrum& spectrum, const OrthogonalBasis& q);

}  // namespace sdiep

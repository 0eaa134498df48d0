#include "sdiep/realise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sdiep/error.hpp"

namespace sdiep {

RealisationReport inspect(Matrix p) {
  if (!p.square() || p.rows() == 0) throw Error(ErrorCode::NotSquare, "matrix must be square");
  const std::size_t n = p.rows();
  RealisationReport r;
  r.min_entry = std::numeric_limits<double>::infinity();
  std::vector<double> col_sums(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double row_sum = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
      const double v = p(k, l);
      row_sum += v;
      col_sums[l] += v;
      r.sym_defect = std::max(r.sym_defect, std::abs(v - p(l, k)));
      if (v < r.min_entry) {
        r.min_entry = v;
        r.min_cell = {k, l};
      }
    }
    r.row_sum_defect = std::max(r.row_sum_defect, std::abs(row_sum - 1.0));
  }
  for (double s : col_sums) r.col_sum_defect = std::max(r.col_sum_defect, std::abs(s - 1.0));
  r.p = std::move(p);
  return r;
}

double eigenpair_residual(const Matrix& p, const Spectrum& spectrum, const OrthogonalBasis& q) {
  const std::size_t n = q.dimension();
  if (p.rows() != n || p.cols() != n || spectrum.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "matrix, spectrum and basis sizes differ");
  }
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      double pq = 0.0;
      for (std::size_t l = 0; l < n; ++l) pq += p(k, l) * q(l, j);
      worst = std::max(worst, std::abs(pq - spectrum[j] * q(k, j)));
    }
  }
  return worst;
}

RealisationReport realise(const Spectrum& spectrum, const OrthogonalBasis& q) {
  const std::size_t n = q.dimension();
  if (spectrum.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "spectrum length " + std::to_string(spectrum.size()) +
                                                  " vs basis dimension " + std::to_string(n));
  }
  Matrix scaled = q.matrix();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) scaled(k, j) *= spectrum[j];

  RealisationReport r = inspect(multiply_transposed(scaled, q.matrix()));
  r.spectrum_residual = eigenpair_residual(r.p, spectrum, q);
  return r;
}

double entry(const Spectrum& spectrum, const OrthogonalBasis& q, std::size_t k, std::size_t l) {
  const std::size_t n = q.dimension();
  if (spectrum.size() != n) throw Error(ErrorCode::DimensionMismatch, "spectrum/basis size");
  if (k >= n || l >= n) throw Error(ErrorCode::IndexOutOfRange, "entry index out of range");
  const double dn = static_cast<double>(n);
  double s = 0.0;
  for (std::size_t j = 1; j < n; ++j) s += spectrum[j] * dn * q(k, j) * q(l, j);
  return (1.0 + s) / dn;
}

double lower_bound(const Spectrum& spectrum, double m) {
  double negative_mass = 0.0;
  for (std::size_t j = 1; j < spectrum.size(); ++j) negative_mass += spectrum[j];
  return (1.0 + m * negative_mass) / static_cast<double>(spectrum.size());
}

}  // namespace sdiep

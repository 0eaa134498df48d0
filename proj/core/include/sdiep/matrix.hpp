#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sdiep {

// Dense row-major real matrix. Sizes here stay in the low hundreds, so the
// naive O(n^3) kernels below are all we need.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<double> column(std::size_t c) const;

  std::span<const double> data() const noexcept { return data_; }

  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);

// A * B^T without materialising the transpose.
Matrix multiply_transposed(const Matrix& a, const Matrix& b);

Matrix kronecker(const Matrix& a, const Matrix& b);

// max_{ij} |a_ij - b_ij|
double max_abs_difference(const Matrix& a, const Matrix& b);

// ‖Q^T Q - I‖ measured entrywise (max norm).
double orthogonality_defect(const Matrix& q);

}  // namespace sdiep

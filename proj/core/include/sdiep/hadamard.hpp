#pragma once

// ±1 Hadamard matrices (H^T H = nI) of Sylvester and Paley type I, and their
// normalisation into flat orthogonal bases with coherence 1.

#include <cstddef>
#include <vector>

#include "sdiep/core.hpp"

namespace sdiep::hadamard {

enum class Construction { Sylvester, Paley1 };

class HadamardMatrix {
 public:
  HadamardMatrix(std::size_t n, std::vector<int> entries, Construction construction);

  std::size_t order() const noexcept { return n_; }
  int operator()(std::size_t row, std::size_t col) const noexcept { return entries_[row * n_ + col]; }
  Construction construction() const noexcept { return construction_; }

  /// H^T H == nI in integer arithmetic.
  bool is_hadamard() const;

 private:
  std::size_t n_;
  std::vector<int> entries_;
  Construction construction_;
};

/// Recursive doubling from H_1 = (1); order 2^d.
HadamardMatrix sylvester(unsigned d);

/// Order q + 1 from the quadratic-residue character mod q.
/// Throws NotPrime or WrongResidue (q ≢ 3 mod 4).
HadamardMatrix paley1(std::size_t q);

bool is_prime(std::size_t q) noexcept;

/// Flips every row whose first entry is -1, then scales by 1/√n.
OrthogonalBasis normalise_perron(const HadamardMatrix& h, const ToleranceConfig& tol = {});

struct Availability {
  bool sylvester = false;
  bool paley1 = false;
  bool any() const noexcept { return sylvester || paley1; }
};

Availability hadamard_available(std::size_t n) noexcept;

/// Normalised basis of order n, Sylvester preferred. Throws HadamardUnavailable.
OrthogonalBasis hadamard_basis(std::size_t n, const ToleranceConfig& tol = {});

/// δ = 0 for every constructible order. Throws HadamardUnavailable.
Threshold delta_hadamard(std::size_t n);

}  // namespace sdiep::hadamard

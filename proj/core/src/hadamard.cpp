#include "sdiep/hadamard.hpp"

#include <bit>
#include <cmath>

#include "sdiep/error.hpp"

namespace sdiep::hadamard {

HadamardMatrix::HadamardMatrix(std::size_t n, std::vector<int> entries, Construction construction)
    : n_(n), entries_(std::move(entries)), construction_(construction) {
  if (entries_.size() != n_ * n_) {
    throw Error(ErrorCode::DimensionMismatch, "Hadamard entries do not match the order");
  }
}

bool HadamardMatrix::is_hadamard() const {
  for (int v : entries_) {
    if (v != 1 && v != -1) return false;
  }
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = a; b < n_; ++b) {
      long long dot = 0;
      for (std::size_t r = 0; r < n_; ++r) dot += (*this)(r, a) * (*this)(r, b);
      if (dot != (a == b ? static_cast<long long>(n_) : 0)) return false;
    }
  }
  return true;
}

HadamardMatrix sylvester(unsigned d) {
  if (d > 14) throw Error(ErrorCode::InvalidArgument, "Sylvester order 2^d too large");
  std::vector<int> h{1};
  std::size_t n = 1;
  for (unsigned step = 0; step < d; ++step) {
    const std::size_t m = 2 * n;
    std::vector<int> next(m * m);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        const int v = h[r * n + c];
        next[r * m + c] = v;
        next[r * m + c + n] = v;
        next[(r + n) * m + c] = v;
        next[(r + n) * m + c + n] = -v;
      }
    }
    h = std::move(next);
    n = m;
  }
  return HadamardMatrix(n, std::move(h), Construction::Sylvester);
}

bool is_prime(std::size_t q) noexcept {
  if (q < 2) return false;
  for (std::size_t f = 2; f * f <= q; ++f) {
    if (q % f == 0) return false;
  }
  return true;
}

namespace {

// Legendre symbol (a | q) for odd prime q, with χ(0) = 0.
int quadratic_character(std::size_t a, std::size_t q, const std::vector<bool>& is_residue) {
  a %= q;
  if (a == 0) return 0;
  return is_residue[a] ? 1 : -1;
}

}  // namespace

HadamardMatrix paley1(std::size_t q) {
  if (!is_prime(q)) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not prime");
  if (q % 4 != 3) throw Error(ErrorCode::WrongResidue, std::to_string(q) + " is not 3 mod 4");

  std::vector<bool> is_residue(q, false);
  for (std::size_t x = 1; x < q; ++x) is_residue[(x * x) % q] = true;

  // H = I + S with S = [[0, 1^T], [-1, J]] and J_ab = χ(a - b) skew-symmetric.
  const std::size_t n = q + 1;
  std::vector<int> h(n * n, 0);
  for (std::size_t b = 1; b < n; ++b) {
    h[b] = 1;
    h[b * n] = -1;
  }
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      h[(a + 1) * n + (b + 1)] = quadratic_character(a + q - b, q, is_residue);
    }
  }
  for (std::size_t i = 0; i < n; ++i) h[i * n + i] += 1;
  return HadamardMatrix(n, std::move(h), Construction::Paley1);
}

OrthogonalBasis normalise_perron(const HadamardMatrix& h, const ToleranceConfig& tol) {
  const std::size_t n = h.order();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Matrix q(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const int sign = h(r, 0);
    for (std::size_t c = 0; c < n; ++c) q(r, c) = sign * h(r, c) * scale;
  }
  const Family family = h.construction() == Construction::Sylvester ? Family::HadamardSylvester
                                                                    : Family::HadamardPaley;
  return OrthogonalBasis(std::move(q), family, tol);
}

Availability hadamard_available(std::size_t n) noexcept {
  Availability a;
  a.sylvester = n >= 1 && std::has_single_bit(n);
  a.paley1 = n >= 4 && is_prime(n - 1) && (n - 1) % 4 == 3;
  return a;
}

OrthogonalBasis hadamard_basis(std::size_t n, const ToleranceConfig& tol) {
  const Availability a = hadamard_available(n);
  if (a.sylvester) return normalise_perron(sylvester(static_cast<unsigned>(std::countr_zero(n))), tol);
  if (a.paley1) return normalise_perron(paley1(n - 1), tol);
  throw Error(ErrorCode::HadamardUnavailable,
              "no Sylvester or prime Paley construction of order " + std::to_string(n));
}

Threshold delta_hadamard(std::size_t n) {
  const Availability a = hadamard_available(n);
  if (!a.any()) {
    throw Error(ErrorCode::HadamardUnavailable,
                "no Sylvester or prime Paley construction of order " + std::to_string(n));
  }
  Threshold t;
  t.delta = 0.0;
  t.n = n;
  t.family = a.sylvester ? Family::HadamardSylvester : Family::HadamardPaley;
  t.modulus = 4;
  t.residue = static_cast<unsigned>(n % 4);
  t.provenance = a.sylvester ? "Sylvester (Walsh-Hadamard), n = 2^" +
                                   std::to_string(std::countr_zero(n))
                             : "Paley type I, q = " + std::to_string(n - 1);
  return t;
}

}  // namespace sdiep::hadamard

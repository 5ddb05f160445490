#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "cospec/rational.hpp"

namespace cospec {

/// Dense square matrix of exact rationals, row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t order);
  ExactMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static ExactMatrix identity(std::size_t order);
  /// All-ones matrix J.
  static ExactMatrix ones(std::size_t order);
  /// Ones on the anti-diagonal, zeros elsewhere.
  static ExactMatrix anti_identity(std::size_t order);

  std::size_t order() const noexcept { return order_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * order_ + j];
  }

  std::span<const Rational> entries() const noexcept { return entries_; }

  ExactMatrix transpose() const;
  /// result(i, j) = (*this)(ordering[i], ordering[j]). `ordering` must be a
  /// permutation of 0..order()-1.
  ExactMatrix permuted(std::span<const std::size_t> ordering) const;
  /// Leading square block of the given size.
  ExactMatrix leading_block(std::size_t size) const;

  Rational trace() const;
  Rational row_sum(std::size_t i) const;
  bool is_symmetric() const;
  bool is_integral() const;

  ExactMatrix& operator+=(const ExactMatrix& other);
  ExactMatrix& operator-=(const ExactMatrix& other);
  ExactMatrix& operator*=(const Rational& scalar);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const Rational& s) { return a *= s; }
  friend ExactMatrix operator*(const Rational& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

  bool operator==(const ExactMatrix& other) const;

 private:
  std::size_t order_ = 0;
  std::vector<Rational> entries_;
};

/// Determinant by exact Gaussian elimination.
Rational determinant(const ExactMatrix& m);

/// Reflection across the anti-diagonal: result(i, j) = m(n-1-j, n-1-i).
ExactMatrix anti_transpose(const ExactMatrix& m);

/// diag((1/m) J_{2m} - Î_{2m}, I_{ambient-2m}). Symmetric and involutory.
/// Throws InputError for m = 0 or ambient < 2m.
ExactMatrix swap_similarity(std::size_t m, std::size_t ambient);

/// Outcome of checking M = [[N, Q], [Qᵀ, B]] with N the leading 2m block.
struct BlockReport {
  bool n_constant_rowsum = false;
  /// Every column of Q reads (p,...,p, r,...,r) with p and r repeated m times.
  bool q_column_pattern = false;
  std::optional<Rational> rowsum_value;

  bool holds() const noexcept { return n_constant_rowsum && q_column_pattern; }
};

/// Throws InputError if `m` is not symmetric or too small for the split.
BlockReport check_block_conditions(const ExactMatrix& m, std::size_t half);

/// S·M·S for an involutory S. Throws InputError on order mismatch or S² ≠ I.
ExactMatrix conjugate(const ExactMatrix& s, const ExactMatrix& m);

}  // namespace cospec

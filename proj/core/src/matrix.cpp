#include "cospec/matrix.hpp"

#include <algorithm>
#include <string>

#include "cospec/errors.hpp"

namespace cospec {

ExactMatrix::ExactMatrix(std::size_t order) : order_(order), entries_(order * order) {}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : ExactMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != order_) throw InputError("matrix rows must all have length " + std::to_string(order_));
    std::size_t j = 0;
    for (long value : row) (*this)(i, j++) = value;
    ++i;
  }
}

ExactMatrix ExactMatrix::identity(std::size_t order) {
  ExactMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::ones(std::size_t order) {
  ExactMatrix m(order);
  std::fill(m.entries_.begin(), m.entries_.end(), Rational(1));
  return m;
}

ExactMatrix ExactMatrix::anti_identity(std::size_t order) {
  ExactMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m(i, order - 1 - i) = 1;
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

ExactMatrix ExactMatrix::permuted(std::span<const std::size_t> ordering) const {
  std::vector<bool> seen(order_, false);
  if (ordering.size() != order_) throw InputError("ordering length does not match the matrix order");
  for (std::size_t k : ordering) {
    if (k >= order_ || seen[k]) throw InputError("ordering is not a permutation");
    seen[k] = true;
  }
  ExactMatrix out(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) out(i, j) = (*this)(ordering[i], ordering[j]);
  }
  return out;
}

ExactMatrix ExactMatrix::leading_block(std::size_t size) const {
  if (size > order_) throw InputError("leading block larger than the matrix");
  ExactMatrix out(size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) out(i, j) = (*this)(i, j);
  }
  return out;
}

Rational ExactMatrix::trace() const {
  Rational sum = 0;
  for (std::size_t i = 0; i < order_; ++i) sum += (*this)(i, i);
  return sum;
}

Rational ExactMatrix::row_sum(std::size_t i) const {
  Rational sum = 0;
  for (std::size_t j = 0; j < order_; ++j) sum += (*this)(i, j);
  return sum;
}

bool ExactMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = i + 1; j < order_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

bool ExactMatrix::is_integral() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& q) { return is_integer(q); });
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& other) {
  if (other.order_ != order_) throw InputError("matrix order mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& other) {
  if (other.order_ != order_) throw InputError("matrix order mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Rational& scalar) {
  for (auto& entry : entries_) entry *= scalar;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.order_ != b.order_) throw InputError("matrix order mismatch");
  const std::size_t n = a.order_;
  ExactMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

bool ExactMatrix::operator==(const ExactMatrix& other) const {
  return order_ == other.order_ && entries_ == other.entries_;
}

Rational determinant(const ExactMatrix& m) {
  ExactMatrix a = m;
  const std::size_t n = a.order();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(a(i, col)) == 0) continue;
      const Rational factor = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
    }
  }
  return det;
}

ExactMatrix anti_transpose(const ExactMatrix& m) {
  const std::size_t n = m.order();
  ExactMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(n - 1 - j, n - 1 - i);
  }
  return out;
}

ExactMatrix swap_similarity(std::size_t m, std::size_t ambient) {
  if (m == 0) throw InputError("swap similarity needs a positive set size");
  if (ambient < 2 * m) {
    throw InputError("ambient order " + std::to_string(ambient) + " is smaller than 2m = " +
                     std::to_string(2 * m));
  }
  ExactMatrix s = ExactMatrix::identity(ambient);
  const Rational inv(1, static_cast<unsigned long>(m));
  const std::size_t k = 2 * m;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      s(i, j) = inv - (i + j == k - 1 ? Rational(1) : Rational(0));
    }
  }
  return s;
}

BlockReport check_block_conditions(const ExactMatrix& m, std::size_t half) {
  if (half == 0 || m.order() < 2 * half) {
    throw InputError("block split 2m = " + std::to_string(2 * half) +
                     " does not fit a matrix of order " + std::to_string(m.order()));
  }
  if (!m.is_symmetric()) throw InputError("block conditions need a symmetric matrix");
  const std::size_t k = 2 * half;
  const std::size_t n = m.order();

  BlockReport report;
  Rational first = 0;
  for (std::size_t j = 0; j < k; ++j) first += m(0, j);
  report.n_constant_rowsum = true;
  for (std::size_t i = 1; i < k && report.n_constant_rowsum; ++i) {
    Rational sum = 0;
    for (std::size_t j = 0; j < k; ++j) sum += m(i, j);
    report.n_constant_rowsum = sum == first;
  }
  if (report.n_constant_rowsum) report.rowsum_value = first;

  report.q_column_pattern = true;
  for (std::size_t col = k; col < n && report.q_column_pattern; ++col) {
    const Rational& p = m(0, col);
    const Rational& r = m(half, col);
    for (std::size_t i = 0; i < half && report.q_column_pattern; ++i) {
      report.q_column_pattern = m(i, col) == p && m(half + i, col) == r;
    }
  }
  return report;
}

ExactMatrix conjugate(const ExactMatrix& s, const ExactMatrix& m) {
  if (s.order() != m.order()) {
    throw InputError("conjugation order mismatch: " + std::to_string(s.order()) + " vs " +
                     std::to_string(m.order()));
  }
  if (s * s != ExactMatrix::identity(s.order())) {
    throw InputError("conjugating matrix is not an involution");
  }
  return s * m * s;
}

}  // namespace cospec

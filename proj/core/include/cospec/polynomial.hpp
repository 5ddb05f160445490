#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cospec/rational.hpp"

namespace cospec {

/// Univariate polynomial with exact rational coefficients, stored lowest
/// degree first with no trailing zeros. The zero polynomial has degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);

  /// Coefficients listed highest degree first, as printed.
  static UniPoly from_descending(const std::vector<Rational>& coefficients);
  static UniPoly constant(const Rational& c);
  /// The polynomial x.
  static UniPoly variable();

  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const noexcept { return coefficients_.empty(); }
  Rational coefficient(std::size_t power) const;
  Rational leading() const;
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }

  Rational evaluate(const Rational& x) const;
  /// Divides by the leading coefficient; the zero polynomial is returned as is.
  UniPoly monic() const;
  /// p(a·x + b).
  UniPoly compose_affine(const Rational& a, const Rational& b) const;

  /// Coefficients highest degree first, space separated, lowest terms
  /// ("1 -4 3 0"). The zero polynomial prints as "0".
  std::string to_string() const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const Rational& scalar);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);

  bool operator==(const UniPoly& other) const { return coefficients_ == other.coefficients_; }

 private:
  void normalize();
  std::vector<Rational> coefficients_;
};

/// Bivariate polynomial in (λ, r); coefficient(i, j) multiplies λ^i r^j.
/// Trailing all-zero rows and columns are trimmed.
class BiPoly {
 public:
  BiPoly() = default;
  /// grid[i][j] is the coefficient of λ^i r^j; ragged rows are zero-padded.
  explicit BiPoly(std::vector<std::vector<Rational>> grid);

  static BiPoly constant(const Rational& c);
  static BiPoly lambda();
  static BiPoly r();

  int degree_lambda() const noexcept { return static_cast<int>(grid_.size()) - 1; }
  int degree_r() const noexcept;
  bool is_zero() const noexcept { return grid_.empty(); }
  Rational coefficient(std::size_t i, std::size_t j) const;
  const std::vector<std::vector<Rational>>& grid() const noexcept { return grid_; }

  Rational evaluate(const Rational& lambda, const Rational& r) const;
  /// Fix r = value, leaving a polynomial in λ.
  UniPoly slice_r(const Rational& value) const;
  /// Fix λ = value, leaving a polynomial in r.
  UniPoly slice_lambda(const Rational& value) const;

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);

  bool operator==(const BiPoly& other) const { return grid_ == other.grid_; }

 private:
  void normalize();
  std::vector<std::vector<Rational>> grid_;
};

}  // namespace cospec

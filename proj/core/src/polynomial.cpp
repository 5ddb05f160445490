#include "cospec/polynomial.hpp"

#include <algorithm>

namespace cospec {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  normalize();
}

UniPoly UniPoly::from_descending(const std::vector<Rational>& coefficients) {
  return UniPoly(std::vector<Rational>(coefficients.rbegin(), coefficients.rend()));
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::variable() { return UniPoly({Rational(0), Rational(1)}); }

void UniPoly::normalize() {
  while (!coefficients_.empty() && sgn(coefficients_.back()) == 0) coefficients_.pop_back();
}

Rational UniPoly::coefficient(std::size_t power) const {
  return power < coefficients_.size() ? coefficients_[power] : Rational(0);
}

Rational UniPoly::leading() const { return is_zero() ? Rational(0) : coefficients_.back(); }

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly out = *this;
  const Rational lead = leading();
  for (auto& c : out.coefficients_) c /= lead;
  return out;
}

UniPoly UniPoly::compose_affine(const Rational& a, const Rational& b) const {
  // Horner with polynomial accumulator.
  const UniPoly inner({b, a});
  UniPoly acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * inner + UniPoly::constant(*it);
  }
  return acc;
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    if (!out.empty()) out.push_back(' ');
    out += cospec::to_string(*it);
  }
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
    coefficients_[i] += other.coefficients_[i];
  }
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (other.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
    coefficients_[i] -= other.coefficients_[i];
  }
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  normalize();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (sgn(a.coefficients_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      out[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return UniPoly(std::move(out));
}

BiPoly::BiPoly(std::vector<std::vector<Rational>> grid) : grid_(std::move(grid)) { normalize(); }

BiPoly BiPoly::constant(const Rational& c) { return BiPoly({{c}}); }

BiPoly BiPoly::lambda() { return BiPoly({{Rational(0)}, {Rational(1)}}); }

BiPoly BiPoly::r() { return BiPoly({{Rational(0), Rational(1)}}); }

void BiPoly::normalize() {
  std::size_t width = 0;
  for (const auto& row : grid_) {
    for (std::size_t j = row.size(); j > 0; --j) {
      if (sgn(row[j - 1]) != 0) {
        width = std::max(width, j);
        break;
      }
    }
  }
  for (auto& row : grid_) row.resize(width);
  while (!grid_.empty() &&
         std::all_of(grid_.back().begin(), grid_.back().end(),
                     [](const Rational& q) { return sgn(q) == 0; })) {
    grid_.pop_back();
  }
}

int BiPoly::degree_r() const noexcept {
  return grid_.empty() ? -1 : static_cast<int>(grid_.front().size()) - 1;
}

Rational BiPoly::coefficient(std::size_t i, std::size_t j) const {
  if (i >= grid_.size() || j >= grid_[i].size()) return 0;
  return grid_[i][j];
}

Rational BiPoly::evaluate(const Rational& lambda, const Rational& r) const {
  return slice_r(r).evaluate(lambda);
}

UniPoly BiPoly::slice_r(const Rational& value) const {
  std::vector<Rational> out(grid_.size());
  for (std::size_t i = 0; i < grid_.size(); ++i) out[i] = UniPoly(grid_[i]).evaluate(value);
  return UniPoly(std::move(out));
}

UniPoly BiPoly::slice_lambda(const Rational& value) const {
  if (grid_.empty()) return {};
  std::vector<Rational> out(grid_.front().size());
  Rational power = 1;
  for (const auto& row : grid_) {
    for (std::size_t j = 0; j < row.size(); ++j) out[j] += row[j] * power;
    power *= value;
  }
  return UniPoly(std::move(out));
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  if (other.grid_.size() > grid_.size()) grid_.resize(other.grid_.size());
  for (std::size_t i = 0; i < other.grid_.size(); ++i) {
    if (other.grid_[i].size() > grid_[i].size()) grid_[i].resize(other.grid_[i].size());
    for (std::size_t j = 0; j < other.grid_[i].size(); ++j) grid_[i][j] += other.grid_[i][j];
  }
  normalize();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  if (other.grid_.size() > grid_.size()) grid_.resize(other.grid_.size());
  for (std::size_t i = 0; i < other.grid_.size(); ++i) {
    if (other.grid_[i].size() > grid_[i].size()) grid_[i].resize(other.grid_[i].size());
    for (std::size_t j = 0; j < other.grid_[i].size(); ++j) grid_[i][j] -= other.grid_[i][j];
  }
  normalize();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t rows = a.grid_.size() + b.grid_.size() - 1;
  const std::size_t cols = a.grid_.front().size() + b.grid_.front().size() - 1;
  std::vector<std::vector<Rational>> out(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < a.grid_.size(); ++i) {
    for (std::size_t j = 0; j < a.grid_[i].size(); ++j) {
      if (sgn(a.grid_[i][j]) == 0) continue;
      for (std::size_t k = 0; k < b.grid_.size(); ++k) {
        for (std::size_t l = 0; l < b.grid_[k].size(); ++l) {
          out[i + k][j + l] += a.grid_[i][j] * b.grid_[k][l];
        }
      }
    }
  }
  return BiPoly(std::move(out));
}

}  // namespace cospec

#include "cospec/charpoly.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cospec/errors.hpp"

namespace cospec {
namespace {

template <class T>
struct SparseEntry {
  std::size_t column;
  T value;
  int unit;  // +1 or -1 when value is ±1, else 0
};

inline void multiply_add(Integer& acc, const Integer& a, const Integer& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
inline void multiply_add(Rational& acc, const Rational& a, const Rational& b) { acc += a * b; }

inline void divide_exact(Integer& x, unsigned long k) {
  mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), k);
}
inline void divide_exact(Rational& x, unsigned long k) { x /= k; }

// Faddeev–LeVerrier: M_1 = I, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I.
// One dense-by-sparse product per step; all divisions are exact over T.
template <class T>
std::vector<T> faddeev_leverrier(const std::vector<T>& a, std::size_t n) {
  std::vector<std::vector<SparseEntry<T>>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const T& v = a[i * n + k];
      if (sgn(v) == 0) continue;
      const int unit = v == 1 ? 1 : (v == -1 ? -1 : 0);
      rows[i].push_back({k, v, unit});
    }
  }

  std::vector<T> coeff(n + 1);
  coeff[n] = 1;
  std::vector<T> m(n * n);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  std::vector<T> p(n * n);

  for (std::size_t k = 1; k <= n; ++k) {
    for (auto& x : p) x = 0;
    for (std::size_t i = 0; i < n; ++i) {
      T* out = p.data() + i * n;
      for (const auto& entry : rows[i]) {
        const T* src = m.data() + entry.column * n;
        if (entry.unit == 1) {
          for (std::size_t j = 0; j < n; ++j) out[j] += src[j];
        } else if (entry.unit == -1) {
          for (std::size_t j = 0; j < n; ++j) out[j] -= src[j];
        } else {
          for (std::size_t j = 0; j < n; ++j) multiply_add(out[j], entry.value, src[j]);
        }
      }
    }
    T trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += p[i * n + i];
    trace = -trace;
    divide_exact(trace, static_cast<unsigned long>(k));
    coeff[n - k] = trace;
    if (k < n) {
      std::swap(m, p);
      for (std::size_t i = 0; i < n; ++i) m[i * n + i] += coeff[n - k];
    }
  }
  return coeff;
}

}  // namespace

UniPoly charpoly(const ExactMatrix& m) {
  const std::size_t n = m.order();
  if (m.is_integral()) {
    std::vector<Integer> a(n * n);
    for (std::size_t k = 0; k < n * n; ++k) a[k] = m.entries()[k].get_num();
    const auto coeff = faddeev_leverrier(a, n);
    return UniPoly(std::vector<Rational>(coeff.begin(), coeff.end()));
  }
  std::vector<Rational> a(m.entries().begin(), m.entries().end());
  return UniPoly(faddeev_leverrier(a, n));
}

UniPoly charpoly_oracle(const ExactMatrix& m) {
  const std::size_t n = m.order();
  if (n > kMaxOracleOrder) {
    throw PreconditionError("charpoly oracle is limited to order " +
                            std::to_string(kMaxOracleOrder));
  }
  // det(λI − M) = Σ_σ sgn(σ) Π_i (λ[i = σ(i)] − m(i, σ(i))).
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  UniPoly total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    UniPoly term = UniPoly::constant(inversions % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) {
      const Rational entry = -m(i, perm[i]);
      term = term * (i == perm[i] ? UniPoly({entry, Rational(1)}) : UniPoly::constant(entry));
    }
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace cospec

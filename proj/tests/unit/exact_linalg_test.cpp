#include <doctest.h>

#include "cospec/charpoly.hpp"
#include "cospec/errors.hpp"
#include "cospec/matrix.hpp"
#include "cospec/polynomial.hpp"
#include "cospec/spectra.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cospec;
using namespace cospec::testing;

namespace {

UniPoly poly(std::initializer_list<long> descending) {
  std::vector<Rational> c;
  for (long x : descending) c.emplace_back(x);
  return UniPoly::from_descending(c);
}

ExactMatrix multiply_anti(const ExactMatrix& m) {
  const auto hat = ExactMatrix::anti_identity(m.order());
  return hat * m.transpose() * hat;
}

}  // namespace

TEST_CASE("polynomial basics") {
  CHECK(poly({1, -4, 3, 0}).to_string() == "1 -4 3 0");
  CHECK(UniPoly().to_string() == "0");
  CHECK(UniPoly().degree() == -1);
  CHECK(poly({0, 0, 2, 1}).degree() == 1);
  CHECK(poly({2, 4}).monic() == poly({1, 2}));
  // (x - 1)(x + 1)
  CHECK(poly({1, -1}) * poly({1, 1}) == poly({1, 0, -1}));
  // p(x) = x^2 - 1 at -x + 2 is x^2 - 4x + 3
  CHECK(poly({1, 0, -1}).compose_affine(-1, 2) == poly({1, -4, 3}));
  CHECK(UniPoly::from_descending({Rational(1, 2), Rational(-3, 4)}).to_string() == "1/2 -3/4");
}

TEST_CASE("bivariate evaluation and slices") {
  const BiPoly p = BiPoly::lambda() + BiPoly::r();
  CHECK(p.evaluate(1, 2) == 3);
  // φ(K2) = (λ + r)^2 − 1
  const BiPoly phi = generalized_charpoly(complete_graph(2));
  CHECK(phi == p * p - BiPoly::constant(1));
  CHECK(phi.slice_r(0) == poly({1, 0, -1}));
  CHECK(phi.slice_lambda(0).evaluate(1) == phi.evaluate(0, 1));
  CHECK(phi.degree_lambda() == 2);
  CHECK(phi.degree_r() == 2);
}

TEST_CASE("charpoly fixed examples") {
  CHECK(charpoly(ExactMatrix(2)) == poly({1, 0, 0}));
  CHECK(charpoly(ExactMatrix{{0, 1}, {1, 0}}) == poly({1, 0, -1}));
  // L(P3) = [[1,-1,0],[-1,2,-1],[0,-1,1]]; cofactor expansion gives λ^3 - 4λ^2 + 3λ.
  CHECK(charpoly(ExactMatrix{{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}}) == poly({1, -4, 3, 0}));
  CHECK(charpoly_oracle(ExactMatrix{{5}}) == poly({1, -5}));
  // Î3 has eigenvalues 1, 1, -1.
  CHECK(charpoly_oracle(ExactMatrix::anti_identity(3)) == poly({1, -1, -1, 1}));
  CHECK(charpoly(ExactMatrix::anti_identity(3)) == poly({1, -1, -1, 1}));
  CHECK(charpoly(ExactMatrix(0)) == poly({1}));
  CHECK_THROWS_AS(charpoly_oracle(ExactMatrix(8)), PreconditionError);

  // A rational matrix takes the non-integral path.
  ExactMatrix half(2);
  half(0, 0) = Rational(1, 2);
  half(1, 1) = Rational(1, 3);
  CHECK(charpoly(half) == UniPoly::from_descending({1, Rational(-5, 6), Rational(1, 6)}));
}

TEST_CASE("charpoly agrees with the Leibniz oracle") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const ExactMatrix m = random_integer_matrix(rng, n, -3, 3);
    CHECK(charpoly(m) == charpoly_oracle(m));
  }
  for (int trial = 0; trial < 20; ++trial) {
    ExactMatrix m = random_integer_matrix(rng, 4, -5, 5);
    m *= Rational(1, 3);
    CHECK(charpoly(m) == charpoly_oracle(m));
  }
}

TEST_CASE("charpoly is invariant under permutation similarity") {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const ExactMatrix m = random_integer_matrix(rng, 6, -3, 3);
    const auto perm = random_permutation(rng, 6);
    std::vector<std::size_t> order(perm.begin(), perm.end());
    CHECK(charpoly(m.permuted(order)) == charpoly(m));
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(ExactMatrix{{1, 2}, {3, 4}}) == -2);
  CHECK(determinant(ExactMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(ExactMatrix{{1, 2}, {2, 4}}) == 0);
  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const ExactMatrix m = random_integer_matrix(rng, 5, -4, 4);
    // det(M) = (-1)^n charpoly(0)
    CHECK(determinant(m) == -charpoly(m).evaluate(0));
  }
}

TEST_CASE("anti-transpose") {
  CHECK(anti_transpose(ExactMatrix{{1, 2}, {3, 4}}) == ExactMatrix{{4, 2}, {3, 1}});
  const ExactMatrix persym{{1, 2, 3}, {4, 5, 2}, {6, 4, 1}};
  CHECK(anti_transpose(persym) == persym);
  Rng rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    const ExactMatrix m = random_integer_matrix(rng, 4, -9, 9);
    CHECK(anti_transpose(m) == multiply_anti(m));
    CHECK(anti_transpose(anti_transpose(m)) == m);
    CHECK(charpoly(anti_transpose(m)) == charpoly(m));
  }
}

TEST_CASE("swap similarity matrix") {
  CHECK(swap_similarity(1, 2) == ExactMatrix::identity(2));
  const ExactMatrix s2 = swap_similarity(2, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(s2(i, j) == (i + j == 3 ? Rational(-1, 2) : Rational(1, 2)));
    }
  }
  for (std::size_t m = 1; m <= 6; ++m) {
    const ExactMatrix s = swap_similarity(m, 2 * m + 3);
    CHECK(s * s == ExactMatrix::identity(2 * m + 3));
    CHECK(s.is_symmetric());
    for (std::size_t i = 0; i < 2 * m; ++i) {
      Rational sum;
      for (std::size_t j = 0; j < 2 * m; ++j) sum += s(i, j);
      CHECK(sum == 1);
    }
  }
  CHECK_THROWS_AS(swap_similarity(0, 4), InputError);
  CHECK_THROWS_AS(swap_similarity(3, 5), InputError);
}

TEST_CASE("block conditions") {
  ExactMatrix m = ExactMatrix::identity(6);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = 1;
  }
  auto report = check_block_conditions(m, 2);
  CHECK(report.holds());
  CHECK(report.rowsum_value == Rational(4));

  m(0, 4) = m(4, 0) = 1;  // Q column (1,0,0,0) breaks the p/r split
  report = check_block_conditions(m, 2);
  CHECK(report.n_constant_rowsum);
  CHECK_FALSE(report.q_column_pattern);

  ExactMatrix asym = ExactMatrix::identity(4);
  asym(0, 1) = 1;
  CHECK_THROWS_AS(check_block_conditions(asym, 1), InputError);

  // Laplacian of the twin-set graph in swap order u1,u2,u3,w3,w2,w1 then the rest.
  const auto plan = load_plan("twin_path.plan");
  const auto g1 = glue(plan.base, plan.h1, plan.phi1);
  const std::vector<std::size_t> order{4, 5, 6, 7, 8, 9, 0, 1, 2, 3};
  const ExactMatrix lap = build_matrix(g1, MatrixKind::Laplacian).permuted(order);
  CHECK(check_block_conditions(lap, 3).holds());
}

TEST_CASE("conjugation by S reflects the leading block") {
  CHECK_THROWS_AS(conjugate(ExactMatrix{{1, 1}, {0, 1}}, ExactMatrix::identity(2)), InputError);
  CHECK_THROWS_AS(conjugate(ExactMatrix::identity(2), ExactMatrix::identity(3)), InputError);
  Rng rng(17);
  const ExactMatrix any = random_integer_matrix(rng, 5, -2, 2);
  CHECK(conjugate(ExactMatrix::identity(5), any) == any);
  const auto hat = ExactMatrix::anti_identity(5);
  CHECK(conjugate(hat, any) == anti_transpose(any.transpose()));

  // Random symmetric M meeting the block conditions.
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const std::size_t n = 2 * m + 3;
    ExactMatrix mat(n);
    // N: symmetric with constant row sums, built as c·J + symmetric zero-row-sum part.
    const ExactMatrix lap = build_matrix(random_graph(rng, static_cast<int>(2 * m), 0.5), MatrixKind::Laplacian);
    const long c = std::uniform_int_distribution<long>(-2, 2)(rng);
    for (std::size_t i = 0; i < 2 * m; ++i) {
      for (std::size_t j = 0; j < 2 * m; ++j) mat(i, j) = lap(i, j) + c;
    }
    for (std::size_t col = 2 * m; col < n; ++col) {
      const long p = std::uniform_int_distribution<long>(-3, 3)(rng);
      const long r = std::uniform_int_distribution<long>(-3, 3)(rng);
      for (std::size_t i = 0; i < 2 * m; ++i) mat(i, col) = mat(col, i) = i < m ? p : r;
    }
    for (std::size_t i = 2 * m; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) mat(i, j) = mat(j, i) = std::uniform_int_distribution<long>(-3, 3)(rng);
    }
    REQUIRE(check_block_conditions(mat, m).holds());
    const ExactMatrix out = conjugate(swap_similarity(m, n), mat);
    CHECK(out.leading_block(2 * m) == anti_transpose(mat.leading_block(2 * m)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i < 2 * m && j < 2 * m) continue;
        CHECK(out(i, j) == mat(i, j));
      }
    }
  }
}

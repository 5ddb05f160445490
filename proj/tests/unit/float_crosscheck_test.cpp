#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "cospec/distance.hpp"
#include "cospec/spectra.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cospec;
using namespace cospec::testing;

namespace {

// Symmetric float version of each kind; the normalized Laplacian uses
// D^{-1/2} L D^{-1/2} directly.
Eigen::MatrixXd float_matrix(const Graph& g, MatrixKind kind) {
  const int n = g.order();
  Eigen::MatrixXd m(n, n);
  if (kind == MatrixKind::NormalizedLaplacian) {
    const ExactMatrix lap = build_matrix(g, MatrixKind::Laplacian);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        m(i, j) = lap(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d() /
                  std::sqrt(static_cast<double>(g.degree(i)) * g.degree(j));
      }
    }
    return m;
  }
  const ExactMatrix exact = build_matrix(g, kind);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = exact(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d();
  }
  return m;
}

std::vector<double> spectrum(const Graph& g, MatrixKind kind) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(float_matrix(g, kind), Eigen::EigenvaluesOnly);
  std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + g.order());
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace

TEST_CASE("float eigenvalues are roots of the exact charpoly") {
  Rng rng(91);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(rng, 8, 0.5);
    for (const MatrixKind kind : {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::SignlessLaplacian,
                                  MatrixKind::NormalizedLaplacian, MatrixKind::Distance,
                                  MatrixKind::DistanceLaplacian}) {
      if (is_distance_kind(kind) && !is_connected(g)) continue;
      if (kind == MatrixKind::NormalizedLaplacian && has_isolated_vertex(g)) continue;
      const UniPoly p = kind_charpoly(g, kind);
      // The sum of the eigenvalues is minus the second coefficient.
      double sum = 0;
      for (double x : spectrum(g, kind)) sum += x;
      CHECK(sum == doctest::Approx(-p.coefficient(static_cast<std::size_t>(g.order() - 1)).get_d()).epsilon(1e-9));
    }
  }
}

TEST_CASE("exactly cospectral fixture pairs agree in floating point") {
  for (const char* file : {"twin_path.plan", "k33_prism.plan", "regular_matching.plan", "paw_swap.plan"}) {
    CAPTURE(file);
    const auto plan = load_plan(file);
    const auto [g1, g2] = swap_construct(plan);
    for (const MatrixKind kind : {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::SignlessLaplacian,
                                  MatrixKind::NormalizedLaplacian, MatrixKind::Distance,
                                  MatrixKind::DistanceLaplacian}) {
      if (!cospectral(g1, g2, kind)) continue;
      const auto a = spectrum(g1, kind);
      const auto b = spectrum(g2, kind);
      for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-9);
    }
  }
}

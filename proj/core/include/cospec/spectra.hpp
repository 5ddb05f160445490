#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "cospec/graph.hpp"
#include "cospec/matrix.hpp"
#include "cospec/polynomial.hpp"

namespace cospec {

enum class MatrixKind {
  Adjacency,
  Laplacian,
  SignlessLaplacian,
  NormalizedLaplacian,
  Distance,
  DistanceLaplacian,
  Generalized,
};

inline constexpr std::array<MatrixKind, 7> kAllMatrixKinds = {
    MatrixKind::Adjacency,           MatrixKind::Laplacian, MatrixKind::SignlessLaplacian,
    MatrixKind::NormalizedLaplacian, MatrixKind::Distance,  MatrixKind::DistanceLaplacian,
    MatrixKind::Generalized,
};

/// Command-line name: adjacency, laplacian, signless, normalized, distance,
/// distance-laplacian, generalized.
std::string_view name(MatrixKind kind);
std::optional<MatrixKind> parse_matrix_kind(std::string_view text);

bool is_distance_kind(MatrixKind kind);

/// A, L = D − A, |L| = D + A, 𝒟 or 𝒟ᴸ = T − 𝒟 with integer entries. Throws
/// PreconditionError for distance kinds on a disconnected graph and
/// InputError for NormalizedLaplacian or Generalized (use the dedicated
/// polynomial routines).
ExactMatrix build_matrix(const Graph& g, MatrixKind kind);

/// N_G(λ, r) = λI − A + rD at a rational point.
ExactMatrix generalized_matrix(const Graph& g, const Rational& lambda, const Rational& r);

/// D⁻¹L, the random-walk Laplacian. Rational, and similar to the normalized
/// Laplacian through D^{1/2}. Throws PreconditionError on an isolated vertex.
ExactMatrix random_walk_laplacian(const Graph& g);

/// φ_G(λ, r) = det(λI − A + rD), interpolated in r from the charpolys of
/// A − rD at r = 0..n.
BiPoly generalized_charpoly(const Graph& g);

/// Characteristic polynomial of D^{-1/2} L D^{-1/2}, obtained from φ_G as
/// ((−1)ⁿ / det D) φ_G(0, 1 − λ) and made monic. Throws PreconditionError on
/// an isolated vertex.
UniPoly normalized_charpoly(const Graph& g);
UniPoly normalized_charpoly(const Graph& g, const BiPoly& phi);

/// Monic characteristic polynomial for every kind except Generalized.
UniPoly kind_charpoly(const Graph& g, MatrixKind kind);

/// Exact spectral fingerprint of a graph for one kind: the charpoly, or for
/// Generalized the bivariate φ_G.
struct SpectralKey {
  UniPoly univariate;
  BiPoly bivariate;

  bool operator==(const SpectralKey&) const = default;
  /// Canonical text: coefficients in lowest terms, highest degree first;
  /// Generalized rows joined by ';' from the highest λ power down.
  std::string to_string() const;
};

SpectralKey spectral_key(const Graph& g, MatrixKind kind);

/// Exact cospectrality. Throws InputError on differing orders and propagates
/// builder preconditions.
bool cospectral(const Graph& a, const Graph& b, MatrixKind kind);

/// The specializations of φ_G checked against directly computed charpolys,
/// each side monic-normalized before comparison.
struct IdentityReport {
  bool adjacency = false;          // φ(λ, 0) vs charpoly(A)
  bool laplacian = false;          // φ(−λ, 1) vs charpoly(L)
  bool signless = false;           // φ(λ, −1) vs charpoly(|L|)
  std::optional<bool> normalized;  // identity vs charpoly(D⁻¹L); absent with an isolated vertex

  bool all_pass() const noexcept {
    return adjacency && laplacian && signless && normalized.value_or(true);
  }
};

IdentityReport derived_identities_check(const Graph& g);

}  // namespace cospec

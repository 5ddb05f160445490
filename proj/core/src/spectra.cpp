#include "cospec/spectra.hpp"

#include <string>

#include "cospec/charpoly.hpp"
#include "cospec/distance.hpp"
#include "cospec/errors.hpp"

namespace cospec {
namespace {

struct KindName {
  MatrixKind kind;
  std::string_view name;
};

constexpr std::array<KindName, 7> kKindNames = {{
    {MatrixKind::Adjacency, "adjacency"},
    {MatrixKind::Laplacian, "laplacian"},
    {MatrixKind::SignlessLaplacian, "signless"},
    {MatrixKind::NormalizedLaplacian, "normalized"},
    {MatrixKind::Distance, "distance"},
    {MatrixKind::DistanceLaplacian, "distance-laplacian"},
    {MatrixKind::Generalized, "generalized"},
}};

void require_connected(const DistanceTable& table) {
  if (!table.connected()) {
    throw PreconditionError("distance matrices need a connected graph");
  }
}

void require_no_isolated(const Graph& g) {
  if (has_isolated_vertex(g)) {
    throw PreconditionError("the normalized Laplacian needs minimum degree at least 1");
  }
}

// Values c(0), ..., c(k) at the nodes 0..k, returned as the coefficients of
// the unique interpolating polynomial of degree <= k (Newton form, expanded).
std::vector<Rational> interpolate_at_integers(const std::vector<Rational>& values) {
  const std::size_t count = values.size();
  std::vector<Rational> divided = values;
  for (std::size_t level = 1; level < count; ++level) {
    for (std::size_t i = count - 1; i >= level; --i) {
      divided[i] = (divided[i] - divided[i - 1]) / static_cast<unsigned long>(level);
    }
  }
  // p(x) = d0 + d1 x + d2 x(x-1) + ...; expand by Horner from the top.
  UniPoly acc;
  for (std::size_t i = count; i-- > 0;) {
    acc = acc * UniPoly({Rational(-static_cast<long>(i)), Rational(1)}) + UniPoly::constant(divided[i]);
  }
  std::vector<Rational> out = acc.coefficients();
  out.resize(count);
  return out;
}

}  // namespace

std::string_view name(MatrixKind kind) {
  for (const auto& entry : kKindNames) {
    if (entry.kind == kind) return entry.name;
  }
  return "unknown";
}

std::optional<MatrixKind> parse_matrix_kind(std::string_view text) {
  for (const auto& entry : kKindNames) {
    if (entry.name == text) return entry.kind;
  }
  if (text == "A") return MatrixKind::Adjacency;
  if (text == "L") return MatrixKind::Laplacian;
  if (text == "signless-laplacian" || text == "Q") return MatrixKind::SignlessLaplacian;
  if (text == "normalized-laplacian") return MatrixKind::NormalizedLaplacian;
  if (text == "D") return MatrixKind::Distance;
  if (text == "DL") return MatrixKind::DistanceLaplacian;
  return std::nullopt;
}

bool is_distance_kind(MatrixKind kind) {
  return kind == MatrixKind::Distance || kind == MatrixKind::DistanceLaplacian;
}

ExactMatrix build_matrix(const Graph& g, MatrixKind kind) {
  const auto n = static_cast<std::size_t>(g.order());
  ExactMatrix m(n);
  switch (kind) {
    case MatrixKind::Adjacency:
    case MatrixKind::Laplacian:
    case MatrixKind::SignlessLaplacian: {
      const long off = kind == MatrixKind::Laplacian ? -1 : 1;
      for (const auto& [u, v] : g.edges()) {
        m(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = off;
        m(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) = off;
      }
      if (kind != MatrixKind::Adjacency) {
        for (Vertex v = 0; v < g.order(); ++v) {
          m(static_cast<std::size_t>(v), static_cast<std::size_t>(v)) = g.degree(v);
        }
      }
      return m;
    }
    case MatrixKind::Distance:
    case MatrixKind::DistanceLaplacian: {
      const auto table = all_pairs_distances(g);
      require_connected(table);
      const long sign = kind == MatrixKind::Distance ? 1 : -1;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j) m(i, j) = sign * table.at(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
        if (kind == MatrixKind::DistanceLaplacian) {
          m(i, i) = table.transmission(static_cast<Vertex>(i));
        }
      }
      return m;
    }
    case MatrixKind::NormalizedLaplacian:
    case MatrixKind::Generalized:
      break;
  }
  throw InputError("no integer matrix for kind " + std::string(name(kind)));
}

ExactMatrix generalized_matrix(const Graph& g, const Rational& lambda, const Rational& r) {
  ExactMatrix m = build_matrix(g, MatrixKind::Adjacency) * Rational(-1);
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto i = static_cast<std::size_t>(v);
    m(i, i) = lambda + r * g.degree(v);
  }
  return m;
}

ExactMatrix random_walk_laplacian(const Graph& g) {
  require_no_isolated(g);
  ExactMatrix m = build_matrix(g, MatrixKind::Laplacian);
  const auto n = static_cast<std::size_t>(g.order());
  for (std::size_t i = 0; i < n; ++i) {
    const Rational inv(1, static_cast<unsigned long>(g.degree(static_cast<Vertex>(i))));
    for (std::size_t j = 0; j < n; ++j) m(i, j) *= inv;
  }
  return m;
}

BiPoly generalized_charpoly(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  const ExactMatrix adjacency = build_matrix(g, MatrixKind::Adjacency);
  // samples[j] = det(λI − A + jD) = charpoly(A − jD), coefficients in λ.
  std::vector<UniPoly> samples;
  samples.reserve(n + 1);
  for (std::size_t node = 0; node <= n; ++node) {
    ExactMatrix shifted = adjacency;
    for (std::size_t i = 0; i < n; ++i) {
      shifted(i, i) = -static_cast<long>(node) * g.degree(static_cast<Vertex>(i));
    }
    samples.push_back(charpoly(shifted));
  }
  std::vector<std::vector<Rational>> grid(n + 1);
  for (std::size_t power = 0; power <= n; ++power) {
    std::vector<Rational> values(n + 1);
    for (std::size_t node = 0; node <= n; ++node) values[node] = samples[node].coefficient(power);
    grid[power] = interpolate_at_integers(values);
  }
  return BiPoly(std::move(grid));
}

UniPoly normalized_charpoly(const Graph& g) {
  require_no_isolated(g);
  return normalized_charpoly(g, generalized_charpoly(g));
}

UniPoly normalized_charpoly(const Graph& g, const BiPoly& phi) {
  require_no_isolated(g);
  Rational det_d = 1;
  for (Vertex v = 0; v < g.order(); ++v) det_d *= g.degree(v);
  const Rational sign = g.order() % 2 == 0 ? 1 : -1;
  // φ(0, r) as a polynomial in r, then r = 1 − λ.
  UniPoly p = phi.slice_lambda(0).compose_affine(-1, 1) * (sign / det_d);
  return p.monic();
}

UniPoly kind_charpoly(const Graph& g, MatrixKind kind) {
  if (kind == MatrixKind::Generalized) {
    throw InputError("the generalized characteristic polynomial is bivariate");
  }
  if (kind == MatrixKind::NormalizedLaplacian) return normalized_charpoly(g);
  return charpoly(build_matrix(g, kind));
}

std::string SpectralKey::to_string() const {
  if (bivariate.is_zero()) return univariate.to_string();
  std::string out;
  for (int i = bivariate.degree_lambda(); i >= 0; --i) {
    if (!out.empty()) out += ';';
    out += UniPoly(bivariate.grid()[static_cast<std::size_t>(i)]).to_string();
  }
  return out;
}

SpectralKey spectral_key(const Graph& g, MatrixKind kind) {
  SpectralKey key;
  if (kind == MatrixKind::Generalized) {
    key.bivariate = generalized_charpoly(g);
  } else {
    key.univariate = kind_charpoly(g, kind);
  }
  return key;
}

bool cospectral(const Graph& a, const Graph& b, MatrixKind kind) {
  if (a.order() != b.order()) {
    throw InputError("cospectrality needs equal orders (" + std::to_string(a.order()) + " vs " +
                     std::to_string(b.order()) + ")");
  }
  return spectral_key(a, kind) == spectral_key(b, kind);
}

IdentityReport derived_identities_check(const Graph& g) {
  const BiPoly phi = generalized_charpoly(g);
  IdentityReport report;
  report.adjacency = phi.slice_r(0).monic() == charpoly(build_matrix(g, MatrixKind::Adjacency));
  report.laplacian = phi.slice_r(1).compose_affine(-1, 0).monic() ==
                     charpoly(build_matrix(g, MatrixKind::Laplacian));
  report.signless =
      phi.slice_r(-1).monic() == charpoly(build_matrix(g, MatrixKind::SignlessLaplacian));
  if (!has_isolated_vertex(g)) {
    report.normalized = normalized_charpoly(g, phi) == charpoly(random_walk_laplacian(g));
  }
  return report;
}

}  // namespace cospec

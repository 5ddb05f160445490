#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cospec/graph.hpp"
#include "cospec/spectra.hpp"

namespace cospec::cli {

struct CensusOptions {
  MatrixKind kind = MatrixKind::Adjacency;
  int max_n = 10;
  /// Emit singleton classes too.
  bool all = false;
  /// Look for a swap certificate inside each class (bounded search).
  bool explain = false;
  std::size_t explain_max_m = 3;
  unsigned jobs = 1;
};

inline constexpr int kMaxExplainOrder = 12;
inline constexpr std::size_t kMaxExplainSetSize = 3;

struct CensusRecord {
  std::size_t class_id = 0;
  MatrixKind kind = MatrixKind::Adjacency;
  std::string charpoly_key;
  /// graph6 strings, sorted.
  std::vector<std::string> members;
  /// Present only when explanation was requested.
  std::optional<bool> explained_by_swap;
};

struct CensusSummary {
  std::size_t lines = 0;
  std::size_t classified = 0;
  std::size_t parse_errors = 0;
  std::size_t oversize = 0;
  std::size_t disconnected_skipped = 0;
  std::size_t isolated_skipped = 0;
  std::size_t classes = 0;
  std::size_t nontrivial_classes = 0;
  std::size_t explained_classes = 0;
  bool explain = false;
};

struct CensusResult {
  /// Sorted by charpoly_key; class ids follow that order.
  std::vector<CensusRecord> records;
  CensusSummary summary;
  /// "line N: message" for every rejected input line.
  std::vector<std::string> diagnostics;
};

/// Reads graph6 lines (blank lines and a ">>graph6<<" prefix are tolerated)
/// and groups the accepted graphs by exact characteristic polynomial. The
/// result does not depend on input order.
CensusResult run_census(std::istream& in, const CensusOptions& options);

/// Best-effort certificate that `y` arises from `x` by one set swap: some
/// pair of disjoint sets (V1, V2) of size 2..max_m in x, with the edges
/// inside them viewed as H1 and H2 on the base graph, has an involution π
/// for which the swapped graph is isomorphic to y and `kind` is licensed.
/// False means "not found", not "impossible".
bool swap_certificate(const Graph& x, const Graph& y, MatrixKind kind, std::size_t max_m);

void write_census_json(std::ostream& out, const CensusResult& result);

}  // namespace cospec::cli

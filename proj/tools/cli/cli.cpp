#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "census.hpp"
#include "cospec/construct.hpp"
#include "cospec/cousins.hpp"
#include "cospec/errors.hpp"
#include "cospec/graph_io.hpp"
#include "cospec/plan_io.hpp"
#include "cospec/spectra.hpp"

namespace cospec::cli {
namespace {

using json = nlohmann::ordered_json;

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), {}};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), {}};
}

GraphFormat to_format(const std::string& text) {
  if (text == "g6" || text == "graph6") return GraphFormat::Graph6;
  if (text == "edges" || text == "edgelist") return GraphFormat::EdgeList;
  return GraphFormat::Auto;
}

Graph read_graph(const std::string& path, const std::string& format, std::istream& in) {
  try {
    return parse_graph(read_source(path, in), to_format(format));
  } catch (const InputError& e) {
    throw InputError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

MatrixKind to_kind(const std::string& text) {
  if (const auto kind = parse_matrix_kind(text)) return *kind;
  throw InputError("unknown matrix kind '" + text + "'");
}

std::vector<MatrixKind> to_kinds(const std::vector<std::string>& names) {
  std::vector<MatrixKind> kinds;
  for (const auto& n : names) {
    if (n == "all") {
      kinds.assign(kAllMatrixKinds.begin(), kAllMatrixKinds.end());
      return kinds;
    }
    kinds.push_back(to_kind(n));
  }
  return kinds;
}

std::string key_text(const SpectralKey& key, MatrixKind kind) {
  if (kind != MatrixKind::Generalized) return key.univariate.to_string();
  std::string out = key.to_string();
  for (auto& c : out) {
    if (c == ';') c = '\n';
  }
  return out;
}

std::string set_text(const std::vector<Vertex>& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) out += (i ? "," : "") + std::to_string(set[i]);
  return out + "}";
}

// --- charpoly ---------------------------------------------------------------

struct CharpolyArgs {
  std::string input = "-";
  std::string matrix = "adjacency";
  std::string format = "auto";
  bool json = false;
};

int cmd_charpoly(const CharpolyArgs& a, IoStreams io) {
  const Graph g = read_graph(a.input, a.format, io.in);
  const MatrixKind kind = to_kind(a.matrix);
  const SpectralKey key = spectral_key(g, kind);
  if (a.json) {
    json j{{"kind", name(kind)}, {"order", g.order()}};
    if (kind == MatrixKind::Generalized) {
      std::vector<std::string> rows;
      std::istringstream lines(key_text(key, kind));
      for (std::string row; std::getline(lines, row);) rows.push_back(row);
      j["rows"] = rows;
    } else {
      j["charpoly"] = key.univariate.to_string();
    }
    io.out << j.dump() << '\n';
  } else {
    io.out << key_text(key, kind) << '\n';
  }
  return kExitOk;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> inputs;
  std::vector<std::string> matrices{"adjacency"};
  std::string format = "auto";
  std::string plan;
  std::vector<Vertex> order;
  bool similarity = false;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a, IoStreams io) {
  Graph g1, g2;
  std::vector<Vertex> ordering = a.order;
  if (!a.plan.empty()) {
    if (!a.inputs.empty()) throw InputError("give either --plan or two graphs, not both");
    const SwapPlan plan = parse_plan(read_source(a.plan, io.in));
    std::tie(g1, g2) = swap_construct(plan);
    if (ordering.empty()) ordering = canonical_swap_order(plan.v1, plan.v2, plan.pi);
  } else {
    if (a.inputs.size() != 2) throw InputError("verify needs two graphs (or --plan)");
    if (a.inputs[0] == "-" && a.inputs[1] == "-") throw InputError("only one input may be stdin");
    g1 = read_graph(a.inputs[0], a.format, io.in);
    g2 = read_graph(a.inputs[1], a.format, io.in);
  }
  if (g1.order() != g2.order()) {
    throw InputError("graphs have different orders (" + std::to_string(g1.order()) + " vs " +
                     std::to_string(g2.order()) + ")");
  }
  if (a.similarity && ordering.empty()) {
    throw InputError("--similarity needs --plan or --order");
  }

  bool all_same = true;
  json verdicts = json::object();
  for (const MatrixKind kind : to_kinds(a.matrices)) {
    const bool same = cospectral(g1, g2, kind);
    all_same = all_same && same;
    verdicts[std::string(name(kind))] = same ? "cospectral" : "different";
    if (!a.json) io.out << name(kind) << ": " << (same ? "cospectral" : "different") << '\n';
  }
  json similar = json::object();
  bool all_similar = true;
  if (a.similarity) {
    for (const MatrixKind kind : to_kinds(a.matrices)) {
      const bool ok = verify_similarity(g1, g2, ordering, kind);
      all_similar = all_similar && ok;
      similar[std::string(name(kind))] = ok ? "verified" : "failed";
    }
    if (!a.json) io.out << "similarity: " << (all_similar ? "verified" : "failed") << '\n';
  }
  if (a.json) {
    json j{{"verdicts", verdicts}};
    if (a.similarity) j["similarity"] = similar;
    io.out << j.dump() << '\n';
  }
  return all_same && all_similar ? kExitOk : kExitDifferent;
}

// --- construct --------------------------------------------------------------

struct ConstructArgs {
  std::string plan;
  std::string emit = "g6";
  bool check = false;
  bool json = false;
};

std::string emit_graph(const Graph& g, const std::string& format) {
  if (format == "g6") return emit_graph6(g) + "\n";
  return emit_edge_list(g);
}

int cmd_construct(const ConstructArgs& a, IoStreams io) {
  const SwapPlan plan = parse_plan(read_source(a.plan, io.in));
  const auto [g1, g2] = swap_construct(plan);
  if (!a.json) {
    io.out << emit_graph(g1, a.emit);
    if (a.emit != "g6") io.out << '\n';
    io.out << emit_graph(g2, a.emit);
  }
  json j;
  if (a.json) {
    j["g1"] = a.emit == "g6" ? emit_graph6(g1) : emit_edge_list(g1);
    j["g2"] = a.emit == "g6" ? emit_graph6(g2) : emit_edge_list(g2);
  }
  if (!a.check) {
    if (a.json) io.out << j.dump() << '\n';
    return kExitOk;
  }

  const HypothesisReport report = check_hypotheses(plan, g1);
  const auto& c = report.classification;
  for (const CousinFlag flag : {CousinFlag::Relaxed, CousinFlag::Cousins, CousinFlag::CoDegree,
                                CousinFlag::CoTransmission}) {
    for (const auto& w : c.flag(flag).witnesses) io.err << name(flag) << ": " << w << '\n';
  }
  const auto order = canonical_swap_order(plan.v1, plan.v2, plan.pi);
  bool all_ok = true;
  json checks = json::object();
  std::vector<std::string> licensed;
  for (const MatrixKind kind : report.licensed) {
    const bool same = cospectral(g1, g2, kind);
    const bool similar = verify_similarity(g1, g2, order, kind);
    all_ok = all_ok && same && similar;
    licensed.emplace_back(name(kind));
    checks[std::string(name(kind))] = {{"cospectral", same}, {"similarity", similar}};
  }
  if (a.json) {
    j["flags"] = {{"relaxed", c.relaxed.holds()},
                  {"cousins", c.cousins.holds()},
                  {"co-degree", c.co_degree.holds()},
                  {"co-transmission", c.co_transmission.holds()},
                  {"induced_regular", report.g1_induced_regular},
                  {"induced_transmission_regular", report.g1_induced_transmission_regular}};
    j["licensed"] = licensed;
    j["checks"] = checks;
    io.out << j.dump() << '\n';
  } else {
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    io.out << "flags: relaxed=" << yes(c.relaxed.holds()) << " cousins=" << yes(c.cousins.holds())
           << " co-degree=" << yes(c.co_degree.holds())
           << " co-transmission=" << yes(c.co_transmission.holds())
           << " induced-regular=" << yes(report.g1_induced_regular)
           << " induced-transmission-regular=" << yes(report.g1_induced_transmission_regular) << '\n';
    io.out << "licensed:";
    for (const auto& l : licensed) io.out << ' ' << l;
    io.out << '\n';
    for (const MatrixKind kind : report.licensed) {
      const auto& r = checks[std::string(name(kind))];
      io.out << name(kind) << ": " << (r["cospectral"].get<bool>() ? "cospectral" : "different")
             << ", similarity " << (r["similarity"].get<bool>() ? "verified" : "failed") << '\n';
    }
  }
  return all_ok ? kExitOk : kExitDifferent;
}

// --- find-cousins -----------------------------------------------------------

struct FindArgs {
  std::string input = "-";
  std::string format = "auto";
  std::size_t m = 1;
  std::string require = "relaxed";
  bool json = false;
};

int cmd_find_cousins(const FindArgs& a, IoStreams io) {
  const Graph g = read_graph(a.input, a.format, io.in);
  const auto flag = parse_cousin_flag(a.require);
  if (!flag) throw InputError("unknown cousin flag '" + a.require + "'");
  const auto distances = all_pairs_distances(g);
  for (const auto& pair : enumerate_cousin_pairs(g, a.m, *flag)) {
    const auto c = classify_pair(g, distances, pair.first, pair.second);
    if (a.json) {
      io.out << json{{"v1", pair.first},
                     {"v2", pair.second},
                     {"relaxed", c.relaxed.holds()},
                     {"cousins", c.cousins.holds()},
                     {"co-degree", c.co_degree.holds()},
                     {"co-transmission", c.co_transmission.holds()},
                     {"twin_sets", c.twin_sets}}
                    .dump()
             << '\n';
    } else {
      io.out << set_text(pair.first) << ' ' << set_text(pair.second);
      for (const CousinFlag f : {CousinFlag::Relaxed, CousinFlag::Cousins, CousinFlag::CoDegree,
                                 CousinFlag::CoTransmission}) {
        if (c.flag(f).holds()) io.out << ' ' << name(f);
      }
      if (c.twin_sets) io.out << " twins";
      io.out << '\n';
    }
  }
  return kExitOk;
}

// --- census -----------------------------------------------------------------

struct CensusArgs {
  std::string input = "-";
  std::string matrix = "adjacency";
  CensusOptions options;
};

int cmd_census(CensusArgs a, IoStreams io) {
  a.options.kind = to_kind(a.matrix);
  if (a.options.explain && a.options.explain_max_m > kMaxExplainSetSize) {
    throw PreconditionError("--m is capped at " + std::to_string(kMaxExplainSetSize) + " for --explain");
  }
  CensusResult result;
  if (a.input == "-") {
    result = run_census(io.in, a.options);
  } else {
    std::ifstream file(a.input);
    if (!file) throw InputError("cannot open '" + a.input + "'");
    result = run_census(file, a.options);
  }
  for (const auto& d : result.diagnostics) io.err << "census: " << d << '\n';
  write_census_json(io.out, result);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, IoStreams io) {
  CLI::App app{"Exact cospectral graph construction and verification", "cospec"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cospec 0.1.0");

  const std::string kinds_help =
      "adjacency, laplacian, signless, normalized, distance, distance-laplacian, generalized";

  CharpolyArgs charpoly_args;
  auto* charpoly = app.add_subcommand("charpoly", "Print the exact characteristic polynomial");
  charpoly->add_option("input", charpoly_args.input, "Graph file, '-' for stdin");
  charpoly->add_option("-m,--matrix", charpoly_args.matrix, kinds_help);
  charpoly->add_option("--format", charpoly_args.format, "auto, g6 or edges");
  charpoly->add_flag("--json", charpoly_args.json, "One JSON object instead of text");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Compare two graphs spectrally");
  verify->add_option("inputs", verify_args.inputs, "Two graph files")->expected(0, 2);
  verify->add_option("-m,--matrix", verify_args.matrices, kinds_help + ", or all")->delimiter(',');
  verify->add_option("--format", verify_args.format, "auto, g6 or edges");
  verify->add_option("--plan", verify_args.plan, "Build the pair from a plan file");
  verify->add_option("--order", verify_args.order, "Swap ordering V1 then reflected V2")->delimiter(',');
  verify->add_flag("--similarity", verify_args.similarity, "Also check the swap similarity exactly");
  verify->add_flag("--json", verify_args.json, "One JSON object instead of text");

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Build a swapped pair from a plan file");
  construct->add_option("plan", construct_args.plan, "Plan file, '-' for stdin")->required();
  construct->add_option("--emit", construct_args.emit, "g6 or edgelist")
      ->check(CLI::IsMember({"g6", "edgelist"}));
  construct->add_flag("--check", construct_args.check, "Report licensed kinds and verify them");
  construct->add_flag("--json", construct_args.json, "One JSON object instead of text");

  FindArgs find_args;
  auto* find = app.add_subcommand("find-cousins", "List cousin set pairs");
  find->add_option("input", find_args.input, "Graph file, '-' for stdin");
  find->add_option("--format", find_args.format, "auto, g6 or edges");
  find->add_option("--m", find_args.m, "Set size")->required();
  find->add_option("--require", find_args.require, "relaxed, cousins, co-degree, co-transmission");
  find->add_flag("--json", find_args.json, "JSON lines instead of text");

  CensusArgs census_args;
  auto* census = app.add_subcommand("census", "Group a graph6 stream into cospectral classes");
  census->add_option("input", census_args.input, "graph6 file, '-' for stdin");
  census->add_option("--matrix", census_args.matrix, kinds_help);
  census->add_option("--max-n", census_args.options.max_n, "Skip larger graphs");
  census->add_flag("--all", census_args.options.all, "Also emit singleton classes");
  census->add_flag("--explain", census_args.options.explain, "Search for swap certificates");
  census->add_option("--m", census_args.options.explain_max_m, "Largest swap set size for --explain");
  census->add_option("--jobs", census_args.options.jobs, "Worker threads");
  census->add_flag("--json", "Accepted for symmetry; census output is always JSON lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*charpoly) return cmd_charpoly(charpoly_args, io);
    if (*verify) return cmd_verify(verify_args, io);
    if (*construct) return cmd_construct(construct_args, io);
    if (*find) return cmd_find_cousins(find_args, io);
    if (*census) return cmd_census(census_args, io);
  } catch (const InputError& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const PreconditionError& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace cospec::cli

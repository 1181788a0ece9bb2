#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bmdm/bench.hpp"
#include "bmdm/classification.hpp"
#include "bmdm/decomposition.hpp"
#include "bmdm/document.hpp"
#include "bmdm/matching.hpp"
#include "bmdm/oracle.hpp"
#include "bmdm/random_instances.hpp"
#include "bmdm/verifying.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

int classify_exit_code(const bmdm::Error& e) {
  switch (e.code()) {
    case bmdm::Errc::ParseError:
    case bmdm::Errc::DuplicateEdge:
    case bmdm::Errc::IndexOutOfRange:
    case bmdm::Errc::NegativeCapacity:
    case bmdm::Errc::InvalidArgument:
    case bmdm::Errc::TooLarge:
      return kExitUsage;
    default:
      return kExitInternal;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw bmdm::Error(bmdm::Errc::ParseError, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Pipeline {
  bmdm::BipartiteGraph graph;
  bmdm::Matching matching;
  bmdm::Decomposition decomposition;
  bmdm::EdgeClassification classes;
};

Pipeline run_pipeline(const std::string& input_path) {
  bmdm::BipartiteGraph g = bmdm::graph_from_string(read_file(input_path));
  bmdm::Matching m = bmdm::max_b_matching(g);
  bmdm::Decomposition d = bmdm::decompose(g, m);
  bmdm::EdgeClassification cls = bmdm::classify_edges(g, m, d);
  return Pipeline{std::move(g), std::move(m), std::move(d), std::move(cls)};
}

int cmd_decompose(const std::string& input, const std::string& dot_path, bool reduce) {
  Pipeline p = run_pipeline(input);
  nlohmann::json doc = bmdm::decomposition_document(p.graph, p.decomposition, p.classes);
  std::cout << doc.dump(2) << "\n";
  if (!dot_path.empty()) {
    std::ofstream out(dot_path, std::ios::binary);
    if (!out) {
      throw bmdm::Error(bmdm::Errc::ParseError, "cannot write '" + dot_path + "'");
    }
    out << bmdm::dot_export(p.decomposition, reduce);
  }
  return kExitOk;
}

int cmd_classify(const std::string& input) {
  Pipeline p = run_pipeline(input);
  nlohmann::json doc;
  doc["max_size"] = p.matching.size();
  doc["edge_classes"] = nlohmann::json::object();
  for (int e = 0; e < p.graph.edge_count(); ++e) {
    std::string key = bmdm::vertex_name(p.graph, p.graph.edge(e).u) + "-" +
                      bmdm::vertex_name(p.graph, p.graph.edge(e).v);
    doc["edge_classes"][key] =
        bmdm::edge_class_name(p.classes.class_of[static_cast<std::size_t>(e)]);
  }
  nlohmann::json d_names = nlohmann::json::array();
  bmdm::loose_attainable(p.decomposition).for_each([&](int v) {
    d_names.push_back(bmdm::vertex_name(p.graph, v));
  });
  doc["D_set"] = std::move(d_names);
  std::cout << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_enumerate(const std::string& input, std::int64_t cap) {
  Pipeline p = run_pipeline(input);
  bmdm::VerifyingFamily family = bmdm::enumerate_verifying_sets(p.decomposition, cap);
  nlohmann::json doc;
  doc["count"] = family.sets.size();
  doc["truncated"] = family.truncated;
  doc["verifying_sets"] = nlohmann::json::array();
  for (const bmdm::VertexSet& z : family.sets) {
    nlohmann::json names = nlohmann::json::array();
    z.for_each([&](int v) { names.push_back(bmdm::vertex_name(p.graph, v)); });
    doc["verifying_sets"].push_back(std::move(names));
  }
  std::cout << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_check_verifying(const std::string& input, const std::string& set_csv) {
  Pipeline p = run_pipeline(input);
  bmdm::VertexSet z(p.graph.vertex_count());
  std::stringstream stream(set_csv);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty()) continue;
    z.insert(bmdm::vertex_id(p.graph, token));
  }
  bool ok = bmdm::is_verifying(p.graph, z, p.matching);
  nlohmann::json doc;
  doc["verifying"] = ok;
  doc["cost"] = bmdm::verifying_cost(p.graph, z);
  doc["max_size"] = p.matching.size();
  std::cout << doc.dump(2) << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_check_random(int count, std::uint64_t seed, const bmdm::RandomSpec& spec) {
  bmdm::OracleLimits limits;
  if (spec.max_a < 1 || spec.max_b < 1 || spec.max_a + spec.max_b > limits.max_vertices ||
      spec.max_a * spec.max_b > limits.max_edges) {
    throw bmdm::Error(bmdm::Errc::TooLarge,
                      "random spec can exceed the oracle limits (" +
                          std::to_string(limits.max_vertices) + " vertices, " +
                          std::to_string(limits.max_edges) + " edges)");
  }
  for (int i = 0; i < count; ++i) {
    bmdm::BipartiteGraph g =
        bmdm::random_instance(seed, static_cast<std::uint64_t>(i), spec);
    bmdm::EquivalenceReport report = bmdm::equivalence_check(g);
    if (!report.ok) {
      std::cout << "divergence on instance " << i << " (seed " << seed << "):\n"
                << bmdm::graph_to_json(g).dump(2) << "\n"
                << report.divergence << "\n";
      return kExitCheckFailed;
    }
  }
  std::cout << "checked " << count << " random instances (seed " << seed << "): ok\n";
  return kExitOk;
}

int cmd_check_input(const std::string& input) {
  bmdm::BipartiteGraph g = bmdm::graph_from_string(read_file(input));
  bmdm::EquivalenceReport report = bmdm::equivalence_check(g);
  if (!report.ok) {
    std::cout << "divergence:\n"
              << bmdm::graph_to_json(g).dump(2) << "\n"
              << report.divergence << "\n";
    return kExitCheckFailed;
  }
  std::cout << "checked 1 instance: ok\n";
  return kExitOk;
}

int cmd_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed, int repeats) {
  std::cout << "edges\tvertices\tmatching\tdecompose_ms\tratio\n";
  double previous = -1.0;
  for (std::size_t s : sizes) {
    bmdm::BenchRow row = bmdm::bench_decompose(s, seed, repeats);
    std::cout << row.edges << "\t" << row.vertices << "\t" << row.matching_size << "\t"
              << row.decompose_seconds * 1e3;
    if (previous > 0.0 && row.decompose_seconds > 0.0) {
      std::cout << "\t" << row.decompose_seconds / previous;
    } else {
      std::cout << "\t-";
    }
    std::cout << "\n";
    previous = row.decompose_seconds;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dulmage-Mendelsohn decomposition for bipartite b-matchings"};
  app.require_subcommand(1);

  std::string input;
  std::string dot_path;
  bool reduce = false;
  auto* decompose_cmd =
      app.add_subcommand("decompose", "solve, decompose and classify a graph");
  decompose_cmd->add_option("input", input, "graph JSON file")->required();
  decompose_cmd->add_option("--dot", dot_path, "write the component DAG as DOT");
  decompose_cmd->add_flag("--reduce", reduce, "transitively reduce the DOT output");

  std::string classify_input;
  auto* classify_cmd = app.add_subcommand("classify", "edge classes and D(G;b)");
  classify_cmd->add_option("input", classify_input, "graph JSON file")->required();

  std::string enum_input;
  std::int64_t cap = 1000;
  auto* enum_cmd =
      app.add_subcommand("enumerate-verifying", "list all verifying sets up to a cap");
  enum_cmd->add_option("input", enum_input, "graph JSON file")->required();
  enum_cmd->add_option("--cap", cap, "maximum number of sets to produce");

  std::string cv_input;
  std::string cv_set;
  auto* cv_cmd = app.add_subcommand("check-verifying",
                                    "test whether a vertex set is verifying");
  cv_cmd->add_option("input", cv_input, "graph JSON file")->required();
  cv_cmd->add_option("--set", cv_set, "comma-separated vertex names, e.g. a0,a1,b2")
      ->required();

  int random_count = 0;
  std::uint64_t check_seed = 1;
  std::string check_input;
  bmdm::RandomSpec spec;
  auto* check_cmd =
      app.add_subcommand("check", "compare the pipeline against the brute-force oracle");
  auto* random_opt =
      check_cmd->add_option("--random", random_count, "number of random instances");
  check_cmd->add_option("--seed", check_seed, "random stream seed");
  auto* input_opt = check_cmd->add_option("--input", check_input, "graph JSON file");
  check_cmd->add_option("--max-a", spec.max_a, "largest A class size");
  check_cmd->add_option("--max-b", spec.max_b, "largest B class size");
  check_cmd->add_option("--max-cap", spec.max_cap, "largest capacity value");
  check_cmd->add_option("--edge-prob", spec.edge_prob, "edge probability");
  random_opt->excludes(input_opt);

  std::vector<std::size_t> sizes{20000, 40000, 80000};
  std::uint64_t bench_seed = 1;
  int repeats = 5;
  auto* bench_cmd = app.add_subcommand("bench", "decompose wall time at several sizes");
  bench_cmd->add_option("--sizes", sizes, "edge counts to benchmark");
  bench_cmd->add_option("--seed", bench_seed, "instance seed");
  bench_cmd->add_option("--repeats", repeats, "runs per size (best is reported)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (decompose_cmd->parsed()) return cmd_decompose(input, dot_path, reduce);
    if (classify_cmd->parsed()) return cmd_classify(classify_input);
    if (enum_cmd->parsed()) return cmd_enumerate(enum_input, cap);
    if (cv_cmd->parsed()) return cmd_check_verifying(cv_input, cv_set);
    if (check_cmd->parsed()) {
      if (!check_input.empty()) return cmd_check_input(check_input);
      if (random_count <= 0) {
        std::cerr << "check: need --random N or --input FILE\n";
        return kExitUsage;
      }
      return cmd_check_random(random_count, check_seed, spec);
    }
    if (bench_cmd->parsed()) return cmd_bench(sizes, bench_seed, repeats);
  } catch (const bmdm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return classify_exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

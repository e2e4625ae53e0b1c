// Command-line front end: homology tables, Tutte polynomials and the
// verification suite for multigraphs given as edge-list files.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tuttecoh/corpus.hpp"
#include "tuttecoh/cube_complex.hpp"
#include "tuttecoh/homology.hpp"
#include "tuttecoh/theorem_suite.hpp"
#include "tuttecoh/tutte.hpp"

using namespace tuttecoh;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Config {
  std::vector<std::string> inputs;
  std::string system = "default";
  bool json = false;
  std::string checks;
  int max_edges = kDefaultMaxEdges;
  std::uint64_t seed = kDefaultSeed;
  int trials = 5;
  bool corpus = false;
  int jobs = 1;
  bool dump = false;
  std::string family;
  int family_size = -1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_checks(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string display_name(const std::string& path) { return std::filesystem::path(path).filename().string(); }

Graph load(const std::string& path, int max_edges) {
  Graph g = read_graph_file(path);
  if (g.num_edges() > max_edges)
    throw UsageError(path + ": " + std::to_string(g.num_edges()) + " edges exceed --max-edges " + std::to_string(max_edges));
  return g;
}

void emit(const std::vector<json>& docs) {
  if (docs.size() == 1)
    std::cout << docs.front().dump(2) << '\n';
  else
    std::cout << json(docs).dump(2) << '\n';
}

int cmd_homology(const Config& cfg) {
  const auto sys = system_by_name(cfg.system);
  std::vector<json> docs;
  for (const auto& path : cfg.inputs) {
    const Graph g = load(path, cfg.max_edges);
    const auto c = build_complex(g, sys, cfg.max_edges);
    const auto h = homology(c, cfg.jobs);
    const BiPoly euler = graded_euler(h);
    if (cfg.json) {
      json doc = h.to_json();
      doc["file"] = display_name(path);
      doc["graph"] = g.describe();
      doc["system"] = sys.name;
      doc["euler"] = euler.to_string();
      doc["euler_terms"] = euler.to_json();
      docs.push_back(std::move(doc));
      continue;
    }
    std::cout << "graph " << display_name(path) << ": " << g.describe() << "\nsystem " << sys.name << '\n'
              << h.table() << h.summary() << "Euler characteristic: " << euler.to_string() << '\n';
    if (cfg.dump) c.dump_differentials(std::cout);
  }
  if (cfg.json) emit(docs);
  return kExitOk;
}

int cmd_tutte(const Config& cfg) {
  std::vector<json> docs;
  bool all_ok = true;
  for (const auto& path : cfg.inputs) {
    const Graph g = load(path, cfg.max_edges);
    const BiPoly t = tutte_deletion_contraction(g);
    const BiPoly that = tutte_hat(g);
    const bool round_trip = recover_tutte(that) == t && tutte_state_sum(g) == t;
    all_ok = all_ok && round_trip;
    if (cfg.json) {
      docs.push_back({{"file", display_name(path)},
                      {"graph", g.describe()},
                      {"tutte", t.to_string()},
                      {"tutte_terms", t.to_json()},
                      {"tutte_hat", that.to_string()},
                      {"tutte_hat_terms", that.to_json()},
                      {"recovery", round_trip ? "pass" : "fail"}});
      continue;
    }
    std::cout << "graph " << display_name(path) << ": " << g.describe() << "\nT(G) = " << t.to_string()
              << "\nT-hat(G) = " << that.to_string() << "\nrecovery: " << (round_trip ? "pass" : "fail") << '\n';
  }
  if (cfg.json) emit(docs);
  return all_ok ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const Config& cfg) {
  SuiteOptions options;
  options.checks = split_checks(cfg.checks);
  options.system = system_by_name(cfg.system);
  options.reorder_trials = cfg.trials;
  options.seed = cfg.seed;
  options.max_edges = cfg.max_edges;

  std::vector<CorpusEntry> graphs;
  if (cfg.corpus) graphs = builtin_corpus(cfg.seed, cfg.max_edges);
  for (const auto& path : cfg.inputs) graphs.push_back({display_name(path), load(path, cfg.max_edges)});
  if (graphs.empty()) throw UsageError("verify needs graph files or --corpus");

  const auto reports = run_suite(graphs, options, cfg.jobs);
  int failed = 0;
  for (const auto& r : reports) failed += r.pass ? 0 : 1;

  if (cfg.json) {
    json all = json::array();
    for (const auto& r : reports) all.push_back(r.to_json());
    std::cout << json{{"reports", all}, {"passed", static_cast<int>(reports.size()) - failed}, {"failed", failed}}.dump(2)
              << '\n';
  } else {
    for (const auto& r : reports) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.check << ' ' << r.graph;
      if (!r.pass) std::cout << ": " << r.witness;
      if (r.pass && r.details.contains("gamma_ranks") && !r.details["gamma_ranks"].empty())
        std::cout << " (edge " << r.details["edge"] << ", connecting map ranks " << r.details["gamma_ranks"].dump() << ")";
      std::cout << '\n';
    }
    std::cout << reports.size() << " checks on " << graphs.size() << " graphs, " << failed << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_families(const Config& cfg) {
  if (!cfg.family.empty()) {
    if (cfg.family_size < 0) throw UsageError("families: give a size after the family name");
    const auto f = family_from_name(cfg.family);
    if (!f) throw UsageError("unknown family '" + cfg.family + "'");
    std::cout << format_graph(generate_family(*f, cfg.family_size));
    return kExitOk;
  }
  json list = json::array();
  for (const auto f : all_families()) {
    const auto [lo, hi] = family_size_bounds(f);
    list.push_back({{"name", family_name(f)}, {"min_size", lo}, {"max_size", hi}});
  }
  if (cfg.json) {
    std::cout << json{{"families", list}}.dump(2) << '\n';
  } else {
    for (const auto& f : list)
      std::cout << f["name"].get<std::string>() << "  sizes " << f["min_size"] << ".." << f["max_size"] << '\n';
  }
  return kExitOk;
}

void add_common(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--system", cfg.system, "default, chromatic, zero-b0 or custom:<path>");
  cmd->add_flag("--json", cfg.json, "machine-readable output");
  cmd->add_option("--max-edges", cfg.max_edges, "edge-count bound")->check(CLI::Range(0, kMaxEdgesHardCap));
  cmd->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 256));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bigraded graph cohomology and Tutte polynomial tools"};
  app.require_subcommand(1);
  Config cfg;

  auto* homology_cmd = app.add_subcommand("homology", "integer cohomology of each graph");
  homology_cmd->add_option("graphs", cfg.inputs, "graph files")->required()->check(CLI::ExistingFile);
  add_common(homology_cmd, cfg);
  homology_cmd->add_flag("--dump", cfg.dump, "print every differential entry");

  auto* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial, T-hat and recovery round trip");
  tutte_cmd->add_option("graphs", cfg.inputs, "graph files")->required()->check(CLI::ExistingFile);
  add_common(tutte_cmd, cfg);

  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  verify_cmd->add_option("graphs", cfg.inputs, "graph files")->check(CLI::ExistingFile);
  add_common(verify_cmd, cfg);
  verify_cmd->add_flag("--corpus", cfg.corpus, "include the built-in corpus");
  verify_cmd->add_option("--seed", cfg.seed, "seed for the corpus and edge reorderings");
  verify_cmd->add_option("--trials", cfg.trials, "random edge orders per graph")->check(CLI::Range(0, 1000));
  verify_cmd
      ->add_option("--checks", cfg.checks, "comma-separated subset of the checks")
      ->check(CLI::Validator(
          [](std::string& value) -> std::string {
            for (const auto& c : split_checks(value))
              if (!is_known_check(c)) return "unknown check '" + c + "'";
            return {};
          },
          "CHECKS"));

  auto* families_cmd = app.add_subcommand("families", "list graph families, or print one member");
  families_cmd->add_option("name", cfg.family, "family name");
  families_cmd->add_option("size", cfg.family_size, "size parameter");
  families_cmd->add_flag("--json", cfg.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (homology_cmd->parsed()) return cmd_homology(cfg);
    if (tutte_cmd->parsed()) return cmd_tutte(cfg);
    if (verify_cmd->parsed()) return cmd_verify(cfg);
    return cmd_families(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tuttecoh/chain_map.hpp"
#include "tuttecoh/coeff_system.hpp"
#include "tuttecoh/corpus.hpp"
#include "tuttecoh/graph.hpp"
#include "tuttecoh/homology.hpp"

namespace tuttecoh {

/// Outcome of one check on one graph. A failing report always carries a
/// witness; `details` holds optional extra data such as induced-map ranks.
struct CheckReport {
  std::string check;
  std::string graph;
  bool pass = true;
  std::string witness;
  nlohmann::json details;

  /// {"check","graph","verdict","witness"[,"details"]}.
  nlohmann::json to_json() const;
};

CheckReport pass_report(std::string check, std::string graph, nlohmann::json details = nullptr);
CheckReport fail_report(std::string check, std::string graph, std::string witness, nlohmann::json details = nullptr);

/// Chain and homology Euler characteristics against the state sum with
/// x -> qdim A - 1, y -> qdim B - 1 (T-hat itself for the default system).
CheckReport check_euler(const Graph& g, const CoefficientSystem& sys);

/// d^2 = 0, bidegree preservation of every per-edge map, commuting squares.
CheckReport check_d_squared(const Graph& g, const CoefficientSystem& sys);

/// Homology is unchanged under `trials` seeded random edge orders.
CheckReport check_reorder(const Graph& g, const CoefficientSystem& sys, int trials, std::uint64_t seed);
/// Same, over every edge order (at most 8 edges).
CheckReport check_reorder_all(const Graph& g, const CoefficientSystem& sys);

/// Integral exactness of 0 -> C(G/e)[-1] -> C(G) -> C(G-e) -> 0 per height
/// and bidegree, with alpha, beta and the connecting map checked as chain maps.
/// The non-loop and loop variants throw std::invalid_argument on the wrong
/// kind of edge.
CheckReport check_ses_nonloop(const Graph& g, int e, const CoefficientSystem& sys);
CheckReport check_ses_loop(const Graph& g, int e, const CoefficientSystem& sys);
CheckReport check_ses(const Graph& g, int e, const CoefficientSystem& sys);

/// Rational exactness of the long sequence
/// H^i(G) -> H^i(G-e) -> H^i(G/e) -> H^{i+1}(G) at every node. Details list
/// the nonzero ranks of the connecting map.
CheckReport check_les_nonloop(const Graph& g, int e, const CoefficientSystem& sys);
CheckReport check_les_loop(const Graph& g, int e, const CoefficientSystem& sys);
CheckReport check_les(const Graph& g, int e, const CoefficientSystem& sys);

/// H(G) equals H(G/e) shifted by (1,0), torsion included. Throws
/// std::invalid_argument unless e is pendant.
CheckReport check_pendant(const Graph& g, int e, const CoefficientSystem& sys);

/// Path with n edges: H^0 = Z{(n,0)} + Z{(n+1,0)} and nothing else.
CheckReport check_tree(int n);
/// The same conclusion for any tree.
CheckReport check_tree_graph(const Graph& g);

/// Default and chromatic homology agree for i < girth - 1 (all i for forests);
/// the chromatic Euler characteristic equals the chromatic state sum.
CheckReport check_chromatic_overlap(const Graph& g);

/// L within K within G, each spec relative to its parent. Checks that the
/// three restriction maps are chain maps, that the triangle commutes on
/// chains, and that it commutes on rational homology.
CheckReport check_functorial(const Graph& g, const SubgraphSpec& k_in_g, const SubgraphSpec& l_in_k,
                             const CoefficientSystem& sys);

/// A deterministic nested pair for G: K drops the last edge, L keeps the
/// first half of K's edges and their endpoints (plus vertex 0).
std::pair<SubgraphSpec, SubgraphSpec> default_nested_triple(const Graph& g);

/// recover_tutte(tutte_hat) = deletion-contraction = state sum.
CheckReport check_tutte_recovery(const Graph& g);

/// Names accepted by run_checks, in default execution order.
const std::vector<std::string>& known_checks();
bool is_known_check(const std::string& name);

struct SuiteOptions {
  std::vector<std::string> checks;  ///< empty means every known check
  CoefficientSystem system;
  int reorder_trials = 5;
  std::uint64_t seed = kDefaultSeed;
  int max_edges = kDefaultMaxEdges;
};

/// Runs the selected checks on one graph wherever they apply: edge checks
/// over every edge of the right kind, pendant over pendant edges, tree on
/// trees. Exceptions become failing reports.
std::vector<CheckReport> run_checks(const std::string& name, const Graph& g, const SuiteOptions& options);

/// run_checks over a list of graphs, graphs spread over `jobs` threads;
/// reports keep the input order.
std::vector<CheckReport> run_suite(const std::vector<CorpusEntry>& graphs, const SuiteOptions& options, int jobs = 1);

}  // namespace tuttecoh

#include "tuttecoh/theorem_suite.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tuttecoh/parallel.hpp"
#include "tuttecoh/smith.hpp"
#include "tuttecoh/tutte.hpp"

namespace tuttecoh {

namespace {

std::string deg(Bidegree d) { return "(" + std::to_string(d.p) + "," + std::to_string(d.q) + ")"; }

std::string group_text(const HomologyGroup& g) {
  std::string out = "free " + std::to_string(g.free_rank) + " torsion [";
  for (std::size_t k = 0; k < g.torsion.size(); ++k) out += (k ? "," : "") + g.torsion[k].str();
  return out + "]";
}

/// First (i, bidegree) where the two homologies differ.
std::optional<std::string> homology_mismatch(const BigradedHomology& a, const BigradedHomology& b,
                                             const std::string& a_name, const std::string& b_name) {
  std::set<HomologyKey> keys;
  for (const auto& [key, group] : a.entries()) keys.insert(key);
  for (const auto& [key, group] : b.entries()) keys.insert(key);
  for (const auto& key : keys) {
    const auto ga = a.at(key.i, key.degree);
    const auto gb = b.at(key.i, key.degree);
    if (ga != gb)
      return "H^" + std::to_string(key.i) + " at " + deg(key.degree) + ": " + a_name + " " + group_text(ga) + ", " +
             b_name + " " + group_text(gb);
  }
  return std::nullopt;
}

std::vector<Bidegree> bidegree_union(std::initializer_list<const ChainComplex*> complexes) {
  std::set<Bidegree> all;
  for (const auto* c : complexes)
    for (const auto d : c->all_bidegrees()) all.insert(d);
  return {all.begin(), all.end()};
}

std::string edge_tag(int e) { return "e" + std::to_string(e + 1); }

ChainComplex complex_for(const Graph& g, const CoefficientSystem& sys) {
  return build_complex(g, sys, kMaxEdgesHardCap);
}

nlohmann::json ranks_json(const InducedRanks& ranks) {
  auto out = nlohmann::json::array();
  for (const auto& [key, r] : ranks) out.push_back({{"i", key.i}, {"p", key.degree.p}, {"q", key.degree.q}, {"rank", r}});
  return out;
}

CheckReport ses_battery(const std::string& check, const Graph& g, int e, const CoefficientSystem& sys) {
  const std::string name = g.describe();
  const auto dc = build_deletion_contraction(g, e, sys, kMaxEdgesHardCap);
  const int n = dc.whole.max_height();
  const auto beta_alpha = compose(dc.beta, dc.alpha, dc.contracted, dc.whole, dc.deleted);
  for (int i = 0; i <= n; ++i)
    for (const auto d : bidegree_union({&dc.whole, &dc.deleted, &dc.contracted})) {
      const std::string where = " at height " + std::to_string(i) + ", bidegree " + deg(d) + " (" + edge_tag(e) + ")";
      const int src = dc.contracted.block_dim(i - 1, d);
      const int mid = dc.whole.block_dim(i, d);
      const int tgt = dc.deleted.block_dim(i, d);
      if (src + tgt != mid)
        return fail_report(check, name,
                           "dimensions " + std::to_string(src) + " + " + std::to_string(tgt) + " != " + std::to_string(mid) + where);
      if (src > 0) {
        const auto form = smith_normal_form(dc.alpha.block(dc.contracted, dc.whole, i - 1, d));
        if (form.rank != src) return fail_report(check, name, "alpha not injective" + where);
        if (!form.unimodular()) return fail_report(check, name, "alpha has torsion cokernel" + where);
        if (!beta_alpha.block(dc.contracted, dc.deleted, i - 1, d).is_zero())
          return fail_report(check, name, "beta after alpha is not zero" + where);
      }
      if (tgt > 0) {
        const auto form = smith_normal_form(dc.beta.block(dc.whole, dc.deleted, i, d));
        if (form.rank != tgt) return fail_report(check, name, "beta not surjective" + where);
        if (!form.unimodular()) return fail_report(check, name, "beta not surjective over Z" + where);
      }
    }
  if (const auto bad = chain_map_defect(dc.alpha, dc.contracted, dc.whole)) return fail_report(check, name, "alpha: " + *bad);
  if (const auto bad = chain_map_defect(dc.beta, dc.whole, dc.deleted)) return fail_report(check, name, "beta: " + *bad);
  if (const auto bad = chain_map_defect(dc.gamma, dc.deleted, dc.contracted))
    return fail_report(check, name, "connecting map: " + *bad);
  return pass_report(check, name, {{"edge", e + 1}});
}

CheckReport les_battery(const std::string& check, const Graph& g, int e, const CoefficientSystem& sys) {
  const std::string name = g.describe();
  const auto dc = build_deletion_contraction(g, e, sys, kMaxEdgesHardCap);
  const auto whole = homology_with_ranks(dc.whole);
  const auto deleted = homology_with_ranks(dc.deleted);
  const auto contracted = homology_with_ranks(dc.contracted);
  const auto& h_whole = whole.groups;
  const auto& h_deleted = deleted.groups;
  const auto& h_contracted = contracted.groups;
  const auto alpha = rational_ranks_of_map(dc.alpha, dc.contracted, dc.whole, contracted.ranks, whole.ranks);
  const auto beta = rational_ranks_of_map(dc.beta, dc.whole, dc.deleted, whole.ranks, deleted.ranks);
  const auto gamma = rational_ranks_of_map(dc.gamma, dc.deleted, dc.contracted, deleted.ranks, contracted.ranks);
  nlohmann::json details = {{"edge", e + 1}, {"gamma_ranks", ranks_json(gamma)}};

  const int n = dc.whole.max_height();
  for (int i = 0; i <= n; ++i)
    for (const auto d : bidegree_union({&dc.whole, &dc.deleted, &dc.contracted})) {
      struct Node {
        const char* label;
        int dim, in, out;
      };
      const Node nodes[] = {
          {"H(G)", h_whole.at(i, d).free_rank, induced_rank(alpha, i - 1, d), induced_rank(beta, i, d)},
          {"H(G-e)", h_deleted.at(i, d).free_rank, induced_rank(beta, i, d), induced_rank(gamma, i, d)},
          {"H(G/e)", h_contracted.at(i, d).free_rank, induced_rank(gamma, i, d), induced_rank(alpha, i, d)},
      };
      for (const auto& node : nodes)
        if (node.dim != node.in + node.out)
          return fail_report(check, name,
                             std::string("not exact at ") + node.label + "^" + std::to_string(i) + " " + deg(d) + " (" +
                                 edge_tag(e) + "): dim " + std::to_string(node.dim) + ", incoming rank " +
                                 std::to_string(node.in) + ", outgoing rank " + std::to_string(node.out),
                             details);
    }
  return pass_report(check, name, std::move(details));
}

}  // namespace

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j = {{"check", check}, {"graph", graph}, {"verdict", pass ? "pass" : "fail"},
                      {"witness", pass ? nlohmann::json(nullptr) : nlohmann::json(witness)}};
  if (!details.is_null()) j["details"] = details;
  return j;
}

CheckReport pass_report(std::string check, std::string graph, nlohmann::json details) {
  return {std::move(check), std::move(graph), true, {}, std::move(details)};
}

CheckReport fail_report(std::string check, std::string graph, std::string witness, nlohmann::json details) {
  if (witness.empty()) witness = "unspecified failure";
  return {std::move(check), std::move(graph), false, std::move(witness), std::move(details)};
}

CheckReport check_euler(const Graph& g, const CoefficientSystem& sys) {
  const std::string name = g.describe();
  const auto c = complex_for(g, sys);
  const BiPoly chain = graded_euler(c);
  const BiPoly from_homology = graded_euler(homology(c));
  const BiPoly expected = signed_betti_state_sum(g, qdim(sys.A), qdim(sys.B));
  nlohmann::json details = {{"euler", chain.to_string()}};
  if (chain != from_homology)
    return fail_report("euler", name, "chain form " + chain.to_string() + " != homology form " + from_homology.to_string(),
                       details);
  if (chain != expected)
    return fail_report("euler", name, "Euler characteristic " + chain.to_string() + " != state sum " + expected.to_string(),
                       details);
  if (sys.A.dim() == 2 && qdim(sys.A) == BiPoly(1) + BiPoly::x()) {
    if (qdim(sys.B) == BiPoly(1) + BiPoly::y() && chain != tutte_hat(g))
      return fail_report("euler", name, "Euler characteristic differs from T-hat " + tutte_hat(g).to_string(), details);
    if (qdim(sys.B) == BiPoly(1) && chain != chromatic_state_sum(g))
      return fail_report("euler", name, "Euler characteristic differs from the chromatic sum", details);
  }
  return pass_report("euler", name, std::move(details));
}

CheckReport check_d_squared(const Graph& g, const CoefficientSystem& sys) {
  const std::string name = g.describe();
  const auto c = complex_for(g, sys);
  for (const auto& result : {verify_degree_preservation(c), verify_square_commutativity(c), verify_d_squared(c)})
    if (!result.ok) return fail_report("d2", name, result.witness);
  return pass_report("d2", name);
}

namespace {

CheckReport reorder_against(const Graph& g, const CoefficientSystem& sys, const std::vector<std::vector<int>>& perms) {
  const std::string name = g.describe();
  const auto base = homology(complex_for(g, sys));
  for (const auto& perm : perms) {
    const auto h = homology(complex_for(permute_edges(g, perm), sys));
    if (auto bad = homology_mismatch(base, h, "original", "reordered")) {
      std::string order;
      for (const int k : perm) order += (order.empty() ? "" : ",") + edge_tag(k);
      return fail_report("reorder", name, "order [" + order + "]: " + *bad);
    }
  }
  return pass_report("reorder", name, {{"orders", perms.size()}});
}

}  // namespace

CheckReport check_reorder(const Graph& g, const CoefficientSystem& sys, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> perms;
  for (int t = 0; t < trials; ++t) perms.push_back(random_permutation(g.num_edges(), rng));
  return reorder_against(g, sys, perms);
}

CheckReport check_reorder_all(const Graph& g, const CoefficientSystem& sys) {
  if (g.num_edges() > 8) throw std::invalid_argument("exhaustive reordering limited to 8 edges");
  std::vector<int> perm(g.num_edges());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  return reorder_against(g, sys, perms);
}

CheckReport check_ses_nonloop(const Graph& g, int e, const CoefficientSystem& sys) {
  if (classify_edge(g, e) == EdgeKind::loop) throw std::invalid_argument("check_ses_nonloop: edge is a loop");
  return ses_battery("ses", g, e, sys);
}

CheckReport check_ses_loop(const Graph& g, int e, const CoefficientSystem& sys) {
  if (classify_edge(g, e) != EdgeKind::loop) throw std::invalid_argument("check_ses_loop: edge is not a loop");
  return ses_battery("ses", g, e, sys);
}

CheckReport check_ses(const Graph& g, int e, const CoefficientSystem& sys) {
  return classify_edge(g, e) == EdgeKind::loop ? check_ses_loop(g, e, sys) : check_ses_nonloop(g, e, sys);
}

CheckReport check_les_nonloop(const Graph& g, int e, const CoefficientSystem& sys) {
  if (classify_edge(g, e) == EdgeKind::loop) throw std::invalid_argument("check_les_nonloop: edge is a loop");
  return les_battery("les", g, e, sys);
}

CheckReport check_les_loop(const Graph& g, int e, const CoefficientSystem& sys) {
  if (classify_edge(g, e) != EdgeKind::loop) throw std::invalid_argument("check_les_loop: edge is not a loop");
  return les_battery("les", g, e, sys);
}

CheckReport check_les(const Graph& g, int e, const CoefficientSystem& sys) {
  return classify_edge(g, e) == EdgeKind::loop ? check_les_loop(g, e, sys) : check_les_nonloop(g, e, sys);
}

CheckReport check_pendant(const Graph& g, int e, const CoefficientSystem& sys) {
  if (!is_pendant_edge(g, e)) throw std::invalid_argument("check_pendant: " + edge_tag(e) + " is not a pendant edge");
  const std::string name = g.describe();
  const auto h = homology(complex_for(g, sys));
  const auto shifted = homology(complex_for(contract_edge(g, e), sys)).shifted(1, 0);
  if (auto bad = homology_mismatch(h, shifted, "G", "G/e shifted")) return fail_report("pendant", name, edge_tag(e) + ": " + *bad);
  return pass_report("pendant", name, {{"edge", e + 1}});
}

CheckReport check_tree_graph(const Graph& g) {
  const std::string name = g.describe();
  if (!is_forest(g) || component_count(g) != 1) throw std::invalid_argument("check_tree: graph is not a tree");
  const int n = g.num_edges();
  const BigradedHomology expected({{{0, {n, 0}}, {1, {}}}, {{0, {n + 1, 0}}, {1, {}}}});
  const auto h = homology(complex_for(g, default_system()));
  if (auto bad = homology_mismatch(h, expected, "computed", "expected")) return fail_report("tree", name, *bad);
  return pass_report("tree", name);
}

CheckReport check_tree(int n) {
  if (n < 0) throw std::invalid_argument("check_tree: negative size");
  return check_tree_graph(generate_family(Family::tree_path, n));
}

CheckReport check_chromatic_overlap(const Graph& g) {
  const std::string name = g.describe();
  const auto tutte_side = homology(complex_for(g, default_system()));
  const auto chromatic = complex_for(g, chromatic_system());
  const auto chromatic_side = homology(chromatic);
  const auto ell = girth(g);
  const int bound = ell ? *ell - 1 : g.num_edges() + 1;
  nlohmann::json details = {{"girth", ell ? nlohmann::json(*ell) : nlohmann::json("inf")}, {"compared_below", bound}};
  if (auto bad = homology_mismatch(tutte_side.truncated(bound), chromatic_side.truncated(bound), "Tutte", "chromatic"))
    return fail_report("chromatic", name, *bad, details);
  if (graded_euler(chromatic) != chromatic_state_sum(g))
    return fail_report("chromatic", name,
                       "chromatic Euler characteristic " + graded_euler(chromatic).to_string() + " != " +
                           chromatic_state_sum(g).to_string(),
                       details);
  return pass_report("chromatic", name, std::move(details));
}

CheckReport check_functorial(const Graph& g, const SubgraphSpec& k_in_g, const SubgraphSpec& l_in_k,
                             const CoefficientSystem& sys) {
  const std::string name = g.describe();
  const Graph k = induced_subgraph(g, k_in_g);
  const Graph l = induced_subgraph(k, l_in_k);
  const SubgraphSpec l_in_g = compose_subgraphs(k_in_g, l_in_k);
  const auto cg = complex_for(g, sys);
  const auto ck = complex_for(k, sys);
  const auto cl = complex_for(l, sys);
  const auto to_k = functorial_beta(cg, ck, k_in_g);
  const auto k_to_l = functorial_beta(ck, cl, l_in_k);
  const auto to_l = functorial_beta(cg, cl, l_in_g);
  if (auto bad = chain_map_defect(to_k, cg, ck)) return fail_report("functorial", name, "G -> K: " + *bad);
  if (auto bad = chain_map_defect(k_to_l, ck, cl)) return fail_report("functorial", name, "K -> L: " + *bad);
  if (auto bad = chain_map_defect(to_l, cg, cl)) return fail_report("functorial", name, "G -> L: " + *bad);
  const auto composite = compose(k_to_l, to_k, cg, ck, cl);
  if (!same_map(composite, to_l, cg, cl)) return fail_report("functorial", name, "triangle does not commute on chains");
  const auto defect = rational_ranks_of_map(difference(composite, to_l, cg, cl), cg, cl);
  if (!defect.empty()) {
    const auto& [key, r] = *defect.begin();
    return fail_report("functorial", name,
                       "triangle does not commute on homology at H^" + std::to_string(key.i) + " " + deg(key.degree));
  }
  const auto composite_ranks = rational_ranks_of_map(composite, cg, cl);
  if (composite_ranks != rational_ranks_of_map(to_l, cg, cl))
    return fail_report("functorial", name, "induced ranks of the composite differ from the direct map");
  return pass_report("functorial", name, {{"K", k.describe()}, {"L", l.describe()}, {"induced_ranks", ranks_json(composite_ranks)}});
}

std::pair<SubgraphSpec, SubgraphSpec> default_nested_triple(const Graph& g) {
  SubgraphSpec k = SubgraphSpec::whole(g);
  if (!k.edges.empty()) k.edges.pop_back();
  const Graph kg = induced_subgraph(g, k);
  SubgraphSpec l;
  std::set<int> vertices;
  if (kg.num_vertices() > 0) vertices.insert(0);
  for (int e = 0; e < kg.num_edges() / 2; ++e) {
    l.edges.push_back(e);
    vertices.insert(kg.edges()[e].u);
    vertices.insert(kg.edges()[e].v);
  }
  l.vertices.assign(vertices.begin(), vertices.end());
  return {k, l};
}

CheckReport check_tutte_recovery(const Graph& g) {
  const std::string name = g.describe();
  const BiPoly by_dc = tutte_deletion_contraction(g);
  const BiPoly by_sum = tutte_state_sum(g);
  if (by_dc != by_sum)
    return fail_report("tutte", name, "deletion-contraction " + by_dc.to_string() + " != state sum " + by_sum.to_string());
  const BiPoly recovered = recover_tutte(tutte_hat(g));
  if (recovered != by_dc)
    return fail_report("tutte", name, "recovered " + recovered.to_string() + " != " + by_dc.to_string());
  return pass_report("tutte", name, {{"tutte", by_dc.to_string()}});
}

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {"euler", "d2",   "reorder",    "ses",  "les",
                                                 "pendant", "tree", "chromatic", "functorial", "tutte"};
  return names;
}

bool is_known_check(const std::string& name) {
  const auto& names = known_checks();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CheckReport> run_checks(const std::string& name, const Graph& g, const SuiteOptions& options) {
  std::vector<CheckReport> out;
  const auto& selected = options.checks.empty() ? known_checks() : options.checks;
  const auto wanted = [&](const std::string& c) { return std::find(selected.begin(), selected.end(), c) != selected.end(); };
  const auto guarded = [&](const std::string& check, auto&& fn) {
    CheckReport r;
    try {
      r = fn();
    } catch (const std::exception& ex) {
      r = fail_report(check, g.describe(), std::string("error: ") + ex.what());
    }
    r.graph = name;
    out.push_back(std::move(r));
  };
  if (g.num_edges() > options.max_edges) {
    out.push_back(fail_report("bound", name,
                              std::to_string(g.num_edges()) + " edges exceed the bound " + std::to_string(options.max_edges)));
    return out;
  }
  const auto& sys = options.system;
  const int m = g.num_edges();
  for (const auto& check : known_checks()) {
    if (!wanted(check)) continue;
    if (check == "euler") guarded(check, [&] { return check_euler(g, sys); });
    if (check == "d2") guarded(check, [&] { return check_d_squared(g, sys); });
    if (check == "reorder") guarded(check, [&] { return check_reorder(g, sys, options.reorder_trials, options.seed); });
    if (check == "ses")
      for (int e = 0; e < m; ++e) guarded(check, [&] { return check_ses(g, e, sys); });
    if (check == "les")
      for (int e = 0; e < m; ++e) guarded(check, [&] { return check_les(g, e, sys); });
    if (check == "pendant")
      for (int e = 0; e < m; ++e)
        if (is_pendant_edge(g, e)) guarded(check, [&] { return check_pendant(g, e, sys); });
    if (check == "tree" && is_forest(g) && component_count(g) == 1) guarded(check, [&] { return check_tree_graph(g); });
    if (check == "chromatic") guarded(check, [&] { return check_chromatic_overlap(g); });
    if (check == "functorial")
      guarded(check, [&] {
        const auto [k, l] = default_nested_triple(g);
        return check_functorial(g, k, l, sys);
      });
    if (check == "tutte") guarded(check, [&] { return check_tutte_recovery(g); });
  }
  return out;
}

std::vector<CheckReport> run_suite(const std::vector<CorpusEntry>& graphs, const SuiteOptions& options, int jobs) {
  std::vector<std::vector<CheckReport>> per_graph(graphs.size());
  parallel_for(graphs.size(), jobs, [&](std::size_t k) { per_graph[k] = run_checks(graphs[k].name, graphs[k].graph, options); });
  std::vector<CheckReport> out;
  for (auto& reports : per_graph)
    for (auto& r : reports) out.push_back(std::move(r));
  return out;
}

}  // namespace tuttecoh

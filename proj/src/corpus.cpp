#include "tuttecoh/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tuttecoh {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList canonical_form(int n, const EdgeList& edges) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  EdgeList best;
  bool have = false;
  EdgeList mapped(edges.size());
  do {
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const int a = perm[edges[k].first];
      const int b = perm[edges[k].second];
      mapped[k] = {std::min(a, b), std::max(a, b)};
    }
    std::sort(mapped.begin(), mapped.end());
    if (!have || mapped < best) {
      best = mapped;
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

void extend(int n, const EdgeList& pairs, std::size_t from, int remaining, EdgeList& current,
            std::set<EdgeList>& seen) {
  seen.insert(canonical_form(n, current));
  if (remaining == 0) return;
  for (std::size_t k = from; k < pairs.size(); ++k) {
    current.push_back(pairs[k]);
    extend(n, pairs, k, remaining - 1, current, seen);
    current.pop_back();
  }
}

Graph to_graph(int n, const EdgeList& edges) {
  std::vector<Edge> out;
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return Graph(n, std::move(out));
}

}  // namespace

std::vector<Graph> enumerate_multigraphs(int max_vertices, int max_edges) {
  if (max_vertices < 1 || max_edges < 0 || max_edges > kMaxEdgesHardCap)
    throw std::invalid_argument("enumeration bounds out of range");
  std::vector<Graph> out;
  for (int n = 1; n <= max_vertices; ++n) {
    EdgeList pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u; v < n; ++v) pairs.emplace_back(u, v);
    std::set<EdgeList> seen;
    EdgeList current;
    extend(n, pairs, 0, max_edges, current, seen);
    // order by edge count first so small graphs come first
    std::vector<EdgeList> classes(seen.begin(), seen.end());
    std::stable_sort(classes.begin(), classes.end(),
                     [](const EdgeList& a, const EdgeList& b) { return a.size() < b.size(); });
    for (const auto& c : classes) out.push_back(to_graph(n, c));
  }
  return out;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
  std::uint64_t r;
  do r = rng();
  while (r >= limit);
  return lo + static_cast<int>(r % span);
}

Graph random_multigraph(std::mt19937_64& rng, int max_vertices, int max_edges) {
  const int n = uniform_int(rng, 1, max_vertices);
  const int m = uniform_int(rng, 0, max_edges);
  std::vector<Edge> edges;
  for (int k = 0; k < m; ++k) {
    const int u = uniform_int(rng, 0, n - 1);
    const int v = uniform_int(rng, 0, n - 1);
    edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int k = n - 1; k > 0; --k) std::swap(perm[k], perm[uniform_int(rng, 0, k)]);
  return perm;
}

std::vector<CorpusEntry> family_corpus(int family_max_edges) {
  std::vector<CorpusEntry> out;
  for (const auto f : all_families()) {
    const auto [lo, hi] = family_size_bounds(f);
    for (int n = lo; n <= hi; ++n)
      if (family_edge_count(f, n) <= family_max_edges)
        out.push_back({family_name(f) + "(" + std::to_string(n) + ")", generate_family(f, n)});
  }
  return out;
}

std::vector<CorpusEntry> builtin_corpus(std::uint64_t seed, int max_edges) {
  auto out = family_corpus(std::min(max_edges, kFamilyMaxEdges));
  std::mt19937_64 rng(seed);
  for (int k = 0; k < kRandomGraphCount; ++k) {
    Graph g = random_multigraph(rng, kRandomMaxVertices, kRandomMaxEdges);
    if (g.num_edges() <= max_edges) out.push_back({"random#" + std::to_string(k), std::move(g)});
  }
  return out;
}

std::vector<CorpusEntry> sweep_corpus(int max_vertices, int max_edges, int family_max_edges) {
  std::vector<CorpusEntry> out;
  int k = 0;
  for (auto& g : enumerate_multigraphs(max_vertices, max_edges)) out.push_back({"enum#" + std::to_string(k++), std::move(g)});
  for (auto& entry : family_corpus(family_max_edges)) out.push_back(std::move(entry));
  return out;
}

}  // namespace tuttecoh

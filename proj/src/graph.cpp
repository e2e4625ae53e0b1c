#include "tuttecoh/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace tuttecoh {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Keeps the smaller root so that roots are component minima.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

void check_edge_index(const Graph& g, int e) {
  if (e < 0 || e >= g.num_edges())
    throw std::out_of_range("edge index " + std::to_string(e) + " out of range for graph with " +
                            std::to_string(g.num_edges()) + " edges");
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view word, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size() || value < 0)
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(word) + "'");
  return value;
}

}  // namespace

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ < 0) throw std::invalid_argument("negative vertex count");
  for (const auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= num_vertices_ || v >= num_vertices_)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + "-" +
                                  std::to_string(v));
  }
}

const Edge& Graph::edge(int e) const {
  check_edge_index(*this, e);
  return edges_[e];
}

int Graph::degree(int vertex) const {
  int d = 0;
  for (const auto& [u, v] : edges_) d += (u == vertex) + (v == vertex);
  return d;
}

std::string Graph::describe() const {
  std::ostringstream os;
  os << "V=" << num_vertices_ << " E=[";
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (k) os << ',';
    os << edges_[k].u << '-' << edges_[k].v;
  }
  os << ']';
  return os.str();
}

EdgeSubset::EdgeSubset(int size, std::uint32_t bits) : size_(size), bits_(bits) {
  if (size < 0 || size > kMaxEdgesHardCap) throw std::invalid_argument("edge subset size out of range");
  if (size < 32 && (bits >> size) != 0) throw std::invalid_argument("edge subset has bits beyond its size");
}

EdgeSubset EdgeSubset::full(int size) { return EdgeSubset(size, size == 0 ? 0u : ((1u << size) - 1u)); }

std::vector<int> SubgraphSummary::component_ids() const {
  std::vector<int> ids;
  for (std::size_t v = 0; v < component_of.size(); ++v)
    if (component_of[v] == static_cast<int>(v)) ids.push_back(static_cast<int>(v));
  return ids;
}

int SubgraphSummary::component_position(int vertex) const {
  const int id = component_of.at(vertex);
  int pos = 0;
  for (int v = 0; v < id; ++v) pos += component_of[v] == v;
  return pos;
}

std::string to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::loop: return "loop";
    case EdgeKind::isthmus: return "isthmus";
    case EdgeKind::ordinary: return "ordinary";
  }
  return "?";
}

Graph parse_graph(std::string_view text) {
  std::optional<int> num_vertices;
  std::vector<Edge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto words = split_words(line);
    if (words[0] == "vertices") {
      if (words.size() != 2) throw ParseError(line_no, "expected 'vertices N'");
      if (num_vertices) throw ParseError(line_no, "duplicate 'vertices' header");
      num_vertices = parse_int(words[1], line_no);
    } else if (words[0] == "edge") {
      if (words.size() != 3) throw ParseError(line_no, "expected 'edge U V'");
      if (!num_vertices) throw ParseError(line_no, "missing 'vertices' header before first edge");
      const int u = parse_int(words[1], line_no);
      const int v = parse_int(words[2], line_no);
      if (u >= *num_vertices || v >= *num_vertices)
        throw ParseError(line_no, "endpoint out of range (graph has " + std::to_string(*num_vertices) +
                                      " vertices)");
      edges.push_back({u, v});
      if (static_cast<int>(edges.size()) > kMaxEdgesHardCap)
        throw ParseError(line_no, "more than " + std::to_string(kMaxEdgesHardCap) + " edges");
    } else {
      throw ParseError(line_no, "unrecognized directive '" + std::string(words[0]) + "'");
    }
  }
  if (!num_vertices) throw ParseError(line_no, "missing 'vertices' header");
  return Graph(*num_vertices, std::move(edges));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  os << "vertices " << g.num_vertices() << '\n';
  for (const auto& [u, v] : g.edges()) os << "edge " << u << ' ' << v << '\n';
  return os.str();
}

int component_count(const Graph& g) {
  return subgraph_summary(g, EdgeSubset::full(g.num_edges())).b0;
}

EdgeKind classify_edge(const Graph& g, int e) {
  check_edge_index(g, e);
  if (g.edges()[e].is_loop()) return EdgeKind::loop;
  const auto without = subgraph_summary(g, EdgeSubset::full(g.num_edges()).without(e));
  const auto& [u, v] = g.edges()[e];
  return without.component_of[u] != without.component_of[v] ? EdgeKind::isthmus : EdgeKind::ordinary;
}

Graph delete_edge(const Graph& g, int e) {
  check_edge_index(g, e);
  auto edges = g.edges();
  edges.erase(edges.begin() + e);
  return Graph(g.num_vertices(), std::move(edges));
}

Graph contract_edge(const Graph& g, int e) {
  check_edge_index(g, e);
  const auto [a, b] = g.edges()[e];
  if (a == b) return delete_edge(g, e);
  const int keep = std::min(a, b);
  const int drop = std::max(a, b);
  auto relabel = [&](int w) {
    if (w == drop) return keep;
    return w > drop ? w - 1 : w;
  };
  std::vector<Edge> edges;
  edges.reserve(g.num_edges() - 1);
  for (int k = 0; k < g.num_edges(); ++k) {
    if (k == e) continue;
    edges.push_back({relabel(g.edges()[k].u), relabel(g.edges()[k].v)});
  }
  return Graph(g.num_vertices() - 1, std::move(edges));
}

SubgraphSummary subgraph_summary(const Graph& g, const EdgeSubset& s) {
  if (s.size() != g.num_edges())
    throw std::invalid_argument("edge subset length " + std::to_string(s.size()) +
                                " does not match edge count " + std::to_string(g.num_edges()));
  UnionFind uf(g.num_vertices());
  int merges = 0;
  for (int k = 0; k < g.num_edges(); ++k)
    if (s.contains(k)) merges += uf.unite(g.edges()[k].u, g.edges()[k].v);
  SubgraphSummary out;
  out.component_of.resize(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) out.component_of[v] = uf.find(v);
  out.b0 = g.num_vertices() - merges;
  out.b1 = s.height() - g.num_vertices() + out.b0;
  return out;
}

std::optional<int> girth(const Graph& g) {
  std::set<std::pair<int, int>> seen;
  bool parallel = false;
  for (const auto& [u, v] : g.edges()) {
    if (u == v) return 1;
    parallel |= !seen.insert({std::min(u, v), std::max(u, v)}).second;
  }
  if (parallel) return 2;

  // Simple graph: BFS from every root; the minimum over roots of
  // dist[a] + dist[b] + 1 over non-tree edges is exact.
  const int n = g.num_vertices();
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int k = 0; k < g.num_edges(); ++k) {
    adj[g.edges()[k].u].push_back({g.edges()[k].v, k});
    adj[g.edges()[k].v].push_back({g.edges()[k].u, k});
  }
  std::optional<int> best;
  for (int root = 0; root < n; ++root) {
    std::vector<int> dist(n, -1), via(n, -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      const int a = queue.front();
      queue.pop_front();
      for (const auto& [b, k] : adj[a]) {
        if (k == via[a]) continue;
        if (dist[b] < 0) {
          dist[b] = dist[a] + 1;
          via[b] = k;
          queue.push_back(b);
        } else {
          const int len = dist[a] + dist[b] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

Graph permute_edges(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.num_edges()) throw std::invalid_argument("permutation length mismatch");
  std::vector<int> check = perm;
  std::sort(check.begin(), check.end());
  for (int k = 0; k < g.num_edges(); ++k)
    if (check[k] != k) throw std::invalid_argument("not a permutation");
  std::vector<Edge> edges;
  edges.reserve(perm.size());
  for (const int k : perm) edges.push_back(g.edges()[k]);
  return Graph(g.num_vertices(), std::move(edges));
}

Graph move_edge_last(const Graph& g, int e) {
  check_edge_index(g, e);
  std::vector<int> perm;
  for (int k = 0; k < g.num_edges(); ++k)
    if (k != e) perm.push_back(k);
  perm.push_back(e);
  return permute_edges(g, perm);
}

bool is_pendant_edge(const Graph& g, int e) {
  const auto& [u, v] = g.edge(e);
  if (u == v) return false;
  return g.degree(u) == 1 || g.degree(v) == 1;
}

bool is_forest(const Graph& g) { return !girth(g).has_value(); }

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  for (const auto& [u, v] : b.edges()) edges.push_back({u + a.num_vertices(), v + a.num_vertices()});
  return Graph(a.num_vertices() + b.num_vertices(), std::move(edges));
}

SubgraphSpec SubgraphSpec::whole(const Graph& g) {
  SubgraphSpec spec;
  spec.vertices.resize(g.num_vertices());
  std::iota(spec.vertices.begin(), spec.vertices.end(), 0);
  spec.edges.resize(g.num_edges());
  std::iota(spec.edges.begin(), spec.edges.end(), 0);
  return spec;
}

Graph induced_subgraph(const Graph& g, const SubgraphSpec& spec) {
  auto strictly_increasing = [](const std::vector<int>& xs) {
    return std::adjacent_find(xs.begin(), xs.end(), std::greater_equal<>()) == xs.end();
  };
  if (!strictly_increasing(spec.vertices) || !strictly_increasing(spec.edges))
    throw std::invalid_argument("subgraph indices must be strictly increasing");
  std::vector<int> local(g.num_vertices(), -1);
  for (std::size_t k = 0; k < spec.vertices.size(); ++k) {
    const int v = spec.vertices[k];
    if (v < 0 || v >= g.num_vertices()) throw std::invalid_argument("subgraph vertex out of range");
    local[v] = static_cast<int>(k);
  }
  std::vector<Edge> edges;
  for (const int k : spec.edges) {
    const auto& [u, v] = g.edge(k);
    if (local[u] < 0 || local[v] < 0)
      throw std::invalid_argument("subgraph edge " + std::to_string(k + 1) + " has an endpoint outside the vertex set");
    edges.push_back({local[u], local[v]});
  }
  return Graph(static_cast<int>(spec.vertices.size()), std::move(edges));
}

SubgraphSpec compose_subgraphs(const SubgraphSpec& outer, const SubgraphSpec& inner) {
  SubgraphSpec out;
  for (const int v : inner.vertices) out.vertices.push_back(outer.vertices.at(v));
  for (const int e : inner.edges) out.edges.push_back(outer.edges.at(e));
  return out;
}

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto f : all_families())
    if (family_name(f) == name) return f;
  return std::nullopt;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::tree_path: return "tree_path";
    case Family::cycle: return "cycle";
    case Family::bouquet: return "bouquet";
    case Family::complete: return "complete";
    case Family::theta: return "theta";
  }
  return "?";
}

std::vector<Family> all_families() {
  return {Family::tree_path, Family::cycle, Family::bouquet, Family::complete, Family::theta};
}

std::pair<int, int> family_size_bounds(Family f) {
  switch (f) {
    case Family::tree_path: return {0, 12};
    case Family::cycle: return {1, 12};
    case Family::bouquet: return {0, 12};
    case Family::complete: return {1, 5};
    case Family::theta: return {3, 12};
  }
  return {0, 0};
}

int family_edge_count(Family f, int n) {
  return f == Family::complete ? n * (n - 1) / 2 : n;
}

Graph generate_family(Family f, int n) {
  const auto [lo, hi] = family_size_bounds(f);
  if (n < lo || n > hi)
    throw std::invalid_argument("size " + std::to_string(n) + " out of bounds [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "] for family " + family_name(f));
  std::vector<Edge> edges;
  switch (f) {
    case Family::tree_path:
      for (int k = 0; k < n; ++k) edges.push_back({k, k + 1});
      return Graph(n + 1, std::move(edges));
    case Family::cycle:
      // cycle 1 is a loop, cycle 2 a pair of parallel edges
      for (int k = 0; k + 1 < n; ++k) edges.push_back({k, k + 1});
      edges.push_back(n == 1 ? Edge{0, 0} : Edge{0, n - 1});
      return Graph(n, std::move(edges));
    case Family::bouquet:
      edges.assign(n, Edge{0, 0});
      return Graph(1, std::move(edges));
    case Family::complete:
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
      return Graph(n, std::move(edges));
    case Family::theta: {
      // Three internally disjoint paths between poles 0 and 1 with lengths
      // as equal as possible, longest first.
      int next = 2;
      for (int p = 0; p < 3; ++p) {
        const int len = n / 3 + (p < n % 3 ? 1 : 0);
        int prev = 0;
        for (int k = 0; k + 1 < len; ++k) {
          edges.push_back({prev, next});
          prev = next++;
        }
        edges.push_back({prev, 1});
      }
      return Graph(next, std::move(edges));
    }
  }
  throw std::invalid_argument("unknown family");
}

Graph generate_family(std::string_view name, int n) {
  const auto f = family_from_name(name);
  if (!f) throw std::invalid_argument("unknown family '" + std::string(name) + "'");
  return generate_family(*f, n);
}

}  // namespace tuttecoh

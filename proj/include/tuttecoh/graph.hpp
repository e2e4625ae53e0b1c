#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tuttecoh {

/// Hard ceiling on edge count; subsets are stored as 32-bit masks.
inline constexpr int kMaxEdgesHardCap = 14;

struct Edge {
  int u = 0;
  int v = 0;

  bool is_loop() const { return u == v; }
  bool operator==(const Edge&) const = default;
};

/// Multigraph with loops and parallel edges. The edge order is part of the
/// value: it drives the signs of the cube differential, and two graphs with
/// the same edges in a different order compare unequal.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices, std::vector<Edge> edges = {});

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const;

  /// Degree of a vertex; a loop contributes two.
  int degree(int vertex) const;

  /// Compact one-line form, e.g. "V=2 E=[0-1,0-1,1-1]".
  std::string describe() const;

  bool operator==(const Graph&) const = default;

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Subset of the edges of a graph, i.e. a vertex of the cube {0,1}^E.
class EdgeSubset {
 public:
  EdgeSubset() = default;
  EdgeSubset(int size, std::uint32_t bits);

  static EdgeSubset empty(int size) { return EdgeSubset(size, 0); }
  static EdgeSubset full(int size);

  int size() const { return size_; }
  std::uint32_t bits() const { return bits_; }
  int height() const { return std::popcount(bits_); }
  bool contains(int e) const { return (bits_ >> e) & 1u; }
  EdgeSubset with(int e) const { return EdgeSubset(size_, bits_ | (1u << e)); }
  EdgeSubset without(int e) const { return EdgeSubset(size_, bits_ & ~(1u << e)); }

  /// Number of members with index strictly below e.
  int count_before(int e) const { return std::popcount(bits_ & ((1u << e) - 1u)); }

  bool operator==(const EdgeSubset&) const = default;

 private:
  int size_ = 0;
  std::uint32_t bits_ = 0;
};

/// Components and Betti numbers of the spanning subgraph [G:s].
struct SubgraphSummary {
  std::vector<int> component_of;  ///< vertex -> minimal vertex of its component
  int b0 = 0;
  int b1 = 0;

  /// Canonical component ids in ascending order.
  std::vector<int> component_ids() const;
  /// Position of the component containing `vertex` within component_ids().
  int component_position(int vertex) const;
};

enum class EdgeKind { loop, isthmus, ordinary };

std::string to_string(EdgeKind kind);

Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string format_graph(const Graph& g);

EdgeKind classify_edge(const Graph& g, int e);
Graph delete_edge(const Graph& g, int e);
Graph contract_edge(const Graph& g, int e);
SubgraphSummary subgraph_summary(const Graph& g, const EdgeSubset& s);
int component_count(const Graph& g);

/// Shortest cycle length; nullopt stands for infinite girth (forests).
std::optional<int> girth(const Graph& g);

/// Same graph with edge k of the result equal to edge perm[k] of `g`.
Graph permute_edges(const Graph& g, const std::vector<int>& perm);

/// Reorders the edges so that `e` comes last, others keeping their order.
Graph move_edge_last(const Graph& g, int e);

/// A pendant edge joins a degree-one vertex to a different vertex.
bool is_pendant_edge(const Graph& g, int e);
bool is_forest(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);

/// Subgraph selection relative to a parent graph. Vertices and edges are
/// parent indices, sorted ascending; the subgraph inherits the parent order.
struct SubgraphSpec {
  std::vector<int> vertices;
  std::vector<int> edges;

  static SubgraphSpec whole(const Graph& g);
  bool operator==(const SubgraphSpec&) const = default;
};

/// Throws std::invalid_argument unless `spec` names a subgraph of `g`.
Graph induced_subgraph(const Graph& g, const SubgraphSpec& spec);

/// Expresses `inner` (given relative to the subgraph `outer` of g) relative to g.
SubgraphSpec compose_subgraphs(const SubgraphSpec& outer, const SubgraphSpec& inner);

enum class Family { tree_path, cycle, bouquet, complete, theta };

std::optional<Family> family_from_name(std::string_view name);
std::string family_name(Family f);
std::vector<Family> all_families();
/// Smallest and largest admissible size parameter for a family.
std::pair<int, int> family_size_bounds(Family f);
/// Number of edges of the family member of the given size.
int family_edge_count(Family f, int n);
Graph generate_family(Family f, int n);
Graph generate_family(std::string_view name, int n);

}  // namespace tuttecoh

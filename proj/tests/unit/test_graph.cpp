#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "tuttecoh/corpus.hpp"
#include "tuttecoh/graph.hpp"

using namespace tuttecoh;
using namespace testing;

namespace {

// r(s) as the GF(2) rank of the vertex-edge incidence matrix of [G:s];
// independent of union-find. Returns {b0, b1}.
std::pair<int, int> betti_by_incidence_rank(const Graph& g, const EdgeSubset& s) {
  std::vector<std::vector<int>> cols;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!s.contains(e)) continue;
    std::vector<int> col(g.num_vertices(), 0);
    const auto [u, v] = g.edges()[e];
    col[u] ^= 1;
    col[v] ^= 1;
    cols.push_back(col);
  }
  int rank = 0;
  const int n = g.num_vertices();
  for (int r = 0; r < n; ++r) {
    auto pivot = std::find_if(cols.begin() + rank, cols.end(), [&](const auto& c) { return c[r] == 1; });
    if (pivot == cols.end()) continue;
    std::iter_swap(cols.begin() + rank, pivot);
    for (auto it = cols.begin(); it != cols.end(); ++it)
      if (it != cols.begin() + rank && (*it)[r])
        for (int k = 0; k < n; ++k) (*it)[k] ^= cols[rank][k];
    ++rank;
  }
  return {n - rank, s.height() - rank};
}

// Shortest cycle as the smallest nonempty edge set with every degree even.
std::optional<int> girth_by_even_subgraphs(const Graph& g) {
  std::optional<int> best;
  const int m = g.num_edges();
  for (std::uint32_t bits = 1; bits < (1u << m); ++bits) {
    std::vector<int> deg(g.num_vertices(), 0);
    for (int e = 0; e < m; ++e)
      if (bits >> e & 1u) {
        deg[g.edges()[e].u]++;
        deg[g.edges()[e].v]++;
      }
    if (std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; })) {
      const int size = std::popcount(bits);
      if (!best || size < *best) best = size;
    }
  }
  return best;
}

std::vector<int> partition_labels(const SubgraphSummary& s) { return s.component_of; }

}  // namespace

TEST_CASE("parse_graph reads the edge-list format") {
  const Graph loop = parse_graph("vertices 1\nedge 0 0");
  CHECK(loop == l1());
  CHECK(loop.edges().front().is_loop());

  const Graph three = parse_graph("vertices 2\nedge 0 1\nedge 0 1\nedge 1 1");
  CHECK(three == fig1());
  CHECK(three.num_edges() == 3);

  CHECK(parse_graph("# comment\r\nvertices 3\r\n\r\n  edge 0 1  \r\nedge 1 2\r\n") == make(3, {{0, 1}, {1, 2}}));
  CHECK(parse_graph("vertices 0\n") == Graph(0));
}

TEST_CASE("parse_graph errors name the line") {
  const auto line_of = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("vertices 2\nedge 0 5") == 2);
  CHECK_THROWS_WITH_AS(parse_graph("vertices 2\nedge 0 5"), doctest::Contains("out of range"), ParseError);
  CHECK(line_of("edge 0 0\n") == 1);
  CHECK(line_of("# only a comment\n") >= 1);
  CHECK(line_of("vertices 2\nvertices 3\n") == 2);
  CHECK(line_of("vertices 2\nedge 0\n") == 2);
  CHECK(line_of("vertices 2\nedge a b\n") == 2);
  CHECK(line_of("vertices 2\nnode 1\n") == 2);
  CHECK(line_of("vertices -1\n") == 1);

  std::string many = "vertices 1\n";
  for (int k = 0; k < 15; ++k) many += "edge 0 0\n";
  CHECK(line_of(many.c_str()) == 16);
}

TEST_CASE("format_graph round-trips") {
  for (const auto& g : {fig1(), k3(), point(), generate_family(Family::theta, 7)}) CHECK(parse_graph(format_graph(g)) == g);
}

TEST_CASE("Graph validates endpoints and keeps edge order") {
  CHECK_THROWS_AS(make(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
  CHECK(make(3, {{0, 1}, {1, 2}}) != make(3, {{1, 2}, {0, 1}}));
  CHECK(fig1().describe() == "V=2 E=[0-1,0-1,1-1]");
  CHECK(fig1().degree(1) == 4);
}

TEST_CASE("classify_edge") {
  CHECK(classify_edge(l1(), 0) == EdgeKind::loop);
  CHECK(classify_edge(single_edge(), 0) == EdgeKind::isthmus);
  for (int e = 0; e < 3; ++e) CHECK(classify_edge(k3(), e) == EdgeKind::ordinary);
  CHECK(classify_edge(fig1(), 0) == EdgeKind::ordinary);
  CHECK(classify_edge(loop_pendant(), 0) == EdgeKind::isthmus);
  CHECK_THROWS_AS(classify_edge(k3(), 3), std::out_of_range);
  CHECK_THROWS_AS(classify_edge(k3(), -1), std::out_of_range);
  CHECK(to_string(EdgeKind::isthmus) == "isthmus");
}

TEST_CASE("delete_edge") {
  CHECK(delete_edge(fig1(), 0) == loop_pendant());
  CHECK(delete_edge(l1(), 0) == point());
  CHECK(delete_edge(k3(), 0) == make(3, {{0, 2}, {1, 2}}));
  CHECK_THROWS_AS(delete_edge(k3(), 5), std::out_of_range);
}

TEST_CASE("contract_edge") {
  CHECK(contract_edge(p2(), 0) == l1());
  CHECK(contract_edge(fig1(), 0) == l2());
  CHECK(contract_edge(l1(), 0) == delete_edge(l1(), 0));
  // merged vertex takes the smaller index, later vertices shift down
  CHECK(contract_edge(make(4, {{1, 3}, {3, 2}, {0, 3}}), 0) == make(3, {{1, 2}, {0, 1}}));
  CHECK(contract_edge(k3(), 2) == make(2, {{0, 1}, {0, 1}}));
  CHECK_THROWS_AS(contract_edge(k3(), 3), std::out_of_range);
}

TEST_CASE("subgraph_summary examples") {
  const auto full = subgraph_summary(k3(), EdgeSubset::full(3));
  CHECK(full.b0 == 1);
  CHECK(full.b1 == 1);
  CHECK(betti_by_incidence_rank(k3(), EdgeSubset::full(3)) == std::pair{1, 1});

  const auto none = subgraph_summary(fig1(), EdgeSubset::empty(3));
  CHECK(none.b0 == 2);
  CHECK(none.b1 == 0);

  const auto loops = subgraph_summary(l2(), EdgeSubset::full(2));
  CHECK(loops.b0 == 1);
  CHECK(loops.b1 == 2);

  const auto s = subgraph_summary(make(5, {{3, 4}, {1, 3}}), EdgeSubset::full(2));
  CHECK(s.component_of == std::vector<int>{0, 1, 2, 1, 1});
  CHECK(s.component_ids() == std::vector<int>{0, 1, 2});
  CHECK(s.component_position(4) == 1);

  CHECK_THROWS_AS(subgraph_summary(k3(), EdgeSubset::full(2)), std::invalid_argument);
}

TEST_CASE("girth") {
  CHECK(girth(l1()) == 1);
  CHECK(girth(p2()) == 2);
  CHECK(girth(k3()) == 3);
  CHECK(girth(fig1()) == 1);
  CHECK_FALSE(girth(generate_family(Family::tree_path, 4)).has_value());
  CHECK(girth(generate_family(Family::cycle, 6)) == 6);
  CHECK(girth(generate_family(Family::theta, 8)) == 5);
}

TEST_CASE("generate_family") {
  CHECK(generate_family(Family::complete, 3) == k3());
  CHECK(generate_family(Family::cycle, 2) == p2());
  CHECK(generate_family(Family::bouquet, 2) == l2());
  CHECK(generate_family(Family::cycle, 1) == l1());
  CHECK(generate_family(Family::tree_path, 0) == point());
  CHECK(generate_family("tree_path", 2) == make(3, {{0, 1}, {1, 2}}));
  CHECK(generate_family(Family::theta, 3) == make(2, {{0, 1}, {0, 1}, {0, 1}}));

  for (const auto f : all_families()) {
    const auto [lo, hi] = family_size_bounds(f);
    CHECK(family_from_name(family_name(f)) == f);
    for (int n = lo; n <= hi; ++n) {
      const Graph g = generate_family(f, n);
      CHECK(g.num_edges() == family_edge_count(f, n));
      CHECK(g.num_edges() <= 12);
    }
    CHECK_THROWS_AS(generate_family(f, hi + 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_family(f, lo - 1), std::invalid_argument);
  }
  CHECK_THROWS_AS(generate_family("wheel", 3), std::invalid_argument);
  CHECK_FALSE(family_from_name("wheel").has_value());
}

TEST_CASE("permutations, pendant edges, unions and subgraphs") {
  CHECK(permute_edges(k3(), {2, 0, 1}) == make(3, {{1, 2}, {0, 1}, {0, 2}}));
  CHECK_THROWS_AS(permute_edges(k3(), {0, 0, 1}), std::invalid_argument);
  CHECK(move_edge_last(fig1(), 0) == make(2, {{0, 1}, {1, 1}, {0, 1}}));

  CHECK(is_pendant_edge(loop_pendant(), 0));
  CHECK_FALSE(is_pendant_edge(loop_pendant(), 1));
  CHECK(is_pendant_edge(single_edge(), 0));
  CHECK_FALSE(is_pendant_edge(k3(), 0));
  CHECK_FALSE(is_pendant_edge(p2(), 0));

  CHECK(is_forest(generate_family(Family::tree_path, 3)));
  CHECK_FALSE(is_forest(p2()));
  CHECK_FALSE(is_forest(l1()));

  CHECK(disjoint_union(k3(), point()) == make(4, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(disjoint_union(point(), l1()) == make(2, {{1, 1}}));

  const SubgraphSpec k{{0, 1}, {0, 1}};
  CHECK(induced_subgraph(fig1(), k) == p2());
  CHECK(induced_subgraph(fig1(), SubgraphSpec::whole(fig1())) == fig1());
  CHECK(induced_subgraph(make(4, {{1, 3}, {2, 3}}), {{1, 3}, {0}}) == make(2, {{0, 1}}));
  CHECK_THROWS_AS(induced_subgraph(fig1(), {{0}, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(fig1(), {{0, 1}, {3}}), std::out_of_range);
  const SubgraphSpec l{{0, 1}, {1}};
  CHECK(compose_subgraphs(k, l) == SubgraphSpec{{0, 1}, {1}});
}

TEST_CASE("EdgeSubset") {
  const EdgeSubset s(5, 0b10110);
  CHECK(s.height() == 3);
  CHECK(s.contains(1));
  CHECK_FALSE(s.contains(0));
  CHECK(s.count_before(4) == 2);
  CHECK(s.with(0).bits() == 0b10111);
  CHECK(s.without(4).bits() == 0b00110);
  CHECK(EdgeSubset::full(3).bits() == 0b111);
  CHECK_THROWS_AS(EdgeSubset(3, 0b1000), std::invalid_argument);
  CHECK_THROWS_AS(EdgeSubset(15, 0), std::invalid_argument);
}

TEST_CASE("summary properties over all small multigraphs") {
  for (const auto& g : enumerate_multigraphs(4, 5)) {
    const int m = g.num_edges();
    const int b0_all = subgraph_summary(g, EdgeSubset::full(m)).b0;
    for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
      const EdgeSubset s(m, bits);
      const auto sum = subgraph_summary(g, s);
      REQUIRE(std::pair{sum.b0, sum.b1} == betti_by_incidence_rank(g, s));
      CHECK(sum.b1 >= 0);
      CHECK(sum.b0 + sum.b1 >= b0_all);
      for (int v = 0; v < g.num_vertices(); ++v) CHECK(sum.component_of[v] <= v);

      for (int e = 0; e < m; ++e) {
        if (s.contains(e)) continue;
        // adding an edge either merges two components or closes a cycle
        const auto bigger = subgraph_summary(g, s.with(e));
        const bool merge = bigger.b0 == sum.b0 - 1 && bigger.b1 == sum.b1;
        const bool cycle = bigger.b0 == sum.b0 && bigger.b1 == sum.b1 + 1;
        CHECK(merge != cycle);
        // deleting an unused edge leaves the partition alone
        const Graph minus = delete_edge(g, e);
        std::uint32_t low = bits & ((1u << e) - 1u), high = bits >> (e + 1);
        CHECK(partition_labels(subgraph_summary(minus, EdgeSubset(m - 1, low | (high << e)))) == partition_labels(sum));
      }
    }
    CHECK(girth(g) == girth_by_even_subgraphs(g));
    for (int e = 0; e < m; ++e)
      if (g.edges()[e].is_loop()) CHECK(contract_edge(g, e) == delete_edge(g, e));
  }
}

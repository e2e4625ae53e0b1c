#pragma once

#include <string>
#include <vector>

#include "tuttecoh/bipoly.hpp"
#include "tuttecoh/graph.hpp"
#include "tuttecoh/homology.hpp"

namespace testing {

using tuttecoh::BiPoly;
using tuttecoh::Graph;

inline Graph make(int n, std::vector<std::pair<int, int>> edges) {
  std::vector<tuttecoh::Edge> out;
  for (auto [u, v] : edges) out.push_back({u, v});
  return Graph(n, std::move(out));
}

inline Graph l1() { return make(1, {{0, 0}}); }
inline Graph l2() { return make(1, {{0, 0}, {0, 0}}); }
inline Graph p2() { return make(2, {{0, 1}, {0, 1}}); }
inline Graph k3() { return make(3, {{0, 1}, {0, 2}, {1, 2}}); }
inline Graph point() { return make(1, {}); }
inline Graph single_edge() { return make(2, {{0, 1}}); }
/// Two parallel edges and a loop.
inline Graph fig1() { return make(2, {{0, 1}, {0, 1}, {1, 1}}); }
/// An edge with a loop at its far end.
inline Graph loop_pendant() { return make(2, {{0, 1}, {1, 1}}); }

inline BiPoly X() { return BiPoly::x(); }
inline BiPoly Y() { return BiPoly::y(); }

/// Homology from a list of (i, p, q, free, torsion).
struct Row {
  int i, p, q, free;
  std::vector<long long> torsion = {};
};

inline tuttecoh::BigradedHomology expect_homology(const std::vector<Row>& rows) {
  tuttecoh::BigradedHomology::Entries out;
  for (const auto& r : rows) {
    tuttecoh::HomologyGroup g{r.free, {}};
    for (auto t : r.torsion) g.torsion.push_back(t);
    out.emplace(tuttecoh::HomologyKey{r.i, {r.p, r.q}}, g);
  }
  return tuttecoh::BigradedHomology(std::move(out));
}

}  // namespace testing

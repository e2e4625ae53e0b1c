#include <doctest.h>

#include "helpers.hpp"
#include "tuttecoh/chain_map.hpp"
#include "tuttecoh/corpus.hpp"
#include "tuttecoh/homology.hpp"
#include "tuttecoh/tutte.hpp"

using namespace tuttecoh;
using namespace testing;

namespace {

BigradedHomology h(const Graph& g, const CoefficientSystem& sys = default_system()) {
  return homology(build_complex(g, sys));
}

}  // namespace

TEST_CASE("small graphs") {
  CHECK(h(point()) == expect_homology({{0, 0, 0, 1}, {0, 1, 0, 1}}));
  CHECK(h(l1()) == expect_homology({{1, 0, 1, 1}, {1, 1, 1, 1}}));
  CHECK(h(p2()) == expect_homology({{0, 1, 0, 1}, {0, 2, 0, 1}, {2, 0, 1, 1}, {2, 1, 1, 1}}));
  CHECK(h(l2()) == expect_homology({{1, 0, 1, 1}, {1, 1, 1, 1}, {2, 0, 1, 1}, {2, 1, 1, 1}, {2, 0, 2, 1}, {2, 1, 2, 1}}));
  CHECK(h(loop_pendant()) == expect_homology({{1, 1, 1, 1}, {1, 2, 1, 1}}));
  CHECK(h(fig1()) == expect_homology({{1, 1, 1, 1},
                                      {1, 2, 1, 1},
                                      {2, 0, 1, 1},
                                      {2, 1, 1, 1},
                                      {3, 0, 1, 1},
                                      {3, 1, 1, 1},
                                      {3, 0, 2, 1},
                                      {3, 1, 2, 1}}));
  CHECK(h(k3()) == expect_homology({{0, 3, 0, 1}, {1, 1, 0, 1}, {1, 2, 0, 0, {2}}, {3, 0, 1, 1}, {3, 1, 1, 1}}));
  CHECK(h(single_edge()) == expect_homology({{0, 1, 0, 1}, {0, 2, 0, 1}}));
}

TEST_CASE("other coefficient systems") {
  // B = Z: a loop kills everything
  CHECK(h(l1(), chromatic_system()) == BigradedHomology{});
  CHECK(h(k3(), chromatic_system()).truncated(1) == h(k3()).truncated(1));
  // b0 = 0: no differential out of a loop state
  CHECK(h(l1(), zero_b0_system()) ==
        expect_homology({{0, 0, 0, 1}, {0, 1, 0, 1}, {1, 0, 0, 1}, {1, 1, 0, 1}, {1, 0, 1, 1}, {1, 1, 1, 1}}));
}

TEST_CASE("Euler characteristic of homology") {
  CHECK(graded_euler(h(l1())) == -Y() - X() * Y());
  CHECK(graded_euler(h(fig1())) == -Y() * (1 + X()) * (X() + Y()));
  for (const auto& g : enumerate_multigraphs(4, 5)) {
    CAPTURE(g.describe());
    const auto c = build_complex(g, default_system());
    CHECK(graded_euler(homology(c)) == graded_euler(c));
    CHECK(graded_euler(homology(c)) == tutte_hat(g));
  }
}

TEST_CASE("parallel and serial homology agree") {
  for (const auto& g : {k3(), fig1(), generate_family(Family::complete, 4)}) {
    const auto c = build_complex(g, default_system());
    CHECK(homology(c, 1) == homology(c, 4));
  }
}

TEST_CASE("homology_with_ranks") {
  const auto c = build_complex(p2(), default_system());
  const auto r = homology_with_ranks(c);
  CHECK(r.groups == homology(c));
  // d^0 at (0,0): 1 (x) 1 -> (1, 1)
  CHECK(r.ranks.at(HomologyKey{0, {0, 0}}) == 1);
  CHECK(r.ranks.at(HomologyKey{1, {0, 0}}) == 1);
  CHECK_FALSE(r.ranks.contains(HomologyKey{0, {2, 0}}));
}

TEST_CASE("rational ranks of chain maps") {
  for (const auto& g : {k3(), fig1(), l2()}) {
    const auto c = build_complex(g, default_system());
    const auto groups = homology(c);
    const auto ranks = rational_ranks_of_map(identity_map(c), c, c);
    for (const auto& [key, group] : groups.entries()) CHECK(induced_rank(ranks, key.i, key.degree) == group.free_rank);
    int total = 0;
    for (const auto& [key, r] : ranks) total += r;
    int free = 0;
    for (const auto& [key, group] : groups.entries()) free += group.free_rank;
    CHECK(total == free);
  }
}

TEST_CASE("connecting map for the Figure 1 graph") {
  // e is one of the parallel edges: G - e is the loop with a pendant edge,
  // G / e is two loops; the connecting map vanishes on homology.
  const auto dc = build_deletion_contraction(fig1(), 0, default_system());
  CHECK(homology(dc.deleted) == h(loop_pendant()));
  CHECK(homology(dc.contracted) == h(l2()));
  const auto ranks = rational_ranks_of_map(dc.gamma, dc.deleted, dc.contracted);
  CHECK(ranks.empty());
}

TEST_CASE("connecting map for K3") {
  for (int e = 0; e < 3; ++e) {
    const auto dc = build_deletion_contraction(k3(), e, default_system());
    const auto ranks = rational_ranks_of_map(dc.gamma, dc.deleted, dc.contracted);
    CHECK(ranks.size() == 1);
    CHECK(induced_rank(ranks, 0, {2, 0}) == 1);
    CHECK(induced_rank(ranks, 0, {3, 0}) == 0);
  }
}

TEST_CASE("rational_ranks_of_map rejects non chain maps") {
  const auto c = build_complex(p2(), default_system());
  ChainMapData bogus;
  bogus.blocks.emplace(std::pair{0, Bidegree{0, 0}}, SparseIntMatrix::identity(1));
  CHECK_THROWS_AS(rational_ranks_of_map(bogus, c, c), std::invalid_argument);
}

TEST_CASE("shift, truncate and JSON") {
  const auto k = h(k3());
  CHECK(k.at(1, {2, 0}).torsion == std::vector<Integer>{2});
  CHECK(k.at(2, {0, 0}).is_zero());
  CHECK(k.degree(3).size() == 2);
  CHECK(k.shifted(1, 0).at(0, {4, 0}).free_rank == 1);
  CHECK(k.truncated(1) == expect_homology({{0, 3, 0, 1}}));
  CHECK(BigradedHomology::from_json(k.to_json()) == k);
  CHECK(k.to_json()["homology"][2].dump() == R"({"free":0,"i":1,"p":2,"q":0,"torsion":[2]})");
}

TEST_CASE("summary and table") {
  CHECK(h(k3()).summary() == "H^0 = Z{(3,0)}\nH^1 = Z{(1,0)} + Z_2{(2,0)}\nH^3 = Z{(0,1)} + Z{(1,1)}\n");
  CHECK(BigradedHomology{}.summary() == "H^* = 0\n");
  CHECK(expect_homology({{0, 1, 0, 2}}).summary() == "H^0 = 2Z{(1,0)}\n");
  CHECK(h(l1()).table() == "  i   p   q  free  torsion\n  1   0   1     1  []\n  1   1   1     1  []\n");
}

#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "tuttecoh/corpus.hpp"
#include "tuttecoh/tutte.hpp"

using namespace tuttecoh;
using namespace testing;

namespace {

using Edges = std::vector<std::pair<int, int>>;

int components(int n, const Edges& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };
  int count = n;
  for (auto [u, v] : edges) {
    const int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --count;
    }
  }
  return count;
}

// Deletion-contraction straight from the axioms, expanding the last edge.
BiPoly hand_tutte(int n, Edges edges) {
  if (edges.empty()) return 1;
  const auto [u, v] = edges.back();
  edges.pop_back();
  if (u == v) return Y() * hand_tutte(n, edges);
  Edges contracted;
  for (auto [a, b] : edges) {
    const auto relabel = [&](int w) { return w == v ? u : w; };
    contracted.push_back({relabel(a), relabel(b)});
  }
  const bool isthmus = components(n, edges) > components(n, [&] {
                         auto with = edges;
                         with.push_back({u, v});
                         return with;
                       }());
  if (isthmus) return X() * hand_tutte(n, contracted);
  return hand_tutte(n, edges) + hand_tutte(n, contracted);
}

BiPoly hand_tutte(const Graph& g) {
  Edges edges;
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return hand_tutte(g.num_vertices(), edges);
}

}  // namespace

TEST_CASE("BiPoly arithmetic") {
  CHECK((1 + X()) * X() == X() + X() * X());
  CHECK(((1 + X()) * X()).to_string() == "x + x^2");
  CHECK(BiPoly().to_string() == "0");
  CHECK(BiPoly(0).is_zero());
  CHECK((X() - X()).is_zero());
  CHECK((-(Y() + X() * Y())).to_string() == "-y - x*y");
  CHECK((2 * X().pow(2) * Y() - 3).to_string() == "-3 + 2*x^2*y");
  CHECK((1 + X()).pow(3) == 1 + 3 * X() + 3 * X() * X() + X().pow(3));
  CHECK(BiPoly(7).pow(0) == 1);
  CHECK((1 + X()).coefficient(1, 0) == 1);
  CHECK((1 + X()).coefficient(5, 5) == 0);

  BiPoly big = BiPoly::monomial(Integer("123456789012345678901234567890"), 1, 2);
  CHECK((big * big).coefficient(2, 4) == Integer("15241578753238836750495351562536198787501905199875019052100"));
  CHECK_THROWS_AS(BiPoly::monomial(1, -1, 0), std::invalid_argument);
}

TEST_CASE("negate_vars, exact_divide and substitute") {
  const BiPoly l1_hat = -Y() - X() * Y();
  CHECK(negate_vars(l1_hat) == Y() - X() * Y());
  CHECK(exact_divide(Y() - X() * Y(), 1 - X()) == Y());
  CHECK(exact_divide((1 + X()).pow(4) * (Y() - 2), (1 + X()).pow(2)) == (1 + X()).pow(2) * (Y() - 2));
  CHECK(exact_divide(BiPoly(), 1 + Y()).is_zero());
  CHECK_THROWS_AS(exact_divide(X() + 1, X()), NotDivisibleError);
  CHECK_THROWS_AS(exact_divide(X(), BiPoly()), NotDivisibleError);
  CHECK(substitute(X() * Y() + Y(), 1 + X(), BiPoly(0)) == BiPoly(0));
  CHECK(substitute(X() * X(), Y() - 1, X()) == Y() * Y() - 2 * Y() + 1);
}

TEST_CASE("BiPoly JSON") {
  const BiPoly p = X() * X() - 3 * Y() + 5;
  const auto j = p.to_json();
  CHECK(j.dump() == R"([{"c":5,"i":0,"j":0},{"c":-3,"i":0,"j":1},{"c":1,"i":2,"j":0}])");
  CHECK(BiPoly::from_json(j) == p);
  const BiPoly huge = BiPoly::monomial(Integer("99999999999999999999999"), 0, 0);
  CHECK(BiPoly::from_json(huge.to_json()) == huge);
}

TEST_CASE("tutte_deletion_contraction") {
  CHECK(tutte_deletion_contraction(make(3, {})) == 1);
  CHECK(tutte_deletion_contraction(l1()) == Y());
  CHECK(tutte_deletion_contraction(k3()) == X() * X() + X() + Y());
  CHECK(hand_tutte(k3()) == X() * X() + X() + Y());
}

TEST_CASE("tutte_state_sum") {
  CHECK(tutte_state_sum(k3()) == X() * X() + X() + Y());
  CHECK(tutte_state_sum(p2()) == X() + Y());
  CHECK(tutte_state_sum(single_edge()) == X());
}

TEST_CASE("tutte_hat") {
  CHECK(tutte_hat(l1()) == -Y() - X() * Y());
  CHECK(tutte_hat(p2()) == X() * X() + X() + Y() + X() * Y());
  CHECK(tutte_hat(k3()) == X().pow(3) - X() - X() * Y() - Y());
  CHECK(tutte_hat(point()) == 1 + X());
}

TEST_CASE("recover_tutte") {
  CHECK(recover_tutte(tutte_hat(l1())) == Y());
  CHECK(recover_tutte(tutte_hat(k3())) == X() * X() + X() + Y());
  CHECK(recover_tutte(tutte_hat(single_edge())) == X());
  CHECK(recover_tutte(tutte_hat(make(3, {}))) == 1);
  CHECK_THROWS_WITH_AS(recover_tutte(BiPoly(2)), doctest::Contains("not a T-hat polynomial"), std::invalid_argument);
  CHECK_THROWS_AS(recover_tutte(BiPoly()), std::invalid_argument);
  CHECK_THROWS_AS(recover_tutte(2 * (1 + X())), std::invalid_argument);
}

TEST_CASE("dc_identities_hat examples") {
  for (int e = 0; e < 3; ++e) {
    const auto report = dc_identities_hat(k3(), e);
    CHECK(report.kind == EdgeKind::ordinary);
    CHECK(report.all_hold());
  }
  const auto loop = dc_identities_hat(l1(), 0);
  CHECK(loop.kind == EdgeKind::loop);
  CHECK(loop.all_hold());
  CHECK(-Y() * tutte_hat(point()) == -Y() - X() * Y());

  const auto bridge = dc_identities_hat(single_edge(), 0);
  CHECK(bridge.kind == EdgeKind::isthmus);
  CHECK(bridge.all_hold());
  CHECK(tutte_hat(delete_edge(single_edge(), 0)) == (1 + X()) * tutte_hat(point()));
}

TEST_CASE("chromatic_state_sum") {
  const BiPoly lambda = 1 + X();
  CHECK(chromatic_state_sum(k3()) == lambda * (lambda - 1) * (lambda - 2));
  CHECK(chromatic_state_sum(k3()) == X().pow(3) - X());
  CHECK(chromatic_state_sum(point()) == 1 + X());
  CHECK(chromatic_state_sum(single_edge()) == X() + X() * X());
  CHECK(chromatic_state_sum(l1()).is_zero());
}

TEST_CASE("Tutte identities over the corpus") {
  auto graphs = builtin_corpus();
  for (auto& g : enumerate_multigraphs(4, 5)) graphs.push_back({"enum", std::move(g)});
  for (const auto& [name, g] : graphs) {
    CAPTURE(name);
    const BiPoly t = tutte_deletion_contraction(g);
    CHECK(t == hand_tutte(g));
    CHECK(tutte_state_sum(g) == t);
    CHECK(recover_tutte(tutte_hat(g)) == t);
    CHECK(substitute(tutte_hat(g), X(), BiPoly(0)) == chromatic_state_sum(g));
    CHECK(signed_betti_state_sum(g, 1 + X(), 1 + Y()) == tutte_hat(g));
    for (int e = 0; e < g.num_edges(); ++e) {
      const auto report = dc_identities_hat(g, e);
      CHECK(report.kind == classify_edge(g, e));
      CHECK(report.all_hold());
    }
  }
}

#include "tuttecoh/tutte.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace tuttecoh {

namespace {

BiPoly tutte_rec(const Graph& g) {
  if (g.num_edges() == 0) return 1;
  const int e = 0;
  switch (classify_edge(g, e)) {
    case EdgeKind::loop: return BiPoly::y() * tutte_rec(contract_edge(g, e));
    case EdgeKind::isthmus: return BiPoly::x() * tutte_rec(delete_edge(g, e));
    case EdgeKind::ordinary: return tutte_rec(delete_edge(g, e)) + tutte_rec(contract_edge(g, e));
  }
  return {};
}

// Multiplicity of each (|s| parity, b0, b1) over all subsets.
std::map<std::tuple<int, int, int>, long long> state_histogram(const Graph& g) {
  if (g.num_edges() > kMaxEdgesHardCap) throw std::invalid_argument("too many edges for a state sum");
  std::map<std::tuple<int, int, int>, long long> hist;
  const std::uint32_t count = 1u << g.num_edges();
  for (std::uint32_t bits = 0; bits < count; ++bits) {
    const EdgeSubset s(g.num_edges(), bits);
    const auto summary = subgraph_summary(g, s);
    ++hist[{s.height() % 2, summary.b0, summary.b1}];
  }
  return hist;
}

}  // namespace

BiPoly tutte_deletion_contraction(const Graph& g) { return tutte_rec(g); }

BiPoly tutte_state_sum(const Graph& g) {
  // (x-1)^(r(E)-r(s)) (y-1)^(|s|-r(s)) with r(s) = |V| - b0(s).
  const int b0_full = component_count(g);
  const BiPoly xm1 = BiPoly::x() - 1;
  const BiPoly ym1 = BiPoly::y() - 1;
  BiPoly total;
  const std::uint32_t count = 1u << g.num_edges();
  std::map<std::pair<int, int>, long long> hist;
  for (std::uint32_t bits = 0; bits < count; ++bits) {
    const EdgeSubset s(g.num_edges(), bits);
    const auto summary = subgraph_summary(g, s);
    const int rank_s = g.num_vertices() - summary.b0;
    ++hist[{summary.b0 - b0_full, s.height() - rank_s}];
  }
  for (const auto& [exps, mult] : hist)
    total += BiPoly(mult) * xm1.pow(exps.first) * ym1.pow(exps.second);
  return total;
}

BiPoly signed_betti_state_sum(const Graph& g, const BiPoly& u, const BiPoly& v) {
  BiPoly total;
  for (const auto& [key, mult] : state_histogram(g)) {
    const auto& [parity, b0, b1] = key;
    total += BiPoly(parity ? -mult : mult) * u.pow(b0) * v.pow(b1);
  }
  return total;
}

BiPoly tutte_hat(const Graph& g) { return signed_betti_state_sum(g, 1 + BiPoly::x(), 1 + BiPoly::y()); }

BiPoly chromatic_state_sum(const Graph& g) { return signed_betti_state_sum(g, 1 + BiPoly::x(), 1); }

BiPoly recover_tutte(const BiPoly& that) {
  if (that.is_zero()) throw std::invalid_argument("not a T-hat polynomial: zero");
  // u = 1 + x, v = 1 + y; the BiPoly variables now stand for (u, v).
  const BiPoly tilde = substitute(that, BiPoly::x() - 1, BiPoly::y() - 1);

  // Complexity of u^i v^j is (-i, j) in dictionary order.
  auto less_complex = [](const BiPoly::Exponents& a, const BiPoly::Exponents& b) {
    return std::make_pair(-a.first, a.second) < std::make_pair(-b.first, b.second);
  };
  auto lo = tilde.terms().begin();
  auto hi = tilde.terms().begin();
  for (auto it = tilde.terms().begin(); it != tilde.terms().end(); ++it) {
    if (less_complex(it->first, lo->first)) lo = it;
    if (less_complex(hi->first, it->first)) hi = it;
  }
  const int num_vertices = lo->first.first;
  const int b0_full = hi->first.first;
  const int b1_full = hi->first.second;
  if (lo->second != 1 || lo->first.second != 0)
    throw std::invalid_argument("not a T-hat polynomial: minimal term is not u^|V|");
  const int num_edges = num_vertices - b0_full + b1_full;
  if (hi->second != (num_edges % 2 ? -1 : 1))
    throw std::invalid_argument("not a T-hat polynomial: maximal term has coefficient " + to_string(hi->second));
  if (b0_full > num_vertices || (num_vertices > 0 && b0_full == 0))
    throw std::invalid_argument("not a T-hat polynomial: inconsistent component count");

  const int rank_full = num_vertices - b0_full;
  BiPoly quotient;
  try {
    quotient = exact_divide(negate_vars(that), (1 - BiPoly::x()).pow(b0_full));
  } catch (const NotDivisibleError& err) {
    throw std::invalid_argument(std::string("not a T-hat polynomial: ") + err.what());
  }
  return rank_full % 2 ? -quotient : quotient;
}

bool DeletionContractionReport::all_hold() const {
  return std::all_of(identities.begin(), identities.end(), [](const IdentityCheck& c) { return c.holds; });
}

DeletionContractionReport dc_identities_hat(const Graph& g, int e) {
  DeletionContractionReport report;
  report.kind = classify_edge(g, e);
  const BiPoly whole = tutte_hat(g);
  const BiPoly deleted = tutte_hat(delete_edge(g, e));
  const BiPoly contracted = tutte_hat(contract_edge(g, e));
  auto add = [&](std::string name, BiPoly lhs, BiPoly rhs) {
    const bool holds = lhs == rhs;
    report.identities.push_back({std::move(name), holds, std::move(lhs), std::move(rhs)});
  };
  if (report.kind == EdgeKind::loop) {
    add("T^(G) = T^(G-e) - (1+y) T^(G/e)", whole, deleted - (1 + BiPoly::y()) * contracted);
    add("T^(G) = -y T^(G/e)", whole, -(BiPoly::y() * contracted));
  } else {
    add("T^(G) = T^(G-e) - T^(G/e)", whole, deleted - contracted);
    if (report.kind == EdgeKind::isthmus) {
      add("T^(G) = x T^(G/e)", whole, BiPoly::x() * contracted);
      add("T^(G-e) = (1+x) T^(G/e)", deleted, (1 + BiPoly::x()) * contracted);
    }
  }
  return report;
}

}  // namespace tuttecoh

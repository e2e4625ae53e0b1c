#include "tuttecoh/chain_map.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tuttecoh {

namespace {

std::uint32_t remove_bit(std::uint32_t bits, int e) {
  const std::uint32_t low = bits & ((1u << e) - 1u);
  const std::uint32_t high = bits >> (e + 1);
  return low | (high << e);
}

std::string block_name(int i, Bidegree d) {
  return "height " + std::to_string(i) + ", bidegree (" + std::to_string(d.p) + "," + std::to_string(d.q) + ")";
}

std::vector<Bidegree> union_bidegrees(const ChainComplex& a, const ChainComplex& b) {
  auto out = a.all_bidegrees();
  const auto more = b.all_bidegrees();
  out.insert(out.end(), more.begin(), more.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

SparseIntMatrix ChainMapData::block(const ChainComplex& source, const ChainComplex& target, int i, Bidegree d) const {
  const auto it = blocks.find({i, d});
  if (it != blocks.end()) return it->second;
  return SparseIntMatrix(target.block_dim(i + shift, d), source.block_dim(i, d));
}

ChainMapData assemble_chain_map(const ChainComplex& source, const ChainComplex& target, int shift,
                                const std::function<ElementImage(const ChainBasisElement&)>& image) {
  ChainMapData f;
  f.shift = shift;
  for (int i = 0; i <= source.max_height(); ++i) {
    std::map<Bidegree, std::vector<MatrixEntry>> triplets;
    const auto& group = source.group(i);
    for (std::size_t g = 0; g < group.size(); ++g) {
      const Bidegree d = source.bidegree_of(i, static_cast<int>(g));
      auto& entries = triplets[d];
      for (const auto& [y, coeff] : image(group[g])) {
        if (y.state.height() != i + shift) throw std::logic_error("chain map image at the wrong height");
        const auto t = target.find(y);
        if (!t) throw std::logic_error("chain map image is not a basis element of the target");
        if (target.bidegree_of(i + shift, *t) != d) throw std::logic_error("chain map does not preserve bidegree");
        entries.push_back({target.block_position(i + shift, *t), source.block_position(i, static_cast<int>(g)), coeff});
      }
    }
    for (auto& [d, entries] : triplets)
      f.blocks.emplace(std::make_pair(i, d),
                       SparseIntMatrix::from_entries(target.block_dim(i + shift, d), source.block_dim(i, d), std::move(entries)));
  }
  return f;
}

std::optional<std::string> chain_map_defect(const ChainMapData& f, const ChainComplex& source,
                                            const ChainComplex& target) {
  for (int i = 0; i <= source.max_height(); ++i)
    for (const auto d : union_bidegrees(source, target)) {
      if (source.block_dim(i, d) == 0) continue;
      const auto lhs = f.block(source, target, i + 1, d) * source.differential(i, d);
      const auto rhs = target.differential(i + f.shift, d) * f.block(source, target, i, d);
      if (!(lhs == rhs)) return "map does not commute with d at source " + block_name(i, d);
    }
  return std::nullopt;
}

ChainMapData compose(const ChainMapData& g, const ChainMapData& f, const ChainComplex& a, const ChainComplex& b,
                     const ChainComplex& c) {
  ChainMapData out;
  out.shift = f.shift + g.shift;
  for (const auto& [key, block] : f.blocks) {
    const auto& [i, d] = key;
    out.blocks.emplace(key, g.block(b, c, i + f.shift, d) * block);
  }
  (void)a;
  return out;
}

ChainMapData difference(const ChainMapData& f, const ChainMapData& g, const ChainComplex& source,
                        const ChainComplex& target) {
  if (f.shift != g.shift) throw std::invalid_argument("difference of maps with different shifts");
  ChainMapData out;
  out.shift = f.shift;
  std::set<std::pair<int, Bidegree>> keys;
  for (const auto& [key, block] : f.blocks) keys.insert(key);
  for (const auto& [key, block] : g.blocks) keys.insert(key);
  for (const auto& [i, d] : keys)
    out.blocks.emplace(std::make_pair(i, d), f.block(source, target, i, d) - g.block(source, target, i, d));
  return out;
}

bool same_map(const ChainMapData& f, const ChainMapData& g, const ChainComplex& source, const ChainComplex& target) {
  const auto diff = difference(f, g, source, target);
  return std::all_of(diff.blocks.begin(), diff.blocks.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

ChainMapData identity_map(const ChainComplex& c) {
  return assemble_chain_map(c, c, 0, [](const ChainBasisElement& x) { return ElementImage{{x, 1}}; });
}

ChainMapData beta_restriction(const ChainComplex& whole, const ChainComplex& deleted, int e) {
  const int n = whole.graph().num_edges();
  if (e < 0 || e >= n) throw std::out_of_range("edge index out of range");
  if (deleted.graph() != delete_edge(whole.graph(), e)) throw std::invalid_argument("target is not C(G - e)");
  return assemble_chain_map(whole, deleted, 0, [&](const ChainBasisElement& x) {
    if (x.state.contains(e)) return ElementImage{};
    ChainBasisElement y{EdgeSubset(n - 1, remove_bit(x.state.bits(), e)), x.a_labels, x.b_labels};
    return ElementImage{{std::move(y), 1}};
  });
}

namespace {

ChainMapData alpha_last_edge(const ChainComplex& source, const ChainComplex& whole) {
  const int n = whole.graph().num_edges();
  return assemble_chain_map(source, whole, 1, [&](const ChainBasisElement& x) {
    ChainBasisElement y{EdgeSubset(n, x.state.bits() | (1u << (n - 1))), x.a_labels, x.b_labels};
    return ElementImage{{std::move(y), 1}};
  });
}

}  // namespace

ChainMapData alpha_nonloop(const ChainComplex& contracted, const ChainComplex& whole) {
  const auto& g = whole.graph();
  if (g.num_edges() == 0) throw std::invalid_argument("alpha needs at least one edge");
  if (g.edges().back().is_loop()) throw std::invalid_argument("alpha_nonloop called on a loop");
  if (contracted.has_extra_b_factor() || contracted.graph() != contract_edge(g, g.num_edges() - 1))
    throw std::invalid_argument("source is not C(G/e)");
  return alpha_last_edge(contracted, whole);
}

ChainMapData alpha_loop(const ChainComplex& tensor, const ChainComplex& whole) {
  const auto& g = whole.graph();
  if (g.num_edges() == 0 || !g.edges().back().is_loop()) throw std::invalid_argument("alpha_loop needs a loop as last edge");
  if (!tensor.has_extra_b_factor() || tensor.graph() != delete_edge(g, g.num_edges() - 1))
    throw std::invalid_argument("source is not C(G/e) (x) B");
  return alpha_last_edge(tensor, whole);
}

ChainMapData connecting_map(const ChainComplex& deleted, const ChainComplex& whole, const ChainComplex& contracted) {
  const int n = whole.graph().num_edges();
  if (n == 0) throw std::invalid_argument("connecting map needs at least one edge");
  const int e = n - 1;
  return assemble_chain_map(deleted, contracted, 0, [&](const ChainBasisElement& x) {
    const ChainBasisElement lifted{EdgeSubset(n, x.state.bits()), x.a_labels, x.b_labels};
    ElementImage out;
    for (auto& [y, coeff] : whole.per_edge_image(lifted, e)) {
      ChainBasisElement z{EdgeSubset(n - 1, y.state.bits() & ~(1u << e)), std::move(y.a_labels), std::move(y.b_labels)};
      out.emplace_back(std::move(z), coeff);
    }
    return out;
  });
}

DeletionContractionData build_deletion_contraction(const Graph& g, int e, const CoefficientSystem& sys, int max_edges) {
  Graph reordered = move_edge_last(g, e);
  const int last = reordered.num_edges() - 1;
  const bool loop = reordered.edges().back().is_loop();
  ChainComplex whole = build_complex(reordered, sys, max_edges);
  ChainComplex deleted = build_complex(delete_edge(reordered, last), sys, max_edges);
  ChainComplex contracted = loop ? build_loop_tensor_complex(delete_edge(reordered, last), sys, max_edges)
                                 : build_complex(contract_edge(reordered, last), sys, max_edges);
  ChainMapData alpha = loop ? alpha_loop(contracted, whole) : alpha_nonloop(contracted, whole);
  ChainMapData beta = beta_restriction(whole, deleted, last);
  ChainMapData gamma = connecting_map(deleted, whole, contracted);
  return {std::move(reordered), e,       loop,           std::move(whole), std::move(deleted), std::move(contracted),
          std::move(alpha),     std::move(beta), std::move(gamma)};
}

ChainMapData functorial_beta(const ChainComplex& whole, const ChainComplex& sub, const SubgraphSpec& spec) {
  const Graph& g = whole.graph();
  if (sub.graph() != induced_subgraph(g, spec)) throw std::invalid_argument("target complex is not built on the subgraph");
  const auto unit = unit_basis_index(whole.system().A);
  if (!unit) throw std::invalid_argument("functorial map needs the unit of A to be a basis element");

  std::vector<int> edge_pos(g.num_edges(), -1);
  for (std::size_t k = 0; k < spec.edges.size(); ++k) edge_pos[spec.edges[k]] = static_cast<int>(k);
  std::vector<bool> in_sub(g.num_vertices(), false);
  for (const int v : spec.vertices) in_sub[v] = true;
  const int m = static_cast<int>(spec.edges.size());

  return assemble_chain_map(whole, sub, 0, [&](const ChainBasisElement& x) {
    std::uint32_t bits = 0;
    for (int k = 0; k < g.num_edges(); ++k) {
      if (!x.state.contains(k)) continue;
      if (edge_pos[k] < 0) return ElementImage{};
      bits |= 1u << edge_pos[k];
    }
    const auto& ids = whole.state_info(x.state).component_ids;
    ChainBasisElement y{EdgeSubset(m, bits), {}, x.b_labels};
    for (std::size_t c = 0; c < ids.size(); ++c) {
      if (in_sub[ids[c]]) {
        y.a_labels.push_back(x.a_labels[c]);
      } else if (x.a_labels[c] != *unit) {
        return ElementImage{};
      }
    }
    return ElementImage{{std::move(y), 1}};
  });
}

}  // namespace tuttecoh

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "tuttecoh/cube_complex.hpp"

namespace tuttecoh {

/// Degree-preserving map between two chain complexes, raising the height by
/// `shift`. Blocks are keyed by (source height, bidegree); each block maps
/// the source block's basis (columns) to the target block's basis (rows).
/// Absent blocks are zero.
struct ChainMapData {
  int shift = 0;
  std::map<std::pair<int, Bidegree>, SparseIntMatrix> blocks;

  SparseIntMatrix block(const ChainComplex& source, const ChainComplex& target, int i, Bidegree d) const;
};

/// Builds a chain map from its action on basis elements. The image of each
/// source element must lie in the target at height + shift and the same
/// bidegree; otherwise std::logic_error.
ChainMapData assemble_chain_map(const ChainComplex& source, const ChainComplex& target, int shift,
                                const std::function<ElementImage(const ChainBasisElement&)>& image);

/// Empty when f commutes with both differentials, else a description of the
/// first failing block.
std::optional<std::string> chain_map_defect(const ChainMapData& f, const ChainComplex& source,
                                            const ChainComplex& target);

/// g after f, for f: a -> b and g: b -> c.
ChainMapData compose(const ChainMapData& g, const ChainMapData& f, const ChainComplex& a, const ChainComplex& b,
                     const ChainComplex& c);

/// f - g for maps with the same source, target and shift.
ChainMapData difference(const ChainMapData& f, const ChainMapData& g, const ChainComplex& source,
                        const ChainComplex& target);

bool same_map(const ChainMapData& f, const ChainMapData& g, const ChainComplex& source, const ChainComplex& target);

ChainMapData identity_map(const ChainComplex& c);

/// Projection C(G) -> C(G - e): kills states containing e and identifies
/// the rest.
ChainMapData beta_restriction(const ChainComplex& whole, const ChainComplex& deleted, int e);

/// Inclusion C^{i-1}(G/e) -> C^i(G), s -> s + e, for a non-loop e that is
/// the last edge of `whole`'s graph.
ChainMapData alpha_nonloop(const ChainComplex& contracted, const ChainComplex& whole);

/// Inclusion C^{i-1}(G/e) (x) B -> C^i(G) for a loop e that is the last edge.
ChainMapData alpha_loop(const ChainComplex& tensor, const ChainComplex& whole);

/// Chain-level connecting map C^i(G-e) -> C^i(G/e) [(x) B]: add the last
/// edge e to the state, apply the unsigned per-edge map, and pull back
/// through alpha.
ChainMapData connecting_map(const ChainComplex& deleted, const ChainComplex& whole, const ChainComplex& contracted);

/// The five ingredients of a deletion-contraction short exact sequence. The
/// graph is reordered so that the chosen edge is last.
struct DeletionContractionData {
  Graph reordered;
  int edge = 0;  ///< edge index in the original graph
  bool loop = false;
  ChainComplex whole;
  ChainComplex deleted;
  ChainComplex contracted;  ///< C(G/e), or C(G/e) (x) B for a loop
  ChainMapData alpha;       ///< contracted -> whole, shift +1
  ChainMapData beta;        ///< whole -> deleted
  ChainMapData gamma;       ///< deleted -> contracted
};

DeletionContractionData build_deletion_contraction(const Graph& g, int e, const CoefficientSystem& sys,
                                                   int max_edges = kDefaultMaxEdges);

/// Map C(G) -> C(K) induced by a subgraph K of G (spec relative to G):
/// zero on states not inside E(K); otherwise drops the A factors of vertices
/// outside K when they are all the unit, and kills the element otherwise.
ChainMapData functorial_beta(const ChainComplex& whole, const ChainComplex& sub, const SubgraphSpec& spec);

}  // namespace tuttecoh

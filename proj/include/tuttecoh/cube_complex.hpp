#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tuttecoh/bipoly.hpp"
#include "tuttecoh/coeff_system.hpp"
#include "tuttecoh/graph.hpp"
#include "tuttecoh/sparse_matrix.hpp"

namespace tuttecoh {

inline constexpr int kDefaultMaxEdges = 12;

/// Tensor basis element of C^s: one A label per component of [G:s] in
/// canonical component order, then the B labels in creation order.
struct ChainBasisElement {
  EdgeSubset state;
  std::vector<int> a_labels;
  std::vector<int> b_labels;

  bool operator==(const ChainBasisElement&) const = default;
};

/// Integer combination of basis elements, as produced by per-edge maps.
using ElementImage = std::vector<std::pair<ChainBasisElement, Integer>>;

/// Cochain complex of bigraded free abelian groups over the edge cube of a
/// graph. Differentials raise the height by one and are stored per bidegree.
///
/// With `extra_b_factor` set the complex is C(G) (x) B: every state carries
/// one more B factor, held at the first B position, which the differential
/// never touches except by appending after it.
class ChainComplex {
 public:
  struct StateInfo {
    EdgeSubset state;
    SubgraphSummary summary;
    std::vector<int> component_ids;  ///< canonical ids in ascending order
    int b_count = 0;                 ///< b1, plus one with the extra factor
    int offset = 0;                  ///< first basis index inside its group
    int dim = 0;
  };

  ChainComplex(Graph g, CoefficientSystem sys, bool extra_b_factor, int max_edges = kDefaultMaxEdges);

  const Graph& graph() const { return graph_; }
  const CoefficientSystem& system() const { return system_; }
  bool has_extra_b_factor() const { return extra_b_factor_; }

  /// Heights run from 0 to max_height() inclusive.
  int max_height() const { return graph_.num_edges(); }

  const std::vector<ChainBasisElement>& group(int i) const;
  int group_dim(int i) const;
  const std::vector<EdgeSubset>& states(int i) const;
  const StateInfo& state_info(EdgeSubset s) const;

  /// Bidegrees with a nonzero block at height i, ascending.
  std::vector<Bidegree> bidegrees(int i) const;
  /// Every bidegree occurring at any height, ascending.
  std::vector<Bidegree> all_bidegrees() const;
  int block_dim(int i, Bidegree d) const;
  /// Group indices of the block (i, d), ascending.
  const std::vector<int>& block_members(int i, Bidegree d) const;
  int block_position(int i, int group_index) const { return block_pos_.at(i).at(group_index); }
  Bidegree bidegree_of(int i, int group_index) const { return degree_of_.at(i).at(group_index); }

  Bidegree bidegree(const ChainBasisElement& x) const;
  /// Group index of x within group(x.state.height()), if x is well formed.
  std::optional<int> find(const ChainBasisElement& x) const;

  /// d^i restricted to bidegree d: rows index block (i+1, d), columns block
  /// (i, d). Out-of-range heights give correctly shaped zero matrices.
  SparseIntMatrix differential(int i, Bidegree d) const;

  /// Unsigned per-edge map applied to one basis element (e must not be in x.state).
  ElementImage per_edge_image(const ChainBasisElement& x, int e) const;
  /// Unsigned per-edge map C^s -> C^{s+e} on the local bases of the two states.
  SparseIntMatrix per_edge_map(EdgeSubset s, int e) const;

  /// qdim of C^i.
  BiPoly qdim_group(int i) const;

  /// Writes "i p q : row col value" lines for every differential entry.
  void dump_differentials(std::ostream& os) const;

 private:
  void enumerate_states();
  void enumerate_basis();
  void assemble_differentials();
  ChainBasisElement decode(const StateInfo& info, int local) const;

  Graph graph_;
  CoefficientSystem system_;
  bool extra_b_factor_ = false;

  std::vector<std::vector<EdgeSubset>> states_;
  std::unordered_map<std::uint32_t, StateInfo> state_info_;
  std::vector<std::vector<ChainBasisElement>> groups_;
  std::vector<std::vector<Bidegree>> degree_of_;
  std::vector<std::vector<int>> block_pos_;
  std::vector<std::map<Bidegree, std::vector<int>>> blocks_;
  std::vector<std::map<Bidegree, SparseIntMatrix>> differentials_;
};

/// C(G) for the given coefficient system.
ChainComplex build_complex(const Graph& g, const CoefficientSystem& sys, int max_edges = kDefaultMaxEdges);

/// C(G) (x) B, the middle term companion used by the loop exact sequence.
ChainComplex build_loop_tensor_complex(const Graph& g, const CoefficientSystem& sys,
                                       int max_edges = kDefaultMaxEdges);

/// Unsigned per-edge map for state s and edge e not in s.
SparseIntMatrix per_edge_map(const Graph& g, const CoefficientSystem& sys, EdgeSubset s, int e);

/// (-1)^(number of 1s before the star) for a label over {0,1,*} with exactly one star.
int edge_sign(const std::string& label);

struct ComplexCheck {
  bool ok = true;
  std::string witness;
};

/// Every composite d^{i+1} d^i vanishes, block by block.
ComplexCheck verify_d_squared(const ChainComplex& c);

/// Every per-edge map sends each basis element into its own bidegree.
/// Runs on the raw per-edge images, independent of block assembly.
ComplexCheck verify_degree_preservation(const ChainComplex& c);

/// For every state and pair of absent edges the two unsigned composites
/// around the square agree.
ComplexCheck verify_square_commutativity(const ChainComplex& c);

}  // namespace tuttecoh

#pragma once

#include <string>
#include <vector>

#include "tuttecoh/bipoly.hpp"
#include "tuttecoh/graph.hpp"

namespace tuttecoh {

/// T(G; x, y) by the deletion-contraction axioms, always expanding the
/// lowest-index edge.
BiPoly tutte_deletion_contraction(const Graph& g);

/// T(G; x, y) as the rank-generating sum over all edge subsets.
BiPoly tutte_state_sum(const Graph& g);

/// Sum over edge subsets s of (-1)^|s| u^b0(s) v^b1(s) for arbitrary
/// polynomial weights u, v.
BiPoly signed_betti_state_sum(const Graph& g, const BiPoly& u, const BiPoly& v);

/// The categorified variant: sum_s (-1)^|s| (1+x)^b0(s) (1+y)^b1(s).
BiPoly tutte_hat(const Graph& g);

/// Recovers T from T-hat alone. Throws std::invalid_argument when the input
/// cannot be a T-hat polynomial.
BiPoly recover_tutte(const BiPoly& that);

/// sum_s (-1)^|s| (1+x)^b0(s): the chromatic polynomial at lambda = 1 + x.
BiPoly chromatic_state_sum(const Graph& g);

struct IdentityCheck {
  std::string name;
  bool holds = false;
  BiPoly lhs;
  BiPoly rhs;
};

struct DeletionContractionReport {
  EdgeKind kind = EdgeKind::ordinary;
  std::vector<IdentityCheck> identities;
  bool all_hold() const;
};

/// Checks the deletion-contraction relations satisfied by T-hat at edge e.
DeletionContractionReport dc_identities_hat(const Graph& g, int e);

}  // namespace tuttecoh

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tuttecoh/bipoly.hpp"
#include "tuttecoh/chain_map.hpp"
#include "tuttecoh/cube_complex.hpp"
#include "tuttecoh/integer.hpp"

namespace tuttecoh {

/// Z^free (+) Z/t1 (+) Z/t2 ... with t1 | t2 | ...
struct HomologyGroup {
  int free_rank = 0;
  std::vector<Integer> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup&) const = default;
};

struct HomologyKey {
  int i = 0;
  Bidegree degree;

  auto operator<=>(const HomologyKey&) const = default;
};

/// Nonzero cohomology groups, keyed and ordered by (i, p, q).
class BigradedHomology {
 public:
  using Entries = std::map<HomologyKey, HomologyGroup>;

  BigradedHomology() = default;
  explicit BigradedHomology(Entries entries);

  const Entries& entries() const { return entries_; }
  /// The zero group when absent.
  HomologyGroup at(int i, Bidegree d) const;
  /// Entries at cohomological degree i.
  Entries degree(int i) const;
  bool empty() const { return entries_.empty(); }

  /// Every bidegree moved by (dp, dq).
  BigradedHomology shifted(int dp, int dq) const;
  /// Only the entries with i < bound.
  BigradedHomology truncated(int bound) const;

  /// {"homology":[{"i","p","q","free","torsion"}, ...]}.
  nlohmann::json to_json() const;
  static BigradedHomology from_json(const nlohmann::json& j);

  /// One line per nonzero degree, "H^1 = Z{(1,0)} + Z_2{(2,0)}".
  std::string summary() const;
  /// Columns i, p, q, free, torsion.
  std::string table() const;

  bool operator==(const BigradedHomology&) const = default;

 private:
  Entries entries_;
};

class ChainComplexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rank of d^i on each bidegree block, keyed by (i, bidegree); zero ranks omitted.
using DifferentialRanks = std::map<HomologyKey, int>;

struct HomologyResult {
  BigradedHomology groups;
  DifferentialRanks ranks;
};

/// Integer cohomology per (i, bidegree). Blocks are independent; `jobs` > 1
/// spreads them over threads. Throws ChainComplexError when d^2 != 0.
HomologyResult homology_with_ranks(const ChainComplex& c, int jobs = 1);
BigradedHomology homology(const ChainComplex& c, int jobs = 1);

/// sum (-1)^i free_rank x^p y^q.
BiPoly graded_euler(const BigradedHomology& h);
/// sum (-1)^i qdim C^i.
BiPoly graded_euler(const ChainComplex& c);

/// Ranks over Q of the maps induced on cohomology, keyed by source
/// (i, bidegree); zero ranks are omitted. Throws std::invalid_argument when
/// f is not a chain map.
using InducedRanks = std::map<HomologyKey, int>;
InducedRanks rational_ranks_of_map(const ChainMapData& f, const ChainComplex& source, const ChainComplex& target);
/// Same, reusing known differential ranks of both complexes.
InducedRanks rational_ranks_of_map(const ChainMapData& f, const ChainComplex& source, const ChainComplex& target,
                                   const DifferentialRanks& source_ranks, const DifferentialRanks& target_ranks);

int induced_rank(const InducedRanks& ranks, int i, Bidegree d);

}  // namespace tuttecoh

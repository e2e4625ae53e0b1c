#include "tuttecoh/smith.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <tuple>

namespace tuttecoh {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

class Eliminator {
 public:
  // With rank_only set the pivot row is dropped once its column is clear;
  // the diagonal then has the right length but not the invariant factors.
  Eliminator(const SparseIntMatrix& m, bool rank_only) : rank_only_(rank_only), rows_(m.rows()), cols_(m.cols()) {
    for (const auto& e : m.entries()) {
      rows_[e.row].emplace(e.col, e.value);
      cols_[e.col].insert(e.row);
    }
  }

  // Returns the diagonal produced by elimination (absolute values).
  std::vector<Integer> run() {
    std::vector<Integer> diagonal;
    while (auto pivot = find_pivot()) {
      auto [pr, pc] = *pivot;
      while (true) {
        if (auto smaller = clear_column(pr, pc)) {
          std::tie(pr, pc) = *smaller;
          continue;
        }
        if (rank_only_) break;
        if (auto smaller = clear_row(pr, pc)) {
          std::tie(pr, pc) = *smaller;
          continue;
        }
        break;
      }
      diagonal.push_back(abs(rows_[pr].at(pc)));
      for (const auto& [c, v] : rows_[pr]) cols_[c].erase(pr);
      rows_[pr].clear();
      cols_[pc].clear();
    }
    return diagonal;
  }

 private:
  using Coord = std::pair<int, int>;

  // Units first: they never need a remainder step and are the common case.
  std::optional<Coord> find_pivot() const {
    std::optional<Coord> best;
    std::size_t best_fill = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& [c, v] : rows_[r]) {
        if (v != 1 && v != -1) continue;
        const std::size_t fill = rows_[r].size() + cols_[c].size();
        if (!best || fill < best_fill) {
          best = Coord{static_cast<int>(r), c};
          best_fill = fill;
          if (fill == 2) return best;
        }
      }
    if (best) return best;

    Integer best_mag;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& [c, v] : rows_[r]) {
        const std::size_t fill = rows_[r].size() + cols_[c].size();
        Integer mag = abs(v);
        const int cmp = best ? mag.compare(best_mag) : -1;
        if (cmp < 0 || (cmp == 0 && fill < best_fill)) {
          best = Coord{static_cast<int>(r), c};
          best_mag = std::move(mag);
          best_fill = fill;
        }
      }
    return best;
  }

  void set_entry(int r, int c, Integer value) {
    if (value == 0) {
      rows_[r].erase(c);
      cols_[c].erase(r);
    } else {
      rows_[r][c] = std::move(value);
      cols_[c].insert(r);
    }
  }

  // row_r -= q * row_p
  void row_axpy(int r, int p, const Integer& q) {
    for (const auto& [c, v] : rows_[p]) {
      const auto it = rows_[r].find(c);
      Integer updated = (it == rows_[r].end() ? Integer(0) : it->second) - q * v;
      set_entry(r, c, std::move(updated));
    }
  }

  // Uses row operations to zero column pc outside row pr. Returns a
  // coordinate holding a nonzero remainder smaller than the pivot, if any.
  std::optional<Coord> clear_column(int pr, int pc) {
    const Integer pivot = rows_[pr].at(pc);
    const std::vector<int> others(cols_[pc].begin(), cols_[pc].end());
    for (const int r : others) {
      if (r == pr) continue;
      const Integer q = rows_[r].at(pc) / pivot;
      if (q != 0) row_axpy(r, pr, q);
      if (rows_[r].count(pc)) return Coord{r, pc};
    }
    return std::nullopt;
  }

  // Column pc is zero outside row pr, so a column operation against pc only
  // changes row pr.
  std::optional<Coord> clear_row(int pr, int pc) {
    const Integer pivot = rows_[pr].at(pc);
    std::vector<std::pair<int, Integer>> others(rows_[pr].begin(), rows_[pr].end());
    for (auto& [c, v] : others) {
      if (c == pc) continue;
      Integer rem = v % pivot;
      set_entry(pr, c, rem);
      if (rem != 0) return Coord{pr, c};
    }
    return std::nullopt;
  }

  bool rank_only_ = false;
  std::vector<std::map<int, Integer>> rows_;
  std::vector<std::set<int>> cols_;
};

}  // namespace

std::vector<Integer> SmithForm::torsion() const {
  std::vector<Integer> out;
  for (const auto& d : invariant_factors)
    if (d > 1) out.push_back(d);
  return out;
}

SmithForm smith_normal_form(const SparseIntMatrix& m) {
  auto diagonal = Eliminator(m, false).run();
  SmithForm form;
  form.rank = static_cast<int>(diagonal.size());

  std::vector<Integer> big;
  int ones = 0;
  for (auto& d : diagonal) {
    if (d == 1) ++ones;
    else big.push_back(std::move(d));
  }
  std::sort(big.begin(), big.end());
  for (std::size_t i = 0; i < big.size(); ++i)
    for (std::size_t j = i + 1; j < big.size(); ++j) {
      const Integer g = gcd(big[i], big[j]);
      big[j] = big[i] / g * big[j];
      big[i] = g;
    }
  form.invariant_factors.assign(ones, Integer(1));
  for (auto& d : big) form.invariant_factors.push_back(std::move(d));
  return form;
}

int matrix_rank(const SparseIntMatrix& m) { return static_cast<int>(Eliminator(m, true).run().size()); }

}  // namespace tuttecoh

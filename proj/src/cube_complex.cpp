#include "tuttecoh/cube_complex.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tuttecoh {

namespace {

// Sort key making the order lexicographic in (alpha_1, ..., alpha_n).
std::uint32_t lexicographic_key(std::uint32_t bits, int n) {
  std::uint32_t key = 0;
  for (int k = 0; k < n; ++k)
    if ((bits >> k) & 1u) key |= 1u << (n - 1 - k);
  return key;
}

int ipow(int base, int exp) {
  long long r = 1;
  for (int k = 0; k < exp; ++k) {
    r *= base;
    if (r > (1LL << 30)) throw std::length_error("chain group too large");
  }
  return static_cast<int>(r);
}

std::string describe_element(const ChainBasisElement& x, const CoefficientSystem& sys) {
  std::ostringstream os;
  os << "state=";
  for (int k = 0; k < x.state.size(); ++k) os << (x.state.contains(k) ? '1' : '0');
  os << " [";
  bool first = true;
  for (const int a : x.a_labels) {
    os << (first ? "" : " (x) ") << sys.A.basis[a];
    first = false;
  }
  for (const int b : x.b_labels) {
    os << (first ? "" : " (x) ") << sys.B.basis[b];
    first = false;
  }
  os << ']';
  return os.str();
}

}  // namespace

ChainComplex::ChainComplex(Graph g, CoefficientSystem sys, bool extra_b_factor, int max_edges)
    : graph_(std::move(g)), system_(std::move(sys)), extra_b_factor_(extra_b_factor) {
  if (max_edges > kMaxEdgesHardCap) throw std::invalid_argument("edge bound exceeds hard cap");
  if (graph_.num_edges() > max_edges)
    throw std::invalid_argument("graph has " + std::to_string(graph_.num_edges()) + " edges, bound is " +
                                std::to_string(max_edges));
  const auto report = validate(system_);
  if (!report.ok()) throw std::invalid_argument("invalid coefficient system: " + report.violations.front());
  enumerate_states();
  enumerate_basis();
  assemble_differentials();
}

void ChainComplex::enumerate_states() {
  const int n = graph_.num_edges();
  states_.assign(n + 1, {});
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    const EdgeSubset s(n, bits);
    states_[s.height()].push_back(s);
  }
  const int da = system_.A.dim();
  const int db = system_.B.dim();
  for (auto& level : states_) {
    std::sort(level.begin(), level.end(), [n](const EdgeSubset& a, const EdgeSubset& b) {
      return lexicographic_key(a.bits(), n) < lexicographic_key(b.bits(), n);
    });
    int offset = 0;
    for (const auto& s : level) {
      StateInfo info;
      info.state = s;
      info.summary = subgraph_summary(graph_, s);
      info.component_ids = info.summary.component_ids();
      info.b_count = info.summary.b1 + (extra_b_factor_ ? 1 : 0);
      info.offset = offset;
      info.dim = ipow(da, info.summary.b0) * ipow(db, info.b_count);
      offset += info.dim;
      state_info_.emplace(s.bits(), std::move(info));
    }
  }
}

ChainBasisElement ChainComplex::decode(const StateInfo& info, int local) const {
  const int da = system_.A.dim();
  const int db = system_.B.dim();
  ChainBasisElement x;
  x.state = info.state;
  x.a_labels.resize(info.summary.b0);
  x.b_labels.resize(info.b_count);
  // Mixed radix, last label varying fastest.
  for (int k = info.b_count - 1; k >= 0; --k) {
    x.b_labels[k] = local % db;
    local /= db;
  }
  for (int k = info.summary.b0 - 1; k >= 0; --k) {
    x.a_labels[k] = local % da;
    local /= da;
  }
  return x;
}

void ChainComplex::enumerate_basis() {
  const int n = graph_.num_edges();
  groups_.assign(n + 1, {});
  degree_of_.assign(n + 1, {});
  block_pos_.assign(n + 1, {});
  blocks_.assign(n + 1, {});
  for (int i = 0; i <= n; ++i) {
    for (const auto& s : states_[i]) {
      const auto& info = state_info_.at(s.bits());
      for (int local = 0; local < info.dim; ++local) groups_[i].push_back(decode(info, local));
    }
    for (std::size_t g = 0; g < groups_[i].size(); ++g) {
      const Bidegree d = bidegree(groups_[i][g]);
      auto& members = blocks_[i][d];
      degree_of_[i].push_back(d);
      block_pos_[i].push_back(static_cast<int>(members.size()));
      members.push_back(static_cast<int>(g));
    }
  }
}

Bidegree ChainComplex::bidegree(const ChainBasisElement& x) const {
  Bidegree d;
  for (const int a : x.a_labels) d = d + system_.A.degree[a];
  for (const int b : x.b_labels) d = d + system_.B.degree[b];
  return d;
}

std::optional<int> ChainComplex::find(const ChainBasisElement& x) const {
  if (x.state.size() != graph_.num_edges()) return std::nullopt;
  const auto it = state_info_.find(x.state.bits());
  if (it == state_info_.end()) return std::nullopt;
  const auto& info = it->second;
  if (static_cast<int>(x.a_labels.size()) != info.summary.b0 || static_cast<int>(x.b_labels.size()) != info.b_count)
    return std::nullopt;
  const int da = system_.A.dim();
  const int db = system_.B.dim();
  int local = 0;
  for (const int a : x.a_labels) {
    if (a < 0 || a >= da) return std::nullopt;
    local = local * da + a;
  }
  for (const int b : x.b_labels) {
    if (b < 0 || b >= db) return std::nullopt;
    local = local * db + b;
  }
  return info.offset + local;
}

ElementImage ChainComplex::per_edge_image(const ChainBasisElement& x, int e) const {
  if (x.state.contains(e)) throw std::invalid_argument("per-edge map: edge already in state");
  const auto& info = state_info_.at(x.state.bits());
  const auto& [u, v] = graph_.edge(e);
  const int cu = info.summary.component_of[u];
  const int cv = info.summary.component_of[v];
  ElementImage out;

  if (cu == cv) {
    // Cycle created: components unchanged, append b0 after the existing B factors.
    for (int k = 0; k < system_.B.dim(); ++k) {
      if (system_.B.b0[k] == 0) continue;
      ChainBasisElement y{x.state.with(e), x.a_labels, x.b_labels};
      y.b_labels.push_back(k);
      out.emplace_back(std::move(y), system_.B.b0[k]);
    }
    return out;
  }

  // Two components merge into the one with the smaller canonical id.
  const int keep = std::min(cu, cv);
  const int gone = std::max(cu, cv);
  const auto pos = [&](int id) {
    return static_cast<int>(std::lower_bound(info.component_ids.begin(), info.component_ids.end(), id) -
                            info.component_ids.begin());
  };
  const int pk = pos(keep);
  const int pg = pos(gone);
  const auto& product = system_.A.mult[x.a_labels[pk]][x.a_labels[pg]];
  for (int k = 0; k < system_.A.dim(); ++k) {
    if (product[k] == 0) continue;
    ChainBasisElement y{x.state.with(e), {}, x.b_labels};
    y.a_labels.reserve(x.a_labels.size() - 1);
    for (int c = 0; c < static_cast<int>(x.a_labels.size()); ++c) {
      if (c == pg) continue;
      y.a_labels.push_back(c == pk ? k : x.a_labels[c]);
    }
    out.emplace_back(std::move(y), product[k]);
  }
  return out;
}

void ChainComplex::assemble_differentials() {
  const int n = graph_.num_edges();
  differentials_.assign(n + 1, {});
  for (int i = 0; i < n; ++i) {
    std::map<Bidegree, std::vector<MatrixEntry>> triplets;
    for (std::size_t g = 0; g < groups_[i].size(); ++g) {
      const auto& x = groups_[i][g];
      const Bidegree d = degree_of_[i][g];
      for (int e = 0; e < n; ++e) {
        if (x.state.contains(e)) continue;
        const int sign = x.state.count_before(e) % 2 ? -1 : 1;
        for (auto& [y, coeff] : per_edge_image(x, e)) {
          const auto target = find(y);
          if (!target) throw std::logic_error("per-edge image outside the chain group");
          if (degree_of_[i + 1][*target] != d)
            throw std::logic_error("per-edge map does not preserve bidegree at " + describe_element(x, system_));
          triplets[d].push_back({block_pos_[i + 1][*target], block_pos_[i][g], sign * coeff});
        }
      }
    }
    for (auto& [d, entries] : triplets)
      differentials_[i].emplace(d, SparseIntMatrix::from_entries(block_dim(i + 1, d), block_dim(i, d), std::move(entries)));
  }
}

const std::vector<ChainBasisElement>& ChainComplex::group(int i) const {
  static const std::vector<ChainBasisElement> empty;
  if (i < 0 || i > max_height()) return empty;
  return groups_[i];
}

int ChainComplex::group_dim(int i) const { return static_cast<int>(group(i).size()); }

const std::vector<EdgeSubset>& ChainComplex::states(int i) const {
  static const std::vector<EdgeSubset> empty;
  if (i < 0 || i > max_height()) return empty;
  return states_[i];
}

const ChainComplex::StateInfo& ChainComplex::state_info(EdgeSubset s) const {
  if (s.size() != graph_.num_edges()) throw std::invalid_argument("edge subset length mismatch");
  return state_info_.at(s.bits());
}

std::vector<Bidegree> ChainComplex::bidegrees(int i) const {
  std::vector<Bidegree> out;
  if (i < 0 || i > max_height()) return out;
  for (const auto& [d, members] : blocks_[i]) out.push_back(d);
  return out;
}

std::vector<Bidegree> ChainComplex::all_bidegrees() const {
  std::vector<Bidegree> out;
  for (int i = 0; i <= max_height(); ++i)
    for (const auto& [d, members] : blocks_[i]) out.push_back(d);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int ChainComplex::block_dim(int i, Bidegree d) const { return static_cast<int>(block_members(i, d).size()); }

const std::vector<int>& ChainComplex::block_members(int i, Bidegree d) const {
  static const std::vector<int> empty;
  if (i < 0 || i > max_height()) return empty;
  const auto it = blocks_[i].find(d);
  return it == blocks_[i].end() ? empty : it->second;
}

SparseIntMatrix ChainComplex::differential(int i, Bidegree d) const {
  if (i >= 0 && i < max_height()) {
    const auto it = differentials_[i].find(d);
    if (it != differentials_[i].end()) return it->second;
  }
  return SparseIntMatrix(block_dim(i + 1, d), block_dim(i, d));
}

SparseIntMatrix ChainComplex::per_edge_map(EdgeSubset s, int e) const {
  const auto& from = state_info(s);
  const auto& to = state_info(s.with(e));
  std::vector<MatrixEntry> entries;
  for (int local = 0; local < from.dim; ++local) {
    for (auto& [y, coeff] : per_edge_image(decode(from, local), e))
      entries.push_back({*find(y) - to.offset, local, coeff});
  }
  return SparseIntMatrix::from_entries(to.dim, from.dim, std::move(entries));
}

BiPoly ChainComplex::qdim_group(int i) const {
  BiPoly out;
  if (i < 0 || i > max_height()) return out;
  for (const auto& [d, members] : blocks_[i]) out.add_term(static_cast<long long>(members.size()), d.p, d.q);
  return out;
}

void ChainComplex::dump_differentials(std::ostream& os) const {
  for (int i = 0; i < max_height(); ++i)
    for (const auto& [d, m] : differentials_[i])
      for (const auto& e : m.entries()) os << i << ' ' << d.p << ' ' << d.q << " : " << e.row << ' ' << e.col << ' ' << e.value << '\n';
}

ChainComplex build_complex(const Graph& g, const CoefficientSystem& sys, int max_edges) {
  return ChainComplex(g, sys, false, max_edges);
}

ChainComplex build_loop_tensor_complex(const Graph& g, const CoefficientSystem& sys, int max_edges) {
  return ChainComplex(g, sys, true, max_edges);
}

SparseIntMatrix per_edge_map(const Graph& g, const CoefficientSystem& sys, EdgeSubset s, int e) {
  return build_complex(g, sys).per_edge_map(s, e);
}

int edge_sign(const std::string& label) {
  int ones = 0;
  int stars = 0;
  for (const char c : label) {
    if (c == '*') {
      ++stars;
    } else if (c == '1') {
      if (stars == 0) ++ones;
    } else if (c != '0') {
      throw std::invalid_argument("cube edge label may only contain 0, 1 and *: '" + label + "'");
    }
  }
  if (stars != 1) throw std::invalid_argument("cube edge label needs exactly one *: '" + label + "'");
  return ones % 2 ? -1 : 1;
}

ComplexCheck verify_d_squared(const ChainComplex& c) {
  for (int i = 0; i + 1 < c.max_height(); ++i) {
    for (const auto d : c.bidegrees(i)) {
      const auto composite = c.differential(i + 1, d) * c.differential(i, d);
      if (composite.is_zero()) continue;
      const auto& bad = composite.entries().front();
      const auto& x = c.group(i)[c.block_members(i, d)[bad.col]];
      return {false, "d^" + std::to_string(i + 1) + " d^" + std::to_string(i) + " != 0 in bidegree (" +
                         std::to_string(d.p) + "," + std::to_string(d.q) + ") on " + describe_element(x, c.system())};
    }
  }
  return {};
}

ComplexCheck verify_degree_preservation(const ChainComplex& c) {
  for (int i = 0; i < c.max_height(); ++i)
    for (const auto& x : c.group(i)) {
      const Bidegree d = c.bidegree(x);
      for (int e = 0; e < c.graph().num_edges(); ++e) {
        if (x.state.contains(e)) continue;
        for (const auto& [y, coeff] : c.per_edge_image(x, e))
          if (c.bidegree(y) != d)
            return {false, "edge " + std::to_string(e + 1) + " moves bidegree on " + describe_element(x, c.system())};
      }
    }
  return {};
}

ComplexCheck verify_square_commutativity(const ChainComplex& c) {
  const int n = c.graph().num_edges();
  for (int i = 0; i + 2 <= n; ++i)
    for (const auto& s : c.states(i))
      for (int k = 0; k < n; ++k) {
        if (s.contains(k)) continue;
        for (int j = k + 1; j < n; ++j) {
          if (s.contains(j)) continue;
          const auto via_k = c.per_edge_map(s.with(k), j) * c.per_edge_map(s, k);
          const auto via_j = c.per_edge_map(s.with(j), k) * c.per_edge_map(s, j);
          if (!(via_k == via_j)) {
            const auto& info = c.state_info(s);
            const auto& x = c.group(i)[info.offset];
            return {false, "square over edges " + std::to_string(k + 1) + "," + std::to_string(j + 1) +
                               " does not commute at " + describe_element(x, c.system())};
          }
        }
      }
  return {};
}

}  // namespace tuttecoh

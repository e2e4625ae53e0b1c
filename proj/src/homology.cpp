#include "tuttecoh/homology.hpp"

#include <sstream>
#include <stdexcept>

#include "tuttecoh/parallel.hpp"
#include "tuttecoh/smith.hpp"

namespace tuttecoh {

namespace {

std::string degree_text(Bidegree d) { return "(" + std::to_string(d.p) + "," + std::to_string(d.q) + ")"; }

}  // namespace

BigradedHomology::BigradedHomology(Entries entries) {
  for (auto& [key, group] : entries)
    if (!group.is_zero()) entries_.emplace(key, std::move(group));
}

HomologyGroup BigradedHomology::at(int i, Bidegree d) const {
  const auto it = entries_.find({i, d});
  return it == entries_.end() ? HomologyGroup{} : it->second;
}

BigradedHomology::Entries BigradedHomology::degree(int i) const {
  Entries out;
  for (const auto& [key, group] : entries_)
    if (key.i == i) out.emplace(key, group);
  return out;
}

BigradedHomology BigradedHomology::shifted(int dp, int dq) const {
  Entries out;
  for (const auto& [key, group] : entries_) out.emplace(HomologyKey{key.i, key.degree + Bidegree{dp, dq}}, group);
  return BigradedHomology(std::move(out));
}

BigradedHomology BigradedHomology::truncated(int bound) const {
  Entries out;
  for (const auto& [key, group] : entries_)
    if (key.i < bound) out.emplace(key, group);
  return BigradedHomology(std::move(out));
}

nlohmann::json BigradedHomology::to_json() const {
  auto rows = nlohmann::json::array();
  for (const auto& [key, group] : entries_) {
    auto torsion = nlohmann::json::array();
    for (const auto& t : group.torsion) torsion.push_back(integer_to_json(t));
    rows.push_back({{"i", key.i}, {"p", key.degree.p}, {"q", key.degree.q}, {"free", group.free_rank},
                    {"torsion", std::move(torsion)}});
  }
  return {{"homology", std::move(rows)}};
}

BigradedHomology BigradedHomology::from_json(const nlohmann::json& j) {
  Entries out;
  for (const auto& row : j.at("homology")) {
    HomologyGroup group{row.at("free").get<int>(), {}};
    for (const auto& t : row.at("torsion")) group.torsion.push_back(integer_from_json(t));
    out.emplace(HomologyKey{row.at("i").get<int>(), {row.at("p").get<int>(), row.at("q").get<int>()}},
                std::move(group));
  }
  return BigradedHomology(std::move(out));
}

std::string BigradedHomology::summary() const {
  std::ostringstream os;
  if (entries_.empty()) return "H^* = 0\n";
  int current = -1;
  for (const auto& [key, group] : entries_) {
    if (key.i != current) {
      if (current >= 0) os << '\n';
      os << "H^" << key.i << " =";
      current = key.i;
    } else {
      os << " +";
    }
    bool first = true;
    const auto sep = [&] {
      if (!first) os << " +";
      first = false;
    };
    if (group.free_rank > 0) {
      sep();
      os << ' ' << (group.free_rank > 1 ? std::to_string(group.free_rank) + "Z" : "Z") << '{' << degree_text(key.degree)
         << '}';
    }
    for (const auto& t : group.torsion) {
      sep();
      os << " Z_" << t << '{' << degree_text(key.degree) << '}';
    }
  }
  os << '\n';
  return os.str();
}

std::string BigradedHomology::table() const {
  std::ostringstream os;
  os << "  i   p   q  free  torsion\n";
  for (const auto& [key, group] : entries_) {
    std::string torsion = "[";
    for (std::size_t k = 0; k < group.torsion.size(); ++k)
      torsion += (k ? "," : "") + group.torsion[k].str();
    torsion += "]";
    char line[64];
    std::snprintf(line, sizeof line, "%3d %3d %3d %5d  ", key.i, key.degree.p, key.degree.q, group.free_rank);
    os << line << torsion << '\n';
  }
  return os.str();
}

HomologyResult homology_with_ranks(const ChainComplex& c, int jobs) {
  const auto check = verify_d_squared(c);
  if (!check.ok) throw ChainComplexError("d^2 != 0: " + check.witness);

  struct Job {
    int i;
    Bidegree d;
    SmithForm form;
  };
  std::vector<Job> work;
  for (int i = 0; i < c.max_height(); ++i)
    for (const auto d : c.bidegrees(i))
      if (c.block_dim(i + 1, d) > 0) work.push_back({i, d, {}});
  parallel_for(work.size(), jobs, [&](std::size_t k) { work[k].form = smith_normal_form(c.differential(work[k].i, work[k].d)); });

  HomologyResult result;
  std::map<HomologyKey, const SmithForm*> forms;
  for (const auto& job : work) {
    forms.emplace(HomologyKey{job.i, job.d}, &job.form);
    if (job.form.rank > 0) result.ranks.emplace(HomologyKey{job.i, job.d}, job.form.rank);
  }

  BigradedHomology::Entries out;
  for (int i = 0; i <= c.max_height(); ++i)
    for (const auto d : c.bidegrees(i)) {
      const auto outgoing = forms.find({i, d});
      const auto incoming = forms.find({i - 1, d});
      HomologyGroup group;
      group.free_rank = c.block_dim(i, d);
      if (outgoing != forms.end()) group.free_rank -= outgoing->second->rank;
      if (incoming != forms.end()) {
        group.free_rank -= incoming->second->rank;
        group.torsion = incoming->second->torsion();
      }
      out.emplace(HomologyKey{i, d}, std::move(group));
    }
  result.groups = BigradedHomology(std::move(out));
  return result;
}

BigradedHomology homology(const ChainComplex& c, int jobs) { return homology_with_ranks(c, jobs).groups; }

namespace {

DifferentialRanks all_differential_ranks(const ChainComplex& c) {
  DifferentialRanks out;
  for (int i = 0; i < c.max_height(); ++i)
    for (const auto d : c.bidegrees(i))
      if (c.block_dim(i + 1, d) > 0)
        if (const int r = matrix_rank(c.differential(i, d)); r > 0) out.emplace(HomologyKey{i, d}, r);
  return out;
}

int lookup(const DifferentialRanks& ranks, int i, Bidegree d) {
  const auto it = ranks.find({i, d});
  return it == ranks.end() ? 0 : it->second;
}

}  // namespace

BiPoly graded_euler(const BigradedHomology& h) {
  BiPoly out;
  for (const auto& [key, group] : h.entries())
    out.add_term(Integer(key.i % 2 ? -group.free_rank : group.free_rank), key.degree.p, key.degree.q);
  return out;
}

BiPoly graded_euler(const ChainComplex& c) {
  BiPoly out;
  for (int i = 0; i <= c.max_height(); ++i)
    for (const auto d : c.bidegrees(i)) {
      const int dim = c.block_dim(i, d);
      out.add_term(Integer(i % 2 ? -dim : dim), d.p, d.q);
    }
  return out;
}

InducedRanks rational_ranks_of_map(const ChainMapData& f, const ChainComplex& source, const ChainComplex& target) {
  return rational_ranks_of_map(f, source, target, all_differential_ranks(source), all_differential_ranks(target));
}

InducedRanks rational_ranks_of_map(const ChainMapData& f, const ChainComplex& source, const ChainComplex& target,
                                   const DifferentialRanks& source_ranks, const DifferentialRanks& target_ranks) {
  if (const auto defect = chain_map_defect(f, source, target)) throw std::invalid_argument("not a chain map: " + *defect);
  const int s = f.shift;
  const auto betti = [](const DifferentialRanks& ranks, const ChainComplex& c, int i, Bidegree d) {
    return c.block_dim(i, d) - lookup(ranks, i, d) - lookup(ranks, i - 1, d);
  };

  InducedRanks out;
  for (int i = 0; i <= source.max_height(); ++i)
    for (const auto d : source.bidegrees(i)) {
      if (betti(source_ranks, source, i, d) == 0 || betti(target_ranks, target, i + s, d) == 0) continue;
      const auto fi = f.block(source, target, i, d);
      if (fi.is_zero()) continue;
      const auto dc = source.differential(i, d);
      const auto dd = target.differential(i + s - 1, d);
      // rank f* = rank [[dc, 0], [f, dd]] - rank dc - rank dd
      const auto m = block_matrix({{&dc, nullptr}, {&fi, &dd}}, {dc.rows(), dd.rows()}, {dc.cols(), dd.cols()});
      const int r = matrix_rank(m) - lookup(source_ranks, i, d) - lookup(target_ranks, i + s - 1, d);
      if (r > 0) out.emplace(HomologyKey{i, d}, r);
    }
  return out;
}

int induced_rank(const InducedRanks& ranks, int i, Bidegree d) {
  const auto it = ranks.find({i, d});
  return it == ranks.end() ? 0 : it->second;
}

}  // namespace tuttecoh

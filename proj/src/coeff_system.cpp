#include "tuttecoh/coeff_system.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tuttecoh {

namespace {

BigradedAlgebra dual_numbers() {
  BigradedAlgebra a;
  a.basis = {"1", "x"};
  a.degree = {{0, 0}, {1, 0}};
  a.mult = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
  a.unit = {1, 0};
  return a;
}

BigradedModule truncated_y(Integer b0_coefficient) {
  BigradedModule b;
  b.basis = {"1", "y"};
  b.degree = {{0, 0}, {0, 1}};
  b.b0 = {std::move(b0_coefficient), 0};
  return b;
}

std::string combination_to_string(const Combination& c, const std::vector<std::string>& basis) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c[k] << '*' << basis[k];
  }
  if (first) os << '0';
  return os.str();
}

Combination parse_combination(const nlohmann::json& j, std::size_t dim, const std::string& what) {
  if (!j.is_array() || j.size() != dim)
    throw std::invalid_argument(what + ": expected an array of " + std::to_string(dim) + " coefficients");
  Combination c;
  for (const auto& v : j) c.push_back(integer_from_json(v));
  return c;
}

std::vector<Bidegree> parse_degrees(const nlohmann::json& j, std::size_t dim, const std::string& what) {
  if (!j.is_array() || j.size() != dim) throw std::invalid_argument(what + ": expected " + std::to_string(dim) + " degrees");
  std::vector<Bidegree> out;
  for (const auto& d : j) {
    if (!d.is_array() || d.size() != 2) throw std::invalid_argument(what + ": degree must be [p, q]");
    out.push_back({d[0].get<int>(), d[1].get<int>()});
  }
  return out;
}

nlohmann::json combination_to_json(const Combination& c) {
  auto out = nlohmann::json::array();
  for (const auto& v : c) out.push_back(integer_to_json(v));
  return out;
}

Combination multiply(const BigradedAlgebra& a, const Combination& lhs, const Combination& rhs) {
  Combination out(a.dim(), 0);
  for (int i = 0; i < a.dim(); ++i) {
    if (lhs[i] == 0) continue;
    for (int j = 0; j < a.dim(); ++j) {
      if (rhs[j] == 0) continue;
      for (int k = 0; k < a.dim(); ++k) out[k] += lhs[i] * rhs[j] * a.mult[i][j][k];
    }
  }
  return out;
}

Combination basis_vector(int dim, int k) {
  Combination c(dim, 0);
  c[k] = 1;
  return c;
}

}  // namespace

CoefficientSystem default_system() { return {"default", dual_numbers(), truncated_y(1)}; }

CoefficientSystem chromatic_system() {
  BigradedModule b;
  b.basis = {"1"};
  b.degree = {{0, 0}};
  b.b0 = {1};
  return {"chromatic", dual_numbers(), b};
}

CoefficientSystem zero_b0_system() { return {"zero-b0", dual_numbers(), truncated_y(0)}; }

CoefficientSystem system_from_json(const nlohmann::json& doc, std::string name) {
  CoefficientSystem sys;
  sys.name = std::move(name);
  try {
    const auto& ja = doc.at("A");
    sys.A.basis = ja.at("basis").get<std::vector<std::string>>();
    const std::size_t da = sys.A.basis.size();
    if (da == 0) throw std::invalid_argument("A: empty basis");
    sys.A.degree = parse_degrees(ja.at("deg"), da, "A.deg");
    const auto& jm = ja.at("mult");
    if (!jm.is_array() || jm.size() != da) throw std::invalid_argument("A.mult: expected a square table");
    for (std::size_t i = 0; i < da; ++i) {
      if (!jm[i].is_array() || jm[i].size() != da) throw std::invalid_argument("A.mult: expected a square table");
      std::vector<Combination> row;
      for (std::size_t j = 0; j < da; ++j)
        row.push_back(parse_combination(jm[i][j], da, "A.mult[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
      sys.A.mult.push_back(std::move(row));
    }
    sys.A.unit = parse_combination(ja.at("unit"), da, "A.unit");

    const auto& jb = doc.at("B");
    sys.B.basis = jb.at("basis").get<std::vector<std::string>>();
    const std::size_t db = sys.B.basis.size();
    if (db == 0) throw std::invalid_argument("B: empty basis");
    sys.B.degree = parse_degrees(jb.at("deg"), db, "B.deg");
    sys.B.b0 = parse_combination(jb.at("b0"), db, "B.b0");
  } catch (const nlohmann::json::exception& err) {
    throw std::invalid_argument(std::string("malformed coefficient system: ") + err.what());
  }
  const auto report = validate(sys);
  if (!report.ok()) throw std::invalid_argument("invalid coefficient system: " + report.violations.front());
  return sys;
}

nlohmann::json system_to_json(const CoefficientSystem& sys) {
  nlohmann::json a, b;
  a["basis"] = sys.A.basis;
  b["basis"] = sys.B.basis;
  for (const auto& d : sys.A.degree) a["deg"].push_back({d.p, d.q});
  for (const auto& d : sys.B.degree) b["deg"].push_back({d.p, d.q});
  a["mult"] = nlohmann::json::array();
  for (const auto& row : sys.A.mult) {
    auto jr = nlohmann::json::array();
    for (const auto& c : row) jr.push_back(combination_to_json(c));
    a["mult"].push_back(jr);
  }
  a["unit"] = combination_to_json(sys.A.unit);
  b["b0"] = combination_to_json(sys.B.b0);
  return {{"A", a}, {"B", b}};
}

CoefficientSystem system_by_name(const std::string& spec) {
  if (spec == "default") return default_system();
  if (spec == "chromatic") return chromatic_system();
  if (spec == "zero-b0") return zero_b0_system();
  const std::string prefix = "custom:";
  if (spec.rfind(prefix, 0) == 0) {
    const std::string path = spec.substr(prefix.size());
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open coefficient system '" + path + "'");
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& err) {
      throw std::invalid_argument("cannot parse '" + path + "': " + err.what());
    }
    return system_from_json(doc, spec);
  }
  throw std::invalid_argument("unknown coefficient system '" + spec + "'");
}

BiPoly qdim(const BigradedAlgebra& a) {
  BiPoly out;
  for (const auto& d : a.degree) out.add_term(1, d.p, d.q);
  return out;
}

BiPoly qdim(const BigradedModule& b) {
  BiPoly out;
  for (const auto& d : b.degree) out.add_term(1, d.p, d.q);
  return out;
}

BiPoly qdim_tensor(const CoefficientSystem& sys, int a_factors, int b_factors) {
  return qdim(sys.A).pow(a_factors) * qdim(sys.B).pow(b_factors);
}

ValidationReport validate(const CoefficientSystem& sys) {
  ValidationReport report;
  auto fail = [&](std::string msg) { report.violations.push_back(std::move(msg)); };
  const auto& A = sys.A;
  const auto& B = sys.B;
  const int da = A.dim();
  const int db = B.dim();

  if (da == 0) fail("A has an empty basis");
  if (db == 0) fail("B has an empty basis");
  if (static_cast<int>(A.degree.size()) != da) fail("A: degree list length differs from basis length");
  if (static_cast<int>(B.degree.size()) != db) fail("B: degree list length differs from basis length");
  if (static_cast<int>(A.unit.size()) != da) fail("A: unit has wrong length");
  if (static_cast<int>(B.b0.size()) != db) fail("B: b0 has wrong length");
  bool table_shape_ok = static_cast<int>(A.mult.size()) == da;
  for (const auto& row : A.mult) {
    table_shape_ok &= static_cast<int>(row.size()) == da;
    for (const auto& c : row) table_shape_ok &= static_cast<int>(c.size()) == da;
  }
  if (!table_shape_ok) fail("A: multiplication table has wrong shape");
  if (!report.ok()) return report;

  for (int k = 0; k < da; ++k)
    if (A.degree[k].p < 0 || A.degree[k].q < 0) fail("A: basis element " + A.basis[k] + " has a negative degree");
  for (int k = 0; k < db; ++k)
    if (B.degree[k].p < 0 || B.degree[k].q < 0) fail("B: basis element " + B.basis[k] + " has a negative degree");

  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      for (int k = 0; k < da; ++k)
        if (A.mult[i][j][k] != 0 && A.degree[i] + A.degree[j] != A.degree[k])
          fail("A: product " + A.basis[i] + "*" + A.basis[j] + " has a term " + A.basis[k] + " of the wrong degree");

  for (int i = 0; i < da; ++i)
    for (int j = i + 1; j < da; ++j)
      if (A.mult[i][j] != A.mult[j][i]) fail("A: not commutative at (" + A.basis[i] + ", " + A.basis[j] + ")");

  for (int i = 0; i < da && report.ok(); ++i)
    for (int j = 0; j < da; ++j)
      for (int k = 0; k < da; ++k) {
        const auto left = multiply(A, A.mult[i][j], basis_vector(da, k));
        const auto right = multiply(A, basis_vector(da, i), A.mult[j][k]);
        if (left != right) {
          fail("A: not associative at (" + A.basis[i] + ", " + A.basis[j] + ", " + A.basis[k] + "): " +
               combination_to_string(left, A.basis) + " vs " + combination_to_string(right, A.basis));
          break;
        }
      }

  for (int k = 0; k < da; ++k)
    if (A.unit[k] != 0 && A.degree[k] != Bidegree{0, 0}) fail("A: unit is not homogeneous of degree (0,0)");
  for (int i = 0; i < da; ++i) {
    const auto e = basis_vector(da, i);
    if (multiply(A, A.unit, e) != e) {
      fail("A: unit does not act as identity on " + A.basis[i]);
      break;
    }
  }

  for (int k = 0; k < db; ++k)
    if (B.b0[k] != 0 && B.degree[k] != Bidegree{0, 0})
      fail("B: b0 has a component on " + B.basis[k] + " of degree (" + std::to_string(B.degree[k].p) + "," +
           std::to_string(B.degree[k].q) + "), so the append map is not degree preserving");
  return report;
}

std::optional<int> unit_basis_index(const BigradedAlgebra& a) {
  std::optional<int> found;
  for (int k = 0; k < a.dim(); ++k) {
    if (a.unit[k] == 0) continue;
    if (a.unit[k] != 1 || found) return std::nullopt;
    found = k;
  }
  return found;
}

}  // namespace tuttecoh

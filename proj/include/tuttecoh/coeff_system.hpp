#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tuttecoh/bipoly.hpp"
#include "tuttecoh/integer.hpp"

namespace tuttecoh {

struct Bidegree {
  int p = 0;
  int q = 0;

  Bidegree operator+(const Bidegree& o) const { return {p + o.p, q + o.q}; }
  auto operator<=>(const Bidegree&) const = default;
};

/// Integer combination of basis elements, indexed like the basis.
using Combination = std::vector<Integer>;

struct BigradedAlgebra {
  std::vector<std::string> basis;
  std::vector<Bidegree> degree;
  /// mult[a][b] is the product of basis elements a and b.
  std::vector<std::vector<Combination>> mult;
  Combination unit;

  int dim() const { return static_cast<int>(basis.size()); }
};

/// B is used only as a bigraded module; b0 defines the append maps
/// f_k(t) = t (x) b0.
struct BigradedModule {
  std::vector<std::string> basis;
  std::vector<Bidegree> degree;
  Combination b0;

  int dim() const { return static_cast<int>(basis.size()); }
};

struct CoefficientSystem {
  std::string name;
  BigradedAlgebra A;
  BigradedModule B;
};

/// A = Z[x]/(x^2), B = Z[y]/(y^2) with deg x = (1,0), deg y = (0,1), b0 = 1.
CoefficientSystem default_system();
/// Default A with B = Z in degree (0,0), b0 = 1.
CoefficientSystem chromatic_system();
/// Default A and B with b0 = 0.
CoefficientSystem zero_b0_system();

/// Parses the custom-system JSON document and validates it.
CoefficientSystem system_from_json(const nlohmann::json& doc, std::string name = "custom");
nlohmann::json system_to_json(const CoefficientSystem& sys);

/// "default", "chromatic", "zero-b0" or "custom:<path>".
CoefficientSystem system_by_name(const std::string& spec);

BiPoly qdim(const BigradedAlgebra& a);
BiPoly qdim(const BigradedModule& b);
/// Graded dimension of A^{(x) m} (x) B^{(x) n}.
BiPoly qdim_tensor(const CoefficientSystem& sys, int a_factors, int b_factors);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const CoefficientSystem& sys);

/// Index of the basis element equal to the unit, when the unit is a single
/// basis element; that is the splitting A = Z 1 (+) A' used by pendant and
/// functoriality results.
std::optional<int> unit_basis_index(const BigradedAlgebra& a);

}  // namespace tuttecoh

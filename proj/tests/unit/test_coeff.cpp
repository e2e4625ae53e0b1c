#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "helpers.hpp"
#include "tuttecoh/coeff_system.hpp"

using namespace tuttecoh;
using namespace testing;
using nlohmann::json;

namespace {

// Z[x]/(x^3) with deg x = (1,0), B = Z[y]/(y^2), b0 = 1.
json truncated_cubic() {
  return json::parse(R"({
    "A": {"basis": ["1", "x", "x2"], "deg": [[0,0],[1,0],[2,0]],
          "mult": [[[1,0,0],[0,1,0],[0,0,1]],
                   [[0,1,0],[0,0,1],[0,0,0]],
                   [[0,0,1],[0,0,0],[0,0,0]]],
          "unit": [1,0,0]},
    "B": {"basis": ["1", "y"], "deg": [[0,0],[0,1]], "b0": [1,0]}
  })");
}

bool mentions(const ValidationReport& r, const std::string& needle) {
  for (const auto& v : r.violations)
    if (v.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("default system") {
  const auto sys = default_system();
  CHECK(qdim(sys.A) == 1 + X());
  CHECK(qdim(sys.B) == 1 + Y());
  const int x = 1;
  CHECK(sys.A.basis[x] == "x");
  CHECK(sys.A.mult[x][x] == Combination{0, 0});
  CHECK(sys.B.b0 == Combination{1, 0});
  CHECK(validate(sys).ok());
  CHECK(unit_basis_index(sys.A) == 0);
}

TEST_CASE("chromatic system") {
  const auto sys = chromatic_system();
  CHECK(qdim(sys.B) == 1);
  CHECK(qdim(sys.A) == 1 + X());
  for (int k = 0; k < 6; ++k) CHECK(qdim(sys.B).pow(k) == 1);
  CHECK(validate(sys).ok());
}

TEST_CASE("zero-b0 system") {
  const auto sys = zero_b0_system();
  CHECK(sys.B.b0 == Combination{0, 0});
  CHECK(qdim(sys.A) == qdim(default_system().A));
  CHECK(qdim(sys.B) == qdim(default_system().B));
  CHECK(validate(sys).ok());
}

TEST_CASE("qdim of tensor products") {
  const auto sys = default_system();
  CHECK(qdim_tensor(sys, 2, 0) == (1 + X()) * (1 + X()));
  CHECK(qdim_tensor(sys, 1, 1) == (1 + X()) * (1 + Y()));
  CHECK(qdim_tensor(sys, 0, 0) == 1);
  CHECK(qdim_tensor(sys, 3, 2) == qdim(sys.A).pow(3) * qdim(sys.B).pow(2));
}

TEST_CASE("validate rejects broken systems") {
  SUBCASE("b0 of degree (0,1)") {
    auto sys = default_system();
    sys.B.b0 = {0, 1};
    const auto r = validate(sys);
    CHECK_FALSE(r.ok());
    CHECK(mentions(r, "not degree preserving"));
  }
  SUBCASE("non-associative table") {
    // basis 1, a, b with a*a = b, a*b = a, b*b = 0: (a*a)*b = 0 but a*(a*b) = b
    auto sys = default_system();
    sys.A.basis = {"1", "a", "b"};
    sys.A.degree = {{0, 0}, {0, 0}, {0, 0}};
    sys.A.mult = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 0}, {0, 0, 1}, {0, 1, 0}}, {{0, 0, 1}, {0, 1, 0}, {0, 0, 0}}};
    sys.A.unit = {1, 0, 0};
    const auto r = validate(sys);
    CHECK_FALSE(r.ok());
    CHECK(mentions(r, "not associative at (a, a, b)"));
  }
  SUBCASE("degree additivity") {
    auto sys = default_system();
    sys.A.mult[1][1] = {0, 1};
    CHECK(mentions(validate(sys), "wrong degree"));
  }
  SUBCASE("commutativity") {
    // basis 1, a, b in degree (0,0) with a*b = a but b*a = b
    auto sys = default_system();
    sys.A.basis = {"1", "a", "b"};
    sys.A.degree = {{0, 0}, {0, 0}, {0, 0}};
    sys.A.mult = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 0}, {0, 0, 0}, {0, 1, 0}}, {{0, 0, 1}, {0, 0, 1}, {0, 0, 0}}};
    sys.A.unit = {1, 0, 0};
    CHECK(mentions(validate(sys), "not commutative"));
  }
  SUBCASE("unit") {
    auto sys = default_system();
    sys.A.unit = {0, 1};
    CHECK_FALSE(validate(sys).ok());
  }
  SUBCASE("negative degree") {
    auto sys = default_system();
    sys.B.degree[1] = {0, -1};
    CHECK(mentions(validate(sys), "negative degree"));
  }
  SUBCASE("shape") {
    auto sys = default_system();
    sys.A.mult.pop_back();
    CHECK(mentions(validate(sys), "wrong shape"));
  }
}

TEST_CASE("custom systems from JSON") {
  const auto sys = system_from_json(truncated_cubic(), "cubic");
  CHECK(sys.name == "cubic");
  CHECK(qdim(sys.A) == 1 + X() + X() * X());
  CHECK(unit_basis_index(sys.A) == 0);
  CHECK(system_from_json(system_to_json(sys), "cubic").A.mult == sys.A.mult);
  CHECK(system_to_json(default_system())["B"]["b0"] == json::array({1, 0}));

  auto broken = truncated_cubic();
  broken["B"]["b0"] = json::array({0, 1});
  CHECK_THROWS_WITH_AS(system_from_json(broken), doctest::Contains("invalid coefficient system"), std::invalid_argument);
  broken = truncated_cubic();
  broken["A"].erase("unit");
  CHECK_THROWS_WITH_AS(system_from_json(broken), doctest::Contains("malformed"), std::invalid_argument);
  broken = truncated_cubic();
  broken["A"]["mult"][0].erase(0);
  CHECK_THROWS_AS(system_from_json(broken), std::invalid_argument);
}

TEST_CASE("system_by_name") {
  CHECK(system_by_name("default").name == "default");
  CHECK(qdim(system_by_name("chromatic").B) == 1);
  CHECK(system_by_name("zero-b0").B.b0 == Combination{0, 0});
  CHECK_THROWS_AS(system_by_name("tutte"), std::invalid_argument);
  CHECK_THROWS_AS(system_by_name("custom:/nonexistent/file.json"), std::invalid_argument);

  const std::string path = "custom_system_test.json";
  std::ofstream(path) << truncated_cubic().dump();
  const auto sys = system_by_name("custom:" + path);
  CHECK(qdim(sys.A) == 1 + X() + X() * X());
  std::ofstream(path) << "{ not json";
  CHECK_THROWS_AS(system_by_name("custom:" + path), std::invalid_argument);
  std::remove(path.c_str());
}

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "tuttecoh/integer.hpp"

namespace tuttecoh {

/// Sparse polynomial in x, y with integer coefficients. Exponents are
/// non-negative and zero coefficients are never stored, so equality of term
/// maps is equality of polynomials.
class BiPoly {
 public:
  using Exponents = std::pair<int, int>;
  using TermMap = std::map<Exponents, Integer>;

  BiPoly() = default;
  BiPoly(long long constant);  // NOLINT: implicit by intent, 1 + x reads naturally

  static BiPoly monomial(Integer coefficient, int i, int j);
  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly y() { return monomial(1, 0, 1); }

  const TermMap& terms() const { return terms_; }
  Integer coefficient(int i, int j) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Adds c * x^i y^j in place.
  void add_term(const Integer& c, int i, int j);

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const BiPoly& other);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(BiPoly a);

  bool operator==(const BiPoly&) const = default;

  BiPoly pow(unsigned exponent) const;

  /// Terms sorted by (i, j), e.g. "y + x + x*y + x^2"; zero prints as "0".
  std::string to_string() const;
  /// [{"i":..,"j":..,"c":..}, ...] sorted by (i, j).
  nlohmann::json to_json() const;
  static BiPoly from_json(const nlohmann::json& j);

 private:
  TermMap terms_;
};

class NotDivisibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Substitutes x -> -x and y -> -y.
BiPoly negate_vars(const BiPoly& p);

/// Quotient p / q in Z[x, y]; throws NotDivisibleError on a nonzero remainder.
BiPoly exact_divide(const BiPoly& p, const BiPoly& q);

/// p(x_value, y_value).
BiPoly substitute(const BiPoly& p, const BiPoly& x_value, const BiPoly& y_value);

}  // namespace tuttecoh

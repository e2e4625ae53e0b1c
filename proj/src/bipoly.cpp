#include "tuttecoh/bipoly.hpp"

#include <sstream>

namespace tuttecoh {

BiPoly::BiPoly(long long constant) {
  if (constant != 0) terms_[{0, 0}] = constant;
}

BiPoly BiPoly::monomial(Integer coefficient, int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
  BiPoly p;
  if (coefficient != 0) p.terms_[{i, j}] = std::move(coefficient);
  return p;
}

Integer BiPoly::coefficient(int i, int j) const {
  const auto it = terms_.find({i, j});
  return it == terms_.end() ? Integer(0) : it->second;
}

void BiPoly::add_term(const Integer& c, int i, int j) {
  if (c == 0) return;
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(c, e.first, e.second);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(-c, e.first, e.second);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ca * cb, ea.first + eb.first, ea.second + eb.second);
  return out;
}

BiPoly& BiPoly::operator*=(const BiPoly& other) { return *this = *this * other; }

BiPoly operator-(BiPoly a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

BiPoly BiPoly::pow(unsigned exponent) const {
  BiPoly result(1);
  BiPoly base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return result;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const auto& [i, j] = e;
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    std::string mono;
    if (i == 1) mono = "x";
    else if (i > 1) mono = "x^" + std::to_string(i);
    if (j > 0) {
      if (!mono.empty()) mono += '*';
      mono += j == 1 ? std::string("y") : "y^" + std::to_string(j);
    }
    if (mono.empty()) os << magnitude;
    else if (magnitude == 1) os << mono;
    else os << magnitude << '*' << mono;
  }
  return os.str();
}

nlohmann::json BiPoly::to_json() const {
  auto out = nlohmann::json::array();
  for (const auto& [e, c] : terms_) out.push_back({{"i", e.first}, {"j", e.second}, {"c", integer_to_json(c)}});
  return out;
}

BiPoly BiPoly::from_json(const nlohmann::json& j) {
  BiPoly p;
  for (const auto& term : j) p.add_term(integer_from_json(term.at("c")), term.at("i").get<int>(), term.at("j").get<int>());
  return p;
}

BiPoly negate_vars(const BiPoly& p) {
  BiPoly out;
  for (const auto& [e, c] : p.terms()) out.add_term((e.first + e.second) % 2 ? Integer(-c) : c, e.first, e.second);
  return out;
}

BiPoly exact_divide(const BiPoly& p, const BiPoly& q) {
  if (q.is_zero()) throw NotDivisibleError("division by the zero polynomial");
  // Lex order on (i, j): the map's last entry is the leading term.
  const auto& [lead_e, lead_c] = *q.terms().rbegin();
  BiPoly remainder = p;
  BiPoly quotient;
  while (!remainder.is_zero()) {
    const auto& [e, c] = *remainder.terms().rbegin();
    if (e.first < lead_e.first || e.second < lead_e.second || c % lead_c != 0)
      throw NotDivisibleError("nonzero remainder dividing " + p.to_string() + " by " + q.to_string());
    const auto t = BiPoly::monomial(c / lead_c, e.first - lead_e.first, e.second - lead_e.second);
    quotient += t;
    remainder -= t * q;
  }
  return quotient;
}

BiPoly substitute(const BiPoly& p, const BiPoly& x_value, const BiPoly& y_value) {
  std::map<int, BiPoly> x_powers, y_powers;
  auto power = [](std::map<int, BiPoly>& cache, const BiPoly& base, int k) -> const BiPoly& {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, base.pow(static_cast<unsigned>(k))).first;
    return it->second;
  };
  BiPoly out;
  for (const auto& [e, c] : p.terms())
    out += BiPoly::monomial(c, 0, 0) * power(x_powers, x_value, e.first) * power(y_powers, y_value, e.second);
  return out;
}

}  // namespace tuttecoh

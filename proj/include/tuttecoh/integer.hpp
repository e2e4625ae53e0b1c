#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

#include <json.hpp>

namespace tuttecoh {

/// Arbitrary-precision integer used for every coefficient and matrix entry.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& value) { return value.str(); }

inline bool fits_int64(const Integer& value) {
  static const Integer lo = std::numeric_limits<std::int64_t>::min();
  static const Integer hi = std::numeric_limits<std::int64_t>::max();
  return value >= lo && value <= hi;
}

/// JSON number when the value fits in 64 bits, decimal string otherwise.
inline nlohmann::json integer_to_json(const Integer& value) {
  if (fits_int64(value)) return nlohmann::json(value.convert_to<std::int64_t>());
  return nlohmann::json(value.str());
}

inline Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<std::int64_t>());
}

}  // namespace tuttecoh

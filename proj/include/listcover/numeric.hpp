#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace listcover {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow_big(std::int64_t base, std::int64_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline Rational make_rational(std::int64_t num, std::int64_t den) {
  return Rational(BigInt(num), BigInt(den));
}

/// num/den rounded to double; both sides may be far outside double range.
double ratio_to_double(const BigInt& num, const BigInt& den);

}  // namespace listcover

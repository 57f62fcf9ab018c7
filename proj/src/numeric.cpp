#include "listcover/numeric.hpp"

namespace listcover {

double ratio_to_double(const BigInt& num, const BigInt& den) {
  return Rational(num, den).convert_to<double>();
}

}  // namespace listcover

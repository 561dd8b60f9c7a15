#include "pforge/instance.hpp"

#include <algorithm>
#include <vector>

namespace pforge {

std::string pow2_decimal(std::uint32_t exponent) {
  std::vector<int> digits{1};  // little-endian base 10
  for (std::uint32_t e = 0; e < exponent; ++e) {
    int carry = 0;
    for (int& d : digits) {
      const int v = d * 2 + carry;
      d = v % 10;
      carry = v / 10;
    }
    if (carry) digits.push_back(carry);
  }
  std::string out;
  out.reserve(digits.size());
  for (auto it = digits.rbegin(); it != digits.rend(); ++it)
    out.push_back(static_cast<char>('0' + *it));
  return out;
}

}  // namespace pforge

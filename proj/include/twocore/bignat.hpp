#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace twocore {

// Arbitrary-precision integer used for non-negative values only. Boost has no
// unbounded unsigned backend, so call sites that subtract check the sign.
using BigNat = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigNat& value) { return value.str(); }

inline BigNat pow2(std::uint64_t exponent) {
  BigNat result = 1;
  result <<= static_cast<unsigned>(exponent);
  return result;
}

}  // namespace twocore

#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "dissoc/errors.hpp"

namespace dissoc {

/// Arbitrary-precision non-negative count.
using BigCount = boost::multiprecision::cpp_int;

/// 64-bit count whose arithmetic throws OverflowError instead of wrapping.
class CheckedCount {
 public:
  constexpr CheckedCount() = default;
  constexpr CheckedCount(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  constexpr std::uint64_t value() const noexcept { return value_; }

  friend CheckedCount operator+(CheckedCount a, CheckedCount b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a.value_, b.value_, &r)) throw OverflowError("count addition overflows 64 bits");
    return CheckedCount(r);
  }
  friend CheckedCount operator*(CheckedCount a, CheckedCount b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a.value_, b.value_, &r)) {
      throw OverflowError("count multiplication overflows 64 bits");
    }
    return CheckedCount(r);
  }
  friend bool operator==(CheckedCount, CheckedCount) = default;
  friend auto operator<=>(CheckedCount, CheckedCount) = default;

 private:
  std::uint64_t value_ = 0;
};

inline std::string to_decimal(const BigCount& c) { return c.str(); }

/// 3^a * 2^b in arbitrary precision.
inline BigCount pow3_pow2(unsigned a, unsigned b) {
  BigCount r = 1;
  for (unsigned i = 0; i < a; ++i) r *= 3;
  r <<= b;
  return r;
}

}  // namespace dissoc

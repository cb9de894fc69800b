#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace phenyl {

/// Index values and counts. Every index grows polynomially in the edge count,
/// so all accumulation goes through the checked helpers below.
using Int = std::int64_t;

/// Scratch width for polynomial evaluation before narrowing back to Int.
__extension__ using Wide = __int128;

class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

namespace checked {

inline Int add(Int a, Int b, const char* ctx = "add") {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError(std::string("integer overflow in ") + ctx);
  return r;
}

inline Int sub(Int a, Int b, const char* ctx = "sub") {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError(std::string("integer overflow in ") + ctx);
  return r;
}

inline Int mul(Int a, Int b, const char* ctx = "mul") {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(std::string("integer overflow in ") + ctx);
  return r;
}

inline Int narrow(Wide v, const char* ctx = "narrow") {
  if (v > static_cast<Wide>(std::numeric_limits<Int>::max()) ||
      v < static_cast<Wide>(std::numeric_limits<Int>::min()))
    throw OverflowError(std::string("integer overflow in ") + ctx);
  return static_cast<Int>(v);
}

/// binom(m, 2) = m(m-1)/2
inline Int pairs(Int m) { return m < 2 ? 0 : mul(m, m - 1, "binom") / 2; }

}  // namespace checked
}  // namespace phenyl

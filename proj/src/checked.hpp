#pragma once

#include <cstdint>
#include <stdexcept>

namespace fordseq {

// Overflow-checked int64 arithmetic. Every sequence and series in this
// project is integer-valued and bounded by ~2^n at index n, so checked
// 64-bit covers the supported ranges; anything past that is an error,
// never a silent wrap.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in multiplication");
  return r;
}

}  // namespace fordseq

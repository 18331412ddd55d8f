#ifndef HKPOW_FP_HPP
#define HKPOW_FP_HPP

#include <cstdint>

#include "hkpow/error.hpp"

namespace hkpow {

// Arithmetic in F_p for a prime p <= 2^31. Residues live in [0, p).

bool is_prime(std::int64_t n);

inline std::int64_t fp_add(std::int64_t a, std::int64_t b, std::int64_t p) {
  std::int64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::int64_t fp_sub(std::int64_t a, std::int64_t b, std::int64_t p) {
  std::int64_t s = a - b;
  return s < 0 ? s + p : s;
}

inline std::int64_t fp_neg(std::int64_t a, std::int64_t p) {
  return a == 0 ? 0 : p - a;
}

inline std::int64_t fp_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return (a * b) % p;  // p <= 2^31, no overflow in int64
}

std::int64_t fp_pow(std::int64_t a, std::int64_t e, std::int64_t p);

// Fails with input_error on a = 0.
std::int64_t fp_inv(std::int64_t a, std::int64_t p);

inline std::int64_t fp_reduce(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

}  // namespace hkpow

#endif

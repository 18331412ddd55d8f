#include "hkpow/fp.hpp"

namespace hkpow {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t fp_pow(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a = fp_reduce(a, p);
  while (e > 0) {
    if (e & 1) r = fp_mul(r, a, p);
    a = fp_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::int64_t fp_inv(std::int64_t a, std::int64_t p) {
  if (a % p == 0) throw input_error("fp_inv: division by zero mod " + std::to_string(p));
  return fp_pow(a, p - 2, p);
}

}  // namespace hkpow

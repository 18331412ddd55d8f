#include <doctest.h>

#include "hkpow/fp.hpp"

using namespace hkpow;

TEST_CASE("field axioms, exhaustive for small primes") {
  for (std::int64_t p : {2, 3, 5, 7}) {
    CAPTURE(p);
    for (std::int64_t a = 0; a < p; ++a) {
      CHECK(fp_add(a, fp_neg(a, p), p) == 0);
      if (a != 0) {
        CHECK(fp_mul(a, fp_inv(a, p), p) == 1);
      }
      for (std::int64_t b = 0; b < p; ++b) {
        CHECK(fp_add(a, b, p) == fp_add(b, a, p));
        CHECK(fp_mul(a, b, p) == fp_mul(b, a, p));
        CHECK(fp_sub(a, b, p) == fp_add(a, fp_neg(b, p), p));
        for (std::int64_t c = 0; c < p; ++c) {
          CHECK(fp_add(fp_add(a, b, p), c, p) == fp_add(a, fp_add(b, c, p), p));
          CHECK(fp_mul(fp_mul(a, b, p), c, p) == fp_mul(a, fp_mul(b, c, p), p));
          CHECK(fp_mul(a, fp_add(b, c, p), p) ==
                fp_add(fp_mul(a, b, p), fp_mul(a, c, p), p));
        }
      }
    }
  }
}

TEST_CASE("powers and Fermat's little theorem") {
  for (std::int64_t p : {3, 5, 7, 101}) {
    for (std::int64_t a = 1; a < std::min<std::int64_t>(p, 20); ++a) {
      CHECK(fp_pow(a, p - 1, p) == 1);
      CHECK(fp_pow(a, 0, p) == 1);
    }
  }
  CHECK(fp_pow(2, 10, 1009) == 1024 % 1009);
}

TEST_CASE("inverse of zero rejected") {
  CHECK_THROWS_AS(fp_inv(0, 7), input_error);
}

TEST_CASE("reduce maps into [0, p)") {
  CHECK(fp_reduce(-1, 7) == 6);
  CHECK(fp_reduce(-14, 7) == 0);
  CHECK(fp_reduce(15, 7) == 1);
}

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(7));
  CHECK(is_prime(101));
  CHECK(is_prime(2147483647));
  CHECK(!is_prime(1));
  CHECK(!is_prime(0));
  CHECK(!is_prime(4));
  CHECK(!is_prime(49));
  CHECK(!is_prime(1009 * 1013));
}

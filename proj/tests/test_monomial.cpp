#include <doctest.h>

#include "hkpow/monomial.hpp"

using namespace hkpow;

namespace {
Monomial M(std::vector<std::int32_t> e) { return Monomial(std::move(e)); }
}  // namespace

TEST_CASE("basic monomial algebra") {
  Monomial a = M({2, 1, 0});
  Monomial b = M({1, 1, 3});
  CHECK(a.deg == 3);
  CHECK(mono_mul(a, b) == M({3, 2, 3}));
  CHECK(mono_lcm(a, b) == M({2, 1, 3}));
  CHECK(!mono_divides(a, b));
  CHECK(mono_divides(M({1, 1, 0}), a));
  CHECK(mono_div(a, M({1, 1, 0})) == M({1, 0, 0}));
  CHECK(mono_coprime(M({2, 0, 0}), M({0, 1, 3})));
  CHECK(!mono_coprime(a, b));
  CHECK(mono_pow(M({1, 2, 0}), 3) == M({3, 6, 0}));
  CHECK(mono_one(3).is_one());
  CHECK(mono_var(3, 1, 4) == M({0, 4, 0}));
}

TEST_CASE("grevlex order, hand-checked table") {
  auto ord = grevlex_order();
  // degree dominates
  CHECK(mono_cmp(M({2, 0}), M({1, 0}), ord) > 0);
  CHECK(mono_cmp(M({0, 0}), M({0, 1}), ord) < 0);
  // same degree: x^2 > xy > y^2 in k[x,y]
  CHECK(mono_cmp(M({2, 0}), M({1, 1}), ord) > 0);
  CHECK(mono_cmp(M({1, 1}), M({0, 2}), ord) > 0);
  // classic 3-variable case: x*z < y^2 under grevlex (but > under lex)
  CHECK(mono_cmp(M({1, 0, 1}), M({0, 2, 0}), ord) < 0);
  CHECK(mono_cmp(M({1, 0, 1}), M({0, 2, 0}), lex_order()) > 0);
  CHECK(mono_cmp(M({1, 1, 1}), M({1, 1, 1}), ord) == 0);
}

TEST_CASE("lex order") {
  auto ord = lex_order();
  CHECK(mono_cmp(M({1, 0, 0}), M({0, 5, 5}), ord) > 0);
  CHECK(mono_cmp(M({1, 2, 0}), M({1, 1, 9}), ord) > 0);
  CHECK(mono_cmp(M({0, 1, 0}), M({0, 0, 7}), ord) > 0);
}

TEST_CASE("block elimination order: leading block dominates") {
  auto ord = block_elim_order(1);
  // any positive power of the first variable beats anything without it
  CHECK(mono_cmp(M({1, 0, 0}), M({0, 9, 9}), ord) > 0);
  // ties in the block fall through to grevlex on the tail
  CHECK(mono_cmp(M({1, 2, 0}), M({1, 0, 1}), ord) > 0);
  CHECK(mono_cmp(M({0, 1, 1}), M({0, 2, 0}), ord) < 0);
}

TEST_CASE("order axioms on a small exhaustive grid") {
  std::vector<Monomial> all;
  for (std::int32_t a = 0; a <= 3; ++a)
    for (std::int32_t b = 0; b <= 3; ++b)
      for (std::int32_t c = 0; c <= 3; ++c) all.push_back(M({a, b, c}));
  for (auto ord : {grevlex_order(), lex_order(), block_elim_order(1)}) {
    for (const auto& a : all) {
      CHECK(mono_cmp(a, a, ord) == 0);
      // 1 is minimal
      if (!a.is_one()) CHECK(mono_cmp(a, mono_one(3), ord) > 0);
      for (const auto& b : all) {
        int ab = mono_cmp(a, b, ord);
        CHECK(ab == -mono_cmp(b, a, ord));
        // compatibility with multiplication
        Monomial t = M({1, 2, 1});
        if (ab != 0) {
          CHECK((mono_cmp(mono_mul(a, t), mono_mul(b, t), ord) > 0) == (ab > 0));
        }
      }
    }
  }
}

TEST_CASE("exponent overflow guarded") {
  Monomial big = M({2000000000, 0});
  CHECK_THROWS_AS(mono_mul(big, big), resource_error);
  CHECK_THROWS_AS(mono_pow(M({3, 0}), 1000000000), resource_error);
}

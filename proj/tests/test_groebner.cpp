#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "hkpow/groebner.hpp"

using namespace hkpow;

namespace {

std::vector<std::string> printed(const PolyRing& R, const GroebnerBasis& G) {
  std::vector<std::string> out;
  for (const auto& g : G.gens) out.push_back(R.print(g));
  return out;
}

// Brute-force standard monomial count for a zero-dimensional monomial
// staircase: enumerate the box below the pure powers and test divisibility
// against every leading monomial.
std::int64_t brute_standard_count(const PolyRing& R, const GroebnerBasis& G) {
  std::vector<Monomial> lms;
  std::vector<std::int32_t> box(R.nvars(), 0);
  for (const auto& g : G.gens) lms.push_back(g.lead().m);
  for (const auto& m : lms) {
    for (std::size_t i = 0; i < R.nvars(); ++i) {
      bool pure = m.e[i] > 0;
      for (std::size_t j = 0; j < R.nvars(); ++j) {
        if (j != i && m.e[j] > 0) pure = false;
      }
      if (pure) box[i] = std::max(box[i], m.e[i]);
    }
  }
  std::int64_t count = 0;
  std::vector<std::int32_t> cur(R.nvars(), 0);
  auto divisible = [&](const std::vector<std::int32_t>& e) {
    for (const auto& m : lms) {
      bool div = true;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (m.e[i] > e[i]) { div = false; break; }
      }
      if (div) return true;
    }
    return false;
  };
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == cur.size()) {
      if (!divisible(cur)) ++count;
      return;
    }
    for (cur[i] = 0; cur[i] < box[i]; ++cur[i]) walk(i + 1);
    cur[i] = 0;
  };
  walk(0);
  return count;
}

}  // namespace

TEST_CASE("hand-checked reduced bases") {
  PolyRing R(7, {"x", "y"});
  SUBCASE("already a basis") {
    auto G = buchberger(R, {R.parse("x"), R.parse("y")});
    CHECK(printed(R, G) == std::vector<std::string>{"y", "x"});
  }
  SUBCASE("interreduction") {
    auto G = buchberger(R, {R.parse("x + y"), R.parse("y")});
    CHECK(printed(R, G) == std::vector<std::string>{"y", "x"});
  }
  SUBCASE("unit ideal collapses") {
    auto G = buchberger(R, {R.parse("x + 1"), R.parse("x")});
    CHECK(printed(R, G) == std::vector<std::string>{"1"});
  }
  SUBCASE("monic output") {
    auto G = buchberger(R, {R.parse("3*x^2 + y")});
    CHECK(printed(R, G) == std::vector<std::string>{"x^2+5*y"});
  }
  SUBCASE("textbook S-polynomial example") {
    // (x^2 + y^2, x*y): S-pair gives y^3 (up to scalar)
    auto G = buchberger(R, {R.parse("x^2+y^2"), R.parse("x*y")});
    CHECK(printed(R, G) ==
          std::vector<std::string>{"x*y", "x^2+y^2", "y^3"});
  }
  SUBCASE("zero ideal") {
    auto G = buchberger(R, {});
    CHECK(G.gens.empty());
    CHECK(G.reduced);
  }
}

TEST_CASE("normal form properties") {
  PolyRing R(7, {"x", "y"});
  auto G = buchberger(R, {R.parse("x^2+y^2"), R.parse("x*y")});
  CHECK(normal_form(R, R.parse("x^2*y"), G).is_zero());
  CHECK(normal_form(R, R.zero(), G).is_zero());
  // residue is fully reduced: no term divisible by an LM
  Poly r = normal_form(R, R.parse("x^3 + x + y^4 + 1"), G);
  for (const auto& t : r.t) {
    for (const auto& g : G.gens) {
      CHECK(!mono_divides(g.lead().m, t.m));
    }
  }
  // membership of each generator's combination
  CHECK(normal_form(R, R.mul(R.parse("x + 3"), R.parse("x*y")), G).is_zero());
}

TEST_CASE("zero-dimensionality and standard monomial counts") {
  PolyRing R(7, {"x", "y"});
  auto G = buchberger(R, {R.parse("x^3"), R.parse("y^2")});
  CHECK(is_zero_dimensional(G));
  CHECK(standard_monomial_count(G) == 6);
  CHECK(brute_standard_count(R, G) == 6);

  auto H = buchberger(R, {R.parse("x^3")});
  CHECK(!is_zero_dimensional(H));
  CHECK(!standard_monomial_count(H).has_value());

  // staircase with a mixed corner
  auto S = buchberger(R, {R.parse("x^4"), R.parse("x^2*y"), R.parse("y^3")});
  CHECK(standard_monomial_count(S) == brute_standard_count(R, S));
  CHECK(standard_monomial_count(S) == 8);
}

TEST_CASE("standard counts agree with brute force on random monomial staircases") {
  PolyRing R(5, {"x", "y", "z"});
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int32_t> ed(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Poly> gens = {R.parse("x^5"), R.parse("y^5"), R.parse("z^5")};
    for (int k = 0; k < 3; ++k) {
      Monomial m({ed(rng), ed(rng), ed(rng)});
      if (m.is_one()) continue;
      gens.push_back(R.monomial(1, m));
    }
    auto G = buchberger(R, gens);
    REQUIRE(is_zero_dimensional(G));
    CHECK(standard_monomial_count(G) == brute_standard_count(R, G));
  }
}

TEST_CASE("Krull dimension of the leading-term ideal") {
  PolyRing R2(7, {"x", "y"});
  CHECK(krull_dimension(buchberger(R2, {}), 2) == 2);
  CHECK(krull_dimension(buchberger(R2, {R2.parse("x + 1"), R2.parse("x")}), 2) == -1);
  CHECK(krull_dimension(buchberger(R2, {R2.parse("x")}), 2) == 1);
  CHECK(krull_dimension(buchberger(R2, {R2.parse("x"), R2.parse("y")}), 2) == 0);
  PolyRing R3(2, {"x", "y", "z"});
  CHECK(krull_dimension(buchberger(R3, {R3.parse("x^3 + y^3 + z^3")}), 3) == 2);
}

TEST_CASE("basis is independent of generator presentation") {
  PolyRing R(7, {"x", "y"});
  std::vector<Poly> gens = {R.parse("x^2+y^2"), R.parse("x*y"),
                            R.parse("x^3 + x*y^2")};
  auto G = buchberger(R, gens);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(gens.begin(), gens.end(), rng);
    std::vector<Poly> scaled;
    std::uniform_int_distribution<std::int64_t> cd(1, 6);
    for (const auto& g : gens) scaled.push_back(R.scale(g, cd(rng)));
    CHECK(printed(R, buchberger(R, scaled)) == printed(R, G));
  }
}

TEST_CASE("idempotence: GB of a reduced basis is itself") {
  PolyRing R(7, {"x", "y"});
  auto G = buchberger(R, {R.parse("x^2+y^2"), R.parse("x*y")});
  CHECK(printed(R, buchberger(R, G.gens)) == printed(R, G));
}

TEST_CASE("degree cap aborts runaway computations") {
  PolyRing R(7, {"x", "y"});
  BuchbergerOptions opts;
  opts.degree_cap = 3;
  CHECK_THROWS_AS(buchberger(R, {R.parse("x^5 + y"), R.parse("y^5 + x")}, opts),
                  resource_error);
}

TEST_CASE("elimination order produces an elimination basis") {
  // (t*x - 1, t*y) in k[t,x,y], eliminating t: intersection-style setup;
  // the t-free part of the basis generates (y)
  PolyRing R(7, {"t", "x", "y"}, block_elim_order(1));
  auto G = buchberger(R, {R.parse("t*x - 1"), R.parse("t*y")});
  bool found_y = false;
  for (const auto& g : G.gens) {
    bool tfree = true;
    for (const auto& t : g.t) {
      if (t.m.e[0] > 0) tfree = false;
    }
    if (tfree) {
      CHECK(R.print(g) == "y");
      found_y = true;
    }
  }
  CHECK(found_y);
}

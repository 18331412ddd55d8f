#include "hkpow/monomial.hpp"

#include <limits>

namespace hkpow {

namespace {

void check_exp(std::int64_t v) {
  if (v < 0 || v > std::numeric_limits<std::int32_t>::max()) {
    throw resource_error("monomial exponent out of range: " + std::to_string(v));
  }
}

void check_same_vars(const Monomial& a, const Monomial& b) {
  if (a.e.size() != b.e.size()) {
    throw input_error("monomials over different variable sets");
  }
}

// grevlex on the index range [lo, hi): total degree first, then the last
// nonzero entry of a-b decides (negative entry means a is larger).
int grevlex_cmp_range(const Monomial& a, const Monomial& b, std::size_t lo,
                      std::size_t hi) {
  std::int64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

int lex_cmp_range(const Monomial& a, const Monomial& b, std::size_t lo,
                  std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

Monomial::Monomial(std::vector<std::int32_t> exps) : e(std::move(exps)) {
  for (auto v : e) {
    check_exp(v);
    deg += v;
  }
}

Monomial mono_one(std::size_t nvars) {
  return Monomial(std::vector<std::int32_t>(nvars, 0));
}

Monomial mono_var(std::size_t nvars, std::size_t i, std::int32_t k) {
  std::vector<std::int32_t> e(nvars, 0);
  e[i] = k;
  return Monomial(std::move(e));
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  check_same_vars(a, b);
  if (a.deg > b.deg) return false;
  for (std::size_t i = 0; i < a.e.size(); ++i) {
    if (a.e[i] > b.e[i]) return false;
  }
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  check_same_vars(a, b);
  Monomial r;
  r.e.resize(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) {
    std::int64_t v = std::int64_t{a.e[i]} + b.e[i];
    check_exp(v);
    r.e[i] = static_cast<std::int32_t>(v);
  }
  r.deg = a.deg + b.deg;
  return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  check_same_vars(a, b);
  Monomial r;
  r.e.resize(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) {
    if (b.e[i] > a.e[i]) throw input_error("mono_div: not divisible");
    r.e[i] = a.e[i] - b.e[i];
  }
  r.deg = a.deg - b.deg;
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  check_same_vars(a, b);
  Monomial r;
  r.e.resize(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) {
    r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    r.deg += r.e[i];
  }
  return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  check_same_vars(a, b);
  for (std::size_t i = 0; i < a.e.size(); ++i) {
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  }
  return true;
}

Monomial mono_pow(const Monomial& a, std::int64_t k) {
  Monomial r;
  r.e.resize(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) {
    std::int64_t v = std::int64_t{a.e[i]} * k;
    check_exp(v);
    r.e[i] = static_cast<std::int32_t>(v);
  }
  r.deg = a.deg * k;
  return r;
}

int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  check_same_vars(a, b);
  std::size_t n = a.e.size();
  switch (ord.kind) {
    case MonomialOrder::Kind::grevlex:
      return grevlex_cmp_range(a, b, 0, n);
    case MonomialOrder::Kind::lex:
      return lex_cmp_range(a, b, 0, n);
    case MonomialOrder::Kind::block_elim: {
      std::size_t k = static_cast<std::size_t>(ord.block);
      if (k > n) throw input_error("block size exceeds variable count");
      int c = grevlex_cmp_range(a, b, 0, k);
      if (c != 0) return c;
      return grevlex_cmp_range(a, b, k, n);
    }
  }
  return 0;
}

}  // namespace hkpow

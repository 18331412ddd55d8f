#ifndef HKPOW_MONOMIAL_HPP
#define HKPOW_MONOMIAL_HPP

#include <cstdint>
#include <vector>

#include "hkpow/error.hpp"

namespace hkpow {

// A monomial in a fixed set of variables: exponent vector plus cached total
// degree. Exponents are machine ints; Frobenius experiments reach degrees in
// the thousands, so arithmetic guards against overflow of the 32-bit range.

struct Monomial {
  std::vector<std::int32_t> e;
  std::int64_t deg = 0;

  Monomial() = default;
  explicit Monomial(std::vector<std::int32_t> exps);

  std::size_t nvars() const { return e.size(); }
  bool is_one() const { return deg == 0; }

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

Monomial mono_one(std::size_t nvars);
Monomial mono_var(std::size_t nvars, std::size_t i, std::int32_t k = 1);

bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);
Monomial mono_pow(const Monomial& a, std::int64_t k);

struct MonomialOrder {
  enum class Kind { grevlex, lex, block_elim };
  Kind kind = Kind::grevlex;
  // For block_elim: the first `block` variables form the leading block,
  // compared grevlex before the grevlex-compared tail.
  int block = 0;

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && (kind != Kind::block_elim || block == o.block);
  }
  bool operator!=(const MonomialOrder& o) const { return !(*this == o); }
};

inline MonomialOrder grevlex_order() { return {MonomialOrder::Kind::grevlex, 0}; }
inline MonomialOrder lex_order() { return {MonomialOrder::Kind::lex, 0}; }
inline MonomialOrder block_elim_order(int first_block) {
  return {MonomialOrder::Kind::block_elim, first_block};
}

// Returns >0 if a > b, 0 if equal, <0 if a < b. Total order with 1 minimal
// and compatible with multiplication.
int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

}  // namespace hkpow

#endif

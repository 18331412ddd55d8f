#ifndef HKPOW_GROEBNER_HPP
#define HKPOW_GROEBNER_HPP

#include <optional>
#include <vector>

#include "hkpow/poly.hpp"

namespace hkpow {

// Reduced bases are canonical: generators monic, pairwise fully reduced,
// sorted ascending by leading monomial. Two ideals are equal iff their
// reduced bases are identical.
struct GroebnerBasis {
  std::vector<Poly> gens;
  MonomialOrder order;
  bool reduced = false;
};

struct BuchbergerOptions {
  // Aborts when an intermediate polynomial exceeds this total degree.
  std::int64_t degree_cap = 4096;
};

// Buchberger with sugar-degree pair selection and the Gebauer-Moeller
// criteria. Empty input yields the zero ideal's empty basis.
GroebnerBasis buchberger(const PolyRing& ring, const std::vector<Poly>& gens,
                         const BuchbergerOptions& opts = {});

// Remainder of multivariate division of f by G: no term of the result is
// divisible by a leading monomial of G, and f - result lies in (G).
Poly normal_form(const PolyRing& ring, const Poly& f, const GroebnerBasis& G);

// True iff every variable has a pure power among the leading monomials.
bool is_zero_dimensional(const GroebnerBasis& G);

// Number of monomials divisible by no leading monomial of G; nullopt means
// infinitely many. Requires G reduced. Counts by a depth-first walk of the
// exponent box bounded by the pure-power leading exponents.
std::optional<std::int64_t> standard_monomial_count(const GroebnerBasis& G);

// Dimension of the leading-term ideal: the maximum size of a variable
// subset S such that no leading monomial is supported inside S (exhaustive
// over subsets). Returns -1 for the unit ideal and nvars for the zero ideal.
int krull_dimension(const GroebnerBasis& G, std::size_t nvars);

}  // namespace hkpow

#endif

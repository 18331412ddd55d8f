#ifndef HKPOW_POLY_HPP
#define HKPOW_POLY_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hkpow/fp.hpp"
#include "hkpow/monomial.hpp"

namespace hkpow {

struct Term {
  std::int64_t c;  // in [1, p)
  Monomial m;
};

// Terms strictly descending under the ring's active order; no zero
// coefficients; the zero polynomial is the empty list.
struct Poly {
  std::vector<Term> t;

  bool is_zero() const { return t.empty(); }
  const Term& lead() const { return t.front(); }
  std::int64_t max_degree() const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }
};

// Coefficient field, variable names and active monomial order. Immutable;
// polynomial values only make sense relative to one of these.
class PolyRing {
 public:
  PolyRing(std::int64_t p, std::vector<std::string> vars,
           MonomialOrder ord = grevlex_order());

  std::int64_t characteristic() const { return p_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const MonomialOrder& order() const { return ord_; }

  bool same_shape(const PolyRing& o) const {
    return p_ == o.p_ && vars_.size() == o.vars_.size() && ord_ == o.ord_;
  }

  int cmp(const Monomial& a, const Monomial& b) const {
    return mono_cmp(a, b, ord_);
  }

  Poly zero() const { return {}; }
  Poly one() const;
  Poly constant(std::int64_t c) const;
  Poly monomial(std::int64_t c, Monomial m) const;
  Poly variable(std::size_t i) const;

  // Builds a normalized Poly from arbitrary (coeff, monomial) pairs.
  Poly make(std::vector<Term> terms) const;

  Poly add(const Poly& f, const Poly& g) const;
  Poly sub(const Poly& f, const Poly& g) const;
  Poly neg(const Poly& f) const;
  Poly mul(const Poly& f, const Poly& g) const;
  Poly scale(const Poly& f, std::int64_t c) const;
  // f * c*m
  Poly mul_term(const Poly& f, std::int64_t c, const Monomial& m) const;
  Poly pow(const Poly& f, std::int64_t n) const;
  // f^q for q = p^e; uses Frobenius additivity, so it is O(#terms).
  Poly frobenius(const Poly& f, std::int64_t q) const;

  Poly monic(const Poly& f) const;
  bool is_homogeneous(const Poly& f) const;

  // Parser for the input grammar: integer coefficients, ring variable
  // names, '^' powers, optional '*', '+'/'-'. Throws input_error with a
  // character position on bad syntax or unknown variables.
  Poly parse(const std::string& text) const;
  std::string print(const Poly& f) const;
  std::string print(const Monomial& m) const;

 private:
  std::int64_t p_;
  std::vector<std::string> vars_;
  MonomialOrder ord_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

}  // namespace hkpow

#endif

#ifndef HKPOW_IDEAL_HPP
#define HKPOW_IDEAL_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hkpow/groebner.hpp"
#include "hkpow/poly.hpp"

namespace hkpow {

// The ambient ring R = k[x_1..x_n]/Q. The local ring (R, m) of the theory is
// modeled as this graded/affine quotient with m the image of (x_1..x_n);
// colengths validate support-at-origin so that they equal local lengths.
class QuotientRing {
 public:
  static std::shared_ptr<const QuotientRing> make(
      std::int64_t p, std::vector<std::string> vars,
      std::vector<std::string> relation_texts, bool assert_cm = false,
      bool assert_reduced = false, std::int64_t degree_cap = 4096);

  const PolyRing& poly() const { return *poly_; }
  PolyRingPtr poly_ptr() const { return poly_; }
  const std::vector<Poly>& relations() const { return relations_; }
  const GroebnerBasis& relations_gb() const { return relations_gb_; }
  std::int64_t characteristic() const { return poly_->characteristic(); }
  int dimension() const { return dimension_; }
  bool is_regular() const { return relations_.empty(); }
  bool cm_asserted() const { return assert_cm_ || is_regular(); }
  bool reduced_asserted() const { return assert_reduced_ || is_regular(); }
  std::int64_t degree_cap() const { return degree_cap_; }
  BuchbergerOptions gb_options() const { return {degree_cap_}; }

  bool relations_homogeneous() const { return relations_homogeneous_; }

 private:
  QuotientRing() = default;
  PolyRingPtr poly_;
  std::vector<Poly> relations_;
  GroebnerBasis relations_gb_;
  int dimension_ = 0;
  bool assert_cm_ = false;
  bool assert_reduced_ = false;
  bool relations_homogeneous_ = true;
  std::int64_t degree_cap_ = 4096;
};

using QuotientRingPtr = std::shared_ptr<const QuotientRing>;

// An ideal of R held as preimage generators; the reduced Groebner basis of
// (generators union Q) is computed lazily, published once, then frozen, so
// handles are safe to share across threads.
class Ideal {
 public:
  Ideal() = default;
  static Ideal make(QuotientRingPtr ring, std::vector<Poly> gens);
  static Ideal parse(QuotientRingPtr ring, const std::vector<std::string>& texts);
  static Ideal zero(QuotientRingPtr ring);
  static Ideal unit(QuotientRingPtr ring);

  const QuotientRingPtr& ring() const { return s_->ring; }
  const std::vector<Poly>& gens() const { return s_->gens; }
  // Reduced GB of the polynomial-ring preimage (gens union Q).
  const GroebnerBasis& gb() const;

  bool valid() const { return s_ != nullptr; }

 private:
  struct State {
    QuotientRingPtr ring;
    std::vector<Poly> gens;
    mutable std::once_flag gb_once;
    mutable GroebnerBasis gb;
    mutable std::once_flag len_once;
    mutable std::optional<std::int64_t> len;
  };
  std::shared_ptr<State> s_;
  friend std::int64_t colength(const Ideal& I);
};

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
// I^n with the convention that any non-positive power is the unit ideal.
// Interreduces after every product step.
Ideal ideal_power(const Ideal& I, std::int64_t n);
// Generated by g^q per generator; q must be a power of the characteristic.
Ideal frobenius_power(const Ideal& I, std::int64_t q);
// (I : J) = {r in R | rJ <= I}, via elimination intersection and exact
// division in the polynomial-ring preimage.
Ideal ideal_colon(const Ideal& I, const Ideal& J);
Ideal ideal_intersection(const Ideal& I, const Ideal& J);

bool ideal_equals(const Ideal& I, const Ideal& J);
bool contains(const Ideal& I, const Poly& f);
bool ideal_subset(const Ideal& I, const Ideal& J);  // I <= J
bool is_unit_ideal(const Ideal& I);

// True iff R/I is Artinian.
bool is_m_primary(const Ideal& I);

// l_R(R/I) as a standard-monomial count, with the support-at-origin
// validation (skipped automatically for homogeneous input).
std::int64_t colength(const Ideal& I);

// The maximal ideal (x_1..x_n).
Ideal maximal_ideal(QuotientRingPtr ring);

// I^0..I^nmax computed incrementally (shares the interreduction work).
std::vector<Ideal> power_chain(const Ideal& I, std::int64_t nmax);

}  // namespace hkpow

#endif

#ifndef HKPOW_HK_HPP
#define HKPOW_HK_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hkpow/hilbert.hpp"
#include "hkpow/ideal.hpp"

namespace hkpow {

// Exact rationals for normalized lengths l/q^2 and the L_i estimates; no
// floating point anywhere in the math core.
using BigRational = boost::multiprecision::cpp_rational;

inline BigRational ratio(std::int64_t num, std::int64_t den) {
  return BigRational(num, den);
}

// --- Ratliff-Rush closure ----------------------------------------------

struct RRClosureResult {
  Ideal input;
  Ideal closure;                 // union of the chain (I^{n+1} : I^n)
  std::int64_t stabilization_index = 0;  // first n with K_n = K_{n+1}
  int confirm = 1;               // extra confirmed equalities
  std::vector<std::string> transcript;
};

// Computes K_n = (I^{n+1} : I^n) until K_n = K_{n+1} = ... = K_{n+confirm}.
// Consecutive equality is a heuristic stopping rule; the confirmation count
// is exposed and the transcript recorded.
RRClosureResult ratliff_rush_closure(const Ideal& I, int confirm = 1,
                                     int iteration_cap = 30);

// --- minimal reductions ------------------------------------------------

struct ReductionData {
  Ideal ideal;
  Ideal reduction;           // two elements in dimension 2
  std::int64_t r = 0;        // reduction number r_J(I)
  std::vector<std::string> transcript;
};

// Draws random F_p-linear combinations of the generators of I (seeded,
// logged) until a two-generated reduction is found with reduction number
// <= r_cap.
ReductionData find_minimal_reduction(const Ideal& I, std::uint64_t seed,
                                     int attempts = 20, int r_cap = 10);

// Checks a user-supplied J and computes the exact reduction number.
ReductionData verify_reduction(const Ideal& I, const Ideal& J, int r_cap = 10);

bool stability_check(const Ideal& I, const ReductionData& red);

// --- exact finite-q coefficients ---------------------------------------

struct FrobeniusCoefficients {
  std::int64_t q = 1;
  std::int64_t e0 = 0, e1 = 0, e2 = 0;
  std::int64_t multiplicity = 0;          // e(I) = l(R/J)
  std::vector<std::int64_t> v;            // v-values of the RR filtration
  std::vector<std::int64_t> rr_lengths;   // l(R/F~_{q,n}), n = 0..
};

// Hilbert coefficients of I^[q] through the Ratliff-Rush filtration
// F~_{q,n} = RR((I^[q])^n), with v-values against J^[q]. e(I) is computed
// as l(R/J) and cross-checked against the difference-table fit of the
// ordinary powers of I; a mismatch flags the user's CM assertion.
FrobeniusCoefficients frobenius_coefficients(const Ideal& I,
                                             const ReductionData& red,
                                             std::int64_t q,
                                             std::int64_t n_extra = 1,
                                             int confirm = 1);

// The filtration F~_{q,n} = RR((I^[q])^n) for n = 0..n_max; all closures
// share one power chain of I^[q].
std::vector<Ideal> rr_filtration(const Ideal& I, std::int64_t q,
                                 std::int64_t n_max, int confirm = 1);

// --- the report --------------------------------------------------------

struct HKCell {
  std::int64_t n = 0;
  std::int64_t len_ordinary = 0;   // l(R/(I^[q])^n)
  std::int64_t len_rr = 0;         // l(R/F~_{q,n})
  std::int64_t gap = 0;            // l(F~_{q,n}/(I^[q])^n) >= 0
  BigRational norm_ordinary;       // len_ordinary / q^2
  BigRational norm_rr;             // len_rr / q^2
  BigRational f_estimate;          // f^(q)(n)
};

struct HKRow {
  std::int64_t q = 1;
  FrobeniusCoefficients coeffs;
  BigRational L1, L2;              // e1/q^2, e2/q^2
  std::vector<HKCell> cells;       // n = 0..n_max
};

struct HKReport {
  std::string ideal_label;
  std::int64_t multiplicity = 0;   // e(I)
  std::int64_t reduction_number = 0;
  std::vector<HKRow> rows;

  std::string to_json(std::uint64_t seed = 0) const;
  // One CSV per series; keyed by a short series name.
  std::vector<std::pair<std::string, std::string>> plot_csvs() const;
};

// Convergence tables for q = p^1..p^e_max, n = 0..n_max. jobs > 1 evaluates
// the per-q columns concurrently.
HKReport ehk_tables(const Ideal& I, const ReductionData& red, int e_max,
                    std::int64_t n_max, int jobs = 1, int confirm = 1);

// Heuristic a + b/q fit through the last two (q, value) rows; convergence in
// q carries no usable rate certificate, so this is an estimate only.
std::optional<BigRational> richardson_extrapolate(
    const std::vector<std::pair<std::int64_t, BigRational>>& points);

// --- theorem-backed exact identities -----------------------------------

struct Thm41Report {
  std::int64_t q = 0;
  std::int64_t residual_e1 = 0;  // (a)
  std::int64_t residual_e2 = 0;  // (b)
  std::vector<std::pair<std::int64_t, std::int64_t>> residual_poly;  // (c): (n, residual)
  bool all_zero = true;
};

Thm41Report theorem41_check(const Ideal& I, const ReductionData& red,
                            std::int64_t q, std::int64_t n_max, int confirm = 1);

struct IneqReport {
  std::int64_t q = 0, n = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> slack;  // (t, slack >= 0)
  bool all_nonnegative = true;
};

// The displayed inequality: for n >= r and t >= 1,
// (t+1) l(R/(I^[q])^n) - t l(R/(I^[q])^{n-1})
//   <= l(R/(I^[q])^{n+t}) - l(R/(J^[q])^t).
IneqReport estimates_inequality_check(const Ideal& I, const ReductionData& red,
                                      std::int64_t q, std::int64_t n,
                                      std::int64_t t_max);

// --- tight-closure refutation search -----------------------------------

struct StarWitness {
  std::int64_t q = 0, n = 0;
  Poly certificate;  // element of J_star * ((I^[q])^{n+1} : I^[q]) outside (I^[q])^n
};

struct StarSearchResult {
  std::vector<StarWitness> witnesses;
  bool complete = true;  // false if a cell was aborted by the degree cap
  std::vector<std::string> log;
};

// Tests J_star * ((I^[q])^{n+1} : I^[q]) <= (I^[q])^n over the (q, n) grid;
// a violation certifies that the RR closure escapes the tight closure and
// hence e_HK(I^n) != e~_HK(I^n). Requires the user-asserted test ideal.
StarSearchResult star_refutation_search(const Ideal& I, const Ideal& J_star,
                                        int e_min, int e_max,
                                        std::int64_t n_min, std::int64_t n_max);

}  // namespace hkpow

#endif

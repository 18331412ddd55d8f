#ifndef HKPOW_HILBERT_HPP
#define HKPOW_HILBERT_HPP

#include <string>
#include <vector>

#include "hkpow/ideal.hpp"

namespace hkpow {

inline std::int64_t binom2(std::int64_t n) { return n * (n + 1) / 2; }  // C(n+1,2)
inline std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }  // C(n,2)

// Hilbert-Samuel function values l_R(R/F_n) for n = 0..n_max, with the
// convention l = 0 for n < 0.
struct HilbertTable {
  std::string label;
  std::vector<std::int64_t> len;  // len[n]

  std::int64_t at(std::int64_t n) const {
    if (n < 0) return 0;
    return len.at(static_cast<std::size_t>(n));
  }
  std::int64_t nmax() const { return static_cast<std::int64_t>(len.size()) - 1; }
  // First and second differences.
  std::int64_t d1(std::int64_t n) const { return at(n) - at(n - 1); }
  std::int64_t d2(std::int64_t n) const { return at(n) - 2 * at(n - 1) + at(n - 2); }

  std::string to_csv() const;   // columns n, length, delta, delta2
  std::string to_json() const;
};

// In dimension two: l_R(R/F_n) = e0*C(n+1,2) - e1*n + e2 for n > postulation.
struct HilbertCoefficients {
  std::int64_t e0 = 0, e1 = 0, e2 = 0;
  std::int64_t postulation = 0;  // last n where table != polynomial (-1 if none)

  std::int64_t poly_at(std::int64_t n) const { return e0 * binom2(n) - e1 * n + e2; }
};

// Colengths of I^n for n = 0..n_max. Requires I m-primary and dim(R) = 2.
HilbertTable hilbert_samuel_table(const Ideal& I, std::int64_t n_max,
                                  const std::string& label = "");

// Extracts (e0, e1, e2) from a table by stabilized second differences
// (window consecutive equal values required), solves e1, e2 from the last
// two rows and back-verifies the fit against every row past the
// postulation number. Throws check-style errors if the window is too short.
HilbertCoefficients fit_hilbert_polynomial(const HilbertTable& T, int window = 3);

// v-values of a filtration F (F[0] = R) against a reduction J:
// v(n) = l(R/J*F_{n-1}) - l(R/F_n).
struct FiltrationTable {
  std::vector<std::int64_t> v;  // v[0] = 0, entries 1..n_max
  std::int64_t reduction_number = 0;

  std::int64_t at(std::int64_t n) const {
    if (n <= 0) return 0;
    return v.at(static_cast<std::size_t>(n));
  }
  std::int64_t nmax() const { return static_cast<std::int64_t>(v.size()) - 1; }
};

FiltrationTable filtration_v_values(const std::vector<Ideal>& F, const Ideal& J,
                                    std::int64_t n_max);

// e1 = sum v(n), e2 = sum (n-1) v(n); requires an observed zero tail.
std::pair<std::int64_t, std::int64_t> coefficients_from_v(const FiltrationTable& ft);

// Residuals of v(n) = e0 - Delta^2 H_F(n) for n = 1..n_max; all must be 0
// when depth(G(F)) >= 1.
struct HMReport {
  std::vector<std::int64_t> residual;  // residual[n], n = 0 unused
  bool all_zero = true;
};

HMReport verify_hm_identities(const std::vector<Ideal>& F, const Ideal& J,
                              std::int64_t e0, std::int64_t n_max);
HMReport verify_hm_identities(const HilbertTable& lengths,
                              const FiltrationTable& vt, std::int64_t e0);

}  // namespace hkpow

#endif

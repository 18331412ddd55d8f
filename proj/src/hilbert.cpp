#include "hkpow/hilbert.hpp"

#include <sstream>

namespace hkpow {

std::string HilbertTable::to_csv() const {
  std::ostringstream os;
  os << "# Hilbert-Samuel table" << (label.empty() ? "" : " for " + label) << "\n";
  os << "n,length,delta,delta2\n";
  for (std::int64_t n = 0; n <= nmax(); ++n) {
    os << n << "," << at(n) << "," << d1(n) << "," << d2(n) << "\n";
  }
  return os.str();
}

std::string HilbertTable::to_json() const {
  std::ostringstream os;
  os << "{\"label\":\"" << label << "\",\"lengths\":[";
  for (std::int64_t n = 0; n <= nmax(); ++n) {
    if (n) os << ",";
    os << at(n);
  }
  os << "]}";
  return os.str();
}

HilbertTable hilbert_samuel_table(const Ideal& I, std::int64_t n_max,
                                  const std::string& label) {
  if (I.ring()->dimension() != 2) {
    throw input_error("hilbert_samuel_table: ring dimension must be 2, got " +
                      std::to_string(I.ring()->dimension()));
  }
  if (!is_m_primary(I)) {
    throw input_error("hilbert_samuel_table: ideal is not m-primary");
  }
  HilbertTable T;
  T.label = label;
  auto powers = power_chain(I, n_max);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    T.len.push_back(n == 0 ? 0 : colength(powers[static_cast<std::size_t>(n)]));
  }
  return T;
}

HilbertCoefficients fit_hilbert_polynomial(const HilbertTable& T, int window) {
  std::int64_t nmax = T.nmax();
  if (nmax < window + 1) {
    throw input_error("fit_hilbert_polynomial: table too short");
  }
  std::int64_t e0 = T.d2(nmax);
  for (int k = 1; k < window; ++k) {
    if (T.d2(nmax - k) != e0) {
      throw error(
          "fit_hilbert_polynomial: second difference not stabilized over the "
          "last " +
          std::to_string(window) + " entries; raise n_max");
    }
  }
  // solve -e1*n + e2 = H(n) - e0*C(n+1,2) from the last two rows
  std::int64_t a1 = T.at(nmax) - e0 * binom2(nmax);
  std::int64_t a2 = T.at(nmax - 1) - e0 * binom2(nmax - 1);
  std::int64_t e1 = a2 - a1;
  std::int64_t e2 = a1 + e1 * nmax;
  HilbertCoefficients C{e0, e1, e2, -1};
  for (std::int64_t n = nmax; n >= 0; --n) {
    if (T.at(n) != C.poly_at(n)) {
      C.postulation = n;
      break;
    }
  }
  // back-verify: every row past the postulation number matches exactly
  for (std::int64_t n = C.postulation + 1; n <= nmax; ++n) {
    if (T.at(n) != C.poly_at(n)) {
      throw error("fit_hilbert_polynomial: internal fit inconsistency at n = " +
                  std::to_string(n));
    }
  }
  return C;
}

FiltrationTable filtration_v_values(const std::vector<Ideal>& F, const Ideal& J,
                                    std::int64_t n_max) {
  if (F.empty() || !is_unit_ideal(F.front())) {
    throw input_error("filtration_v_values: F_0 must be the unit ideal");
  }
  if (n_max >= static_cast<std::int64_t>(F.size())) {
    throw input_error("filtration_v_values: filtration shorter than n_max");
  }
  FiltrationTable ft;
  ft.v.assign(static_cast<std::size_t>(n_max) + 1, 0);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const Ideal& Fn = F[static_cast<std::size_t>(n)];
    Ideal JF = ideal_product(J, F[static_cast<std::size_t>(n - 1)]);
    if (!ideal_subset(JF, Fn)) {
      throw input_error("filtration_v_values: J*F_" + std::to_string(n - 1) +
                        " is not contained in F_" + std::to_string(n));
    }
    ft.v[static_cast<std::size_t>(n)] = colength(JF) - colength(Fn);
  }
  ft.reduction_number = 0;
  for (std::int64_t n = n_max; n >= 1; --n) {
    if (ft.at(n) > 0) {
      ft.reduction_number = n;
      break;
    }
  }
  return ft;
}

std::pair<std::int64_t, std::int64_t> coefficients_from_v(
    const FiltrationTable& ft) {
  if (ft.nmax() >= 1 && ft.at(ft.nmax()) > 0) {
    throw error("coefficients_from_v: v-tail not zero at n = " +
                std::to_string(ft.nmax()));
  }
  std::int64_t e1 = 0, e2 = 0;
  for (std::int64_t n = 1; n <= ft.nmax(); ++n) {
    e1 += ft.at(n);
    e2 += (n - 1) * ft.at(n);
  }
  return {e1, e2};
}

HMReport verify_hm_identities(const HilbertTable& lengths,
                              const FiltrationTable& vt, std::int64_t e0) {
  HMReport rep;
  std::int64_t n_max = std::min(lengths.nmax(), vt.nmax());
  rep.residual.assign(static_cast<std::size_t>(n_max) + 1, 0);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    std::int64_t r = vt.at(n) - (e0 - lengths.d2(n));
    rep.residual[static_cast<std::size_t>(n)] = r;
    if (r != 0) rep.all_zero = false;
  }
  return rep;
}

HMReport verify_hm_identities(const std::vector<Ideal>& F, const Ideal& J,
                              std::int64_t e0, std::int64_t n_max) {
  FiltrationTable vt = filtration_v_values(F, J, n_max);
  HilbertTable T;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    T.len.push_back(n == 0 ? 0 : colength(F[static_cast<std::size_t>(n)]));
  }
  return verify_hm_identities(T, vt, e0);
}

}  // namespace hkpow

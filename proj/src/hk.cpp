#include "hkpow/hk.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <sstream>

namespace hkpow {

namespace {

void require_dim2(const Ideal& I, const char* who) {
  if (I.ring()->dimension() != 2) {
    throw input_error(std::string(who) + ": ring dimension must be 2, got " +
                      std::to_string(I.ring()->dimension()));
  }
}

// Powers of a fixed base ideal, extended on demand. RR closures of all the
// powers of one Frobenius power share this chain.
class PowerChain {
 public:
  explicit PowerChain(Ideal base) : base_(std::move(base)) {
    pow_.push_back(Ideal::unit(base_.ring()));
    pow_.push_back(base_);
  }
  // By value: Ideal is a shared handle, and extending the chain reallocates
  // the vector a reference would point into.
  Ideal get(std::int64_t n) {
    if (n < 0) n = 0;
    while (static_cast<std::int64_t>(pow_.size()) <= n) {
      pow_.push_back(ideal_product(pow_.back(), base_));
    }
    return pow_[static_cast<std::size_t>(n)];
  }

 private:
  Ideal base_;
  std::vector<Ideal> pow_;
};

// RR closure of base^n using the shared power chain:
// K_t = (base^{n(t+1)} : base^{nt}).
RRClosureResult rr_of_power(PowerChain& chain, std::int64_t n, int confirm,
                            int iteration_cap) {
  const Ideal& A = chain.get(n);
  RRClosureResult res;
  res.input = A;
  res.confirm = confirm;
  if (n <= 0) {
    res.closure = A;
    res.stabilization_index = 0;
    return res;
  }
  Ideal prev = ideal_colon(chain.get(2 * n), chain.get(n));
  res.transcript.push_back("K_1 computed");
  int streak = 0;
  for (int t = 2; t <= iteration_cap; ++t) {
    Ideal cur = ideal_colon(chain.get(n * (t + 1)), chain.get(n * t));
    bool eq = ideal_equals(prev, cur);
    res.transcript.push_back("K_" + std::to_string(t) +
                             (eq ? " = K_prev" : " > K_prev"));
    if (eq) {
      if (streak == 0) res.stabilization_index = t - 1;
      ++streak;
      // first equality plus `confirm` extra confirmed steps; the chain can
      // pause, so a lone equality is not trusted
      if (streak >= confirm + 1) {
        res.closure = std::move(cur);
        return res;
      }
    } else {
      streak = 0;
    }
    prev = std::move(cur);
  }
  throw resource_error("ratliff_rush_closure: iteration cap " +
                       std::to_string(iteration_cap) + " exceeded");
}

std::int64_t reduction_number_or(const Ideal& I, const Ideal& J, int r_cap,
                                 std::vector<std::string>* transcript) {
  // smallest r <= r_cap with I^{r+1} = J*I^r, or -1
  auto powers = power_chain(I, r_cap + 1);
  for (int r = 0; r <= r_cap; ++r) {
    Ideal JIr = ideal_product(J, powers[static_cast<std::size_t>(r)]);
    bool eq = ideal_equals(powers[static_cast<std::size_t>(r + 1)], JIr);
    if (transcript) {
      transcript->push_back("I^" + std::to_string(r + 1) +
                            (eq ? " = " : " != ") + "J*I^" + std::to_string(r));
    }
    if (eq) return r;
  }
  return -1;
}

}  // namespace

RRClosureResult ratliff_rush_closure(const Ideal& I, int confirm,
                                     int iteration_cap) {
  if (!I.ring()->reduced_asserted()) {
    throw input_error(
        "ratliff_rush_closure: ring not asserted reduced (set assert_reduced)");
  }
  if (I.gens().empty()) {
    throw input_error("ratliff_rush_closure: ideal must contain a regular element");
  }
  PowerChain chain(I);
  return rr_of_power(chain, 1, confirm, iteration_cap);
}

ReductionData verify_reduction(const Ideal& I, const Ideal& J, int r_cap) {
  require_dim2(I, "verify_reduction");
  if (!ideal_subset(J, I)) {
    throw input_error("verify_reduction: J is not contained in I");
  }
  if (!is_m_primary(J)) {
    throw input_error("verify_reduction: J is not m-primary");
  }
  ReductionData red;
  red.ideal = I;
  red.reduction = J;
  std::int64_t r = reduction_number_or(I, J, r_cap, &red.transcript);
  if (r < 0) {
    throw input_error("verify_reduction: no reduction number <= " +
                      std::to_string(r_cap) + " found");
  }
  red.r = r;
  return red;
}

ReductionData find_minimal_reduction(const Ideal& I, std::uint64_t seed,
                                     int attempts, int r_cap) {
  require_dim2(I, "find_minimal_reduction");
  if (!is_m_primary(I)) {
    throw input_error("find_minimal_reduction: ideal is not m-primary");
  }
  const PolyRing& ring = I.ring()->poly();
  std::int64_t p = ring.characteristic();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);

  for (int a = 0; a < attempts; ++a) {
    std::ostringstream line;
    line << "attempt " << a << " (seed " << seed << "): coeffs";
    Poly x = ring.zero(), y = ring.zero();
    for (const auto& g : I.gens()) {
      std::int64_t cx = coeff(rng), cy = coeff(rng);
      line << " (" << cx << "," << cy << ")";
      x = ring.add(x, ring.scale(g, cx));
      y = ring.add(y, ring.scale(g, cy));
    }
    if (x.is_zero() || y.is_zero()) continue;
    Ideal J = Ideal::make(I.ring(), {x, y});
    if (!is_m_primary(J)) continue;
    std::vector<std::string> transcript{line.str()};
    std::int64_t r = reduction_number_or(I, J, r_cap, &transcript);
    if (r >= 0) {
      ReductionData red;
      red.ideal = I;
      red.reduction = std::move(J);
      red.r = r;
      red.transcript = std::move(transcript);
      return red;
    }
  }
  throw input_error(
      "find_minimal_reduction: all attempts failed; enlarge p, raise the "
      "attempt count, or supply J explicitly");
}

bool stability_check(const Ideal& I, const ReductionData& red) {
  return ideal_equals(ideal_power(I, 2), ideal_product(red.reduction, I));
}

namespace {

// Everything frobenius_coefficients needs, kept so callers can reuse the
// expensive RR filtration.
struct FrobData {
  FrobeniusCoefficients fc;
  std::vector<Ideal> rr_filtration;  // F~_{q,n}, n = 0..
  PowerChain iq_chain;
};

std::int64_t cross_checked_multiplicity(const Ideal& I,
                                        const ReductionData& red) {
  std::int64_t eI = colength(red.reduction);
  // Independent route: difference-table fit of the ordinary powers of I.
  // A mismatch means either the CM assertion or the reduction is wrong.
  std::int64_t n_max = std::max<std::int64_t>(red.r + 3, 5);
  for (;; n_max += 3) {
    try {
      HilbertCoefficients fit =
          fit_hilbert_polynomial(hilbert_samuel_table(I, n_max));
      if (fit.e0 != eI) {
        throw check_failure(
            "multiplicity cross-check failed: l(R/J) = " + std::to_string(eI) +
            " but fitted e0 = " + std::to_string(fit.e0) +
            " (CM assertion or reduction verification is wrong)");
      }
      return eI;
    } catch (const check_failure&) {
      throw;
    } catch (const input_error&) {
      throw;
    } catch (const resource_error&) {
      throw;
    } catch (const error&) {
      if (n_max > 24) throw;
      // second difference not stabilized yet; extend the table
    }
  }
}

FrobData frobenius_data(const Ideal& I, const ReductionData& red,
                        std::int64_t q, std::int64_t n_extra, int confirm) {
  require_dim2(I, "frobenius_coefficients");
  if (!I.ring()->cm_asserted()) {
    throw input_error(
        "frobenius_coefficients: ring not asserted Cohen-Macaulay (set "
        "assert_cm)");
  }
  std::int64_t eI = cross_checked_multiplicity(I, red);

  Ideal Iq = frobenius_power(I, q);
  Ideal Jq = frobenius_power(red.reduction, q);
  std::int64_t n_v = red.r + std::max<std::int64_t>(n_extra, 1);

  // The RR stopping rule is heuristic; the filtration lengths must satisfy
  // l(R/F_n) = e0*C(n+1,2) - e1*n + e2 for n >= r-1, so use that identity
  // as a self-check and recompute with a stricter confirmation count if it
  // fails.
  for (int attempt = 0;; ++attempt) {
    FrobData data{{}, {}, PowerChain(Iq)};
    for (std::int64_t n = 0; n <= n_v; ++n) {
      data.rr_filtration.push_back(
          rr_of_power(data.iq_chain, n, confirm, 30).closure);
    }
    FiltrationTable vt = filtration_v_values(data.rr_filtration, Jq, n_v);
    auto [e1, e2] = coefficients_from_v(vt);

    data.fc.q = q;
    data.fc.multiplicity = eI;
    data.fc.e0 = q * q * eI;
    data.fc.e1 = e1;
    data.fc.e2 = e2;
    data.fc.v = vt.v;
    for (const auto& F : data.rr_filtration) {
      data.fc.rr_lengths.push_back(is_unit_ideal(F) ? 0 : colength(F));
    }

    bool consistent = true;
    for (std::int64_t n = std::max<std::int64_t>(red.r - 1, 1); n <= n_v; ++n) {
      std::int64_t expect = data.fc.e0 * binom2(n) - e1 * n + e2;
      if (data.fc.rr_lengths[static_cast<std::size_t>(n)] != expect) {
        consistent = false;
      }
    }
    if (consistent) return data;
    if (attempt >= 2) {
      throw check_failure(
          "frobenius_coefficients: Ratliff-Rush filtration lengths violate "
          "the forced polynomial identity at q = " +
          std::to_string(q) + "; stabilization did not certify");
    }
    confirm += 2;
  }
}

}  // namespace

FrobeniusCoefficients frobenius_coefficients(const Ideal& I,
                                             const ReductionData& red,
                                             std::int64_t q,
                                             std::int64_t n_extra, int confirm) {
  return frobenius_data(I, red, q, n_extra, confirm).fc;
}

std::vector<Ideal> rr_filtration(const Ideal& I, std::int64_t q,
                                 std::int64_t n_max, int confirm) {
  if (!I.ring()->reduced_asserted()) {
    throw input_error(
        "rr_filtration: ring not asserted reduced (set assert_reduced)");
  }
  PowerChain chain(frobenius_power(I, q));
  std::vector<Ideal> F;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    F.push_back(rr_of_power(chain, n, confirm, 30).closure);
  }
  return F;
}

Thm41Report theorem41_check(const Ideal& I, const ReductionData& red,
                            std::int64_t q, std::int64_t n_max, int confirm) {
  std::int64_t r = red.r;
  if (n_max < r + 2) {
    throw input_error("theorem41_check: n_max must be at least r + 2");
  }
  FrobData data = frobenius_data(I, red, q, n_max - r, confirm);
  const auto& len = data.fc.rr_lengths;
  auto L = [&](std::int64_t n) -> std::int64_t {
    return n < 0 ? 0 : len.at(static_cast<std::size_t>(n));
  };

  Thm41Report rep;
  rep.q = q;
  std::int64_t q2e = q * q * data.fc.multiplicity;
  rep.residual_e1 = data.fc.e1 - (r * q2e + L(r - 1) - L(r));
  rep.residual_e2 = data.fc.e2 - (choose2(r) * q2e + r * L(r - 1) - (r - 1) * L(r));
  for (std::int64_t n = std::max<std::int64_t>(r - 1, 0); n <= n_max; ++n) {
    std::int64_t res =
        L(n) - (data.fc.e0 * binom2(n) - data.fc.e1 * n + data.fc.e2);
    rep.residual_poly.emplace_back(n, res);
  }
  rep.all_zero = rep.residual_e1 == 0 && rep.residual_e2 == 0;
  for (const auto& [n, res] : rep.residual_poly) {
    (void)n;
    if (res != 0) rep.all_zero = false;
  }
  return rep;
}

IneqReport estimates_inequality_check(const Ideal& I, const ReductionData& red,
                                      std::int64_t q, std::int64_t n,
                                      std::int64_t t_max) {
  if (t_max < 1) throw input_error("estimates_inequality_check: t_max must be >= 1");
  if (n < red.r) {
    throw input_error("estimates_inequality_check: n must be >= r = " +
                      std::to_string(red.r));
  }
  PowerChain iq(frobenius_power(I, q));
  PowerChain jq(frobenius_power(red.reduction, q));
  auto len = [&](PowerChain& c, std::int64_t k) -> std::int64_t {
    return k <= 0 ? 0 : colength(c.get(k));
  };
  IneqReport rep;
  rep.q = q;
  rep.n = n;
  for (std::int64_t t = 1; t <= t_max; ++t) {
    std::int64_t lhs = (t + 1) * len(iq, n) - t * len(iq, n - 1);
    std::int64_t rhs = len(iq, n + t) - len(jq, t);
    rep.slack.emplace_back(t, rhs - lhs);
    if (rhs - lhs < 0) rep.all_nonnegative = false;
  }
  return rep;
}

StarSearchResult star_refutation_search(const Ideal& I, const Ideal& J_star,
                                        int e_min, int e_max,
                                        std::int64_t n_min, std::int64_t n_max) {
  require_dim2(I, "star_refutation_search");
  const PolyRing& ring = I.ring()->poly();
  std::int64_t p = I.ring()->characteristic();
  StarSearchResult res;
  for (int e = e_min; e <= e_max; ++e) {
    std::int64_t q = 1;
    for (int k = 0; k < e; ++k) q *= p;
    try {
      PowerChain iq(frobenius_power(I, q));
      for (std::int64_t n = n_min; n <= n_max; ++n) {
        Ideal K = ideal_colon(iq.get(n + 1), iq.get(1));
        const Ideal& target = iq.get(n);
        bool found = false;
        for (const auto& s : J_star.gens()) {
          for (const auto& k : K.gens()) {
            Poly prod = ring.mul(s, k);
            if (!contains(target, prod)) {
              res.witnesses.push_back({q, n, std::move(prod)});
              found = true;
              break;
            }
          }
          if (found) break;
        }
        res.log.push_back("q=" + std::to_string(q) + " n=" + std::to_string(n) +
                          (found ? ": NOT contained (witness recorded)"
                                 : ": contained"));
      }
    } catch (const resource_error& ex) {
      res.complete = false;
      res.log.push_back("q=" + std::to_string(q) +
                        ": aborted by degree cap (" + ex.what() + ")");
    }
  }
  return res;
}

HKReport ehk_tables(const Ideal& I, const ReductionData& red, int e_max,
                    std::int64_t n_max, int jobs, int confirm) {
  require_dim2(I, "ehk_tables");
  std::int64_t p = I.ring()->characteristic();

  auto make_row = [&](int e) -> HKRow {
    std::int64_t q = 1;
    for (int k = 0; k < e; ++k) q *= p;
    FrobData data =
        frobenius_data(I, red, q, std::max<std::int64_t>(n_max - red.r, 1), confirm);
    HKRow row;
    row.q = q;
    row.coeffs = data.fc;
    std::int64_t q2 = q * q;
    row.L1 = ratio(data.fc.e1, q2);
    row.L2 = ratio(data.fc.e2, q2);
    for (std::int64_t n = 0; n <= n_max; ++n) {
      HKCell cell;
      cell.n = n;
      cell.len_ordinary = n == 0 ? 0 : colength(data.iq_chain.get(n));
      cell.len_rr =
          n < static_cast<std::int64_t>(data.fc.rr_lengths.size())
              ? data.fc.rr_lengths[static_cast<std::size_t>(n)]
              : colength(rr_of_power(data.iq_chain, n, confirm, 30).closure);
      cell.gap = cell.len_ordinary - cell.len_rr;
      cell.norm_ordinary = ratio(cell.len_ordinary, q2);
      cell.norm_rr = ratio(cell.len_rr, q2);
      cell.f_estimate = cell.norm_ordinary -
                        BigRational(data.fc.multiplicity * binom2(n)) +
                        row.L1 * n;
      if (cell.gap < 0) {
        throw check_failure("ehk_tables: negative gap at q=" + std::to_string(q) +
                            " n=" + std::to_string(n));
      }
      row.cells.push_back(std::move(cell));
    }
    return row;
  };

  HKReport rep;
  rep.multiplicity = cross_checked_multiplicity(I, red);
  rep.reduction_number = red.r;
  rep.rows.resize(static_cast<std::size_t>(e_max));
  if (jobs <= 1) {
    for (int e = 1; e <= e_max; ++e) rep.rows[static_cast<std::size_t>(e - 1)] = make_row(e);
  } else {
    std::vector<std::future<HKRow>> futs;
    for (int e = 1; e <= e_max; ++e) {
      futs.push_back(std::async(std::launch::async, make_row, e));
    }
    for (int e = 1; e <= e_max; ++e) {
      rep.rows[static_cast<std::size_t>(e - 1)] = futs[static_cast<std::size_t>(e - 1)].get();
    }
  }
  return rep;
}

}  // namespace hkpow

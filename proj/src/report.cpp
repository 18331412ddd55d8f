#include <nlohmann/json.hpp>
#include <sstream>

#include "hkpow/hk.hpp"

namespace hkpow {

namespace {

// Rationals print as "num/den" (or just "num" for integers) so the JSON and
// CSV stay exact.
std::string rat(const BigRational& x) {
  std::ostringstream os;
  if (denominator(x) == 1) {
    os << numerator(x);
  } else {
    os << numerator(x) << "/" << denominator(x);
  }
  return os.str();
}

}  // namespace

std::string HKReport::to_json(std::uint64_t seed) const {
  nlohmann::ordered_json j;
  j["ideal"] = ideal_label;
  j["multiplicity"] = multiplicity;
  j["reduction_number"] = reduction_number;
  j["seed"] = seed;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json r;
    r["q"] = row.q;
    r["e0"] = row.coeffs.e0;
    r["e1"] = row.coeffs.e1;
    r["e2"] = row.coeffs.e2;
    r["v"] = row.coeffs.v;
    r["rr_lengths"] = row.coeffs.rr_lengths;
    r["L1"] = rat(row.L1);
    r["L2"] = rat(row.L2);
    r["cells"] = nlohmann::ordered_json::array();
    for (const auto& c : row.cells) {
      nlohmann::ordered_json cj;
      cj["n"] = c.n;
      cj["len_ordinary"] = c.len_ordinary;
      cj["len_rr"] = c.len_rr;
      cj["gap"] = c.gap;
      cj["norm_ordinary"] = rat(c.norm_ordinary);
      cj["norm_rr"] = rat(c.norm_rr);
      cj["f_estimate"] = rat(c.f_estimate);
      r["cells"].push_back(std::move(cj));
    }
    j["rows"].push_back(std::move(r));
  }
  nlohmann::ordered_json extr;
  extr["note"] = "heuristic a+b/q fit through the last two rows";
  std::vector<std::pair<std::int64_t, BigRational>> pts;
  for (const auto& rw : rows) pts.emplace_back(rw.q, rw.L1);
  if (auto a = richardson_extrapolate(pts)) extr["L1"] = rat(*a);
  pts.clear();
  for (const auto& rw : rows) pts.emplace_back(rw.q, rw.L2);
  if (auto a = richardson_extrapolate(pts)) extr["L2"] = rat(*a);
  j["extrapolation_heuristic"] = std::move(extr);
  return j.dump(2) + "\n";
}

std::vector<std::pair<std::string, std::string>> HKReport::plot_csvs() const {
  std::ostringstream ehk, ehk_rr, gap, fcur;
  ehk << "# l(R/(I^[q])^n)/q^2 per n-series; exact rationals\n"
      << "q,n,norm_ordinary\n";
  ehk_rr << "# l(R/F~_{q,n})/q^2 per n-series; exact rationals\n"
         << "q,n,norm_rr\n";
  gap << "# gap g(q,n) = l(F~_{q,n}/(I^[q])^n) over the (q,n) grid\n"
      << "q,n,gap\n";
  fcur << "# f^(q)(n) = l(R/(I^[q])^n)/q^2 - e(I)*C(n+1,2) + (e1/q^2)*n\n"
       << "q,n,f_estimate\n";
  for (const auto& row : rows) {
    for (const auto& c : row.cells) {
      ehk << row.q << "," << c.n << "," << rat(c.norm_ordinary) << "\n";
      ehk_rr << row.q << "," << c.n << "," << rat(c.norm_rr) << "\n";
      gap << row.q << "," << c.n << "," << c.gap << "\n";
      fcur << row.q << "," << c.n << "," << rat(c.f_estimate) << "\n";
    }
  }
  return {{"ehk_vs_q", ehk.str()},
          {"ehk_rr_vs_q", ehk_rr.str()},
          {"gap_grid", gap.str()},
          {"f_curves", fcur.str()}};
}

std::optional<BigRational> richardson_extrapolate(
    const std::vector<std::pair<std::int64_t, BigRational>>& points) {
  if (points.size() < 2) return std::nullopt;
  auto [q1, v1] = points[points.size() - 2];
  auto [q2, v2] = points[points.size() - 1];
  if (q1 == q2) return std::nullopt;
  // v = a + b/q through the last two rows
  return (BigRational(q2) * v2 - BigRational(q1) * v1) / BigRational(q2 - q1);
}

}  // namespace hkpow

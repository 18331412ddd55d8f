#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "hkpow/hk.hpp"
#include "hkpow/ringspec.hpp"

using namespace hkpow;
using nlohmann::ordered_json;

namespace {

struct RunConfig {
  std::string ringfile;
  std::string ideal_name = "m";
  std::int64_t q = 0;
  int e_max = 0;  // 0 = char-dependent default
  std::int64_t n_max = 4;
  std::int64_t n = 0;  // 0 = use the reduction number
  std::int64_t t_max = 3;
  int confirm = 1;
  std::uint64_t seed = 1;
  std::int64_t degree_cap = 4096;
  int jobs = 1;
  std::string out;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream f(cfg.out);
    if (!f) throw input_error("cannot write " + cfg.out);
    f << text;
  }
}

int default_e_max(std::int64_t p) { return p == 2 ? 4 : 2; }

Ideal named_ideal(const RingSpec& spec, const QuotientRingPtr& ring,
                  const RunConfig& cfg) {
  return spec.build_ideal(ring, cfg.ideal_name);
}

ReductionData pick_reduction(const RingSpec& spec, const QuotientRingPtr& ring,
                             const Ideal& I, const RunConfig& cfg) {
  if (spec.reduction) {
    return verify_reduction(I, spec.build_ideal(ring, *spec.reduction));
  }
  return find_minimal_reduction(I, cfg.seed);
}

std::int64_t require_q(const RunConfig& cfg, std::int64_t p) {
  if (cfg.q <= 0) throw input_error("--q is required for this command");
  std::int64_t t = cfg.q;
  while (t % p == 0) t /= p;
  if (t != 1) {
    throw input_error("--q must be a power of the characteristic " +
                      std::to_string(p));
  }
  return cfg.q;
}

ordered_json gens_json(const QuotientRingPtr& ring, const std::vector<Poly>& gens) {
  ordered_json a = ordered_json::array();
  for (const auto& g : gens) a.push_back(ring->poly().print(g));
  return a;
}

int cmd_gb(const RingSpec& spec, const RunConfig& cfg) {
  auto ring = spec.build_ring(cfg.degree_cap);
  Ideal I = named_ideal(spec, ring, cfg);
  ordered_json j;
  j["ideal"] = cfg.ideal_name;
  j["order"] = "grevlex";
  j["reduced_groebner_basis"] = gens_json(ring, I.gb().gens);
  emit(cfg, j.dump(2) + "\n");
  return 0;
}

int cmd_length(const RingSpec& spec, const RunConfig& cfg) {
  auto ring = spec.build_ring(cfg.degree_cap);
  Ideal I = named_ideal(spec, ring, cfg);
  emit(cfg, std::to_string(colength(I)) + "\n");
  return 0;
}

int cmd_hilbert(const RingSpec& spec, const RunConfig& cfg) {
  auto ring = spec.build_ring(cfg.degree_cap);
  Ideal I = named_ideal(spec, ring, cfg);
  HilbertTable T = hilbert_samuel_table(I, cfg.n_max, cfg.ideal_name);
  std::string text = T.to_csv();
  try {
    HilbertCoefficients C = fit_hilbert_polynomial(T);
    text += "# fit: e0=" + std::to_string(C.e0) + " e1=" + std::to_string(C.e1) +
            " e2=" + std::to_string(C.e2) +
            " postulation=" + std::to_string(C.postulation) + "\n";
  } catch (const error&) {
    text += "# fit: second difference not stabilized; raise --n-max\n";
  }
  emit(cfg, text);
  return 0;
}

int cmd_rr(const RingSpec& spec, const RunConfig& cfg) {
  auto ring = spec.build_ring(cfg.degree_cap);
  Ideal I = named_ideal(spec, ring, cfg);
  RRClosureResult res = ratliff_rush_closure(I, cfg.confirm);
  ordered_json j;
  j["ideal"] = cfg.ideal_name;
  j["closure_generators"] = gens_json(ring, res.closure.gens());
  j["stabilization_index"] = res.stabilization_index;
  j["confirm"] = res.confirm;
  j["closed"] = ideal_equals(res.input, res.closure);
  j["transcript"] = res.transcript;
  emit(cfg, j.dump(2) + "\n");
  return 0;
}

int cmd_reduce(const RingSpec& spec, const RunConfig& cfg) {
  auto ring = spec.build_ring(cfg.degree_cap);
  Ideal I = named_ideal(spec, ring, cfg);
  ReductionData red = pick_reduction(spec, ring, I, cfg);
  ordered_json j;
  j["ideal"] = cfg.ideal_name;
  j["reduction_generators"] = gens_json(ring, red.reduction.gens());
  j["reduction_number"] = red.r;
  j["stable"] = stability_check(I, red);
  j["seed"] = cfg.seed;
  j["transcript"] = red.transcript;
  emit(cfg, j.dump(2) + "\n");
  return 0;
}

int cmd_coeffs(const RingSpec& spec, const RunConfig& cfg) {
  auto ring = spec.build_ring(cfg.degree_cap);
  Ideal I = named_ideal(spec, ring, cfg);
  std::int64_t q = require_q(cfg, ring->characteristic());
  ReductionData red = pick_reduction(spec, ring, I, cfg);
  FrobeniusCoefficients fc = frobenius_coefficients(I, red, q, 1, cfg.confirm);
  ordered_json j;
  j["ideal"] = cfg.ideal_name;
  j["q"] = fc.q;
  j["e0"] = fc.e0;
  j["e1"] = fc.e1;
  j["e2"] = fc.e2;
  j["multiplicity"] = fc.multiplicity;
  j["reduction_number"] = red.r;
  j["v"] = fc.v;
  j["rr_lengths"] = fc.rr_lengths;
  emit(cfg, j.dump(2) + "\n");
  return 0;
}

int cmd_ehk(const RingSpec& spec, const RunConfig& cfg) {
  auto ring = spec.build_ring(cfg.degree_cap);
  Ideal I = named_ideal(spec, ring, cfg);
  ReductionData red = pick_reduction(spec, ring, I, cfg);
  int e_max = cfg.e_max > 0 ? cfg.e_max : default_e_max(ring->characteristic());
  HKReport rep = ehk_tables(I, red, e_max, cfg.n_max, cfg.jobs, cfg.confirm);
  rep.ideal_label = cfg.ideal_name;
  emit(cfg, rep.to_json(cfg.seed));
  if (!cfg.out.empty()) {
    std::string stem = cfg.out;
    if (auto dot = stem.rfind(".json"); dot != std::string::npos) stem.resize(dot);
    for (const auto& [name, csv] : rep.plot_csvs()) {
      std::ofstream f(stem + "." + name + ".csv");
      if (!f) throw input_error("cannot write CSV next to " + cfg.out);
      f << csv;
    }
  }
  return 0;
}

int cmd_check_thm41(const RingSpec& spec, const RunConfig& cfg) {
  auto ring = spec.build_ring(cfg.degree_cap);
  Ideal I = named_ideal(spec, ring, cfg);
  std::int64_t q = require_q(cfg, ring->characteristic());
  ReductionData red = pick_reduction(spec, ring, I, cfg);
  std::int64_t n_max = std::max(cfg.n_max, red.r + 2);
  Thm41Report rep = theorem41_check(I, red, q, n_max, cfg.confirm);
  ordered_json j;
  j["q"] = rep.q;
  j["reduction_number"] = red.r;
  j["residual_e1"] = rep.residual_e1;
  j["residual_e2"] = rep.residual_e2;
  ordered_json rp = ordered_json::array();
  for (auto [n, r] : rep.residual_poly) rp.push_back({{"n", n}, {"residual", r}});
  j["residual_poly"] = rp;
  j["all_zero"] = rep.all_zero;
  emit(cfg, j.dump(2) + "\n");
  if (!rep.all_zero) {
    std::cerr << "check-thm41: nonzero residual at q=" << q << "\n";
    return 1;
  }
  return 0;
}

int cmd_check_ineq(const RingSpec& spec, const RunConfig& cfg) {
  auto ring = spec.build_ring(cfg.degree_cap);
  Ideal I = named_ideal(spec, ring, cfg);
  std::int64_t q = require_q(cfg, ring->characteristic());
  ReductionData red = pick_reduction(spec, ring, I, cfg);
  std::int64_t n = cfg.n > 0 ? cfg.n : red.r;
  if (n < 1) n = 1;
  IneqReport rep = estimates_inequality_check(I, red, q, n, cfg.t_max);
  ordered_json j;
  j["q"] = rep.q;
  j["n"] = rep.n;
  ordered_json sl = ordered_json::array();
  for (auto [t, s] : rep.slack) sl.push_back({{"t", t}, {"slack", s}});
  j["slack"] = sl;
  j["all_nonnegative"] = rep.all_nonnegative;
  emit(cfg, j.dump(2) + "\n");
  if (!rep.all_nonnegative) {
    std::cerr << "check-ineq: negative slack at q=" << q << " n=" << n << "\n";
    return 1;
  }
  return 0;
}

int cmd_search(const RingSpec& spec, const RunConfig& cfg) {
  if (!spec.test_ideal) {
    throw input_error("search: ring spec must assert a test_ideal");
  }
  auto ring = spec.build_ring(cfg.degree_cap);
  Ideal I = named_ideal(spec, ring, cfg);
  Ideal J_star = spec.build_ideal(ring, *spec.test_ideal);
  int e_max = cfg.e_max > 0 ? cfg.e_max : default_e_max(ring->characteristic());
  StarSearchResult res =
      star_refutation_search(I, J_star, 1, e_max, 1, cfg.n_max);
  ordered_json j;
  j["ideal"] = cfg.ideal_name;
  j["test_ideal"] = *spec.test_ideal;
  ordered_json w = ordered_json::array();
  for (const auto& wit : res.witnesses) {
    w.push_back({{"q", wit.q},
                 {"n", wit.n},
                 {"certificate", ring->poly().print(wit.certificate)}});
  }
  j["witnesses"] = w;
  j["complete"] = res.complete;
  j["log"] = res.log;
  emit(cfg, j.dump(2) + "\n");
  return res.complete ? 0 : 3;
}

// Built-in verification suite of known exact facts about the bundled rings.
int cmd_verify_paper(const RingSpec& spec, const RunConfig& cfg) {
  int failures = 0;
  auto check = [&](const std::string& label, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << label << "\n";
    if (!ok) ++failures;
  };

  auto ring = spec.build_ring(cfg.degree_cap);
  if (ring->characteristic() == 2 && ring->poly().nvars() == 3 &&
      spec.ideals.count("m")) {
    Ideal m = spec.build_ideal(ring, "m");
    Ideal m8 = frobenius_power(m, 8);
    auto m8pow = power_chain(m8, 4);
    Ideal colon = ideal_colon(m8pow[4], m8pow[2]);
    Poly w = ring->poly().parse("x^2*y^4*z^13");
    check("x^2*y^4*z^13 in (m^[8])^4 : (m^[8])^2", contains(colon, w));
    check("x^2*y^4*z^13 not in (m^[8])^2", !contains(m8pow[2], w));

    Ideal J = Ideal::parse(ring, {"y", "z"});
    ReductionData red = verify_reduction(m, J);
    check("r_J(m) = 2 for J = (y,z)", red.r == 2);
    for (std::int64_t q : {2, 4, 8}) {
      Ideal mq = frobenius_power(m, q);
      Ideal Jq = frobenius_power(J, q);
      bool eq = ideal_equals(ideal_power(mq, 3),
                             ideal_product(Jq, ideal_power(mq, 2)));
      check("(m^[" + std::to_string(q) + "])^3 = J^[" + std::to_string(q) +
                "](m^[" + std::to_string(q) + "])^2",
            eq);
    }
  } else {
    std::cout << "note: ring is not the char-2 cubic; skipping its assertions\n";
  }

  // RR closure example over F_2[x,y], independent of the input ring.
  {
    auto R2 = QuotientRing::make(2, {"x", "y"}, {});
    Ideal I = Ideal::parse(R2, {"x^4", "x^3*y", "x*y^3", "y^4"});
    RRClosureResult rr = ratliff_rush_closure(I, cfg.confirm);
    Poly w = R2->poly().parse("x^2*y^2");
    check("x^2*y^2 in RR((x^4,x^3y,xy^3,y^4)) over F_2[x,y]",
          contains(rr.closure, w));
    check("x^2*y^2 not in (x^4,x^3y,xy^3,y^4)", !contains(I, w));
  }

  std::cout << (failures == 0 ? "all checks passed\n"
                              : std::to_string(failures) + " check(s) failed\n");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert-Kunz-type invariants of powers of ideals in dimension 2"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string command;
  const std::vector<std::string> names = {
      "gb",     "length",      "hilbert",    "rr",     "reduce", "coeffs",
      "ehk",    "check-thm41", "check-ineq", "search", "verify-paper"};
  for (const auto& name : names) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("ringfile", cfg.ringfile, "ring spec JSON file")->required();
    sub->add_option("--ideal", cfg.ideal_name, "named ideal from the spec");
    sub->add_option("--q", cfg.q, "Frobenius power p^e");
    sub->add_option("--e-max", cfg.e_max, "largest e for q = p^e");
    sub->add_option("--n-max", cfg.n_max, "largest ordinary power n");
    sub->add_option("--n", cfg.n, "fixed power n (check-ineq)");
    sub->add_option("--t-max", cfg.t_max, "largest t (check-ineq)");
    sub->add_option("--seed", cfg.seed, "RNG seed for reduction draws");
    sub->add_option("--confirm", cfg.confirm, "extra RR stabilization confirmations");
    sub->add_option("--degree-cap", cfg.degree_cap, "Groebner degree guard");
    sub->add_option("--jobs", cfg.jobs, "parallel q-columns");
    sub->add_option("--out", cfg.out, "output path (default stdout)");
    sub->callback([&command, name] { command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  try {
    RingSpec spec = RingSpec::from_file(cfg.ringfile);
    if (command == "gb") return cmd_gb(spec, cfg);
    if (command == "length") return cmd_length(spec, cfg);
    if (command == "hilbert") return cmd_hilbert(spec, cfg);
    if (command == "rr") return cmd_rr(spec, cfg);
    if (command == "reduce") return cmd_reduce(spec, cfg);
    if (command == "coeffs") return cmd_coeffs(spec, cfg);
    if (command == "ehk") return cmd_ehk(spec, cfg);
    if (command == "check-thm41") return cmd_check_thm41(spec, cfg);
    if (command == "check-ineq") return cmd_check_ineq(spec, cfg);
    if (command == "search") return cmd_search(spec, cfg);
    if (command == "verify-paper") return cmd_verify_paper(spec, cfg);
    std::cerr << "unknown command\n";
    return 2;
  } catch (const check_failure& e) {
    std::cerr << "mathematical check failed: " << e.what() << "\n";
    return 1;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const resource_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

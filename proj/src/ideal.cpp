#include "hkpow/ideal.hpp"

#include <algorithm>

namespace hkpow {

namespace {

// All monomials of total degree d in n variables, as polynomials.
void monomials_of_degree(const PolyRing& ring, std::int64_t d,
                         std::vector<std::int32_t>& cur, std::size_t i,
                         std::vector<Poly>& out) {
  if (i + 1 == ring.nvars()) {
    cur[i] = static_cast<std::int32_t>(d);
    out.push_back(ring.monomial(1, Monomial(cur)));
    cur[i] = 0;
    return;
  }
  for (std::int64_t k = 0; k <= d; ++k) {
    cur[i] = static_cast<std::int32_t>(k);
    monomials_of_degree(ring, d - k, cur, i + 1, out);
  }
  cur[i] = 0;
}

Poly exact_divide(const PolyRing& ring, Poly h, const Poly& g) {
  if (g.is_zero()) throw input_error("exact_divide by zero");
  std::vector<Term> quot;
  std::int64_t p = ring.characteristic();
  std::int64_t lginv = fp_inv(g.lead().c, p);
  while (!h.is_zero()) {
    if (!mono_divides(g.lead().m, h.lead().m)) {
      throw error("exact_divide: dividend is not a multiple of the divisor");
    }
    std::int64_t c = fp_mul(h.lead().c, lginv, p);
    Monomial m = mono_div(h.lead().m, g.lead().m);
    h = ring.sub(h, ring.mul_term(g, c, m));
    quot.push_back({c, std::move(m)});
  }
  return ring.make(std::move(quot));
}

void check_same_ring(const Ideal& I, const Ideal& J) {
  if (I.ring() != J.ring()) throw input_error("ideals over different rings");
}

// Intersection of two polynomial-ring ideals (given by generator lists that
// already include the relations) via elimination of a fresh leading variable.
std::vector<Poly> preimage_intersection(const QuotientRing& R,
                                        const std::vector<Poly>& A,
                                        const std::vector<Poly>& B) {
  const PolyRing& base = R.poly();
  std::vector<std::string> evars;
  evars.reserve(base.nvars() + 1);
  evars.push_back("@t");
  for (const auto& v : base.vars()) evars.push_back(v);
  PolyRing ext(base.characteristic(), evars, block_elim_order(1));

  auto lift = [&](const Poly& f, bool with_t, bool one_minus_t) {
    // f -> t*f or (1-t)*f in the extended ring
    std::vector<Term> terms;
    for (const auto& tm : f.t) {
      std::vector<std::int32_t> e;
      e.reserve(evars.size());
      e.push_back(0);
      e.insert(e.end(), tm.m.e.begin(), tm.m.e.end());
      if (with_t || one_minus_t) {
        std::vector<std::int32_t> et = e;
        et[0] = 1;
        terms.push_back({one_minus_t ? fp_neg(tm.c, ext.characteristic()) : tm.c,
                         Monomial(std::move(et))});
      }
      if (one_minus_t || (!with_t && !one_minus_t)) {
        terms.push_back({tm.c, Monomial(std::move(e))});
      }
    }
    return ext.make(std::move(terms));
  };

  std::vector<Poly> gens;
  for (const auto& f : A) gens.push_back(lift(f, true, false));
  for (const auto& g : B) gens.push_back(lift(g, false, true));

  GroebnerBasis G = buchberger(ext, gens, R.gb_options());

  std::vector<Poly> out;
  for (const auto& g : G.gens) {
    bool has_t = false;
    for (const auto& tm : g.t) {
      if (tm.m.e[0] > 0) {
        has_t = true;
        break;
      }
    }
    if (has_t) continue;
    std::vector<Term> terms;
    for (const auto& tm : g.t) {
      std::vector<std::int32_t> e(tm.m.e.begin() + 1, tm.m.e.end());
      terms.push_back({tm.c, Monomial(std::move(e))});
    }
    out.push_back(base.make(std::move(terms)));
  }
  return out;
}

std::vector<Poly> with_relations(const Ideal& I) {
  std::vector<Poly> v = I.gens();
  const auto& rel = I.ring()->relations();
  v.insert(v.end(), rel.begin(), rel.end());
  return v;
}

}  // namespace

std::shared_ptr<const QuotientRing> QuotientRing::make(
    std::int64_t p, std::vector<std::string> vars,
    std::vector<std::string> relation_texts, bool assert_cm,
    bool assert_reduced, std::int64_t degree_cap) {
  auto R = std::shared_ptr<QuotientRing>(new QuotientRing());
  R->poly_ = std::make_shared<PolyRing>(p, std::move(vars));
  R->assert_cm_ = assert_cm;
  R->assert_reduced_ = assert_reduced;
  R->degree_cap_ = degree_cap;
  for (const auto& text : relation_texts) {
    Poly f = R->poly_->parse(text);
    if (f.is_zero()) continue;
    R->relations_homogeneous_ =
        R->relations_homogeneous_ && R->poly_->is_homogeneous(f);
    R->relations_.push_back(std::move(f));
  }
  R->relations_gb_ = buchberger(*R->poly_, R->relations_, R->gb_options());
  R->dimension_ =
      krull_dimension(R->relations_gb_, R->poly_->nvars());
  if (R->dimension_ < 0) {
    throw input_error("relations generate the unit ideal");
  }
  return R;
}

Ideal Ideal::make(QuotientRingPtr ring, std::vector<Poly> gens) {
  auto s = std::make_shared<State>();
  // Normalize generators modulo the relations: same ideal of R, and the
  // preimage ideal (gens union Q) is unchanged.
  for (auto& g : gens) {
    Poly r = normal_form(ring->poly(), g, ring->relations_gb());
    if (!r.is_zero()) s->gens.push_back(std::move(r));
  }
  s->ring = std::move(ring);
  Ideal I;
  I.s_ = std::move(s);
  return I;
}

Ideal Ideal::parse(QuotientRingPtr ring, const std::vector<std::string>& texts) {
  std::vector<Poly> gens;
  gens.reserve(texts.size());
  for (const auto& t : texts) gens.push_back(ring->poly().parse(t));
  return make(std::move(ring), std::move(gens));
}

Ideal Ideal::zero(QuotientRingPtr ring) { return make(std::move(ring), {}); }

Ideal Ideal::unit(QuotientRingPtr ring) {
  std::vector<Poly> g{ring->poly().one()};
  return make(std::move(ring), std::move(g));
}

const GroebnerBasis& Ideal::gb() const {
  std::call_once(s_->gb_once, [this] {
    std::vector<Poly> gens = s_->gens;
    const auto& rel = s_->ring->relations();
    gens.insert(gens.end(), rel.begin(), rel.end());
    s_->gb = buchberger(s_->ring->poly(), gens, s_->ring->gb_options());
  });
  return s_->gb;
}

Ideal maximal_ideal(QuotientRingPtr ring) {
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < ring->poly().nvars(); ++i) {
    gens.push_back(ring->poly().variable(i));
  }
  return Ideal::make(std::move(ring), std::move(gens));
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  check_same_ring(I, J);
  std::vector<Poly> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return Ideal::make(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  check_same_ring(I, J);
  const PolyRing& ring = I.ring()->poly();
  std::vector<Poly> prods;
  prods.reserve(I.gens().size() * J.gens().size());
  for (const auto& f : I.gens()) {
    for (const auto& g : J.gens()) {
      prods.push_back(ring.mul(f, g));
    }
  }
  const auto& rel = I.ring()->relations();
  prods.insert(prods.end(), rel.begin(), rel.end());
  GroebnerBasis G = buchberger(ring, prods, I.ring()->gb_options());
  return Ideal::make(I.ring(), G.gens);
}

Ideal ideal_power(const Ideal& I, std::int64_t n) {
  if (n <= 0) return Ideal::unit(I.ring());
  Ideal acc = I;
  for (std::int64_t k = 1; k < n; ++k) acc = ideal_product(acc, I);
  return acc;
}

std::vector<Ideal> power_chain(const Ideal& I, std::int64_t nmax) {
  std::vector<Ideal> powers;
  powers.push_back(Ideal::unit(I.ring()));
  if (nmax >= 1) powers.push_back(I);
  for (std::int64_t k = 2; k <= nmax; ++k) {
    powers.push_back(ideal_product(powers.back(), I));
  }
  return powers;
}

Ideal frobenius_power(const Ideal& I, std::int64_t q) {
  const PolyRing& ring = I.ring()->poly();
  std::vector<Poly> gens;
  gens.reserve(I.gens().size());
  for (const auto& g : I.gens()) gens.push_back(ring.frobenius(g, q));
  if (I.gens().empty()) {
    // still validate q
    ring.frobenius(ring.one(), q);
  }
  return Ideal::make(I.ring(), std::move(gens));
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  check_same_ring(I, J);
  std::vector<Poly> inter =
      preimage_intersection(*I.ring(), with_relations(I), with_relations(J));
  return Ideal::make(I.ring(), std::move(inter));
}

Ideal ideal_colon(const Ideal& I, const Ideal& J) {
  check_same_ring(I, J);
  const QuotientRing& R = *I.ring();
  const PolyRing& ring = R.poly();
  Ideal result = Ideal::unit(I.ring());
  bool first = true;
  for (const auto& graw : J.gens()) {
    Poly g = normal_form(ring, graw, R.relations_gb());
    if (g.is_zero()) continue;  // colon by 0 is the unit ideal
    std::vector<Poly> inter =
        preimage_intersection(R, with_relations(I), {g});
    std::vector<Poly> quots;
    quots.reserve(inter.size());
    for (const auto& h : inter) quots.push_back(exact_divide(ring, h, g));
    Ideal part = Ideal::make(I.ring(), std::move(quots));
    result = first ? part : ideal_intersection(result, part);
    first = false;
  }
  return result;
}

bool ideal_equals(const Ideal& I, const Ideal& J) {
  check_same_ring(I, J);
  const auto& a = I.gb().gens;
  const auto& b = J.gb().gens;
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

bool contains(const Ideal& I, const Poly& f) {
  return normal_form(I.ring()->poly(), f, I.gb()).is_zero();
}

bool ideal_subset(const Ideal& I, const Ideal& J) {
  check_same_ring(I, J);
  for (const auto& g : I.gens()) {
    if (!contains(J, g)) return false;
  }
  return true;
}

bool is_unit_ideal(const Ideal& I) {
  const auto& g = I.gb().gens;
  return g.size() == 1 && g.front().lead().m.is_one();
}

bool is_m_primary(const Ideal& I) { return is_zero_dimensional(I.gb()); }

std::int64_t colength(const Ideal& I) {
  std::call_once(I.s_->len_once, [&] {
    const GroebnerBasis& G = I.gb();
    if (!is_zero_dimensional(G)) {
      throw input_error("colength: quotient is not Artinian");
    }
    auto cnt = standard_monomial_count(G);
    std::int64_t L = *cnt;

    bool homogeneous = I.ring()->relations_homogeneous();
    const PolyRing& ring = I.ring()->poly();
    for (const auto& g : I.gens()) {
      homogeneous = homogeneous && ring.is_homogeneous(g);
    }
    if (!homogeneous && L > 0) {
      // Support-at-origin validation. Truncate by m^D: once the count of
      // I + m^D stops changing, m^D <= I + m^(D+1) and Nakayama forces
      // m^D into I at the origin, so the stabilized count is the honest
      // local length. It matches the graded count exactly when the
      // support is concentrated at the origin.
      auto trunc_count = [&](std::int64_t D) {
        std::vector<Poly> gens = I.gens();
        std::vector<std::int32_t> cur(ring.nvars(), 0);
        monomials_of_degree(ring, D, cur, 0, gens);
        const auto& rel = I.ring()->relations();
        gens.insert(gens.end(), rel.begin(), rel.end());
        auto c = standard_monomial_count(
            buchberger(ring, gens, I.ring()->gb_options()));
        return *c;
      };
      // The staircase corners bound the graded socle degree; start there.
      std::int64_t D = 1;
      for (std::size_t v = 0; v < ring.nvars(); ++v) {
        std::int64_t best = 0;
        for (const auto& g : G.gens) {
          const Monomial& lm = g.lead().m;
          if (lm.e[v] > 0 && lm.e[v] == lm.deg) {
            best = best ? std::min<std::int64_t>(best, lm.e[v]) : lm.e[v];
          }
        }
        D += best > 0 ? best - 1 : 0;
      }
      std::int64_t local = -1;
      for (int step = 0; step < 40; ++step) {
        std::int64_t c1 = trunc_count(D), c2 = trunc_count(D + 1);
        if (c1 == c2) {
          local = c1;
          break;
        }
        D += std::max<std::int64_t>(D, 1);
      }
      if (local < 0) {
        throw resource_error("colength: truncation did not stabilize");
      }
      if (local != L) {
        throw input_error(
            "colength: support is not concentrated at the origin (graded "
            "count " +
            std::to_string(L) + " vs local length " + std::to_string(local) +
            ")");
      }
    }
    I.s_->len = L;
  });
  return *I.s_->len;
}

}  // namespace hkpow

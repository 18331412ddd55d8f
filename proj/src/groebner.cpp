#include "hkpow/groebner.hpp"

#include <algorithm>
#include <cstdlib>

namespace hkpow {

namespace {

struct SugarPoly {
  Poly f;  // monic
  std::int64_t sugar;
};

struct Pair {
  int i, j;
  Monomial lcm;
  std::int64_t sugar;
};

std::int64_t pair_sugar(const SugarPoly& a, const SugarPoly& b,
                        const Monomial& lcm) {
  std::int64_t sa = a.sugar + (lcm.deg - a.f.lead().m.deg);
  std::int64_t sb = b.sugar + (lcm.deg - b.f.lead().m.deg);
  return std::max(sa, sb);
}

// Full reduction of f modulo basis, tracking the sugar degree of the result.
SugarPoly reduce_full(const PolyRing& ring, Poly work, std::int64_t sugar,
                      const std::vector<SugarPoly>& basis,
                      std::int64_t degree_cap) {
  Poly rem;
  while (!work.is_zero()) {
    if (work.lead().m.deg > degree_cap) {
      throw resource_error(
          "degree cap " + std::to_string(degree_cap) +
          " exceeded during reduction (degree " +
          std::to_string(work.lead().m.deg) + ")");
    }
    const Monomial& lm = work.lead().m;
    const SugarPoly* red = nullptr;
    for (const auto& g : basis) {
      if (mono_divides(g.f.lead().m, lm)) {
        red = &g;
        break;
      }
    }
    if (red) {
      Monomial quot = mono_div(lm, red->f.lead().m);
      sugar = std::max(sugar, red->sugar + quot.deg);
      work = ring.sub(work, ring.mul_term(red->f, work.lead().c, quot));
    } else {
      rem.t.push_back(work.t.front());
      work.t.erase(work.t.begin());
    }
  }
  return {std::move(rem), sugar};
}

// Gebauer-Moeller pair update when basis element t is appended.
void update_pairs(const PolyRing& ring, std::vector<Pair>& P,
                  const std::vector<SugarPoly>& G, int t) {
  const Monomial& lmh = G[t].f.lead().m;

  std::vector<Pair> C;
  C.reserve(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) {
    Monomial l = mono_lcm(G[i].f.lead().m, lmh);
    std::int64_t s = pair_sugar(G[i], G[t], l);
    C.push_back({i, t, std::move(l), s});
  }

  std::vector<Pair> D;
  for (std::size_t k = 0; k < C.size(); ++k) {
    const Pair& c = C[k];
    bool coprime = mono_coprime(G[c.i].f.lead().m, lmh);
    bool dominated = false;
    if (!coprime) {
      for (std::size_t l = k + 1; l < C.size() && !dominated; ++l) {
        if (mono_divides(C[l].lcm, c.lcm) && C[l].lcm != c.lcm) dominated = true;
      }
      for (const auto& d : D) {
        if (mono_divides(d.lcm, c.lcm)) {
          dominated = true;
          break;
        }
      }
    }
    if (coprime || !dominated) D.push_back(c);
  }

  std::vector<Pair> E;
  for (auto& d : D) {
    if (!mono_coprime(G[d.i].f.lead().m, lmh)) E.push_back(std::move(d));
  }

  std::vector<Pair> keep;
  keep.reserve(P.size() + E.size());
  for (auto& p : P) {
    const Monomial& li = G[p.i].f.lead().m;
    const Monomial& lj = G[p.j].f.lead().m;
    if (!mono_divides(lmh, p.lcm) || mono_lcm(li, lmh) == p.lcm ||
        mono_lcm(lj, lmh) == p.lcm) {
      keep.push_back(std::move(p));
    }
  }
  for (auto& e : E) keep.push_back(std::move(e));
  P = std::move(keep);
  (void)ring;
}

std::size_t select_pair(const PolyRing& ring, const std::vector<Pair>& P) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < P.size(); ++k) {
    if (P[k].sugar < P[best].sugar ||
        (P[k].sugar == P[best].sugar &&
         ring.cmp(P[k].lcm, P[best].lcm) < 0)) {
      best = k;
    }
  }
  return best;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  if (a != 0 && b > (std::int64_t{1} << 60) / a) {
    throw resource_error("standard monomial count overflows");
  }
  return a * b;
}

}  // namespace

Poly normal_form(const PolyRing& ring, const Poly& f, const GroebnerBasis& G) {
  std::vector<SugarPoly> basis;
  basis.reserve(G.gens.size());
  for (const auto& g : G.gens) basis.push_back({g, g.max_degree()});
  BuchbergerOptions opts;
  return reduce_full(ring, f, f.max_degree(), basis,
                     std::max<std::int64_t>(opts.degree_cap, f.max_degree()))
      .f;
}

GroebnerBasis buchberger(const PolyRing& ring, const std::vector<Poly>& gens,
                         const BuchbergerOptions& opts) {
  std::vector<SugarPoly> G;
  std::vector<Pair> P;

  auto post = [&](SugarPoly h) {
    h.f = ring.monic(h.f);
    G.push_back(std::move(h));
    update_pairs(ring, P, G, static_cast<int>(G.size()) - 1);
  };

  for (const auto& f : gens) {
    if (f.is_zero()) continue;
    SugarPoly r = reduce_full(ring, f, f.max_degree(), G, opts.degree_cap);
    if (!r.f.is_zero()) post(std::move(r));
  }

  while (!P.empty()) {
    std::size_t k = select_pair(ring, P);
    Pair p = std::move(P[k]);
    P.erase(P.begin() + static_cast<std::ptrdiff_t>(k));
    if (p.lcm.deg > opts.degree_cap) {
      throw resource_error("degree cap " + std::to_string(opts.degree_cap) +
                           " exceeded by S-pair of degree " +
                           std::to_string(p.lcm.deg));
    }
    const Poly& fi = G[p.i].f;
    const Poly& fj = G[p.j].f;
    Poly s = ring.sub(ring.mul_term(fi, 1, mono_div(p.lcm, fi.lead().m)),
                      ring.mul_term(fj, 1, mono_div(p.lcm, fj.lead().m)));
    SugarPoly r = reduce_full(ring, std::move(s), p.sugar, G, opts.degree_cap);
    if (!r.f.is_zero()) post(std::move(r));
  }

  // minimalize: drop generators whose leading monomial is divisible by
  // another's
  std::vector<Poly> min;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = G[i].f.lead().m;
      const Monomial& mj = G[j].f.lead().m;
      if (mono_divides(mj, mi) && (mi != mj || j < i)) redundant = true;
    }
    if (!redundant) min.push_back(G[i].f);
  }

  // interreduce tails
  for (std::size_t i = 0; i < min.size(); ++i) {
    std::vector<SugarPoly> others;
    for (std::size_t j = 0; j < min.size(); ++j) {
      if (j != i) others.push_back({min[j], min[j].max_degree()});
    }
    min[i] = ring.monic(
        reduce_full(ring, min[i], min[i].max_degree(), others, opts.degree_cap)
            .f);
  }

  std::sort(min.begin(), min.end(), [&](const Poly& a, const Poly& b) {
    return ring.cmp(a.lead().m, b.lead().m) < 0;
  });

  return {std::move(min), ring.order(), true};
}

bool is_zero_dimensional(const GroebnerBasis& G) {
  if (G.gens.empty()) return false;
  std::size_t n = G.gens.front().lead().m.nvars();
  if (n == 0) return true;
  for (const auto& g : G.gens) {
    if (g.lead().m.is_one()) return true;  // unit ideal
  }
  for (std::size_t v = 0; v < n; ++v) {
    bool found = false;
    for (const auto& g : G.gens) {
      const Monomial& m = g.lead().m;
      if (m.e[v] > 0 && m.e[v] == m.deg) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace {

std::int64_t count_dfs(const std::vector<const Monomial*>& active,
                       const std::vector<std::int32_t>& bound, std::size_t i) {
  std::size_t n = bound.size();
  if (active.empty()) {
    std::int64_t prod = 1;
    for (std::size_t j = i; j < n; ++j) prod = checked_mul(prod, bound[j]);
    return prod;
  }
  if (i == n) return 0;  // some leading monomial divides the chosen point

  std::vector<const Monomial*> sorted = active;
  std::sort(sorted.begin(), sorted.end(),
            [i](const Monomial* a, const Monomial* b) { return a->e[i] < b->e[i]; });

  std::int64_t total = 0;
  std::vector<const Monomial*> cur;
  std::size_t idx = 0;
  std::int32_t a = 0;
  while (a < bound[i]) {
    while (idx < sorted.size() && sorted[idx]->e[i] <= a) cur.push_back(sorted[idx++]);
    // the active set is constant until the next threshold
    std::int32_t next = bound[i];
    if (idx < sorted.size()) next = std::min(next, sorted[idx]->e[i]);
    std::int64_t reps = next - a;
    total += checked_mul(reps, count_dfs(cur, bound, i + 1));
    a = next;
  }
  return total;
}

}  // namespace

std::optional<std::int64_t> standard_monomial_count(const GroebnerBasis& G) {
  if (!G.reduced) throw input_error("standard_monomial_count requires a reduced basis");
  if (G.gens.empty()) return std::nullopt;  // zero ideal in >=0 vars
  std::size_t n = G.gens.front().lead().m.nvars();
  for (const auto& g : G.gens) {
    if (g.lead().m.is_one()) return 0;
  }
  if (n == 0) return 1;
  std::vector<std::int32_t> bound(n, -1);
  for (const auto& g : G.gens) {
    const Monomial& m = g.lead().m;
    for (std::size_t v = 0; v < n; ++v) {
      if (m.e[v] > 0 && m.e[v] == m.deg) {
        if (bound[v] < 0 || m.e[v] < bound[v]) bound[v] = m.e[v];
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (bound[v] < 0) return std::nullopt;
  }
  std::vector<const Monomial*> lms;
  lms.reserve(G.gens.size());
  for (const auto& g : G.gens) lms.push_back(&g.lead().m);
  return count_dfs(lms, bound, 0);
}

int krull_dimension(const GroebnerBasis& G, std::size_t n) {
  if (G.gens.empty()) return static_cast<int>(n);
  if (n > 25) throw resource_error("krull_dimension: too many variables");
  int best = -1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const auto& g : G.gens) {
      const Monomial& m = g.lead().m;
      bool inside = true;
      for (std::size_t v = 0; v < n && inside; ++v) {
        if (m.e[v] > 0 && !(mask & (1u << v))) inside = false;
      }
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

}  // namespace hkpow

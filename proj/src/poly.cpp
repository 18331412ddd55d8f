#include "hkpow/poly.hpp"

#include <algorithm>

namespace hkpow {

std::int64_t Poly::max_degree() const {
  std::int64_t d = 0;
  for (const auto& tm : t) d = std::max(d, tm.m.deg);
  return d;
}

bool Poly::operator==(const Poly& o) const {
  if (t.size() != o.t.size()) return false;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].c != o.t[i].c || t[i].m != o.t[i].m) return false;
  }
  return true;
}

PolyRing::PolyRing(std::int64_t p, std::vector<std::string> vars,
                   MonomialOrder ord)
    : p_(p), vars_(std::move(vars)), ord_(ord) {
  if (p < 2 || p > (std::int64_t{1} << 31) || !is_prime(p)) {
    throw input_error("characteristic must be a prime <= 2^31, got " +
                      std::to_string(p));
  }
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].empty()) throw input_error("empty variable name");
    for (std::size_t j = i + 1; j < vars_.size(); ++j) {
      if (vars_[i] == vars_[j]) {
        throw input_error("duplicate variable name: " + vars_[i]);
      }
    }
  }
}

Poly PolyRing::one() const { return constant(1); }

Poly PolyRing::constant(std::int64_t c) const {
  c = fp_reduce(c, p_);
  if (c == 0) return {};
  Poly f;
  f.t.push_back({c, mono_one(nvars())});
  return f;
}

Poly PolyRing::monomial(std::int64_t c, Monomial m) const {
  c = fp_reduce(c, p_);
  if (c == 0) return {};
  if (m.nvars() != nvars()) throw input_error("monomial over wrong ring");
  Poly f;
  f.t.push_back({c, std::move(m)});
  return f;
}

Poly PolyRing::variable(std::size_t i) const {
  return monomial(1, mono_var(nvars(), i));
}

Poly PolyRing::make(std::vector<Term> terms) const {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return cmp(a.m, b.m) > 0;
  });
  Poly f;
  f.t.reserve(terms.size());
  for (auto& tm : terms) {
    std::int64_t c = fp_reduce(tm.c, p_);
    if (!f.t.empty() && f.t.back().m == tm.m) {
      f.t.back().c = fp_add(f.t.back().c, c, p_);
      if (f.t.back().c == 0) f.t.pop_back();
    } else if (c != 0) {
      f.t.push_back({c, std::move(tm.m)});
    }
  }
  return f;
}

Poly PolyRing::add(const Poly& f, const Poly& g) const {
  Poly r;
  r.t.reserve(f.t.size() + g.t.size());
  std::size_t i = 0, j = 0;
  while (i < f.t.size() && j < g.t.size()) {
    int c = cmp(f.t[i].m, g.t[j].m);
    if (c > 0) {
      r.t.push_back(f.t[i++]);
    } else if (c < 0) {
      r.t.push_back(g.t[j++]);
    } else {
      std::int64_t s = fp_add(f.t[i].c, g.t[j].c, p_);
      if (s != 0) r.t.push_back({s, f.t[i].m});
      ++i;
      ++j;
    }
  }
  for (; i < f.t.size(); ++i) r.t.push_back(f.t[i]);
  for (; j < g.t.size(); ++j) r.t.push_back(g.t[j]);
  return r;
}

Poly PolyRing::neg(const Poly& f) const {
  Poly r = f;
  for (auto& tm : r.t) tm.c = fp_neg(tm.c, p_);
  return r;
}

Poly PolyRing::sub(const Poly& f, const Poly& g) const { return add(f, neg(g)); }

Poly PolyRing::scale(const Poly& f, std::int64_t c) const {
  c = fp_reduce(c, p_);
  if (c == 0) return {};
  Poly r = f;
  for (auto& tm : r.t) tm.c = fp_mul(tm.c, c, p_);
  return r;
}

Poly PolyRing::mul_term(const Poly& f, std::int64_t c, const Monomial& m) const {
  c = fp_reduce(c, p_);
  if (c == 0) return {};
  Poly r;
  r.t.reserve(f.t.size());
  for (const auto& tm : f.t) {
    r.t.push_back({fp_mul(tm.c, c, p_), mono_mul(tm.m, m)});
  }
  return r;
}

Poly PolyRing::mul(const Poly& f, const Poly& g) const {
  if (f.is_zero() || g.is_zero()) return {};
  const Poly& a = f.t.size() <= g.t.size() ? f : g;
  const Poly& b = f.t.size() <= g.t.size() ? g : f;
  Poly acc;
  for (const auto& tm : a.t) {
    acc = add(acc, mul_term(b, tm.c, tm.m));
  }
  return acc;
}

Poly PolyRing::pow(const Poly& f, std::int64_t n) const {
  if (n < 0) throw input_error("negative polynomial power");
  Poly r = one();
  Poly base = f;
  while (n > 0) {
    if (n & 1) r = mul(r, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return r;
}

Poly PolyRing::frobenius(const Poly& f, std::int64_t q) const {
  // q must be a power of p; then (sum c_i m_i)^q = sum c_i m_i^q since
  // c^p = c in F_p.
  std::int64_t t = q;
  while (t > 1) {
    if (t % p_ != 0) {
      throw input_error(std::to_string(q) + " is not a power of " +
                        std::to_string(p_));
    }
    t /= p_;
  }
  if (t != 1) throw input_error("frobenius exponent must be positive");
  Poly r = f;
  for (auto& tm : r.t) tm.m = mono_pow(tm.m, q);
  // term order is preserved: m -> m^q is order-compatible for all our orders
  return r;
}

Poly PolyRing::monic(const Poly& f) const {
  if (f.is_zero() || f.lead().c == 1) return f;
  return scale(f, fp_inv(f.lead().c, p_));
}

bool PolyRing::is_homogeneous(const Poly& f) const {
  for (const auto& tm : f.t) {
    if (tm.m.deg != f.t.front().m.deg) return false;
  }
  return true;
}

}  // namespace hkpow

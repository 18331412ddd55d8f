#include <cctype>
#include <sstream>

#include "hkpow/poly.hpp"

namespace hkpow {

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw input_error("syntax error at position " + std::to_string(pos) + ": " + what);
  }
  std::int64_t integer() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
      fail("expected integer");
    }
    std::int64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > (std::int64_t{1} << 62)) fail("integer literal too large");
      ++pos;
    }
    return v;
  }
};

}  // namespace

Poly PolyRing::parse(const std::string& text) const {
  Lexer lx{text};
  std::vector<Term> terms;

  auto match_var = [&]() -> int {
    // longest variable-name match at the current position
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const std::string& v = vars_[i];
      if (v.size() > best_len && lx.s.compare(lx.pos, v.size(), v) == 0) {
        best = static_cast<int>(i);
        best_len = v.size();
      }
    }
    if (best >= 0) lx.pos += best_len;
    return best;
  };

  bool first = true;
  while (true) {
    char c = lx.peek();
    if (c == '\0') {
      if (first) lx.fail("empty input");
      break;
    }
    std::int64_t sign = 1;
    if (c == '+' || c == '-') {
      if (c == '-') sign = -1;
      ++lx.pos;
    } else if (!first) {
      lx.fail("expected '+' or '-'");
    }
    first = false;

    // one term: product of integer and variable-power factors
    std::int64_t coeff = fp_reduce(sign, p_);
    Monomial mono = mono_one(nvars());
    bool any_factor = false;
    while (true) {
      char f = lx.peek();
      if (f == '*') {
        if (!any_factor) lx.fail("unexpected '*'");
        ++lx.pos;
        f = lx.peek();
      }
      if (std::isdigit(static_cast<unsigned char>(f))) {
        coeff = fp_mul(coeff, fp_reduce(lx.integer(), p_), p_);
        any_factor = true;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(f)) || f == '_') {
        std::size_t at = lx.pos;
        int vi = match_var();
        if (vi < 0) {
          lx.pos = at;
          lx.fail("unknown variable");
        }
        std::int64_t k = 1;
        if (lx.peek() == '^') {
          ++lx.pos;
          k = lx.integer();
        }
        mono = mono_mul(mono, mono_pow(mono_var(nvars(), static_cast<std::size_t>(vi)), k));
        any_factor = true;
        continue;
      }
      break;
    }
    if (!any_factor) lx.fail("expected term");
    terms.push_back({coeff, std::move(mono)});
  }
  return make(std::move(terms));
}

std::string PolyRing::print(const Monomial& m) const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (m.e[i] == 0) continue;
    if (any) os << "*";
    os << vars_[i];
    if (m.e[i] > 1) os << "^" << m.e[i];
    any = true;
  }
  if (!any) os << "1";
  return os.str();
}

std::string PolyRing::print(const Poly& f) const {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& tm : f.t) {
    if (!first) os << "+";
    first = false;
    if (tm.m.is_one()) {
      os << tm.c;
    } else if (tm.c == 1) {
      os << print(tm.m);
    } else {
      os << tm.c << "*" << print(tm.m);
    }
  }
  return os.str();
}

}  // namespace hkpow

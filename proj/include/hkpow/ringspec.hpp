#ifndef HKPOW_RINGSPEC_HPP
#define HKPOW_RINGSPEC_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hkpow/ideal.hpp"

namespace hkpow {

// Input document describing a ring and a dictionary of named ideals. The
// whole file parses (unknown keys rejected) before any algebra runs.
struct RingSpec {
  std::int64_t p = 0;
  std::vector<std::string> vars;
  std::vector<std::string> relations;
  bool assert_cm = false;
  bool assert_reduced = false;
  std::map<std::string, std::vector<std::string>> ideals;
  std::optional<std::string> test_ideal;  // name; asserts tau(R)
  std::optional<std::string> reduction;   // name of a user-supplied J

  static RingSpec from_json_text(const std::string& text);
  static RingSpec from_file(const std::string& path);

  QuotientRingPtr build_ring(std::int64_t degree_cap = 4096) const;
  Ideal build_ideal(const QuotientRingPtr& ring, const std::string& name) const;
};

}  // namespace hkpow

#endif

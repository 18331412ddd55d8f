#ifndef HKPOW_ERROR_HPP
#define HKPOW_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hkpow {

// Exit-code contract: 1 = mathematical check failure, 2 = input error,
// 3 = resource cap hit.
struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

struct input_error : error {
  explicit input_error(const std::string& msg) : error(msg) {}
};

struct resource_error : error {
  explicit resource_error(const std::string& msg) : error(msg) {}
};

struct check_failure : error {
  explicit check_failure(const std::string& msg) : error(msg) {}
};

}  // namespace hkpow

#endif

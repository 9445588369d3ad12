#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace braces {

// Thrown when an exhaustive computation would exceed its configured size cap.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Limits {
  std::uint64_t max_automorphisms = 1'000'000;
  std::uint64_t max_homomorphisms = 1'000'000;
  std::uint32_t max_table_check_order = 10'000;
  std::uint32_t max_rule_check_order = 3'000;
  std::uint32_t max_subgroup_order = 100;
  std::uint32_t max_enumeration_order = 200;
  std::uint32_t max_ybe_order = 256;

  // Defaults, with every order-based guard replaced by BRACE_GUARD_MAX when
  // that variable holds a positive integer.
  static Limits from_env();
};

inline void require_guard(bool ok, const std::string& what) {
  if (!ok) throw GuardExceeded(what);
}

}  // namespace braces

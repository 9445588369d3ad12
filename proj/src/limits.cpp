#include "braces/limits.hpp"

#include <cstdlib>
#include <string>

namespace braces {

Limits Limits::from_env() {
  Limits limits;
  const char* raw = std::getenv("BRACE_GUARD_MAX");
  if (raw == nullptr) return limits;
  try {
    const unsigned long long v = std::stoull(raw);
    if (v == 0 || v > 0xffffffffULL) return limits;
    const auto order = static_cast<std::uint32_t>(v);
    limits.max_table_check_order = order;
    limits.max_rule_check_order = order;
    limits.max_subgroup_order = order;
    limits.max_enumeration_order = order;
    limits.max_ybe_order = order;
  } catch (const std::exception&) {
    // Unparsable values leave the defaults in place.
  }
  return limits;
}

}  // namespace braces

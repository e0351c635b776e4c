#include "evenpoint/limits.hpp"

#include <cstdlib>
#include <string>

namespace evenpoint {

Limits Limits::from_environment() {
  Limits limits;
  if (const char* raw = std::getenv("EVENPOINT_MAX_JACOBIAN"); raw != nullptr && *raw != '\0') {
    try {
      const auto value = std::stoull(raw);
      if (value > 0) {
        limits.max_jacobian_order = value;
        limits.max_jacobian_field_order = 1u << 20;
        limits.max_jacobian_genus = 8;
      }
    } catch (const std::exception&) {
      // Malformed values leave the default in place.
    }
  }
  return limits;
}

}  // namespace evenpoint

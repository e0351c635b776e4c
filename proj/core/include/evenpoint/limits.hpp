#pragma once

#include <cstdint>

namespace evenpoint {

// Caps on enumeration sizes.
struct Limits {
  std::uint64_t max_field_order = 121;
  std::uint64_t max_jacobian_order = 100000;
  int max_jacobian_genus = 3;
  std::uint64_t max_jacobian_field_order = 9;
  // Largest q^d for which monic polynomials of degree d are enumerated.
  std::uint64_t max_enumeration = 20000000;

  /// Defaults, with EVENPOINT_MAX_JACOBIAN applied when set.
  static Limits from_environment();
};

}  // namespace evenpoint

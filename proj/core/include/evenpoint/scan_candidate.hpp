#pragma once

#include <vector>

namespace evenpoint {

/// A square class offered to the Sing(Y) scan, together with the places
/// where it has odd valuation (in enumeration order).
template <class SquareClass, class Place>
struct ScanCandidate {
  SquareClass cls;
  std::vector<Place> odd;
};

}  // namespace evenpoint

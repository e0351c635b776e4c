#pragma once

#include <cstdint>
#include <optional>

namespace evenpoint {

// Square roots in any finite field of odd order Q.
//
// `Field` provides: Elem, one(), is_zero(e), equal(a, b), mul(a, b),
// pow(a, std::uint64_t), order() (Q as uint64) and nonresidue().
// Returns one of the two roots; callers pick the canonical one.
template <class Field>
std::optional<typename Field::Elem> tonelli_shanks(const Field& field,
                                                   const typename Field::Elem& a) {
  using Elem = typename Field::Elem;
  if (field.is_zero(a)) return a;

  const std::uint64_t order_minus_one = field.order() - 1;
  const Elem one = field.one();
  if (!field.equal(field.pow(a, order_minus_one / 2), one)) return std::nullopt;

  std::uint64_t odd = order_minus_one;
  int two_adicity = 0;
  while ((odd & 1u) == 0) {
    odd >>= 1;
    ++two_adicity;
  }

  Elem c = field.pow(field.nonresidue(), odd);
  Elem x = field.pow(a, (odd + 1) / 2);
  Elem b = field.pow(a, odd);
  int m = two_adicity;
  while (!field.equal(b, one)) {
    int i = 0;
    Elem probe = b;
    while (!field.equal(probe, one)) {
      probe = field.mul(probe, probe);
      ++i;
    }
    Elem w = c;
    for (int k = 0; k < m - i - 1; ++k) w = field.mul(w, w);
    x = field.mul(x, w);
    c = field.mul(w, w);
    b = field.mul(b, c);
    m = i;
  }
  return x;
}

}  // namespace evenpoint

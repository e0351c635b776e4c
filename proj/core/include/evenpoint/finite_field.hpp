#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evenpoint/limits.hpp"

namespace evenpoint {

/// Element of F_q. The value is an index into the field tables: the
/// coordinate vector (c0, ..., c_{n-1}) in the power basis read as a base-p
/// number with c0 most significant, so index order is lexicographic order
/// on coordinates.
struct Fe {
  std::uint32_t v = 0;
  friend auto operator<=>(const Fe&, const Fe&) = default;
};

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// F_q = F_p[u]/(modulus) for an odd prime p. Arithmetic is table driven;
/// q is capped by Limits::max_field_order.
class FiniteField {
 public:
  /// `modulus` is the monic defining polynomial over F_p, coefficients low
  /// to high (size n+1). Empty selects the lexicographically smallest monic
  /// irreducible of degree n (constant term varying fastest).
  static FieldPtr create(std::uint32_t p, int n = 1, std::vector<std::uint32_t> modulus = {},
                         const Limits& limits = Limits{});

  /// Builds F_q from its order q = p^n with the default modulus.
  static FieldPtr of_order(std::uint64_t q, const Limits& limits = Limits{});

  std::uint32_t characteristic() const { return p_; }
  int degree() const { return n_; }
  std::uint32_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  bool is_prime_field() const { return n_ == 1; }

  Fe zero() const { return Fe{0}; }
  Fe one() const { return one_; }
  /// Image of the integer k (reduced mod p) in the prime subfield.
  Fe from_int(long long k) const;
  Fe from_coords(std::span<const std::uint32_t> coords) const;
  std::vector<std::uint32_t> coords(Fe a) const;
  /// The element with table index `index` (0 <= index < q).
  Fe element(std::uint32_t index) const { return Fe{index}; }

  Fe add(Fe a, Fe b) const { return Fe{add_[a.v * q_ + b.v]}; }
  Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }
  Fe neg(Fe a) const { return Fe{neg_[a.v]}; }
  Fe mul(Fe a, Fe b) const { return Fe{mul_[a.v * q_ + b.v]}; }
  /// Throws MathError("zero divisor") for b = 0.
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
  Fe inv(Fe a) const;
  Fe pow(Fe a, std::uint64_t e) const;

  /// +1 if a is a nonzero square, -1 otherwise; a^((q-1)/2).
  /// Throws MathError for a = 0.
  int quadratic_character(Fe a) const;
  /// The lexicographically smaller root, or nullopt for a non-square.
  std::optional<Fe> sqrt(Fe a) const;
  /// ζ: the first non-square in lexicographic order.
  Fe canonical_nonsquare() const { return zeta_; }

  /// Literal form: decimal residue for prime fields, `[c0,c1,...]` otherwise.
  std::string format(Fe a) const;
  /// Parses a literal; decimal literals are reduced mod p (negatives allowed).
  Fe parse(std::string_view text) const;

  // Tonelli–Shanks adaptor interface.
  using Elem = Fe;
  bool is_zero(Fe a) const { return a.v == 0; }
  bool equal(Fe a, Fe b) const { return a == b; }
  Fe nonresidue() const { return zeta_; }

 private:
  FiniteField() = default;

  std::uint32_t p_ = 0;
  int n_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Fe one_;
  Fe zeta_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::int8_t> chi_;
};

bool is_prime(std::uint64_t n);

}  // namespace evenpoint

#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "evenpoint/poly.hpp"

namespace evenpoint {

/// F_q[x]/(π) for a monic irreducible π, elements are reduced polynomials.
class ResidueField {
 public:
  using Elem = Poly;

  ResidueField(const PolyRing& ring, Poly pi);

  const PolyRing& ring() const { return *ring_; }
  const Poly& modulus() const { return pi_; }
  int degree() const { return pi_.degree(); }
  /// q^deg π.
  std::uint64_t order() const { return order_; }

  Poly reduce(const Poly& a) const { return ring_->mod(a, pi_); }
  Poly one() const { return ring_->one(); }
  bool is_zero(const Poly& a) const { return a.is_zero(); }
  bool equal(const Poly& a, const Poly& b) const { return a == b; }
  Poly add(const Poly& a, const Poly& b) const { return ring_->add(a, b); }
  Poly sub(const Poly& a, const Poly& b) const { return ring_->sub(a, b); }
  Poly neg(const Poly& a) const { return ring_->neg(a); }
  Poly mul(const Poly& a, const Poly& b) const { return ring_->mod(ring_->mul(a, b), pi_); }
  /// Throws MathError("zero divisor") for a ≡ 0.
  Poly inv(const Poly& a) const;
  Poly pow(const Poly& a, std::uint64_t e) const;
  /// Norm to F_q: the product of the Frobenius conjugates.
  Fe norm(const Poly& a) const;

  /// ±1; throws MathError for a ≡ 0.
  int chi(const Poly& a) const;
  /// The root whose coefficient vector (constant term first) is smaller.
  std::optional<Poly> sqrt(const Poly& a) const;
  /// First non-square in enumeration order.
  Poly nonresidue() const;

 private:
  const PolyRing* ring_;
  Poly pi_;
  std::uint64_t order_;
};

/// Coefficient-vector order (constant term compared first) used to choose
/// canonical square roots in residue fields.
bool coefficient_less(const Poly& a, const Poly& b);

/// L = E(√w) for a residue field E and a non-square w ∈ E. Elements are
/// pairs (a, b) meaning a + b·√w.
class QuadraticExtension {
 public:
  using Elem = std::pair<Poly, Poly>;

  QuadraticExtension(const ResidueField& base, Poly w);

  const ResidueField& base() const { return *base_; }
  std::uint64_t order() const { return base_->order() * base_->order(); }

  Elem one() const { return {base_->one(), Poly{}}; }
  bool is_zero(const Elem& a) const { return a.first.is_zero() && a.second.is_zero(); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& a, std::uint64_t e) const;
  /// a^2 - w b^2 ∈ E.
  Poly norm(const Elem& a) const;
  /// χ_L(z) = χ_E(N z).
  int chi(const Elem& a) const;
  std::optional<Elem> sqrt(const Elem& a) const;
  Elem nonresidue() const { return nonresidue_; }

 private:
  const ResidueField* base_;
  Poly w_;
  Elem nonresidue_;
};

}  // namespace evenpoint

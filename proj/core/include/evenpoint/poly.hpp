#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <utility>
#include <vector>

#include "evenpoint/finite_field.hpp"

namespace evenpoint {

/// Dense univariate polynomial over F_q, coefficients low to high. The
/// highest stored coefficient is nonzero; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Fe> coeffs) : c_(std::move(coeffs)) { trim(); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Fe coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Fe{}; }
  Fe lead() const { return c_.empty() ? Fe{} : c_.back(); }
  const std::vector<Fe>& coeffs() const { return c_; }

  friend bool operator==(const Poly&, const Poly&) = default;
  /// Enumeration order: degree first, then coefficients from the top down,
  /// so the constant term varies fastest.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

 private:
  void trim() {
    while (!c_.empty() && c_.back().v == 0) c_.pop_back();
  }
  std::vector<Fe> c_;
};

struct Factorization {
  Fe unit;
  /// Monic irreducible factors with multiplicities, sorted by Poly order.
  std::vector<std::pair<Poly, int>> factors;
};

/// A square class of F_q(t)* written ζ^e · m with m monic squarefree.
struct SquarefreePart {
  bool zeta = false;
  Poly m;
  friend bool operator==(const SquarefreePart&, const SquarefreePart&) = default;
};

/// F_q[var]. Owns the field pointer and a per-degree cache of monic
/// irreducibles. Equal-degree factorization draws from a PRNG seeded with
/// `seed` on every call, so results do not depend on call history.
class PolyRing {
 public:
  explicit PolyRing(FieldPtr field, char variable = 't', std::uint64_t seed = 0,
                    Limits limits = Limits{});

  const FiniteField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  char variable() const { return variable_; }
  std::uint64_t seed() const { return seed_; }
  const Limits& limits() const { return limits_; }

  Poly zero() const { return Poly{}; }
  Poly one() const { return constant(field_->one()); }
  Poly constant(Fe c) const { return Poly({c}); }
  /// The polynomial `var`.
  Poly x() const { return Poly({Fe{}, field_->one()}); }
  /// c * var^k.
  Poly monomial(Fe c, int k) const;
  /// From integer coefficients (low to high), reduced mod p.
  Poly from_ints(std::initializer_list<long long> coeffs) const;

  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly neg(const Poly& a) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly scale(const Poly& a, Fe c) const;
  Poly shift(const Poly& a, int k) const;
  /// (quotient, remainder). Throws MathError on a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const;
  Poly mod(const Poly& a, const Poly& b) const { return divmod(a, b).second; }
  /// Exact division; throws MathError if b does not divide a.
  Poly div_exact(const Poly& a, const Poly& b) const;
  Poly monic(const Poly& a) const;
  /// Monic gcd (zero only if both inputs are zero).
  Poly gcd(const Poly& a, const Poly& b) const;
  /// (g, s, t) with g = s*a + t*b, g monic.
  std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b) const;
  /// a^e mod m; m must be nonconstant. a^0 = 1.
  Poly powmod(const Poly& a, std::uint64_t e, const Poly& m) const;
  /// a^((q^d - 1)/2) mod m, computed without forming the exponent.
  Poly pow_half_order(const Poly& a, int d, const Poly& m) const;
  Poly derivative(const Poly& a) const;
  Fe eval(const Poly& a, Fe x) const;
  /// a(b(var)) mod m.
  Poly compose_mod(const Poly& a, const Poly& b, const Poly& m) const;
  /// Multiplicity of the (nonconstant) factor p in a != 0.
  int valuation(const Poly& a, const Poly& p) const;

  /// Rabin's test. Throws MathError for constant input.
  bool is_irreducible(const Poly& f) const;
  /// All monic irreducibles of degree exactly d in enumeration order. Cached.
  const std::vector<Poly>& monic_irreducibles(int d) const;
  /// Number of monic irreducibles of degree d by the necklace formula.
  std::uint64_t necklace_count(int d) const;

  /// Complete factorization of f != 0 (squarefree, distinct-degree,
  /// Cantor–Zassenhaus).
  Factorization factor(const Poly& f) const;
  SquarefreePart squarefree_part(const Poly& f) const;
  /// Multiplies out a factorization.
  Poly expand(const Factorization& fac) const;

  /// Monic polynomial of degree d from its enumeration index.
  Poly monic_from_index(int d, std::uint64_t index) const;
  Poly random(int max_degree, std::mt19937_64& rng) const;
  Poly random_monic(int degree, std::mt19937_64& rng) const;

 private:
  std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) const;
  std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f) const;
  void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) const;
  Poly pth_root(const Poly& f) const;
  Poly frobenius_power(const Poly& a, const Poly& m) const { return powmod(a, field_->order(), m); }

  FieldPtr field_;
  char variable_;
  std::uint64_t seed_;
  Limits limits_;
  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::shared_ptr<const std::vector<Poly>>> irreducible_cache_;
};

/// num/den with den monic, gcd(num, den) = 1.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(const PolyRing& ring, Poly num, Poly den);
  RationalFunction(const PolyRing& ring, Poly num) : RationalFunction(ring, std::move(num), ring.one()) {}

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction mul(const PolyRing& ring, const RationalFunction& other) const;
  RationalFunction inv(const PolyRing& ring) const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  Poly num_;
  Poly den_;
};

}  // namespace evenpoint

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evenpoint/gf2.hpp"
#include "evenpoint/poly.hpp"
#include "evenpoint/residue_field.hpp"
#include "evenpoint/scan_candidate.hpp"

namespace evenpoint {

/// A place of F_q(t): a monic irreducible π, or the infinite place.
struct PlaceP1 {
  Poly pi;
  bool infinite = false;

  int degree() const { return infinite ? 1 : pi.degree(); }

  friend bool operator==(const PlaceP1&, const PlaceP1&) = default;
  /// Enumeration order: by degree, finite before ∞, then by π.
  friend std::strong_ordering operator<=>(const PlaceP1& a, const PlaceP1& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.infinite <=> b.infinite; c != 0) return c;
    return a.pi <=> b.pi;
  }
};

using DivisorP1 = std::map<PlaceP1, int>;

/// ζ^e · m with m monic squarefree.
struct SquareClassP1 {
  bool zeta = false;
  Poly m;
  friend bool operator==(const SquareClassP1&, const SquareClassP1&) = default;
};

struct ReciprocityResult {
  int lhs;
  int rhs;
  bool ok;
};

struct HilbertProduct {
  int product;
  bool ok;
};

/// The rational function field K = F_q(t) seen as the projective line.
class P1Model {
 public:
  using Place = PlaceP1;
  using SquareClass = SquareClassP1;
  using Candidate = ScanCandidate<SquareClassP1, PlaceP1>;

  explicit P1Model(FieldPtr field, std::uint64_t seed = 0, Limits limits = Limits{});

  const PolyRing& ring() const { return ring_; }
  const FiniteField& field() const { return ring_.field(); }

  PlaceP1 infinity() const { return PlaceP1{Poly{}, true}; }
  /// Throws MathError unless π is monic irreducible.
  PlaceP1 finite(Poly pi) const;
  /// Places of degree exactly d in enumeration order (∞ after the linear ones).
  std::vector<PlaceP1> places_of_degree(int d) const;
  std::vector<PlaceP1> places_up_to(int d) const;
  int place_degree(const PlaceP1& p) const { return p.degree(); }
  bool is_infinite(const PlaceP1& p) const { return p.infinite; }

  int ord(const PlaceP1& p, const RationalFunction& f) const;
  DivisorP1 principal_divisor(const RationalFunction& f) const;
  /// Residue of a unit at p as an element of F_q[t]/π (a constant at ∞).
  /// Throws MathError("not a unit at place") when ord_p f != 0.
  Poly residue(const PlaceP1& p, const RationalFunction& f) const;
  /// Residue of f · u^(-ord_p f) for the uniformizer u (π, or 1/t at ∞).
  Poly unit_residue(const PlaceP1& p, const RationalFunction& f) const;
  int legendre(const RationalFunction& f, const PlaceP1& p) const;
  int legendre(const SquareClassP1& c, const PlaceP1& p) const;
  int hilbert(const RationalFunction& a, const RationalFunction& b, const PlaceP1& p) const;
  ReciprocityResult reciprocity_check(const Poly& f, const Poly& g) const;
  HilbertProduct hilbert_product_check(const RationalFunction& a, const RationalFunction& b) const;
  /// χ_p(-1) = (-1)^((q^deg p - 1)/2).
  int chi_minus_one(const PlaceP1& p) const;

  // Square classes.
  SquareClassP1 square_class(const RationalFunction& f) const;
  SquareClassP1 multiply(const SquareClassP1& a, const SquareClassP1& b) const;
  SquareClassP1 one() const { return SquareClassP1{false, ring_.one()}; }
  SquareClassP1 zeta() const { return SquareClassP1{true, ring_.one()}; }
  RationalFunction representative(const SquareClassP1& c) const;
  /// Places where the class has odd valuation, in enumeration order.
  std::vector<PlaceP1> odd_places(const SquareClassP1& c) const;
  /// Whether the unit-part residue at p has a square root in K(p).
  bool unit_residue_is_square(const SquareClassP1& c, const PlaceP1& p) const;

  // Inputs for the generic square-class machinery.
  std::vector<Candidate> scan_candidates(const std::vector<PlaceP1>& removed, int bound) const;
  int default_scan_bound(const std::vector<PlaceP1>& removed) const;
  /// dim Pic X / 2 Pic X for the line (Pic = ℤ via degree).
  int pic_mod2_dim() const { return 1; }
  /// Class of [p] in Pic X / 2 Pic X: the degree parity.
  BitVector pic_mod2_vector(const PlaceP1& p) const;
  /// The monic generator of an even-degree place. Throws MathError otherwise.
  SquareClassP1 lambda_for(const PlaceP1& p) const;

  std::string place_name(const PlaceP1& p) const;
  std::string class_name(const SquareClassP1& c) const;
  PlaceP1 parse_place(std::string_view text) const;
  SquareClassP1 parse_class(std::string_view text) const;
  std::string model_name() const { return "p1"; }
  std::optional<std::string> curve_f_name() const { return std::nullopt; }

 private:
  int chi_at(const PlaceP1& p, const Poly& residue) const;

  PolyRing ring_;
};

}  // namespace evenpoint

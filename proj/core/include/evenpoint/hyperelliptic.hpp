#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evenpoint/gf2.hpp"
#include "evenpoint/poly.hpp"
#include "evenpoint/residue_field.hpp"
#include "evenpoint/scan_candidate.hpp"

namespace evenpoint {

enum class PlaceKind { Infinite, Ramified, Split, Inert };

/// A place of y^2 = f(x). Split places over π come in pairs: branch 0 is the
/// root v of v^2 ≡ f mod π with the smaller coefficient vector, branch 1 is -v.
struct CurvePlace {
  PlaceKind kind = PlaceKind::Infinite;
  Poly pi;
  Poly v;
  int branch = 0;

  int degree() const {
    switch (kind) {
      case PlaceKind::Infinite: return 1;
      case PlaceKind::Inert: return 2 * pi.degree();
      default: return pi.degree();
    }
  }

  friend bool operator==(const CurvePlace& a, const CurvePlace& b) {
    return a.kind == b.kind && a.pi == b.pi && a.branch == b.branch;
  }
  /// By place degree, then by π (∞ first), then branch.
  friend std::strong_ordering operator<=>(const CurvePlace& a, const CurvePlace& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.pi <=> b.pi; c != 0) return c;
    return a.branch <=> b.branch;
  }
};

using CurveDivisor = std::map<CurvePlace, int>;

/// (a + b·y) / d with d monic and gcd(a, b, d) = 1. Zero is a = b = 0, d = 1.
struct CurveFunction {
  Poly a;
  Poly b;
  Poly d;
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  friend bool operator==(const CurveFunction&, const CurveFunction&) = default;
};

/// Reduced or semi-reduced Mumford pair: u monic, deg v < deg u, u | v^2 - f.
struct Mumford {
  Poly u;
  Poly v;
  friend bool operator==(const Mumford&, const Mumford&) = default;
  friend std::strong_ordering operator<=>(const Mumford& a, const Mumford& b) {
    if (auto c = a.u <=> b.u; c != 0) return c;
    return a.v <=> b.v;
  }
};

/// D1 + D2 - (deg D1 + deg D2)∞ = sum - deg(sum)∞ + div(fn).
struct AddResult {
  Mumford sum;
  CurveFunction fn;
};

/// [P - deg P·∞] = [jac - deg(jac)·∞], with P - deg P·∞ = jac - deg(jac)·∞ + div(fn).
struct PlaceClass {
  Mumford jac;
  int degree;
  CurveFunction fn;
};

/// Exhaustive table of J(F_q).
class JacobianTable {
 public:
  const std::vector<Mumford>& elements() const { return elements_; }
  std::uint64_t order() const { return elements_.size(); }
  std::optional<std::size_t> index_of(const Mumford& d) const;
  std::size_t double_of(std::size_t i) const { return double_[i]; }
  bool is_doubled(std::size_t i) const { return half_[i] != kNone; }
  /// The first element (in table order) whose double is element i.
  std::optional<std::size_t> half_of(std::size_t i) const;
  std::size_t doubled_count() const { return doubled_count_; }
  /// Number of elements killed by 2.
  std::size_t two_torsion_count() const { return two_torsion_; }
  /// dim_F2 J / 2J.
  int two_rank() const { return two_rank_; }
  /// Coordinates of the coset of element i in J / 2J (bit k: generator k).
  std::uint32_t coset_mask(std::size_t i) const { return coset_[i]; }
  const std::vector<std::size_t>& coset_generators() const { return generators_; }

 private:
  friend class Curve;
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::vector<Mumford> elements_;
  std::map<Mumford, std::size_t> index_;
  std::vector<std::size_t> double_;
  std::vector<std::size_t> half_;
  std::vector<std::uint32_t> coset_;
  std::vector<std::size_t> generators_;
  std::size_t doubled_count_ = 0;
  std::size_t two_torsion_ = 0;
  int two_rank_ = 0;
};

/// The imaginary hyperelliptic function field F_q(x)[y]/(y^2 - f), f monic
/// squarefree of odd degree 2g+1.
class Curve {
 public:
  using Place = CurvePlace;
  using SquareClass = CurveFunction;
  using Candidate = ScanCandidate<CurveFunction, CurvePlace>;

  /// Throws MathError for even degree, non-monic or non-squarefree f.
  Curve(FieldPtr field, Poly f, std::uint64_t seed = 0, Limits limits = Limits{});

  const PolyRing& ring() const { return ring_; }
  const FiniteField& field() const { return ring_.field(); }
  const Poly& f() const { return f_; }
  int genus() const { return genus_; }
  const Limits& limits() const { return ring_.limits(); }

  // Places.
  CurvePlace infinity() const { return CurvePlace{}; }
  /// The one or two places over a monic irreducible π.
  std::vector<CurvePlace> places_over(const Poly& pi) const;
  /// ∞, then the places over every π with deg π <= d, by (deg π, π, branch).
  std::vector<CurvePlace> places_up_to(int d) const;
  /// Places of degree exactly D (inert places over deg D/2 come first).
  std::vector<CurvePlace> places_of_degree(int D) const;
  int place_degree(const CurvePlace& p) const { return p.degree(); }
  bool is_infinite(const CurvePlace& p) const { return p.kind == PlaceKind::Infinite; }

  // Functions.
  CurveFunction function(const Poly& a, const Poly& b = Poly{}) const;
  CurveFunction function(const RationalFunction& a, const RationalFunction& b) const;
  CurveFunction normalize(Poly a, Poly b, Poly d) const;
  CurveFunction mul(const CurveFunction& g, const CurveFunction& h) const;
  /// a^2 - b^2 f: the norm of a + b·y.
  Poly norm_numerator(const CurveFunction& h) const;
  int ord(const CurvePlace& p, const CurveFunction& h) const;
  CurveDivisor function_divisor(const CurveFunction& h) const;
  int divisor_degree(const CurveDivisor& d) const;
  int legendre(const CurveFunction& h, const CurvePlace& p) const;
  /// Square-root test on the unit-part residue (Tonelli–Shanks in K(p)).
  bool unit_residue_is_square(const CurveFunction& h, const CurvePlace& p) const;

  // Jacobian.
  Mumford jacobian_zero() const { return Mumford{ring_.one(), Poly{}}; }
  bool is_semi_reduced(const Mumford& d) const;
  /// The effective affine divisor of a semi-reduced pair.
  CurveDivisor mumford_divisor(const Mumford& d) const;
  Mumford negate(const Mumford& d) const;
  AddResult cantor_add(const Mumford& d1, const Mumford& d2) const;
  /// Reduces a semi-reduced pair: d - deg(d)∞ = sum - deg(sum)∞ + div(fn).
  AddResult reduce(const Mumford& d) const;
  /// Built on first use. Throws BoundError beyond the configured caps.
  const JacobianTable& jacobian() const;
  PlaceClass place_class(const CurvePlace& p) const;
  bool is_two_divisible(const Mumford& d) const;
  /// A function with odd valuation exactly at the even place p, verified by
  /// its divisor. Throws MathError for places that are not even.
  CurveFunction lambda_extract(const CurvePlace& p) const;

  // Zeta function.
  /// #C(F_{q^i}) for i = 1..n from the place census.
  std::vector<long long> point_counts(int n) const;
  /// Coefficients c_0..c_2g of the numerator L(T) of the zeta function.
  std::vector<long long> l_polynomial() const;
  /// L(1).
  long long zeta_class_number() const;

  // Square classes.
  CurveFunction one() const { return function(ring_.one()); }
  CurveFunction zeta() const { return function(ring_.constant(field().canonical_nonsquare())); }
  /// Polynomial representative with square factors of gcd(a, b) removed and
  /// leading constant 1 or ζ.
  CurveFunction square_class(const CurveFunction& h) const;
  CurveFunction multiply(const CurveFunction& g, const CurveFunction& h) const;
  std::vector<CurvePlace> odd_places(const CurveFunction& h) const;

  // Inputs for the generic square-class machinery.
  std::vector<Candidate> scan_candidates(const std::vector<CurvePlace>& removed, int bound) const;
  int default_scan_bound(const std::vector<CurvePlace>& removed) const;
  /// 1 + dim J/2J.
  int pic_mod2_dim() const;
  /// J/2J coordinates of [P - deg P·∞] followed by deg P mod 2.
  BitVector pic_mod2_vector(const CurvePlace& p) const;
  CurveFunction lambda_for(const CurvePlace& p) const { return square_class(lambda_extract(p)); }

  std::string place_name(const CurvePlace& p) const;
  std::string class_name(const CurveFunction& h) const;
  std::string mumford_name(const Mumford& d) const;
  /// "inf", "π" (ramified or inert) or "π@v" (split, v the branch value).
  CurvePlace parse_place(std::string_view text) const;
  /// "a(x) + b(x)*y", optionally "... / d(x)".
  CurveFunction parse_class(std::string_view text) const;
  std::string model_name() const { return "curve"; }
  std::optional<std::string> curve_f_name() const;

 private:
  struct LocalUnit {
    int ord;
    Poly re;
    Poly im;
  };
  LocalUnit local_unit(const CurvePlace& p, const CurveFunction& h) const;
  const std::vector<Candidate>& riemann_roch_candidates(int n) const;
  void build_jacobian() const;

  PolyRing ring_;
  Poly f_;
  int genus_;

  mutable std::once_flag jacobian_once_;
  mutable std::unique_ptr<JacobianTable> jacobian_;
  mutable std::mutex candidate_mutex_;
  mutable std::map<int, std::shared_ptr<const std::vector<Candidate>>> candidate_cache_;
};

}  // namespace evenpoint

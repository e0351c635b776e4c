#include "evenpoint/p1_model.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "evenpoint/errors.hpp"
#include "evenpoint/poly_io.hpp"

namespace evenpoint {

P1Model::P1Model(FieldPtr field, std::uint64_t seed, Limits limits)
    : ring_(std::move(field), 't', seed, limits) {}

PlaceP1 P1Model::finite(Poly pi) const {
  if (pi.degree() < 1 || pi.lead() != field().one() || !ring_.is_irreducible(pi)) {
    throw MathError("a place needs a monic irreducible polynomial");
  }
  return PlaceP1{std::move(pi), false};
}

std::vector<PlaceP1> P1Model::places_of_degree(int d) const {
  std::vector<PlaceP1> out;
  for (const Poly& pi : ring_.monic_irreducibles(d)) out.push_back(PlaceP1{pi, false});
  if (d == 1) out.push_back(infinity());
  return out;
}

std::vector<PlaceP1> P1Model::places_up_to(int d) const {
  std::vector<PlaceP1> out;
  for (int k = 1; k <= d; ++k) {
    auto level = places_of_degree(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

int P1Model::ord(const PlaceP1& p, const RationalFunction& f) const {
  if (f.is_zero()) throw MathError("valuation of the zero function");
  if (p.infinite) return f.den().degree() - f.num().degree();
  return ring_.valuation(f.num(), p.pi) - ring_.valuation(f.den(), p.pi);
}

DivisorP1 P1Model::principal_divisor(const RationalFunction& f) const {
  if (f.is_zero()) throw MathError("divisor of the zero function");
  DivisorP1 div;
  for (const auto& [pi, mult] : ring_.factor(f.num()).factors) div[PlaceP1{pi, false}] += mult;
  for (const auto& [pi, mult] : ring_.factor(f.den()).factors) div[PlaceP1{pi, false}] -= mult;
  const int at_infinity = f.den().degree() - f.num().degree();
  if (at_infinity != 0) div[infinity()] = at_infinity;
  return div;
}

int P1Model::chi_at(const PlaceP1& p, const Poly& residue) const {
  if (p.infinite) return field().quadratic_character(residue.coeff(0));
  return ResidueField(ring_, p.pi).chi(residue);
}

Poly P1Model::residue(const PlaceP1& p, const RationalFunction& f) const {
  if (ord(p, f) != 0) throw MathError("not a unit at place");
  return unit_residue(p, f);
}

Poly P1Model::unit_residue(const PlaceP1& p, const RationalFunction& f) const {
  if (f.is_zero()) throw MathError("residue of the zero function");
  const auto& F = field();
  if (p.infinite) return ring_.constant(F.div(f.num().lead(), f.den().lead()));
  const ResidueField k(ring_, p.pi);
  Poly num = f.num();
  Poly den = f.den();
  while (ring_.mod(num, p.pi).is_zero()) num = ring_.div_exact(num, p.pi);
  while (ring_.mod(den, p.pi).is_zero()) den = ring_.div_exact(den, p.pi);
  return k.mul(k.reduce(num), k.inv(den));
}

int P1Model::legendre(const RationalFunction& f, const PlaceP1& p) const {
  if (ord(p, f) % 2 != 0) throw MathError("symbol undefined: odd valuation");
  return chi_at(p, unit_residue(p, f));
}

int P1Model::legendre(const SquareClassP1& c, const PlaceP1& p) const {
  if (p.infinite) {
    if (c.m.degree() % 2 != 0) throw MathError("symbol undefined: odd valuation");
    return c.zeta ? -1 : 1;
  }
  const ResidueField k(ring_, p.pi);
  const Poly r = k.reduce(c.m);
  if (r.is_zero()) throw MathError("symbol undefined: odd valuation");
  int sign = k.chi(r);
  if (c.zeta && p.degree() % 2 == 1) sign = -sign;
  return sign;
}

int P1Model::chi_minus_one(const PlaceP1& p) const {
  // (q^d - 1)/2 is odd iff q^d ≡ 3 mod 4.
  std::uint64_t qd = 1;
  for (int i = 0; i < p.degree(); ++i) qd = (qd * field().order()) % 4;
  return qd == 3 ? -1 : 1;
}

int P1Model::hilbert(const RationalFunction& a, const RationalFunction& b, const PlaceP1& p) const {
  const int alpha = ord(p, a);
  const int beta = ord(p, b);
  int sign = 1;
  if ((alpha & 1) && (beta & 1)) sign *= chi_minus_one(p);
  if (beta & 1) sign *= chi_at(p, unit_residue(p, a));
  if (alpha & 1) sign *= chi_at(p, unit_residue(p, b));
  return sign;
}

ReciprocityResult P1Model::reciprocity_check(const Poly& f, const Poly& g) const {
  if (f == g) throw MathError("reciprocity needs distinct polynomials");
  const PlaceP1 pf = finite(f);
  const PlaceP1 pg = finite(g);
  const int lhs = legendre(RationalFunction(ring_, f), pg) * legendre(RationalFunction(ring_, g), pf);
  const int rhs = (chi_minus_one(pf) == -1 && chi_minus_one(pg) == -1) ? -1 : 1;
  return {lhs, rhs, lhs == rhs};
}

HilbertProduct P1Model::hilbert_product_check(const RationalFunction& a,
                                              const RationalFunction& b) const {
  std::set<PlaceP1> support{infinity()};
  for (const auto& [p, c] : principal_divisor(a)) support.insert(p);
  for (const auto& [p, c] : principal_divisor(b)) support.insert(p);
  int product = 1;
  for (const PlaceP1& p : support) product *= hilbert(a, b, p);
  return {product, product == 1};
}

SquareClassP1 P1Model::square_class(const RationalFunction& f) const {
  if (f.is_zero()) throw MathError("zero has no square class");
  const SquarefreePart part = ring_.squarefree_part(ring_.mul(f.num(), f.den()));
  return SquareClassP1{part.zeta, part.m};
}

SquareClassP1 P1Model::multiply(const SquareClassP1& a, const SquareClassP1& b) const {
  const Poly g = ring_.gcd(a.m, b.m);
  const Poly m = ring_.mul(ring_.div_exact(a.m, g), ring_.div_exact(b.m, g));
  return SquareClassP1{a.zeta != b.zeta, m};
}

RationalFunction P1Model::representative(const SquareClassP1& c) const {
  Poly m = c.m;
  if (c.zeta) m = ring_.scale(m, field().canonical_nonsquare());
  return RationalFunction(ring_, std::move(m));
}

std::vector<PlaceP1> P1Model::odd_places(const SquareClassP1& c) const {
  std::vector<PlaceP1> out;
  if (c.m.degree() > 0) {
    for (const auto& [pi, mult] : ring_.factor(c.m).factors) {
      if (mult % 2 == 1) out.push_back(PlaceP1{pi, false});
    }
  }
  if (c.m.degree() % 2 != 0) out.push_back(infinity());
  std::sort(out.begin(), out.end());
  return out;
}

bool P1Model::unit_residue_is_square(const SquareClassP1& c, const PlaceP1& p) const {
  const Poly r = unit_residue(p, representative(c));
  if (p.infinite) return field().sqrt(r.coeff(0)).has_value();
  return ResidueField(ring_, p.pi).sqrt(r).has_value();
}

std::vector<P1Model::Candidate> P1Model::scan_candidates(const std::vector<PlaceP1>& removed,
                                                         int bound) const {
  (void)removed;
  std::vector<Candidate> out{{zeta(), {}}};
  for (int d = 1; d <= bound; ++d) {
    for (const Poly& pi : ring_.monic_irreducibles(d)) {
      Candidate c{SquareClassP1{false, pi}, {PlaceP1{pi, false}}};
      if (d % 2 == 1) c.odd.push_back(infinity());
      out.push_back(std::move(c));
    }
  }
  return out;
}

int P1Model::default_scan_bound(const std::vector<PlaceP1>& removed) const {
  int bound = 2;
  for (const auto& p : removed) bound = std::max(bound, p.degree());
  return bound;
}

BitVector P1Model::pic_mod2_vector(const PlaceP1& p) const {
  BitVector v(1);
  v.set(0, p.degree() % 2 == 1);
  return v;
}

SquareClassP1 P1Model::lambda_for(const PlaceP1& p) const {
  if (p.infinite || p.degree() % 2 != 0) throw MathError("no odd-valuation class exists");
  return SquareClassP1{false, p.pi};
}

std::string P1Model::place_name(const PlaceP1& p) const {
  return p.infinite ? "inf" : format_poly(ring_, p.pi);
}

std::string P1Model::class_name(const SquareClassP1& c) const {
  return format_poly(ring_, representative(c).num());
}

PlaceP1 P1Model::parse_place(std::string_view text) const {
  std::string trimmed;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
  }
  if (trimmed == "inf" || trimmed == "infinity") return infinity();
  return finite(parse_poly(ring_, text));
}

SquareClassP1 P1Model::parse_class(std::string_view text) const {
  return square_class(parse_rational(ring_, text));
}

}  // namespace evenpoint

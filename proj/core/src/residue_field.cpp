#include "evenpoint/residue_field.hpp"

#include <algorithm>

#include "evenpoint/errors.hpp"
#include "evenpoint/tonelli_shanks.hpp"

namespace evenpoint {

bool coefficient_less(const Poly& a, const Poly& b) {
  const int n = std::max(a.degree(), b.degree());
  for (int i = 0; i <= n; ++i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

ResidueField::ResidueField(const PolyRing& ring, Poly pi) : ring_(&ring), pi_(std::move(pi)) {
  if (pi_.degree() < 1 || pi_.lead() != ring.field().one()) {
    throw MathError("residue field needs a monic nonconstant modulus");
  }
  order_ = 1;
  for (int i = 0; i < pi_.degree(); ++i) order_ *= ring.field().order();
}

Poly ResidueField::nonresidue() const {
  const int d = pi_.degree();
  const std::uint64_t q = ring_->field().order();
  for (std::uint64_t k = 1; k < order_; ++k) {
    std::vector<Fe> c(d);
    std::uint64_t rest = k;
    for (int i = 0; i < d; ++i) {
      c[i] = ring_->field().element(static_cast<std::uint32_t>(rest % q));
      rest /= q;
    }
    Poly candidate(std::move(c));
    if (chi(candidate) == -1) return candidate;
  }
  throw MathError("no non-square in residue field");
}

Poly ResidueField::inv(const Poly& a) const {
  const Poly r = reduce(a);
  if (r.is_zero()) throw MathError("zero divisor");
  auto [g, s, t] = ring_->xgcd(r, pi_);
  (void)t;
  if (g.degree() != 0) throw MathError("modulus is not irreducible");
  return reduce(s);
}

Poly ResidueField::pow(const Poly& a, std::uint64_t e) const {
  if (pi_.degree() == 0) return Poly{};
  return ring_->powmod(a, e, pi_);
}

Fe ResidueField::norm(const Poly& a) const {
  Poly frob = reduce(a);
  Poly acc = frob;
  for (int i = 1; i < degree(); ++i) {
    frob = ring_->powmod(frob, ring_->field().order(), pi_);
    acc = mul(acc, frob);
  }
  return acc.coeff(0);
}

int ResidueField::chi(const Poly& a) const {
  const Poly r = reduce(a);
  if (r.is_zero()) throw MathError("character undefined at zero");
  const Poly s = ring_->pow_half_order(r, degree(), pi_);
  return s == one() ? 1 : -1;
}

std::optional<Poly> ResidueField::sqrt(const Poly& a) const {
  const Poly r = reduce(a);
  if (r.is_zero()) return r;
  if (chi(r) == -1) return std::nullopt;
  auto root = tonelli_shanks(*this, r);
  if (!root) return std::nullopt;
  Poly other = neg(*root);
  return coefficient_less(other, *root) ? other : *root;
}

QuadraticExtension::QuadraticExtension(const ResidueField& base, Poly w)
    : base_(&base), w_(base.reduce(w)) {
  if (w_.is_zero() || base.chi(w_) != -1) throw MathError("extension needs a non-square");
  const std::uint64_t q_base = base.order();
  const int d = base.degree();
  const auto& F = base.ring().field();
  auto nth = [&](std::uint64_t k) {
    std::vector<Fe> c(d);
    for (int i = 0; i < d; ++i) {
      c[i] = F.element(static_cast<std::uint32_t>(k % F.order()));
      k /= F.order();
    }
    return Poly(std::move(c));
  };
  for (std::uint64_t k = 0; k < q_base; ++k) {
    Elem candidate{nth(k), base.one()};
    if (chi(candidate) == -1) {
      nonresidue_ = std::move(candidate);
      return;
    }
  }
  throw MathError("no non-square found in quadratic extension");
}

QuadraticExtension::Elem QuadraticExtension::mul(const Elem& a, const Elem& b) const {
  const ResidueField& E = *base_;
  Poly real = E.add(E.mul(a.first, b.first), E.mul(w_, E.mul(a.second, b.second)));
  Poly imag = E.add(E.mul(a.first, b.second), E.mul(a.second, b.first));
  return {std::move(real), std::move(imag)};
}

QuadraticExtension::Elem QuadraticExtension::pow(const Elem& a, std::uint64_t e) const {
  Elem result = one();
  Elem base = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

Poly QuadraticExtension::norm(const Elem& a) const {
  const ResidueField& E = *base_;
  return E.sub(E.mul(a.first, a.first), E.mul(w_, E.mul(a.second, a.second)));
}

int QuadraticExtension::chi(const Elem& a) const {
  if (is_zero(a)) throw MathError("character undefined at zero");
  return base_->chi(norm(a));
}

std::optional<QuadraticExtension::Elem> QuadraticExtension::sqrt(const Elem& a) const {
  if (is_zero(a)) return a;
  if (chi(a) == -1) return std::nullopt;
  auto root = tonelli_shanks(*this, a);
  if (!root) return std::nullopt;
  Elem other{base_->neg(root->first), base_->neg(root->second)};
  const bool other_first = coefficient_less(other.first, root->first) ||
                           (other.first == root->first && coefficient_less(other.second, root->second));
  return other_first ? other : *root;
}

}  // namespace evenpoint

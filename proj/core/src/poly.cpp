#include "evenpoint/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "evenpoint/errors.hpp"

namespace evenpoint {

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (auto cmp = a.degree() <=> b.degree(); cmp != 0) return cmp;
  for (int i = a.degree(); i >= 0; --i) {
    if (auto cmp = a.coeff(i).v <=> b.coeff(i).v; cmp != 0) return cmp;
  }
  return std::strong_ordering::equal;
}

PolyRing::PolyRing(FieldPtr field, char variable, std::uint64_t seed, Limits limits)
    : field_(std::move(field)), variable_(variable), seed_(seed), limits_(limits) {
  if (!field_) throw std::invalid_argument("PolyRing needs a field");
}

Poly PolyRing::monomial(Fe c, int k) const {
  if (c.v == 0) return Poly{};
  std::vector<Fe> coeffs(k + 1, Fe{});
  coeffs[k] = c;
  return Poly(std::move(coeffs));
}

Poly PolyRing::from_ints(std::initializer_list<long long> coeffs) const {
  std::vector<Fe> c;
  c.reserve(coeffs.size());
  for (long long v : coeffs) c.push_back(field_->from_int(v));
  return Poly(std::move(c));
}

Poly PolyRing::add(const Poly& a, const Poly& b) const {
  const auto& A = a.coeffs();
  const auto& B = b.coeffs();
  std::vector<Fe> c(std::max(A.size(), B.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Fe x = i < A.size() ? A[i] : Fe{};
    const Fe y = i < B.size() ? B[i] : Fe{};
    c[i] = field_->add(x, y);
  }
  return Poly(std::move(c));
}

Poly PolyRing::neg(const Poly& a) const {
  std::vector<Fe> c(a.coeffs());
  for (auto& x : c) x = field_->neg(x);
  return Poly(std::move(c));
}

Poly PolyRing::sub(const Poly& a, const Poly& b) const { return add(a, neg(b)); }

Poly PolyRing::mul(const Poly& a, const Poly& b) const {
  if (a.is_zero() || b.is_zero()) return Poly{};
  const auto& A = a.coeffs();
  const auto& B = b.coeffs();
  std::vector<Fe> c(A.size() + B.size() - 1, Fe{});
  const FiniteField& F = *field_;
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i].v == 0) continue;
    for (std::size_t j = 0; j < B.size(); ++j) {
      c[i + j] = F.add(c[i + j], F.mul(A[i], B[j]));
    }
  }
  return Poly(std::move(c));
}

Poly PolyRing::scale(const Poly& a, Fe c) const {
  std::vector<Fe> out(a.coeffs());
  for (auto& x : out) x = field_->mul(x, c);
  return Poly(std::move(out));
}

Poly PolyRing::shift(const Poly& a, int k) const {
  if (a.is_zero()) return a;
  std::vector<Fe> out(k, Fe{});
  out.insert(out.end(), a.coeffs().begin(), a.coeffs().end());
  return Poly(std::move(out));
}

std::pair<Poly, Poly> PolyRing::divmod(const Poly& a, const Poly& b) const {
  if (b.is_zero()) throw MathError("division by zero polynomial");
  if (a.degree() < b.degree()) return {Poly{}, a};
  const FiniteField& F = *field_;
  std::vector<Fe> r(a.coeffs());
  const auto& B = b.coeffs();
  const int db = b.degree();
  const Fe inv_lead = F.inv(b.lead());
  std::vector<Fe> q(a.degree() - db + 1, Fe{});
  for (int i = a.degree(); i >= db; --i) {
    const Fe c = F.mul(r[i], inv_lead);
    if (c.v == 0) continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) {
      r[i - db + j] = F.sub(r[i - db + j], F.mul(c, B[j]));
    }
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly PolyRing::div_exact(const Poly& a, const Poly& b) const {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw MathError("inexact polynomial division");
  return q;
}

Poly PolyRing::monic(const Poly& a) const {
  if (a.is_zero()) return a;
  return scale(a, field_->inv(a.lead()));
}

Poly PolyRing::gcd(const Poly& a, const Poly& b) const {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

std::tuple<Poly, Poly, Poly> PolyRing::xgcd(const Poly& a, const Poly& b) const {
  Poly r0 = a, r1 = b;
  Poly s0 = one(), s1 = zero();
  Poly t0 = zero(), t1 = one();
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = sub(s0, mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = sub(t0, mul(q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Fe c = field_->inv(r0.lead());
  return {scale(r0, c), scale(s0, c), scale(t0, c)};
}

Poly PolyRing::powmod(const Poly& a, std::uint64_t e, const Poly& m) const {
  if (m.degree() < 1) throw MathError("powmod needs a nonconstant modulus");
  Poly result = one();
  Poly base = mod(a, m);
  while (e > 0) {
    if (e & 1u) result = mod(mul(result, base), m);
    e >>= 1;
    if (e > 0) base = mod(mul(base, base), m);
  }
  return result;
}

Poly PolyRing::pow_half_order(const Poly& a, int d, const Poly& m) const {
  Poly frob = mod(a, m);
  Poly acc = frob;
  for (int i = 1; i < d; ++i) {
    frob = frobenius_power(frob, m);
    acc = mod(mul(acc, frob), m);
  }
  return powmod(acc, (field_->order() - 1) / 2, m);
}

Poly PolyRing::derivative(const Poly& a) const {
  if (a.degree() < 1) return Poly{};
  std::vector<Fe> c(a.degree());
  for (int i = 1; i <= a.degree(); ++i) c[i - 1] = field_->mul(field_->from_int(i), a.coeff(i));
  return Poly(std::move(c));
}

Fe PolyRing::eval(const Poly& a, Fe x) const {
  Fe acc{};
  for (int i = a.degree(); i >= 0; --i) acc = field_->add(field_->mul(acc, x), a.coeff(i));
  return acc;
}

Poly PolyRing::compose_mod(const Poly& a, const Poly& b, const Poly& m) const {
  Poly acc;
  const Poly bm = mod(b, m);
  for (int i = a.degree(); i >= 0; --i) {
    acc = mod(add(mul(acc, bm), constant(a.coeff(i))), m);
  }
  return acc;
}

int PolyRing::valuation(const Poly& a, const Poly& p) const {
  if (a.is_zero()) throw MathError("valuation of zero");
  if (p.degree() < 1) throw MathError("valuation needs a nonconstant prime");
  int v = 0;
  Poly rest = a;
  while (true) {
    auto [q, r] = divmod(rest, p);
    if (!r.is_zero()) return v;
    rest = std::move(q);
    ++v;
  }
}

bool PolyRing::is_irreducible(const Poly& f) const {
  if (f.degree() < 1) throw MathError("irreducibility undefined for constants");
  const int n = f.degree();
  if (n == 1) return true;
  const Poly g = monic(f);
  if (g.coeff(0).v == 0) return false;

  std::vector<int> prime_divisors;
  for (int r = 2, rest = n; r <= rest; ++r) {
    if (rest % r == 0) {
      prime_divisors.push_back(r);
      while (rest % r == 0) rest /= r;
    }
  }
  std::vector<Poly> frob(n + 1);
  frob[0] = x();
  for (int k = 1; k <= n; ++k) frob[k] = frobenius_power(frob[k - 1], g);
  if (frob[n] != mod(x(), g)) return false;
  for (int r : prime_divisors) {
    if (gcd(g, sub(frob[n / r], x())).degree() != 0) return false;
  }
  return true;
}

std::uint64_t PolyRing::necklace_count(int d) const {
  auto mobius = [](int n) {
    int result = 1;
    for (int r = 2; r * r <= n; ++r) {
      if (n % r == 0) {
        n /= r;
        if (n % r == 0) return 0;
        result = -result;
      }
    }
    if (n > 1) result = -result;
    return result;
  };
  long long total = 0;
  const long long q = field_->order();
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    long long power = 1;
    for (int i = 0; i < d / e; ++i) power *= q;
    total += mobius(e) * power;
  }
  return static_cast<std::uint64_t>(total / d);
}

Poly PolyRing::monic_from_index(int d, std::uint64_t index) const {
  std::vector<Fe> c(d + 1);
  const std::uint64_t q = field_->order();
  for (int i = 0; i < d; ++i) {
    c[i] = field_->element(static_cast<std::uint32_t>(index % q));
    index /= q;
  }
  c[d] = field_->one();
  return Poly(std::move(c));
}

const std::vector<Poly>& PolyRing::monic_irreducibles(int d) const {
  if (d < 1) throw std::invalid_argument("degree must be at least 1");
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = irreducible_cache_.find(d); it != irreducible_cache_.end()) return *it->second;
  }
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) {
    total *= field_->order();
    if (total > limits_.max_enumeration) {
      throw BoundError("enumeration of degree-" + std::to_string(d) + " polynomials exceeds cap");
    }
  }
  auto list = std::make_shared<std::vector<Poly>>();
  list->reserve(necklace_count(d));
  for (std::uint64_t k = 0; k < total; ++k) {
    if (d > 1 && k % field_->order() == 0) continue;  // zero constant term
    Poly f = monic_from_index(d, k);
    if (is_irreducible(f)) list->push_back(std::move(f));
  }
  std::lock_guard lock(cache_mutex_);
  auto [it, inserted] = irreducible_cache_.emplace(d, std::move(list));
  return *it->second;
}

Poly PolyRing::pth_root(const Poly& f) const {
  const std::uint32_t p = field_->characteristic();
  std::uint64_t root_exp = 1;  // a^(1/p) = a^(p^(n-1))
  for (int i = 1; i < field_->degree(); ++i) root_exp *= p;
  std::vector<Fe> c(f.degree() / static_cast<int>(p) + 1);
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) {
    c[i / p] = field_->pow(f.coeff(i), root_exp);
  }
  return Poly(std::move(c));
}

std::vector<std::pair<Poly, int>> PolyRing::squarefree_decomposition(const Poly& f) const {
  std::vector<std::pair<Poly, int>> out;
  if (f.degree() < 1) return out;
  Poly c = gcd(f, derivative(f));
  Poly w = div_exact(f, c);
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = div_exact(w, y);
    if (fac.degree() > 0) out.emplace_back(std::move(fac), i);
    w = std::move(y);
    c = div_exact(c, w);
    ++i;
  }
  if (c.degree() > 0) {
    const int p = static_cast<int>(field_->characteristic());
    for (auto& [g, mult] : squarefree_decomposition(pth_root(c))) {
      out.emplace_back(std::move(g), mult * p);
    }
  }
  return out;
}

std::vector<std::pair<Poly, int>> PolyRing::distinct_degree(const Poly& f) const {
  std::vector<std::pair<Poly, int>> out;
  Poly g = f;
  Poly h = mod(x(), g);
  int d = 0;
  while (g.degree() >= 2 * (d + 1)) {
    ++d;
    h = frobenius_power(h, g);
    Poly fac = gcd(g, sub(h, x()));
    if (fac.degree() > 0) {
      g = div_exact(g, fac);
      h = mod(h, g);
      out.emplace_back(std::move(fac), d);
    }
  }
  if (g.degree() > 0) out.emplace_back(g, g.degree());
  return out;
}

void PolyRing::equal_degree(const Poly& f, int d, std::mt19937_64& rng,
                            std::vector<Poly>& out) const {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  while (true) {
    Poly r = random(f.degree() - 1, rng);
    if (r.degree() < 1) continue;
    Poly b = sub(pow_half_order(r, d, f), one());
    Poly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(div_exact(f, g), d, rng, out);
      return;
    }
  }
}

Factorization PolyRing::factor(const Poly& f) const {
  if (f.is_zero()) throw MathError("cannot factor the zero polynomial");
  Factorization result{f.lead(), {}};
  const Poly g = monic(f);
  std::mt19937_64 rng(seed_);
  std::map<Poly, int> merged;
  for (const auto& [part, mult] : squarefree_decomposition(g)) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<Poly> irreducibles;
      equal_degree(block, d, rng, irreducibles);
      for (auto& p : irreducibles) merged[monic(p)] += mult;
    }
  }
  result.factors.assign(merged.begin(), merged.end());
  return result;
}

SquarefreePart PolyRing::squarefree_part(const Poly& f) const {
  const Factorization fac = factor(f);
  SquarefreePart out;
  out.zeta = field_->quadratic_character(fac.unit) == -1;
  out.m = one();
  for (const auto& [p, mult] : fac.factors) {
    if (mult % 2 == 1) out.m = mul(out.m, p);
  }
  return out;
}

Poly PolyRing::expand(const Factorization& fac) const {
  Poly out = constant(fac.unit);
  for (const auto& [p, mult] : fac.factors) {
    for (int i = 0; i < mult; ++i) out = mul(out, p);
  }
  return out;
}

Poly PolyRing::random(int max_degree, std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint32_t> pick(0, field_->order() - 1);
  std::vector<Fe> c(std::max(max_degree + 1, 0));
  for (auto& x : c) x = field_->element(pick(rng));
  return Poly(std::move(c));
}

Poly PolyRing::random_monic(int degree, std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint32_t> pick(0, field_->order() - 1);
  std::vector<Fe> c(degree + 1);
  for (int i = 0; i < degree; ++i) c[i] = field_->element(pick(rng));
  c[degree] = field_->one();
  return Poly(std::move(c));
}

RationalFunction::RationalFunction(const PolyRing& ring, Poly num, Poly den) {
  if (den.is_zero()) throw MathError("zero denominator");
  if (num.is_zero()) {
    num_ = Poly{};
    den_ = ring.one();
    return;
  }
  const Poly g = ring.gcd(num, den);
  num = ring.div_exact(num, g);
  den = ring.div_exact(den, g);
  const Fe c = ring.field().inv(den.lead());
  num_ = ring.scale(num, c);
  den_ = ring.scale(den, c);
}

RationalFunction RationalFunction::mul(const PolyRing& ring, const RationalFunction& other) const {
  return RationalFunction(ring, ring.mul(num_, other.num_), ring.mul(den_, other.den_));
}

RationalFunction RationalFunction::inv(const PolyRing& ring) const {
  if (is_zero()) throw MathError("zero divisor");
  return RationalFunction(ring, den_, num_);
}

}  // namespace evenpoint

#include "evenpoint/hyperelliptic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "evenpoint/errors.hpp"
#include "evenpoint/poly_io.hpp"

namespace evenpoint {

namespace {

// Valuation with the zero polynomial mapped to a large sentinel.
constexpr int kInfiniteValuation = 1 << 28;

int val_or_inf(const PolyRing& ring, const Poly& a, const Poly& pi) {
  return a.is_zero() ? kInfiniteValuation : ring.valuation(a, pi);
}

Poly strip(const PolyRing& ring, Poly a, const Poly& pi, int times) {
  for (int i = 0; i < times; ++i) a = ring.div_exact(a, pi);
  return a;
}

Poly power(const PolyRing& ring, const Poly& a, int e) {
  Poly out = ring.one();
  for (int i = 0; i < e; ++i) out = ring.mul(out, a);
  return out;
}

}  // namespace

std::optional<std::size_t> JacobianTable::index_of(const Mumford& d) const {
  auto it = index_.find(d);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> JacobianTable::half_of(std::size_t i) const {
  if (half_[i] == kNone) return std::nullopt;
  return half_[i];
}

Curve::Curve(FieldPtr field, Poly f, std::uint64_t seed, Limits limits)
    : ring_(std::move(field), 'x', seed, limits), f_(std::move(f)) {
  if (f_.degree() < 3) throw MathError("f must have degree at least 3");
  if (f_.degree() % 2 == 0) {
    throw MathError("real models (even degree f) are not supported; use an odd-degree f");
  }
  if (f_.lead() != ring_.field().one()) throw MathError("f must be monic");
  if (ring_.gcd(f_, ring_.derivative(f_)).degree() != 0) throw MathError("f must be squarefree");
  genus_ = (f_.degree() - 1) / 2;
}

// ---------------------------------------------------------------- places

std::vector<CurvePlace> Curve::places_over(const Poly& pi) const {
  if (ring_.mod(f_, pi).is_zero()) return {CurvePlace{PlaceKind::Ramified, pi, Poly{}, 0}};
  const ResidueField k(ring_, pi);
  const Poly r = k.reduce(f_);
  auto root = k.sqrt(r);
  if (!root) return {CurvePlace{PlaceKind::Inert, pi, Poly{}, 0}};
  return {CurvePlace{PlaceKind::Split, pi, *root, 0},
          CurvePlace{PlaceKind::Split, pi, k.neg(*root), 1}};
}

std::vector<CurvePlace> Curve::places_up_to(int d) const {
  std::vector<CurvePlace> out{infinity()};
  for (int k = 1; k <= d; ++k) {
    for (const Poly& pi : ring_.monic_irreducibles(k)) {
      for (auto& p : places_over(pi)) out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<CurvePlace> Curve::places_of_degree(int D) const {
  std::vector<CurvePlace> out;
  if (D == 1) out.push_back(infinity());
  if (D % 2 == 0) {
    for (const Poly& pi : ring_.monic_irreducibles(D / 2)) {
      auto over = places_over(pi);
      if (over.front().kind == PlaceKind::Inert) out.push_back(over.front());
    }
  }
  for (const Poly& pi : ring_.monic_irreducibles(D)) {
    for (auto& p : places_over(pi)) {
      if (p.kind != PlaceKind::Inert) out.push_back(std::move(p));
    }
  }
  return out;
}

// ------------------------------------------------------------- functions

CurveFunction Curve::normalize(Poly a, Poly b, Poly d) const {
  if (d.is_zero()) throw MathError("zero denominator");
  if (a.is_zero() && b.is_zero()) return CurveFunction{Poly{}, Poly{}, ring_.one()};
  const Poly g = ring_.gcd(ring_.gcd(a, b), d);
  a = ring_.div_exact(a, g);
  b = ring_.div_exact(b, g);
  d = ring_.div_exact(d, g);
  const Fe c = field().inv(d.lead());
  return CurveFunction{ring_.scale(a, c), ring_.scale(b, c), ring_.scale(d, c)};
}

CurveFunction Curve::function(const Poly& a, const Poly& b) const {
  return normalize(a, b, ring_.one());
}

CurveFunction Curve::function(const RationalFunction& a, const RationalFunction& b) const {
  const Poly g = ring_.gcd(a.den(), b.den());
  const Poly d = ring_.mul(a.den(), ring_.div_exact(b.den(), g));
  return normalize(ring_.mul(a.num(), ring_.div_exact(d, a.den())),
                   ring_.mul(b.num(), ring_.div_exact(d, b.den())), d);
}

CurveFunction Curve::mul(const CurveFunction& g, const CurveFunction& h) const {
  Poly a = ring_.add(ring_.mul(g.a, h.a), ring_.mul(ring_.mul(g.b, h.b), f_));
  Poly b = ring_.add(ring_.mul(g.a, h.b), ring_.mul(g.b, h.a));
  return normalize(std::move(a), std::move(b), ring_.mul(g.d, h.d));
}

Poly Curve::norm_numerator(const CurveFunction& h) const {
  return ring_.sub(ring_.mul(h.a, h.a), ring_.mul(ring_.mul(h.b, h.b), f_));
}

Curve::LocalUnit Curve::local_unit(const CurvePlace& p, const CurveFunction& h) const {
  if (h.is_zero()) throw MathError("valuation of the zero function");
  const auto& F = field();
  if (p.kind == PlaceKind::Infinite) {
    const int pole_a = h.a.is_zero() ? -kInfiniteValuation : 2 * h.a.degree();
    const int pole_b = h.b.is_zero() ? -kInfiniteValuation : 2 * h.b.degree() + 2 * genus_ + 1;
    const bool a_dominates = pole_a > pole_b;
    const Fe lead = a_dominates ? h.a.lead() : h.b.lead();
    return LocalUnit{-std::max(pole_a, pole_b) + 2 * h.d.degree(),
                     ring_.constant(F.div(lead, h.d.lead())), Poly{}};
  }

  const Poly& pi = p.pi;
  const ResidueField k(ring_, pi);
  const int va = val_or_inf(ring_, h.a, pi);
  const int vb = val_or_inf(ring_, h.b, pi);
  const int vd = ring_.valuation(h.d, pi);
  const Poly d0 = k.reduce(strip(ring_, h.d, pi, vd));
  const Poly d0_inv = k.inv(d0);

  switch (p.kind) {
    case PlaceKind::Ramified: {
      // Uniformizer y; π = y^2 · (f/π)^(-1).
      const Poly cofactor = k.reduce(ring_.div_exact(f_, pi));
      if (va <= vb) {
        Poly r = k.mul(k.reduce(strip(ring_, h.a, pi, va)), d0_inv);
        const int e = vd - va;
        const Poly c = e >= 0 ? k.pow(cofactor, e) : k.pow(k.inv(cofactor), -e);
        return LocalUnit{2 * va - 2 * vd, k.mul(r, c), Poly{}};
      }
      Poly r = k.mul(k.reduce(strip(ring_, h.b, pi, vb)), d0_inv);
      const int e = vd - vb;
      const Poly c = e >= 0 ? k.pow(cofactor, e) : k.pow(k.inv(cofactor), -e);
      return LocalUnit{2 * vb + 1 - 2 * vd, k.mul(r, c), Poly{}};
    }
    case PlaceKind::Inert: {
      const int m = std::min(va, vb);
      Poly re = k.mul(k.reduce(strip(ring_, h.a, pi, std::min(va, m))), d0_inv);
      Poly im = k.mul(k.reduce(strip(ring_, h.b, pi, std::min(vb, m))), d0_inv);
      if (va == kInfiniteValuation) re = Poly{};
      if (vb == kInfiniteValuation) im = Poly{};
      return LocalUnit{m - vd, re, im};
    }
    case PlaceKind::Split: {
      const int m = std::min(va, vb);
      const Poly a1 = h.a.is_zero() ? Poly{} : strip(ring_, h.a, pi, m);
      const Poly b1 = h.b.is_zero() ? Poly{} : strip(ring_, h.b, pi, m);
      const Poly s = k.add(k.reduce(a1), k.mul(k.reduce(b1), p.v));
      if (!s.is_zero()) return LocalUnit{m - vd, k.mul(s, d0_inv), Poly{}};
      // The conjugate a1 - b1·y is a unit here, so the whole norm valuation
      // belongs to this branch.
      const Poly n = ring_.sub(ring_.mul(a1, a1), ring_.mul(ring_.mul(b1, b1), f_));
      const int vn = ring_.valuation(n, pi);
      const Poly n0 = k.reduce(strip(ring_, n, pi, vn));
      const Poly conj = k.sub(k.reduce(a1), k.mul(k.reduce(b1), p.v));
      return LocalUnit{m + vn - vd, k.mul(n0, k.inv(k.mul(conj, d0))), Poly{}};
    }
    case PlaceKind::Infinite:
      break;
  }
  throw MathError("unknown place kind");
}

int Curve::ord(const CurvePlace& p, const CurveFunction& h) const { return local_unit(p, h).ord; }

CurveDivisor Curve::function_divisor(const CurveFunction& h) const {
  if (h.is_zero()) throw MathError("divisor of the zero function");
  std::set<Poly> primes;
  const Poly n = norm_numerator(h);
  for (const auto& [pi, mult] : ring_.factor(n).factors) primes.insert(pi);
  if (h.d.degree() > 0) {
    for (const auto& [pi, mult] : ring_.factor(h.d).factors) primes.insert(pi);
  }
  CurveDivisor div;
  const int at_infinity = ord(infinity(), h);
  if (at_infinity != 0) div[infinity()] = at_infinity;
  for (const Poly& pi : primes) {
    for (const CurvePlace& p : places_over(pi)) {
      const int o = ord(p, h);
      if (o != 0) div[p] = o;
    }
  }
  return div;
}

int Curve::divisor_degree(const CurveDivisor& d) const {
  int total = 0;
  for (const auto& [p, c] : d) total += c * p.degree();
  return total;
}

int Curve::legendre(const CurveFunction& h, const CurvePlace& p) const {
  const LocalUnit u = local_unit(p, h);
  if (u.ord % 2 != 0) throw MathError("symbol undefined: odd valuation");
  if (p.kind == PlaceKind::Infinite) return field().quadratic_character(u.re.coeff(0));
  const ResidueField k(ring_, p.pi);
  if (p.kind == PlaceKind::Inert) {
    const QuadraticExtension l(k, f_);
    return l.chi({u.re, u.im});
  }
  return k.chi(u.re);
}

bool Curve::unit_residue_is_square(const CurveFunction& h, const CurvePlace& p) const {
  const LocalUnit u = local_unit(p, h);
  if (p.kind == PlaceKind::Infinite) return field().sqrt(u.re.coeff(0)).has_value();
  const ResidueField k(ring_, p.pi);
  if (p.kind == PlaceKind::Inert) {
    const QuadraticExtension l(k, f_);
    return l.sqrt({u.re, u.im}).has_value();
  }
  return k.sqrt(u.re).has_value();
}

// -------------------------------------------------------------- Jacobian

bool Curve::is_semi_reduced(const Mumford& d) const {
  if (d.u.is_zero() || d.u.lead() != field().one()) return false;
  if (d.v.degree() >= d.u.degree()) return false;
  if (d.u.degree() == 0) return d.v.is_zero();
  return ring_.mod(ring_.sub(ring_.mul(d.v, d.v), f_), d.u).is_zero();
}

CurveDivisor Curve::mumford_divisor(const Mumford& d) const {
  CurveDivisor div;
  if (d.u.degree() < 1) return div;
  for (const auto& [pi, mult] : ring_.factor(d.u).factors) {
    const auto over = places_over(pi);
    if (over.front().kind == PlaceKind::Ramified) {
      div[over.front()] += mult;
      continue;
    }
    if (over.front().kind == PlaceKind::Inert) throw MathError("inert prime in a Mumford pair");
    const Poly v = ring_.mod(d.v, pi);
    div[v == over[0].v ? over[0] : over[1]] += mult;
  }
  return div;
}

Mumford Curve::negate(const Mumford& d) const {
  if (d.u.degree() < 1) return d;
  return Mumford{d.u, ring_.mod(ring_.neg(d.v), d.u)};
}

AddResult Curve::reduce(const Mumford& d) const {
  Mumford cur = d;
  CurveFunction fn = one();
  while (cur.u.degree() > genus_) {
    const Poly w = ring_.div_exact(ring_.sub(f_, ring_.mul(cur.v, cur.v)), cur.u);
    const Poly u2 = ring_.monic(w);
    // D - deg D·∞ = D' - deg D'·∞ + div((y - v)/u').
    fn = mul(fn, normalize(ring_.neg(cur.v), ring_.one(), u2));
    cur = Mumford{u2, u2.degree() < 1 ? Poly{} : ring_.mod(ring_.neg(cur.v), u2)};
  }
  return AddResult{cur, fn};
}

AddResult Curve::cantor_add(const Mumford& d1, const Mumford& d2) const {
  auto [g1, e1, e2] = ring_.xgcd(d1.u, d2.u);
  auto [g, c1, c2] = ring_.xgcd(g1, ring_.add(d1.v, d2.v));
  const Poly s1 = ring_.mul(c1, e1);
  const Poly s2 = ring_.mul(c1, e2);
  const Poly& s3 = c2;
  const Poly u = ring_.div_exact(ring_.mul(d1.u, d2.u), ring_.mul(g, g));
  Poly v;
  if (u.degree() >= 1) {
    Poly numer = ring_.add(ring_.add(ring_.mul(ring_.mul(s1, d1.u), d2.v),
                                     ring_.mul(ring_.mul(s2, d2.u), d1.v)),
                           ring_.mul(s3, ring_.add(ring_.mul(d1.v, d2.v), f_)));
    v = ring_.mod(ring_.div_exact(numer, g), u);
  }
  AddResult reduced = reduce(Mumford{u, v});
  reduced.fn = mul(reduced.fn, function(g));
  return reduced;
}

void Curve::build_jacobian() const {
  const Limits& lim = limits();
  const std::uint64_t q = field().order();
  if (genus_ > lim.max_jacobian_genus || q > lim.max_jacobian_field_order) {
    throw BoundError("Jacobian enumeration is capped at genus " +
                     std::to_string(lim.max_jacobian_genus) + " and q <= " +
                     std::to_string(lim.max_jacobian_field_order) +
                     " (raise EVENPOINT_MAX_JACOBIAN)");
  }
  const double weil_upper = std::pow(std::sqrt(static_cast<double>(q)) + 1.0, 2 * genus_);
  if (weil_upper > static_cast<double>(lim.max_jacobian_order)) {
    throw BoundError("Jacobian may exceed " + std::to_string(lim.max_jacobian_order) +
                     " elements (raise EVENPOINT_MAX_JACOBIAN)");
  }
  auto table = std::make_unique<JacobianTable>();
  for (int k = 0; k <= genus_; ++k) {
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= q;
    for (std::uint64_t ui = 0; ui < count; ++ui) {
      const Poly u = ring_.monic_from_index(k, ui);
      if (k == 0) {
        table->elements_.push_back(jacobian_zero());
        continue;
      }
      const Poly target = ring_.mod(f_, u);
      for (std::uint64_t vi = 0; vi < count; ++vi) {
        std::vector<Fe> c(k);
        std::uint64_t rest = vi;
        for (int i = 0; i < k; ++i) {
          c[i] = field().element(static_cast<std::uint32_t>(rest % q));
          rest /= q;
        }
        Poly v(std::move(c));
        if (ring_.mod(ring_.mul(v, v), u) == target) table->elements_.push_back(Mumford{u, v});
      }
    }
  }
  const std::size_t n = table->elements_.size();
  for (std::size_t i = 0; i < n; ++i) table->index_.emplace(table->elements_[i], i);

  table->double_.resize(n);
  table->half_.assign(n, JacobianTable::kNone);
  for (std::size_t i = 0; i < n; ++i) {
    const Mumford twice = cantor_add(table->elements_[i], table->elements_[i]).sum;
    const std::size_t j = table->index_.at(twice);
    table->double_[i] = j;
    if (j == 0) ++table->two_torsion_;
    if (table->half_[j] == JacobianTable::kNone) {
      table->half_[j] = i;
      ++table->doubled_count_;
    }
  }

  // Label cosets of 2J: adjoin generators until every element is labelled.
  constexpr std::uint32_t kUnlabelled = ~std::uint32_t{0};
  table->coset_.assign(n, kUnlabelled);
  std::vector<std::size_t> labelled;
  for (std::size_t i = 0; i < n; ++i) {
    if (table->half_[i] != JacobianTable::kNone) {
      table->coset_[i] = 0;
      labelled.push_back(i);
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (table->coset_[g] != kUnlabelled) continue;
    const int bit = table->two_rank_++;
    if (bit >= 31) throw MathError("J/2J rank out of range");
    table->generators_.push_back(g);
    std::vector<std::size_t> added;
    for (std::size_t h : labelled) {
      const Mumford s = cantor_add(table->elements_[h], table->elements_[g]).sum;
      const std::size_t j = table->index_.at(s);
      table->coset_[j] = table->coset_[h] | (std::uint32_t{1} << bit);
      added.push_back(j);
    }
    labelled.insert(labelled.end(), added.begin(), added.end());
  }
  jacobian_ = std::move(table);
}

const JacobianTable& Curve::jacobian() const {
  std::call_once(jacobian_once_, [this] { build_jacobian(); });
  return *jacobian_;
}

PlaceClass Curve::place_class(const CurvePlace& p) const {
  switch (p.kind) {
    case PlaceKind::Infinite:
      return PlaceClass{jacobian_zero(), 1, one()};
    case PlaceKind::Inert:
      // div π = P - 2 deg π·∞.
      return PlaceClass{jacobian_zero(), p.degree(), function(p.pi)};
    default: {
      const AddResult r = reduce(Mumford{p.pi, p.kind == PlaceKind::Split ? p.v : Poly{}});
      return PlaceClass{r.sum, p.degree(), r.fn};
    }
  }
}

bool Curve::is_two_divisible(const Mumford& d) const {
  const JacobianTable& table = jacobian();
  auto i = table.index_of(d);
  if (!i) throw MathError("not a reduced divisor on this curve");
  return table.is_doubled(*i);
}

CurveFunction Curve::lambda_extract(const CurvePlace& p) const {
  if (p.degree() % 2 != 0) throw MathError("no odd-valuation class exists");
  if (p.kind == PlaceKind::Inert) return function(p.pi);
  const PlaceClass pc = place_class(p);
  const JacobianTable& table = jacobian();
  const std::size_t i = table.index_of(pc.jac).value();
  auto half = table.half_of(i);
  if (!half) throw MathError("no odd-valuation class exists");
  // P - d∞ = C + div(h1) and 2E = C + div(h2), so P - 2E - (d - 2 deg E)∞ = div(h1/h2).
  const AddResult doubled = cantor_add(table.elements()[*half], table.elements()[*half]);
  if (doubled.sum != pc.jac) throw MathError("inconsistent Jacobian table");
  CurveFunction lambda = mul(pc.fn, doubled.fn);
  const auto odd = odd_places(lambda);
  if (odd.size() != 1 || odd.front() != p) {
    throw MathError("extracted function failed divisor verification");
  }
  return lambda;
}

// ---------------------------------------------------------------- zeta

std::vector<long long> Curve::point_counts(int n) const {
  std::vector<long long> census(n + 1, 0);
  for (int d = 1; d <= n; ++d) census[d] = static_cast<long long>(places_of_degree(d).size());
  std::vector<long long> counts(n);
  for (int i = 1; i <= n; ++i) {
    long long total = 0;
    for (int d = 1; d <= i; ++d) {
      if (i % d == 0) total += d * census[d];
    }
    counts[i - 1] = total;
  }
  return counts;
}

std::vector<long long> Curve::l_polynomial() const {
  const int g = genus_;
  const long long q = field().order();
  const auto counts = point_counts(g);
  // Power sums of the Frobenius eigenvalues: s_i = q^i + 1 - N_i.
  std::vector<long long> s(g + 1, 0);
  long long qi = 1;
  for (int i = 1; i <= g; ++i) {
    qi *= q;
    s[i] = qi + 1 - counts[i - 1];
  }
  // Newton: i e_i = sum_{k=1}^{i} (-1)^(k-1) e_{i-k} s_k.
  std::vector<long long> e(g + 1, 0);
  e[0] = 1;
  for (int i = 1; i <= g; ++i) {
    long long acc = 0;
    for (int k = 1; k <= i; ++k) acc += ((k % 2 == 1) ? 1 : -1) * e[i - k] * s[k];
    if (acc % i != 0) throw MathError("inconsistent point counts");
    e[i] = acc / i;
  }
  std::vector<long long> c(2 * g + 1, 0);
  for (int i = 0; i <= g; ++i) c[i] = (i % 2 == 0) ? e[i] : -e[i];
  long long qpow = 1;
  for (int i = g; i >= 0; --i) {
    // c_{2g-i} = q^(g-i) c_i.
    c[2 * g - i] = qpow * c[i];
    qpow *= q;
  }
  return c;
}

long long Curve::zeta_class_number() const {
  long long total = 0;
  for (long long c : l_polynomial()) total += c;
  return total;
}

// -------------------------------------------------------- square classes

CurveFunction Curve::square_class(const CurveFunction& h) const {
  if (h.is_zero()) throw MathError("zero has no square class");
  Poly a = ring_.mul(h.a, h.d);
  Poly b = ring_.mul(h.b, h.d);
  const Poly g = ring_.gcd(a, b);
  if (g.degree() > 0) {
    for (const auto& [pi, mult] : ring_.factor(g).factors) {
      if (mult < 2) continue;
      const Poly sq = power(ring_, pi, 2 * (mult / 2));
      a = ring_.div_exact(a, sq);
      b = ring_.div_exact(b, sq);
    }
  }
  const int pole_a = a.is_zero() ? -1 : 2 * a.degree();
  const int pole_b = b.is_zero() ? -1 : 2 * b.degree() + 2 * genus_ + 1;
  const Fe lead = pole_a > pole_b ? a.lead() : b.lead();
  const auto& F = field();
  Fe scale = F.inv(lead);
  if (F.quadratic_character(lead) == -1) scale = F.mul(scale, F.canonical_nonsquare());
  return CurveFunction{ring_.scale(a, scale), ring_.scale(b, scale), ring_.one()};
}

CurveFunction Curve::multiply(const CurveFunction& g, const CurveFunction& h) const {
  return square_class(mul(g, h));
}

std::vector<CurvePlace> Curve::odd_places(const CurveFunction& h) const {
  std::vector<CurvePlace> out;
  for (const auto& [p, c] : function_divisor(h)) {
    if (c % 2 != 0) out.push_back(p);
  }
  return out;
}

const std::vector<Curve::Candidate>& Curve::riemann_roch_candidates(int n) const {
  {
    std::lock_guard lock(candidate_mutex_);
    if (auto it = candidate_cache_.find(n); it != candidate_cache_.end()) return *it->second;
  }
  // a + b·y ∈ L(n∞): deg a <= n/2, 2 deg b + 2g + 1 <= n; leading constant 1.
  const std::uint64_t q = field().order();
  const int max_a = n / 2;
  const int max_b = n >= 2 * genus_ + 1 ? (n - 2 * genus_ - 1) / 2 : -1;
  std::uint64_t count_a = 1, count_b = 1;
  for (int i = 0; i <= max_a; ++i) count_a *= q;
  for (int i = 0; i <= max_b; ++i) count_b *= q;
  if (static_cast<double>(count_a) * static_cast<double>(count_b) >
      static_cast<double>(limits().max_enumeration)) {
    throw BoundError("Riemann-Roch space L(" + std::to_string(n) + "∞) too large to enumerate");
  }
  auto decode = [&](std::uint64_t index, int max_deg) {
    std::vector<Fe> c(max_deg + 1);
    for (int i = 0; i <= max_deg; ++i) {
      c[i] = field().element(static_cast<std::uint32_t>(index % q));
      index /= q;
    }
    return Poly(std::move(c));
  };
  auto list = std::make_shared<std::vector<Candidate>>();
  for (std::uint64_t bi = 0; bi < count_b; ++bi) {
    const Poly b = max_b >= 0 ? decode(bi, max_b) : Poly{};
    for (std::uint64_t ai = 0; ai < count_a; ++ai) {
      const Poly a = decode(ai, max_a);
      if (a.is_zero() && b.is_zero()) continue;
      const int pole_a = a.is_zero() ? -1 : 2 * a.degree();
      const int pole_b = b.is_zero() ? -1 : 2 * b.degree() + 2 * genus_ + 1;
      const Fe lead = pole_a > pole_b ? a.lead() : b.lead();
      if (lead != field().one()) continue;
      CurveFunction h = function(a, b);
      auto odd = odd_places(h);
      list->push_back(Candidate{std::move(h), std::move(odd)});
    }
  }
  std::stable_sort(list->begin(), list->end(), [](const Candidate& x, const Candidate& y) {
    return x.odd.size() < y.odd.size();
  });
  std::lock_guard lock(candidate_mutex_);
  auto [it, inserted] = candidate_cache_.emplace(n, std::move(list));
  return *it->second;
}

std::vector<Curve::Candidate> Curve::scan_candidates(const std::vector<CurvePlace>& removed,
                                                     int bound) const {
  std::vector<Candidate> out{{zeta(), {}}};
  for (const auto& [pi, mult] : ring_.factor(f_).factors) out.push_back({function(pi), {}});
  if (bound <= 0) return out;
  std::set<CurvePlace> allowed(removed.begin(), removed.end());
  allowed.insert(infinity());
  for (const auto& [pi, mult] : ring_.factor(f_).factors) allowed.insert(places_over(pi).front());
  for (const Candidate& c : riemann_roch_candidates(bound)) {
    const bool inside = std::all_of(c.odd.begin(), c.odd.end(),
                                    [&](const CurvePlace& p) { return allowed.count(p) > 0; });
    if (inside) out.push_back(c);
  }
  return out;
}

int Curve::default_scan_bound(const std::vector<CurvePlace>& removed) const {
  if (removed.empty()) return 0;
  int total = 0;
  for (const auto& p : removed) total += p.degree();
  return 2 * genus_ + total;
}

int Curve::pic_mod2_dim() const { return 1 + jacobian().two_rank(); }

BitVector Curve::pic_mod2_vector(const CurvePlace& p) const {
  const JacobianTable& table = jacobian();
  const int r = table.two_rank();
  BitVector out(r + 1);
  const PlaceClass pc = place_class(p);
  const std::uint32_t mask = table.coset_mask(table.index_of(pc.jac).value());
  for (int i = 0; i < r; ++i) out.set(i, (mask >> i) & 1u);
  out.set(r, pc.degree % 2 == 1);
  return out;
}

// ------------------------------------------------------------- text

std::string Curve::place_name(const CurvePlace& p) const {
  if (p.kind == PlaceKind::Infinite) return "inf";
  std::string name = format_poly(ring_, p.pi);
  if (p.kind == PlaceKind::Split) name += "@" + format_poly(ring_, p.v);
  return name;
}

std::string Curve::class_name(const CurveFunction& h) const {
  std::string out = format_curve_poly(ring_, h.a, h.b);
  if (h.d != ring_.one()) out = "(" + out + ")/(" + format_poly(ring_, h.d) + ")";
  return out;
}

std::optional<std::string> Curve::curve_f_name() const { return format_poly(ring_, f_); }

std::string Curve::mumford_name(const Mumford& d) const {
  return "(" + format_poly(ring_, d.u) + ", " + format_poly(ring_, d.v) + ")";
}

CurvePlace Curve::parse_place(std::string_view text) const {
  std::string trimmed;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
  }
  if (trimmed == "inf" || trimmed == "infinity") return infinity();
  const auto at = trimmed.find('@');
  Poly pi = parse_poly(ring_, std::string_view(trimmed).substr(0, at));
  if (pi.degree() < 1 || pi.lead() != field().one() || !ring_.is_irreducible(pi)) {
    throw MathError("a place needs a monic irreducible polynomial");
  }
  auto over = places_over(pi);
  if (over.front().kind != PlaceKind::Split) {
    if (at != std::string::npos) throw MathError("only split places take a branch value");
    return over.front();
  }
  if (at == std::string::npos) throw MathError("split place needs a branch value: π@v");
  Poly v;
  try {
    v = ring_.mod(parse_poly(ring_, std::string_view(trimmed).substr(at + 1)), pi);
  } catch (const ParseError& e) {
    throw ParseError("invalid branch value", at + 1 + e.position());
  }
  for (const auto& p : over) {
    if (p.v == v) return p;
  }
  throw MathError("branch value is not a root of y^2 = f modulo the place");
}

CurveFunction Curve::parse_class(std::string_view text) const {
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '/' && depth == 0) {
      auto [a, b] = parse_curve_poly(ring_, text.substr(0, i), f_);
      Poly d = parse_poly(ring_, text.substr(i + 1));
      if (d.is_zero()) throw MathError("zero denominator");
      return square_class(normalize(a, b, d));
    }
  }
  auto [a, b] = parse_curve_poly(ring_, text, f_);
  if (a.is_zero() && b.is_zero()) throw MathError("zero has no square class");
  return square_class(function(a, b));
}

}  // namespace evenpoint

#include "evenpoint/finite_field.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "evenpoint/errors.hpp"
#include "evenpoint/tonelli_shanks.hpp"

namespace evenpoint {
namespace {

using Coeffs = std::vector<std::uint32_t>;  // over F_p, low to high

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs mod_p(const Coeffs& a, const Coeffs& m, std::uint32_t p) {
  Coeffs r = a;
  trim(r);
  const std::size_t dm = m.size() - 1;
  // m is monic here.
  while (r.size() > dm && !r.empty()) {
    const std::uint32_t c = r.back();
    const std::size_t shift = r.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      r[shift + i] = static_cast<std::uint32_t>((r[shift + i] + (p - c) * m[i]) % p);
    }
    trim(r);
  }
  return r;
}

// Trial division by every monic polynomial of degree <= n/2; n is tiny here.
bool irreducible_over_prime(const Coeffs& f, std::uint32_t p) {
  const int n = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
      Coeffs g(d + 1, 0);
      std::uint64_t rest = k;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (mod_p(f, g, p).empty()) return false;
    }
  }
  return true;
}

Coeffs default_modulus(std::uint32_t p, int n) {
  if (n == 1) return {0, 1};
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) count *= p;
  for (std::uint64_t k = 0; k < count; ++k) {
    Coeffs f(n + 1, 0);
    std::uint64_t rest = k;
    for (int i = 0; i < n; ++i) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    f[n] = 1;
    if (irreducible_over_prime(f, p)) return f;
  }
  throw MathError("no irreducible polynomial of the requested degree");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldPtr FiniteField::create(std::uint32_t p, int n, std::vector<std::uint32_t> modulus,
                             const Limits& limits) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("characteristic must be an odd prime");
  if (n < 1) throw std::invalid_argument("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (int i = 0; i < n; ++i) {
    q *= p;
    if (q > limits.max_field_order) {
      throw BoundError("field order exceeds cap of " + std::to_string(limits.max_field_order));
    }
  }

  if (n == 1) {
    modulus = {0, 1};
  } else if (modulus.empty()) {
    modulus = default_modulus(p, n);
  } else {
    for (auto& c : modulus) c %= p;
    if (static_cast<int>(modulus.size()) != n + 1 || modulus.back() != 1) {
      throw std::invalid_argument("modulus must be monic of degree n");
    }
    if (!irreducible_over_prime(modulus, p)) {
      throw std::invalid_argument("modulus must be irreducible over F_p");
    }
  }

  auto field = std::shared_ptr<FiniteField>(new FiniteField());
  FiniteField& F = *field;
  F.p_ = p;
  F.n_ = n;
  F.q_ = static_cast<std::uint32_t>(q);
  F.modulus_ = modulus;

  const std::uint32_t size = F.q_;
  std::vector<Coeffs> coords(size);
  for (std::uint32_t idx = 0; idx < size; ++idx) {
    Coeffs c(n, 0);
    std::uint32_t rest = idx;
    for (int i = n - 1; i >= 0; --i) {
      c[i] = rest % p;
      rest /= p;
    }
    coords[idx] = std::move(c);
  }
  auto index_of = [&](const Coeffs& c) {
    std::uint32_t idx = 0;
    for (int i = 0; i < n; ++i) idx = idx * p + (i < static_cast<int>(c.size()) ? c[i] : 0);
    return idx;
  };

  F.add_.assign(static_cast<std::size_t>(size) * size, 0);
  F.mul_.assign(static_cast<std::size_t>(size) * size, 0);
  F.neg_.assign(size, 0);
  for (std::uint32_t a = 0; a < size; ++a) {
    Coeffs negated(n);
    for (int i = 0; i < n; ++i) negated[i] = (p - coords[a][i]) % p;
    F.neg_[a] = index_of(negated);
    for (std::uint32_t b = 0; b < size; ++b) {
      Coeffs sum(n);
      for (int i = 0; i < n; ++i) sum[i] = (coords[a][i] + coords[b][i]) % p;
      F.add_[a * size + b] = index_of(sum);

      Coeffs prod(2 * n - 1, 0);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          prod[i + j] = (prod[i + j] + coords[a][i] * coords[b][j]) % p;
        }
      }
      F.mul_[a * size + b] = index_of(mod_p(prod, modulus, p));
    }
  }
  Coeffs unit(n, 0);
  unit[0] = 1;
  F.one_ = Fe{index_of(unit)};

  F.inv_.assign(size, 0);
  for (std::uint32_t a = 1; a < size; ++a) {
    for (std::uint32_t b = 1; b < size; ++b) {
      if (F.mul_[a * size + b] == F.one_.v) {
        F.inv_[a] = b;
        break;
      }
    }
  }

  F.chi_.assign(size, 0);
  for (std::uint32_t a = 1; a < size; ++a) {
    const Fe power = F.pow(Fe{a}, (q - 1) / 2);
    F.chi_[a] = power == F.one_ ? 1 : -1;
  }
  for (std::uint32_t a = 1; a < size; ++a) {
    if (F.chi_[a] == -1) {
      F.zeta_ = Fe{a};
      break;
    }
  }
  return field;
}

FieldPtr FiniteField::of_order(std::uint64_t q, const Limits& limits) {
  if (q < 3) throw std::invalid_argument("field order must be an odd prime power");
  for (std::uint32_t p = 3; p <= q; p += 2) {
    if (q % p != 0) continue;
    if (!is_prime(p)) throw std::invalid_argument("field order must be an odd prime power");
    int n = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++n;
    }
    if (rest != 1) throw std::invalid_argument("field order must be an odd prime power");
    return create(p, n, {}, limits);
  }
  throw std::invalid_argument("field order must be an odd prime power");
}

Fe FiniteField::from_int(long long k) const {
  long long r = k % static_cast<long long>(p_);
  if (r < 0) r += p_;
  std::uint32_t idx = static_cast<std::uint32_t>(r);
  for (int i = 1; i < n_; ++i) idx *= p_;
  return Fe{idx};
}

Fe FiniteField::from_coords(std::span<const std::uint32_t> c) const {
  if (static_cast<int>(c.size()) > n_) throw std::invalid_argument("too many coordinates");
  std::uint32_t idx = 0;
  for (int i = 0; i < n_; ++i) {
    const std::uint32_t ci = i < static_cast<int>(c.size()) ? c[i] % p_ : 0;
    idx = idx * p_ + ci;
  }
  return Fe{idx};
}

std::vector<std::uint32_t> FiniteField::coords(Fe a) const {
  std::vector<std::uint32_t> c(n_, 0);
  std::uint32_t rest = a.v;
  for (int i = n_ - 1; i >= 0; --i) {
    c[i] = rest % p_;
    rest /= p_;
  }
  return c;
}

Fe FiniteField::inv(Fe a) const {
  if (a.v == 0) throw MathError("zero divisor");
  return Fe{inv_[a.v]};
}

Fe FiniteField::pow(Fe a, std::uint64_t e) const {
  Fe result = one_;
  Fe base = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

int FiniteField::quadratic_character(Fe a) const {
  if (a.v == 0) throw MathError("character undefined at zero");
  return chi_[a.v];
}

std::optional<Fe> FiniteField::sqrt(Fe a) const {
  auto root = tonelli_shanks(*this, a);
  if (!root) return std::nullopt;
  const Fe other = neg(*root);
  return std::min(*root, other);
}

std::string FiniteField::format(Fe a) const {
  if (n_ == 1) return std::to_string(a.v);
  std::string out = "[";
  const auto c = coords(a);
  for (int i = 0; i < n_; ++i) {
    if (i > 0) out += ',';
    out += std::to_string(c[i]);
  }
  return out + "]";
}

Fe FiniteField::parse(std::string_view text) const {
  auto parse_int = [&](std::string_view s) -> long long {
    std::size_t b = s.find_first_not_of(" \t");
    std::size_t e = s.find_last_not_of(" \t");
    if (b == std::string_view::npos) throw ParseError("empty field literal", 0);
    s = s.substr(b, e - b + 1);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw ParseError("invalid field literal '" + std::string(s) + "'", 0);
    }
    return value;
  };
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw ParseError("unterminated field literal", text.size());
    std::vector<std::uint32_t> c;
    std::string_view body = text.substr(1, text.size() - 2);
    while (!body.empty()) {
      const std::size_t comma = body.find(',');
      long long v = parse_int(body.substr(0, comma)) % static_cast<long long>(p_);
      if (v < 0) v += p_;
      c.push_back(static_cast<std::uint32_t>(v));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    if (static_cast<int>(c.size()) > n_) throw ParseError("too many coordinates in field literal", 0);
    return from_coords(c);
  }
  return from_int(parse_int(text));
}

}  // namespace evenpoint

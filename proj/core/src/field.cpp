#include "lucas/field.hpp"

#include <stdexcept>

namespace lucas {
namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over F_p; b nonzero.
Coeffs poly_rem(Coeffs a, const Coeffs& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t k = 0; k <= db; ++k) {
      const std::uint64_t sub = factor * b[k] % p;
      a[shift + k] = static_cast<std::uint32_t>((a[shift + k] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Coeffs poly_mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return poly_rem(std::move(r), m, p);
}

bool is_irreducible(const Coeffs& m, std::uint32_t p) {
  const std::size_t deg = m.size() - 1;
  if (deg <= 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t k = 0; k < d; ++k) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Coeffs divisor(d + 1, 0);
      std::uint64_t rest = idx;
      for (std::size_t k = 0; k < d; ++k) {
        divisor[k] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      divisor[d] = 1;
      if (poly_rem(m, divisor, p).empty()) return false;
    }
  }
  return true;
}

std::uint32_t add_digits(std::uint32_t p, std::uint32_t lambda, std::uint32_t x, std::uint32_t y) {
  if (p == 2) return x ^ y;
  std::uint32_t result = 0, scale = 1;
  for (std::uint32_t k = 0; k < lambda; ++k) {
    result += ((x % p + y % p) % p) * scale;
    x /= p;
    y /= p;
    scale *= p;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::vector<std::uint32_t>> default_modulus(std::uint32_t q) {
  switch (q) {
    case 4: return Coeffs{1, 1, 1};
    case 8: return Coeffs{1, 1, 0, 1};
    case 9: return Coeffs{2, 2, 1};
    case 16: return Coeffs{1, 1, 0, 0, 1};
    case 25: return Coeffs{2, 4, 1};
    case 27: return Coeffs{1, 2, 0, 1};
    default: break;
  }
  if (is_prime(q)) return Coeffs{0, 1};
  return std::nullopt;
}

FiniteField::FiniteField(std::uint32_t p) : FiniteField(p, Coeffs{0, 1}) {}

FiniteField::FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (p > (1u << 30)) throw std::invalid_argument("characteristic too large");
  for (auto& c : modulus) {
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
  }
  trim(modulus);
  if (modulus.size() < 2 || modulus.back() != 1)
    throw std::invalid_argument("modulus must be monic of degree >= 1");
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->lambda = static_cast<std::uint32_t>(modulus.size() - 1);
  std::uint64_t q = 1;
  for (std::uint32_t k = 0; k < impl->lambda; ++k) {
    q *= p;
    if (q > (impl->lambda == 1 ? (1ull << 30) : (1ull << 16)))
      throw std::invalid_argument("field order too large");
  }
  impl->q = static_cast<std::uint32_t>(q);
  if (impl->lambda > 1 && !is_irreducible(modulus, p))
    throw std::invalid_argument("modulus is reducible over F_" + std::to_string(p));
  impl->modulus = modulus;

  if (impl->lambda > 1) {
    const std::uint32_t lambda = impl->lambda;
    auto to_coeffs = [&](std::uint32_t code) {
      Coeffs c(lambda, 0);
      for (std::uint32_t k = 0; k < lambda; ++k) {
        c[k] = code % p;
        code /= p;
      }
      trim(c);
      return c;
    };
    auto to_code = [&](const Coeffs& c) {
      std::uint32_t code = 0;
      for (std::size_t k = c.size(); k-- > 0;) code = code * p + c[k];
      return code;
    };
    // A primitive element exists because the modulus is irreducible.
    const std::uint32_t group = impl->q - 1;
    for (std::uint32_t cand = 2; cand < impl->q; ++cand) {
      std::vector<std::uint32_t> exp;
      exp.reserve(group);
      Coeffs g = to_coeffs(cand), acc{1};
      bool primitive = true;
      for (std::uint32_t k = 0; k < group; ++k) {
        const std::uint32_t code = to_code(acc);
        if (k > 0 && code == 1) {
          primitive = false;
          break;
        }
        exp.push_back(code);
        acc = poly_mulmod(acc, g, modulus, p);
      }
      if (!primitive) continue;
      impl->exp = std::move(exp);
      impl->log.assign(impl->q, 0);
      for (std::uint32_t k = 0; k < group; ++k) impl->log[impl->exp[k]] = k;
      break;
    }
    if (impl->exp.empty()) throw std::logic_error("no primitive element found");
  }
  if (impl->lambda > 1 && impl->q <= 256) {
    impl->add_table.resize(std::size_t{impl->q} * impl->q);
    for (std::uint32_t a = 0; a < impl->q; ++a)
      for (std::uint32_t b = 0; b < impl->q; ++b)
        impl->add_table[std::size_t{a} * impl->q + b] =
            static_cast<std::uint16_t>(add_digits(p, impl->lambda, a, b));
  }
  impl_ = std::move(impl);
}

FiniteField FiniteField::of_order(std::uint32_t q) {
  auto m = default_modulus(q);
  if (!m) throw std::invalid_argument("no default modulus for q = " + std::to_string(q));
  std::uint32_t p = q;
  for (std::uint32_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  return FiniteField(p, *m);
}

Fq FiniteField::from_int(long long n) const {
  const long long p = impl_->p;
  return Fq{static_cast<std::uint32_t>(((n % p) + p) % p)};
}

Fq FiniteField::generator() const {
  if (impl_->lambda == 1) throw std::invalid_argument("prime field has no generator symbol");
  return Fq{impl_->p};
}

Fq FiniteField::add(Fq a, Fq b) const {
  const Impl& f = *impl_;
  if (f.lambda == 1) {
    const std::uint32_t s = a.code + b.code;
    return Fq{s >= f.p ? s - f.p : s};
  }
  if (!f.add_table.empty()) return Fq{f.add_table[std::size_t{a.code} * f.q + b.code]};
  return Fq{add_digits(f.p, f.lambda, a.code, b.code)};
}

Fq FiniteField::neg(Fq a) const {
  const Impl& f = *impl_;
  if (f.p == 2) return a;
  if (f.lambda == 1) return Fq{a.code == 0 ? 0 : f.p - a.code};
  std::uint32_t result = 0, scale = 1, x = a.code;
  for (std::uint32_t k = 0; k < f.lambda; ++k) {
    const std::uint32_t d = x % f.p;
    result += (d == 0 ? 0 : f.p - d) * scale;
    x /= f.p;
    scale *= f.p;
  }
  return Fq{result};
}

Fq FiniteField::mul(Fq a, Fq b) const {
  const Impl& f = *impl_;
  if (f.lambda == 1) return Fq{static_cast<std::uint32_t>(std::uint64_t{a.code} * b.code % f.p)};
  if (a.code == 0 || b.code == 0) return Fq{0};
  const std::uint32_t group = f.q - 1;
  std::uint32_t e = f.log[a.code] + f.log[b.code];
  if (e >= group) e -= group;
  return Fq{f.exp[e]};
}

Fq FiniteField::inv(Fq a) const {
  const Impl& f = *impl_;
  if (a.code == 0) throw std::domain_error("inverse of zero in " + tag());
  if (f.lambda == 1) return Fq{inv_mod(a.code, f.p)};
  const std::uint32_t group = f.q - 1;
  return Fq{f.exp[(group - f.log[a.code]) % group]};
}

Fq FiniteField::pow(Fq a, std::uint64_t e) const {
  Fq result = one();
  Fq base = a;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

std::vector<std::uint32_t> FiniteField::coefficients(Fq a) const {
  std::vector<std::uint32_t> c(impl_->lambda, 0);
  std::uint32_t x = a.code;
  for (std::uint32_t k = 0; k < impl_->lambda; ++k) {
    c[k] = x % impl_->p;
    x /= impl_->p;
  }
  return c;
}

Fq FiniteField::from_coefficients(const std::vector<std::uint32_t>& c) const {
  if (c.size() > impl_->lambda) throw std::invalid_argument("too many coefficients for " + tag());
  std::uint32_t code = 0;
  for (std::size_t k = c.size(); k-- > 0;) code = code * impl_->p + (c[k] % impl_->p);
  return Fq{code};
}

std::vector<Fq> FiniteField::elements() const {
  std::vector<Fq> out;
  out.reserve(impl_->q);
  for (std::uint32_t c = 0; c < impl_->q; ++c) out.push_back(Fq{c});
  return out;
}

std::optional<Fq> FiniteField::symbol(std::string_view name) const {
  if (name == "u" && impl_->lambda > 1) return generator();
  return std::nullopt;
}

std::uint32_t FiniteField::prime_subfield_value(Fq a) const {
  if (a.code >= impl_->p) throw std::domain_error("element is not in the prime subfield");
  return a.code;
}

std::string FiniteField::format(Fq a, bool nested) const {
  if (impl_->lambda == 1) return std::to_string(a.code);
  const auto c = coefficients(a);
  std::string out;
  const char* sep = nested ? "+" : " + ";
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    if (!out.empty()) out += sep;
    std::string mono = k == 0 ? "" : (k == 1 ? "u" : "u^" + std::to_string(k));
    if (k == 0)
      out += std::to_string(c[k]);
    else if (c[k] == 1)
      out += mono;
    else
      out += std::to_string(c[k]) + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

}  // namespace lucas

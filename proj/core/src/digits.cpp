#include "lucas/digits.hpp"

#include <stdexcept>

namespace lucas {

Digits to_digits(std::uint64_t n, std::uint64_t base) {
  if (base < 2) throw std::invalid_argument("digit base must be >= 2");
  Digits d{base, {}};
  for (; n > 0; n /= base) d.digits.push_back(n % base);
  return d;
}

std::uint64_t from_digits(const Digits& d) {
  std::uint64_t n = 0;
  for (std::size_t k = d.digits.size(); k-- > 0;) n = n * d.base + d.digits[k];
  return n;
}

std::uint64_t digit_sum(std::uint64_t i, std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("digit base must be >= 2");
  std::uint64_t s = 0;
  for (; i > 0; i /= q) s += i % q;
  return s;
}

std::uint64_t digit_at(std::uint64_t n, std::uint64_t q, std::size_t pos) {
  for (std::size_t k = 0; k < pos && n > 0; ++k) n /= q;
  return n % q;
}

bool is_power_of(std::uint64_t n, std::uint64_t q) {
  if (n == 0) return false;
  while (n % q == 0) n /= q;
  return n == 1;
}

namespace {

// C(m, n) mod p for single digits 0 <= n <= m < p.
std::uint32_t small_binom(std::uint64_t m, std::uint64_t n, std::uint32_t p) {
  if (2 * n > m) n = m - n;
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    num = num * ((m - k) % p) % p;
    den = den * ((k + 1) % p) % p;
  }
  // den is a unit since n < p.
  std::uint64_t inv = 1, base = den;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(num * inv % p);
}

}  // namespace

std::uint32_t binom_mod_p(std::uint64_t m, std::uint64_t n, std::uint32_t p) {
  if (n > m) return 0;
  std::uint64_t result = 1;
  while (n > 0 || m > 0) {
    const std::uint64_t mi = m % p, ni = n % p;
    if (ni > mi) return 0;
    if (ni != 0 && ni != mi) result = result * small_binom(mi, ni, p) % p;
    m /= p;
    n /= p;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace lucas

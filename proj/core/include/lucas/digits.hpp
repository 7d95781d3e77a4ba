#pragma once

#include <cstdint>
#include <vector>

#include "lucas/field.hpp"

namespace lucas {

/// Base-q expansion d_0 + d_1 q + ... with no trailing zero digits stored.
struct Digits {
  std::uint64_t base = 2;
  std::vector<std::uint64_t> digits;
  friend bool operator==(const Digits&, const Digits&) = default;
};

Digits to_digits(std::uint64_t n, std::uint64_t base);
std::uint64_t from_digits(const Digits& d);

/// Sum of the base-q digits of i.
std::uint64_t digit_sum(std::uint64_t i, std::uint64_t q);

/// Digit at position pos of n in base q.
std::uint64_t digit_at(std::uint64_t n, std::uint64_t q, std::size_t pos);

/// True iff n = q^k for some k >= 0.
bool is_power_of(std::uint64_t n, std::uint64_t q);

/// C(m, n) mod p via the digitwise product of small binomials in base p.
/// Returns 0 when n > m.
std::uint32_t binom_mod_p(std::uint64_t m, std::uint64_t n, std::uint32_t p);

/// Same value as an element of the prime subfield of the given field.
inline Fq binom_mod_p(std::uint64_t m, std::uint64_t n, const FiniteField& field) {
  return Fq{binom_mod_p(m, n, field.characteristic())};
}

}  // namespace lucas

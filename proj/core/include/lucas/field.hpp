#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace lucas {

/// Element of F_q. The code packs the coefficient vector of the residue
/// class modulo the defining polynomial as base-p digits: code = sum c_k p^k.
struct Fq {
  std::uint32_t code = 0;
  friend auto operator<=>(const Fq&, const Fq&) = default;
};

/// Known-good default moduli keyed by q (Conway polynomials), low degree first.
std::optional<std::vector<std::uint32_t>> default_modulus(std::uint32_t q);

bool is_prime(std::uint64_t n);

/// Context for F_q = F_p[u]/(m(u)). Cheap to copy; tables are shared and
/// immutable after construction.
class FiniteField {
 public:
  using Elem = Fq;

  /// F_p with the identity modulus u.
  explicit FiniteField(std::uint32_t p);
  /// F_p[u]/(modulus); modulus is monic of degree lambda, low degree first.
  /// Irreducibility is verified by trial division.
  FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  /// F_q with the default modulus from the built-in table (or F_p if q is prime).
  static FiniteField of_order(std::uint32_t q);

  std::uint32_t characteristic() const { return impl_->p; }
  std::uint32_t degree() const { return impl_->lambda; }
  std::uint32_t order() const { return impl_->q; }
  const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }
  bool is_prime_field() const { return impl_->lambda == 1; }

  Fq zero() const { return Fq{0}; }
  Fq one() const { return Fq{1}; }
  Fq from_int(long long n) const;
  /// Generator u of the extension; throws for prime fields.
  Fq generator() const;

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const;
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::uint64_t e) const;
  Fq frobenius(Fq a) const { return pow(a, impl_->p); }
  bool is_zero(Fq a) const { return a.code == 0; }
  bool is_one(Fq a) const { return a.code == 1; }

  std::vector<std::uint32_t> coefficients(Fq a) const;
  Fq from_coefficients(const std::vector<std::uint32_t>& c) const;

  /// All q elements in code order.
  std::vector<Fq> elements() const;
  template <class Rng>
  Fq random(Rng& rng) const {
    std::uniform_int_distribution<std::uint32_t> dist(0, impl_->q - 1);
    return Fq{dist(rng)};
  }

  /// "u" names the generator of a proper extension.
  std::optional<Fq> symbol(std::string_view name) const;
  std::string format(Fq a, bool nested = false) const;
  /// Ring tag used in file headers, e.g. "F_4".
  std::string tag() const { return "F_" + std::to_string(impl_->q); }
  std::uint32_t prime_subfield_value(Fq a) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.impl_ == b.impl_ ||
           (a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus);
  }

 private:
  struct Impl {
    std::uint32_t p = 2;
    std::uint32_t lambda = 1;
    std::uint32_t q = 2;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> log;  // extension only; log[0] unused
    std::vector<std::uint32_t> exp;  // length q - 1
    std::vector<std::uint16_t> add_table;  // extension with q <= 256
  };
  std::shared_ptr<const Impl> impl_;
};

}  // namespace lucas

#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace lucas {

// Every coefficient ring in this library is a context object with value-type
// elements in canonical form, so element equality is plain operator==.
template <class R>
concept CommutativeRing = requires(const R& r, const typename R::Elem& a, long long n) {
  { r.zero() } -> std::convertible_to<typename R::Elem>;
  { r.one() } -> std::convertible_to<typename R::Elem>;
  { r.from_int(n) } -> std::convertible_to<typename R::Elem>;
  { r.add(a, a) } -> std::convertible_to<typename R::Elem>;
  { r.sub(a, a) } -> std::convertible_to<typename R::Elem>;
  { r.neg(a) } -> std::convertible_to<typename R::Elem>;
  { r.mul(a, a) } -> std::convertible_to<typename R::Elem>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
  { r.characteristic() } -> std::convertible_to<std::uint32_t>;
  { r.format(a, true) } -> std::convertible_to<std::string>;
  { r.tag() } -> std::convertible_to<std::string>;
  { a == a } -> std::convertible_to<bool>;
};

template <class R>
concept HasDivision = requires(const R& r, const typename R::Elem& a) {
  { r.div(a, a) } -> std::convertible_to<typename R::Elem>;
};

template <CommutativeRing R>
typename R::Elem power(const R& ring, typename R::Elem base, std::uint64_t e) {
  typename R::Elem result = ring.one();
  for (; e > 0; e >>= 1) {
    if (e & 1) result = ring.mul(result, base);
    if (e > 1) base = ring.mul(base, base);
  }
  return result;
}

template <CommutativeRing R>
bool is_one(const R& ring, const typename R::Elem& a) {
  return a == ring.one();
}

namespace detail {

// Coefficient text that must be parenthesized when followed by "*monomial".
inline bool is_composite_text(std::string_view s) {
  return s.find_first_of("+-*/ ") != std::string_view::npos;
}

inline std::string monomial_text(const std::string& var, std::size_t e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace detail
}  // namespace lucas

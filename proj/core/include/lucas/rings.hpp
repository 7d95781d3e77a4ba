#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lucas/field.hpp"
#include "lucas/fraction.hpp"
#include "lucas/poly.hpp"

namespace lucas {

/// F_q[v]: used for F_q[x], for A = F_q[th], and for F_q[u]-style helpers.
using PolyFq = PolyRing<FiniteField>;
/// Frac(A) = F_q(th).
using FracA = FractionField<PolyFq>;
/// A[v]: A[x], and A[t] for the Pellarin map.
using PolyA = PolyRing<PolyFq>;
/// Frac(A)[x].
using PolyFracA = PolyRing<FracA>;

using AnyRing = std::variant<FiniteField, PolyFq, PolyA, FracA, PolyFracA>;

/// Field of order q with an optional modulus override (low degree first).
FiniteField make_field(std::uint32_t q, const std::optional<std::vector<std::uint32_t>>& modulus = std::nullopt);

/// Parses a ring tag: "F_<q>", "F_<q>[v]", "F_<q>[v][w]", "F_<q>(v)", "F_<q>(v)[w]".
AnyRing parse_ring_tag(std::string_view tag,
                       const std::optional<std::vector<std::uint32_t>>& modulus = std::nullopt);

std::string ring_tag(const AnyRing& ring);

/// Extracts the F_q context underlying any supported ring.
const FiniteField& ground_field(const AnyRing& ring);

/// Parses a modulus polynomial in u over F_p into coefficients, low degree first.
std::vector<std::uint32_t> parse_modulus(std::uint32_t p, std::string_view text);

}  // namespace lucas

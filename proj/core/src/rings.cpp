#include "lucas/rings.hpp"

#include <regex>
#include <stdexcept>
#include <string>

#include "lucas/expr.hpp"

namespace lucas {

FiniteField make_field(std::uint32_t q, const std::optional<std::vector<std::uint32_t>>& modulus) {
  if (q < 2) throw std::invalid_argument("field order must be >= 2");
  std::uint32_t p = q;
  for (std::uint32_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (modulus) {
    FiniteField f(p, *modulus);
    if (f.order() != q) throw std::invalid_argument("modulus degree does not match q = " + std::to_string(q));
    return f;
  }
  return FiniteField::of_order(q);
}

AnyRing parse_ring_tag(std::string_view tag, const std::optional<std::vector<std::uint32_t>>& modulus) {
  static const std::regex re(R"(F_(\d+)((?:\[[A-Za-z_]\w*\]|\([A-Za-z_]\w*\))*))");
  static const std::regex group_re(R"((\[|\()([A-Za-z_]\w*)(\]|\)))");
  const std::string s(tag);
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw ParseError("unrecognized ring tag '" + s + "'", 0);
  const FiniteField field = make_field(static_cast<std::uint32_t>(std::stoul(m[1].str())), modulus);
  std::vector<std::pair<bool, std::string>> groups;  // (is_fraction, var)
  const std::string rest = m[2].str();
  for (auto it = std::sregex_iterator(rest.begin(), rest.end(), group_re); it != std::sregex_iterator(); ++it)
    groups.emplace_back((*it)[1].str() == "(", (*it)[2].str());

  if (groups.empty()) return field;
  if (groups.size() == 1) {
    PolyFq ring(field, groups[0].second);
    if (groups[0].first) return FracA(ring);
    return ring;
  }
  if (groups.size() == 2 && !groups[1].first) {
    PolyFq inner(field, groups[0].second);
    if (groups[0].first) return PolyFracA(FracA(inner), groups[1].second);
    return PolyA(inner, groups[1].second);
  }
  throw ParseError("unsupported ring tag '" + s + "'", 0);
}

std::string ring_tag(const AnyRing& ring) {
  return std::visit([](const auto& r) { return r.tag(); }, ring);
}

const FiniteField& ground_field(const AnyRing& ring) {
  struct Visitor {
    const FiniteField& operator()(const FiniteField& f) const { return f; }
    const FiniteField& operator()(const PolyFq& r) const { return r.base(); }
    const FiniteField& operator()(const PolyA& r) const { return r.base().base(); }
    const FiniteField& operator()(const FracA& r) const { return r.ring().base(); }
    const FiniteField& operator()(const PolyFracA& r) const { return r.base().ring().base(); }
  };
  return std::visit(Visitor{}, ring);
}

std::vector<std::uint32_t> parse_modulus(std::uint32_t p, std::string_view text) {
  const PolyFq ring(FiniteField(p), "u");
  const auto f = parse_elem(ring, text);
  std::vector<std::uint32_t> out;
  for (const auto& c : f.coeffs) out.push_back(c.code);
  return out;
}

}  // namespace lucas

#include "lucas/actions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lucas/expr.hpp"

namespace lucas {

std::uint64_t DigitPerm::window() const {
  std::uint64_t w = 1;
  for (std::size_t i = 0; i < K; ++i) w *= q;
  return w;
}

DigitPerm make_digit_perm(std::uint64_t q, std::vector<std::size_t> perm) {
  if (q < 2) throw std::invalid_argument("digit base must be at least 2");
  std::vector<bool> seen(perm.size(), false);
  for (auto v : perm) {
    if (v >= perm.size() || seen[v]) throw std::invalid_argument("digit permutation is not a bijection");
    seen[v] = true;
  }
  const std::size_t K = perm.size();
  return DigitPerm{q, K, std::move(perm)};
}

DigitPerm identity_perm(std::uint64_t q, std::size_t K) {
  std::vector<std::size_t> perm(K);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return make_digit_perm(q, std::move(perm));
}

DigitPerm parse_digit_perm(std::string_view text, std::uint64_t q, std::size_t K) {
  std::vector<std::size_t> perm(K);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<bool> assigned(K, false);
  std::istringstream items{std::string(text)};
  std::string item;
  std::size_t offset = 0;
  while (std::getline(items, item, ',')) {
    const auto arrow = item.find('>');
    if (arrow == std::string::npos) throw ParseError("expected 'i>j' in permutation", offset);
    std::size_t from = 0, to = 0;
    try {
      std::size_t used = 0;
      from = std::stoull(item.substr(0, arrow), &used);
      if (used != arrow) throw ParseError("bad digit position", offset);
      to = std::stoull(item.substr(arrow + 1), &used);
      if (used != item.size() - arrow - 1) throw ParseError("bad digit position", offset + arrow + 1);
    } catch (const std::logic_error&) {
      throw ParseError("bad digit position", offset);
    }
    if (from >= K || to >= K) throw std::invalid_argument("digit position outside the window 0.." + std::to_string(K - 1));
    if (assigned[from]) throw std::invalid_argument("position " + std::to_string(from) + " mapped twice");
    assigned[from] = true;
    perm[from] = to;
    offset += item.size() + 1;
  }
  return make_digit_perm(q, std::move(perm));
}

DigitPerm compose(const DigitPerm& a, const DigitPerm& b) {
  if (a.q != b.q || a.K != b.K) throw std::invalid_argument("permutations act on different windows");
  std::vector<std::size_t> perm(a.K);
  for (std::size_t i = 0; i < a.K; ++i) perm[i] = a.perm[b.perm[i]];
  return DigitPerm{a.q, a.K, std::move(perm)};
}

DigitPerm inverse(const DigitPerm& s) {
  std::vector<std::size_t> perm(s.K);
  for (std::size_t i = 0; i < s.K; ++i) perm[s.perm[i]] = i;
  return DigitPerm{s.q, s.K, std::move(perm)};
}

std::uint64_t sigma_star_index(const DigitPerm& s, std::uint64_t n) {
  if (n >= s.window()) throw std::out_of_range("index " + std::to_string(n) + " outside the window q^K");
  std::vector<std::uint64_t> weight(s.K, 1);
  for (std::size_t i = 1; i < s.K; ++i) weight[i] = weight[i - 1] * s.q;
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < s.K; ++i, n /= s.q) out += (n % s.q) * weight[s.perm[i]];
  return out;
}

std::pair<NullSeq, std::vector<std::size_t>> transport_null_seq(const DigitPerm& s, const NullSeq& x) {
  std::vector<std::pair<std::uint64_t, std::size_t>> moved;
  for (std::size_t j = 0; j < x.indices.size(); ++j) moved.emplace_back(sigma_star_index(s, x.indices[j]), j);
  std::sort(moved.begin(), moved.end());
  NullSeq out{x.p, {}};
  std::vector<std::size_t> order;
  for (const auto& [idx, j] : moved) {
    out.indices.push_back(idx);
    order.push_back(j);
  }
  return {make_null_seq(std::move(out.indices), x.p), std::move(order)};
}

std::string StabilityReport::describe() const {
  std::string s = "multiplicative: " + std::string(before.pass ? "yes" : "no") + " -> " + (after.pass ? "yes" : "no");
  if (image_before)
    s += "\ncarlitz image: " + std::string(*image_before ? "yes" : "no") + " -> " + (*image_after ? "yes" : "no");
  return s;
}

}  // namespace lucas

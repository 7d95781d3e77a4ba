#include "lucas/second_construction.hpp"

#include <sstream>

#include "lucas/digits.hpp"
#include "lucas/expr.hpp"

namespace lucas {
namespace {

bool products_vanish(std::uint64_t a, std::uint64_t b, std::uint32_t p) { return binom_mod_p(a + b, b, p) == 0; }

}  // namespace

NullCheck is_null_sequence(std::span<const std::uint64_t> indices, std::uint32_t p) {
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] == 0) throw std::invalid_argument("null-sequence indices must be >= 1");
    if (k > 0 && indices[k] <= indices[k - 1]) throw std::invalid_argument("null-sequence indices must increase");
  }
  for (std::size_t j = 0; j < indices.size(); ++j)
    for (std::size_t t = j; t < indices.size(); ++t)
      if (!products_vanish(indices[j], indices[t], p)) return {false, std::pair{indices[j], indices[t]}};
  return {};
}

NullSeq make_null_seq(std::vector<std::uint64_t> indices, std::uint32_t p) {
  const auto check = is_null_sequence(indices, p);
  if (!check.is_null)
    throw std::invalid_argument("not a null sequence: D_" + std::to_string(check.violation->first) + " * D_" +
                                std::to_string(check.violation->second) + " != 0");
  return NullSeq{p, std::move(indices)};
}

NullSeq power_minus_one_sequence(std::uint32_t p, std::size_t count) {
  std::vector<std::uint64_t> idx;
  std::uint64_t power = 1;
  for (std::size_t i = 1; i <= count; ++i) {
    power *= p;
    idx.push_back(power - 1);
  }
  return make_null_seq(std::move(idx), p);
}

std::vector<NullSeq> enumerate_maximal_null_sequences(std::uint32_t p, std::uint64_t bound, std::size_t limit) {
  std::vector<std::uint64_t> candidates;
  for (std::uint64_t i = 1; i < bound; ++i)
    if (products_vanish(i, i, p)) candidates.push_back(i);

  std::vector<NullSeq> out;
  std::vector<std::uint64_t> current;
  auto compatible = [&](std::uint64_t c) {
    for (auto x : current)
      if (!products_vanish(x, c, p)) return false;
    return true;
  };
  // Depth-first over increasing index choices; a leaf is kept when no
  // candidate (before or after) can be added.
  auto recurse = [&](auto& self, std::size_t from) -> void {
    if (out.size() >= limit) return;
    bool extended = false;
    for (std::size_t k = from; k < candidates.size(); ++k) {
      if (!compatible(candidates[k])) continue;
      extended = true;
      current.push_back(candidates[k]);
      self(self, k + 1);
      current.pop_back();
      if (out.size() >= limit) return;
    }
    if (extended) return;
    for (auto c : candidates) {
      const bool present = std::find(current.begin(), current.end(), c) != current.end();
      if (!present && compatible(c)) return;
    }
    out.push_back(NullSeq{p, current});
  };
  recurse(recurse, 0);
  return out;
}

std::string format_null_seq(const NullSeq& x) {
  std::string out = "p=" + std::to_string(x.p) + "\n";
  for (std::size_t k = 0; k < x.indices.size(); ++k) out += (k ? "," : "") + std::to_string(x.indices[k]);
  return out + "\n";
}

NullSeq parse_null_seq(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header, body;
  std::getline(in, header);
  if (header.rfind("p=", 0) != 0) throw ParseError("expected header 'p=<p>'", 0);
  std::uint32_t p = 0;
  try {
    p = static_cast<std::uint32_t>(std::stoul(header.substr(2)));
  } catch (const std::logic_error&) {
    throw ParseError("bad characteristic", 2);
  }
  std::getline(in, body);
  std::vector<std::uint64_t> idx;
  std::istringstream items(body);
  std::string item;
  while (std::getline(items, item, ',')) {
    try {
      std::size_t used = 0;
      idx.push_back(std::stoull(item, &used));
      if (used != item.size()) throw ParseError("bad index '" + item + "'", header.size() + 1);
    } catch (const std::logic_error&) {
      throw ParseError("bad index '" + item + "'", header.size() + 1);
    }
  }
  return make_null_seq(std::move(idx), p);
}

}  // namespace lucas

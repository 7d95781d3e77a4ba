#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lucas/binomial_seq.hpp"
#include "lucas/carlitz.hpp"
#include "lucas/rings.hpp"

namespace lucas {

/// A validated prefix p_0 .. p_{n-1} over F_p[x] with the degree bound for
/// the next entry.
struct PrefixState {
  PolyFq ring;
  PolySeq<Fq> prefix;
  std::size_t d = 1;
};

/// Solution set of the step equation for p_n: particular + span(kernel).
struct StepResult {
  Poly<Fq> particular;
  std::vector<Poly<Fq>> kernel;
};

/// Solves p_n(x+y) - p_n(x) - p_n(y) = sum_{0<i<n} C(n,i) p_i(x) p_{n-i}(y)
/// in the coefficients of p_n (degree <= d). nullopt means no solution.
/// Requires a prime field, a nonempty prefix with p_0 = 1, and d >= 1.
std::optional<StepResult> extend_step(const PrefixState& s);

struct EnumerateOptions {
  std::uint32_t p = 2;
  std::size_t N = 2;
  std::size_t d = 1;
  std::size_t budget = 10000;
  unsigned workers = 1;
};

struct EnumeratedSequence {
  PolySeq<Fq> seq;
  std::vector<std::size_t> kernel_dims;  // kernel dimension at n = 1 .. N-1
};

struct EnumerateResult {
  std::vector<EnumeratedSequence> sequences;
  bool budget_exhausted = false;
};

/// Depth-first search over the solution tree with p_0 = 1. At every step the
/// children are particular + sum_k c_k kernel_k for (c_0, c_1, ...) in
/// lexicographic order. The output order is the same for every worker count;
/// `on_emit` fires during the search only when workers == 1 and after the
/// merge otherwise.
EnumerateResult enumerate(const EnumerateOptions& opt,
                          const std::function<void(const EnumeratedSequence&)>& on_emit = {});

enum class Classification { CarlitzImage, SecondForm, CarlitzQuotientHeuristic, Unresolved };
const char* to_string(Classification c);

enum class Reading { Member, NotMember, Undecided };
const char* to_string(Reading r);

struct ClassifyResult {
  Classification kind = Classification::Unresolved;
  /// What was left after the last test; for the quotient branch, f divided
  /// by the reconstructed Carlitz element.
  DividedElem<Poly<Fq>> residual;
  std::optional<LinearSeq<Fq>> carlitz_part;
  /// Union of the two images, decided exactly on the window.
  Reading union_reading = Reading::Undecided;
  /// Group generated by both images; only membership can be certified.
  Reading generated_reading = Reading::Undecided;
};

/// Throws std::invalid_argument if f is not multiplicative.
ClassifyResult classify(const PolyFq& ring, const DividedElem<Poly<Fq>>& f, std::uint64_t q);

}  // namespace lucas

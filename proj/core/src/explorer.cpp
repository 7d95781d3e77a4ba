#include "lucas/explorer.hpp"

#include <map>
#include <stdexcept>
#include <thread>
#include <utility>

#include "lucas/linalg.hpp"
#include "lucas/second_construction.hpp"

namespace lucas {

std::optional<StepResult> extend_step(const PrefixState& s) {
  const FiniteField& F = s.ring.base();
  if (!F.is_prime_field()) throw std::invalid_argument("the explorer works over prime fields only");
  if (s.d < 1) throw std::invalid_argument("degree bound must be at least 1");
  if (s.prefix.entries.empty() || !(s.prefix.entries[0] == s.ring.one()))
    throw std::invalid_argument("prefix must start with p_0 = 1");
  const std::size_t n = s.prefix.size();
  const std::uint32_t p = F.characteristic();

  // Right-hand side as a map (a, b) -> coefficient of x^a y^b.
  std::map<std::pair<std::size_t, std::size_t>, Fq> rhs;
  for (std::size_t i = 1; i < n; ++i) {
    const std::uint32_t c = binom_mod_p(n, i, p);
    if (c == 0) continue;
    const auto& u = s.prefix.entries[i].coeffs;
    const auto& v = s.prefix.entries[n - i].coeffs;
    for (std::size_t a = 0; a < u.size(); ++a) {
      if (F.is_zero(u[a])) continue;
      for (std::size_t b = 0; b < v.size(); ++b) {
        if (F.is_zero(v[b])) continue;
        const Fq term = F.mul(F.from_int(c), F.mul(u[a], v[b]));
        auto [it, inserted] = rhs.emplace(std::pair{a, b}, term);
        if (!inserted) it->second = F.add(it->second, term);
      }
    }
  }

  // Rows: every monomial touched by either side. Unknown k contributes
  // C(k, a) to x^a y^(k-a) for 0 < a < k and -1 to the constant term.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_of;
  auto row = [&](std::size_t a, std::size_t b) {
    return row_of.emplace(std::pair{a, b}, row_of.size()).first->second;
  };
  struct Entry {
    std::size_t r, k;
    Fq v;
  };
  std::vector<Entry> entries;
  entries.push_back({row(0, 0), 0, F.neg(F.one())});
  for (std::size_t k = 2; k <= s.d; ++k)
    for (std::size_t a = 1; a < k; ++a) {
      const std::uint32_t c = binom_mod_p(k, a, p);
      if (c != 0) entries.push_back({row(a, k - a), k, F.from_int(c)});
    }
  for (const auto& [m, v] : rhs) row(m.first, m.second);

  Matrix M(row_of.size(), s.d + 1);
  for (const auto& e : entries) M.at(e.r, e.k) = e.v;
  std::vector<Fq> b(row_of.size(), F.zero());
  for (const auto& [m, v] : rhs) b[row_of.at(m)] = v;

  const auto sol = solve_affine_system(F, M, b);
  if (!sol) return std::nullopt;
  StepResult out{s.ring.from_coeffs(sol->particular), {}};
  for (const auto& k : sol->kernel) out.kernel.push_back(s.ring.from_coeffs(k));
  return out;
}

namespace {

struct Node {
  PolySeq<Fq> prefix;
  std::vector<std::size_t> dims;
};

class Search {
 public:
  Search(const EnumerateOptions& opt, std::size_t budget, const std::function<void(const EnumeratedSequence&)>* emit)
      : opt_(opt), ring_(FiniteField(opt.p), "x"), budget_(budget), emit_(emit) {}

  const PolyFq& ring() const { return ring_; }

  /// Children of a node in lexicographic kernel-coefficient order.
  std::vector<Node> children(const Node& node) const {
    const auto step = extend_step(PrefixState{ring_, node.prefix, opt_.d});
    if (!step) return {};
    const std::size_t dim = step->kernel.size();
    const FiniteField& F = ring_.base();
    std::vector<std::uint32_t> c(dim, 0);
    std::vector<Node> out;
    for (;;) {
      Poly<Fq> entry = step->particular;
      for (std::size_t k = 0; k < dim; ++k)
        if (c[k] != 0) entry = ring_.add(entry, ring_.scale(F.from_int(c[k]), step->kernel[k]));
      Node child = node;
      child.prefix.entries.push_back(std::move(entry));
      child.dims.push_back(dim);
      out.push_back(std::move(child));
      // Odometer with the last coordinate fastest.
      std::size_t k = dim;
      while (k > 0 && ++c[k - 1] == opt_.p) c[--k] = 0;
      if (k == 0) break;
    }
    return out;
  }

  /// Returns false once the budget is hit.
  bool run(const Node& node) {
    if (node.prefix.size() == opt_.N) {
      if (found_.size() >= budget_) {
        exhausted_ = true;
        return false;
      }
      found_.push_back({node.prefix, node.dims});
      if (emit_ && *emit_) (*emit_)(found_.back());
      return true;
    }
    for (const auto& child : children(node))
      if (!run(child)) return false;
    return true;
  }

  std::vector<EnumeratedSequence>& found() { return found_; }
  bool exhausted() const { return exhausted_; }

 private:
  EnumerateOptions opt_;
  PolyFq ring_;
  std::size_t budget_;
  const std::function<void(const EnumeratedSequence&)>* emit_;
  std::vector<EnumeratedSequence> found_;
  bool exhausted_ = false;
};

}  // namespace

EnumerateResult enumerate(const EnumerateOptions& opt, const std::function<void(const EnumeratedSequence&)>& on_emit) {
  if (!is_prime(opt.p)) throw std::invalid_argument("p must be prime");
  if (opt.N == 0) throw std::invalid_argument("N must be positive");
  if (opt.d < 1) throw std::invalid_argument("degree bound must be at least 1");
  const PolyFq ring(FiniteField(opt.p), "x");
  const Node root{PolySeq<Fq>{{ring.one()}}, {}};
  EnumerateResult result;

  if (opt.workers <= 1) {
    Search s(opt, opt.budget, &on_emit);
    s.run(root);
    result.sequences = std::move(s.found());
    result.budget_exhausted = s.exhausted();
    return result;
  }

  // Expand breadth-first until there is enough work to share, keeping the
  // frontier in depth-first order so the merged output matches one worker.
  std::vector<Node> frontier{root};
  {
    const Search expander(opt, 0, nullptr);
    while (frontier.size() < opt.workers && frontier.front().prefix.size() < opt.N) {
      std::vector<Node> next;
      for (const auto& node : frontier)
        for (auto& child : expander.children(node)) next.push_back(std::move(child));
      frontier = std::move(next);
      if (frontier.empty()) break;
    }
  }

  // Each worker owns a disjoint set of frontier nodes and its own results.
  // One extra sequence per node tells us whether the budget was binding.
  std::vector<std::vector<EnumeratedSequence>> per_node(frontier.size());
  std::vector<char> node_exhausted(frontier.size(), 0);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < opt.workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < frontier.size(); k += opt.workers) {
        Search s(opt, opt.budget, nullptr);
        s.run(frontier[k]);
        per_node[k] = std::move(s.found());
        node_exhausted[k] = s.exhausted();
      }
    });
  }
  for (auto& t : pool) t.join();

  for (std::size_t k = 0; k < frontier.size(); ++k) {
    for (auto& e : per_node[k]) {
      if (result.sequences.size() >= opt.budget) {
        result.budget_exhausted = true;
        break;
      }
      result.sequences.push_back(std::move(e));
      if (on_emit) on_emit(result.sequences.back());
    }
    if (node_exhausted[k]) result.budget_exhausted = true;
    if (result.budget_exhausted) break;
  }
  return result;
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::CarlitzImage: return "carlitz_image";
    case Classification::SecondForm: return "second_form";
    case Classification::CarlitzQuotientHeuristic: return "carlitz_quotient_heuristic";
    case Classification::Unresolved: return "unresolved";
  }
  return "unresolved";
}

const char* to_string(Reading r) {
  switch (r) {
    case Reading::Member: return "member";
    case Reading::NotMember: return "not_member";
    case Reading::Undecided: return "undecided";
  }
  return "undecided";
}

ClassifyResult classify(const PolyFq& ring, const DividedElem<Poly<Fq>>& f, std::uint64_t q) {
  if (!check_multiplicative(ring, f).pass) throw std::invalid_argument("classify expects a multiplicative element");
  const DividedRing<PolyFq> D(ring);
  ClassifyResult r;
  r.residual = f;

  const auto image = is_in_carlitz_image(ring, f, q);
  if (image.member) {
    r.kind = Classification::CarlitzImage;
    r.carlitz_part = image.reconstructed;
    r.residual = D.unit(f.trunc);
    r.union_reading = r.generated_reading = Reading::Member;
    return r;
  }
  if (is_second_form(ring, f)) {
    r.kind = Classification::SecondForm;
    r.union_reading = r.generated_reading = Reading::Member;
    return r;
  }
  r.union_reading = Reading::NotMember;

  // Divide by the Carlitz element whose entries are the coefficients at q^t.
  LinearSeq<Fq> e{q, {}};
  bool linear = true;
  for (std::uint64_t idx = 1; idx < f.trunc; idx *= q) {
    e.entries.push_back(D.coeff(f, idx));
    linear = linear && is_q_linear(ring, e.entries.back(), q);
    if (idx > f.trunc / q) break;
  }
  if (linear) {
    const auto inv = gen_function(ring, carlitz_sequence(ring, negate(ring, e), f.trunc));
    const auto quotient = D.mul(f, inv);
    r.residual = quotient;
    if (is_second_form(ring, quotient)) {
      r.kind = Classification::CarlitzQuotientHeuristic;
      r.carlitz_part = e;
      r.generated_reading = Reading::Member;
      return r;
    }
  }
  r.kind = Classification::Unresolved;
  return r;
}

}  // namespace lucas

#include "lucas_cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "lucas/actions.hpp"
#include "lucas/binomial_seq.hpp"
#include "lucas/carlitz.hpp"
#include "lucas/carlitz_module.hpp"
#include "lucas/explorer.hpp"
#include "lucas/expr.hpp"
#include "lucas/rings.hpp"
#include "lucas/second_construction.hpp"

namespace lucas::cli {
namespace {

namespace fs = std::filesystem;
using Elem = DividedElem<Poly<Fq>>;
using DRing = DividedRing<PolyFq>;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<std::uint32_t> p, lambda, q;
  std::string modulus;
  std::optional<std::size_t> N, d, K, b;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::size_t budget = 10000;
  std::string emit, format = "text", out;
  std::vector<std::string> files;
  std::string name, kind, E, X, perm, r, alpha, a;
  bool gf = false, image = false, factors = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Usage("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw Usage("cannot write '" + path.string() + "'");
  o << text;
}

void emit_result(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.out.empty())
    out << text;
  else
    write_file(opt.out, text);
}

std::uint32_t smallest_factor(std::uint32_t n) {
  for (std::uint32_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return f;
  return n;
}

std::optional<std::vector<std::uint32_t>> modulus_for(const Options& opt, std::uint32_t p) {
  if (opt.modulus.empty()) return std::nullopt;
  return parse_modulus(p, opt.modulus);
}

FiniteField field_from_flags(const Options& opt) {
  std::uint64_t order = 0;
  if (opt.p && !is_prime(*opt.p)) throw Usage("--p must be prime");
  if (opt.q) {
    order = *opt.q;
    if (opt.p && smallest_factor(*opt.q) != *opt.p) throw Usage("--q is not a power of --p");
  } else if (opt.p) {
    order = *opt.p;
    for (std::uint32_t i = 1; i < opt.lambda.value_or(1); ++i) order *= *opt.p;
  } else {
    throw Usage("a field is required: pass --q, or --p with optional --lambda");
  }
  if (order < 2 || order > (1u << 20)) throw Usage("unsupported field order");
  const auto q = static_cast<std::uint32_t>(order);
  return make_field(q, modulus_for(opt, smallest_factor(q)));
}

PolyFq ring_from_tag(const std::string& tag, const Options& opt) {
  AnyRing ring = parse_ring_tag(tag);
  if (!opt.modulus.empty()) ring = parse_ring_tag(tag, modulus_for(opt, ground_field(ring).characteristic()));
  const auto* poly = std::get_if<PolyFq>(&ring);
  if (!poly) throw Usage("coefficient ring '" + tag + "' is not of the form F_q[v]");
  if (opt.q && *opt.q != poly->base().order()) throw Usage("--q disagrees with the file's ring " + tag);
  return *poly;
}

struct Loaded {
  PolyFq ring;
  Elem elem;
  std::optional<PolySeq<Fq>> seq;
  std::string tag;
};

/// Reads either a sequence file ("N=...") or a divided element file ("trunc=...").
Loaded load(const std::string& path, const Options& opt) {
  const std::string text = read_file(path);
  const std::string first = text.substr(0, text.find('\n'));
  if (first.rfind("N=", 0) == 0) {
    const auto tag = parse_sequence_header(first).second;
    PolyFq ring = ring_from_tag(tag, opt);
    auto seq = parse_sequence(ring, text);
    if (seq.size() == 0) throw Usage("sequence is empty");
    auto elem = gen_function(ring, seq);
    return {ring, std::move(elem), std::move(seq), tag};
  }
  if (first.rfind("trunc=", 0) == 0) {
    const auto tag = DRing::parse_header(first).second;
    PolyFq ring = ring_from_tag(tag, opt);
    auto elem = DRing(ring).parse(text);
    return {ring, std::move(elem), std::nullopt, tag};
  }
  throw ParseError("'" + path + "' is neither a sequence nor a divided-power file", 0);
}

std::size_t require_N(const Options& opt) {
  if (!opt.N || *opt.N == 0) throw Usage("--N >= 1 is required");
  return *opt.N;
}

std::vector<Poly<Fq>> parse_list(const PolyFq& ring, const std::string& text) {
  std::vector<Poly<Fq>> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) out.push_back(parse_elem(ring, item));
  return out;
}

std::vector<std::uint64_t> parse_indices(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw ParseError("bad index '" + item + "'", 0);
    } catch (const std::logic_error&) {
      throw ParseError("bad index '" + item + "'", 0);
    }
  }
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_check(const Options& opt, std::ostream& out) {
  const Loaded in = load(opt.files.at(0), opt);
  bool ok = true;
  if (in.seq) {
    const auto r = check_binomial(in.ring, *in.seq);
    out << "binomial: " << r.describe() << "\n";
    ok = r.passed();
    if (r.verdict == Verdict::Pass) {
      const auto s = structural_checks(in.ring, *in.seq);
      out << "p-power entries additive: " << yes_no(s.additive_ok) << "\n";
      out << "f^p = 1: " << yes_no(s.pow_p_is_one) << "\n";
      ok = ok && s.ok();
    }
    return ok ? Ok : PropertyFailed;
  }
  const auto m = check_multiplicative(in.ring, in.elem);
  out << "multiplicative: " << m.describe() << "\n";
  ok = m.pass;
  if (DRing(in.ring).has_unit_constant(in.elem)) {
    const std::uint64_t q = in.ring.base().order();
    const auto img = is_in_carlitz_image(in.ring, in.elem, q);
    out << "carlitz image (q=" << q << "): " << yes_no(img.member) << ", " << img.reason << "\n";
    out << "second form: " << yes_no(is_second_form(in.ring, in.elem)) << "\n";
    if (opt.image) ok = ok && img.member;
  } else if (opt.image) {
    out << "carlitz image: no, constant coefficient is not 1\n";
    ok = false;
  }
  return ok ? Ok : PropertyFailed;
}

LinearSeq<Fq> random_linear_seq(const PolyFq& ring, std::uint64_t q, std::size_t N, std::size_t max_deg,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LinearSeq<Fq> e{q, {}};
  for (std::uint64_t qt = 1; qt < N; qt *= q) {
    Poly<Fq> entry = ring.zero();
    for (std::uint64_t qj = 1; qj <= max_deg; qj *= q)
      entry = ring.add(entry, ring.monomial(ring.base().random(rng), qj));
    e.entries.push_back(entry);
    if (qt > N / q) break;
  }
  return e;
}

int cmd_gen(const Options& opt, std::ostream& out) {
  const FiniteField F = field_from_flags(opt);
  const PolyFq R(F, "x");
  const DRing D(R);
  const std::size_t N = require_N(opt);
  const std::uint64_t q = F.order();
  PolySeq<Fq> seq;
  if (const auto b = parse_builtin(opt.name)) {
    seq = builtin(R, *b, N, q);
  } else if (opt.name == "carlitz") {
    const auto e = opt.E.empty() ? random_linear_seq(R, q, N, opt.d.value_or(q), opt.seed)
                                 : make_linear_seq(R, q, parse_list(R, opt.E));
    seq = carlitz_sequence(R, e, N);
  } else if (opt.name == "second") {
    if (opt.E.empty()) throw Usage("gen second needs --E");
    const auto E = parse_list(R, opt.E);
    const NullSeq X = opt.X.empty() ? power_minus_one_sequence(F.characteristic(), E.size())
                                    : make_null_seq(parse_indices(opt.X), F.characteristic());
    emit_result(opt, D.format(build_second(R, X, E, N)), out);
    return Ok;
  } else {
    throw Usage("unknown generator '" + opt.name + "'");
  }
  emit_result(opt, opt.gf ? D.format(gen_function(R, seq)) : format_sequence(R, seq), out);
  return Ok;
}

int cmd_mul(const Options& opt, std::ostream& out) {
  const Loaded a = load(opt.files.at(0), opt), b = load(opt.files.at(1), opt);
  if (a.tag != b.tag) throw Usage("operands live over different rings: " + a.tag + " vs " + b.tag);
  const DRing D(a.ring);
  emit_result(opt, D.format(D.mul(a.elem, b.elem)), out);
  return Ok;
}

int cmd_inv(const Options& opt, std::ostream& out) {
  const Loaded a = load(opt.files.at(0), opt);
  const DRing D(a.ring);
  emit_result(opt, D.format(D.inverse(a.elem)), out);
  return Ok;
}

int cmd_act(const Options& opt, std::ostream& out, std::ostream& err) {
  const Loaded in = load(opt.files.at(0), opt);
  const DRing D(in.ring);
  const std::uint64_t q = in.ring.base().order();
  std::function<Elem(const Elem&)> action;
  if (opt.kind == "sigma") {
    std::size_t K = 0;
    if (opt.K) {
      K = *opt.K;
    } else {
      std::uint64_t w = 1;
      while (w < in.elem.trunc) w *= q, ++K;
      if (w != in.elem.trunc) throw Usage("truncation " + std::to_string(in.elem.trunc) + " is not a power of q");
    }
    const DigitPerm s = parse_digit_perm(opt.perm, q, K);
    if (s.window() != in.elem.trunc)
      throw Usage("sigma needs truncation " + std::to_string(s.window()) + ", file has " +
                  std::to_string(in.elem.trunc));
    action = [&D, s](const Elem& f) { return sigma_star_elem(D, s, f); };
  } else if (opt.kind == "pi1") {
    action = [&D](const Elem& f) { return pi1(D, f); };
  } else if (opt.kind == "pi2") {
    action = [&D](const Elem& f) { return pi2(D, f); };
  } else {
    if (opt.r.empty()) throw Usage("act pi3 needs --r");
    const auto r = parse_elem(in.ring, opt.r);
    action = [&D, r](const Elem& f) { return pi3(D, r, f); };
  }
  const Elem g = action(in.elem);
  const bool unit = D.has_unit_constant(in.elem);
  err << stability_report(in.ring, action, in.elem, unit ? std::optional<std::uint64_t>(q) : std::nullopt).describe()
      << "\n";
  emit_result(opt, D.format(g), out);
  return Ok;
}

int cmd_dirac(const Options& opt, std::ostream& out, std::ostream& err) {
  const FiniteField F = field_from_flags(opt);
  const std::size_t N = require_N(opt);
  const CarlitzCtx ctx = CarlitzCtx::for_truncation(F, N);
  const DividedRing<PolyFq> D(ctx.A());
  const auto alpha = parse_elem(ctx.A(), opt.alpha);
  const auto f = dirac(ctx, alpha, N);
  emit_result(opt, D.format(f), out);
  if (!opt.factors) return Ok;
  const auto parts = dirac_factorization(ctx, alpha, N);
  auto product = D.unit(N);
  for (std::size_t t = 0; t < parts.size(); ++t) {
    product = D.mul(product, parts[t]);
    if (!opt.emit.empty()) {
      fs::create_directories(opt.emit);
      write_file(fs::path(opt.emit) / ("factor_" + std::to_string(t) + ".dp"), D.format(parts[t]));
    }
  }
  const bool ok = product == f;
  err << "factors: " << parts.size() << ", product equals dirac: " << yes_no(ok) << "\n";
  return ok ? Ok : PropertyFailed;
}

int cmd_pellarin(const Options& opt, std::ostream& out) {
  if (opt.a.empty() && !opt.b) throw Usage("pellarin needs --a or --b");
  const FiniteField F = field_from_flags(opt);
  const CarlitzCtx ctx(F, 1);
  const PolyA T = pellarin_ring(ctx);
  bool ok = true;
  if (!opt.a.empty()) {
    const SkewPolyRing skew(ctx.A(), F.order());
    const auto a = parse_elem(ctx.A(), opt.a);
    const auto C = carlitz_action(ctx, a);
    const auto image = pellarin_map(ctx, C);
    const auto expected = rename_theta_to_t(ctx, a);
    ok = image == expected;
    out << "C_a = " << skew.format(C) << "\n";
    out << "pellarin(C_a) = " << T.format(image) << "\n";
    out << "a(t) = " << T.format(expected) << "\n";
    out << "match: " << yes_no(ok) << "\n";
  }
  if (opt.b) {
    for (std::size_t j = 0; j <= *opt.b; ++j) {
      const auto bj = pellarin_b(ctx, j);
      out << "b_" << j << " = " << T.format(bj) << "\n";
      if (j > 0) {
        std::uint64_t e = 1;
        for (std::size_t i = 1; i < j; ++i) e *= F.order();
        const auto root = T.constant(power(ctx.A(), ctx.A().variable(), e));
        ok = ok && bj == T.mul(T.sub(T.variable(), root), pellarin_b(ctx, j - 1));
      }
    }
  }
  return ok ? Ok : PropertyFailed;
}

std::string join_dims(const std::vector<std::size_t>& dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? ";" : "") + std::to_string(dims[i]);
  return s;
}

int cmd_explore(const Options& opt, std::ostream& out, std::ostream& err) {
  std::uint32_t p = 0;
  if (opt.p)
    p = *opt.p;
  else if (opt.q)
    p = *opt.q;
  else
    throw Usage("explore needs --p");
  if (!is_prime(p)) throw Usage("explore works over prime fields only");
  if (!opt.d) throw Usage("explore needs --d");
  const std::size_t N = require_N(opt);
  const PolyFq R(FiniteField(p), "x");
  const auto result = enumerate({p, N, *opt.d, opt.budget, opt.workers});

  std::ostringstream csv;
  csv << "id,classification,union_reading,generated_reading,kernel_dims\n";
  std::ostringstream text;
  if (!opt.emit.empty()) fs::create_directories(opt.emit);
  for (std::size_t i = 0; i < result.sequences.size(); ++i) {
    const auto& s = result.sequences[i];
    const auto c = classify(R, gen_function(R, s.seq), p);
    char id[16];
    std::snprintf(id, sizeof id, "%05zu", i);
    csv << id << "," << to_string(c.kind) << "," << to_string(c.union_reading) << ","
        << to_string(c.generated_reading) << "," << join_dims(s.kernel_dims) << "\n";
    text << id << " " << to_string(c.kind) << " union=" << to_string(c.union_reading)
         << " generated=" << to_string(c.generated_reading) << " kernel=" << join_dims(s.kernel_dims) << "\n";
    if (!opt.emit.empty()) write_file(fs::path(opt.emit) / (std::string("seq_") + id + ".txt"), format_sequence(R, s.seq));
  }
  if (!opt.emit.empty()) write_file(fs::path(opt.emit) / "summary.csv", csv.str());
  const std::string footer = "sequences: " + std::to_string(result.sequences.size()) +
                             ", budget exhausted: " + yes_no(result.budget_exhausted) + "\n";
  if (opt.format == "csv") {
    emit_result(opt, csv.str(), out);
    err << footer;
  } else {
    emit_result(opt, text.str() + footer, out);
  }
  return Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Binomial-type sequences and divided powers in characteristic p"};
  app.name("lucas");
  app.require_subcommand(1, 1);
  app.fallthrough();

  app.add_option("--p", opt.p, "Characteristic (prime)");
  app.add_option("--lambda", opt.lambda, "Extension degree, q = p^lambda")->check(CLI::PositiveNumber);
  app.add_option("--q", opt.q, "Field order, default modulus");
  app.add_option("--modulus", opt.modulus, "Irreducible modulus in u, e.g. u^2+u+1");
  app.add_option("--N", opt.N, "Truncation or sequence length");
  app.add_option("--d", opt.d, "Degree bound");
  app.add_option("--seed", opt.seed, "Seed for random choices")->capture_default_str();
  app.add_option("--workers", opt.workers, "Explorer worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget", opt.budget, "Explorer sequence budget")->capture_default_str();
  app.add_option("--emit", opt.emit, "Directory for emitted files");
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "csv"}));
  app.add_option("-o,--out", opt.out, "Write the result to this file instead of stdout");

  auto* check = app.add_subcommand("check", "Verify the binomial identity or multiplicativity of a file");
  check->add_option("file", opt.files, "Sequence or divided-power file")->required()->expected(1);
  check->add_flag("--image", opt.image, "Also require membership in the Carlitz image");

  auto* gen = app.add_subcommand("gen", "Generate a sequence or generating function");
  gen->add_option("name", opt.name, "monomials | pochhammer | digitsum | trivial_unit | carlitz | second")
      ->required();
  gen->add_option("--E", opt.E, "Comma-separated polynomial list");
  gen->add_option("--X", opt.X, "Comma-separated null sequence");
  gen->add_flag("--gf", opt.gf, "Emit the generating function instead of the sequence");

  auto* mul = app.add_subcommand("mul", "Multiply two divided-power elements");
  mul->add_option("files", opt.files, "Two input files")->required()->expected(2);

  auto* inv = app.add_subcommand("inv", "Invert a divided-power element");
  inv->add_option("file", opt.files, "Input file")->required()->expected(1);

  auto* act = app.add_subcommand("act", "Apply sigma, pi1, pi2 or pi3");
  act->add_option("kind", opt.kind, "sigma | pi1 | pi2 | pi3")
      ->required()
      ->check(CLI::IsMember({"sigma", "pi1", "pi2", "pi3"}));
  act->add_option("file", opt.files, "Input file")->required()->expected(1);
  act->add_option("--perm", opt.perm, "Digit permutation, e.g. 0>1,1>0");
  act->add_option("--K", opt.K, "Digit window size");
  act->add_option("--r", opt.r, "Evaluation element for pi3");

  auto* dirac_cmd = app.add_subcommand("dirac", "Dirac element of a point of F_q[th]");
  dirac_cmd->add_option("--alpha", opt.alpha, "Point, polynomial in th")->required();
  dirac_cmd->add_flag("--factors", opt.factors, "Check the digit factorization; files go to --emit");

  auto* pell = app.add_subcommand("pellarin", "Carlitz action and the Pellarin map");
  pell->add_option("--a", opt.a, "Element of F_q[th]");
  pell->add_option("--b", opt.b, "Print b_0 .. b_j");

  auto* explore = app.add_subcommand("explore", "Enumerate binomial-type sequences over F_p");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? Ok : UsageError;
  }

  try {
    if (check->parsed()) return cmd_check(opt, out);
    if (gen->parsed()) return cmd_gen(opt, out);
    if (mul->parsed()) return cmd_mul(opt, out);
    if (inv->parsed()) return cmd_inv(opt, out);
    if (act->parsed()) return cmd_act(opt, out, err);
    if (dirac_cmd->parsed()) return cmd_dirac(opt, out, err);
    if (pell->parsed()) return cmd_pellarin(opt, out);
    if (explore->parsed()) return cmd_explore(opt, out, err);
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return UsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  } catch (const std::domain_error& e) {
    err << "failed: " << e.what() << "\n";
    return PropertyFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  }
  return UsageError;
}

}  // namespace lucas::cli

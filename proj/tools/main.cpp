#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symfun/errors.hpp"
#include "symfun/families.hpp"
#include "symfun/io.hpp"
#include "symfun/macops.hpp"
#include "symfun/verify.hpp"

using namespace symfun;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kPrecondition = 3 };

struct Options {
  std::string family = "macdonald";
  std::string partition;
  std::string to = "m";
  std::string format = "plain";
  std::string mode = "symbolic";
  std::optional<unsigned> seed;
  int degree_bound = 0;
  std::optional<int> n;

  std::string op;
  int k = 1;
  std::string expr;

  std::string suite = "all";
  SuiteConfig suite_cfg;
  std::string u_samples;
  bool no_timing = false;
};

/// Thrown for malformed input that CLI11 cannot catch itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

mpq_class random_point(std::mt19937& rng) {
  // avoid 0 and +-1, where q and t factors degenerate
  for (;;) {
    const long num = static_cast<long>(rng() % 199) - 99;
    const long den = static_cast<long>(rng() % 97) + 1;
    mpq_class v(num, den);
    v.canonicalize();
    if (v != 0 && v != 1 && v != -1) return v;
  }
}

RatFun to_ratfun(const RatFun& c) { return c; }
RatFun to_ratfun(const Rat& c) {
  return RatFun::make(IntPoly2(Int(c.value().get_num())), IntPoly2(Int(c.value().get_den())));
}

template <class K>
SymFun<RatFun> to_symbolic(const SymFun<K>& f) {
  SymFun<RatFun> r(f.basis(), f.degree_bound());
  for (const auto& [la, c] : f.coeffs()) r.add_term(la, to_ratfun(c));
  r.set_degree_bound(f.degree_bound());
  return r;
}

std::string render(const SymFun<RatFun>& f, const std::string& format) {
  if (format == "json") return symfun_to_json(f);
  if (format == "latex") return render_latex(f);
  return render_plain(f);
}

std::vector<long> parse_samples(const std::string& text) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("malformed --u-samples entry '" + item + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

template <class K>
SymFun<K> family_element(const Context<K>& ctx, const std::string& family, const Partition& la, int bound) {
  if (family == "macdonald") return macdonald_M(ctx, la);
  if (family == "hl-p") return hall_littlewood(ctx, la, HLKind::P, bound);
  if (family == "hl-q") return hall_littlewood(ctx, la, HLKind::Q, bound);
  if (family == "schur") return schur(ctx, la);
  if (family == "monomial") return SymFun<K>::element(Basis::m, la);
  return SymFun<K>::element(Basis::p, la);
}

template <class K>
int cmd_expand(const Context<K>& ctx, const Options& o) {
  const Partition la = Partition::parse(o.partition);
  const SymFun<K> f = family_element(ctx, o.family, la, std::max(o.degree_bound, la.weight()));
  std::cout << render(to_symbolic(convert(ctx, f, parse_basis(o.to))), o.format) << '\n';
  return kOk;
}

template <class K>
int cmd_apply(const Context<K>& ctx, const Options& o) {
  const SymFun<K> f = lift(ctx, parse_symfun_expr(o.expr));
  const int bound = std::max({o.degree_bound, f.max_weight(), 0});
  if (o.op == "DN") {
    if (!o.n) throw Error("--op DN needs --N");
    const UPolyOp<K> d = apply_DN(ctx, restrict_to(ctx, f, *o.n), *o.n);
    std::vector<SymFun<RatFun>> coeffs;
    for (const auto& c : d.coeffs) coeffs.push_back(to_symbolic(lift_symmetric(c)));
    if (o.format == "json") {
      std::cout << symfun_list_to_json(coeffs) << '\n';
      return kOk;
    }
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (k > 0) std::cout << ", ";
      std::cout << (o.format == "latex" ? "u^{" + std::to_string(k) + "}: " : "u^" + std::to_string(k) + ": ")
                << render(coeffs[k], o.format);
    }
    std::cout << '\n';
    return kOk;
  }
  if (o.k < 1) throw Error("--k must be at least 1");
  SymFun<K> image;
  if (o.op == "A") {
    image = A_k_apply(ctx, o.k, f, bound);
  } else {
    image = step_series_apply(ctx, o.op == "B" ? StepKind::B : StepKind::C, o.k - 1, f, bound);
  }
  std::cout << render(to_symbolic(image), o.format) << '\n';
  return kOk;
}

template <class K>
int cmd_verify(const Context<K>& ctx, const Options& o) {
  SuiteConfig cfg = o.suite_cfg;
  cfg.suite = o.suite;
  cfg.n = o.n;
  if (!o.partition.empty()) cfg.partition = Partition::parse(o.partition);
  if (!o.u_samples.empty()) cfg.u_samples = parse_samples(o.u_samples);
  if (o.seed) cfg.seed = *o.seed;
  std::vector<CheckReport> reports;
  run_suite(ctx, cfg, [&](const CheckReport& r) {
    std::cout << report_json(r, !o.no_timing) << '\n' << std::flush;
    reports.push_back(r);
  });
  std::cout << summary_json(reports, !o.no_timing) << '\n';
  for (const auto& r : reports) {
    if (!r.passed()) return kVerifyFailed;
  }
  return kOk;
}

template <class K>
int dispatch(const Context<K>& ctx, const std::string& command, const Options& o) {
  if (command == "expand") return cmd_expand(ctx, o);
  if (command == "apply") return cmd_apply(ctx, o);
  return cmd_verify(ctx, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Macdonald and Hall-Littlewood computations over Q(q,t)"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"plain", "json", "latex"}));
    sub->add_option("--mode", o.mode, "symbolic, or numeric at a random rational (q,t)")
        ->check(CLI::IsMember({"symbolic", "numeric"}));
    sub->add_option("--seed", o.seed, "Seed choosing the numeric point");
    sub->add_option("--degree-bound", o.degree_bound, "Truncation degree")->check(CLI::NonNegativeNumber);
    sub->add_option("--N", o.n, "Number of variables")->check(CLI::PositiveNumber);
  };

  CLI::App* expand = app.add_subcommand("expand", "Expand a family element in a basis");
  expand->add_option("--family", o.family, "Family")
      ->check(CLI::IsMember({"macdonald", "hl-p", "hl-q", "schur", "monomial", "power"}));
  expand->add_option("--partition", o.partition, "Partition, e.g. 2,1")->required();
  expand->add_option("--to", o.to, "Target basis")
      ->check(CLI::IsMember({"m", "p", "s", "P", "Q", "M", "HL_P", "HL_Q", "Mac_M"}));
  common(expand);

  CLI::App* apply = app.add_subcommand("apply", "Apply an operator to an expression");
  apply->add_option("--op", o.op, "Operator")->required()->check(CLI::IsMember({"A", "B", "C", "DN"}));
  apply->add_option("--k", o.k, "Operator index k >= 1");
  apply->add_option("--to-expr", o.expr, "Operand, e.g. \"(1-q)*p[1] + M[2]\"")->required();
  common(apply);

  CLI::App* verify = app.add_subcommand("verify", "Run verification sweeps");
  verify->add_option("suite", o.suite, "Suite name")->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-degree", o.suite_cfg.max_degree)->check(CLI::NonNegativeNumber);
  verify->add_option("--max-k", o.suite_cfg.max_k)->check(CLI::NonNegativeNumber);
  verify->add_option("--max-weight", o.suite_cfg.max_weight)->check(CLI::NonNegativeNumber);
  verify->add_option("--degree", o.suite_cfg.degree)->check(CLI::NonNegativeNumber);
  verify->add_option("--partition", o.partition, "Restrict sweeps to one partition");
  verify->add_option("--u-samples", o.u_samples, "Integer sample points, e.g. 2,3,5");
  verify->add_flag("--no-timing", o.no_timing, "Omit elapsed times for byte-stable output");
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (verify->parsed()) o.suite_cfg.degree_bound = o.degree_bound > 0 ? o.degree_bound : o.suite_cfg.degree_bound;

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (o.mode == "numeric") {
      if (!o.seed) throw UsageError("--mode numeric needs --seed");
      std::mt19937 rng(*o.seed);
      const mpq_class q0 = random_point(rng);
      const mpq_class t0 = random_point(rng);
      const Context<Rat> ctx(q0, t0);
      return dispatch(ctx, command, o);
    }
    return dispatch(symbolic(), command, o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidPartition& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  }
}

#include "autseq/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "autseq/cf.hpp"
#include "autseq/deciders.hpp"
#include "autseq/errors.hpp"
#include "autseq/io.hpp"
#include "autseq/orbit.hpp"
#include "autseq/sequence.hpp"

namespace autseq {
namespace {

BigInt parse_natural(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw InputError("'" + s + "' is not a natural number");
  return BigInt(s);
}

std::string quotient_list(const AutomaticCF& x, std::size_t n) {
  std::string s = "[";
  for (unsigned v : x.quotients(n)) s += (s.size() > 1 ? "," : "") + std::to_string(v);
  return s + "]";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

PowerModeKind power_mode(const std::string& s) {
  if (s == "exists") return PowerModeKind::Exists;
  if (s == "inf-occ") return PowerModeKind::InfOccurrences;
  if (s == "inf-distinct") return PowerModeKind::InfDistinct;
  if (s == "eventually-avoids") return PowerModeKind::EventuallyAvoids;
  throw InputError("unknown power mode '" + s + "'");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decision procedures and constructions for automatic sequences", "seqdec"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  std::size_t max_states = Limits{}.max_states;
  app.add_flag("--json", json, "Print a JSON object with decision, witness and stats");
  app.add_option("--max-states", max_states, "State cap for every construction");

  std::function<Verdict()> action;
  std::string file, out_path, number_arg;

  auto* info = app.add_subcommand("info", "Summarize an automaton file");
  info->add_option("FILE", file)->required();
  info->callback([&] {
    action = [&] {
      const Dfao m = load_dfao(file);
      Verdict v{true, "valid", std::nullopt, {}};
      v.stats = {{"base", m.base()},
                 {"states", m.num_states()},
                 {"letters", m.alphabet().size()},
                 {"minimized_states", minimize_dfao(m).num_states()}};
      return v;
    };
  });

  auto* eval_cmd = app.add_subcommand("eval", "Print a_N");
  eval_cmd->add_option("FILE", file)->required();
  eval_cmd->add_option("N", number_arg)->required();
  eval_cmd->callback([&] {
    action = [&] {
      const Dfao m = load_dfao(file);
      return Verdict{true, m.alphabet()[eval(m, parse_natural(number_arg))], std::nullopt, {}};
    };
  });

  auto* prefix_cmd = app.add_subcommand("prefix", "Print a_0 ... a_{N-1}");
  prefix_cmd->add_option("FILE", file)->required();
  prefix_cmd->add_option("N", number_arg)->required();
  prefix_cmd->callback([&] {
    action = [&] {
      const Dfao m = load_dfao(file);
      const BigInt n = parse_natural(number_arg);
      if (n > (std::uint64_t{1} << 26)) throw InputError("prefix length too large");
      return Verdict{true, to_string(prefix(m, static_cast<std::size_t>(n)), m.alphabet()), std::nullopt, {}};
    };
  });

  auto* decide = app.add_subcommand("decide", "Run a decision procedure");
  decide->require_subcommand(1);
  decide->fallthrough();
  auto limits = [&] { return Limits{max_states}; };

  auto* periodic = decide->add_subcommand("periodic", "Ultimate periodicity");
  periodic->add_option("FILE", file)->required();
  periodic->callback([&] { action = [&] { return decide_ultimate_periodicity(load_dfao(file), limits()); }; });

  auto* overlap = decide->add_subcommand("overlap", "Overlap avoidance");
  overlap->add_option("FILE", file)->required();
  overlap->callback([&] { action = [&] { return decide_overlap(load_dfao(file), limits()); }; });

  unsigned num = 2, den = 1;
  bool plus = false;
  std::string mode = "exists";
  std::optional<std::uint64_t> min_len;
  auto* power = decide->add_subcommand("power", "p/q-power avoidance");
  power->add_option("FILE", file)->required();
  power->add_option("--num", num, "Numerator p")->required();
  power->add_option("--den", den, "Denominator q")->required();
  power->add_flag("--plus", plus, "Use (p/q)+ powers");
  power->add_option("--mode", mode, "exists|inf-occ|inf-distinct|eventually-avoids");
  power->add_option("--min-len", min_len, "Only periods of at least this length");
  power->callback([&] {
    action = [&] {
      PowerMode pm{power_mode(mode), 1};
      if (min_len) {
        if (pm.kind != PowerModeKind::Exists) throw InputError("--min-len applies to --mode exists only");
        pm = {PowerModeKind::MinLength, *min_len};
      }
      return decide_power(load_dfao(file), {num, den, plus}, pm, limits());
    };
  });

  auto* pal = decide->add_subcommand("palindrome", "Palindrome avoidance");
  std::uint64_t pal_len = 1;
  std::string pal_mode = "exists";
  pal->add_option("FILE", file)->required();
  pal->add_option("--min-len", pal_len, "Minimum palindrome length");
  pal->add_option("--mode", pal_mode, "exists|eventually-avoids");
  pal->callback([&] {
    action = [&] {
      if (pal_mode != "exists" && pal_mode != "eventually-avoids")
        throw InputError("unknown palindrome mode '" + pal_mode + "'");
      return decide_palindromes(load_dfao(file), pal_len,
                                pal_mode == "exists" ? PalindromeMode::Exists : PalindromeMode::EventuallyAvoids,
                                limits());
    };
  });

  auto* mirror = decide->add_subcommand("mirror", "No factor's reversal is a factor");
  std::uint64_t mirror_len = 1;
  mirror->add_option("FILE", file)->required();
  mirror->add_option("--min-len", mirror_len, "Minimum factor length")->required();
  mirror->callback([&] { action = [&] { return decide_mirror(load_dfao(file), mirror_len, limits()); }; });

  auto* sigma = decide->add_subcommand("sigma-square", "Factors x sigma(x)");
  unsigned modulus = 2;
  sigma->add_option("FILE", file)->required();
  sigma->add_option("--mod", modulus, "Modulus j")->required();
  sigma->callback([&] { action = [&] { return decide_sigma_square(load_dfao(file), modulus, limits()); }; });

  auto* gamma = decide->add_subcommand("gamma", "Membership in Gamma");
  bool strict = false;
  gamma->add_option("FILE", file)->required();
  gamma->add_flag("--strict", strict, "Strict comparisons for shifts k >= 1");
  gamma->callback([&] { action = [&] { return decide_gamma_membership(load_dfao(file), strict, limits()); }; });

  auto* orbit = app.add_subcommand("orbit", "Extreme sequence of the orbit closure");
  std::string extreme = "least", order = "plain";
  bool reverse = false, limit = false;
  orbit->add_option("FILE", file)->required();
  orbit->add_option("--extreme", extreme, "least|greatest")->required();
  orbit->add_flag("--reverse", reverse, "Reverse orbit closure");
  orbit->add_flag("--limit", limit, "Only windows occurring infinitely often");
  orbit->add_option("--order", order, "plain|cf|PSI_FILE");
  orbit->add_option("-o", out_path, "Output automaton file")->required();
  orbit->callback([&] {
    action = [&] {
      const Dfao m = load_dfao(file);
      OrderSpec spec;
      if (extreme != "least" && extreme != "greatest") throw InputError("--extreme must be least or greatest");
      spec.extreme = extreme == "least" ? Extreme::Least : Extreme::Greatest;
      spec.direction = reverse ? Direction::Reverse : Direction::Forward;
      spec.limit = limit;
      if (order == "cf")
        spec.psi = cf_alternating(m.base(), m.alphabet().size());
      else if (order != "plain")
        spec.psi = parse_psi(read_file(order), m.alphabet());
      OrbitResult r = orbit_extreme_dfao(m, spec, limits());
      save_dfao(out_path, r.dfao);
      Verdict v{true, to_string(prefix(r.dfao, 32), r.dfao.alphabet()), std::nullopt, r.stats};
      return v;
    };
  });

  auto* theta_cmd = app.add_subcommand("theta", "Theta operator on a binary sequence");
  theta_cmd->add_option("FILE", file)->required();
  theta_cmd->add_option("-o", out_path, "Output automaton file")->required();
  theta_cmd->callback([&] {
    action = [&] {
      const Dfao t = theta(load_dfao(file), limits());
      save_dfao(out_path, t);
      return Verdict{true, to_string(prefix(t, 32), t.alphabet()), std::nullopt, {{"states", t.num_states()}}};
    };
  });

  auto* cf = app.add_subcommand("cf", "Continued-fraction constructions");
  cf->require_subcommand(1);
  cf->fallthrough();
  std::size_t show = 16;
  auto* shift = cf->add_subcommand("shift-limits", "liminf and limsup of T^n(x)");
  shift->add_option("FILE", file)->required();
  shift->add_option("-n", show, "Quotients to print");
  shift->callback([&] {
    action = [&] {
      const auto r = cf_shift_limits(AutomaticCF(load_dfao(file)), limits());
      return Verdict{true, "liminf=" + quotient_list(r.liminf, show) + " limsup=" + quotient_list(r.limsup, show),
                     std::nullopt,
                     {{"liminf_states", r.liminf.dfao().num_states()}, {"limsup_states", r.limsup.dfao().num_states()}}};
    };
  });
  auto* galois = cf->add_subcommand("galois", "Limits of p_n/p_{n-1} and q_n/q_{n-1}");
  galois->add_option("FILE", file)->required();
  galois->add_option("-n", show, "Quotients to print");
  galois->callback([&] {
    action = [&] {
      const auto r = cf_galois_ratio_limits(AutomaticCF(load_dfao(file)), limits());
      return Verdict{true,
                     "beta=" + quotient_list(r.beta, show) + " gamma=" + quotient_list(r.gamma, show) +
                         " delta=" + quotient_list(r.delta, show) + " zeta=" + quotient_list(r.zeta, show),
                     std::nullopt,
                     {{"beta_states", r.beta.dfao().num_states()},
                      {"gamma_states", r.gamma.dfao().num_states()},
                      {"delta_states", r.delta.dfao().num_states()},
                      {"zeta_states", r.zeta.dfao().num_states()}}};
    };
  });
  auto* alpha = cf->add_subcommand("alpha", "Quotients of sum_i M^(-2^i)");
  unsigned mbase = 3;
  alpha->add_option("--base", mbase, "M >= 3")->required();
  alpha->add_option("-o", out_path, "Output automaton file")->required();
  alpha->add_option("-n", show, "Quotients to print");
  alpha->callback([&] {
    action = [&] {
      const AutomaticCF a = alpha_k_cf_dfao(mbase, 10000, limits());
      save_dfao(out_path, a.dfao());
      return Verdict{true, quotient_list(a, show), std::nullopt, {{"states", a.dfao().num_states()}}};
    };
  });

  auto* synth = app.add_subcommand("synth", "Synthesize a named sequence from its k-kernel");
  std::string name;
  unsigned base = 2;
  std::uint64_t validate_len = 1U << 16;
  synth->add_option("--builtin", name, "Sequence name")->required();
  synth->add_option("--base", base, "Base k")->required();
  synth->add_option("--validate", validate_len, "Agreement checked on n below this");
  synth->add_option("-o", out_path, "Output automaton file")->required();
  synth->callback([&] {
    action = [&] {
      const Dfao m = dfao_synthesize_from_oracle(builtin_oracle(name), base, std::min<std::size_t>(max_states, 1U << 16),
                                                 validate_len);
      save_dfao(out_path, m);
      return Verdict{true, to_string(prefix(m, 32), m.alphabet()), std::nullopt, {{"states", m.num_states()}}};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "seqdec: " << e.what() << '\n';
    return 2;
  }
  try {
    const Verdict v = action();
    out << (json ? verdict_json(v) + "\n" : verdict_text(v));
    return 0;
  } catch (const InputError& e) {
    err << "seqdec: " << e.what() << '\n';
    return 2;
  } catch (const ResourceLimitError& e) {
    err << "seqdec: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "seqdec: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace autseq

#include "framed/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "framed/expr.hpp"
#include "framed/identity.hpp"
#include "framed/maps.hpp"
#include "framed/oracle.hpp"
#include "framed/print.hpp"
#include "properties.hpp"

namespace framed {
namespace {

// Input problems that should exit with the usage code rather than a failure.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

std::pair<Mono, Mono> parse_omega(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
    throw UsageError("--omega expects two generator names separated by a comma");
  auto trim = [](std::string s) {
    auto first = s.find_first_not_of(" \t");
    s.erase(0, first == std::string::npos ? s.size() : first);
    auto last = s.find_last_not_of(" \t");
    s.erase(last == std::string::npos ? 0 : last + 1);
    return s;
  };
  std::string a = trim(text.substr(0, comma));
  std::string b = trim(text.substr(comma + 1));
  GeneratorNames names;
  auto ia = names.index_of(a);
  auto ib = names.index_of(b);
  if (!ia) throw UsageError("--omega: unknown generator '" + a + "'");
  if (!ib) throw UsageError("--omega: unknown generator '" + b + "'");
  return {gen_mono(*ia), gen_mono(*ib)};
}

// The J element u (x) (x /\ y) built one prefix word at a time.
JElement pair_j(const TElement& u, Mono x, Mono y) {
  JElement q;
  for (const auto& [w, c] : u.terms()) q.add_triple(c, w, x, y);
  return q;
}

int do_apply(const std::string& map, const std::string& input_src,
             const std::string& omega, const std::string& v_src,
             std::ostream& out) {
  TElement input = parse_element(input_src);
  if (map == "K") {
    out << to_string(K_map(input)) << "\n";
  } else if (map == "Kinv") {
    out << to_string(K_inverse(input)) << "\n";
  } else if (map == "p") {
    out << to_string(pbw_normal_form(input).value) << "\n";
  } else {
    if (omega.empty())
      throw UsageError("map '" + map + "' requires --omega \"a,b\"");
    auto [gx, gy] = parse_omega(omega);
    JElement q = pair_j(input, gx, gy);
    if (map == "t") {
      out << to_string(t_map(q)) << "\n";
    } else if (map == "e") {
      out << to_string(e_map(q)) << "\n";
    } else {
      TElement v = parse_element(v_src);
      if (map == "r") out << to_string(r_apply(q, v)) << "\n";
      else if (map == "rho") out << to_string(rho_apply(q, v)) << "\n";
      else out << to_string(kappa_apply(q, v)) << "\n";
    }
  }
  return 0;
}

int do_verify(std::uint32_t gens, std::uint32_t max_u, std::uint32_t max_v,
              bool lemmas, std::ostream& out) {
  std::vector<props::EquationCheck> rows;
  props::TheoremSweep sweep = props::theorem_sweep(gens, max_u, max_v);
  rows.push_back({"commutation: normal form vanishes", sweep.cases, sweep.all_zero});
  rows.push_back({"commutation: kappa agreement", sweep.cases, sweep.kappa_equal});
  rows.push_back({"commutation: length drop", sweep.cases, sweep.degree_ok});
  if (lemmas)
    for (props::EquationCheck& check : props::lemma_suite_by_length(gens, max_u, max_v))
      rows.push_back(std::move(check));

  std::size_t failed = 0;
  for (const props::EquationCheck& row : rows) {
    out << (row.passed ? "pass  " : "FAIL  ") << std::left << std::setw(36)
        << row.name << "(" << row.cases << " cases)\n";
    if (!row.passed) ++failed;
  }
  out << "verify: " << rows.size() << " checks, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

int do_identity(int n, int pos, const std::string& format, std::ostream& out) {
  IdentityFormat fmt = IdentityFormat::Index;
  if (format == "latex") fmt = IdentityFormat::Latex;
  else if (format == "sexp") fmt = IdentityFormat::Sexp;
  IdentityDocument doc;
  try {
    doc = commutation_identity(n, pos);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out << render(doc, fmt) << "\n";
  return 0;
}

int do_oracle(const std::string& algebra, std::uint64_t seed,
              std::uint64_t trials, std::uint64_t max_len, std::ostream& out) {
  StructureTable base;
  bool randomize_diamond = false;
  const auto& builtins = builtin_tables();
  if (auto it = builtins.find(algebra); it != builtins.end()) {
    base = it->second;
    randomize_diamond = true; // builtin diamonds are zero; sweep random ones
  } else {
    std::ifstream file(algebra);
    if (!file)
      throw UsageError("unknown algebra '" + algebra +
                       "' (not a builtin, not a readable file)");
    std::ostringstream text;
    text << file.rdbuf();
    try {
      base = load_structure_table(text.str());
    } catch (const std::runtime_error& e) {
      throw UsageError(e.what());
    }
  }
  if (!check_jacobi(base))
    throw UsageError("structure table fails the Jacobi identity");

  constexpr std::uint32_t kGens = 3;
  const std::pair<std::uint32_t, std::uint32_t> pairs[] = {{0, 1}, {0, 2}, {1, 2}};
  GeneratorNames names;
  SplitMix rng{seed};
  std::uint64_t failed = 0;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    std::uint64_t tseed = rng.next();
    StructureTable tbl = randomize_diamond ? random_diamond(base, tseed) : base;
    Assignment asg = trial % 2 == 0 ? basis_assignment(kGens, tbl.dim)
                                    : random_assignment(kGens, tbl.dim, tseed);
    auto word = [&] {
      TensorWord w(rng.below(max_len + 1));
      for (Mono& m : w) m = gen_mono(static_cast<std::uint32_t>(rng.below(kGens)));
      return w;
    };
    TensorWord u = word(), v = word();
    auto [x, y] = pairs[rng.below(3)];
    bool ok = oracle_theorem(tbl, asg, u, GeneratorSymbol{x}, GeneratorSymbol{y}, v);
    if (!ok) {
      ++failed;
      out << "FAIL  trial " << trial << ": u=" << word_to_string(u, names)
          << " omega=(" << names.name(x) << "," << names.name(y)
          << ") v=" << word_to_string(v, names) << "\n";
    }
  }
  out << "oracle: " << trials << " trials over '" << algebra << "', seed "
      << seed << ", words <= " << max_len << ": ";
  if (failed == 0) out << "all passed\n";
  else out << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"free framed Lie algebra toolkit"};
  app.require_subcommand(1);

  std::string map_name, input_src, omega, v_src = "1";
  CLI::App* apply = app.add_subcommand("apply", "apply a canonical map to an expression");
  apply->add_option("--map", map_name, "one of K, Kinv, t, r, e, rho, kappa, p")
      ->required()
      ->check(CLI::IsMember({"K", "Kinv", "t", "r", "e", "rho", "kappa", "p"}));
  apply->add_option("--input", input_src, "element expression (the prefix u for the J-maps)")
      ->required();
  apply->add_option("--omega", omega, "generator pair \"a,b\" for t, r, e, rho, kappa");
  apply->add_option("--v", v_src, "target element for r, rho, kappa (default 1)");

  std::uint32_t gens = 3, max_u = 2, max_v = 2;
  bool lemmas = false;
  CLI::App* verify = app.add_subcommand("verify", "sweep the commutation check over word families");
  verify->add_option("--gens", gens, "number of generators")->required();
  verify->add_option("--max-u", max_u, "maximum u-word length")->required();
  verify->add_option("--max-v", max_v, "maximum v-word length")->required();
  verify->add_flag("--lemmas", lemmas, "also run the supporting-law suite");

  int id_n = 0, id_pos = 0;
  std::string id_format = "index";
  CLI::App* identity = app.add_subcommand("identity", "print a covariant-derivative commutation identity");
  identity->add_option("--n", id_n, "number of derivatives")->required();
  identity->add_option("--pos", id_pos, "position of the swapped pair (1-based)")->required();
  identity->add_option("--format", id_format, "index, latex, or sexp")
      ->check(CLI::IsMember({"index", "latex", "sexp"}));

  std::string algebra;
  std::uint64_t seed = 0, trials = 10, max_len = 2;
  CLI::App* oracle = app.add_subcommand("oracle", "replay the commutation check in a concrete algebra");
  oracle->add_option("--algebra", algebra, "builtin name or structure-table JSON file")
      ->required();
  oracle->add_option("--seed", seed, "base seed")->required();
  oracle->add_option("--trials", trials, "number of trials");
  oracle->add_option("--max-len", max_len, "maximum word length");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (apply->parsed()) return do_apply(map_name, input_src, omega, v_src, out);
    if (verify->parsed()) return do_verify(gens, max_u, max_v, lemmas, out);
    if (identity->parsed()) return do_identity(id_n, id_pos, id_format, out);
    return do_oracle(algebra, seed, trials, max_len, out);
  } catch (const ExprError& e) {
    err << "error: " << e.what() << " @" << e.line << ":" << e.col << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace framed

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "framed/cli.hpp"
#include "framed/identity.hpp"
#include "framed/oracle.hpp"

using namespace framed;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("cli: apply") {
  CliRun k = cli({"apply", "--map", "K", "--input", "x*y"});
  CHECK(k.code == 0);
  CHECK(k.out == "x*y - d(x,y)\n");

  CliRun kinv = cli({"apply", "--map", "Kinv", "--input", "x*y - d(x,y)"});
  CHECK(kinv.code == 0);
  CHECK(kinv.out == "x*y\n");

  CliRun p = cli({"apply", "--map", "p", "--input", "y*x"});
  CHECK(p.code == 0);
  CHECK(p.out == "x*y - [x,y]\n");

  CliRun t = cli({"apply", "--map", "t", "--input", "1", "--omega", "x,y"});
  CHECK(t.code == 0);
  CHECK(t.out == "d(x,y) - d(y,x) - [x,y]\n");

  // r(x /\ y) acting on a single letter is the base-case commutator action
  CliRun r = cli({"apply", "--map", "r", "--input", "1", "--omega", "x,y",
                  "--v", "z"});
  CHECK(r.code == 0);
  CHECK(r.out == "d(x,d(y,z)) - d(y,d(x,z)) - d([x,y],z)\n");

  // kappa on the same inputs agrees with K applied to the embedded element
  CliRun kap = cli({"apply", "--map", "kappa", "--input", "1", "--omega", "x,y",
                    "--v", "z"});
  CliRun kk = cli({"apply", "--map", "K", "--input",
                   "x*y*z - y*x*z + d(x,y)*z - d(y,x)*z - [x,y]*z"
                   " + d(x,d(y,z)) - d(y,d(x,z)) - d([x,y],z)"});
  CHECK(kap.code == 0);
  CHECK(kap.out == kk.out);
}

TEST_CASE("cli: identity formats and determinism") {
  CliRun idx = cli({"identity", "--n", "3", "--pos", "1", "--format", "index"});
  CHECK(idx.code == 0);
  CHECK(idx.out ==
        "∇_i∇_j∇_k−∇_j∇_i∇_k+T_{ij}^l"
        "∇_l∇_k+R_{ijk}^l∇_l=0\n");

  CliRun again = cli({"identity", "--n", "3", "--pos", "1", "--format", "index"});
  CHECK(again.out == idx.out);

  CliRun latex = cli({"identity", "--n", "3", "--pos", "1", "--format", "latex"});
  CHECK(latex.code == 0);
  CHECK(latex.out.find("\\nabla_i\\nabla_j\\nabla_k") != std::string::npos);

  CliRun sexp = cli({"identity", "--n", "4", "--pos", "2", "--format", "sexp"});
  CHECK(sexp.code == 0);
  IdentityDocument doc = parse_identity_sexp(sexp.out);
  CHECK(doc.n == 4);
  CHECK(doc.pos == 2);
}

TEST_CASE("cli: verify") {
  CliRun v = cli({"verify", "--gens", "2", "--max-u", "1", "--max-v", "1"});
  CHECK(v.code == 0);
  CHECK(v.out.substr(0, 4) == "pass");
  CHECK(v.out.find("verify: 3 checks, 0 failed\n") != std::string::npos);

  CliRun lemmas = cli({"verify", "--gens", "2", "--max-u", "1", "--max-v", "1",
                       "--lemmas"});
  CHECK(lemmas.code == 0);
  CHECK(lemmas.out.find("r-base (10)") != std::string::npos);
  CHECK(lemmas.out.find("kappa-equals-K (20)") != std::string::npos);
  CHECK(lemmas.out.find("verify: 13 checks, 0 failed\n") != std::string::npos);
}

TEST_CASE("cli: oracle") {
  CliRun builtin = cli({"oracle", "--algebra", "sl2", "--seed", "7", "--trials",
                        "6", "--max-len", "2"});
  CHECK(builtin.code == 0);
  CHECK(builtin.out ==
        "oracle: 6 trials over 'sl2', seed 7, words <= 2: all passed\n");

  SUBCASE("a structure table can come from a file") {
    std::string path = "cli_oracle_table.json";
    {
      std::ofstream f(path);
      f << save_structure_table(builtin_tables().at("heisenberg3"));
    }
    CliRun file = cli({"oracle", "--algebra", path, "--seed", "3", "--trials",
                       "4", "--max-len", "1"});
    CHECK(file.code == 0);
    CHECK(file.out.find("all passed") != std::string::npos);
  }

  SUBCASE("a non-Lie table is a usage error") {
    std::string path = "cli_oracle_bad.json";
    {
      StructureTable bad(3);
      bad.set_bracket(0, 1, 0, Scalar(1));
      bad.set_bracket(0, 2, 2, Scalar(1));
      std::ofstream f(path);
      f << save_structure_table(bad);
    }
    CliRun run = cli({"oracle", "--algebra", path, "--seed", "1"});
    CHECK(run.code == 2);
    CHECK(run.err == "error: structure table fails the Jacobi identity\n");
  }
}

TEST_CASE("cli: usage and input errors exit with 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"apply", "--input", "x"}).code == 2);            // missing --map
  CHECK(cli({"apply", "--map", "Q", "--input", "x"}).code == 2);

  CliRun parse = cli({"apply", "--map", "K", "--input", "x*"});
  CHECK(parse.code == 2);
  CHECK(parse.err == "error: expected expression, found 'end of input' @1:3\n");

  CliRun ident = cli({"apply", "--map", "K", "--input", "q"});
  CHECK(ident.code == 2);
  CHECK(ident.err == "error: unknown identifier 'q' @1:1\n");

  CHECK(cli({"apply", "--map", "t", "--input", "1"}).code == 2); // no --omega
  CliRun omega = cli({"apply", "--map", "t", "--input", "1", "--omega", "x;y"});
  CHECK(omega.code == 2);
  CliRun badgen = cli({"apply", "--map", "t", "--input", "1", "--omega", "x,q"});
  CHECK(badgen.code == 2);
  CHECK(badgen.err == "error: --omega: unknown generator 'q'\n");

  CliRun pos = cli({"identity", "--n", "3", "--pos", "5"});
  CHECK(pos.code == 2);
  CHECK(pos.err == "error: commutation_identity: need 1 <= i < n\n");
}

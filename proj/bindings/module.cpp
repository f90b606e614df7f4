#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "framed/cli.hpp"
#include "framed/expr.hpp"
#include "framed/identity.hpp"
#include "framed/maps.hpp"
#include "framed/print.hpp"
#include "properties.hpp"

namespace py = pybind11;
using namespace framed;

namespace {

struct CliOutcome {
  int code;
  std::string out, err;
};

CliOutcome run_args(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

// Route through the CLI so Python and shell invocations stay byte-identical.
std::string apply_map(const std::string& map, const std::string& input,
                      const std::string& omega, const std::string& v) {
  std::vector<std::string> args = {"apply", "--map", map, "--input", input};
  if (!omega.empty()) {
    args.push_back("--omega");
    args.push_back(omega);
  }
  args.push_back("--v");
  args.push_back(v);
  CliOutcome res = run_args(std::move(args));
  if (res.code != 0) {
    std::string msg = res.err.empty() ? res.out : res.err;
    if (!msg.empty() && msg.back() == '\n') msg.pop_back();
    throw std::invalid_argument(msg);
  }
  if (!res.out.empty() && res.out.back() == '\n') res.out.pop_back();
  return res.out;
}

std::string identity_text(int n, int pos, const std::string& format) {
  CliOutcome res = run_args({"identity", "--n", std::to_string(n), "--pos",
                             std::to_string(pos), "--format", format});
  if (res.code != 0) {
    std::string msg = res.err;
    if (!msg.empty() && msg.back() == '\n') msg.pop_back();
    throw std::invalid_argument(msg);
  }
  if (!res.out.empty() && res.out.back() == '\n') res.out.pop_back();
  return res.out;
}

std::pair<Mono, Mono> omega_pair(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("omega expects two generator names separated by a comma");
  auto trim = [](std::string s) {
    auto first = s.find_first_not_of(" \t");
    s.erase(0, first == std::string::npos ? s.size() : first);
    auto last = s.find_last_not_of(" \t");
    s.erase(last == std::string::npos ? 0 : last + 1);
    return s;
  };
  GeneratorNames names;
  std::string a = trim(text.substr(0, comma));
  std::string b = trim(text.substr(comma + 1));
  auto ia = names.index_of(a);
  auto ib = names.index_of(b);
  if (!ia) throw std::invalid_argument("unknown generator '" + a + "'");
  if (!ib) throw std::invalid_argument("unknown generator '" + b + "'");
  return {gen_mono(*ia), gen_mono(*ib)};
}

bool theorem_holds(const std::string& u_src, const std::string& omega,
                   const std::string& v_src) {
  TElement u = parse_element(u_src);
  TElement v = parse_element(v_src);
  auto [gx, gy] = omega_pair(omega);
  return theorem_check(u, make_lambda(GElement(gx), GElement(gy)), v).is_zero;
}

py::dict verify_sweep(std::uint32_t gens, std::uint32_t max_u,
                      std::uint32_t max_v) {
  props::TheoremSweep sweep = props::theorem_sweep(gens, max_u, max_v);
  py::dict out;
  out["cases"] = sweep.cases;
  out["all_zero"] = sweep.all_zero;
  out["kappa_equal"] = sweep.kappa_equal;
  out["degree_ok"] = sweep.degree_ok;
  return out;
}

int oracle_sweep(const std::string& algebra, std::uint64_t seed,
                 std::uint64_t trials, std::uint64_t max_len) {
  CliOutcome res =
      run_args({"oracle", "--algebra", algebra, "--seed", std::to_string(seed),
                "--trials", std::to_string(trials), "--max-len",
                std::to_string(max_len)});
  if (res.code == 2) {
    std::string msg = res.err;
    if (!msg.empty() && msg.back() == '\n') msg.pop_back();
    throw std::invalid_argument(msg);
  }
  std::size_t fails = 0;
  for (std::size_t at = res.out.find("FAIL"); at != std::string::npos;
       at = res.out.find("FAIL", at + 4))
    ++fails;
  return static_cast<int>(fails);
}

py::tuple run_passthrough(std::vector<std::string> args) {
  CliOutcome res = run_args(std::move(args));
  return py::make_tuple(res.code, res.out, res.err);
}

} // namespace

PYBIND11_MODULE(framedlie, m) {
  m.doc() = "free framed Lie algebra toolkit";
  m.def("apply_map", &apply_map, py::arg("map"), py::arg("input"),
        py::arg("omega") = "", py::arg("v") = "1",
        "Apply one of K, Kinv, t, r, e, rho, kappa, p and return the printed image.");
  m.def("identity", &identity_text, py::arg("n"), py::arg("pos"),
        py::arg("format") = "index",
        "Commutation identity for n derivatives with the swap at pos.");
  m.def("theorem_holds", &theorem_holds, py::arg("u"), py::arg("omega"),
        py::arg("v"),
        "Whether the commutation element for (u, omega, v) straightens to zero.");
  m.def("verify", &verify_sweep, py::arg("gens"), py::arg("max_u"),
        py::arg("max_v"), "Commutation sweep summary over word families.");
  m.def("oracle", &oracle_sweep, py::arg("algebra"), py::arg("seed"),
        py::arg("trials") = 10, py::arg("max_len") = 2,
        "Concrete-algebra trials; returns the number of failures.");
  m.def("run", &run_passthrough, py::arg("args"),
        "Invoke the command-line interface; returns (code, stdout, stderr).");
}

#pragma once

// Named equation checks shared by the unit tests, the acceptance gate, and
// the CLI verify subcommand. Each predicate returns true iff the law holds
// for the given inputs; the sweep drivers quantify them over enumerated
// input families. The lambda/eta helpers live here (not in the public API)
// on purpose: they are proof machinery, not operations.

#include <cstdint>
#include <string>
#include <vector>

#include "framed/maps.hpp"
#include "framed/tensor.hpp"

namespace framed::props {

// lambda_z = L_z + nabla_z on T(g); eta(Q) = L_t(Q) + r(Q).
TElement lambda_z(Mono z, const TElement& u);
TElement eta_apply(const JElement& Q, const TElement& v);

// K(x (x) u) = x (x) K(u) - K(nabla_x u)
bool eq3_k_recursion(Mono x, const TensorWord& u);
// t(x (x) Q) = x <> t(Q) - t(nabla_x Q)
bool eq4_t_recursion(Mono x, const TensorWord& prefix, Mono a, Mono b);
// r(x (x) Q + nabla_x Q) v = nabla_x(r(Q)v) - r(Q)(nabla_x v)
bool eq5_r_recursion(Mono x, const TensorWord& prefix, Mono a, Mono b,
                     const TensorWord& v);
// e(x (x) Q + nabla_x Q) = x (x) e(Q) - e(Q) (x) x
bool eq9_e_recursion(Mono x, const TensorWord& prefix, Mono a, Mono b);
// r(x(x)y - y(x)x) v = nabla_x nabla_y v - nabla_y nabla_x v - nabla_[x,y] v
bool eq10_r_base(Mono x, Mono y, const TensorWord& v);
// K(omega (x) v + rho(omega) v) = kappa(omega) v, empty prefix
bool eq11_kappa_base(Mono a, Mono b, const TensorWord& v);
// rho(z (x) Q + nabla_z Q) v = z (x) rho(Q)v + nabla_z(rho(Q)v) - rho(Q)(nabla_z v)
bool eq12_rho_recursion(Mono z, const TensorWord& prefix, Mono a, Mono b,
                        const TensorWord& v);
// concat(lambda_z u, v) = lambda_z(concat(u,v)) - concat(u, nabla_z v)
bool eq13_lambda_left_mult(Mono z, const TensorWord& u, const TensorWord& v);
// splits of lambda_z u = sum of (lambda_z u1) x u2 + u1 x (lambda_z u2)
bool eq14_lambda_coproduct(Mono z, const TensorWord& u);
// eta(z (x) Q + nabla_z Q) v = nabla_z(eta(Q)v) - eta(Q)(nabla_z v)
bool eq15_eta_recursion(Mono z, const TensorWord& prefix, Mono a, Mono b,
                        const TensorWord& v);
// lambda_z(u (x) omega) = (lambda_z u) (x) omega + u (x) nabla_z omega, in J
bool eq17_lambda_on_j(Mono z, const TensorWord& prefix, Mono a, Mono b);
// rho(u (x) omega) v = sum over splits of concat(u1, eta(u2 (x) omega) v)
bool eq18_rho_via_eta(const TensorWord& prefix, Mono a, Mono b, const TensorWord& v);
// kappa(z (x) Q + nabla_z Q) v = z (x) kappa(Q)v - kappa(Q)(nabla_z v)
bool eq19_kappa_recursion(Mono z, const TensorWord& prefix, Mono a, Mono b,
                          const TensorWord& v);
// K(j_embed(Q) (x) v + rho(Q)v) = kappa(Q)v
bool eq20_kappa_equals_k(const TensorWord& prefix, Mono a, Mono b,
                         const TensorWord& v);
// pbw(e(Q)) = 0
bool lemma1_pbw_kills_e(const TensorWord& prefix, Mono a, Mono b);
// r(Q)v = nabla(e(Q)) v
bool prop_r_is_nabla_e(const TensorWord& prefix, Mono a, Mono b,
                       const TensorWord& v);

struct EquationCheck {
  std::string name;
  std::size_t cases;
  bool passed;
};

// The recursion-law suite quantified over basis-letter inputs whose full
// input degree (all arguments combined) is bounded by max_degree.
std::vector<EquationCheck> equation_suite_by_degree(std::uint32_t n_gens,
                                                    std::uint32_t max_degree);

// The lemma suite (laws 10..20 above) quantified over generator words:
// u-words up to max_u letters, v-words up to max_v, all generator pairs.
std::vector<EquationCheck> lemma_suite_by_length(std::uint32_t n_gens,
                                                 std::uint32_t max_u,
                                                 std::uint32_t max_v);

struct TheoremSweep {
  std::size_t cases = 0;
  bool all_zero = true;     // every PBW normal form vanished
  bool kappa_equal = true;  // K(u x omega x v + rho v) matched kappa everywhere
  bool degree_ok = true;    // rho output stayed strictly shorter everywhere
};

// Main commutation sweep over generator words u (length <= max_u), v (length
// <= max_v) and every ordered generator pair omega.
TheoremSweep theorem_sweep(std::uint32_t n_gens, std::uint32_t max_u,
                           std::uint32_t max_v);

} // namespace framed::props

#include "properties.hpp"

#include <map>
#include <utility>

#include "framed/enumerate.hpp"

namespace framed::props {
namespace {

JElement one_triple(const TensorWord& prefix, Mono a, Mono b) {
  JElement q;
  q.add_triple(Scalar(1), prefix, a, b);
  return q;
}

// z (x) Q + nabla_z Q, the J-side lambda_z
JElement lambda_on_j(Mono z, const JElement& Q) {
  return prepend_prefix({z}, Q) + nabla_on_j(GElement(z), Q);
}

} // namespace

TElement lambda_z(Mono z, const TElement& u) {
  return concat(TElement(TensorWord{z}), u) + nabla(GElement(z), u);
}

TElement eta_apply(const JElement& Q, const TElement& v) {
  return concat(from_g(t_map(Q)), v) + r_apply(Q, v);
}

bool eq3_k_recursion(Mono x, const TensorWord& u) {
  TElement tu(u);
  TElement lhs = K_map(concat(TElement(TensorWord{x}), tu));
  TElement rhs = concat(TElement(TensorWord{x}), K_map(tu)) -
                 K_map(nabla(GElement(x), tu));
  return lhs == rhs;
}

bool eq4_t_recursion(Mono x, const TensorWord& prefix, Mono a, Mono b) {
  JElement q = one_triple(prefix, a, b);
  GElement lhs = t_map(prepend_prefix({x}, q));
  GElement rhs = diamond(GElement(x), t_map(q)) - t_map(nabla_on_j(GElement(x), q));
  return lhs == rhs;
}

bool eq5_r_recursion(Mono x, const TensorWord& prefix, Mono a, Mono b,
                     const TensorWord& v) {
  JElement q = one_triple(prefix, a, b);
  TElement tv(v);
  TElement lhs = r_apply(lambda_on_j(x, q), tv);
  TElement rq_v = r_apply(q, tv);
  TElement rhs = nabla(GElement(x), rq_v) - r_apply(q, nabla(GElement(x), tv));
  return lhs == rhs;
}

bool eq9_e_recursion(Mono x, const TensorWord& prefix, Mono a, Mono b) {
  JElement q = one_triple(prefix, a, b);
  TElement lhs = e_map(lambda_on_j(x, q));
  TElement eq = e_map(q);
  TElement xw(TensorWord{x});
  TElement rhs = concat(xw, eq) - concat(eq, xw);
  return lhs == rhs;
}

bool eq10_r_base(Mono x, Mono y, const TensorWord& v) {
  TElement tv(v);
  TElement lhs = r_apply(make_lambda(GElement(x), GElement(y)), tv);
  TElement rhs = nabla(GElement(x), nabla(GElement(y), tv)) -
                 nabla(GElement(y), nabla(GElement(x), tv)) -
                 nabla(bracket_mono(x, y), tv);
  return lhs == rhs;
}

bool eq11_kappa_base(Mono a, Mono b, const TensorWord& v) {
  JElement omega = one_triple({}, a, b);
  TElement tv(v);
  TElement lhs = K_map(concat(j_embed(omega), tv) + rho_apply(omega, tv));
  return lhs == kappa_apply(omega, tv);
}

bool eq12_rho_recursion(Mono z, const TensorWord& prefix, Mono a, Mono b,
                        const TensorWord& v) {
  JElement q = one_triple(prefix, a, b);
  TElement tv(v);
  TElement lhs = rho_apply(lambda_on_j(z, q), tv);
  TElement rho_v = rho_apply(q, tv);
  TElement rhs = concat(TElement(TensorWord{z}), rho_v) +
                 nabla(GElement(z), rho_v) - rho_apply(q, nabla(GElement(z), tv));
  return lhs == rhs;
}

bool eq13_lambda_left_mult(Mono z, const TensorWord& u, const TensorWord& v) {
  TElement tu(u), tv(v);
  TElement lhs = concat(lambda_z(z, tu), tv);
  TElement rhs = lambda_z(z, concat(tu, tv)) - concat(tu, nabla(GElement(z), tv));
  return lhs == rhs;
}

bool eq14_lambda_coproduct(Mono z, const TensorWord& u) {
  std::map<std::pair<TensorWord, TensorWord>, Scalar> lhs, rhs;
  TElement lam_u = lambda_z(z, TElement(u));
  for (const auto& [w, c] : lam_u.terms())
    for (const auto& s : coproduct_splits(w)) {
      auto& slot = lhs[{s.left, s.right}];
      slot += c;
    }
  for (const auto& s : coproduct_splits(u)) {
    TElement lam_l = lambda_z(z, TElement(s.left));
    TElement lam_r = lambda_z(z, TElement(s.right));
    for (const auto& [w, c] : lam_l.terms()) {
      auto& slot = rhs[{w, s.right}];
      slot += c;
    }
    for (const auto& [w, c] : lam_r.terms()) {
      auto& slot = rhs[{s.left, w}];
      slot += c;
    }
  }
  std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
  return lhs == rhs;
}

bool eq15_eta_recursion(Mono z, const TensorWord& prefix, Mono a, Mono b,
                        const TensorWord& v) {
  JElement q = one_triple(prefix, a, b);
  TElement tv(v);
  TElement lhs = eta_apply(lambda_on_j(z, q), tv);
  TElement rhs = nabla(GElement(z), eta_apply(q, tv)) -
                 eta_apply(q, nabla(GElement(z), tv));
  return lhs == rhs;
}

bool eq17_lambda_on_j(Mono z, const TensorWord& prefix, Mono a, Mono b) {
  JElement q = one_triple(prefix, a, b);
  JElement lhs = lambda_on_j(z, q);
  JElement rhs;
  TElement lam_u = lambda_z(z, TElement(prefix));
  for (const auto& [w, c] : lam_u.terms()) rhs.add_triple(c, w, a, b);
  rhs.add_triple(Scalar(1), prefix, diamond_mono(z, a), b);
  rhs.add_triple(Scalar(1), prefix, a, diamond_mono(z, b));
  return lhs == rhs;
}

bool eq18_rho_via_eta(const TensorWord& prefix, Mono a, Mono b, const TensorWord& v) {
  JElement q = one_triple(prefix, a, b);
  TElement tv(v);
  TElement lhs = rho_apply(q, tv);
  TElement rhs;
  for (const auto& s : coproduct_splits(prefix))
    rhs += concat(TElement(s.left), eta_apply(one_triple(s.right, a, b), tv));
  return lhs == rhs;
}

bool eq19_kappa_recursion(Mono z, const TensorWord& prefix, Mono a, Mono b,
                          const TensorWord& v) {
  JElement q = one_triple(prefix, a, b);
  TElement tv(v);
  TElement lhs = kappa_apply(lambda_on_j(z, q), tv);
  TElement rhs = concat(TElement(TensorWord{z}), kappa_apply(q, tv)) -
                 kappa_apply(q, nabla(GElement(z), tv));
  return lhs == rhs;
}

bool eq20_kappa_equals_k(const TensorWord& prefix, Mono a, Mono b,
                         const TensorWord& v) {
  JElement q = one_triple(prefix, a, b);
  TElement tv(v);
  TElement lhs = K_map(concat(j_embed(q), tv) + rho_apply(q, tv));
  return lhs == kappa_apply(q, tv);
}

bool lemma1_pbw_kills_e(const TensorWord& prefix, Mono a, Mono b) {
  return pbw_normal_form(e_map(one_triple(prefix, a, b))).value.is_zero();
}

bool prop_r_is_nabla_e(const TensorWord& prefix, Mono a, Mono b,
                       const TensorWord& v) {
  JElement q = one_triple(prefix, a, b);
  TElement tv(v);
  return r_apply(q, tv) == nabla_hom(e_map(q), tv);
}

namespace {

// Runs one named law over every (letter x, triple, v-word) combination whose
// summed degree stays within the budget. The three quantifier shapes below
// cover all laws in the suite.
template <typename Fn>
EquationCheck sweep_letter_word(const std::string& name, std::uint32_t n_gens,
                                std::uint32_t max_degree, Fn check) {
  EquationCheck out{name, 0, true};
  for (std::uint32_t dx = 1; dx < max_degree; ++dx)
    for (Mono x : basis_monomials(n_gens, dx))
      for (std::uint32_t du = 0; dx + du <= max_degree; ++du)
        for (const TensorWord& u : basis_words(n_gens, du)) {
          ++out.cases;
          if (!check(x, u)) out.passed = false;
        }
  return out;
}

template <typename Fn>
EquationCheck sweep_letter_triple(const std::string& name, std::uint32_t n_gens,
                                  std::uint32_t max_degree, Fn check) {
  EquationCheck out{name, 0, true};
  for (std::uint32_t dx = 1; dx + 2 <= max_degree; ++dx)
    for (Mono x : basis_monomials(n_gens, dx))
      for (std::uint32_t dq = 2; dx + dq <= max_degree; ++dq)
        for (const auto& [prefix, a, b] : j_triples(n_gens, dq)) {
          ++out.cases;
          if (!check(x, prefix, a, b)) out.passed = false;
        }
  return out;
}

template <typename Fn>
EquationCheck sweep_letter_triple_word(const std::string& name, std::uint32_t n_gens,
                                       std::uint32_t max_degree, Fn check) {
  EquationCheck out{name, 0, true};
  for (std::uint32_t dx = 1; dx + 2 <= max_degree; ++dx)
    for (Mono x : basis_monomials(n_gens, dx))
      for (std::uint32_t dq = 2; dx + dq <= max_degree; ++dq)
        for (const auto& [prefix, a, b] : j_triples(n_gens, dq))
          for (std::uint32_t dv = 0; dx + dq + dv <= max_degree; ++dv)
            for (const TensorWord& v : basis_words(n_gens, dv)) {
              ++out.cases;
              if (!check(x, prefix, a, b, v)) out.passed = false;
            }
  return out;
}

template <typename Fn>
EquationCheck sweep_letter_two_words(const std::string& name, std::uint32_t n_gens,
                                     std::uint32_t max_degree, Fn check) {
  EquationCheck out{name, 0, true};
  for (std::uint32_t dx = 1; dx <= max_degree; ++dx)
    for (Mono x : basis_monomials(n_gens, dx))
      for (std::uint32_t du = 0; dx + du <= max_degree; ++du)
        for (const TensorWord& u : basis_words(n_gens, du))
          for (std::uint32_t dv = 0; dx + du + dv <= max_degree; ++dv)
            for (const TensorWord& v : basis_words(n_gens, dv)) {
              ++out.cases;
              if (!check(x, u, v)) out.passed = false;
            }
  return out;
}

} // namespace

std::vector<EquationCheck> equation_suite_by_degree(std::uint32_t n_gens,
                                                    std::uint32_t max_degree) {
  std::vector<EquationCheck> out;
  out.push_back(sweep_letter_word("K-recursion", n_gens, max_degree,
                                  [](Mono x, const TensorWord& u) {
                                    return eq3_k_recursion(x, u);
                                  }));
  out.push_back(sweep_letter_triple("t-recursion", n_gens, max_degree,
                                    [](Mono x, const TensorWord& p, Mono a, Mono b) {
                                      return eq4_t_recursion(x, p, a, b);
                                    }));
  out.push_back(sweep_letter_triple_word(
      "r-recursion", n_gens, max_degree,
      [](Mono x, const TensorWord& p, Mono a, Mono b, const TensorWord& v) {
        return eq5_r_recursion(x, p, a, b, v);
      }));
  out.push_back(sweep_letter_triple("e-recursion", n_gens, max_degree,
                                    [](Mono x, const TensorWord& p, Mono a, Mono b) {
                                      return eq9_e_recursion(x, p, a, b);
                                    }));
  out.push_back(sweep_letter_triple_word(
      "rho-recursion", n_gens, max_degree,
      [](Mono z, const TensorWord& p, Mono a, Mono b, const TensorWord& v) {
        return eq12_rho_recursion(z, p, a, b, v);
      }));
  out.push_back(sweep_letter_two_words("lambda-left-mult", n_gens, max_degree,
                                       [](Mono z, const TensorWord& u,
                                          const TensorWord& v) {
                                         return eq13_lambda_left_mult(z, u, v);
                                       }));
  out.push_back(sweep_letter_word("lambda-coproduct", n_gens, max_degree,
                                  [](Mono z, const TensorWord& u) {
                                    return eq14_lambda_coproduct(z, u);
                                  }));
  out.push_back(sweep_letter_triple_word(
      "eta-recursion", n_gens, max_degree,
      [](Mono z, const TensorWord& p, Mono a, Mono b, const TensorWord& v) {
        return eq15_eta_recursion(z, p, a, b, v);
      }));
  out.push_back(sweep_letter_triple_word(
      "kappa-recursion", n_gens, max_degree,
      [](Mono z, const TensorWord& p, Mono a, Mono b, const TensorWord& v) {
        return eq19_kappa_recursion(z, p, a, b, v);
      }));
  return out;
}

std::vector<EquationCheck> lemma_suite_by_length(std::uint32_t n_gens,
                                                 std::uint32_t max_u,
                                                 std::uint32_t max_v) {
  // generator-pair omegas and generator words within the length bounds
  std::vector<TensorWord> us, vs;
  for (std::uint32_t l = 0; l <= max_u; ++l)
    for (TensorWord& w : generator_words(n_gens, l)) us.push_back(std::move(w));
  for (std::uint32_t l = 0; l <= max_v; ++l)
    for (TensorWord& w : generator_words(n_gens, l)) vs.push_back(std::move(w));

  std::vector<std::pair<Mono, Mono>> pairs;
  for (std::uint32_t i = 0; i < n_gens; ++i)
    for (std::uint32_t j = i + 1; j < n_gens; ++j)
      pairs.emplace_back(gen_mono(i), gen_mono(j));

  std::vector<EquationCheck> out;
  auto add = [&out](const std::string& name) -> EquationCheck& {
    out.push_back(EquationCheck{name, 0, true});
    return out.back();
  };

  {
    auto& c = add("r-base (10)");
    for (const auto& [x, y] : pairs)
      for (const TensorWord& v : vs) {
        ++c.cases;
        if (!eq10_r_base(x, y, v)) c.passed = false;
      }
  }
  {
    auto& c = add("kappa-base (11)");
    for (const auto& [a, b] : pairs)
      for (const TensorWord& v : vs) {
        ++c.cases;
        if (!eq11_kappa_base(a, b, v)) c.passed = false;
      }
  }
  {
    auto& c = add("rho-recursion (12)");
    for (std::uint32_t g = 0; g < n_gens; ++g)
      for (const auto& [a, b] : pairs)
        for (const TensorWord& u : us)
          for (const TensorWord& v : vs) {
            ++c.cases;
            if (!eq12_rho_recursion(gen_mono(g), u, a, b, v)) c.passed = false;
          }
  }
  {
    auto& c = add("lambda-left-mult (13)");
    for (std::uint32_t g = 0; g < n_gens; ++g)
      for (const TensorWord& u : us)
        for (const TensorWord& v : vs) {
          ++c.cases;
          if (!eq13_lambda_left_mult(gen_mono(g), u, v)) c.passed = false;
        }
  }
  {
    auto& c = add("lambda-coproduct (14)");
    for (std::uint32_t g = 0; g < n_gens; ++g)
      for (const TensorWord& u : us) {
        ++c.cases;
        if (!eq14_lambda_coproduct(gen_mono(g), u)) c.passed = false;
      }
  }
  {
    auto& c = add("eta-recursion (15)");
    for (std::uint32_t g = 0; g < n_gens; ++g)
      for (const auto& [a, b] : pairs)
        for (const TensorWord& u : us)
          for (const TensorWord& v : vs) {
            ++c.cases;
            if (!eq15_eta_recursion(gen_mono(g), u, a, b, v)) c.passed = false;
          }
  }
  {
    auto& c = add("lambda-on-J (17)");
    for (std::uint32_t g = 0; g < n_gens; ++g)
      for (const auto& [a, b] : pairs)
        for (const TensorWord& u : us) {
          ++c.cases;
          if (!eq17_lambda_on_j(gen_mono(g), u, a, b)) c.passed = false;
        }
  }
  {
    auto& c = add("rho-via-eta (18)");
    for (const auto& [a, b] : pairs)
      for (const TensorWord& u : us)
        for (const TensorWord& v : vs) {
          ++c.cases;
          if (!eq18_rho_via_eta(u, a, b, v)) c.passed = false;
        }
  }
  {
    auto& c = add("kappa-recursion (19)");
    for (std::uint32_t g = 0; g < n_gens; ++g)
      for (const auto& [a, b] : pairs)
        for (const TensorWord& u : us)
          for (const TensorWord& v : vs) {
            ++c.cases;
            if (!eq19_kappa_recursion(gen_mono(g), u, a, b, v)) c.passed = false;
          }
  }
  {
    auto& c = add("kappa-equals-K (20)");
    for (const auto& [a, b] : pairs)
      for (const TensorWord& u : us)
        for (const TensorWord& v : vs) {
          ++c.cases;
          if (!eq20_kappa_equals_k(u, a, b, v)) c.passed = false;
        }
  }
  return out;
}

TheoremSweep theorem_sweep(std::uint32_t n_gens, std::uint32_t max_u,
                           std::uint32_t max_v) {
  TheoremSweep out;
  std::vector<TensorWord> us, vs;
  for (std::uint32_t l = 0; l <= max_u; ++l)
    for (TensorWord& w : generator_words(n_gens, l)) us.push_back(std::move(w));
  for (std::uint32_t l = 0; l <= max_v; ++l)
    for (TensorWord& w : generator_words(n_gens, l)) vs.push_back(std::move(w));

  for (std::uint32_t i = 0; i < n_gens; ++i)
    for (std::uint32_t j = 0; j < n_gens; ++j) {
      JElement omega = make_lambda(GElement(gen_mono(i)), GElement(gen_mono(j)));
      for (const TensorWord& u : us)
        for (const TensorWord& v : vs) {
          ++out.cases;
          JElement Q = prepend_prefix(u, omega);
          TElement tv(v);
          TElement rho_v = rho_apply(Q, tv);
          for (const auto& [w, c] : rho_v.terms())
            if (w.size() >= u.size() + 2 + v.size()) out.degree_ok = false;
          TElement lhs = K_map(concat(j_embed(Q), tv) + rho_v);
          if (!pbw_normal_form(lhs).value.is_zero()) out.all_zero = false;
          if (!(lhs == kappa_apply(Q, tv))) out.kappa_equal = false;
        }
    }
  return out;
}

} // namespace framed::props

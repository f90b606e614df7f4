#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "framed/identity.hpp"
#include "framed/maps.hpp"
#include "framed/tensor.hpp"

using namespace framed;

namespace {

SymbolicFactor gen(int slot) { return {SymbolicFactor::Kind::Gen, {slot}, 0}; }

SymbolicFactor tsym(std::vector<int> args) {
  return {SymbolicFactor::Kind::T, std::move(args), 0};
}

SymbolicFactor rsym(std::vector<int> args, int target) {
  return {SymbolicFactor::Kind::R, std::move(args), target};
}

// Interpret slot s as the generator with index s-1 and expand every symbol
// through the kernel maps.
JElement slot_triple(const SymbolicFactor& f) {
  std::size_t derivs = f.args.size() - 2;
  TensorWord prefix;
  for (std::size_t a = 0; a < derivs; ++a)
    prefix.push_back(gen_mono(static_cast<std::uint32_t>(f.args[a] - 1)));
  JElement q;
  q.add_triple(Scalar(1), prefix,
               gen_mono(static_cast<std::uint32_t>(f.args[derivs] - 1)),
               gen_mono(static_cast<std::uint32_t>(f.args[derivs + 1] - 1)));
  return q;
}

TElement expand_term(const IdentityTerm& term) {
  TElement cur = TElement::unit();
  for (const auto& f : term.word) {
    switch (f.kind) {
      case SymbolicFactor::Kind::Gen:
        cur = concat(cur, TElement(TensorWord{gen_mono(
                              static_cast<std::uint32_t>(f.args[0] - 1))}));
        break;
      case SymbolicFactor::Kind::T:
        cur = concat(cur, from_g(t_map(slot_triple(f))));
        break;
      case SymbolicFactor::Kind::R: {
        TElement letter(TensorWord{gen_mono(static_cast<std::uint32_t>(f.target - 1))});
        cur = concat(cur, r_apply(slot_triple(f), letter));
        break;
      }
    }
  }
  return term.coef * cur;
}

} // namespace

TEST_CASE("rho_opaque base shapes") {
  auto short_suffix = rho_opaque(0, 1);
  REQUIRE(short_suffix.size() == 2);
  CHECK(short_suffix[0].coef == Scalar(1));
  CHECK(short_suffix[0].word ==
        std::vector<SymbolicFactor>{tsym({1, 2}), gen(3)});
  CHECK(short_suffix[1].word == std::vector<SymbolicFactor>{rsym({1, 2}, 3)});

  auto bare = rho_opaque(0, 0);
  REQUIRE(bare.size() == 1);
  CHECK(bare[0].word == std::vector<SymbolicFactor>{tsym({1, 2})});

  // one prefix letter: the letter outside first, then swallowed by the symbol
  auto one_prefix = rho_opaque(1, 0);
  REQUIRE(one_prefix.size() == 2);
  CHECK(one_prefix[0].word == std::vector<SymbolicFactor>{gen(1), tsym({2, 3})});
  CHECK(one_prefix[1].word == std::vector<SymbolicFactor>{tsym({1, 2, 3})});
}

TEST_CASE("commutation_identity shape and bounds") {
  auto doc = commutation_identity(3, 1);
  CHECK(doc.n == 3);
  CHECK(doc.pos == 1);
  REQUIRE(doc.terms.size() == 4);
  CHECK(doc.terms[0].coef == Scalar(1));
  CHECK(doc.terms[0].word ==
        std::vector<SymbolicFactor>{gen(1), gen(2), gen(3)});
  CHECK(doc.terms[1].coef == Scalar(-1));
  CHECK(doc.terms[1].word ==
        std::vector<SymbolicFactor>{gen(2), gen(1), gen(3)});

  CHECK_THROWS_AS(commutation_identity(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(commutation_identity(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(commutation_identity(1, 1), std::invalid_argument);
}

TEST_CASE("every remainder term is shorter than n") {
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i < n; ++i) {
      auto doc = commutation_identity(n, i);
      REQUIRE(doc.terms.size() >= 2);
      CHECK(doc.terms[0].word.size() == static_cast<std::size_t>(n));
      CHECK(doc.terms[1].word.size() == static_cast<std::size_t>(n));
      for (std::size_t k = 2; k < doc.terms.size(); ++k)
        CHECK(doc.terms[k].word.size() < static_cast<std::size_t>(n));
    }
  }
}

TEST_CASE("index rendering") {
  CHECK(render(commutation_identity(3, 1), IdentityFormat::Index) ==
        "∇_i∇_j∇_k−∇_j∇_i∇_k+T_{ij}^l∇_l∇_k+R_{ijk}^l∇_l=0");
  CHECK(render(commutation_identity(2, 1), IdentityFormat::Index) ==
        "∇_i∇_j−∇_j∇_i+T_{ij}^l∇_l=0");
  // slot 4 claims the letter l, so contractions move on to m
  CHECK(render(commutation_identity(4, 2), IdentityFormat::Index) ==
        "∇_i∇_j∇_k∇_l−∇_i∇_k∇_j∇_l+∇_iT_{jk}^m∇_m∇_l+∇_iR_{jkl}^m∇_m"
        "+(∇_iT)_{jk}^m∇_m∇_l+(∇_iR)_{jkl}^m∇_m=0");
}

TEST_CASE("convention note appears exactly when a symbol stacks derivatives") {
  std::string plain = render(commutation_identity(3, 1), IdentityFormat::Index);
  CHECK(plain.find("note:") == std::string::npos);
  std::string single = render(commutation_identity(4, 2), IdentityFormat::Index);
  CHECK(single.find("note:") == std::string::npos);

  std::string stacked = render(commutation_identity(4, 3), IdentityFormat::Index);
  REQUIRE(stacked.find("note:") == 0);
  CHECK(stacked.find("(∇_i∇_jT)_{kl}^m∇_m") != std::string::npos);
  std::string latexed = render(commutation_identity(4, 3), IdentityFormat::Latex);
  CHECK(latexed.find("% note:") == 0);
}

TEST_CASE("latex rendering") {
  CHECK(render(commutation_identity(3, 1), IdentityFormat::Latex) ==
        "\\nabla_i\\nabla_j\\nabla_k-\\nabla_j\\nabla_i\\nabla_k"
        "+T_{ij}^l\\nabla_l\\nabla_k+R_{ijk}^l\\nabla_l=0");
}

TEST_CASE("sexp roundtrip is lossless") {
  CHECK(render(commutation_identity(3, 1), IdentityFormat::Sexp) ==
        "(identity 3 1 (term 1 (gen 1) (gen 2) (gen 3))"
        " (term -1 (gen 2) (gen 1) (gen 3))"
        " (term 1 (t 1 2) (gen 3)) (term 1 (r 1 2 3)))");
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i < n; ++i) {
      auto doc = commutation_identity(n, i);
      std::string text = render(doc, IdentityFormat::Sexp);
      CHECK(parse_identity_sexp(text) == doc);
      CHECK(render(parse_identity_sexp(text), IdentityFormat::Sexp) == text);
    }
  }
  CHECK_THROWS_AS(parse_identity_sexp("(identity 3)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_identity_sexp("(identity 3 1 (term))"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_identity_sexp("(identity 3 1 (term 1 (q 1)))"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_identity_sexp("(identity 3 1"), std::invalid_argument);
}

TEST_CASE("opaque expansion matches the kernel rho") {
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i < n; ++i) {
      int prefix_len = i - 1, suffix_len = n - i - 1;
      TensorWord prefix, suffix;
      for (int s = 1; s <= prefix_len; ++s)
        prefix.push_back(gen_mono(static_cast<std::uint32_t>(s - 1)));
      for (int s = prefix_len + 3; s <= n; ++s)
        suffix.push_back(gen_mono(static_cast<std::uint32_t>(s - 1)));
      JElement q;
      q.add_triple(Scalar(1), prefix,
                   gen_mono(static_cast<std::uint32_t>(prefix_len)),
                   gen_mono(static_cast<std::uint32_t>(prefix_len + 1)));

      TElement expanded;
      for (const auto& term : rho_opaque(prefix_len, suffix_len))
        expanded += expand_term(term);

      CAPTURE(n);
      CAPTURE(i);
      CHECK(expanded == rho_apply(q, TElement(suffix)));
    }
  }
}

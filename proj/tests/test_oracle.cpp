#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "framed/enumerate.hpp"
#include "framed/maps.hpp"
#include "framed/oracle.hpp"
#include "framed/tensor.hpp"
#include "test_support.hpp"

using namespace framed;
using framed::testing::Rng;

namespace {

const Mono X = gen_mono(0);
const Mono Y = gen_mono(1);
const Mono Z = gen_mono(2);

JElement triple(const TensorWord& prefix, Mono x, Mono y) {
  JElement q;
  q.add_triple(Scalar(1), prefix, x, y);
  return q;
}

TensorWord random_word(Rng& rng, std::size_t max_len, std::uint32_t n_gens) {
  TensorWord w(rng.below(max_len + 1));
  for (Mono& m : w) m = gen_mono(static_cast<std::uint32_t>(rng.below(n_gens)));
  return w;
}

// [a, b] and a <> b inside the concrete algebra, straight from the constants.
ConcreteVec cbracket(const StructureTable& tbl, const ConcreteVec& a,
                     const ConcreteVec& b) {
  ConcreteVec out(tbl.dim, Scalar(0));
  for (int i = 0; i < tbl.dim; ++i)
    for (int j = 0; j < tbl.dim; ++j)
      for (int k = 0; k < tbl.dim; ++k)
        out[k] += a[i] * b[j] * tbl.bracket_c(i, j, k);
  return out;
}

ConcreteVec cdiamond(const StructureTable& tbl, const ConcreteVec& a,
                     const ConcreteVec& b) {
  ConcreteVec out(tbl.dim, Scalar(0));
  for (int i = 0; i < tbl.dim; ++i)
    for (int j = 0; j < tbl.dim; ++j)
      for (int k = 0; k < tbl.dim; ++k)
        out[k] += a[i] * b[j] * tbl.diamond_c(i, j, k);
  return out;
}

// Concatenation product of concrete tensors (the test-side mirror of concat).
ConcreteTensor cproduct(const ConcreteTensor& a, const ConcreteTensor& b) {
  ConcreteTensor out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      CWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  return out;
}

// With the basis assignment on three generators over a dim-3 table, generator
// words evaluate to single index words.
CWord indices(const TensorWord& w) {
  CWord out;
  for (Mono m : w) out.push_back(static_cast<int>(mono_gen_index(m)));
  return out;
}

StructureTable sl2_with_diamond(std::uint64_t seed) {
  return random_diamond(builtin_tables().at("sl2"), seed);
}

} // namespace

TEST_CASE("structure tables and the Jacobi check") {
  for (const auto& [name, tbl] : builtin_tables()) {
    CAPTURE(name);
    CHECK(check_jacobi(tbl));
  }

  const StructureTable& sl2 = builtin_tables().at("sl2");
  CHECK(sl2.dim == 3);
  CHECK(sl2.bracket_c(0, 1, 1) == Scalar(2));
  CHECK(sl2.bracket_c(1, 0, 1) == Scalar(-2)); // mirror stored automatically
  CHECK(sl2.bracket_c(0, 2, 2) == Scalar(-2));
  CHECK(sl2.bracket_c(1, 2, 0) == Scalar(1));
  CHECK(sl2.diamond_c(0, 1, 1) == 0);

  const StructureTable& ab4 = builtin_tables().at("abelian4");
  CHECK(ab4.dim == 4);
  for (const Scalar& c : ab4.bracket) CHECK(c == 0);

  // Antisymmetric but fails Jacobi: [e0,e1] = e0, [e0,e2] = e2 gives
  // [[e0,e1],e2] + [[e1,e2],e0] + [[e2,e0],e1] = e2.
  StructureTable bad(3);
  bad.set_bracket(0, 1, 0, Scalar(1));
  bad.set_bracket(0, 2, 2, Scalar(1));
  CHECK_FALSE(check_jacobi(bad));

  // A raw write without the mirror breaks antisymmetry.
  StructureTable lop(2);
  lop.bracket[lop.at(0, 1, 0)] = Scalar(1);
  CHECK_FALSE(check_jacobi(lop));
}

TEST_CASE("random diamond tables are seeded and leave the bracket alone") {
  StructureTable a = sl2_with_diamond(42);
  StructureTable b = sl2_with_diamond(42);
  StructureTable c = sl2_with_diamond(43);
  CHECK(a.diamond == b.diamond);
  CHECK(a.diamond != c.diamond);
  CHECK(a.bracket == builtin_tables().at("sl2").bracket);
  CHECK(check_jacobi(a));
  for (const Scalar& d : a.diamond) {
    CHECK(d >= Scalar(-9));
    CHECK(d <= Scalar(9));
  }
}

TEST_CASE("structure table JSON round trip") {
  StructureTable tbl = sl2_with_diamond(7);
  std::string text = save_structure_table(tbl);
  CHECK(text == save_structure_table(tbl));
  StructureTable back = load_structure_table(text);
  CHECK(back.dim == tbl.dim);
  CHECK(back.bracket == tbl.bracket);
  CHECK(back.diamond == tbl.diamond);

  StructureTable minimal = load_structure_table("{\"dim\": 2}");
  CHECK(minimal.dim == 2);
  for (const Scalar& c : minimal.bracket) CHECK(c == 0);

  CHECK_THROWS_AS(load_structure_table("not json"), std::runtime_error);
  CHECK_THROWS_WITH_AS(load_structure_table("[]"),
                       "structure table: expected an object with an integer 'dim'",
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(load_structure_table("{\"dim\": 0}"),
                       "structure table: 'dim' must be positive",
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(
      load_structure_table("{\"dim\": 2, \"bracket\": [[0, 1, 0]]}"),
      "structure table: each 'bracket' entry must be [i, j, k, \"p/q\"]",
      std::runtime_error);
  CHECK_THROWS_WITH_AS(
      load_structure_table("{\"dim\": 2, \"bracket\": [[0, 2, 0, \"1\"]]}"),
      "structure table: index out of range", std::runtime_error);
  CHECK_THROWS_WITH_AS(
      load_structure_table("{\"dim\": 2, \"bracket\": [[1, 0, 0, \"1\"]]}"),
      "structure table: bracket entries must have i < j", std::runtime_error);
  CHECK_THROWS_WITH_AS(
      load_structure_table("{\"dim\": 2, \"diamond\": [[0, 1, 0, \"1/0\"]]}"),
      "structure table: bad rational (zero denominator): '1/0'",
      std::runtime_error);
}

TEST_CASE("assignments") {
  Assignment basis = basis_assignment(4, 3);
  CHECK(basis.vectors.size() == 4);
  CHECK(basis.vectors.at(GeneratorSymbol{0}) == ConcreteVec{Scalar(1), Scalar(0), Scalar(0)});
  CHECK(basis.vectors.at(GeneratorSymbol{2}) == ConcreteVec{Scalar(0), Scalar(0), Scalar(1)});
  CHECK(basis.vectors.at(GeneratorSymbol{3}) == ConcreteVec{Scalar(1), Scalar(0), Scalar(0)});

  Assignment r1 = random_assignment(3, 3, 5);
  Assignment r2 = random_assignment(3, 3, 5);
  Assignment r3 = random_assignment(3, 3, 6);
  CHECK(r1.vectors == r2.vectors);
  CHECK(r1.vectors != r3.vectors);
}

TEST_CASE("the evaluator is a framed-Lie homomorphism") {
  StructureTable tbl = sl2_with_diamond(3);

  SUBCASE("basis vectors and a concrete bracket") {
    Evaluator ev(tbl, basis_assignment(3, 3));
    CHECK(ev.eval_mono(X) == ConcreteVec{Scalar(1), Scalar(0), Scalar(0)});
    // [x, y] evaluates to [e0, e1] = 2 e1 in sl2.
    GElement xy = bracket(GElement(X), GElement(Y));
    CHECK(ev.eval_g(xy) == ConcreteVec{Scalar(0), Scalar(2), Scalar(0)});
  }

  SUBCASE("products of random elements, basis and random assignments") {
    for (Assignment asg : {basis_assignment(3, 3), random_assignment(3, 3, 17)}) {
      Evaluator ev(tbl, asg);
      Rng rng(91);
      for (int trial = 0; trial < 25; ++trial) {
        GElement a = framed::testing::random_g_element(rng, 3, 3);
        GElement b = framed::testing::random_g_element(rng, 3, 3);
        ConcreteVec va = ev.eval_g(a), vb = ev.eval_g(b);
        CHECK(ev.eval_g(bracket(a, b)) == cbracket(tbl, va, vb));
        CHECK(ev.eval_g(diamond(a, b)) == cdiamond(tbl, va, vb));
      }
    }
  }

  SUBCASE("an unassigned generator is reported by name") {
    Evaluator ev(tbl, basis_assignment(2, 3));
    CHECK_THROWS_WITH_AS(ev.eval_mono(Z), "unassigned generator 'z'",
                         std::invalid_argument);
  }
}

TEST_CASE("tensor evaluation") {
  StructureTable tbl = sl2_with_diamond(9);
  Evaluator ev(tbl, basis_assignment(3, 3));

  CHECK(ev.eval_tensor(TElement::unit()) == ConcreteTensor::unit());
  CHECK(ev.eval_tensor(TElement(TensorWord{X, Y})) == ConcreteTensor(CWord{0, 1}));

  TElement u(TensorWord{X, Y});
  u += TElement(TensorWord{Z}, Scalar(1, 2));
  ConcreteTensor expect(CWord{0, 1});
  expect += ConcreteTensor(CWord{2}, Scalar(1, 2));
  CHECK(ev.eval_tensor(u) == expect);

  SUBCASE("evaluation turns concatenation into the word product") {
    Evaluator rev(tbl, random_assignment(3, 3, 23));
    Rng rng(51);
    for (int trial = 0; trial < 20; ++trial) {
      TElement a(random_word(rng, 3, 3));
      TElement b(random_word(rng, 3, 3));
      CHECK(rev.eval_tensor(concat(a, b)) ==
            cproduct(rev.eval_tensor(a), rev.eval_tensor(b)));
    }
  }
}

TEST_CASE("concrete kernel maps agree with the symbolic maps under evaluation") {
  StructureTable tbl = sl2_with_diamond(5);

  SUBCASE("K, any assignment") {
    for (Assignment asg : {basis_assignment(3, 3), random_assignment(3, 3, 11)}) {
      Evaluator ev(tbl, asg);
      for (std::size_t len = 0; len <= 3; ++len)
        for (const TensorWord& w : generator_words(3, len)) {
          TElement u(w);
          CHECK(ev.eval_tensor(K_map(u)) == concrete_K(tbl, ev.eval_tensor(u)));
        }
    }
  }

  SUBCASE("nabla along a basis letter") {
    // z evaluates to e_2 under the basis assignment, so the index form of
    // nabla must match the symbolic one.
    Evaluator ev(tbl, basis_assignment(3, 3));
    for (std::size_t len = 0; len <= 3; ++len)
      for (const TensorWord& w : generator_words(3, len)) {
        TElement u(w);
        CHECK(ev.eval_tensor(nabla(GElement(Z), u)) ==
              concrete_nabla(tbl, 2, ev.eval_tensor(u)));
      }
  }

  SUBCASE("t and r on index words via the basis assignment") {
    Evaluator ev(tbl, basis_assignment(3, 3));
    for (std::size_t len = 0; len <= 2; ++len)
      for (const TensorWord& w : generator_words(3, len))
        for (auto [x, y] : {std::pair{X, Y}, {X, Z}, {Y, Z}, {Y, X}}) {
          JElement q = triple(w, x, y);
          int ix = static_cast<int>(mono_gen_index(x));
          int iy = static_cast<int>(mono_gen_index(y));
          CHECK(ev.eval_g(t_map(q)) == concrete_t(tbl, indices(w), ix, iy));
          TElement v(TensorWord{Z, X});
          CHECK(ev.eval_tensor(r_apply(q, v)) ==
                concrete_r(tbl, indices(w), ix, iy, ev.eval_tensor(v)));
        }
  }

  SUBCASE("rho on index words via the basis assignment") {
    Evaluator ev(tbl, basis_assignment(3, 3));
    Rng rng(77);
    for (int trial = 0; trial < 15; ++trial) {
      TensorWord uw = random_word(rng, 2, 3);
      TElement v(random_word(rng, 2, 3));
      JElement q = triple(uw, X, Y);
      CHECK(ev.eval_tensor(rho_apply(q, v)) ==
            concrete_rho(tbl, ConcreteTensor(indices(uw)), 0, 1,
                         ev.eval_tensor(v)));
    }
  }

  SUBCASE("straightening commutes with evaluation up to concrete normal form") {
    for (Assignment asg : {basis_assignment(3, 3), random_assignment(3, 3, 29)}) {
      Evaluator ev(tbl, asg);
      Rng rng(13);
      for (int trial = 0; trial < 15; ++trial) {
        TElement u(random_word(rng, 4, 3));
        CHECK(concrete_pbw(tbl, ev.eval_tensor(pbw_normal_form(u).value)) ==
              concrete_pbw(tbl, ev.eval_tensor(u)));
      }
    }
  }
}

TEST_CASE("the oracle validates the commutation theorem") {
  SUBCASE("abelian table with zero diamond") {
    const StructureTable& tbl = builtin_tables().at("abelian3");
    Assignment asg = basis_assignment(3, 3);
    CHECK(oracle_theorem(tbl, asg, TensorWord{X}, GeneratorSymbol{0},
                         GeneratorSymbol{1}, TensorWord{Y}));
  }

  SUBCASE("sl2 with a random diamond, both assignment flavors") {
    StructureTable tbl = sl2_with_diamond(42);
    std::vector<TensorWord> words = {TensorWord{}, TensorWord{X},
                                     TensorWord{Y, Z}};
    for (Assignment asg : {basis_assignment(3, 3), random_assignment(3, 3, 42)})
      for (const TensorWord& u : words)
        for (const TensorWord& v : words)
          for (auto [x, y] : {std::pair{0u, 1u}, {1u, 2u}, {0u, 2u}}) {
            OracleResult res =
                oracle_theorem_full(tbl, asg, u, GeneratorSymbol{x},
                                    GeneratorSymbol{y}, v);
            CHECK(res.is_zero);
          }
  }

  SUBCASE("the pre-straightening side matches the symbolic check exactly") {
    StructureTable tbl = sl2_with_diamond(8);
    Assignment asg = random_assignment(3, 3, 31);
    Evaluator ev(tbl, asg);
    Rng rng(19);
    for (int trial = 0; trial < 10; ++trial) {
      TensorWord u = random_word(rng, 2, 3);
      TensorWord v = random_word(rng, 2, 3);
      TheoremResult sym =
          theorem_check(TElement(u), make_lambda(GElement(X), GElement(Y)),
                        TElement(v));
      OracleResult conc = oracle_theorem_full(tbl, asg, u, GeneratorSymbol{0},
                                              GeneratorSymbol{1}, v);
      CHECK(ev.eval_tensor(sym.lhs) == conc.lhs);
      CHECK(conc.is_zero);
    }
  }

  SUBCASE("a non-Lie table is rejected") {
    StructureTable bad(3);
    bad.set_bracket(0, 1, 0, Scalar(1));
    bad.set_bracket(0, 2, 2, Scalar(1));
    CHECK_THROWS_AS(oracle_theorem(bad, basis_assignment(3, 3), TensorWord{X},
                                   GeneratorSymbol{0}, GeneratorSymbol{1},
                                   TensorWord{Y}),
                    std::invalid_argument);
  }
}

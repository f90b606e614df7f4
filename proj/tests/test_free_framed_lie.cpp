#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "framed/enumerate.hpp"
#include "framed/g_element.hpp"
#include "framed/monomial.hpp"
#include "framed/scalar.hpp"
#include "test_support.hpp"

using namespace framed;
using framed::testing::Rng;

namespace {
const Mono X = gen_mono(0);
const Mono Y = gen_mono(1);
const Mono Z = gen_mono(2);
} // namespace

TEST_CASE("scalar string round trip") {
  CHECK(scalar_to_string(Scalar(5)) == "5");
  CHECK(scalar_to_string(Scalar(-3) / Scalar(4)) == "-3/4");
  CHECK(scalar_from_string("7/2") == Scalar(7) / Scalar(2));
  CHECK(scalar_from_string(" -12 ") == Scalar(-12));
  CHECK(scalar_from_string("4/6") == Scalar(2) / Scalar(3));
  CHECK_THROWS_AS(scalar_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(scalar_from_string("a"), std::invalid_argument);
  CHECK_THROWS_AS(scalar_from_string("1/"), std::invalid_argument);
  CHECK_THROWS_AS(scalar_from_string(""), std::invalid_argument);
}

TEST_CASE("monomial order basics") {
  CHECK(monomial_order(X, Y) < 0);
  CHECK(monomial_order(X, diamond_mono(X, Y)) < 0);
  CHECK(monomial_order(diamond_mono(X, Y), bracket_node(X, Y)) < 0);
  CHECK(monomial_order(Y, Y) == 0);
  CHECK(monomial_order(Y, X) > 0);
}

TEST_CASE("monomial order is a strict total order per degree") {
  for (std::uint32_t d = 1; d <= 5; ++d) {
    const auto& basis = basis_monomials(3, d);
    // strictly increasing as enumerated (sorted, no duplicates)
    for (std::size_t i = 0; i + 1 < basis.size(); ++i)
      CHECK(monomial_order(basis[i], basis[i + 1]) < 0);
    // antisymmetry + transitivity spot checks on a stride
    std::size_t stride = basis.size() / 17 + 1;
    for (std::size_t i = 0; i < basis.size(); i += stride)
      for (std::size_t j = 0; j < basis.size(); j += stride) {
        auto ij = monomial_order(basis[i], basis[j]);
        auto ji = monomial_order(basis[j], basis[i]);
        CHECK((ij < 0) == (ji > 0));
        CHECK((ij == 0) == (i == j));
      }
  }
}

TEST_CASE("basis counts over 3 generators") {
  CHECK(basis_monomials(3, 1).size() == 3);
  CHECK(basis_monomials(3, 2).size() == 12);
  CHECK(basis_monomials(3, 3).size() == 107);
}

TEST_CASE("hall validity of enumerated brackets") {
  for (std::uint32_t d = 2; d <= 4; ++d)
    for (Mono m : basis_monomials(3, d))
      if (mono_kind(m) == MonoKind::Bracket) {
        CHECK(hall_valid(mono_left(m), mono_right(m)));
        CHECK(gdegree(m) == d);
      }
}

TEST_CASE("diamond is free and bilinear") {
  GElement x(X), y(Y), z(Z);
  CHECK(diamond(x, y) == GElement(diamond_mono(X, Y)));
  CHECK(diamond(x + y, z) ==
        GElement(diamond_mono(X, Z)) + GElement(diamond_mono(Y, Z)));
  // no rewriting under a bracketed child
  GElement bxy = bracket(x, y);
  CHECK(bxy == GElement(bracket_node(X, Y)));
  CHECK(diamond(bxy, z) == GElement(diamond_mono(bracket_node(X, Y), Z)));
  // diamond is not symmetric
  CHECK_FALSE(diamond(x, y) == diamond(y, x));
  CHECK_FALSE((diamond(x, y) - diamond(y, x)).is_zero());
}

TEST_CASE("bracket basics") {
  GElement x(X), y(Y), z(Z);
  CHECK(bracket(x, x).is_zero());
  CHECK(bracket(y, x) == -GElement(bracket_node(X, Y)));
  GElement jacobi = bracket(bracket(x, y), z) + bracket(bracket(y, z), x) +
                    bracket(bracket(z, x), y);
  CHECK(jacobi.is_zero());
}

TEST_CASE("bracket straightening yields hall monomials") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    GElement a = framed::testing::random_g_element(rng, 3, 3);
    GElement b = framed::testing::random_g_element(rng, 3, 3);
    GElement br = bracket(a, b);
    for (const auto& [m, c] : br.terms()) {
      REQUIRE(mono_kind(m) == MonoKind::Bracket);
      CHECK(hall_valid(mono_left(m), mono_right(m)));
    }
  }
}

TEST_CASE("bracket antisymmetry randomized") {
  Rng rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    GElement a = framed::testing::random_g_element(rng, 4, 3);
    GElement b = framed::testing::random_g_element(rng, 4, 3);
    CHECK((bracket(a, b) + bracket(b, a)).is_zero());
  }
}

TEST_CASE("jacobi identity randomized") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    GElement a = framed::testing::random_g_element(rng, 3, 3);
    GElement b = framed::testing::random_g_element(rng, 3, 3);
    GElement c = framed::testing::random_g_element(rng, 3, 3);
    GElement sum = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) +
                   bracket(c, bracket(a, b));
    CHECK(sum.is_zero());
  }
}

TEST_CASE("g_degree") {
  GElement x(X);
  CHECK(g_degree(x) == 1u);
  GElement dxb = GElement(diamond_mono(X, bracket_node(Y, Z)));
  CHECK(g_degree(dxb) == 3u);
  GElement mixed = x + GElement(diamond_mono(X, Y));
  CHECK(g_degree(mixed) == std::nullopt);
  CHECK_THROWS_AS(g_degree(GElement()), std::invalid_argument);
}

TEST_CASE("canonicalize is the identity on constructed elements") {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    GElement a = framed::testing::random_g_element(rng, 4, 3);
    CHECK(canonicalize(a) == a);
  }
  for (std::uint32_t d = 1; d <= 4; ++d)
    for (Mono m : basis_monomials(2, d))
      CHECK(canonicalize(GElement(m)) == GElement(m));
}

TEST_CASE("scaling and zero pruning") {
  GElement x(X), y(Y);
  GElement e = Scalar(2) * x + Scalar(3) * y;
  e += Scalar(-2) * x;
  CHECK(e == Scalar(3) * y);
  CHECK(e.size() == 1);
  e *= Scalar(0);
  CHECK(e.is_zero());
  GElement half(X, Scalar(1) / Scalar(2));
  CHECK(half + half == x);
}

#pragma once

#include <cstdint>
#include <vector>

#include "framed/g_element.hpp"
#include "framed/monomial.hpp"
#include "framed/scalar.hpp"

namespace framed::testing {

// Deterministic seedable generator for property tests (splitmix64).
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

// Nonzero numerators keep most sampled elements nonzero; denominators in
// {1,2,3,5} exercise non-integer arithmetic.
inline Scalar random_scalar(Rng& rng) {
  static const int dens[] = {1, 1, 2, 3, 5};
  std::int64_t num = static_cast<std::int64_t>(rng.below(19)) - 9;
  if (num == 0) num = 1;
  return Scalar(num) / Scalar(dens[rng.below(5)]);
}

// Homogeneous element of exactly the given degree, built through the public
// constructors so the result is canonical by construction.
inline GElement random_homogeneous(Rng& rng, std::uint32_t degree, std::uint32_t n_gens) {
  if (degree == 1) return GElement(gen_mono(static_cast<std::uint32_t>(rng.below(n_gens))));
  std::uint32_t da = 1 + static_cast<std::uint32_t>(rng.below(degree - 1));
  GElement left = random_homogeneous(rng, da, n_gens);
  GElement right = random_homogeneous(rng, degree - da, n_gens);
  return rng.below(2) ? diamond(left, right) : bracket(left, right);
}

// Small random combination with degrees in [1, max_degree].
inline GElement random_g_element(Rng& rng, std::uint32_t max_degree, std::uint32_t n_gens) {
  GElement out;
  std::uint64_t parts = 1 + rng.below(3);
  for (std::uint64_t i = 0; i < parts; ++i) {
    std::uint32_t d = 1 + static_cast<std::uint32_t>(rng.below(max_degree));
    GElement h = random_homogeneous(rng, d, n_gens);
    h *= random_scalar(rng);
    out += h;
  }
  return out;
}

} // namespace framed::testing

#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "framed/monomial.hpp"
#include "framed/tensor.hpp"

namespace framed {

// All basis monomials of exactly the given degree over generators 0..n_gens-1,
// sorted by monomial_order. Memoized; the returned reference stays valid for
// the session.
const std::vector<Mono>& basis_monomials(std::uint32_t n_gens, std::uint32_t degree);

// All tensor words over basis-monomial letters with the given total degree
// (degree 0 = just the empty word). Memoized as above.
const std::vector<TensorWord>& basis_words(std::uint32_t n_gens, std::uint32_t degree);

// All normalized ideal triples (prefix, x, y), x < y, with basis-monomial
// letters and the given total degree (prefix degree + deg x + deg y). Memoized.
const std::vector<std::tuple<TensorWord, Mono, Mono>>& j_triples(std::uint32_t n_gens,
                                                                 std::uint32_t degree);

// All generator-letter words of exactly the given length (n_gens^length).
std::vector<TensorWord> generator_words(std::uint32_t n_gens, std::uint32_t length);

} // namespace framed

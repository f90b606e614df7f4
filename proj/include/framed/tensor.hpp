#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "framed/g_element.hpp"
#include "framed/monomial.hpp"
#include "framed/scalar.hpp"

namespace framed {

// Tensor word over basis monomials; empty = unit.
using TensorWord = std::vector<Mono>;

std::uint32_t word_total_degree(const TensorWord& w);

// Canonical word order used both for storage and display: total degree, then
// longer words first within a degree (so a word precedes its contractions),
// then letters lexicographically.
struct WordLess {
  bool operator()(const TensorWord& a, const TensorWord& b) const;
};

// Element of the tensor algebra: finite rational combination of words.
class TElement {
public:
  using TermMap = std::map<TensorWord, Scalar, WordLess>;

  TElement() = default;
  explicit TElement(TensorWord w) { terms_.emplace(std::move(w), Scalar(1)); }
  TElement(TensorWord w, Scalar c) {
    if (c != 0) terms_.emplace(std::move(w), std::move(c));
  }

  static TElement unit() { return TElement(TensorWord{}); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const TensorWord& w, const Scalar& c);

  TElement& operator+=(const TElement& o);
  TElement& operator-=(const TElement& o);
  TElement& operator*=(const Scalar& c);

  friend TElement operator+(TElement a, const TElement& b) { return a += b; }
  friend TElement operator-(TElement a, const TElement& b) { return a -= b; }
  friend TElement operator*(const Scalar& c, TElement a) { return a *= c; }
  TElement operator-() const;

  bool operator==(const TElement& o) const { return terms_ == o.terms_; }

private:
  TermMap terms_;
};

// Embed an algebra element as a combination of length-1 words.
TElement from_g(const GElement& a);

// Inverse of from_g where it exists: every word must be a single letter
// (zero maps to zero); nullopt if any unit or longer word is present.
std::optional<GElement> try_to_g(const TElement& e);

TensorWord concat_word(const TensorWord& a, const TensorWord& b);
TElement concat(const TElement& u, const TElement& v);

// One order-preserving two-block split of a word (Sweedler component pair).
struct SplitPair {
  TensorWord left;
  TensorWord right;
};

// All 2^len splits; enumeration order: subset bitmask ascending with bit k
// sending letter k to the left component.
std::vector<SplitPair> coproduct_splits(const TensorWord& w);

// The derivation nabla_x extended linearly in x: on a letter y it is x<>y, on
// words it applies the Leibniz rule, and it kills the unit.
TElement nabla(const GElement& x, const TElement& u);

// The homomorphism u -> nabla(u): a word x_1..x_k acts as the composition
// nabla_{x_1} o ... o nabla_{x_k}; the unit acts as the identity.
TElement nabla_hom(const TElement& u, const TElement& target);

// One summand coef * prefix (x(x)y - y(x)x) of the left ideal J; x < y always.
struct JTriple {
  Scalar coef;
  TensorWord prefix;
  Mono x;
  Mono y;
};

// Element of the left ideal J, kept as normalized triples (like triples are
// combined, zero coefficients dropped).
class JElement {
public:
  JElement() = default;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::vector<JTriple> triples() const;

  // Normalizes: x == y is dropped, x > y swaps with negated coefficient.
  void add_triple(const Scalar& c, const TensorWord& prefix, Mono x, Mono y);

  JElement& operator+=(const JElement& o);
  JElement& operator-=(const JElement& o);
  JElement& operator*=(const Scalar& c);
  friend JElement operator+(JElement a, const JElement& b) { return a += b; }
  friend JElement operator-(JElement a, const JElement& b) { return a -= b; }
  JElement operator-() const;
  bool operator==(const JElement& o) const { return terms_ == o.terms_; }

private:
  struct KeyLess {
    bool operator()(const std::tuple<TensorWord, Mono, Mono>& a,
                    const std::tuple<TensorWord, Mono, Mono>& b) const;
  };
  std::map<std::tuple<TensorWord, Mono, Mono>, Scalar, KeyLess> terms_;
};

// Bilinear map (x, y) -> x(x)y - y(x)x with empty prefix.
JElement make_lambda(const GElement& x, const GElement& y);

// Expand triples into plain tensor words: prefix(x)x(x)y - prefix(x)y(x)x.
TElement j_embed(const JElement& Q);

// nabla_z on a triple (u,x,y): (nabla_z u, x, y) + (u, z<>x, y) + (u, x, z<>y);
// satisfies j_embed(nabla_on_j(z, Q)) = nabla(z, j_embed(Q)).
JElement nabla_on_j(const GElement& z, const JElement& Q);

// Prepend a word to every prefix (left multiplication by a word inside J).
JElement prepend_prefix(const TensorWord& u, const JElement& Q);

} // namespace framed

#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "framed/monomial.hpp"
#include "framed/scalar.hpp"

namespace framed {

// Finite rational linear combination of basis monomials. The map keeps terms
// sorted by monomial_order and never stores a zero coefficient.
class GElement {
public:
  using TermMap = std::map<Mono, Scalar, MonoLess>;

  GElement() = default;
  explicit GElement(Mono m) { terms_.emplace(m, Scalar(1)); }
  GElement(Mono m, Scalar c) {
    if (c != 0) terms_.emplace(m, std::move(c));
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(Mono m, const Scalar& c);

  GElement& operator+=(const GElement& o);
  GElement& operator-=(const GElement& o);
  GElement& operator*=(const Scalar& c);

  friend GElement operator+(GElement a, const GElement& b) { return a += b; }
  friend GElement operator-(GElement a, const GElement& b) { return a -= b; }
  friend GElement operator*(const Scalar& c, GElement a) { return a *= c; }
  GElement operator-() const;

  bool operator==(const GElement& o) const { return terms_ == o.terms_; }

private:
  TermMap terms_;
};

// Free bilinear product: on basis monomials it forms the Diamond node.
GElement diamond(const GElement& a, const GElement& b);
GElement diamond_mono_ge(Mono a, Mono b);

// Lie bracket straightened onto the Hall basis.
GElement bracket(const GElement& a, const GElement& b);
GElement bracket_mono(Mono a, Mono b);

// Degree if every term has the same gdegree, nullopt if mixed.
// Throws std::invalid_argument on the zero element (no degree defined).
std::optional<std::uint32_t> g_degree(const GElement& e);

// Rebuild an element bottom-up through diamond()/bracket(); fixed point of
// the straightening rules (useful to validate externally constructed terms).
GElement canonicalize(const GElement& e);

} // namespace framed

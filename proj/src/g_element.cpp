#include "framed/g_element.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace framed {

void GElement::add_term(Mono m, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GElement& GElement::operator+=(const GElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GElement& GElement::operator-=(const GElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GElement& GElement::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

GElement GElement::operator-() const {
  GElement out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

GElement diamond_mono_ge(Mono a, Mono b) {
  return GElement(diamond_mono(a, b));
}

GElement diamond(const GElement& a, const GElement& b) {
  GElement out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      out.add_term(diamond_mono(ma, mb), ca * cb);
  return out;
}

namespace {

struct PairHash {
  std::size_t operator()(const std::uint64_t& k) const {
    std::uint64_t z = k + 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return static_cast<std::size_t>(z ^ (z >> 31));
  }
};

std::mutex bracket_mu;
std::unordered_map<std::uint64_t, GElement, PairHash> bracket_memo;

} // namespace

// Straighten [a, b] onto the Hall basis:
//   [m, m]          = 0
//   [a, b], a > b   = -[b, a]
//   [a, [c, d]], c > a = [[a, c], d] + [c, [a, d]]   (Jacobi)
// anything else is already a valid Hall node. Recursion strictly decreases
// a degree-compatible well-order, so it terminates; results are memoized.
GElement bracket_mono(Mono a, Mono b) {
  auto cmp = monomial_order(a, b);
  if (cmp == 0) return GElement();
  if (cmp > 0) return -bracket_mono(b, a);
  std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
  {
    std::lock_guard<std::mutex> lock(bracket_mu);
    auto it = bracket_memo.find(key);
    if (it != bracket_memo.end()) return it->second;
  }
  GElement out;
  if (mono_kind(b) == MonoKind::Bracket && monomial_order(mono_left(b), a) > 0) {
    Mono c = mono_left(b), d = mono_right(b);
    out = bracket(bracket_mono(a, c), GElement(d)) +
          bracket(GElement(c), bracket_mono(a, d));
  } else {
    out = GElement(bracket_node(a, b));
  }
  std::lock_guard<std::mutex> lock(bracket_mu);
  bracket_memo.emplace(key, out);
  return out;
}

GElement bracket(const GElement& a, const GElement& b) {
  GElement out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      GElement part = bracket_mono(ma, mb);
      part *= ca * cb;
      out += part;
    }
  return out;
}

std::optional<std::uint32_t> g_degree(const GElement& e) {
  if (e.is_zero())
    throw std::invalid_argument("g_degree: zero element has no degree");
  std::optional<std::uint32_t> deg;
  for (const auto& [m, c] : e.terms()) {
    std::uint32_t d = gdegree(m);
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg;
}

namespace {

GElement canonicalize_mono(Mono m) {
  switch (mono_kind(m)) {
    case MonoKind::Gen:
      return GElement(m);
    case MonoKind::Diamond:
      return diamond(canonicalize_mono(mono_left(m)), canonicalize_mono(mono_right(m)));
    case MonoKind::Bracket:
      return bracket(canonicalize_mono(mono_left(m)), canonicalize_mono(mono_right(m)));
  }
  throw std::logic_error("canonicalize: bad monomial kind");
}

} // namespace

GElement canonicalize(const GElement& e) {
  GElement out;
  for (const auto& [m, c] : e.terms()) {
    GElement part = canonicalize_mono(m);
    part *= c;
    out += part;
  }
  return out;
}

} // namespace framed

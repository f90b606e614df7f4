#pragma once

#include <compare>
#include <cstdint>

namespace framed {

struct GeneratorSymbol {
  std::uint32_t index;
  auto operator<=>(const GeneratorSymbol&) const = default;
};

// Interned handle to a basis monomial of the free framed Lie algebra. Handles
// are session-global: equal ids <=> structurally equal monomials.
using Mono = std::uint32_t;

enum class MonoKind { Gen = 0, Diamond = 1, Bracket = 2 };

Mono gen_mono(GeneratorSymbol g);
Mono gen_mono(std::uint32_t index);
Mono diamond_mono(Mono a, Mono b);
// Forms the raw Bracket node; callers must have established hall_valid(a, b).
Mono bracket_node(Mono a, Mono b);

MonoKind mono_kind(Mono m);
Mono mono_left(Mono m);
Mono mono_right(Mono m);
std::uint32_t mono_gen_index(Mono m);
std::uint32_t gdegree(Mono m);

// Total order: degree first, then Gen < Diamond < Bracket, then children
// lexicographically, then generator index. Deterministic across runs.
std::strong_ordering monomial_order(Mono a, Mono b);

inline bool mono_less(Mono a, Mono b) { return monomial_order(a, b) < 0; }

struct MonoLess {
  bool operator()(Mono a, Mono b) const { return mono_less(a, b); }
};

// Hall criterion for a Bracket node: a < b, and if b = Bracket(c, d) then
// c <= a.
bool hall_valid(Mono a, Mono b);

} // namespace framed

#pragma once

#include <cstdint>

#include "framed/tensor.hpp"

namespace framed {

// K(1) = 1, K(x (x) u) = x (x) K(u) - K(nabla_x u). Linear; preserves total
// degree; the top-tensor-length part of K(u) is u itself.
TElement K_map(const TElement& u);

// Inverse of K_map, via the terminating Neumann series of the strictly
// length-lowering part of K.
TElement K_inverse(const TElement& s);

// t on a triple: t(1,x,y) = x<>y - y<>x - [x,y];
// t(z(x)u, x, y) = z <> t(u,x,y) - t(nabla_z (u,x,y)).
GElement t_map(const JElement& Q);

// r(Q) acting on v as a derivation; on a letter:
// r(1,x,y) m = x<>(y<>m) - y<>(x<>m) - [x,y]<>m;
// r(z(x)u, x, y) m = z<>(r(u,x,y) m) - r(u,x,y)(z<>m) - r(nabla_z (u,x,y)) m.
TElement r_apply(const JElement& Q, const TElement& v);

// e(1,x,y) = x(x)y - y(x)x - [x,y];
// e(z(x)u,x,y) = z (x) e' - e' (x) z - e(nabla_z (u,x,y)).
TElement e_map(const JElement& Q);

// rho(Q) v = sum over triples (u,x,y) and splits (u1,u2) of u of
//   u1 (x) ( t(u2,x,y) (x) v + r(u2,x,y) v ).
TElement rho_apply(const JElement& Q, const TElement& v);

// kappa(Q) v = sum over triples and splits of e(u1,x,y) (x) K(u2 (x) v).
TElement kappa_apply(const JElement& Q, const TElement& v);

// Image under the projection to the enveloping algebra, as a canonical
// normal form: every adjacent out-of-order pair a(x)b (a > b) rewrites to
// b(x)a + [a,b] until all words are nondecreasing.
struct PBWNormalForm {
  TElement value;
};

// Deterministic strategy: leftmost inversion of each word first.
PBWNormalForm pbw_normal_form(const TElement& u);

// Same rewrite system with a seeded random choice of which inversion to
// reduce next; used to probe confluence.
PBWNormalForm pbw_normal_form_randomized(const TElement& u, std::uint64_t seed);

// The main commutation check: with Q the u-prefixed version of omega,
// lhs = K( j_embed(Q) (x) v + rho(Q) v ); is_zero reports whether its PBW
// normal form vanishes.
struct TheoremResult {
  TElement lhs;
  bool is_zero;
};

TheoremResult theorem_check(const TElement& u, const JElement& omega,
                            const TElement& v);

// Drop all internal memo tables (K, t, r, e). Purely a memory control; results
// are unaffected.
void clear_map_caches();

} // namespace framed

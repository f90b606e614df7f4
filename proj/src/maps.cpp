#include "framed/maps.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <utility>
#include <vector>

namespace framed {
namespace {

using TripleKey = std::tuple<TensorWord, Mono, Mono>;
using LetterKey = std::tuple<TensorWord, Mono, Mono, Mono>;

std::mutex cache_mu;
std::map<TensorWord, TElement> k_cache;
std::map<TripleKey, GElement> t_cache;
std::map<TripleKey, TElement> e_cache;
std::map<LetterKey, GElement> r_cache;

template <typename Map, typename Key>
bool cache_find(Map& map, const Key& key, typename Map::mapped_type& out) {
  std::lock_guard<std::mutex> lock(cache_mu);
  auto it = map.find(key);
  if (it == map.end()) return false;
  out = it->second;
  return true;
}

template <typename Map, typename Key, typename Value>
void cache_store(Map& map, const Key& key, const Value& value) {
  std::lock_guard<std::mutex> lock(cache_mu);
  map.try_emplace(key, value);
}

TElement k_word(const TensorWord& w);

TElement k_of(const TElement& u) {
  TElement out;
  for (const auto& [w, c] : u.terms()) {
    TElement part = k_word(w);
    part *= c;
    out += part;
  }
  return out;
}

TElement k_word(const TensorWord& w) {
  if (w.empty()) return TElement::unit();
  TElement cached;
  if (cache_find(k_cache, w, cached)) return cached;
  Mono head = w.front();
  TensorWord rest(w.begin() + 1, w.end());
  TElement k_rest = k_word(rest);
  TElement out = concat(TElement(TensorWord{head}), k_rest) -
                 k_of(nabla(GElement(head), TElement(rest)));
  cache_store(k_cache, w, out);
  return out;
}

GElement t_triple(const TensorWord& prefix, Mono x, Mono y);

GElement t_of(const JElement& Q) {
  GElement out;
  for (const JTriple& t : Q.triples()) {
    GElement part = t_triple(t.prefix, t.x, t.y);
    part *= t.coef;
    out += part;
  }
  return out;
}

GElement t_triple(const TensorWord& prefix, Mono x, Mono y) {
  if (prefix.empty())
    return diamond_mono_ge(x, y) - diamond_mono_ge(y, x) - bracket_mono(x, y);
  TripleKey key{prefix, x, y};
  GElement cached;
  if (cache_find(t_cache, key, cached)) return cached;
  Mono z = prefix.front();
  TensorWord rest(prefix.begin() + 1, prefix.end());
  JElement inner;
  inner.add_triple(Scalar(1), rest, x, y);
  GElement out = diamond(GElement(z), t_triple(rest, x, y)) -
                 t_of(nabla_on_j(GElement(z), inner));
  cache_store(t_cache, key, out);
  return out;
}

GElement r_letter(const TensorWord& prefix, Mono x, Mono y, Mono m);

GElement r_letter_of(const JElement& Q, Mono m) {
  GElement out;
  for (const JTriple& t : Q.triples()) {
    GElement part = r_letter(t.prefix, t.x, t.y, m);
    part *= t.coef;
    out += part;
  }
  return out;
}

GElement r_letter(const TensorWord& prefix, Mono x, Mono y, Mono m) {
  if (prefix.empty()) {
    return diamond_mono_ge(x, diamond_mono(y, m)) -
           diamond_mono_ge(y, diamond_mono(x, m)) -
           diamond(bracket_mono(x, y), GElement(m));
  }
  LetterKey key{prefix, x, y, m};
  GElement cached;
  if (cache_find(r_cache, key, cached)) return cached;
  Mono z = prefix.front();
  TensorWord rest(prefix.begin() + 1, prefix.end());
  JElement inner;
  inner.add_triple(Scalar(1), rest, x, y);
  GElement out = diamond(GElement(z), r_letter(rest, x, y, m)) -
                 r_letter(rest, x, y, diamond_mono(z, m)) -
                 r_letter_of(nabla_on_j(GElement(z), inner), m);
  cache_store(r_cache, key, out);
  return out;
}

TElement e_triple(const TensorWord& prefix, Mono x, Mono y);

TElement e_of(const JElement& Q) {
  TElement out;
  for (const JTriple& t : Q.triples()) {
    TElement part = e_triple(t.prefix, t.x, t.y);
    part *= t.coef;
    out += part;
  }
  return out;
}

TElement e_triple(const TensorWord& prefix, Mono x, Mono y) {
  if (prefix.empty()) {
    TElement out = TElement(TensorWord{x, y}) - TElement(TensorWord{y, x});
    out -= from_g(bracket_mono(x, y));
    return out;
  }
  TripleKey key{prefix, x, y};
  TElement cached;
  if (cache_find(e_cache, key, cached)) return cached;
  Mono z = prefix.front();
  TensorWord rest(prefix.begin() + 1, prefix.end());
  JElement inner;
  inner.add_triple(Scalar(1), rest, x, y);
  TElement e_rest = e_triple(rest, x, y);
  TElement zw(TensorWord{z});
  TElement out = concat(zw, e_rest) - concat(e_rest, zw) -
                 e_of(nabla_on_j(GElement(z), inner));
  cache_store(e_cache, key, out);
  return out;
}

} // namespace

TElement K_map(const TElement& u) { return k_of(u); }

TElement K_inverse(const TElement& s) {
  // K = Id + M with M strictly lowering the maximal word length, so
  // (Id + M)^-1 = sum of (-M)^k terminates.
  TElement out = s;
  TElement term = s;
  while (!term.is_zero()) {
    term = -(K_map(term) - term);
    out += term;
  }
  return out;
}

GElement t_map(const JElement& Q) { return t_of(Q); }

TElement r_apply(const JElement& Q, const TElement& v) {
  TElement out;
  for (const JTriple& t : Q.triples())
    for (const auto& [w, c] : v.terms()) {
      Scalar coef = t.coef * c;
      for (std::size_t i = 0; i < w.size(); ++i) {
        GElement img = r_letter(t.prefix, t.x, t.y, w[i]);
        for (const auto& [g, gc] : img.terms()) {
          TensorWord nw = w;
          nw[i] = g;
          out.add_term(nw, coef * gc);
        }
      }
    }
  return out;
}

TElement e_map(const JElement& Q) { return e_of(Q); }

TElement rho_apply(const JElement& Q, const TElement& v) {
  TElement out;
  for (const JTriple& t : Q.triples()) {
    TElement part;
    for (const SplitPair& s : coproduct_splits(t.prefix)) {
      JElement sub;
      sub.add_triple(Scalar(1), s.right, t.x, t.y);
      TElement inner = concat(from_g(t_map(sub)), v) + r_apply(sub, v);
      part += concat(TElement(s.left), inner);
    }
    part *= t.coef;
    out += part;
  }
  return out;
}

TElement kappa_apply(const JElement& Q, const TElement& v) {
  TElement out;
  for (const JTriple& t : Q.triples()) {
    TElement part;
    for (const SplitPair& s : coproduct_splits(t.prefix)) {
      JElement left;
      left.add_triple(Scalar(1), s.left, t.x, t.y);
      part += concat(e_map(left), K_map(concat(TElement(s.right), v)));
    }
    part *= t.coef;
    out += part;
  }
  return out;
}

namespace {

// One straightening step at position i of w: swap plus bracket splice.
void push_step(TElement& pending, const TensorWord& w, std::size_t i,
               const Scalar& c) {
  TensorWord swapped = w;
  std::swap(swapped[i], swapped[i + 1]);
  pending.add_term(swapped, c);
  GElement br = bracket_mono(w[i], w[i + 1]);
  for (const auto& [g, gc] : br.terms()) {
    TensorWord spliced;
    spliced.reserve(w.size() - 1);
    spliced.insert(spliced.end(), w.begin(), w.begin() + i);
    spliced.push_back(g);
    spliced.insert(spliced.end(), w.begin() + i + 2, w.end());
    pending.add_term(spliced, c * gc);
  }
}

std::vector<std::size_t> inversions(const TensorWord& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (monomial_order(w[i], w[i + 1]) > 0) out.push_back(i);
  return out;
}

} // namespace

PBWNormalForm pbw_normal_form(const TElement& u) {
  TElement pending = u;
  TElement done;
  while (!pending.is_zero()) {
    auto it = pending.terms().begin();
    TensorWord w = it->first;
    Scalar c = it->second;
    pending.add_term(w, -c);
    auto inv = inversions(w);
    if (inv.empty()) {
      done.add_term(w, c);
    } else {
      push_step(pending, w, inv.front(), c);
    }
  }
  return PBWNormalForm{std::move(done)};
}

PBWNormalForm pbw_normal_form_randomized(const TElement& u, std::uint64_t seed) {
  std::uint64_t state = seed;
  auto next = [&state]() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  TElement pending = u;
  TElement done;
  while (!pending.is_zero()) {
    // pick a random stored term, then a random inversion inside it
    std::size_t pick = next() % pending.size();
    auto it = pending.terms().begin();
    std::advance(it, pick);
    TensorWord w = it->first;
    Scalar c = it->second;
    pending.add_term(w, -c);
    auto inv = inversions(w);
    if (inv.empty()) {
      done.add_term(w, c);
    } else {
      push_step(pending, w, inv[next() % inv.size()], c);
    }
  }
  return PBWNormalForm{std::move(done)};
}

TheoremResult theorem_check(const TElement& u, const JElement& omega,
                            const TElement& v) {
  JElement Q;
  for (const auto& [w, c] : u.terms()) {
    JElement part = prepend_prefix(w, omega);
    part *= c;
    Q += part;
  }
  TElement lhs = K_map(concat(j_embed(Q), v) + rho_apply(Q, v));
  bool zero = pbw_normal_form(lhs).value.is_zero();
  return TheoremResult{std::move(lhs), zero};
}

void clear_map_caches() {
  std::lock_guard<std::mutex> lock(cache_mu);
  k_cache.clear();
  t_cache.clear();
  e_cache.clear();
  r_cache.clear();
}

} // namespace framed

#include "framed/tensor.hpp"

#include <algorithm>
#include <utility>

namespace framed {

std::uint32_t word_total_degree(const TensorWord& w) {
  std::uint32_t d = 0;
  for (Mono m : w) d += gdegree(m);
  return d;
}

bool WordLess::operator()(const TensorWord& a, const TensorWord& b) const {
  std::uint32_t da = word_total_degree(a), db = word_total_degree(b);
  if (da != db) return da < db;
  if (a.size() != b.size()) return a.size() > b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      mono_less);
}

void TElement::add_term(const TensorWord& w, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TElement& TElement::operator+=(const TElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

TElement& TElement::operator-=(const TElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

TElement& TElement::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

TElement TElement::operator-() const {
  TElement out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

TElement from_g(const GElement& a) {
  TElement out;
  for (const auto& [m, c] : a.terms()) out.add_term(TensorWord{m}, c);
  return out;
}

std::optional<GElement> try_to_g(const TElement& e) {
  GElement out;
  for (const auto& [w, c] : e.terms()) {
    if (w.size() != 1) return std::nullopt;
    out.add_term(w[0], c);
  }
  return out;
}

TensorWord concat_word(const TensorWord& a, const TensorWord& b) {
  TensorWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

TElement concat(const TElement& u, const TElement& v) {
  TElement out;
  for (const auto& [wu, cu] : u.terms())
    for (const auto& [wv, cv] : v.terms())
      out.add_term(concat_word(wu, wv), cu * cv);
  return out;
}

std::vector<SplitPair> coproduct_splits(const TensorWord& w) {
  std::vector<SplitPair> out;
  std::size_t n = w.size();
  out.reserve(std::size_t(1) << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    SplitPair p;
    for (std::size_t k = 0; k < n; ++k)
      ((mask >> k) & 1 ? p.left : p.right).push_back(w[k]);
    out.push_back(std::move(p));
  }
  return out;
}

TElement nabla(const GElement& x, const TElement& u) {
  TElement out;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [w, cw] : u.terms()) {
      Scalar c = cx * cw;
      for (std::size_t i = 0; i < w.size(); ++i) {
        TensorWord nw = w;
        nw[i] = diamond_mono(mx, w[i]);
        out.add_term(nw, c);
      }
    }
  return out;
}

TElement nabla_hom(const TElement& u, const TElement& target) {
  TElement out;
  for (const auto& [w, c] : u.terms()) {
    TElement acc = target;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      acc = nabla(GElement(*it), acc);
    acc *= c;
    out += acc;
  }
  return out;
}

bool JElement::KeyLess::operator()(const std::tuple<TensorWord, Mono, Mono>& a,
                                   const std::tuple<TensorWord, Mono, Mono>& b) const {
  const auto& [wa, xa, ya] = a;
  const auto& [wb, xb, yb] = b;
  WordLess wl;
  if (wl(wa, wb)) return true;
  if (wl(wb, wa)) return false;
  if (auto c = monomial_order(xa, xb); c != 0) return c < 0;
  return mono_less(ya, yb);
}

std::vector<JTriple> JElement::triples() const {
  std::vector<JTriple> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) {
    const auto& [prefix, x, y] = key;
    out.push_back(JTriple{c, prefix, x, y});
  }
  return out;
}

void JElement::add_triple(const Scalar& c, const TensorWord& prefix, Mono x, Mono y) {
  if (c == 0) return;
  auto cmp = monomial_order(x, y);
  if (cmp == 0) return;
  Scalar eff = c;
  if (cmp > 0) {
    std::swap(x, y);
    eff = -eff;
  }
  auto key = std::make_tuple(prefix, x, y);
  auto [it, inserted] = terms_.try_emplace(std::move(key), eff);
  if (!inserted) {
    it->second += eff;
    if (it->second == 0) terms_.erase(it);
  }
}

JElement& JElement::operator+=(const JElement& o) {
  for (const auto& [key, c] : o.terms_) {
    const auto& [prefix, x, y] = key;
    add_triple(c, prefix, x, y);
  }
  return *this;
}

JElement& JElement::operator-=(const JElement& o) {
  for (const auto& [key, c] : o.terms_) {
    const auto& [prefix, x, y] = key;
    add_triple(-c, prefix, x, y);
  }
  return *this;
}

JElement& JElement::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

JElement JElement::operator-() const {
  JElement out;
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
  return out;
}

JElement make_lambda(const GElement& x, const GElement& y) {
  JElement out;
  TensorWord empty;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms())
      out.add_triple(cx * cy, empty, mx, my);
  return out;
}

TElement j_embed(const JElement& Q) {
  TElement out;
  for (const JTriple& t : Q.triples()) {
    TensorWord xy = t.prefix;
    xy.push_back(t.x);
    xy.push_back(t.y);
    TensorWord yx = t.prefix;
    yx.push_back(t.y);
    yx.push_back(t.x);
    out.add_term(xy, t.coef);
    out.add_term(yx, -t.coef);
  }
  return out;
}

JElement nabla_on_j(const GElement& z, const JElement& Q) {
  JElement out;
  for (const JTriple& t : Q.triples())
    for (const auto& [mz, cz] : z.terms()) {
      Scalar c = cz * t.coef;
      for (std::size_t i = 0; i < t.prefix.size(); ++i) {
        TensorWord nw = t.prefix;
        nw[i] = diamond_mono(mz, t.prefix[i]);
        out.add_triple(c, nw, t.x, t.y);
      }
      out.add_triple(c, t.prefix, diamond_mono(mz, t.x), t.y);
      out.add_triple(c, t.prefix, t.x, diamond_mono(mz, t.y));
    }
  return out;
}

JElement prepend_prefix(const TensorWord& u, const JElement& Q) {
  JElement out;
  for (const JTriple& t : Q.triples())
    out.add_triple(t.coef, concat_word(u, t.prefix), t.x, t.y);
  return out;
}

} // namespace framed

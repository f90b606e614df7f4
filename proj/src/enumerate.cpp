#include "framed/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace framed {
namespace {

std::mutex enum_mu;
std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Mono>> basis_memo;
std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<TensorWord>> word_memo;
std::map<std::pair<std::uint32_t, std::uint32_t>,
         std::vector<std::tuple<TensorWord, Mono, Mono>>>
    triple_memo;

std::vector<Mono> build_basis(std::uint32_t n_gens, std::uint32_t degree) {
  std::vector<Mono> out;
  if (degree == 0) return out;
  if (degree == 1) {
    for (std::uint32_t i = 0; i < n_gens; ++i) out.push_back(gen_mono(i));
    return out;
  }
  for (std::uint32_t da = 1; da < degree; ++da) {
    const auto& left = basis_monomials(n_gens, da);
    const auto& right = basis_monomials(n_gens, degree - da);
    for (Mono a : left)
      for (Mono b : right) {
        out.push_back(diamond_mono(a, b));
        if (hall_valid(a, b)) out.push_back(bracket_node(a, b));
      }
  }
  std::sort(out.begin(), out.end(), mono_less);
  return out;
}

std::vector<TensorWord> build_words(std::uint32_t n_gens, std::uint32_t degree) {
  std::vector<TensorWord> out;
  if (degree == 0) {
    out.push_back(TensorWord{});
    return out;
  }
  for (std::uint32_t head = 1; head <= degree; ++head) {
    const auto& letters = basis_monomials(n_gens, head);
    const auto& tails = basis_words(n_gens, degree - head);
    for (Mono m : letters)
      for (const TensorWord& tail : tails) {
        TensorWord w;
        w.reserve(tail.size() + 1);
        w.push_back(m);
        w.insert(w.end(), tail.begin(), tail.end());
        out.push_back(std::move(w));
      }
  }
  return out;
}

std::vector<std::tuple<TensorWord, Mono, Mono>> build_triples(std::uint32_t n_gens,
                                                              std::uint32_t degree) {
  std::vector<std::tuple<TensorWord, Mono, Mono>> out;
  if (degree < 2) return out;
  for (std::uint32_t dp = 0; dp + 2 <= degree; ++dp) {
    const auto& prefixes = basis_words(n_gens, dp);
    std::uint32_t ds = degree - dp;
    for (std::uint32_t dx = 1; dx < ds; ++dx) {
      std::uint32_t dy = ds - dx;
      if (dx > dy) break; // x < y forces deg x <= deg y
      const auto& xs = basis_monomials(n_gens, dx);
      const auto& ys = basis_monomials(n_gens, dy);
      for (const TensorWord& p : prefixes)
        for (Mono x : xs)
          for (Mono y : ys) {
            if (dx == dy && !(monomial_order(x, y) < 0)) continue;
            out.emplace_back(p, x, y);
          }
    }
  }
  return out;
}

template <typename Map, typename Builder>
const typename Map::mapped_type& memoized(Map& map, std::uint32_t n_gens,
                                          std::uint32_t degree, Builder build) {
  {
    std::lock_guard<std::mutex> lock(enum_mu);
    auto it = map.find({n_gens, degree});
    if (it != map.end()) return it->second;
  }
  auto built = build(n_gens, degree);
  std::lock_guard<std::mutex> lock(enum_mu);
  auto [it, ignored] = map.try_emplace({n_gens, degree}, std::move(built));
  return it->second;
}

} // namespace

const std::vector<Mono>& basis_monomials(std::uint32_t n_gens, std::uint32_t degree) {
  return memoized(basis_memo, n_gens, degree, build_basis);
}

const std::vector<TensorWord>& basis_words(std::uint32_t n_gens, std::uint32_t degree) {
  return memoized(word_memo, n_gens, degree, build_words);
}

const std::vector<std::tuple<TensorWord, Mono, Mono>>& j_triples(std::uint32_t n_gens,
                                                                 std::uint32_t degree) {
  return memoized(triple_memo, n_gens, degree, build_triples);
}

std::vector<TensorWord> generator_words(std::uint32_t n_gens, std::uint32_t length) {
  std::vector<TensorWord> out;
  if (length == 0) {
    out.push_back(TensorWord{});
    return out;
  }
  for (const TensorWord& tail : generator_words(n_gens, length - 1))
    for (std::uint32_t g = 0; g < n_gens; ++g) {
      TensorWord w;
      w.reserve(length);
      w.push_back(gen_mono(g));
      w.insert(w.end(), tail.begin(), tail.end());
      out.push_back(std::move(w));
    }
  return out;
}

} // namespace framed

#include "framed/monomial.hpp"

#include <atomic>
#include <cassert>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace framed {
namespace {

struct MonoData {
  MonoKind kind;
  std::uint32_t a; // left child, or generator index
  std::uint32_t b; // right child, unused for Gen
  std::uint32_t degree;
};

struct KeyHash {
  std::size_t operator()(const std::uint64_t& k) const {
    // splitmix64 finisher
    std::uint64_t z = k + 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return static_cast<std::size_t>(z ^ (z >> 31));
  }
};

constexpr unsigned kChunkBits = 16;
constexpr std::size_t kChunkSize = std::size_t(1) << kChunkBits;
constexpr std::size_t kMaxChunks = std::size_t(1) << 15;

// Session-global intern table. Entries are immutable once published, so reads
// go through the chunk directory without locking; inserts take the mutex and
// are idempotent.
struct Interner {
  std::mutex mu;
  std::vector<std::unique_ptr<MonoData[]>> owned;
  std::atomic<MonoData*> chunks[kMaxChunks] = {};
  std::uint32_t count = 0; // guarded by mu
  std::unordered_map<std::uint64_t, Mono, KeyHash> index[3];

  static std::uint64_t key(std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

  Mono intern(MonoKind kind, std::uint32_t a, std::uint32_t b, std::uint32_t degree) {
    std::lock_guard<std::mutex> lock(mu);
    auto& idx = index[static_cast<int>(kind)];
    auto it = idx.find(key(a, b));
    if (it != idx.end()) return it->second;
    std::size_t chunk = count >> kChunkBits;
    if (chunk >= kMaxChunks) throw std::length_error("monomial table full");
    if (chunks[chunk].load(std::memory_order_relaxed) == nullptr) {
      owned.push_back(std::make_unique<MonoData[]>(kChunkSize));
      chunks[chunk].store(owned.back().get(), std::memory_order_release);
    }
    MonoData* base = chunks[chunk].load(std::memory_order_relaxed);
    base[count & (kChunkSize - 1)] = MonoData{kind, a, b, degree};
    Mono id = count++;
    idx.emplace(key(a, b), id);
    return id;
  }

  const MonoData& get(Mono m) const {
    const MonoData* base = chunks[m >> kChunkBits].load(std::memory_order_acquire);
    return base[m & (kChunkSize - 1)];
  }
};

Interner& interner() {
  static Interner table;
  return table;
}

} // namespace

Mono gen_mono(GeneratorSymbol g) { return gen_mono(g.index); }

Mono gen_mono(std::uint32_t index) {
  return interner().intern(MonoKind::Gen, index, 0, 1);
}

Mono diamond_mono(Mono a, Mono b) {
  std::uint32_t deg = gdegree(a) + gdegree(b);
  return interner().intern(MonoKind::Diamond, a, b, deg);
}

Mono bracket_node(Mono a, Mono b) {
  assert(hall_valid(a, b));
  std::uint32_t deg = gdegree(a) + gdegree(b);
  return interner().intern(MonoKind::Bracket, a, b, deg);
}

MonoKind mono_kind(Mono m) { return interner().get(m).kind; }

Mono mono_left(Mono m) {
  const MonoData& d = interner().get(m);
  assert(d.kind != MonoKind::Gen);
  return d.a;
}

Mono mono_right(Mono m) {
  const MonoData& d = interner().get(m);
  assert(d.kind != MonoKind::Gen);
  return d.b;
}

std::uint32_t mono_gen_index(Mono m) {
  const MonoData& d = interner().get(m);
  assert(d.kind == MonoKind::Gen);
  return d.a;
}

std::uint32_t gdegree(Mono m) { return interner().get(m).degree; }

std::strong_ordering monomial_order(Mono a, Mono b) {
  if (a == b) return std::strong_ordering::equal;
  const MonoData& da = interner().get(a);
  const MonoData& db = interner().get(b);
  if (da.degree != db.degree) return da.degree <=> db.degree;
  if (da.kind != db.kind)
    return static_cast<int>(da.kind) <=> static_cast<int>(db.kind);
  if (da.kind == MonoKind::Gen) return da.a <=> db.a;
  if (auto c = monomial_order(da.a, db.a); c != 0) return c;
  return monomial_order(da.b, db.b);
}

bool hall_valid(Mono a, Mono b) {
  if (!(monomial_order(a, b) < 0)) return false;
  if (mono_kind(b) == MonoKind::Bracket && monomial_order(mono_left(b), a) > 0)
    return false;
  return true;
}

} // namespace framed

#include "framed/oracle.hpp"

#include <stdexcept>
#include <tuple>
#include <utility>

#include <json.hpp>

#include "framed/print.hpp"

namespace framed {
namespace {

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  int small() { return static_cast<int>(next() % 19) - 9; }
};

// out += c * v
void axpy(ConcreteVec& out, const Scalar& c, const ConcreteVec& v) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) out[k] += c * v[k];
}

ConcreteVec contract(const StructureTable& tbl, const std::vector<Scalar>& c,
                     const ConcreteVec& a, const ConcreteVec& b) {
  ConcreteVec out(tbl.dim, Scalar(0));
  for (int i = 0; i < tbl.dim; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < tbl.dim; ++j) {
      if (b[j] == 0) continue;
      Scalar ab = a[i] * b[j];
      for (int k = 0; k < tbl.dim; ++k) {
        const Scalar& w = c[tbl.at(i, j, k)];
        if (w != 0) out[k] += ab * w;
      }
    }
  }
  return out;
}

[[noreturn]] void table_fail(const std::string& what) {
  throw std::runtime_error("structure table: " + what);
}

} // namespace

void StructureTable::set_bracket(int i, int j, int k, const Scalar& c) {
  bracket[at(i, j, k)] = c;
  bracket[at(j, i, k)] = -c;
}

void StructureTable::set_diamond(int i, int j, int k, const Scalar& c) {
  diamond[at(i, j, k)] = c;
}

bool check_jacobi(const StructureTable& tbl) {
  int d = tbl.dim;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (tbl.bracket_c(i, j, k) != -tbl.bracket_c(j, i, k)) return false;
  // with antisymmetry in hand, strictly increasing triples suffice
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          Scalar sum(0);
          for (int m = 0; m < d; ++m)
            sum += tbl.bracket_c(i, j, m) * tbl.bracket_c(m, k, l) +
                   tbl.bracket_c(j, k, m) * tbl.bracket_c(m, i, l) +
                   tbl.bracket_c(k, i, m) * tbl.bracket_c(m, j, l);
          if (sum != 0) return false;
        }
  return true;
}

StructureTable abelian_table(int dim) { return StructureTable(dim); }

const std::map<std::string, StructureTable>& builtin_tables() {
  static const std::map<std::string, StructureTable> tables = [] {
    std::map<std::string, StructureTable> out;
    out.emplace("abelian2", abelian_table(2));
    out.emplace("abelian3", abelian_table(3));
    out.emplace("abelian4", abelian_table(4));

    StructureTable heis(3);
    heis.set_bracket(0, 1, 2, Scalar(1));
    out.emplace("heisenberg3", heis);

    StructureTable sl2(3);
    sl2.set_bracket(0, 1, 1, Scalar(2));
    sl2.set_bracket(0, 2, 2, Scalar(-2));
    sl2.set_bracket(1, 2, 0, Scalar(1));
    out.emplace("sl2", sl2);
    return out;
  }();
  return tables;
}

StructureTable random_diamond(StructureTable tbl, std::uint64_t seed) {
  SplitMix rng{seed};
  for (int i = 0; i < tbl.dim; ++i)
    for (int j = 0; j < tbl.dim; ++j)
      for (int k = 0; k < tbl.dim; ++k)
        tbl.diamond[tbl.at(i, j, k)] = Scalar(rng.small());
  return tbl;
}

StructureTable load_structure_table(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    table_fail(e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_integer())
    table_fail("expected an object with an integer 'dim'");
  int dim = doc["dim"].get<int>();
  if (dim < 1) table_fail("'dim' must be positive");

  StructureTable tbl(dim);
  auto read = [&](const char* key, bool is_bracket) {
    if (!doc.contains(key)) return;
    const auto& rows = doc[key];
    if (!rows.is_array()) table_fail(std::string("'") + key + "' must be an array");
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != 4 || !row[0].is_number_integer() ||
          !row[1].is_number_integer() || !row[2].is_number_integer() ||
          !row[3].is_string())
        table_fail(std::string("each '") + key +
                   "' entry must be [i, j, k, \"p/q\"]");
      int i = row[0].get<int>(), j = row[1].get<int>(), k = row[2].get<int>();
      if (i < 0 || i >= dim || j < 0 || j >= dim || k < 0 || k >= dim)
        table_fail("index out of range");
      Scalar c;
      try {
        c = scalar_from_string(row[3].get<std::string>());
      } catch (const std::invalid_argument& e) {
        table_fail(e.what());
      }
      if (is_bracket) {
        if (i >= j) table_fail("bracket entries must have i < j");
        tbl.set_bracket(i, j, k, c);
      } else {
        tbl.set_diamond(i, j, k, c);
      }
    }
  };
  read("bracket", true);
  read("diamond", false);
  return tbl;
}

std::string save_structure_table(const StructureTable& tbl) {
  nlohmann::json doc;
  doc["dim"] = tbl.dim;
  auto& bracket = doc["bracket"] = nlohmann::json::array();
  for (int i = 0; i < tbl.dim; ++i)
    for (int j = i + 1; j < tbl.dim; ++j)
      for (int k = 0; k < tbl.dim; ++k)
        if (tbl.bracket_c(i, j, k) != 0)
          bracket.push_back({i, j, k, scalar_to_string(tbl.bracket_c(i, j, k))});
  auto& diamond = doc["diamond"] = nlohmann::json::array();
  for (int i = 0; i < tbl.dim; ++i)
    for (int j = 0; j < tbl.dim; ++j)
      for (int k = 0; k < tbl.dim; ++k)
        if (tbl.diamond_c(i, j, k) != 0)
          diamond.push_back({i, j, k, scalar_to_string(tbl.diamond_c(i, j, k))});
  return doc.dump(2);
}

void ConcreteTensor::add_term(const CWord& w, const Scalar& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ConcreteTensor& ConcreteTensor::operator+=(const ConcreteTensor& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

ConcreteTensor& ConcreteTensor::operator-=(const ConcreteTensor& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

ConcreteTensor& ConcreteTensor::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coef] : terms_) coef *= c;
  return *this;
}

Assignment basis_assignment(std::uint32_t n_gens, int dim) {
  Assignment out;
  for (std::uint32_t g = 0; g < n_gens; ++g) {
    ConcreteVec v(dim, Scalar(0));
    v[g % dim] = Scalar(1);
    out.vectors.emplace(GeneratorSymbol{g}, std::move(v));
  }
  return out;
}

Assignment random_assignment(std::uint32_t n_gens, int dim, std::uint64_t seed) {
  SplitMix rng{seed};
  Assignment out;
  for (std::uint32_t g = 0; g < n_gens; ++g) {
    ConcreteVec v(dim, Scalar(0));
    for (int k = 0; k < dim; ++k)
      v[k] = Scalar(rng.small()) / Scalar(1 + static_cast<int>(rng.next() % 3));
    out.vectors.emplace(GeneratorSymbol{g}, std::move(v));
  }
  return out;
}

Evaluator::Evaluator(StructureTable tbl, Assignment asg)
    : tbl_(std::move(tbl)), asg_(std::move(asg)) {}

const ConcreteVec& Evaluator::eval_mono(Mono m) {
  auto it = memo_.find(m);
  if (it != memo_.end()) return it->second;
  ConcreteVec out;
  switch (mono_kind(m)) {
    case MonoKind::Gen: {
      auto found = asg_.vectors.find(GeneratorSymbol{mono_gen_index(m)});
      if (found == asg_.vectors.end())
        throw std::invalid_argument("unassigned generator '" +
                                    GeneratorNames().name(mono_gen_index(m)) +
                                    "'");
      out = found->second;
      break;
    }
    case MonoKind::Diamond:
      out = contract(tbl_, tbl_.diamond, eval_mono(mono_left(m)),
                     eval_mono(mono_right(m)));
      break;
    case MonoKind::Bracket:
      out = contract(tbl_, tbl_.bracket, eval_mono(mono_left(m)),
                     eval_mono(mono_right(m)));
      break;
  }
  return memo_.emplace(m, std::move(out)).first->second;
}

ConcreteVec Evaluator::eval_g(const GElement& a) {
  ConcreteVec out(tbl_.dim, Scalar(0));
  for (const auto& [m, c] : a.terms()) axpy(out, c, eval_mono(m));
  return out;
}

ConcreteTensor Evaluator::eval_tensor(const TElement& u) {
  ConcreteTensor out;
  for (const auto& [w, c] : u.terms()) {
    std::map<CWord, Scalar> cur;
    cur.emplace(CWord{}, c);
    for (Mono letter : w) {
      const ConcreteVec& vec = eval_mono(letter);
      std::map<CWord, Scalar> grown;
      for (const auto& [iw, ic] : cur)
        for (int k = 0; k < tbl_.dim; ++k) {
          if (vec[k] == 0) continue;
          CWord ext = iw;
          ext.push_back(k);
          grown[ext] += ic * vec[k];
        }
      cur = std::move(grown);
    }
    for (const auto& [iw, ic] : cur) out.add_term(iw, ic);
  }
  return out;
}

namespace {

// The kernel maps recomputed over basis-index words from the structure
// constants alone; never touches the symbolic straightening machinery.
class ConcreteKernel {
public:
  explicit ConcreteKernel(const StructureTable& tbl) : tbl_(tbl) {}

  ConcreteVec dvec(int i, int j) const {
    ConcreteVec out(tbl_.dim, Scalar(0));
    for (int k = 0; k < tbl_.dim; ++k) out[k] = tbl_.diamond_c(i, j, k);
    return out;
  }

  ConcreteVec bvec(int i, int j) const {
    ConcreteVec out(tbl_.dim, Scalar(0));
    for (int k = 0; k < tbl_.dim; ++k) out[k] = tbl_.bracket_c(i, j, k);
    return out;
  }

  // e_z <> a
  ConcreteVec dleft(int z, const ConcreteVec& a) const {
    ConcreteVec out(tbl_.dim, Scalar(0));
    for (int j = 0; j < tbl_.dim; ++j) {
      if (a[j] == 0) continue;
      for (int k = 0; k < tbl_.dim; ++k)
        if (tbl_.diamond_c(z, j, k) != 0)
          out[k] += a[j] * tbl_.diamond_c(z, j, k);
    }
    return out;
  }

  // a <> e_m
  ConcreteVec dright(const ConcreteVec& a, int m) const {
    ConcreteVec out(tbl_.dim, Scalar(0));
    for (int i = 0; i < tbl_.dim; ++i) {
      if (a[i] == 0) continue;
      for (int k = 0; k < tbl_.dim; ++k)
        if (tbl_.diamond_c(i, m, k) != 0)
          out[k] += a[i] * tbl_.diamond_c(i, m, k);
    }
    return out;
  }

  ConcreteTensor nabla(int z, const ConcreteTensor& u) const {
    ConcreteTensor out;
    for (const auto& [w, c] : u.terms())
      for (std::size_t p = 0; p < w.size(); ++p)
        for (int k = 0; k < tbl_.dim; ++k) {
          const Scalar& d = tbl_.diamond_c(z, w[p], k);
          if (d == 0) continue;
          CWord repl = w;
          repl[p] = k;
          out.add_term(repl, c * d);
        }
    return out;
  }

  ConcreteTensor K_word(const CWord& w) {
    auto it = k_memo_.find(w);
    if (it != k_memo_.end()) return it->second;
    ConcreteTensor out;
    if (w.empty()) {
      out = ConcreteTensor::unit();
    } else {
      CWord rest(w.begin() + 1, w.end());
      ConcreteTensor k_rest = K_word(rest);
      for (const auto& [rw, rc] : k_rest.terms()) {
        CWord ext;
        ext.reserve(rw.size() + 1);
        ext.push_back(w[0]);
        ext.insert(ext.end(), rw.begin(), rw.end());
        out.add_term(ext, rc);
      }
      out -= K(nabla(w[0], ConcreteTensor(rest)));
    }
    k_memo_.emplace(w, out);
    return out;
  }

  ConcreteTensor K(const ConcreteTensor& u) {
    ConcreteTensor out;
    for (const auto& [w, c] : u.terms()) out += c * K_word(w);
    return out;
  }

  ConcreteVec t3(const CWord& u, int x, int y) {
    auto key = std::make_tuple(u, x, y);
    auto it = t_memo_.find(key);
    if (it != t_memo_.end()) return it->second;
    ConcreteVec out(tbl_.dim, Scalar(0));
    if (u.empty()) {
      axpy(out, Scalar(1), dvec(x, y));
      axpy(out, Scalar(-1), dvec(y, x));
      axpy(out, Scalar(-1), bvec(x, y));
    } else {
      int z = u[0];
      CWord rest(u.begin() + 1, u.end());
      axpy(out, Scalar(1), dleft(z, t3(rest, x, y)));
      on_nabla_triple(z, rest, x, y, [&](const Scalar& c, const CWord& ru,
                                         int rx, int ry) {
        axpy(out, -c, t3(ru, rx, ry));
      });
    }
    t_memo_.emplace(std::move(key), out);
    return out;
  }

  ConcreteVec r4(const CWord& u, int x, int y, int m) {
    auto key = std::make_tuple(u, x, y, m);
    auto it = r_memo_.find(key);
    if (it != r_memo_.end()) return it->second;
    ConcreteVec out(tbl_.dim, Scalar(0));
    if (u.empty()) {
      axpy(out, Scalar(1), dleft(x, dvec(y, m)));
      axpy(out, Scalar(-1), dleft(y, dvec(x, m)));
      axpy(out, Scalar(-1), dright(bvec(x, y), m));
    } else {
      int z = u[0];
      CWord rest(u.begin() + 1, u.end());
      axpy(out, Scalar(1), dleft(z, r4(rest, x, y, m)));
      for (int k = 0; k < tbl_.dim; ++k) {
        const Scalar& d = tbl_.diamond_c(z, m, k);
        if (d != 0) axpy(out, -d, r4(rest, x, y, k));
      }
      on_nabla_triple(z, rest, x, y, [&](const Scalar& c, const CWord& ru,
                                         int rx, int ry) {
        axpy(out, -c, r4(ru, rx, ry, m));
      });
    }
    r_memo_.emplace(std::move(key), out);
    return out;
  }

  // r acts across a word as a derivation.
  ConcreteTensor r_on_tensor(const CWord& u, int x, int y,
                             const ConcreteTensor& v) {
    ConcreteTensor out;
    for (const auto& [w, c] : v.terms())
      for (std::size_t p = 0; p < w.size(); ++p) {
        ConcreteVec img = r4(u, x, y, w[p]);
        for (int k = 0; k < tbl_.dim; ++k) {
          if (img[k] == 0) continue;
          CWord repl = w;
          repl[p] = k;
          out.add_term(repl, c * img[k]);
        }
      }
    return out;
  }

  ConcreteTensor rho(const CWord& u, int x, int y, const ConcreteTensor& v) {
    ConcreteTensor out;
    int len = static_cast<int>(u.size());
    for (int mask = 0; mask < (1 << len); ++mask) {
      CWord left, right;
      for (int p = 0; p < len; ++p)
        ((mask >> p) & 1 ? left : right).push_back(u[p]);

      ConcreteVec tv = t3(right, x, y);
      for (int k = 0; k < tbl_.dim; ++k) {
        if (tv[k] == 0) continue;
        for (const auto& [vw, vc] : v.terms()) {
          CWord w = left;
          w.push_back(k);
          w.insert(w.end(), vw.begin(), vw.end());
          out.add_term(w, tv[k] * vc);
        }
      }
      ConcreteTensor r_part = r_on_tensor(right, x, y, v);
      for (const auto& [rw, rc] : r_part.terms()) {
        CWord w = left;
        w.insert(w.end(), rw.begin(), rw.end());
        out.add_term(w, rc);
      }
    }
    return out;
  }

  ConcreteTensor pbw(const ConcreteTensor& u) const {
    std::map<CWord, Scalar> work(u.terms().begin(), u.terms().end());
    ConcreteTensor out;
    auto add = [](std::map<CWord, Scalar>& m, const CWord& w, const Scalar& c) {
      auto [it, fresh] = m.try_emplace(w, c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) m.erase(it);
      }
    };
    while (!work.empty()) {
      auto head = work.begin();
      CWord w = head->first;
      Scalar c = head->second;
      work.erase(head);
      std::size_t p = 0;
      while (p + 1 < w.size() && w[p] <= w[p + 1]) ++p;
      if (p + 1 >= w.size()) {
        out.add_term(w, c);
        continue;
      }
      CWord swapped = w;
      std::swap(swapped[p], swapped[p + 1]);
      add(work, swapped, c);
      for (int k = 0; k < tbl_.dim; ++k) {
        const Scalar& bc = tbl_.bracket_c(w[p], w[p + 1], k);
        if (bc == 0) continue;
        CWord spliced;
        spliced.reserve(w.size() - 1);
        spliced.insert(spliced.end(), w.begin(), w.begin() + p);
        spliced.push_back(k);
        spliced.insert(spliced.end(), w.begin() + p + 2, w.end());
        add(work, spliced, c * bc);
      }
    }
    return out;
  }

private:
  // nabla_z of a triple (u, x, y): the prefix part letter by letter, then the
  // two pair substitutions.
  template <typename Fn>
  void on_nabla_triple(int z, const CWord& u, int x, int y, Fn&& fn) const {
    for (std::size_t p = 0; p < u.size(); ++p)
      for (int k = 0; k < tbl_.dim; ++k) {
        const Scalar& d = tbl_.diamond_c(z, u[p], k);
        if (d == 0) continue;
        CWord repl = u;
        repl[p] = k;
        fn(d, repl, x, y);
      }
    for (int k = 0; k < tbl_.dim; ++k) {
      const Scalar& dx = tbl_.diamond_c(z, x, k);
      if (dx != 0) fn(dx, u, k, y);
      const Scalar& dy = tbl_.diamond_c(z, y, k);
      if (dy != 0) fn(dy, u, x, k);
    }
  }

  const StructureTable& tbl_;
  std::map<CWord, ConcreteTensor> k_memo_;
  std::map<std::tuple<CWord, int, int>, ConcreteVec> t_memo_;
  std::map<std::tuple<CWord, int, int, int>, ConcreteVec> r_memo_;
};

const ConcreteVec& assigned_vector(const Assignment& asg, GeneratorSymbol g) {
  auto it = asg.vectors.find(g);
  if (it == asg.vectors.end())
    throw std::invalid_argument("unassigned generator '" +
                                GeneratorNames().name(g.index) + "'");
  return it->second;
}

ConcreteTensor expand_generator_word(const StructureTable& tbl,
                                     const Assignment& asg,
                                     const TensorWord& word) {
  std::map<CWord, Scalar> cur;
  cur.emplace(CWord{}, Scalar(1));
  for (Mono m : word) {
    if (mono_kind(m) != MonoKind::Gen)
      throw std::invalid_argument("oracle words must consist of generator letters");
    const ConcreteVec& vec =
        assigned_vector(asg, GeneratorSymbol{mono_gen_index(m)});
    std::map<CWord, Scalar> grown;
    for (const auto& [iw, ic] : cur)
      for (int k = 0; k < tbl.dim; ++k) {
        if (vec[k] == 0) continue;
        CWord ext = iw;
        ext.push_back(k);
        grown[ext] += ic * vec[k];
      }
    cur = std::move(grown);
  }
  ConcreteTensor out;
  for (const auto& [iw, ic] : cur) out.add_term(iw, ic);
  return out;
}

} // namespace

ConcreteTensor concrete_nabla(const StructureTable& tbl, int z,
                              const ConcreteTensor& u) {
  return ConcreteKernel(tbl).nabla(z, u);
}

ConcreteTensor concrete_K(const StructureTable& tbl, const ConcreteTensor& u) {
  return ConcreteKernel(tbl).K(u);
}

ConcreteVec concrete_t(const StructureTable& tbl, const CWord& prefix, int x,
                       int y) {
  return ConcreteKernel(tbl).t3(prefix, x, y);
}

ConcreteTensor concrete_r(const StructureTable& tbl, const CWord& prefix, int x,
                          int y, const ConcreteTensor& v) {
  return ConcreteKernel(tbl).r_on_tensor(prefix, x, y, v);
}

ConcreteTensor concrete_rho(const StructureTable& tbl, const ConcreteTensor& u,
                            int x, int y, const ConcreteTensor& v) {
  ConcreteKernel kernel(tbl);
  ConcreteTensor out;
  for (const auto& [w, c] : u.terms()) out += c * kernel.rho(w, x, y, v);
  return out;
}

ConcreteTensor concrete_pbw(const StructureTable& tbl, const ConcreteTensor& u) {
  return ConcreteKernel(tbl).pbw(u);
}

OracleResult oracle_theorem_full(const StructureTable& tbl, const Assignment& asg,
                                 const TensorWord& u, GeneratorSymbol x,
                                 GeneratorSymbol y, const TensorWord& v) {
  if (!check_jacobi(tbl))
    throw std::invalid_argument("structure table fails the Jacobi identity");

  ConcreteTensor u_conc = expand_generator_word(tbl, asg, u);
  ConcreteTensor v_conc = expand_generator_word(tbl, asg, v);
  const ConcreteVec& a = assigned_vector(asg, x);
  const ConcreteVec& b = assigned_vector(asg, y);

  ConcreteKernel kernel(tbl);
  ConcreteTensor pre;
  for (const auto& [uw, uc] : u_conc.terms()) {
    for (int i = 0; i < tbl.dim; ++i)
      for (int j = i + 1; j < tbl.dim; ++j) {
        Scalar lam = a[i] * b[j] - a[j] * b[i];
        if (lam == 0) continue;
        Scalar c = uc * lam;
        for (const auto& [vw, vc] : v_conc.terms()) {
          CWord w1 = uw;
          w1.push_back(i);
          w1.push_back(j);
          w1.insert(w1.end(), vw.begin(), vw.end());
          pre.add_term(w1, c * vc);
          CWord w2 = uw;
          w2.push_back(j);
          w2.push_back(i);
          w2.insert(w2.end(), vw.begin(), vw.end());
          pre.add_term(w2, -(c * vc));
        }
        pre += c * kernel.rho(uw, i, j, v_conc);
      }
  }

  ConcreteTensor lhs = kernel.K(pre);
  return {kernel.pbw(lhs).is_zero(), lhs};
}

bool oracle_theorem(const StructureTable& tbl, const Assignment& asg,
                    const TensorWord& u, GeneratorSymbol x, GeneratorSymbol y,
                    const TensorWord& v) {
  return oracle_theorem_full(tbl, asg, u, x, y, v).is_zero;
}

} // namespace framed

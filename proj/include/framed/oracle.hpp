#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "framed/g_element.hpp"
#include "framed/monomial.hpp"
#include "framed/scalar.hpp"
#include "framed/tensor.hpp"

namespace framed {

// A finite-dimensional algebra with basis e_0 < ... < e_{dim-1}, given by
// dense structure constants: [e_i, e_j] = sum_k bracket(i,j,k) e_k and
// e_i <> e_j = sum_k diamond(i,j,k) e_k. Construction places no constraints;
// check_jacobi reports whether the bracket is a Lie bracket.
struct StructureTable {
  int dim = 0;
  std::vector<Scalar> bracket, diamond; // dense, indexed (i*dim + j)*dim + k

  StructureTable() = default;
  explicit StructureTable(int d)
      : dim(d), bracket(static_cast<std::size_t>(d) * d * d),
        diamond(static_cast<std::size_t>(d) * d * d) {}

  std::size_t at(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * dim + j) * dim + k;
  }
  const Scalar& bracket_c(int i, int j, int k) const { return bracket[at(i, j, k)]; }
  const Scalar& diamond_c(int i, int j, int k) const { return diamond[at(i, j, k)]; }

  // Stores the constant together with its antisymmetric mirror image.
  void set_bracket(int i, int j, int k, const Scalar& c);
  void set_diamond(int i, int j, int k, const Scalar& c);
};

// True iff the bracket constants are antisymmetric and satisfy the Jacobi
// identity, both exactly.
bool check_jacobi(const StructureTable& tbl);

StructureTable abelian_table(int dim);

// abelian2/3/4, heisenberg3 ([e0,e1] = e2), and sl2 ([e0,e1] = 2 e1,
// [e0,e2] = -2 e2, [e1,e2] = e0); all with zero diamond.
const std::map<std::string, StructureTable>& builtin_tables();

// Same bracket, every diamond constant replaced by a seeded integer in
// [-9, 9]; deterministic in the seed.
StructureTable random_diamond(StructureTable tbl, std::uint64_t seed);

// JSON text format: {"dim": d, "bracket": [[i, j, k, "p/q"], ...],
// "diamond": [...]}; unlisted entries are zero, bracket rows only for i < j.
// load throws std::runtime_error on malformed input.
StructureTable load_structure_table(const std::string& json_text);
std::string save_structure_table(const StructureTable& tbl);

using ConcreteVec = std::vector<Scalar>; // coordinates over e_0..e_{dim-1}
using CWord = std::vector<int>;          // tensor word of basis indices

// Rational combination of index words; zero coefficients are never stored.
class ConcreteTensor {
public:
  using TermMap = std::map<CWord, Scalar>;

  ConcreteTensor() = default;
  explicit ConcreteTensor(CWord w) { terms_.emplace(std::move(w), Scalar(1)); }
  ConcreteTensor(CWord w, Scalar c) {
    if (c != 0) terms_.emplace(std::move(w), std::move(c));
  }
  static ConcreteTensor unit() { return ConcreteTensor(CWord{}); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const CWord& w, const Scalar& c);
  ConcreteTensor& operator+=(const ConcreteTensor& o);
  ConcreteTensor& operator-=(const ConcreteTensor& o);
  ConcreteTensor& operator*=(const Scalar& c);
  friend ConcreteTensor operator+(ConcreteTensor a, const ConcreteTensor& b) { return a += b; }
  friend ConcreteTensor operator-(ConcreteTensor a, const ConcreteTensor& b) { return a -= b; }
  friend ConcreteTensor operator*(const Scalar& c, ConcreteTensor a) { return a *= c; }
  friend bool operator==(const ConcreteTensor& a, const ConcreteTensor& b) {
    return a.terms_ == b.terms_;
  }

private:
  TermMap terms_;
};

// Generator vectors for the evaluation homomorphism.
struct Assignment {
  std::map<GeneratorSymbol, ConcreteVec> vectors;
};

// Generator k maps to the basis vector e_{k mod dim}.
Assignment basis_assignment(std::uint32_t n_gens, int dim);

// Seeded coordinates with numerators in [-9, 9] and denominators in 1..3.
Assignment random_assignment(std::uint32_t n_gens, int dim, std::uint64_t seed);

// The unique framed-Lie homomorphism from the free algebra fixing the
// generator assignment, with a per-instance monomial memo.
class Evaluator {
public:
  Evaluator(StructureTable tbl, Assignment asg);

  // Throws std::invalid_argument naming any unassigned generator.
  const ConcreteVec& eval_mono(Mono m);
  ConcreteVec eval_g(const GElement& a);
  ConcreteTensor eval_tensor(const TElement& u);

  const StructureTable& table() const { return tbl_; }

private:
  StructureTable tbl_;
  Assignment asg_;
  std::map<Mono, ConcreteVec> memo_;
};

// The concrete counterparts of the kernel maps, computed from structure
// constants alone (no symbolic straightening anywhere on this path).
ConcreteTensor concrete_nabla(const StructureTable& tbl, int z,
                              const ConcreteTensor& u);
ConcreteTensor concrete_K(const StructureTable& tbl, const ConcreteTensor& u);
ConcreteVec concrete_t(const StructureTable& tbl, const CWord& prefix, int x, int y);
ConcreteTensor concrete_r(const StructureTable& tbl, const CWord& prefix, int x,
                          int y, const ConcreteTensor& v);
ConcreteTensor concrete_rho(const StructureTable& tbl, const ConcreteTensor& u,
                            int x, int y, const ConcreteTensor& v);
ConcreteTensor concrete_pbw(const StructureTable& tbl, const ConcreteTensor& u);

struct OracleResult {
  bool is_zero;
  ConcreteTensor lhs; // before the final straightening
};

// Recomputes the commutation check inside the concrete algebra: u and v are
// generator words, (x, y) the generator pair. Requires check_jacobi(tbl);
// throws std::invalid_argument otherwise.
OracleResult oracle_theorem_full(const StructureTable& tbl, const Assignment& asg,
                                 const TensorWord& u, GeneratorSymbol x,
                                 GeneratorSymbol y, const TensorWord& v);
bool oracle_theorem(const StructureTable& tbl, const Assignment& asg,
                    const TensorWord& u, GeneratorSymbol x, GeneratorSymbol y,
                    const TensorWord& v);

} // namespace framed

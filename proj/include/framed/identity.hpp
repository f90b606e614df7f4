#pragma once

#include <string>
#include <vector>

#include "framed/scalar.hpp"

namespace framed {

// One letter of a symbolic commutation-identity word. Slots are 1-based
// positions in the n-fold input word.
//   Gen : the bare letter at `args[0]`.
//   T   : the torsion symbol; args = derivative slots followed by the two
//         pair slots (arity >= 2).
//   R   : the curvature symbol; args as for T, plus the slot it acts on in
//         `target` (total arity >= 3).
struct SymbolicFactor {
  enum class Kind { Gen, T, R };
  Kind kind;
  std::vector<int> args;
  int target = 0; // Kind::R only

  friend bool operator==(const SymbolicFactor&, const SymbolicFactor&) = default;
};

struct IdentityTerm {
  Scalar coef;
  std::vector<SymbolicFactor> word;

  friend bool operator==(const IdentityTerm&, const IdentityTerm&) = default;
};

// The commutation relation for an n-letter word with the pair at positions
// (pos, pos+1): the word in order, minus the transposed word, plus the
// symbolic remainder. Every remainder term is strictly shorter than n.
struct IdentityDocument {
  int n = 0;
  int pos = 0;
  std::vector<IdentityTerm> terms;

  friend bool operator==(const IdentityDocument&, const IdentityDocument&) = default;
};

// The remainder rho(prefix (x) pair) applied to the suffix word, with t and r
// kept opaque: only the coproduct splits of the prefix are expanded. Slots
// number the prefix 1..prefix_len, the pair next, then the suffix. Splits run
// from the full prefix staying outside to the full prefix inside the symbol;
// within a split the T term comes first, then one R term per suffix position.
std::vector<IdentityTerm> rho_opaque(int prefix_len, int suffix_len);

// Requires 1 <= i < n; throws std::invalid_argument otherwise.
IdentityDocument commutation_identity(int n, int i);

enum class IdentityFormat { Index, Latex, Sexp };

// Index format: free indices i, j, k, ... per slot; each T/R symbol takes the
// first contraction letter from l, m, p, q, ... not already in use, repeated
// as "T_{ij}^l<nabla>_l". Single-character scripts are bare ("_i"), longer
// groups braced ("_{ij}"). Terms join with '+' / U+2212 and the line ends in
// "=0". A header line flags the ordering convention whenever a symbol carries
// two or more derivative slots. Latex mirrors the structure in TeX input;
// sexp is a lossless machine form.
std::string render(const IdentityDocument& doc, IdentityFormat format);

// Inverse of render(doc, Sexp); throws std::invalid_argument on malformed
// input.
IdentityDocument parse_identity_sexp(const std::string& src);

} // namespace framed

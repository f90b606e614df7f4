#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "framed/print.hpp"
#include "framed/tensor.hpp"

namespace framed {

// Parse or elaboration failure with a 1-based source position.
struct ExprError : std::runtime_error {
  ExprError(std::string msg, int line, int col)
      : std::runtime_error(std::move(msg)), line(line), col(col) {}
  int line;
  int col;
};

// expr  := '-'? term (('+'|'-') term)*
// term  := factor ('*' factor)*
// factor:= rational '·'? atom | rational | atom
// atom  := ident | '1' | '[' expr ',' expr ']' | 'd' '(' expr ',' expr ')'
//        | '(' expr ')'
// 'd' is reserved for the diamond product and cannot name a generator.
struct ExprNode {
  enum class Kind { Ident, Unit, Bracket, Diamond, Tensor, Sum, Diff, Scale };
  Kind kind;
  std::string ident;                // Kind::Ident
  Scalar factor;                    // Kind::Scale
  std::vector<std::unique_ptr<ExprNode>> children;
  int line = 0;
  int col = 0;
};

using ExprAST = std::unique_ptr<ExprNode>;

ExprAST parse(const std::string& src);

// Maps the tree to a canonical tensor element; identifiers resolve through
// `names`, brackets and diamonds demand arguments that are (combinations of)
// single letters. Throws ExprError on unknown identifiers or ill-typed
// bracket/diamond arguments.
TElement elaborate(const ExprAST& ast, const GeneratorNames& names = {});

TElement parse_element(const std::string& src, const GeneratorNames& names = {});

} // namespace framed

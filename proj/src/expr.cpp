#include "framed/expr.hpp"

#include <cctype>
#include <utility>

#include "framed/g_element.hpp"
#include "framed/scalar.hpp"

namespace framed {
namespace {

enum class Tok {
  End,
  Plus,
  Minus,
  Star,
  LBrack,
  RBrack,
  LParen,
  RParen,
  Comma,
  CDot,
  Number,
  Ident,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
public:
  explicit Lexer(const std::string& src) : src_(src) {}

  Token next() {
    skip_space();
    int line = line_, col = col_;
    if (pos_ >= src_.size()) return {Tok::End, "", line, col};
    char c = src_[pos_];
    switch (c) {
      case '+': advance(); return {Tok::Plus, "+", line, col};
      case '-': advance(); return {Tok::Minus, "-", line, col};
      case '*': advance(); return {Tok::Star, "*", line, col};
      case '[': advance(); return {Tok::LBrack, "[", line, col};
      case ']': advance(); return {Tok::RBrack, "]", line, col};
      case '(': advance(); return {Tok::LParen, "(", line, col};
      case ')': advance(); return {Tok::RParen, ")", line, col};
      case ',': advance(); return {Tok::Comma, ",", line, col};
      default: break;
    }
    // UTF-8 middle dot
    if (static_cast<unsigned char>(c) == 0xc2 && pos_ + 1 < src_.size() &&
        static_cast<unsigned char>(src_[pos_ + 1]) == 0xb7) {
      advance();
      advance();
      return {Tok::CDot, "·", line, col};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        text += src_[pos_];
        advance();
      }
      if (pos_ + 1 < src_.size() && src_[pos_] == '/' &&
          std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
        text += '/';
        advance();
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          text += src_[pos_];
          advance();
        }
      }
      return {Tok::Number, text, line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string text;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        text += src_[pos_];
        advance();
      }
      return {Tok::Ident, text, line, col};
    }
    throw ExprError("unexpected character '" + std::string(1, c) + "'", line, col);
  }

private:
  void skip_space() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      advance();
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
public:
  explicit Parser(const std::string& src) : lexer_(src) { shift(); }

  ExprAST run() {
    ExprAST out = parse_expr();
    if (cur_.kind != Tok::End)
      throw ExprError("unexpected '" + cur_.text + "'", cur_.line, cur_.col);
    return out;
  }

private:
  void shift() { cur_ = lexer_.next(); }

  ExprAST node(ExprNode::Kind kind, int line, int col) {
    auto n = std::make_unique<ExprNode>();
    n->kind = kind;
    n->line = line;
    n->col = col;
    return n;
  }

  // Binary nodes take the position of their left operand, so elaboration
  // errors point at the start of the offending subexpression.
  ExprAST parse_expr() {
    ExprAST lhs;
    if (cur_.kind == Tok::Minus) {
      int line = cur_.line, col = cur_.col;
      shift();
      ExprAST neg = node(ExprNode::Kind::Scale, line, col);
      neg->factor = Scalar(-1);
      neg->children.push_back(parse_term());
      lhs = std::move(neg);
    } else {
      lhs = parse_term();
    }
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      bool minus = cur_.kind == Tok::Minus;
      shift();
      ExprAST rhs = parse_term();
      ExprAST sum =
          node(minus ? ExprNode::Kind::Diff : ExprNode::Kind::Sum, lhs->line, lhs->col);
      sum->children.push_back(std::move(lhs));
      sum->children.push_back(std::move(rhs));
      lhs = std::move(sum);
    }
    return lhs;
  }

  ExprAST parse_term() {
    ExprAST lhs = parse_factor();
    while (cur_.kind == Tok::Star) {
      shift();
      ExprAST rhs = parse_factor();
      ExprAST prod = node(ExprNode::Kind::Tensor, lhs->line, lhs->col);
      prod->children.push_back(std::move(lhs));
      prod->children.push_back(std::move(rhs));
      lhs = std::move(prod);
    }
    return lhs;
  }

  bool atom_ahead() const {
    return cur_.kind == Tok::Ident || cur_.kind == Tok::LBrack ||
           cur_.kind == Tok::LParen ||
           (cur_.kind == Tok::Number && cur_.text == "1");
  }

  ExprAST parse_factor() {
    if (cur_.kind == Tok::Number) {
      Token num = cur_;
      shift();
      bool dotted = false;
      if (cur_.kind == Tok::CDot) {
        dotted = true;
        shift();
      }
      if (dotted || atom_ahead()) {
        if (!atom_ahead())
          throw ExprError("expected expression after coefficient", cur_.line, cur_.col);
        ExprAST inner = parse_atom();
        ExprAST scale = node(ExprNode::Kind::Scale, num.line, num.col);
        scale->factor = read_scalar(num);
        scale->children.push_back(std::move(inner));
        return scale;
      }
      if (num.text == "1") return node(ExprNode::Kind::Unit, num.line, num.col);
      // bare rational: coefficient on the unit word
      ExprAST scale = node(ExprNode::Kind::Scale, num.line, num.col);
      scale->factor = read_scalar(num);
      scale->children.push_back(node(ExprNode::Kind::Unit, num.line, num.col));
      return scale;
    }
    return parse_atom();
  }

  Scalar read_scalar(const Token& num) {
    try {
      return scalar_from_string(num.text);
    } catch (const std::invalid_argument& e) {
      throw ExprError(e.what(), num.line, num.col);
    }
  }

  ExprAST parse_atom() {
    if (cur_.kind == Tok::Number && cur_.text == "1") {
      ExprAST unit = node(ExprNode::Kind::Unit, cur_.line, cur_.col);
      shift();
      return unit;
    }
    if (cur_.kind == Tok::Ident) {
      Token id = cur_;
      shift();
      if (id.text == "d") {
        if (cur_.kind != Tok::LParen)
          throw ExprError("'d' is reserved for the diamond product d(a,b)",
                          id.line, id.col);
        shift();
        ExprAST a = parse_expr();
        expect(Tok::Comma, "','");
        ExprAST b = parse_expr();
        expect(Tok::RParen, "')'");
        ExprAST call = node(ExprNode::Kind::Diamond, id.line, id.col);
        call->children.push_back(std::move(a));
        call->children.push_back(std::move(b));
        return call;
      }
      ExprAST ident = node(ExprNode::Kind::Ident, id.line, id.col);
      ident->ident = id.text;
      return ident;
    }
    if (cur_.kind == Tok::LBrack) {
      int line = cur_.line, col = cur_.col;
      shift();
      ExprAST a = parse_expr();
      expect(Tok::Comma, "','");
      ExprAST b = parse_expr();
      expect(Tok::RBrack, "']'");
      ExprAST br = node(ExprNode::Kind::Bracket, line, col);
      br->children.push_back(std::move(a));
      br->children.push_back(std::move(b));
      return br;
    }
    if (cur_.kind == Tok::LParen) {
      shift();
      ExprAST inner = parse_expr();
      expect(Tok::RParen, "')'");
      return inner;
    }
    throw ExprError("expected expression, found '" +
                        (cur_.kind == Tok::End ? std::string("end of input") : cur_.text) +
                        "'",
                    cur_.line, cur_.col);
  }

  void expect(Tok kind, const std::string& what) {
    if (cur_.kind != kind)
      throw ExprError("expected " + what + ", found '" +
                          (cur_.kind == Tok::End ? std::string("end of input") : cur_.text) +
                          "'",
                      cur_.line, cur_.col);
    shift();
  }

  Lexer lexer_;
  Token cur_{Tok::End, "", 1, 1};
};

GElement demand_g(const TElement& e, const ExprNode& arg, const char* what) {
  auto g = try_to_g(e);
  if (!g)
    throw ExprError(std::string(what) +
                        " argument must be a combination of single letters",
                    arg.line, arg.col);
  return *g;
}

} // namespace

ExprAST parse(const std::string& src) { return Parser(src).run(); }

TElement elaborate(const ExprAST& ast, const GeneratorNames& names) {
  const ExprNode& n = *ast;
  switch (n.kind) {
    case ExprNode::Kind::Ident: {
      auto idx = names.index_of(n.ident);
      if (!idx)
        throw ExprError("unknown identifier '" + n.ident + "'", n.line, n.col);
      return TElement(TensorWord{gen_mono(*idx)});
    }
    case ExprNode::Kind::Unit:
      return TElement::unit();
    case ExprNode::Kind::Bracket: {
      TElement a = elaborate(n.children[0], names);
      TElement b = elaborate(n.children[1], names);
      return from_g(bracket(demand_g(a, *n.children[0], "bracket"),
                            demand_g(b, *n.children[1], "bracket")));
    }
    case ExprNode::Kind::Diamond: {
      TElement a = elaborate(n.children[0], names);
      TElement b = elaborate(n.children[1], names);
      return from_g(diamond(demand_g(a, *n.children[0], "diamond"),
                            demand_g(b, *n.children[1], "diamond")));
    }
    case ExprNode::Kind::Tensor:
      return concat(elaborate(n.children[0], names), elaborate(n.children[1], names));
    case ExprNode::Kind::Sum:
      return elaborate(n.children[0], names) + elaborate(n.children[1], names);
    case ExprNode::Kind::Diff:
      return elaborate(n.children[0], names) - elaborate(n.children[1], names);
    case ExprNode::Kind::Scale: {
      TElement inner = elaborate(n.children[0], names);
      inner *= n.factor;
      return inner;
    }
  }
  throw ExprError("malformed expression tree", n.line, n.col);
}

TElement parse_element(const std::string& src, const GeneratorNames& names) {
  return elaborate(parse(src), names);
}

} // namespace framed

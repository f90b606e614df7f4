#include "framed/identity.hpp"

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace framed {
namespace {

SymbolicFactor gen_factor(int slot) {
  return {SymbolicFactor::Kind::Gen, {slot}, 0};
}

// Free index letters per slot; beyond five slots the position is spelled out.
std::string free_letter(int slot) {
  static const char* kFree[] = {"i", "j", "k", "l", "m"};
  if (slot >= 1 && slot <= 5) return kFree[slot - 1];
  return "i" + std::to_string(slot);
}

// Contraction letters in order of first use, skipping any letter a slot
// already claims.
std::string contraction_letter(std::size_t k, int n) {
  static const char* kPool[] = {"l", "m", "p", "q"};
  std::vector<std::string> avail;
  for (const char* cand : kPool) {
    bool taken = false;
    for (int s = 1; s <= n; ++s)
      if (free_letter(s) == cand) taken = true;
    if (!taken) avail.push_back(cand);
  }
  if (k < avail.size()) return avail[k];
  return "c" + std::to_string(k + 1 - avail.size());
}

std::string sub(const std::string& s) {
  return s.size() == 1 ? "_" + s : "_{" + s + "}";
}

std::string sup(const std::string& s) {
  return s.size() == 1 ? "^" + s : "^{" + s + "}";
}

std::size_t derivative_count(const SymbolicFactor& f) {
  return f.kind == SymbolicFactor::Kind::Gen ? 0 : f.args.size() - 2;
}

bool needs_convention_note(const IdentityDocument& doc) {
  for (const auto& term : doc.terms)
    for (const auto& f : term.word)
      if (derivative_count(f) >= 2) return true;
  return false;
}

const char kNote[] =
    "note: two or more stacked derivatives on T or R are read left to right"
    " (outermost first); this ordering is a convention of this tool";

std::string render_factor(const SymbolicFactor& f, int n, std::size_t& used,
                          bool latex) {
  const std::string nabla = latex ? "\\nabla" : "∇";
  if (f.kind == SymbolicFactor::Kind::Gen)
    return nabla + sub(free_letter(f.args[0]));

  std::size_t derivs = derivative_count(f);
  std::string slots;
  for (std::size_t a = derivs; a < f.args.size(); ++a)
    slots += free_letter(f.args[a]);
  if (f.kind == SymbolicFactor::Kind::R) slots += free_letter(f.target);
  std::string c = contraction_letter(used++, n);
  std::string name = f.kind == SymbolicFactor::Kind::T ? "T" : "R";

  std::string out;
  if (derivs > 0) {
    out += "(";
    for (std::size_t a = 0; a < derivs; ++a)
      out += nabla + sub(free_letter(f.args[a]));
    out += name + ")";
  } else {
    out += name;
  }
  out += sub(slots) + sup(c) + nabla + sub(c);
  return out;
}

std::string render_text(const IdentityDocument& doc, bool latex) {
  std::string out;
  if (needs_convention_note(doc))
    out += (latex ? std::string("% ") + kNote : std::string(kNote)) + "\n";
  bool first = true;
  for (const auto& term : doc.terms) {
    Scalar mag = term.coef < 0 ? Scalar(-term.coef) : term.coef;
    if (first) {
      if (term.coef < 0) out += latex ? "-" : "−";
    } else {
      out += term.coef < 0 ? (latex ? "-" : "−") : "+";
    }
    first = false;
    if (mag != 1) out += scalar_to_string(mag) + (latex ? "\\cdot " : "·");
    if (term.word.empty()) out += "1";
    std::size_t used = 0;
    for (const auto& f : term.word) out += render_factor(f, doc.n, used, latex);
  }
  out += "=0";
  return out;
}

std::string render_sexp(const IdentityDocument& doc) {
  std::string out = "(identity " + std::to_string(doc.n) + " " +
                    std::to_string(doc.pos);
  for (const auto& term : doc.terms) {
    out += " (term " + scalar_to_string(term.coef);
    for (const auto& f : term.word) {
      switch (f.kind) {
        case SymbolicFactor::Kind::Gen:
          out += " (gen " + std::to_string(f.args[0]) + ")";
          break;
        case SymbolicFactor::Kind::T:
          out += " (t";
          for (int a : f.args) out += " " + std::to_string(a);
          out += ")";
          break;
        case SymbolicFactor::Kind::R:
          out += " (r";
          for (int a : f.args) out += " " + std::to_string(a);
          out += " " + std::to_string(f.target) + ")";
          break;
      }
    }
    out += ")";
  }
  out += ")";
  return out;
}

// Minimal s-expression reader for parse_identity_sexp.
struct SNode {
  bool is_atom = false;
  std::string atom;
  std::vector<SNode> kids;
};

[[noreturn]] void sexp_fail(const std::string& what) {
  throw std::invalid_argument("identity sexp: " + what);
}

SNode sexp_read(const std::string& src, std::size_t& pos) {
  while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
    ++pos;
  if (pos >= src.size()) sexp_fail("unexpected end of input");
  if (src[pos] == ')') sexp_fail("unexpected ')'");
  if (src[pos] == '(') {
    ++pos;
    SNode list;
    for (;;) {
      while (pos < src.size() &&
             std::isspace(static_cast<unsigned char>(src[pos])))
        ++pos;
      if (pos >= src.size()) sexp_fail("missing ')'");
      if (src[pos] == ')') {
        ++pos;
        return list;
      }
      list.kids.push_back(sexp_read(src, pos));
    }
  }
  SNode atom;
  atom.is_atom = true;
  while (pos < src.size() && src[pos] != '(' && src[pos] != ')' &&
         !std::isspace(static_cast<unsigned char>(src[pos])))
    atom.atom += src[pos++];
  return atom;
}

int sexp_int(const SNode& n, const std::string& what) {
  if (!n.is_atom) sexp_fail("expected " + what);
  int value = 0;
  std::size_t used = 0;
  try {
    value = std::stoi(n.atom, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used != n.atom.size() || n.atom.empty())
    sexp_fail("bad " + what + " '" + n.atom + "'");
  return value;
}

bool sexp_head(const SNode& n, const std::string& name) {
  return !n.is_atom && !n.kids.empty() && n.kids[0].is_atom &&
         n.kids[0].atom == name;
}

SymbolicFactor sexp_factor(const SNode& n) {
  if (sexp_head(n, "gen")) {
    if (n.kids.size() != 2) sexp_fail("gen takes one slot");
    return gen_factor(sexp_int(n.kids[1], "slot"));
  }
  if (sexp_head(n, "t")) {
    if (n.kids.size() < 3) sexp_fail("t takes at least two slots");
    SymbolicFactor f{SymbolicFactor::Kind::T, {}, 0};
    for (std::size_t k = 1; k < n.kids.size(); ++k)
      f.args.push_back(sexp_int(n.kids[k], "slot"));
    return f;
  }
  if (sexp_head(n, "r")) {
    if (n.kids.size() < 4) sexp_fail("r takes at least three slots");
    SymbolicFactor f{SymbolicFactor::Kind::R, {}, 0};
    for (std::size_t k = 1; k + 1 < n.kids.size(); ++k)
      f.args.push_back(sexp_int(n.kids[k], "slot"));
    f.target = sexp_int(n.kids.back(), "slot");
    return f;
  }
  sexp_fail("expected (gen ...), (t ...) or (r ...)");
}

} // namespace

std::vector<IdentityTerm> rho_opaque(int prefix_len, int suffix_len) {
  if (prefix_len < 0 || suffix_len < 0)
    throw std::invalid_argument("rho_opaque: negative length");
  std::vector<IdentityTerm> out;
  // Split mask over prefix letters: a set bit keeps that letter outside the
  // symbol; masks run from everything-outside down to everything-inside.
  for (int mask = (1 << prefix_len) - 1; mask >= 0; --mask) {
    std::vector<int> outside, inside;
    for (int k = 0; k < prefix_len; ++k)
      ((mask >> k) & 1 ? outside : inside).push_back(k + 1);

    SymbolicFactor tsym{SymbolicFactor::Kind::T, inside, 0};
    tsym.args.push_back(prefix_len + 1);
    tsym.args.push_back(prefix_len + 2);

    IdentityTerm t{Scalar(1), {}};
    for (int s : outside) t.word.push_back(gen_factor(s));
    t.word.push_back(tsym);
    for (int s = 0; s < suffix_len; ++s)
      t.word.push_back(gen_factor(prefix_len + 3 + s));
    out.push_back(std::move(t));

    // r is a derivation across the suffix: one term per suffix position.
    for (int j = 0; j < suffix_len; ++j) {
      IdentityTerm r{Scalar(1), {}};
      for (int s : outside) r.word.push_back(gen_factor(s));
      for (int s = 0; s < suffix_len; ++s) {
        if (s == j) {
          SymbolicFactor rsym{SymbolicFactor::Kind::R, inside,
                              prefix_len + 3 + s};
          rsym.args.push_back(prefix_len + 1);
          rsym.args.push_back(prefix_len + 2);
          r.word.push_back(std::move(rsym));
        } else {
          r.word.push_back(gen_factor(prefix_len + 3 + s));
        }
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

IdentityDocument commutation_identity(int n, int i) {
  if (i < 1 || i >= n)
    throw std::invalid_argument("commutation_identity: need 1 <= i < n");
  IdentityDocument doc{n, i, {}};

  IdentityTerm plain{Scalar(1), {}};
  for (int s = 1; s <= n; ++s) plain.word.push_back(gen_factor(s));
  IdentityTerm swapped{Scalar(-1), plain.word};
  std::swap(swapped.word[i - 1], swapped.word[i]);
  doc.terms.push_back(std::move(plain));
  doc.terms.push_back(std::move(swapped));

  for (auto& term : rho_opaque(i - 1, n - i - 1))
    doc.terms.push_back(std::move(term));
  return doc;
}

std::string render(const IdentityDocument& doc, IdentityFormat format) {
  switch (format) {
    case IdentityFormat::Index: return render_text(doc, false);
    case IdentityFormat::Latex: return render_text(doc, true);
    case IdentityFormat::Sexp: return render_sexp(doc);
  }
  throw std::invalid_argument("render: bad format");
}

IdentityDocument parse_identity_sexp(const std::string& src) {
  std::size_t pos = 0;
  SNode root = sexp_read(src, pos);
  while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
    ++pos;
  if (pos != src.size()) sexp_fail("trailing input");
  if (!sexp_head(root, "identity") || root.kids.size() < 3)
    sexp_fail("expected (identity n pos term...)");

  IdentityDocument doc;
  doc.n = sexp_int(root.kids[1], "n");
  doc.pos = sexp_int(root.kids[2], "pos");
  for (std::size_t k = 3; k < root.kids.size(); ++k) {
    const SNode& t = root.kids[k];
    if (!sexp_head(t, "term") || t.kids.size() < 2)
      sexp_fail("expected (term coef factor...)");
    IdentityTerm term;
    if (!t.kids[1].is_atom) sexp_fail("expected coefficient");
    try {
      term.coef = scalar_from_string(t.kids[1].atom);
    } catch (const std::invalid_argument&) {
      sexp_fail("bad coefficient '" + t.kids[1].atom + "'");
    }
    for (std::size_t f = 2; f < t.kids.size(); ++f)
      term.word.push_back(sexp_factor(t.kids[f]));
    doc.terms.push_back(std::move(term));
  }
  return doc;
}

} // namespace framed

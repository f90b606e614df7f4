#include "framed/print.hpp"

#include "framed/scalar.hpp"

namespace framed {
namespace {

const char* kDefaults[] = {"x", "y", "z", "w"};

void append_terms(std::string& out, const std::string& body, const Scalar& c,
                  bool first) {
  Scalar mag = c < 0 ? Scalar(-c) : c;
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (mag != 1) {
    out += scalar_to_string(mag);
    out += "·"; // middle dot
  }
  out += body;
}

} // namespace

GeneratorNames::GeneratorNames(std::vector<std::string> names)
    : names_(std::move(names)) {}

std::string GeneratorNames::name(std::uint32_t index) const {
  if (index < names_.size()) return names_[index];
  if (names_.empty() && index < 4) return kDefaults[index];
  return "g" + std::to_string(index);
}

std::optional<std::uint32_t> GeneratorNames::index_of(const std::string& name) const {
  for (std::uint32_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  if (names_.empty()) {
    for (std::uint32_t i = 0; i < 4; ++i)
      if (name == kDefaults[i]) return i;
    if (name.size() >= 2 && name[0] == 'g') {
      std::uint32_t idx = 0;
      for (std::size_t k = 1; k < name.size(); ++k) {
        if (name[k] < '0' || name[k] > '9') return std::nullopt;
        idx = idx * 10 + static_cast<std::uint32_t>(name[k] - '0');
      }
      if (idx >= 4) return idx;
    }
  }
  return std::nullopt;
}

std::string mono_to_string(Mono m, const GeneratorNames& names) {
  switch (mono_kind(m)) {
    case MonoKind::Gen:
      return names.name(mono_gen_index(m));
    case MonoKind::Diamond:
      return "d(" + mono_to_string(mono_left(m), names) + "," +
             mono_to_string(mono_right(m), names) + ")";
    case MonoKind::Bracket:
      return "[" + mono_to_string(mono_left(m), names) + "," +
             mono_to_string(mono_right(m), names) + "]";
  }
  return "?";
}

std::string word_to_string(const TensorWord& w, const GeneratorNames& names) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += mono_to_string(w[i], names);
  }
  return out;
}

std::string to_string(const TElement& e, const GeneratorNames& names) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    append_terms(out, word_to_string(w, names), c, first);
    first = false;
  }
  return out;
}

std::string to_string(const GElement& e, const GeneratorNames& names) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    append_terms(out, mono_to_string(m, names), c, first);
    first = false;
  }
  return out;
}

} // namespace framed

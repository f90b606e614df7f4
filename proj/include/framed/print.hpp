#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "framed/g_element.hpp"
#include "framed/monomial.hpp"
#include "framed/tensor.hpp"

namespace framed {

// Display names for generator indices. Defaults: x, y, z, w, then g4, g5, ...
class GeneratorNames {
public:
  GeneratorNames() = default;
  explicit GeneratorNames(std::vector<std::string> names);

  std::string name(std::uint32_t index) const;
  std::optional<std::uint32_t> index_of(const std::string& name) const;

private:
  std::vector<std::string> names_;
};

// x | d(a,b) | [a,b], recursively.
std::string mono_to_string(Mono m, const GeneratorNames& names = {});

// Letters joined with '*'; the empty word prints as "1".
std::string word_to_string(const TensorWord& w, const GeneratorNames& names = {});

// Terms in canonical order, " + " / " - " separators, coefficient magnitudes
// other than 1 printed as a "p/q·" prefix. Zero prints as "0".
std::string to_string(const TElement& e, const GeneratorNames& names = {});
std::string to_string(const GElement& e, const GeneratorNames& names = {});

} // namespace framed

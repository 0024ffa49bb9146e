#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "monolith/group.hpp"

namespace monolith::io {

struct LoadReport {
  bool renumbered = false;
  // old index -> new index, present only when renumbered
  std::vector<int> renumbering;
};

// Group file format: {"order": n, "table": [[...],...], "names": [...]?}.
// The identity must be index 0, otherwise the loader renumbers and records it.
FiniteGroup group_from_json(const nlohmann::json& j, LoadReport* report = nullptr);
FiniteGroup load_group(const std::string& path, LoadReport* report = nullptr);

nlohmann::json group_to_json(const FiniteGroup& g);

// Permutation generators: generators separated by ';', each a sequence of
// cycles in parentheses with 1-based points, e.g. "(1 2 3 4);(1 3)".
std::vector<Permutation> parse_permutation_generators(const std::string& text);

}  // namespace monolith::io

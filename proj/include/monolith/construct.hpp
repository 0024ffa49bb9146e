#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "monolith/element_set.hpp"
#include "monolith/group.hpp"
#include "monolith/lattice.hpp"

namespace monolith::construct {

// Componentwise product group G^n; element indexing is mixed-radix over
// components.
FiniteGroup direct_power(const FiniteGroup& g, int n,
                         long long order_cap = kDefaultOrderCap);

struct SubgroupResult {
  FiniteGroup group;
  std::vector<int> embedding;  // subgroup index -> ambient index
};

// The subgroup generated by `gens`, as a standalone group; element 0 is the
// identity and ordering follows breadth-first discovery.
SubgroupResult subgroup_generated(const FiniteGroup& g,
                                  const std::vector<int>& gens);

struct QuotientResult {
  FiniteGroup group;
  std::vector<int> projection;  // ambient index -> coset index
};

// G/N for a normal subgroup N; the identity coset is index 0.
QuotientResult quotient(const FiniteGroup& g, const ElementSet& n);

struct SampleLimits {
  int max_power = 2;
  long long max_order = 64;
  int max_members = 64;
  int max_tuples = 4000;  // generator tuples tried per direct power
};

// A sampled member of the variety generated by a base group, certified by its
// construction recipe. The recipe replays to an identical table.
struct VarietyMember {
  FiniteGroup group;
  nlohmann::json provenance;
  Analysis analysis;
};

// Deterministic sample of the variety generated by `g`: the group itself, its
// quotients, subgroups of G^2 generated by one- and two-element tuples, and
// quotients of those, deduplicated by analysis fingerprint.
std::vector<VarietyMember> sample_variety_members(
    const FiniteGroup& g, const nlohmann::json& base_recipe,
    const SampleLimits& limits = {});

// Rebuilds a group from a provenance recipe. `roots` maps content hashes to
// available base groups (used to verify `base` nodes).
FiniteGroup replay(const nlohmann::json& recipe);

// Recipe helpers
nlohmann::json recipe_named(const std::string& family_spec);
nlohmann::json recipe_table(const FiniteGroup& g);

}  // namespace monolith::construct

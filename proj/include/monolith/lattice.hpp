#pragma once

#include <optional>
#include <vector>

#include "monolith/element_set.hpp"
#include "monolith/group.hpp"

namespace monolith {

struct CentralSeries {
  std::vector<ElementSet> levels;  // Z_0, Z_1, ... strictly ascending
  bool stabilized = false;
  std::optional<int> nilpotency_class;  // set iff the last level is all of G
};

// Smallest normal subgroup containing X: the subgroup generated by all
// conjugates of members of X.
ElementSet normal_closure(const FiniteGroup& g, const std::vector<int>& xs);

inline ElementSet normal_closure(const FiniteGroup& g, int a) {
  return normal_closure(g, std::vector<int>{a});
}

// Every normal subgroup exactly once, sorted by (size, lexicographic bitset).
// Computed as the join-closure of the principal closures {a^G} plus the
// trivial subgroup.
std::vector<ElementSet> normal_subgroups(const FiniteGroup& g,
                                         std::size_t cap = 10000);

// Minimal nontrivial normal subgroups.
std::vector<ElementSet> atoms(const FiniteGroup& g);
std::vector<ElementSet> atoms(const FiniteGroup& g,
                              const std::vector<ElementSet>& lattice);

// Present iff the group has exactly one atom.
std::optional<ElementSet> monolith(const FiniteGroup& g);

bool is_subdirectly_irreducible(const FiniteGroup& g);

ElementSet center(const FiniteGroup& g);

// Upper central series via Z_{i+1} = {x : [x,g] in Z_i for all g}.
CentralSeries upper_central_series(const FiniteGroup& g);

// True iff every left-normed commutator in k+1 variables is trivial.
bool verify_class_identity(const FiniteGroup& g, int k,
                           long long eval_cap = 100000000LL);

// Nilpotence via the Sylow characterization: for every prime p dividing |G|,
// the p-power-order elements are closed under multiplication.
bool is_nilpotent_sylow_check(const FiniteGroup& g);

// Index |H|/|K| for every covering pair K < H in the normal lattice, sorted.
std::vector<int> chief_factor_sizes(const FiniteGroup& g);
std::vector<int> chief_factor_sizes(const FiniteGroup& g,
                                    const std::vector<ElementSet>& lattice);

// One-shot analysis record backing the JSON report.
struct Analysis {
  int order = 0;
  int exponent = 0;
  std::optional<int> nilpotency_class;
  int center_size = 0;
  std::vector<int> upper_central_sizes;
  std::vector<ElementSet> normals;
  std::vector<int> atom_sizes;
  std::optional<int> monolith_size;
  std::optional<ElementSet> monolith;
  std::vector<int> chief_factors;
  bool subdirectly_irreducible = false;
};

Analysis analyze(const FiniteGroup& g);

}  // namespace monolith

#pragma once

#include <string>

#include "monolith/group.hpp"

namespace monolith {

FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);  // order 2n
FiniteGroup quaternion_group();     // order 8
FiniteGroup heisenberg_group(int p);  // upper unitriangular 3x3 over Z/p, p prime
FiniteGroup symmetric_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Parses a family expression: `quaternion`, `cyclic:6`, `dihedral:4`,
// `heisenberg:3`, `symmetric:3`, `product:(quaternion,cyclic:3)`.
// Throws UnknownFamily / BadParameter.
FiniteGroup named_group(const std::string& spec);

}  // namespace monolith

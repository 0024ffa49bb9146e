#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monolith/element_set.hpp"
#include "monolith/group.hpp"
#include "monolith/lattice.hpp"

namespace monolith {

// A syntactic product of conjugates of x^{+1}/x^{-1}. Each factor is
// u_slot x^sign u_slot^-1; the complexity is the number of factors, with the
// empty product denoting the constant term 1.
struct ConjugateProductTerm {
  struct Factor {
    int slot = 0;   // parameter variable index
    int sign = +1;  // +1 or -1
    bool operator==(const Factor&) const = default;
  };
  std::vector<Factor> factors;

  int complexity() const { return static_cast<int>(factors.size()); }
  bool has_mixed_signs() const;
  int slot_count() const;
  // e.g. "u0 x u0^-1 . u1 x^-1 u1^-1"; the empty term prints as "1".
  std::string pretty() const;
  bool operator==(const ConjugateProductTerm&) const = default;
};

struct Witness {
  ConjugateProductTerm term;
  std::vector<int> params;  // one group element per slot
};

// Product over the factors of params[slot] · x^sign · params[slot]^-1.
int evaluate_term(const FiniteGroup& g, const ConjugateProductTerm& term,
                  int x, const std::vector<int>& params);

// Per-element BFS data for products of conjugates of c^{±1}: depth[e] is the
// minimal complexity reaching e (-1 if unreachable within the cap), with
// parent edges for term reconstruction.
struct ReachabilityTable {
  int base = 0;  // the element c
  std::vector<int> depth, parent, via_param;
  std::vector<int> via_sign;

  bool reached(int e) const { return depth[e] >= 0; }
  ElementSet reachable_set() const;
};

// BFS over right-multiplication by conjugates h·c^{±1}·h^-1, conjugators in
// index order, + before -. Depth d holds exactly the values of complexity-d
// conjugate product polynomials in c.
ReachabilityTable reachability(const FiniteGroup& g, int c, int max_complexity);

// A minimal-complexity term-and-params pair evaluating c to target, if one
// exists within max_complexity. Minimality is inherent in the BFS.
std::optional<Witness> minimal_witness(const FiniteGroup& g, int target, int c,
                                       int max_complexity);

struct WitnessStep {
  int level = 0;   // least i with target in Z_i
  int source = 0;  // a_{i+1}
  int target = 0;  // a_i, nonidentity
  ConjugateProductTerm term;
  std::vector<int> params;
};

struct WitnessChain {
  int start = 0;
  std::vector<WitnessStep> steps;  // descending level order
  int final_element = 0;           // lies in the monolith
  ConjugateProductTerm composed_term;
  std::vector<int> composed_params;
  long long total_complexity = 1;  // product of step complexities
  int step_bound = 0;              // exponent m
  long long total_bound = 0;       // m^k
  std::vector<std::string> findings;
};

// Walks an element down the upper central series into the monolith, taking
// at each level a minimal-complexity conjugate-product step to a nonidentity
// element one level down (or directly into the monolith). Requires a
// subdirectly irreducible nilpotent group and a nonidentity start element.
// Throws BoundViolation if any step exceeds the exponent.
WitnessChain descend(const FiniteGroup& g, int a);
WitnessChain descend(const FiniteGroup& g, int a, const Analysis& analysis);

// Substitutes each step's term into the next, yielding one conjugate product
// term whose complexity is the product of the step complexities. The empty
// chain composes to the single identity-conjugation factor.
std::pair<ConjugateProductTerm, std::vector<int>> compose_chain(
    const FiniteGroup& g, const WitnessChain& chain);

struct AtomBoundReport {
  int atom_size = 0;
  int bound = 0;  // the r checked against
  int max_complexity = 0;
  bool pass = false;
  std::vector<std::pair<int, int>> complexities;  // (element, complexity)
};

// For every a in c^H (which must be an atom), records the minimal witness
// complexity; passes when the maximum is at most r.
AtomBoundReport atom_bound_check(const FiniteGroup& g, int c, int r);

}  // namespace monolith

#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "monolith/element_set.hpp"
#include "monolith/group.hpp"

namespace monolith::folog {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Terms of the language of groups: variables, the constant 1, products and
// inverses.
struct Term {
  enum class Kind { Var, One, Prod, Inv };
  Kind kind;
  std::string var;     // Var
  TermPtr lhs, rhs;    // Prod (lhs, rhs); Inv uses lhs only
};

TermPtr t_var(std::string name);
TermPtr t_one();
TermPtr t_prod(TermPtr l, TermPtr r);
TermPtr t_inv(TermPtr t);

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { Eq, Not, And, Or, Implies, Iff, ForAll, Exists };
  Kind kind;
  TermPtr tl, tr;      // Eq
  FormulaPtr a, b;     // connectives (Not uses a only; quantifier body in a)
  std::string var;     // quantified variable
};

FormulaPtr f_eq(TermPtr l, TermPtr r);
FormulaPtr f_not(FormulaPtr x);
FormulaPtr f_and(FormulaPtr l, FormulaPtr r);
FormulaPtr f_or(FormulaPtr l, FormulaPtr r);
FormulaPtr f_implies(FormulaPtr l, FormulaPtr r);
FormulaPtr f_iff(FormulaPtr l, FormulaPtr r);
FormulaPtr f_forall(std::string var, FormulaPtr body);
FormulaPtr f_exists(std::string var, FormulaPtr body);

// Concrete syntax: `forall x.`/`exists x.`, infix `*`, postfix `'` for
// inverse, `1`, `=`, `!=` (sugar for negated equality), `!`, `&`, `|`, `->`,
// `<->`, parentheses. Throws SyntaxError with position and expected tokens.
FormulaPtr parse(const std::string& text);

// print(parse(s)) reparses to the same AST.
std::string print(const FormulaPtr& f);
std::string print(const TermPtr& t);

std::set<std::string> free_vars(const FormulaPtr& f);

// Standard finite-model semantics; quantifiers range over all of G. The
// assignment must cover every free variable.
bool evaluate(const FiniteGroup& g, const FormulaPtr& f,
              const std::map<std::string, int>& assignment);

// All elements satisfying a formula with exactly one free variable.
ElementSet defined_set(const FiniteGroup& g, const FormulaPtr& f,
                       const std::string& free_var);

inline constexpr long long kDefaultMaxDisjuncts = 1000000;

// The atom-defining normal closure formula: exists u_0..u_{r-1}, disjunction
// over all conjugate product terms t with at most `complexity_cap` factors of
// t(y, u) = x. Free variables exactly {x, y}.
FormulaPtr build_phi(int r, int complexity_cap,
                     long long max_disjuncts = kDefaultMaxDisjuncts);

// Same construction with num_vars parameter variables (m^k in the intended
// use).
FormulaPtr build_psi(int num_vars, int complexity_cap,
                     long long max_disjuncts = kDefaultMaxDisjuncts);

// exists u [u != 1 & forall z (z != 1 -> exists x (phi(u,x) & psi(x,z)))].
// phi and psi must have free variables exactly {x, y}.
FormulaPtr build_si_sentence(const FormulaPtr& phi, const FormulaPtr& psi);

// The same sentence evaluated by witness search instead of syntactic
// disjunctions: phi(u,x) holds iff u has a witness of complexity <= r over
// base x, psi(x,z) iff x has one of complexity <= psi_cap over base z.
bool evaluate_si_semantic(const FiniteGroup& g, int r, int psi_cap);

}  // namespace monolith::folog

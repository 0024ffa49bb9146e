#include "monolith/folog.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "monolith/errors.hpp"
#include "monolith/witness.hpp"

namespace monolith::folog {

TermPtr t_var(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Var;
  t->var = std::move(name);
  return t;
}
TermPtr t_one() {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::One;
  return t;
}
TermPtr t_prod(TermPtr l, TermPtr r) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Prod;
  t->lhs = std::move(l);
  t->rhs = std::move(r);
  return t;
}
TermPtr t_inv(TermPtr c) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Inv;
  t->lhs = std::move(c);
  return t;
}

FormulaPtr f_eq(TermPtr l, TermPtr r) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Eq;
  f->tl = std::move(l);
  f->tr = std::move(r);
  return f;
}
FormulaPtr f_not(FormulaPtr x) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Not;
  f->a = std::move(x);
  return f;
}
namespace {
FormulaPtr binary(Formula::Kind k, FormulaPtr l, FormulaPtr r) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->a = std::move(l);
  f->b = std::move(r);
  return f;
}
FormulaPtr quant(Formula::Kind k, std::string var, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->var = std::move(var);
  f->a = std::move(body);
  return f;
}
}  // namespace
FormulaPtr f_and(FormulaPtr l, FormulaPtr r) {
  return binary(Formula::Kind::And, std::move(l), std::move(r));
}
FormulaPtr f_or(FormulaPtr l, FormulaPtr r) {
  return binary(Formula::Kind::Or, std::move(l), std::move(r));
}
FormulaPtr f_implies(FormulaPtr l, FormulaPtr r) {
  return binary(Formula::Kind::Implies, std::move(l), std::move(r));
}
FormulaPtr f_iff(FormulaPtr l, FormulaPtr r) {
  return binary(Formula::Kind::Iff, std::move(l), std::move(r));
}
FormulaPtr f_forall(std::string var, FormulaPtr body) {
  return quant(Formula::Kind::ForAll, std::move(var), std::move(body));
}
FormulaPtr f_exists(std::string var, FormulaPtr body) {
  return quant(Formula::Kind::Exists, std::move(var), std::move(body));
}

// ---------------------------------------------------------------------------
// Printing. Precedence: iff 1, implies 2, or 3, and 4, not 5, equation 6;
// quantifiers are level 0 and must be parenthesized inside any connective.
// Binary connectives are left-associative per the grammar.

namespace {

int formula_prec(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists: return 0;
    case Formula::Kind::Iff: return 1;
    case Formula::Kind::Implies: return 2;
    case Formula::Kind::Or: return 3;
    case Formula::Kind::And: return 4;
    case Formula::Kind::Not: return 5;
    case Formula::Kind::Eq: return 6;
  }
  return 6;
}

int term_prec(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Prod: return 1;
    case Term::Kind::Inv: return 2;
    default: return 3;
  }
}

void print_term_at(const TermPtr& t, int required, std::ostream& os) {
  bool parens = term_prec(*t) < required;
  if (parens) os << "(";
  switch (t->kind) {
    case Term::Kind::Var: os << t->var; break;
    case Term::Kind::One: os << "1"; break;
    case Term::Kind::Prod:
      print_term_at(t->lhs, 1, os);
      os << "*";
      print_term_at(t->rhs, 2, os);
      break;
    case Term::Kind::Inv:
      print_term_at(t->lhs, 2, os);
      os << "'";
      break;
  }
  if (parens) os << ")";
}

void print_formula_at(const FormulaPtr& f, int required, std::ostream& os) {
  int prec = formula_prec(*f);
  bool parens = prec < required;
  if (parens) os << "(";
  switch (f->kind) {
    case Formula::Kind::Eq:
      print_term_at(f->tl, 1, os);
      os << " = ";
      print_term_at(f->tr, 1, os);
      break;
    case Formula::Kind::Not:
      os << "!";
      print_formula_at(f->a, 5, os);
      break;
    case Formula::Kind::And:
      print_formula_at(f->a, 4, os);
      os << " & ";
      print_formula_at(f->b, 5, os);
      break;
    case Formula::Kind::Or:
      print_formula_at(f->a, 3, os);
      os << " | ";
      print_formula_at(f->b, 4, os);
      break;
    case Formula::Kind::Implies:
      print_formula_at(f->a, 2, os);
      os << " -> ";
      print_formula_at(f->b, 3, os);
      break;
    case Formula::Kind::Iff:
      print_formula_at(f->a, 1, os);
      os << " <-> ";
      print_formula_at(f->b, 2, os);
      break;
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists:
      os << (f->kind == Formula::Kind::ForAll ? "forall " : "exists ")
         << f->var << ". ";
      print_formula_at(f->a, 0, os);
      break;
  }
  if (parens) os << ")";
}

}  // namespace

std::string print(const TermPtr& t) {
  std::ostringstream os;
  print_term_at(t, 1, os);
  return os.str();
}

std::string print(const FormulaPtr& f) {
  std::ostringstream os;
  print_formula_at(f, 0, os);
  return os.str();
}

// ---------------------------------------------------------------------------
// Free variables.

namespace {

void term_vars(const TermPtr& t, std::set<std::string>& out) {
  switch (t->kind) {
    case Term::Kind::Var: out.insert(t->var); break;
    case Term::Kind::One: break;
    case Term::Kind::Prod:
      term_vars(t->lhs, out);
      term_vars(t->rhs, out);
      break;
    case Term::Kind::Inv: term_vars(t->lhs, out); break;
  }
}

void free_vars_into(const FormulaPtr& f, std::set<std::string>& bound,
                    std::set<std::string>& out) {
  switch (f->kind) {
    case Formula::Kind::Eq: {
      std::set<std::string> vars;
      term_vars(f->tl, vars);
      term_vars(f->tr, vars);
      for (const auto& v : vars)
        if (!bound.count(v)) out.insert(v);
      break;
    }
    case Formula::Kind::Not:
      free_vars_into(f->a, bound, out);
      break;
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists: {
      bool was_bound = bound.count(f->var) > 0;
      bound.insert(f->var);
      free_vars_into(f->a, bound, out);
      if (!was_bound) bound.erase(f->var);
      break;
    }
    default:
      free_vars_into(f->a, bound, out);
      free_vars_into(f->b, bound, out);
      break;
  }
}

}  // namespace

std::set<std::string> free_vars(const FormulaPtr& f) {
  std::set<std::string> bound, out;
  free_vars_into(f, bound, out);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation. Quantifier nodes are memoized per call, keyed on the values of
// their free variables, so repeated subformulas under outer quantifier loops
// are evaluated once per distinct environment.

namespace {

class Evaluator {
 public:
  Evaluator(const FiniteGroup& g) : g_(g) {}

  bool eval(const FormulaPtr& f, std::map<std::string, int>& env) {
    switch (f->kind) {
      case Formula::Kind::Eq:
        return eval_term(f->tl, env) == eval_term(f->tr, env);
      case Formula::Kind::Not: return !eval(f->a, env);
      case Formula::Kind::And: return eval(f->a, env) && eval(f->b, env);
      case Formula::Kind::Or: return eval(f->a, env) || eval(f->b, env);
      case Formula::Kind::Implies: return !eval(f->a, env) || eval(f->b, env);
      case Formula::Kind::Iff: return eval(f->a, env) == eval(f->b, env);
      case Formula::Kind::ForAll:
      case Formula::Kind::Exists: {
        const auto& fv = node_free_vars(f);
        std::vector<int> key;
        key.reserve(fv.size());
        for (const auto& v : fv) {
          auto it = env.find(v);
          if (it == env.end())
            throw UnboundVariable("unbound variable '" + v + "'");
          key.push_back(it->second);
        }
        auto memo_key = std::make_pair(f.get(), std::move(key));
        auto hit = memo_.find(memo_key);
        if (hit != memo_.end()) return hit->second;

        bool universal = f->kind == Formula::Kind::ForAll;
        bool result = universal;
        auto saved = env.find(f->var) != env.end()
                         ? std::optional<int>(env[f->var])
                         : std::nullopt;
        for (int e = 0; e < g_.order(); ++e) {
          env[f->var] = e;
          bool v = eval(f->a, env);
          if (v != universal) {
            result = !universal;
            break;
          }
        }
        if (saved) env[f->var] = *saved;
        else env.erase(f->var);
        memo_.emplace(std::move(memo_key), result);
        return result;
      }
    }
    return false;
  }

  int eval_term(const TermPtr& t, const std::map<std::string, int>& env) {
    switch (t->kind) {
      case Term::Kind::Var: {
        auto it = env.find(t->var);
        if (it == env.end())
          throw UnboundVariable("unbound variable '" + t->var + "'");
        return it->second;
      }
      case Term::Kind::One: return FiniteGroup::kIdentity;
      case Term::Kind::Prod:
        return g_.mul(eval_term(t->lhs, env), eval_term(t->rhs, env));
      case Term::Kind::Inv: return g_.inv(eval_term(t->lhs, env));
    }
    return FiniteGroup::kIdentity;
  }

 private:
  const std::vector<std::string>& node_free_vars(const FormulaPtr& f) {
    auto it = fv_cache_.find(f.get());
    if (it != fv_cache_.end()) return it->second;
    auto fv = free_vars(f);
    return fv_cache_
        .emplace(f.get(), std::vector<std::string>(fv.begin(), fv.end()))
        .first->second;
  }

  struct KeyHash {
    std::size_t operator()(
        const std::pair<const Formula*, std::vector<int>>& k) const {
      std::size_t h = std::hash<const void*>()(k.first);
      for (int v : k.second) h = h * 1000003u + static_cast<std::size_t>(v);
      return h;
    }
  };

  const FiniteGroup& g_;
  std::unordered_map<std::pair<const Formula*, std::vector<int>>, bool, KeyHash>
      memo_;
  std::unordered_map<const Formula*, std::vector<std::string>> fv_cache_;
};

}  // namespace

bool evaluate(const FiniteGroup& g, const FormulaPtr& f,
              const std::map<std::string, int>& assignment) {
  for (const auto& v : free_vars(f))
    if (!assignment.count(v))
      throw UnboundVariable("no assignment for free variable '" + v + "'");
  for (const auto& [name, e] : assignment)
    if (e < 0 || e >= g.order())
      throw BadElement("assignment for '" + name + "' out of range");
  std::map<std::string, int> env = assignment;
  return Evaluator(g).eval(f, env);
}

ElementSet defined_set(const FiniteGroup& g, const FormulaPtr& f,
                       const std::string& free_var) {
  auto fv = free_vars(f);
  if (fv != std::set<std::string>{free_var})
    throw WrongFreeVariables("formula must have exactly the free variable '" +
                             free_var + "'");
  ElementSet s(g.order());
  Evaluator ev(g);
  std::map<std::string, int> env;
  for (int e = 0; e < g.order(); ++e) {
    env[free_var] = e;
    if (ev.eval(f, env)) s.insert(e);
  }
  return s;
}

// ---------------------------------------------------------------------------
// The closure formulas behind the SI sentence.

namespace {

FormulaPtr build_closure_formula(int num_vars, int cap,
                                 long long max_disjuncts) {
  if (num_vars < 1 || cap < 1)
    throw BadParameter("variable count and complexity cap must be positive");
  long long count = 1, pow = 1;
  for (int n = 1; n <= cap; ++n) {
    pow *= 2LL * num_vars;
    count += pow;
    if (count > max_disjuncts)
      throw FormulaTooLarge(
          "disjunction would have more than " + std::to_string(max_disjuncts) +
          " disjuncts; use the semantic evaluator instead");
  }

  std::vector<TermPtr> uvars;
  for (int i = 0; i < num_vars; ++i) uvars.push_back(t_var("u" + std::to_string(i)));
  TermPtr x = t_var("x"), y = t_var("y");

  FormulaPtr disjunction = f_eq(t_one(), x);  // the empty product
  // Factor sequences by ascending length, lexicographic in (var, + before -).
  std::vector<std::pair<int, int>> seq;
  auto emit = [&]() {
    TermPtr t;
    for (auto [v, s] : seq) {
      TermPtr body = s > 0 ? y : t_inv(y);
      TermPtr factor = t_prod(t_prod(uvars[v], body), t_inv(uvars[v]));
      t = t ? t_prod(t, factor) : factor;
    }
    disjunction = f_or(disjunction, f_eq(t, x));
  };
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      emit();
      return;
    }
    for (int v = 0; v < num_vars; ++v)
      for (int s : {+1, -1}) {
        seq.emplace_back(v, s);
        rec(remaining - 1);
        seq.pop_back();
      }
  };
  for (int n = 1; n <= cap; ++n) rec(n);

  FormulaPtr body = disjunction;
  for (int i = num_vars - 1; i >= 0; --i)
    body = f_exists("u" + std::to_string(i), body);
  return body;
}

// Simultaneous renaming of free variables; throws on capture.
TermPtr rename_term(const TermPtr& t,
                    const std::map<std::string, std::string>& map) {
  switch (t->kind) {
    case Term::Kind::Var: {
      auto it = map.find(t->var);
      return it == map.end() ? t : t_var(it->second);
    }
    case Term::Kind::One: return t;
    case Term::Kind::Prod:
      return t_prod(rename_term(t->lhs, map), rename_term(t->rhs, map));
    case Term::Kind::Inv: return t_inv(rename_term(t->lhs, map));
  }
  return t;
}

FormulaPtr rename_free(const FormulaPtr& f,
                       std::map<std::string, std::string> map) {
  switch (f->kind) {
    case Formula::Kind::Eq:
      return f_eq(rename_term(f->tl, map), rename_term(f->tr, map));
    case Formula::Kind::Not: return f_not(rename_free(f->a, map));
    case Formula::Kind::And: return f_and(rename_free(f->a, map), rename_free(f->b, map));
    case Formula::Kind::Or: return f_or(rename_free(f->a, map), rename_free(f->b, map));
    case Formula::Kind::Implies:
      return f_implies(rename_free(f->a, map), rename_free(f->b, map));
    case Formula::Kind::Iff:
      return f_iff(rename_free(f->a, map), rename_free(f->b, map));
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists: {
      for (const auto& [from, to] : map)
        if (to == f->var)
          throw WrongFreeVariables("renaming would capture variable '" +
                                   f->var + "'");
      map.erase(f->var);
      auto body = rename_free(f->a, std::move(map));
      return f->kind == Formula::Kind::ForAll ? f_forall(f->var, body)
                                              : f_exists(f->var, body);
    }
  }
  return f;
}

}  // namespace

FormulaPtr build_phi(int r, int complexity_cap, long long max_disjuncts) {
  return build_closure_formula(r, complexity_cap, max_disjuncts);
}

FormulaPtr build_psi(int num_vars, int complexity_cap,
                     long long max_disjuncts) {
  return build_closure_formula(num_vars, complexity_cap, max_disjuncts);
}

FormulaPtr build_si_sentence(const FormulaPtr& phi, const FormulaPtr& psi) {
  const std::set<std::string> expected{"x", "y"};
  if (free_vars(phi) != expected || free_vars(psi) != expected)
    throw WrongFreeVariables("phi and psi must have free variables {x, y}");
  FormulaPtr phi_ux = rename_free(phi, {{"x", "u"}, {"y", "x"}});
  FormulaPtr psi_xz = rename_free(psi, {{"y", "z"}});
  FormulaPtr inner = f_exists("x", f_and(phi_ux, psi_xz));
  FormulaPtr all_z =
      f_forall("z", f_implies(f_not(f_eq(t_var("z"), t_one())), inner));
  return f_exists(
      "u", f_and(f_not(f_eq(t_var("u"), t_one())), all_z));
}

bool evaluate_si_semantic(const FiniteGroup& g, int r, int psi_cap) {
  const int n = g.order();
  if (n == 1) return false;
  const int max_cap = std::max(r, psi_cap);

  // depth-limited reachable sets for every base element
  std::vector<ReachabilityTable> rt;
  rt.reserve(n);
  for (int c = 0; c < n; ++c) rt.push_back(reachability(g, c, max_cap));

  auto within = [&](int base, int target, int cap) {
    int d = rt[base].depth[target];
    return d >= 0 && d <= cap;
  };

  ElementSet candidates(n);
  for (int u = 1; u < n; ++u) candidates.insert(u);
  for (int z = 1; z < n; ++z) {
    ElementSet reachable_u(n);
    for (int x = 0; x < n; ++x) {
      if (!within(z, x, psi_cap)) continue;  // psi(x, z)
      for (int u = 1; u < n; ++u)
        if (within(x, u, r)) reachable_u.insert(u);  // phi(u, x)
    }
    candidates &= reachable_u;
  }
  return candidates.count() > 0;
}

}  // namespace monolith::folog

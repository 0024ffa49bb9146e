// Acceptance gate: eight property suites at desk scale, one line of output
// each. Exit status 0 iff every suite passes (including its runtime budget
// where one applies).

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "monolith/construct.hpp"
#include "monolith/families.hpp"
#include "monolith/folog.hpp"
#include "monolith/lattice.hpp"
#include "monolith/witness.hpp"
#include "oracles.hpp"

using namespace monolith;

namespace {

int failures = 0;

void run(int number, const std::string& name, double budget_seconds,
         const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  if (budget_seconds > 0 && secs >= budget_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  if (!ok) ++failures;
  std::printf("criterion %d [%s]: %s (%.2fs%s)%s%s\n", number,
              name.c_str(), ok ? "PASS" : "FAIL", secs,
              budget_seconds > 0
                  ? (" / budget " + std::to_string((int)budget_seconds) + "s").c_str()
                  : "",
              detail.empty() ? "" : " — ", detail.c_str());
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<construct::VarietyMember> sample_for(const std::string& spec,
                                                 long long max_order) {
  construct::SampleLimits lim;
  lim.max_order = max_order;
  return construct::sample_variety_members(named_group(spec),
                                           construct::recipe_named(spec), lim);
}

// Descent bound suite over every SI member of a variety sample.
bool descent_suite(const std::string& spec, long long max_order, int m, int k,
                   std::string& detail) {
  auto sample = sample_for(spec, max_order);
  const long long mk = ipow(m, k);
  long long max_total = 0;
  int si_members = 0;
  for (const auto& mem : sample) {
    if (!mem.analysis.subdirectly_irreducible || mem.group.order() == 1) continue;
    if (!mem.analysis.nilpotency_class) return false;
    ++si_members;
    for (int a = 1; a < mem.group.order(); ++a) {
      WitnessChain chain = descend(mem.group, a, mem.analysis);  // throws on violation
      if (!mem.analysis.monolith->contains(chain.final_element)) return false;
      if (chain.final_element == FiniteGroup::kIdentity) return false;
      for (const auto& s : chain.steps)
        if (s.term.complexity() > m) return false;
      if (chain.total_complexity > mk) return false;
      max_total = std::max(max_total, chain.total_complexity);
    }
  }
  detail = std::to_string(si_members) + " SI members, max total complexity " +
           std::to_string(max_total) + " <= " + std::to_string(mk);
  return si_members > 0;
}

}  // namespace

int main() {
  run(1, "structure golden suite", 5.0, [](std::string& detail) {
    Analysis q = analyze(quaternion_group());
    bool ok = q.subdirectly_irreducible && q.monolith_size == 2 &&
              q.nilpotency_class == 2 && q.exponent == 4 && q.normals.size() == 6;
    Analysis d4 = analyze(dihedral_group(4));
    ok = ok && d4.subdirectly_irreducible && d4.monolith_size == 2;
    Analysis h3 = analyze(heisenberg_group(3));
    ok = ok && h3.subdirectly_irreducible && h3.monolith_size == 3 &&
         h3.nilpotency_class == 2 && h3.exponent == 3;
    Analysis c6 = analyze(cyclic_group(6));
    ok = ok && !c6.subdirectly_irreducible &&
         c6.atom_sizes == std::vector<int>{2, 3};
    Analysis v4 = analyze(direct_product(cyclic_group(2), cyclic_group(2)));
    ok = ok && !v4.subdirectly_irreducible && v4.atom_sizes.size() == 3;
    // cross-check every lattice against the brute-force oracle
    for (const char* spec :
         {"quaternion", "dihedral:4", "heisenberg:3", "cyclic:6",
          "product:(cyclic:2,cyclic:2)"}) {
      FiniteGroup g = named_group(spec);
      auto got = normal_subgroups(g);
      auto want = oracles::normal_subgroups(g);
      if (got.size() != want.size()) return false;
      for (std::size_t i = 0; i < got.size(); ++i)
        if (!(got[i] == want[i])) return false;
    }
    detail = "5 groups, values oracle-checked";
    return ok;
  });

  run(2, "descent bound suite", 120.0, [](std::string& detail) {
    std::string dq, dh;
    bool ok = descent_suite("quaternion", 64, 4, 2, dq) &&
              descent_suite("heisenberg:3", 243, 3, 2, dh);
    detail = "quaternion: " + dq + "; heisenberg: " + dh;
    return ok;
  });

  run(3, "atom witness bound suite", 0.0, [](std::string& detail) {
    int atoms_checked = 0;
    for (const char* spec : {"quaternion", "heisenberg:3", "dihedral:4"}) {
      for (const auto& mem : sample_for(spec, spec[0] == 'h' ? 243 : 64)) {
        for (const auto& atom : atoms(mem.group, mem.analysis.normals)) {
          int c = atom.elements()[atom.elements()[0] == 0 ? 1 : 0];
          auto rep = atom_bound_check(mem.group, c, atom.count());
          if (!rep.pass) return false;
          if (rep.atom_size > mem.group.order()) return false;
          ++atoms_checked;
        }
      }
    }
    detail = std::to_string(atoms_checked) + " atoms exhaustively witnessed";
    return true;
  });

  run(4, "semantic SI equivalence over varieties", 0.0, [](std::string& detail) {
    int members = 0;
    bool si_seen = false, non_si_seen = false;
    struct Cfg { const char* spec; long long cap; int m, k; };
    for (auto [spec, cap, m, k] : {Cfg{"quaternion", 64, 4, 2},
                                   Cfg{"heisenberg:3", 243, 3, 2}}) {
      auto sample = sample_for(spec, cap);
      int r = 1;
      for (const auto& mem : sample)
        for (int cf : mem.analysis.chief_factors) r = std::max(r, cf);
      const int psi_cap = (int)ipow(m, k);
      for (const auto& mem : sample) {
        bool semantic = folog::evaluate_si_semantic(mem.group, r, psi_cap);
        if (semantic != mem.analysis.subdirectly_irreducible) return false;
        (mem.analysis.subdirectly_irreducible ? si_seen : non_si_seen) = true;
        ++members;
      }
    }
    detail = std::to_string(members) + " members, both SI directions covered";
    return si_seen && non_si_seen;
  });

  run(5, "syntactic vs semantic sentence", 0.0, [](std::string& detail) {
    auto sentence = folog::build_si_sentence(folog::build_phi(2, 2),
                                             folog::build_psi(2, 2));
    int groups = 0;
    for (const char* spec :
         {"cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:6", "cyclic:8",
          "cyclic:12", "cyclic:16", "product:(cyclic:2,cyclic:2)",
          "product:(cyclic:2,cyclic:4)", "product:(cyclic:2,cyclic:8)",
          "quaternion", "dihedral:3", "dihedral:4", "dihedral:6", "dihedral:8",
          "symmetric:3", "product:(quaternion,cyclic:2)"}) {
      FiniteGroup g = named_group(spec);
      if (g.order() > 16) return false;
      if (folog::evaluate(g, sentence, {}) != folog::evaluate_si_semantic(g, 2, 2))
        return false;
      ++groups;
    }
    detail = std::to_string(groups) + " groups of order <= 16";
    return true;
  });

  run(6, "oracle equivalences", 0.0, [](std::string& detail) {
    // normal closure vs intersection of containing normals, order <= 64
    for (const char* spec :
         {"cyclic:6", "quaternion", "dihedral:4", "heisenberg:3", "symmetric:4",
          "product:(quaternion,cyclic:3)", "dihedral:16",
          "product:(cyclic:4,cyclic:4)"}) {
      FiniteGroup g = named_group(spec);
      if (g.order() > 64) return false;
      for (int a = 0; a < g.order(); ++a)
        if (!(normal_closure(g, a) == oracles::normal_closure(g, a))) return false;
    }
    // witness BFS vs depth-limited enumeration, order <= 27
    for (const char* spec : {"quaternion", "dihedral:4", "cyclic:6", "symmetric:3",
                             "heisenberg:3", "dihedral:6"}) {
      FiniteGroup g = named_group(spec);
      if (g.order() > 27) return false;
      const int cap = g.order() > 12 ? 2 : 3;
      for (int c = 0; c < g.order(); ++c) {
        auto table = reachability(g, c, cap);
        for (int t = 0; t < g.order(); ++t) {
          auto want = oracles::min_witness_complexity(g, t, c, cap);
          if ((table.depth[t] >= 0) != want.has_value()) return false;
          if (want && table.depth[t] != *want) return false;
        }
      }
    }
    // class identity vs central-series class for k <= 4
    for (const char* spec : {"cyclic:6", "quaternion", "dihedral:4", "dihedral:8",
                             "heisenberg:3", "symmetric:3"}) {
      FiniteGroup g = named_group(spec);
      auto cls = upper_central_series(g).nilpotency_class;
      for (int k = 0; k <= 4; ++k)
        if (verify_class_identity(g, k) != (cls.has_value() && *cls <= k))
          return false;
    }
    detail = "closure, witness and class oracles all agree";
    return true;
  });

  run(7, "formula round-trip and metamorphic suite", 60.0, [](std::string& detail) {
    using namespace folog;
    std::mt19937 rng(424242);
    std::vector<std::string> vars{"x", "y", "z", "w"};
    auto pick = [&](int n) {
      return std::uniform_int_distribution<int>(0, n - 1)(rng);
    };
    std::function<TermPtr(int)> term = [&](int d) -> TermPtr {
      switch (d == 0 ? pick(2) : pick(4)) {
        case 0: return t_var(vars[pick(4)]);
        case 1: return t_one();
        case 2: return t_prod(term(d - 1), term(d - 1));
        default: return t_inv(term(d - 1));
      }
    };
    std::function<FormulaPtr(int)> formula = [&](int d) -> FormulaPtr {
      if (d == 0) return f_eq(term(2), term(2));
      switch (pick(7)) {
        case 0: return f_eq(term(d), term(d));
        case 1: return f_not(formula(d - 1));
        case 2: return f_and(formula(d - 1), formula(d - 1));
        case 3: return f_or(formula(d - 1), formula(d - 1));
        case 4: return f_implies(formula(d - 1), formula(d - 1));
        case 5: return f_iff(formula(d - 1), formula(d - 1));
        default: return pick(2) ? f_forall(vars[pick(4)], formula(d - 1))
                                : f_exists(vars[pick(4)], formula(d - 1));
      }
    };
    std::function<bool(const TermPtr&, const TermPtr&)> tsame =
        [&](const TermPtr& a, const TermPtr& b) -> bool {
      if (a->kind != b->kind) return false;
      switch (a->kind) {
        case Term::Kind::Var: return a->var == b->var;
        case Term::Kind::One: return true;
        case Term::Kind::Prod: return tsame(a->lhs, b->lhs) && tsame(a->rhs, b->rhs);
        case Term::Kind::Inv: return tsame(a->lhs, b->lhs);
      }
      return false;
    };
    std::function<bool(const FormulaPtr&, const FormulaPtr&)> fsame =
        [&](const FormulaPtr& a, const FormulaPtr& b) -> bool {
      if (a->kind != b->kind) return false;
      switch (a->kind) {
        case Formula::Kind::Eq: return tsame(a->tl, b->tl) && tsame(a->tr, b->tr);
        case Formula::Kind::Not: return fsame(a->a, b->a);
        case Formula::Kind::ForAll:
        case Formula::Kind::Exists: return a->var == b->var && fsame(a->a, b->a);
        default: return fsame(a->a, b->a) && fsame(a->b, b->b);
      }
    };

    for (int i = 0; i < 1000; ++i) {
      FormulaPtr f = formula(4);
      std::string text = print(f);
      if (!fsame(f, parse(text))) return false;
      if (print(parse(text)) != text) return false;
    }

    std::vector<FiniteGroup> groups;
    for (const char* spec : {"cyclic:5", "symmetric:3", "quaternion",
                             "dihedral:3", "product:(cyclic:2,cyclic:2)"})
      groups.push_back(named_group(spec));
    int rewrites = 0;
    for (int i = 0; i < 40; ++i) {
      FormulaPtr a = formula(2), b = formula(2);
      std::string v = vars[pick(4)];
      std::vector<std::pair<FormulaPtr, FormulaPtr>> laws = {
          {f_not(f_and(a, b)), f_or(f_not(a), f_not(b))},
          {f_not(f_or(a, b)), f_and(f_not(a), f_not(b))},
          {f_not(f_forall(v, a)), f_exists(v, f_not(a))},
          {f_not(f_exists(v, a)), f_forall(v, f_not(a))},
      };
      for (auto& [lhs, rhs] : laws) {
        std::map<std::string, int> env;
        for (const auto& name : free_vars(f_and(lhs, rhs))) env[name] = 0;
        for (const auto& g : groups) {
          if (evaluate(g, lhs, env) != evaluate(g, rhs, env)) return false;
          ++rewrites;
        }
      }
    }
    detail = "1000 round trips, " + std::to_string(rewrites) + " rewrite checks";
    return true;
  });

  run(8, "variety law suite", 0.0, [](std::string& detail) {
    int members = 0;
    struct Cfg { const char* spec; long long cap; };
    for (auto [spec, cap] : {Cfg{"quaternion", 64}, Cfg{"heisenberg:3", 243},
                             Cfg{"dihedral:4", 64}}) {
      FiniteGroup g = named_group(spec);
      int base_exp = g.exponent();
      int base_class = *upper_central_series(g).nilpotency_class;
      for (const auto& mem : sample_for(spec, cap)) {
        if (base_exp % mem.analysis.exponent != 0) return false;
        if (!mem.analysis.nilpotency_class) return false;
        if (*mem.analysis.nilpotency_class > base_class) return false;
        ++members;
      }
    }
    detail = std::to_string(members) + " members satisfy exponent and class laws";
    return true;
  });

  return failures == 0 ? 0 : 1;
}

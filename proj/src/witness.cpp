#include "monolith/witness.hpp"

#include <algorithm>
#include <sstream>

#include "monolith/errors.hpp"

namespace monolith {

bool ConjugateProductTerm::has_mixed_signs() const {
  bool pos = false, neg = false;
  for (const auto& f : factors) (f.sign > 0 ? pos : neg) = true;
  return pos && neg;
}

int ConjugateProductTerm::slot_count() const {
  int m = 0;
  for (const auto& f : factors) m = std::max(m, f.slot + 1);
  return m;
}

std::string ConjugateProductTerm::pretty() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << " . ";
    os << "u" << factors[i].slot << (factors[i].sign > 0 ? " x " : " x^-1 ")
       << "u" << factors[i].slot << "^-1";
  }
  return os.str();
}

int evaluate_term(const FiniteGroup& g, const ConjugateProductTerm& term,
                  int x, const std::vector<int>& params) {
  int acc = FiniteGroup::kIdentity;
  for (const auto& f : term.factors) {
    if (f.slot >= static_cast<int>(params.size()))
      throw MissingParameter("no parameter for slot " + std::to_string(f.slot));
    int body = f.sign > 0 ? x : g.inv(x);
    acc = g.mul(acc, g.conjugate(params[f.slot], body));
  }
  return acc;
}

ElementSet ReachabilityTable::reachable_set() const {
  ElementSet s(static_cast<int>(depth.size()));
  for (std::size_t e = 0; e < depth.size(); ++e)
    if (depth[e] >= 0) s.insert(static_cast<int>(e));
  return s;
}

ReachabilityTable reachability(const FiniteGroup& g, int c,
                               int max_complexity) {
  const int n = g.order();
  ReachabilityTable t;
  t.base = c;
  t.depth.assign(n, -1);
  t.parent.assign(n, -1);
  t.via_param.assign(n, -1);
  t.via_sign.assign(n, 0);

  // One edge per distinct conjugate value, keeping the first (h, sign) in
  // h-ascending, +-before-- order so parent choices are deterministic.
  struct Edge {
    int value, param, sign;
  };
  std::vector<Edge> edges;
  {
    std::vector<bool> seen(n, false);
    int cinv = g.inv(c);
    for (int h = 0; h < n; ++h)
      for (int sign : {+1, -1}) {
        int v = g.conjugate(h, sign > 0 ? c : cinv);
        if (!seen[v]) {
          seen[v] = true;
          edges.push_back({v, h, sign});
        }
      }
  }

  t.depth[FiniteGroup::kIdentity] = 0;
  std::vector<int> frontier{FiniteGroup::kIdentity};
  for (int d = 1; d <= max_complexity && !frontier.empty(); ++d) {
    std::vector<int> next;
    for (int s : frontier)
      for (const Edge& e : edges) {
        int to = g.mul(s, e.value);
        if (t.depth[to] < 0) {
          t.depth[to] = d;
          t.parent[to] = s;
          t.via_param[to] = e.param;
          t.via_sign[to] = e.sign;
          next.push_back(to);
        }
      }
    frontier = std::move(next);
  }
  return t;
}

std::optional<Witness> minimal_witness(const FiniteGroup& g, int target, int c,
                                       int max_complexity) {
  ReachabilityTable t = reachability(g, c, max_complexity);
  if (!t.reached(target)) return std::nullopt;
  Witness w;
  std::vector<std::pair<int, int>> path;  // (param, sign), target-first
  for (int e = target; e != FiniteGroup::kIdentity; e = t.parent[e])
    path.emplace_back(t.via_param[e], t.via_sign[e]);
  std::reverse(path.begin(), path.end());
  for (std::size_t i = 0; i < path.size(); ++i) {
    w.term.factors.push_back({static_cast<int>(i), path[i].second});
    w.params.push_back(path[i].first);
  }
  // Soundness: a returned witness always re-evaluates to its target.
  if (evaluate_term(g, w.term, c, w.params) != target)
    throw BoundViolation("witness reconstruction failed to re-evaluate");
  return w;
}

namespace {

long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

std::pair<ConjugateProductTerm, std::vector<int>> compose_chain(
    const FiniteGroup& g, const WitnessChain& chain) {
  if (chain.steps.empty()) {
    // The identity-conjugation term of complexity 1, evaluating a to a.
    ConjugateProductTerm t;
    t.factors.push_back({0, +1});
    return {t, {FiniteGroup::kIdentity}};
  }
  ConjugateProductTerm term = chain.steps.front().term;
  std::vector<int> params = chain.steps.front().params;
  for (std::size_t s = 1; s < chain.steps.size(); ++s) {
    const auto& outer = chain.steps[s];
    ConjugateProductTerm composed;
    std::vector<int> new_params;
    for (const auto& of : outer.term.factors) {
      int p = outer.params[of.slot];
      if (of.sign > 0) {
        for (const auto& inf : term.factors) {
          composed.factors.push_back(
              {static_cast<int>(new_params.size()), inf.sign});
          new_params.push_back(g.mul(p, params[inf.slot]));
        }
      } else {
        for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it) {
          composed.factors.push_back(
              {static_cast<int>(new_params.size()), -it->sign});
          new_params.push_back(g.mul(p, params[it->slot]));
        }
      }
    }
    term = std::move(composed);
    params = std::move(new_params);
  }
  return {term, params};
}

WitnessChain descend(const FiniteGroup& g, int a) {
  return descend(g, a, analyze(g));
}

WitnessChain descend(const FiniteGroup& g, int a, const Analysis& analysis) {
  if (a == FiniteGroup::kIdentity)
    throw IdentityInput("descend requires a nonidentity start element");
  if (!analysis.nilpotency_class)
    throw NotNilpotent("descend requires a nilpotent group");
  if (!analysis.subdirectly_irreducible || !analysis.monolith)
    throw NotSubdirectlyIrreducible(
        "descend requires a subdirectly irreducible group");

  const ElementSet& mono = *analysis.monolith;
  CentralSeries cs = upper_central_series(g);
  const int m = g.exponent();
  const int k = *analysis.nilpotency_class;

  WitnessChain chain;
  chain.start = a;
  chain.step_bound = m;
  chain.total_bound = ipow(m, k);

  auto least_level = [&](int x) {
    for (std::size_t i = 0; i < cs.levels.size(); ++i)
      if (cs.levels[i].contains(x)) return static_cast<int>(i);
    return static_cast<int>(cs.levels.size());  // unreachable for nilpotent g
  };

  int current = a;
  int level = least_level(a);
  while (!mono.contains(current)) {
    // Candidates one level down; the monolith itself at the last step.
    const ElementSet& targets =
        level - 1 >= 1 ? cs.levels[level - 1] : mono;
    ReachabilityTable reach = reachability(g, current, g.order());
    int best = -1, best_depth = -1;
    for (int e = 1; e < g.order(); ++e) {
      if (!targets.contains(e) || !reach.reached(e)) continue;
      int d = reach.depth[e];
      if (best < 0 || d < best_depth) {
        best = e;
        best_depth = d;
      }
    }
    if (best < 0)
      throw NotSubdirectlyIrreducible(
          "no candidate reachable below the current central-series level");
    if (best_depth > m) {
      std::ostringstream os;
      os << "descent step exceeds the exponent bound: group hash "
         << g.content_hash() << " order " << g.order() << " start " << a
         << " source " << current << " level " << level << " target " << best
         << " complexity " << best_depth << " bound m=" << m;
      throw BoundViolation(os.str());
    }
    Witness w = *minimal_witness(g, best, current, best_depth);
    if (w.term.has_mixed_signs() && w.term.complexity() != 2) {
      std::ostringstream os;
      os << "minimal mixed-sign step of complexity " << w.term.complexity()
         << " (expected 2) from " << current << " to " << best;
      chain.findings.push_back(os.str());
    }
    WitnessStep step;
    step.level = least_level(best);
    step.source = current;
    step.target = best;
    step.term = std::move(w.term);
    step.params = std::move(w.params);
    chain.steps.push_back(std::move(step));
    current = best;
    level = chain.steps.back().level;
  }
  chain.final_element = current;

  auto [composed, composed_params] = compose_chain(g, chain);
  long long total = 1;
  for (const auto& s : chain.steps) total *= s.term.complexity();
  if (!chain.steps.empty() &&
      composed.complexity() != total)
    throw BoundViolation("composed complexity is not the step product");
  if (evaluate_term(g, composed, a, composed_params) != chain.final_element)
    throw BoundViolation("composed polynomial does not reproduce the chain");
  if (total > chain.total_bound) {
    std::ostringstream os;
    os << "total composed complexity " << total << " exceeds m^k = "
       << chain.total_bound << " on group hash " << g.content_hash();
    throw BoundViolation(os.str());
  }
  chain.composed_term = std::move(composed);
  chain.composed_params = std::move(composed_params);
  chain.total_complexity = total;
  return chain;
}

AtomBoundReport atom_bound_check(const FiniteGroup& g, int c, int r) {
  ElementSet closure = normal_closure(g, c);
  bool is_atom = false;
  for (const auto& at : atoms(g))
    if (at == closure) {
      is_atom = true;
      break;
    }
  if (!is_atom)
    throw NotAnAtom("the normal closure of element " + std::to_string(c) +
                    " is not an atom");

  AtomBoundReport report;
  report.atom_size = closure.count();
  report.bound = r;
  ReachabilityTable reach = reachability(g, c, closure.count());
  for (int e : closure.elements()) {
    int d = reach.depth[e];
    report.complexities.emplace_back(e, d);
    report.max_complexity = std::max(report.max_complexity, d);
  }
  report.pass = report.max_complexity <= r;
  return report;
}

}  // namespace monolith

#include "monolith/lattice.hpp"

#include <algorithm>
#include <set>

#include "monolith/errors.hpp"

namespace monolith {

namespace {

// Subgroup generated by `gens`, as a bitset. When the generating set is
// closed under conjugation the result is normal.
ElementSet subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens) {
  ElementSet s(g.order());
  s.insert(FiniteGroup::kIdentity);
  std::vector<int> frontier{FiniteGroup::kIdentity};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int e : frontier)
      for (int x : gens) {
        int p = g.mul(e, x);
        if (s.insert(p)) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return s;
}

}  // namespace

ElementSet normal_closure(const FiniteGroup& g, const std::vector<int>& xs) {
  std::vector<int> gens;
  ElementSet seen(g.order());
  for (int x : xs)
    for (int h = 0; h < g.order(); ++h)
      for (int v : {g.conjugate(h, x), g.conjugate(h, g.inv(x))})
        if (seen.insert(v)) gens.push_back(v);
  return subgroup_closure(g, gens);
}

std::vector<ElementSet> normal_subgroups(const FiniteGroup& g,
                                         std::size_t cap) {
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<ElementSet> found;
  auto add = [&](const ElementSet& s) {
    if (seen.insert(s.words()).second) {
      found.push_back(s);
      if (found.size() > cap)
        throw SizeLimitExceeded("normal subgroup lattice exceeds cap of " +
                                std::to_string(cap));
      return true;
    }
    return false;
  };

  add(ElementSet::singleton(g.order(), FiniteGroup::kIdentity));
  // Conjugate elements share a principal closure, so one representative per
  // conjugacy class suffices.
  ElementSet visited(g.order());
  for (int a = 0; a < g.order(); ++a) {
    if (visited.contains(a)) continue;
    for (int h = 0; h < g.order(); ++h) visited.insert(g.conjugate(h, a));
    add(normal_closure(g, a));
  }

  // Join-closure: the join of two normal subgroups is their product set.
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (found[j].is_subset_of(found[i]) || found[i].is_subset_of(found[j]))
        continue;
      ElementSet join(g.order());
      for (int a : found[i].elements())
        for (int b : found[j].elements()) join.insert(g.mul(a, b));
      add(join);
    }

  std::sort(found.begin(), found.end(),
            [](const ElementSet& a, const ElementSet& b) { return a.lex_less(b); });
  return found;
}

std::vector<ElementSet> atoms(const FiniteGroup&,
                              const std::vector<ElementSet>& lattice) {
  std::vector<ElementSet> result;
  for (const auto& n : lattice) {
    if (n.count() == 1) continue;
    bool minimal = true;
    for (const auto& m : lattice)
      if (m.count() > 1 && m != n && m.is_subset_of(n)) {
        minimal = false;
        break;
      }
    if (minimal) result.push_back(n);
  }
  return result;
}

std::vector<ElementSet> atoms(const FiniteGroup& g) {
  return atoms(g, normal_subgroups(g));
}

std::optional<ElementSet> monolith(const FiniteGroup& g) {
  auto a = atoms(g);
  if (a.size() == 1) return a.front();
  return std::nullopt;
}

bool is_subdirectly_irreducible(const FiniteGroup& g) {
  return atoms(g).size() == 1;
}

ElementSet center(const FiniteGroup& g) {
  ElementSet z(g.order());
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int y = 0; y < g.order() && central; ++y)
      central = g.mul(x, y) == g.mul(y, x);
    if (central) z.insert(x);
  }
  return z;
}

CentralSeries upper_central_series(const FiniteGroup& g) {
  CentralSeries cs;
  cs.levels.push_back(ElementSet::singleton(g.order(), FiniteGroup::kIdentity));
  for (;;) {
    const ElementSet& prev = cs.levels.back();
    ElementSet next(g.order());
    for (int x = 0; x < g.order(); ++x) {
      bool in = true;
      for (int y = 0; y < g.order() && in; ++y)
        in = prev.contains(g.commutator(x, y));
      if (in) next.insert(x);
    }
    if (next == prev) {
      cs.stabilized = true;
      break;
    }
    cs.levels.push_back(next);
    if (next.count() == g.order()) {
      cs.stabilized = true;
      break;
    }
  }
  if (cs.levels.back().count() == g.order())
    cs.nilpotency_class = static_cast<int>(cs.levels.size()) - 1;
  return cs;
}

bool verify_class_identity(const FiniteGroup& g, int k, long long eval_cap) {
  if (k < 0) throw BadParameter("class parameter must be nonnegative");
  // V_i = distinct values of left-normed commutators in i variables.
  ElementSet values(g.order());
  std::vector<int> vals;
  for (int x = 0; x < g.order(); ++x) {
    values.insert(x);
    vals.push_back(x);
  }
  long long evals = 0;
  for (int step = 0; step < k; ++step) {
    evals += static_cast<long long>(vals.size()) * g.order();
    if (evals > eval_cap)
      throw SizeLimitExceeded("commutator identity check exceeds eval cap");
    ElementSet next_set(g.order());
    std::vector<int> next;
    for (int v : vals)
      for (int y = 0; y < g.order(); ++y) {
        int c = g.commutator(v, y);
        if (c != FiniteGroup::kIdentity && next_set.insert(c)) next.push_back(c);
      }
    vals = std::move(next);
    if (vals.empty()) return true;
  }
  // After k steps only nontrivial values survive, except that the initial
  // set (k = 0) still carries the identity.
  for (int v : vals)
    if (v != FiniteGroup::kIdentity) return false;
  return true;
}

bool is_nilpotent_sylow_check(const FiniteGroup& g) {
  std::vector<int> primes;
  int n = g.order();
  for (int p = 2; p <= n; ++p)
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  for (int p : primes) {
    ElementSet pset(g.order());
    std::vector<int> members;
    for (int x = 0; x < g.order(); ++x) {
      int o = g.element_order(x);
      while (o % p == 0) o /= p;
      if (o == 1) {
        pset.insert(x);
        members.push_back(x);
      }
    }
    for (int a : members)
      for (int b : members)
        if (!pset.contains(g.mul(a, b))) return false;
  }
  return true;
}

std::vector<int> chief_factor_sizes(const FiniteGroup&,
                                    const std::vector<ElementSet>& lattice) {
  std::vector<int> sizes;
  for (const auto& k : lattice)
    for (const auto& h : lattice) {
      if (k == h || !k.is_subset_of(h)) continue;
      bool covering = true;
      for (const auto& n : lattice) {
        if (n == k || n == h) continue;
        if (k.is_subset_of(n) && n.is_subset_of(h)) {
          covering = false;
          break;
        }
      }
      if (covering) sizes.push_back(h.count() / k.count());
    }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<int> chief_factor_sizes(const FiniteGroup& g) {
  return chief_factor_sizes(g, normal_subgroups(g));
}

Analysis analyze(const FiniteGroup& g) {
  Analysis a;
  a.order = g.order();
  a.exponent = g.exponent();
  CentralSeries cs = upper_central_series(g);
  a.nilpotency_class = cs.nilpotency_class;
  for (const auto& z : cs.levels) a.upper_central_sizes.push_back(z.count());
  a.center_size = cs.levels.size() > 1 ? cs.levels[1].count()
                                       : cs.levels[0].count();
  if (g.order() == 1) a.center_size = 1;
  a.normals = normal_subgroups(g);
  for (const auto& at : atoms(g, a.normals)) a.atom_sizes.push_back(at.count());
  std::sort(a.atom_sizes.begin(), a.atom_sizes.end());
  if (a.atom_sizes.size() == 1) {
    auto mono = atoms(g, a.normals).front();
    a.monolith = mono;
    a.monolith_size = mono.count();
  }
  a.chief_factors = chief_factor_sizes(g, a.normals);
  a.subdirectly_irreducible = a.atom_sizes.size() == 1;
  return a;
}

}  // namespace monolith

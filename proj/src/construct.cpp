#include "monolith/construct.hpp"

#include <algorithm>
#include <set>

#include "monolith/errors.hpp"
#include "monolith/families.hpp"
#include "monolith/io.hpp"

namespace monolith::construct {

FiniteGroup direct_power(const FiniteGroup& g, int n, long long order_cap) {
  if (n < 1) throw BadParameter("power must be positive");
  long long order = 1;
  for (int i = 0; i < n; ++i) {
    order *= g.order();
    if (order > order_cap)
      throw SizeLimitExceeded("direct power order exceeds cap of " +
                              std::to_string(order_cap));
  }
  FiniteGroup result = g;
  for (int i = 1; i < n; ++i) result = direct_product(result, g);
  return result;
}

SubgroupResult subgroup_generated(const FiniteGroup& g,
                                  const std::vector<int>& gens) {
  for (int x : gens)
    if (x < 0 || x >= g.order()) throw BadElement("generator out of range");

  std::vector<int> elems{FiniteGroup::kIdentity};
  std::vector<int> local(g.order(), -1);
  local[FiniteGroup::kIdentity] = 0;
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (int x : gens) {
      int p = g.mul(elems[head], x);
      if (local[p] < 0) {
        local[p] = static_cast<int>(elems.size());
        elems.push_back(p);
      }
    }

  const int s = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(s, std::vector<int>(s));
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b) table[a][b] = local[g.mul(elems[a], elems[b])];
  return {FiniteGroup::from_table(table), std::move(elems)};
}

QuotientResult quotient(const FiniteGroup& g, const ElementSet& n) {
  if (n.universe() != g.order() || !n.contains(FiniteGroup::kIdentity))
    throw NotNormal("kernel is not a subgroup of this group");
  auto members = n.elements();
  for (int a : members) {
    for (int b : members)
      if (!n.contains(g.mul(a, b)))
        throw NotNormal("kernel is not closed under multiplication");
    for (int h = 0; h < g.order(); ++h)
      if (!n.contains(g.conjugate(h, a)))
        throw NotNormal("kernel is not normal: conjugation escapes it");
  }

  std::vector<int> coset(g.order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (coset[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int m : members) coset[g.mul(x, m)] = id;
  }
  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) table[a][b] = coset[g.mul(reps[a], reps[b])];
  return {FiniteGroup::from_table(table), std::move(coset)};
}

nlohmann::json recipe_named(const std::string& family_spec) {
  return {{"op", "named"},
          {"spec", family_spec},
          {"hash", named_group(family_spec).content_hash()}};
}

nlohmann::json recipe_table(const FiniteGroup& g) {
  nlohmann::json r = {{"op", "table"}, {"hash", g.content_hash()}};
  r["group"] = io::group_to_json(g);
  return r;
}

FiniteGroup replay(const nlohmann::json& recipe) {
  std::string op = recipe.at("op").get<std::string>();
  FiniteGroup g = [&] {
    if (op == "named") return named_group(recipe.at("spec").get<std::string>());
    if (op == "table") return io::group_from_json(recipe.at("group"));
    if (op == "power")
      return direct_power(replay(recipe.at("of")), recipe.at("n").get<int>());
    if (op == "subgroup")
      return subgroup_generated(replay(recipe.at("of")),
                                recipe.at("gens").get<std::vector<int>>())
          .group;
    if (op == "quotient") {
      FiniteGroup ambient = replay(recipe.at("of"));
      ElementSet kernel(ambient.order());
      for (int e : recipe.at("kernel").get<std::vector<int>>()) kernel.insert(e);
      return quotient(ambient, kernel).group;
    }
    throw BadParameter("unknown recipe op '" + op + "'");
  }();
  if (recipe.contains("hash") &&
      recipe.at("hash").get<std::string>() != g.content_hash())
    throw BadParameter("replayed group hash mismatch for op '" + op + "'");
  return g;
}

namespace {

std::string fingerprint(const Analysis& a) {
  nlohmann::json f = {
      {"order", a.order},
      {"exponent", a.exponent},
      {"class", a.nilpotency_class ? nlohmann::json(*a.nilpotency_class)
                                   : nlohmann::json()},
      {"center", a.center_size},
      {"ucs", a.upper_central_sizes},
      {"normals", a.normals.size()},
      {"atoms", a.atom_sizes},
      {"monolith", a.monolith_size ? nlohmann::json(*a.monolith_size)
                                   : nlohmann::json()},
      {"chief", a.chief_factors},
  };
  return f.dump();
}

}  // namespace

std::vector<VarietyMember> sample_variety_members(
    const FiniteGroup& g, const nlohmann::json& base_recipe,
    const SampleLimits& limits) {
  std::vector<VarietyMember> members;
  std::set<std::string> seen;

  auto full = [&] {
    return static_cast<int>(members.size()) >= limits.max_members;
  };
  // Returns the member index, or -1 when skipped.
  auto add = [&](FiniteGroup group, nlohmann::json recipe) -> int {
    if (full() || group.order() > limits.max_order) return -1;
    Analysis a = analyze(group);
    if (!seen.insert(fingerprint(a)).second) return -1;
    members.push_back({std::move(group), std::move(recipe), std::move(a)});
    return static_cast<int>(members.size()) - 1;
  };

  auto add_with_quotients = [&](const FiniteGroup& group,
                                const nlohmann::json& recipe) {
    int idx = add(group, recipe);
    if (idx < 0) return;
    // quotients by every nontrivial normal subgroup, deterministic lattice
    // order (the trivial kernel only reproduces the group itself)
    for (const auto& n : members[idx].analysis.normals) {
      if (full()) return;
      if (n.count() == 1) continue;
      auto q = quotient(group, n);
      nlohmann::json qr = {
          {"op", "quotient"}, {"kernel", n.elements()}, {"of", recipe}};
      add(std::move(q.group), std::move(qr));
    }
  };

  add_with_quotients(g, base_recipe);

  for (int power = 2; power <= limits.max_power && !full(); ++power) {
    long long order = 1;
    for (int i = 0; i < power; ++i) order *= g.order();
    if (order > 50000) break;  // tuple enumeration would be impractical
    FiniteGroup p = direct_power(g, power);
    nlohmann::json pr = {{"op", "power"}, {"n", power}, {"of", base_recipe}};
    add_with_quotients(p, pr);

    std::set<std::vector<std::uint64_t>> seen_sets;
    int tuples_tried = 0;
    auto budget = [&] { return full() || tuples_tried >= limits.max_tuples; };
    auto try_tuple = [&](const std::vector<int>& gens) {
      ++tuples_tried;
      // cheap closure first; build the table only for new, in-cap subgroups
      ElementSet closure(p.order());
      closure.insert(FiniteGroup::kIdentity);
      std::vector<int> frontier{FiniteGroup::kIdentity};
      while (!frontier.empty()) {
        std::vector<int> next;
        for (int e : frontier)
          for (int x : gens) {
            int v = p.mul(e, x);
            if (closure.insert(v)) next.push_back(v);
          }
        frontier = std::move(next);
      }
      if (closure.count() > limits.max_order) return;
      if (!seen_sets.insert(closure.words()).second) return;
      auto sub = subgroup_generated(p, gens);
      nlohmann::json sr = {{"op", "subgroup"}, {"gens", gens}, {"of", pr}};
      add_with_quotients(sub.group, sr);
    };

    for (int a = 1; a < p.order() && !budget(); ++a) try_tuple({a});
    for (int a = 1; a < p.order() && !budget(); ++a)
      for (int b = a + 1; b < p.order() && !budget(); ++b) try_tuple({a, b});
  }

  return members;
}

}  // namespace monolith::construct

#include "monolith/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "monolith/errors.hpp"

namespace monolith::io {

FiniteGroup group_from_json(const nlohmann::json& j, LoadReport* report) {
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw BadGroupFile("group file needs 'order' and 'table'");
  int order = j.at("order").get<int>();
  auto table = j.at("table").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(table.size()) != order)
    throw BadGroupFile("table size does not match order");
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();

  // Detect whether index 0 is already the identity; from_table renumbers
  // otherwise and we report that.
  int id = -1;
  for (int e = 0; e < order && id < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < order && ok; ++a)
      ok = table[e][a] == a && table[a][e] == a;
    if (ok) id = e;
  }
  FiniteGroup g = FiniteGroup::from_table(table, std::move(names));
  if (report) {
    report->renumbered = id > 0;
    if (id > 0) {
      report->renumbering.resize(order);
      for (int e = 0; e < order; ++e) report->renumbering[e] = e;
      std::swap(report->renumbering[0], report->renumbering[id]);
    }
  }
  return g;
}

FiniteGroup load_group(const std::string& path, LoadReport* report) {
  std::ifstream in(path);
  if (!in) throw BadGroupFile("cannot open group file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw BadGroupFile("invalid JSON in '" + path + "': " + e.what());
  }
  return group_from_json(j, report);
}

nlohmann::json group_to_json(const FiniteGroup& g) {
  nlohmann::json j;
  j["order"] = g.order();
  std::vector<std::vector<int>> table(g.order(), std::vector<int>(g.order()));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) table[a][b] = g.mul(a, b);
  j["table"] = table;
  if (g.has_names()) j["names"] = g.names();
  return j;
}

std::vector<Permutation> parse_permutation_generators(const std::string& text) {
  std::vector<std::vector<std::vector<int>>> gen_cycles;  // per gen, per cycle
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  int max_point = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  while (true) {
    skip_ws();
    if (i >= text.size() || text[i] == ';') {
      gen_cycles.push_back(cycles);
      cycles.clear();
      if (i >= text.size()) break;
      ++i;
      continue;
    }
    if (text[i] != '(')
      throw BadParameter("expected '(' in permutation string at position " +
                         std::to_string(i));
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      if (j == i)
        throw BadParameter("expected a point in permutation string at position " +
                           std::to_string(i));
      int p = std::stoi(text.substr(i, j - i));
      if (p < 1) throw BadParameter("points are 1-based");
      max_point = std::max(max_point, p);
      cycle.push_back(p - 1);
      i = j;
    }
    if (cycle.size() < 1)
      throw BadParameter("empty cycle in permutation string");
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw BadParameter("repeated point within a cycle");
    cycles.push_back(std::move(cycle));
  }

  int degree = std::max(max_point, 1);
  std::vector<Permutation> gens;
  for (const auto& gc : gen_cycles) {
    if (gc.empty()) continue;  // allow trailing ';'
    Permutation p = Permutation::identity(degree);
    for (const auto& cycle : gc) {
      // apply the cycle: point cycle[t] maps to cycle[t+1]
      Permutation c = Permutation::identity(degree);
      for (std::size_t t = 0; t < cycle.size(); ++t)
        c.images[cycle[t]] = cycle[(t + 1) % cycle.size()];
      p = c * p;
    }
    gens.push_back(std::move(p));
  }
  return gens;
}

}  // namespace monolith::io

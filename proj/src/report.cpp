#include "monolith/report.hpp"

namespace monolith {

using nlohmann::json;

json analysis_to_json(const Analysis& a) {
  json j;
  j["order"] = a.order;
  j["exponent"] = a.exponent;
  j["nilpotency_class"] =
      a.nilpotency_class ? json(*a.nilpotency_class) : json();
  j["center_size"] = a.center_size;
  j["upper_central_sizes"] = a.upper_central_sizes;
  j["num_normal_subgroups"] = a.normals.size();
  j["atom_sizes"] = a.atom_sizes;
  j["monolith_size"] = a.monolith_size ? json(*a.monolith_size) : json();
  j["chief_factor_sizes"] = a.chief_factors;
  j["subdirectly_irreducible"] = a.subdirectly_irreducible;
  return j;
}

json term_to_json(const ConjugateProductTerm& t) {
  json arr = json::array();
  for (const auto& f : t.factors) arr.push_back({f.slot, f.sign});
  return arr;
}

json chain_to_json(const FiniteGroup& g, const WitnessChain& c) {
  json j;
  j["start"] = c.start;
  if (g.has_names()) j["start_name"] = g.name_of(c.start);
  j["steps"] = json::array();
  for (const auto& s : c.steps) {
    json sj;
    sj["level"] = s.level;
    sj["source"] = s.source;
    sj["target"] = s.target;
    sj["term"] = term_to_json(s.term);
    sj["term_pretty"] = s.term.pretty();
    sj["params"] = s.params;
    sj["complexity"] = s.term.complexity();
    j["steps"].push_back(std::move(sj));
  }
  j["final"] = c.final_element;
  if (g.has_names()) j["final_name"] = g.name_of(c.final_element);
  j["composed_term"] = term_to_json(c.composed_term);
  j["composed_pretty"] = c.composed_term.pretty();
  j["composed_params"] = c.composed_params;
  j["total_complexity"] = c.total_complexity;
  j["step_bound_m"] = c.step_bound;
  j["total_bound_mk"] = c.total_bound;
  j["findings"] = c.findings;
  j["pass"] = true;  // descend throws on any bound violation
  return j;
}

json atom_report_to_json(const AtomBoundReport& r) {
  json j;
  j["atom_size"] = r.atom_size;
  j["bound"] = r.bound;
  j["max_witness_complexity"] = r.max_complexity;
  j["pass"] = r.pass;
  json per = json::array();
  for (auto [e, c] : r.complexities) per.push_back({{"element", e}, {"complexity", c}});
  j["elements"] = per;
  return j;
}

}  // namespace monolith

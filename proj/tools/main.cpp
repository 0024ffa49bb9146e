#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "monolith/construct.hpp"
#include "monolith/errors.hpp"
#include "monolith/families.hpp"
#include "monolith/folog.hpp"
#include "monolith/io.hpp"
#include "monolith/lattice.hpp"
#include "monolith/report.hpp"
#include "monolith/witness.hpp"

using nlohmann::json;
using namespace monolith;

namespace {

struct ResolvedGroup {
  FiniteGroup group;
  json recipe;
};

ResolvedGroup resolve_spec(const std::string& spec) {
  if (!spec.empty() && spec.front() == '(') {
    auto gens = io::parse_permutation_generators(spec);
    FiniteGroup g = FiniteGroup::from_permutations(gens);
    return {g, construct::recipe_table(g)};
  }
  if (spec.size() > 5 && spec.ends_with(".json")) {
    io::LoadReport report;
    FiniteGroup g = io::load_group(spec, &report);
    if (report.renumbered)
      std::cerr << "note: identity was not index 0; elements renumbered\n";
    return {g, construct::recipe_table(g)};
  }
  return {named_group(spec), construct::recipe_named(spec)};
}

int resolve_element(const FiniteGroup& g, const std::string& text) {
  if (auto idx = g.index_of_name(text)) return *idx;
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used == text.size() && v >= 0 && v < g.order()) return v;
  } catch (const std::exception&) {
  }
  throw BadElement("no element named or indexed '" + text + "'");
}

void emit(const json& j, bool pretty) {
  if (pretty)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

construct::SampleLimits limits_from(int power, long long max_order,
                                    int max_members, int max_tuples) {
  construct::SampleLimits lim;
  lim.max_power = power;
  lim.max_order = max_order;
  lim.max_members = max_members;
  lim.max_tuples = max_tuples;
  return lim;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group normal structure, witness and definability toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  std::string spec, element_arg, formula_text, free_var, replay_path;
  std::vector<std::string> bindings;
  int power = 2, max_members = 64, max_tuples = 4000;
  long long max_order = 64;
  int complexity_cap = 0;  // 0 = derive from the group

  auto add_limit_flags = [&](CLI::App* cmd) {
    cmd->add_option("--power", power, "max direct power in the sample");
    cmd->add_option("--max-order", max_order, "max member order");
    cmd->add_option("--max-members", max_members, "max sample size");
    cmd->add_option("--max-tuples", max_tuples, "max generator tuples tried");
  };

  auto* c_analyze = app.add_subcommand("analyze", "normal-structure report");
  c_analyze->add_option("spec", spec)->required();

  auto* c_lattice = app.add_subcommand("lattice", "dump the normal lattice");
  c_lattice->add_option("spec", spec)->required();

  auto* c_witness =
      app.add_subcommand("witness", "descend an element into the monolith");
  c_witness->add_option("spec", spec)->required();
  c_witness->add_option("element", element_arg)->required();

  auto* c_eval = app.add_subcommand("eval", "evaluate a formula on a group");
  c_eval->add_option("spec", spec)->required();
  c_eval->add_option("formula", formula_text)->required();
  c_eval->add_option("--free", free_var, "compute the defined set of this variable");
  c_eval->add_option("--bind", bindings, "free-variable bindings name=element");

  auto* c_axioms = app.add_subcommand(
      "axioms", "check semantic SI evaluation against the lattice over the variety");
  c_axioms->add_option("spec", spec)->required();
  add_limit_flags(c_axioms);
  c_axioms->add_option("--complexity-cap", complexity_cap,
                       "override the psi witness cap (default m^k)");

  auto* c_bounds = app.add_subcommand(
      "bounds", "witness-complexity bound report over the variety");
  c_bounds->add_option("spec", spec)->required();
  add_limit_flags(c_bounds);

  auto* c_construct = app.add_subcommand("construct", "construction utilities");
  auto* c_replay =
      c_construct->add_subcommand("replay", "rebuild a group from a provenance recipe");
  c_replay->add_option("file", replay_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_analyze->parsed()) {
      auto rg = resolve_spec(spec);
      emit(analysis_to_json(analyze(rg.group)), pretty);
      return 0;
    }

    if (c_lattice->parsed()) {
      auto rg = resolve_spec(spec);
      json j;
      j["order"] = rg.group.order();
      j["normal_subgroups"] = json::array();
      for (const auto& n : normal_subgroups(rg.group))
        j["normal_subgroups"].push_back(
            {{"size", n.count()}, {"elements", n.elements()}});
      emit(j, pretty);
      return 0;
    }

    if (c_witness->parsed()) {
      auto rg = resolve_spec(spec);
      int a = resolve_element(rg.group, element_arg);
      WitnessChain chain = descend(rg.group, a);
      emit(chain_to_json(rg.group, chain), pretty);
      return 0;
    }

    if (c_eval->parsed()) {
      auto rg = resolve_spec(spec);
      auto f = folog::parse(formula_text);
      json j;
      j["formula"] = folog::print(f);
      if (!free_var.empty()) {
        auto set = folog::defined_set(rg.group, f, free_var);
        j["defined_set"] = set.elements();
        if (rg.group.has_names()) {
          json names = json::array();
          for (int e : set.elements()) names.push_back(rg.group.name_of(e));
          j["defined_set_names"] = names;
        }
      } else {
        std::map<std::string, int> env;
        for (const auto& b : bindings) {
          auto eq = b.find('=');
          if (eq == std::string::npos)
            throw BadParameter("binding must be name=element: " + b);
          env[b.substr(0, eq)] =
              resolve_element(rg.group, b.substr(eq + 1));
        }
        j["value"] = folog::evaluate(rg.group, f, env);
      }
      emit(j, pretty);
      return 0;
    }

    if (c_axioms->parsed()) {
      auto rg = resolve_spec(spec);
      Analysis base = analyze(rg.group);
      if (!base.nilpotency_class)
        throw NotNilpotent("axioms requires a nilpotent generating group");
      auto sample = construct::sample_variety_members(
          rg.group, rg.recipe,
          limits_from(power, max_order, max_members, max_tuples));
      int r = 1;
      for (const auto& m : sample)
        for (int cf : m.analysis.chief_factors) r = std::max(r, cf);
      const int m_exp = base.exponent;
      const int k = *base.nilpotency_class;
      const long long psi_cap =
          complexity_cap > 0 ? complexity_cap : ipow(m_exp, k);

      json j;
      j["r"] = r;
      j["m"] = m_exp;
      j["k"] = k;
      j["psi_cap"] = psi_cap;
      j["members"] = json::array();
      int disagreements = 0;
      for (const auto& mem : sample) {
        bool semantic = folog::evaluate_si_semantic(
            mem.group, r, static_cast<int>(psi_cap));
        bool agree = semantic == mem.analysis.subdirectly_irreducible;
        if (!agree) ++disagreements;
        j["members"].push_back(
            {{"order", mem.group.order()},
             {"provenance", mem.provenance},
             {"subdirectly_irreducible", mem.analysis.subdirectly_irreducible},
             {"semantic", semantic},
             {"agree", agree}});
      }
      j["sample_size"] = sample.size();
      j["disagreements"] = disagreements;
      j["pass"] = disagreements == 0;
      emit(j, pretty);
      return disagreements == 0 ? 0 : 1;
    }

    if (c_bounds->parsed()) {
      auto rg = resolve_spec(spec);
      Analysis base = analyze(rg.group);
      auto sample = construct::sample_variety_members(
          rg.group, rg.recipe,
          limits_from(power, max_order, max_members, max_tuples));
      int r = 1;
      for (const auto& m : sample)
        for (int cf : m.analysis.chief_factors) r = std::max(r, cf);
      json j;
      j["r"] = r;
      j["members"] = json::array();
      bool all_pass = true;
      for (const auto& mem : sample) {
        json mj;
        mj["order"] = mem.group.order();
        mj["provenance"] = mem.provenance;
        mj["atoms"] = json::array();
        for (const auto& atom : atoms(mem.group, mem.analysis.normals)) {
          int c = -1;
          for (int e : atom.elements())
            if (e != FiniteGroup::kIdentity) {
              c = e;
              break;
            }
          auto rep = atom_bound_check(mem.group, c, atom.count());
          all_pass = all_pass && rep.pass && rep.atom_size <= rg.group.order();
          mj["atoms"].push_back({{"size", rep.atom_size},
                                 {"max_witness_complexity", rep.max_complexity},
                                 {"bound", rep.bound},
                                 {"pass", rep.pass}});
        }
        if (mem.analysis.subdirectly_irreducible &&
            mem.analysis.nilpotency_class && mem.group.order() > 1) {
          long long max_total = 0;
          int max_step = 0;
          for (int a = 1; a < mem.group.order(); ++a) {
            WitnessChain chain = descend(mem.group, a, mem.analysis);
            max_total = std::max(max_total, chain.total_complexity);
            for (const auto& s : chain.steps)
              max_step = std::max(max_step, s.term.complexity());
          }
          long long bound =
              ipow(base.exponent, base.nilpotency_class.value_or(1));
          bool pass = max_total <= bound && max_step <= base.exponent;
          all_pass = all_pass && pass;
          mj["descent"] = {{"max_step_complexity", max_step},
                           {"step_bound_m", base.exponent},
                           {"max_total_complexity", max_total},
                           {"total_bound_mk", bound},
                           {"pass", pass}};
        }
        j["members"].push_back(std::move(mj));
      }
      j["pass"] = all_pass;
      emit(j, pretty);
      return all_pass ? 0 : 1;
    }

    if (c_replay->parsed()) {
      std::ifstream in(replay_path);
      if (!in) throw BadParameter("cannot open recipe file " + replay_path);
      json recipe;
      in >> recipe;
      FiniteGroup g = construct::replay(recipe);
      json j = io::group_to_json(g);
      j["hash"] = g.content_hash();
      emit(j, pretty);
      return 0;
    }
  } catch (const Error& e) {
    json j{{"error", e.code()}, {"message", e.what()}};
    std::cout << j.dump() << "\n";
    std::cerr << e.code() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    json j{{"error", "Internal"}, {"message", e.what()}};
    std::cout << j.dump() << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

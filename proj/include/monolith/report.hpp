#pragma once

#include <json.hpp>

#include "monolith/lattice.hpp"
#include "monolith/witness.hpp"

namespace monolith {

nlohmann::json analysis_to_json(const Analysis& a);
nlohmann::json term_to_json(const ConjugateProductTerm& t);
nlohmann::json chain_to_json(const FiniteGroup& g, const WitnessChain& c);
nlohmann::json atom_report_to_json(const AtomBoundReport& r);

}  // namespace monolith

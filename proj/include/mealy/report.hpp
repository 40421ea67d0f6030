#ifndef MEALY_REPORT_HPP_
#define MEALY_REPORT_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "mealy/automaton.hpp"
#include "mealy/finiteness.hpp"
#include "mealy/orbits.hpp"
#include "mealy/semigroup.hpp"

// Structured (JSON) renderings of results.  Key order is fixed, words are
// written with format_word, and there are no floating point values, so the
// output is byte-for-byte reproducible.

namespace mealy::report {

  using Json = nlohmann::ordered_json;

  // Serialised with 2-space indentation and a trailing newline.
  std::string dump(Json const& j);

  Json to_json(MealyAutomaton const& m, GrowthReport const& r,
               bool with_witnesses = false);
  Json to_json(MealyAutomaton const& m, std::vector<StateWord> const& gens,
               Orbit const& orbit);
  Json to_json(MealyAutomaton const& m, UPOrbit const& orbit);
  Json to_json(MealyAutomaton const& m, MDepthValue const& value);
  Json to_json(MealyAutomaton const& m, WitnessChain const& chain);
  Json to_json(MealyAutomaton const& m, std::vector<StateIndex> const& gens,
               OrbitSignature const& sig);
  Json to_json(MealyAutomaton const& m, std::vector<StateWord> const& gens,
               ExtendedOrbitSignature const& sig);
  Json to_json(MealyAutomaton const& m, std::vector<StateWord> const& gens,
               FinitenessVerdict const& verdict);
  Json to_json(MealyAutomaton const& m, ConsistencyReport const& r);

  Json budget_json(EnumerationBudget const& b);
  Json budget_json(WitnessBudget const& b);

  // Orbit graph: points as nodes, one edge per generator labelled with the
  // generator.  Requires orbit.edges.
  std::string orbit_dot(MealyAutomaton const&         m,
                        std::vector<StateWord> const& gens,
                        Orbit const&                  orbit);

}  // namespace mealy::report

#endif  // MEALY_REPORT_HPP_

#include "mealy/report.hpp"

#include <sstream>
#include <stdexcept>

#include "mealy/io.hpp"

namespace mealy::report {

  std::string dump(Json const& j) {
    return j.dump(2) + "\n";
  }

  namespace {
    std::string word(MealyAutomaton const& m, Word const& w) {
      return format_word(m.alphabet(), w);
    }

    Json words(MealyAutomaton const& m, std::vector<Word> const& ws) {
      Json a = Json::array();
      for (auto const& w : ws) {
        a.push_back(word(m, w));
      }
      return a;
    }

    Json gen_names(MealyAutomaton const& m, std::vector<StateWord> const& gens) {
      Json a = Json::array();
      for (auto const& g : gens) {
        a.push_back(format_stateword(m, g));
      }
      return a;
    }

    Json optional_size(std::optional<size_t> const& v) {
      return v ? Json(*v) : Json(nullptr);
    }
  }  // namespace

  Json budget_json(EnumerationBudget const& b) {
    Json j;
    j["max_elements"] = b.max_elements;
    j["max_length"]   = b.max_length;
    return j;
  }

  Json budget_json(WitnessBudget const& b) {
    Json j;
    j["max_depth"] = b.max_depth;
    j["lookahead"] = b.lookahead;
    j["orbit_cap"] = b.orbit_cap;
    return j;
  }

  Json to_json(MealyAutomaton const& m, GrowthReport const& r,
               bool with_witnesses) {
    Json j;
    j["b"]       = r.b;
    j["closed"]  = r.closed;
    j["total"]   = optional_size(r.total);
    j["budgets"] = budget_json(r.budgets);
    j["work"]    = r.work;
    if (with_witnesses) {
      Json w = Json::array();
      for (auto const& s : r.witnesses) {
        w.push_back(format_stateword(m, s));
      }
      j["witnesses"] = std::move(w);
    }
    return j;
  }

  Json to_json(MealyAutomaton const& m, std::vector<StateWord> const& gens,
               Orbit const& orbit) {
    Json j;
    j["basepoint"]  = word(m, orbit.basepoint);
    j["generators"] = gen_names(m, gens);
    j["size"]       = orbit.size();
    j["points"]     = words(m, orbit.points);
    if (!orbit.edges.empty()) {
      Json e = Json::array();
      for (size_t i = 0; i < orbit.edges.size(); ++i) {
        for (size_t g = 0; g < orbit.edges[i].size(); ++g) {
          e.push_back(Json::array({i, g, orbit.edges[i][g]}));
        }
      }
      j["edges"] = std::move(e);
    }
    return j;
  }

  Json to_json(MealyAutomaton const& m, UPOrbit const& orbit) {
    Json j;
    j["basepoint"] = format_upword(m.alphabet(), orbit.basepoint);
    j["closed"]    = orbit.closed;
    j["size"]      = orbit.closed ? Json(orbit.points.size()) : Json(nullptr);
    j["lower_bound"] = orbit.lower_bound;
    j["cap"]         = orbit.cap;
    Json pts         = Json::array();
    for (auto const& x : orbit.points) {
      pts.push_back(format_upword(m.alphabet(), x));
    }
    j["points"] = std::move(pts);
    return j;
  }

  Json to_json(MealyAutomaton const& m, MDepthValue const& value) {
    Json j;
    j["v"]        = word(m, value.v);
    j["depth"]    = value.depth;
    j["value"]    = value.value;
    j["exceeded"] = value.exceeded;
    return j;
  }

  Json to_json(MealyAutomaton const& m, WitnessChain const& chain) {
    Json j;
    j["prefixes"]      = words(m, chain.prefixes);
    j["sizes"]         = chain.sizes;
    j["branch"]        = word(m, chain.branch);
    j["capped"]        = chain.capped;
    j["largest_orbit"] = chain.largest_orbit;
    j["work"]          = chain.work;
    j["budgets"]       = budget_json(chain.budget);
    return j;
  }

  Json to_json(MealyAutomaton const& m, std::vector<StateIndex> const& gens,
               OrbitSignature const& sig) {
    Json j;
    j["mode"] = "states";
    Json g    = Json::array();
    for (auto q : gens) {
      g.push_back(m.state_name(q));
    }
    j["generators"] = std::move(g);
    j["size"]       = sig.size;
    j["points"]     = words(m, sig.points);
    j["endomaps"]   = sig.endomaps;
    Json sections   = Json::array();
    for (auto const& row : sig.sections) {
      Json r = Json::array();
      for (auto q : row) {
        r.push_back(m.state_name(q));
      }
      sections.push_back(std::move(r));
    }
    j["sections"] = std::move(sections);
    return j;
  }

  Json to_json(MealyAutomaton const& m, std::vector<StateWord> const& gens,
               ExtendedOrbitSignature const& sig) {
    Json j;
    j["mode"]       = "state-words";
    j["generators"] = gen_names(m, gens);
    j["size"]       = sig.size;
    j["points"]     = words(m, sig.points);
    j["endomaps"]   = sig.endomaps;
    Json sections   = Json::array();
    for (auto const& row : sig.sections) {
      Json r = Json::array();
      for (auto const& e : row) {
        Json x;
        x["section"] = e.provenance() ? format_stateword(m, *e.provenance())
                                      : std::string();
        x["states"]  = e.num_states();
        r.push_back(std::move(x));
      }
      sections.push_back(std::move(r));
    }
    j["sections"] = std::move(sections);
    return j;
  }

  Json to_json(MealyAutomaton const& m, std::vector<StateWord> const& gens,
               FinitenessVerdict const& verdict) {
    Json j;
    j["generators"] = gen_names(m, gens);
    if (verdict.is_finite()) {
      auto const& f = verdict.finite();
      j["outcome"]  = "finite";
      j["order"]    = f.order;
      j["growth"]   = to_json(m, f.report);
    } else {
      auto const& u      = verdict.unknown();
      j["outcome"]       = "unknown";
      j["largest_orbit"] = u.largest_orbit;
      j["witness"]       = to_json(m, u.chain);
      j["growth"]        = to_json(m, u.report);
    }
    Json b;
    b["enumeration"] = budget_json(verdict.budget.enumeration);
    b["witness"]     = budget_json(verdict.budget.witness);
    b["slice"]       = verdict.budget.slice;
    j["budgets"]     = std::move(b);
    Json used;
    used["enumeration_work"] = verdict.enumeration_work;
    used["orbit_work"]       = verdict.orbit_work;
    j["used"]                = std::move(used);
    return j;
  }

  Json to_json(MealyAutomaton const& m, ConsistencyReport const& r) {
    Json j;
    j["consistent"]    = r.consistent;
    j["issues"]        = r.issues;
    j["violating_word"] = r.violating_word ? Json(word(m, *r.violating_word))
                                           : Json(nullptr);
    j["words_checked"] = r.words_checked;
    return j;
  }

  std::string orbit_dot(MealyAutomaton const&         m,
                        std::vector<StateWord> const& gens,
                        Orbit const&                  orbit) {
    if (orbit.edges.size() != orbit.points.size()) {
      throw std::invalid_argument("orbit_dot: orbit computed without edges");
    }
    auto quote = [](std::string const& s) { return Json(s).dump(); };
    std::ostringstream os;
    os << "digraph orbit {\n";
    for (auto const& p : orbit.points) {
      os << "  " << quote(word(m, p)) << ";\n";
    }
    for (size_t i = 0; i < orbit.points.size(); ++i) {
      for (size_t g = 0; g < gens.size(); ++g) {
        os << "  " << quote(word(m, orbit.points[i])) << " -> "
           << quote(word(m, orbit.points[orbit.edges[i][g]]))
           << " [label=" << quote(format_stateword(m, gens[g])) << "];\n";
      }
    }
    os << "}\n";
    return os.str();
  }

}  // namespace mealy::report

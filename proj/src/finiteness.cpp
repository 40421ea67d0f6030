#include "mealy/finiteness.hpp"

#include <algorithm>
#include <stdexcept>

#include "mealy/error.hpp"

namespace mealy {

  FinitenessVerdict decide(MealyAutomaton const&         m,
                           std::vector<StateWord> const& gens,
                           FinitenessBudget const&       budget) {
    if (budget.slice == 0) {
      throw std::invalid_argument("slice size must be positive");
    }
    Enumerator    enumerator(m, gens, budget.enumeration);
    WitnessSearch search(GeneratorSet(m, gens), budget.witness);

    FinitenessVerdict verdict;
    verdict.budget = budget;
    while (!enumerator.finished() || !search.finished()) {
      bool const enumerate_next
          = !enumerator.finished()
            && (search.finished() || enumerator.work() <= search.work());
      if (enumerate_next) {
        enumerator.run(budget.slice);
        if (enumerator.closed()) {
          break;
        }
      } else {
        search.step();
      }
    }
    verdict.enumeration_work = enumerator.work();
    verdict.orbit_work       = search.work();
    if (enumerator.closed()) {
      verdict.outcome
          = FiniteOutcome{enumerator.elements().size(), enumerator.report()};
    } else {
      auto chain = search.chain();
      auto largest = chain.largest_orbit;
      verdict.outcome
          = UnknownOutcome{std::move(chain), largest, enumerator.report()};
    }
    return verdict;
  }

  namespace {
    bool is_proper_prefix(Word const& u, Word const& v) {
      return u.size() < v.size() && std::equal(u.begin(), u.end(), v.begin());
    }
  }  // namespace

  ConsistencyReport check_consistency(FinitenessVerdict const&      verdict,
                                      MealyAutomaton const&         m,
                                      std::vector<StateWord> const& gens,
                                      size_t                        depth) {
    ConsistencyReport report;
    GeneratorSet      set(m, gens);
    if (verdict.is_finite()) {
      size_t const bound = verdict.finite().order + 1;
      for (size_t length = 0; length <= depth; ++length) {
        LevelAction level(set, length);
        for (LevelAction::Code c = 0; c < level.num_words(); ++c) {
          ++report.words_checked;
          if (!level.orbit_size(c, bound)) {
            report.consistent     = false;
            report.violating_word = level.decode(c);
            report.issues.push_back("orbit of a word of length "
                                    + std::to_string(length)
                                    + " has more than "
                                    + std::to_string(bound) + " points");
            return report;
          }
        }
      }
      return report;
    }

    auto const& chain = verdict.unknown().chain;
    if (chain.prefixes.size() != chain.sizes.size()) {
      report.consistent = false;
      report.issues.push_back("witness chain prefixes and sizes disagree");
      return report;
    }
    for (size_t i = 0; i < chain.prefixes.size(); ++i) {
      auto const& u = chain.prefixes[i];
      ++report.words_checked;
      if (i > 0) {
        if (!is_proper_prefix(chain.prefixes[i - 1], u)) {
          report.consistent     = false;
          report.violating_word = u;
          report.issues.push_back("witness prefixes are not strictly "
                                  "increasing");
        }
        if (chain.sizes[i] <= chain.sizes[i - 1]) {
          report.consistent     = false;
          report.violating_word = u;
          report.issues.push_back("witness orbit sizes are not strictly "
                                  "increasing");
        }
      }
      size_t actual = 0;
      try {
        actual = orbit_finite(set, u, chain.budget.orbit_cap).size();
      } catch (ResourceLimitError const& e) {
        actual = e.lower_bound();
      }
      if (actual != chain.sizes[i]) {
        report.consistent     = false;
        report.violating_word = u;
        report.issues.push_back("recorded orbit size "
                                + std::to_string(chain.sizes[i])
                                + " recomputes as " + std::to_string(actual));
      }
    }
    return report;
  }

}  // namespace mealy

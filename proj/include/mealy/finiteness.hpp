#ifndef MEALY_FINITENESS_HPP_
#define MEALY_FINITENESS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mealy/automaton.hpp"
#include "mealy/orbits.hpp"
#include "mealy/semigroup.hpp"

namespace mealy {

  struct FinitenessBudget {
    EnumerationBudget enumeration;
    WitnessBudget     witness;
    // Products computed per enumeration slice.
    std::size_t slice = 256;

    bool operator==(FinitenessBudget const&) const = default;
  };

  // Certificate: the enumeration closed on a set of `order` elements.
  struct FiniteOutcome {
    std::size_t  order = 0;
    GrowthReport report;

    bool operator==(FiniteOutcome const&) const = default;
  };

  // No certificate within budget.  Carries evidence only; there is no
  // "infinite" verdict.
  struct UnknownOutcome {
    WitnessChain chain;
    std::size_t  largest_orbit = 0;
    GrowthReport report;

    bool operator==(UnknownOutcome const&) const = default;
  };

  struct FinitenessVerdict {
    std::variant<FiniteOutcome, UnknownOutcome> outcome;
    FinitenessBudget                            budget;
    std::size_t                                 enumeration_work = 0;
    std::size_t                                 orbit_work       = 0;

    [[nodiscard]] bool is_finite() const noexcept {
      return std::holds_alternative<FiniteOutcome>(outcome);
    }
    [[nodiscard]] FiniteOutcome const& finite() const {
      return std::get<FiniteOutcome>(outcome);
    }
    [[nodiscard]] UnknownOutcome const& unknown() const {
      return std::get<UnknownOutcome>(outcome);
    }

    bool operator==(FinitenessVerdict const&) const = default;
  };

  // Alternates slices of the enumeration (finiteness certificate) and of the
  // greedy witness search (evidence of infinite orbits), giving each the same
  // number of work units.  Deterministic for fixed budgets.
  FinitenessVerdict decide(MealyAutomaton const&         m,
                           std::vector<StateWord> const& gens,
                           FinitenessBudget const&       budget = {});

  struct ConsistencyReport {
    bool                     consistent = true;
    std::vector<std::string> issues;
    std::optional<Word>      violating_word;
    std::size_t              words_checked = 0;
  };

  // Finite(N): every orbit of a word of length <= depth has at most N + 1
  // points.  Unknown: the witness chain is strictly increasing and its orbit
  // sizes recompute.  Any failure indicates a bug, not a mathematical fact.
  ConsistencyReport check_consistency(FinitenessVerdict const&      verdict,
                                      MealyAutomaton const&         m,
                                      std::vector<StateWord> const& gens,
                                      std::size_t                   depth);

}  // namespace mealy

#endif  // MEALY_FINITENESS_HPP_

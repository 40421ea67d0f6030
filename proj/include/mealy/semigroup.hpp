#ifndef MEALY_SEMIGROUP_HPP_
#define MEALY_SEMIGROUP_HPP_

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mealy/automaton.hpp"
#include "mealy/element.hpp"

namespace mealy {

  struct EnumerationBudget {
    std::size_t max_elements = 10000;
    std::size_t max_length   = 12;

    bool operator==(EnumerationBudget const&) const = default;
  };

  // Growth of the semigroup generated by a list of state words.  b[k - 1] is
  // the number of distinct elements that are products of at most k
  // generators.  When closed, the last two entries of b coincide and equal
  // total.
  struct GrowthReport {
    std::vector<std::size_t>   b;
    bool                       closed = false;
    std::optional<std::size_t> total;
    EnumerationBudget          budgets;
    // One shortest state word per element, in discovery order.
    std::vector<StateWord> witnesses;
    // Number of products computed.
    std::size_t work = 0;

    bool operator==(GrowthReport const&) const = default;
  };

  // Breadth-first closure of the generators under left multiplication by
  // generators, with canonical elements as keys.  Work is done in slices so
  // it can be interleaved with other searches; the result does not depend on
  // the slicing.
  class Enumerator {
   public:
    Enumerator(MealyAutomaton const&  m,
               std::vector<StateWord> gens,
               EnumerationBudget      budget = {});

    // Compute at most `units` more products.  Returns finished().
    bool run(std::size_t units);

    [[nodiscard]] bool finished() const noexcept {
      return _phase == Phase::done;
    }
    [[nodiscard]] bool closed() const noexcept {
      return _closed;
    }
    [[nodiscard]] std::size_t work() const noexcept {
      return _work;
    }
    [[nodiscard]] std::vector<Element> const& elements() const noexcept {
      return _elements;
    }
    [[nodiscard]] GrowthReport report() const;

   private:
    enum class Phase { left, right, done };

    // Returns false when the element budget is exhausted.
    bool insert(Element e);
    void finish_level();

    std::vector<Element>                           _gens;
    EnumerationBudget                              _budget;
    std::vector<Element>                           _elements;
    std::unordered_map<Element, std::size_t, ElementHash> _index;
    std::vector<std::size_t>                       _b;

    Phase       _phase;
    bool        _closed = false;
    std::size_t _work   = 0;
    std::size_t _length = 1;  // length of the level being built
    std::size_t _level_begin = 0;
    std::size_t _level_end   = 0;
    std::size_t _cursor_elt  = 0;
    std::size_t _cursor_gen  = 0;
  };

  // Run an Enumerator to completion.  Budget exhaustion is reported through
  // GrowthReport::closed, never thrown.
  GrowthReport enumerate(MealyAutomaton const&         m,
                         std::vector<StateWord> const& gens,
                         std::size_t                   max_elements,
                         std::size_t                   max_length);

}  // namespace mealy

#endif  // MEALY_SEMIGROUP_HPP_

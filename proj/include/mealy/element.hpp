#ifndef MEALY_ELEMENT_HPP_
#define MEALY_ELEMENT_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "mealy/automaton.hpp"

namespace mealy {

  // Bound on the number of product states built before minimisation.
  inline constexpr std::size_t kDefaultMaxSectionStates = 1'000'000;

  // A semigroup element stored as a minimised initial transducer.  State 0 is
  // the initial state; the remaining states are the distinct sections s@u,
  // numbered in breadth-first order of discovery (letters in index order).
  // Two elements act identically on A* iff their tables are equal.
  class Element {
   public:
    // Canonicalise an arbitrary transducer (table[q * |A| + a]) started at
    // `initial`: restrict to reachable states, merge equivalent states and
    // renumber.
    static Element from_transducer(std::shared_ptr<Alphabet const> alphabet,
                                   std::vector<Transition> const&  table,
                                   StateIndex                      initial);

    static Element identity(std::shared_ptr<Alphabet const> alphabet);

    [[nodiscard]] std::size_t num_states() const noexcept {
      return _table.size() / _alphabet->size();
    }
    [[nodiscard]] std::size_t num_letters() const noexcept {
      return _alphabet->size();
    }
    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return *_alphabet;
    }
    [[nodiscard]] std::shared_ptr<Alphabet const> const&
    shared_alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] std::vector<Transition> const& table() const noexcept {
      return _table;
    }
    [[nodiscard]] Transition const& operator()(StateIndex q, Letter a) const {
      return _table[q * _alphabet->size() + a];
    }

    // Shortest known state word producing this element, if any.
    [[nodiscard]] std::optional<StateWord> const& provenance() const noexcept {
      return _provenance;
    }
    void set_provenance(StateWord s) {
      _provenance = std::move(s);
    }

    [[nodiscard]] bool is_identity() const noexcept;

    // Image of u under the element; returns the section state reached.
    StateIndex act(std::span<Letter const> u, std::span<Letter> out) const;
    [[nodiscard]] Word act(std::span<Letter const> u) const;

    [[nodiscard]] std::size_t hash() const noexcept {
      return _hash;
    }

    // Structural equality of canonical tables; provenance is ignored.
    bool operator==(Element const& other) const;

   private:
    Element(std::shared_ptr<Alphabet const> alphabet,
            std::vector<Transition>         table);

    std::shared_ptr<Alphabet const> _alphabet;
    std::vector<Transition>         _table;
    std::size_t                     _hash;
    std::optional<StateWord>        _provenance;
  };

  struct ElementHash {
    std::size_t operator()(Element const& e) const noexcept {
      return e.hash();
    }
  };

  // The element st...  of the state word, built from the tuples of states
  // reachable as sections.  Throws ResourceLimitError when more than
  // min(|Q|^|s|, max_states) tuples are reached.
  Element element_of(MealyAutomaton const& m, StateWord const& s,
                     std::size_t max_states = kDefaultMaxSectionStates);

  // Throws std::invalid_argument if the alphabets differ.
  bool element_equal(Element const& e1, Element const& e2);

  // e1 o e2: apply e2 first.  Throws std::invalid_argument if the alphabets
  // differ and ResourceLimitError past max_states pair states.
  Element compose(Element const& e1, Element const& e2,
                  std::size_t max_states = kDefaultMaxSectionStates);

}  // namespace mealy

#endif  // MEALY_ELEMENT_HPP_

#ifndef MEALY_AUTOMATON_HPP_
#define MEALY_AUTOMATON_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mealy {

  using Letter     = std::uint32_t;
  using StateIndex = std::uint32_t;

  // Finite word over the alphabet; the empty vector is the empty word.
  using Word = std::vector<Letter>;

  // Ordered list of distinct, non-empty letter names.  Position in the list
  // is the letter index.
  class Alphabet {
   public:
    explicit Alphabet(std::vector<std::string> names);

    [[nodiscard]] std::size_t size() const noexcept {
      return _names.size();
    }
    [[nodiscard]] std::string const& name(Letter a) const {
      return _names.at(a);
    }
    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    [[nodiscard]] std::optional<Letter> index_of(std::string_view name) const;

    // True when every name is one character, so words can be written without
    // separators.
    [[nodiscard]] bool compact() const noexcept {
      return _compact;
    }

    bool operator==(Alphabet const& other) const {
      return _names == other._names;
    }

   private:
    std::vector<std::string> _names;
    bool                     _compact;
  };

  struct Transition {
    Letter     output;
    StateIndex next;

    bool operator==(Transition const&) const = default;
  };

  // A sequence of states read as a product.  The RIGHTMOST state acts first:
  // StateWord{{s, t}} is the element st, i.e. apply t and then s.
  struct StateWord {
    std::vector<StateIndex> states;

    [[nodiscard]] std::size_t size() const noexcept {
      return states.size();
    }
    bool operator==(StateWord const&) const = default;
    auto operator<=>(StateWord const&) const = default;
  };

  // Concatenation s ++ t, i.e. the product st.
  StateWord concat(StateWord const& s, StateWord const& t);

  class MealyAutomaton {
   public:
    // Throws ValidationError unless the table is total and in range.
    // table[q * |A| + a] = tau(q, a).
    MealyAutomaton(Alphabet                 alphabet,
                   std::vector<std::string> state_names,
                   std::vector<Transition>  table);

    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return *_alphabet;
    }
    [[nodiscard]] std::shared_ptr<Alphabet const> const&
    shared_alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] std::size_t num_letters() const noexcept {
      return _alphabet->size();
    }
    [[nodiscard]] std::size_t num_states() const noexcept {
      return _state_names.size();
    }
    [[nodiscard]] std::string const& state_name(StateIndex q) const {
      return _state_names.at(q);
    }
    [[nodiscard]] std::vector<std::string> const& state_names() const noexcept {
      return _state_names;
    }
    [[nodiscard]] std::optional<StateIndex>
    state_index(std::string_view name) const;

    [[nodiscard]] std::vector<Transition> const& table() const noexcept {
      return _table;
    }

    // tau(q, a) = (q.a, q@a), unchecked.
    [[nodiscard]] Transition const& operator()(StateIndex q, Letter a) const {
      return _table[q * _alphabet->size() + a];
    }

   private:
    std::shared_ptr<Alphabet const> _alphabet;
    std::vector<std::string>        _state_names;
    std::vector<Transition>         _table;
  };

  // Ultimately periodic word preperiod . period^omega, always stored in
  // canonical form: the period is primitive and the preperiod is as short as
  // possible.  Two UPWords denote the same infinite word iff they compare
  // equal.
  class UPWord {
   public:
    UPWord(Word preperiod, Word period);

    [[nodiscard]] Word const& preperiod() const noexcept {
      return _preperiod;
    }
    [[nodiscard]] Word const& period() const noexcept {
      return _period;
    }
    [[nodiscard]] Letter at(std::size_t i) const;
    // The first n letters.
    [[nodiscard]] Word prefix(std::size_t n) const;

    bool operator==(UPWord const&) const = default;
    auto operator<=>(UPWord const&) const = default;

   private:
    Word _preperiod;
    Word _period;
  };

  struct WordAction {
    Word       image;
    StateIndex section;
  };

  struct StateWordAction {
    Word      image;
    StateWord section;
  };

  // Throws std::out_of_range on bad indices.
  Transition step(MealyAutomaton const& m, StateIndex q, Letter a);

  // (q.u, q@u)
  WordAction act_word(MealyAutomaton const& m, StateIndex q,
                      std::span<Letter const> u);

  // (s.u, s@u) with the rightmost state of s acting first.
  StateWordAction act_stateword(MealyAutomaton const& m, StateWord const& s,
                                std::span<Letter const> u);

  // Upper bound on the letters simulated by act_upword before it gives up.
  inline constexpr std::size_t kDefaultUPWordStepLimit = std::size_t(1) << 22;

  // Canonical form of s.x.  Simulation proceeds period by period until the
  // tuple of current section states repeats at a period boundary; throws
  // ResourceLimitError if more than step_limit letters are consumed.
  UPWord act_upword(MealyAutomaton const& m, StateWord const& s,
                    UPWord const& x,
                    std::size_t   step_limit = kDefaultUPWordStepLimit);

  // Moore diagram in Graphviz syntax: one node per state, one edge
  // q -> q@a labelled "a|q.a" for every (q, a), in index order.
  std::string export_dot(MealyAutomaton const& m);

  void check_word(MealyAutomaton const& m, std::span<Letter const> u);
  void check_stateword(MealyAutomaton const& m, StateWord const& s);

}  // namespace mealy

#endif  // MEALY_AUTOMATON_HPP_

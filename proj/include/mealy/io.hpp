#ifndef MEALY_IO_HPP_
#define MEALY_IO_HPP_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mealy/automaton.hpp"

// Automaton files are JSON objects
//
//   {"alphabet": [letter, ...],
//    "states": [state, ...],
//    "transitions": {state: {letter: [output letter, next state], ...}, ...}}
//
// with every (state, letter) pair present exactly once.  List order fixes
// the indices.

namespace mealy {

  struct RawTransition {
    std::string state;
    std::string letter;
    std::string output;
    std::string next;
  };

  // A parsed but unvalidated automaton file.
  struct RawDescription {
    std::vector<std::string>   alphabet;
    std::vector<std::string>   states;
    std::vector<RawTransition> transitions;
    // (state, letter) keys given more than once in the file.
    std::vector<std::pair<std::string, std::string>> repeated;
  };

  // Throws ParseError on malformed JSON or wrongly shaped fields.
  RawDescription parse_description(std::string_view text);

  // Throws ValidationError naming the offending (state, letter) for
  // missing, repeated or out-of-range transitions, or the duplicated name.
  MealyAutomaton validate(RawDescription const& raw);

  MealyAutomaton parse_automaton(std::string_view text);
  MealyAutomaton load_automaton(std::filesystem::path const& path);

  // Canonical file text for m; parse_automaton(to_json(m)) rebuilds m.
  std::string to_json(MealyAutomaton const& m);

  // Words are written letter by letter when every letter name is a single
  // character, and with '.' between letters otherwise.
  std::string format_word(Alphabet const& alphabet, std::span<Letter const> w);
  Word        parse_word(Alphabet const& alphabet, std::string_view text);

  // "pre(per)^ω"; parse_upword also accepts a missing or "^w" suffix.
  std::string format_upword(Alphabet const& alphabet, UPWord const& x);
  UPWord      parse_upword(Alphabet const& alphabet, std::string_view text);

  // State words are written as dot-separated state names; "t.s" is the
  // product ts (s acts first).
  std::string format_stateword(MealyAutomaton const& m, StateWord const& s);
  StateWord   parse_stateword(MealyAutomaton const& m, std::string_view text);

  // Comma-separated state words; empty text means every state.
  std::vector<StateWord> parse_generators(MealyAutomaton const& m,
                                          std::string_view      text);

}  // namespace mealy

#endif  // MEALY_IO_HPP_

#include <string>

#include "doctest.h"

#include "mealy/catalog.hpp"
#include "mealy/error.hpp"
#include "mealy/io.hpp"
#include "support/oracles.hpp"

using namespace mealy;
using mealy::test::Rng;

namespace {
  std::string error_of(std::string const& text) {
    try {
      parse_automaton(text);
    } catch (std::exception const& e) {
      return e.what();
    }
    return "";
  }

  bool mentions(std::string const& message, std::string const& needle) {
    return message.find(needle) != std::string::npos;
  }

  std::string const kFig1 = R"({
  "alphabet": ["0", "1"],
  "states": ["t", "s"],
  "transitions": {
    "t": {"0": ["0", "s"], "1": ["0", "t"]},
    "s": {"0": ["1", "s"], "1": ["0", "s"]}
  }
}
)";
}  // namespace

TEST_CASE("parse the file format") {
  auto m = parse_automaton(kFig1);
  CHECK(m.num_states() == 2);
  CHECK(m.num_letters() == 2);
  CHECK(m.table() == catalog::fig1().table());
  CHECK(to_json(m) == kFig1);
}

TEST_CASE("validation errors name the offending transition") {
  auto missing = error_of(R"({"alphabet": ["0", "1"], "states": ["t", "s"],
    "transitions": {"t": {"0": ["0", "s"], "1": ["0", "t"]},
                    "s": {"0": ["1", "s"]}}})");
  CHECK(mentions(missing, "missing transition (s, 1)"));

  auto duplicate = error_of(R"({"alphabet": ["0"], "states": ["s", "s"],
    "transitions": {"s": {"0": ["0", "s"]}}})");
  CHECK(mentions(duplicate, "duplicate state name \"s\""));

  auto repeated = error_of(R"({"alphabet": ["0"], "states": ["s"],
    "transitions": {"s": {"0": ["0", "s"], "0": ["0", "s"]}}})");
  CHECK(mentions(repeated, "(s, 0)"));
  CHECK(mentions(repeated, "more than once"));

  auto output = error_of(R"({"alphabet": ["0"], "states": ["s"],
    "transitions": {"s": {"0": ["7", "s"]}}})");
  CHECK(mentions(output, "(s, 0)"));
  CHECK(mentions(output, "output letter \"7\""));

  auto next = error_of(R"({"alphabet": ["0"], "states": ["s"],
    "transitions": {"s": {"0": ["0", "q"]}}})");
  CHECK(mentions(next, "next state \"q\""));

  auto state = error_of(R"({"alphabet": ["0"], "states": ["s"],
    "transitions": {"s": {"0": ["0", "s"]}, "r": {"0": ["0", "s"]}}})");
  CHECK(mentions(state, "unknown state \"r\""));

  auto letter = error_of(R"({"alphabet": ["0"], "states": ["s"],
    "transitions": {"s": {"0": ["0", "s"], "1": ["0", "s"]}}})");
  CHECK(mentions(letter, "unknown letter \"1\""));

  CHECK_THROWS_AS(parse_automaton(R"({"alphabet": ["0"], "states": ["s"],
    "transitions": {"s": {"0": ["0", "s"], "0": ["0", "s"]}}})"),
                  ValidationError);
}

TEST_CASE("malformed input is a parse error") {
  CHECK_THROWS_AS(parse_automaton("{"), ParseError);
  CHECK_THROWS_AS(parse_automaton("[]"), ParseError);
  CHECK_THROWS_AS(parse_automaton(R"({"alphabet": ["0"], "states": ["s"]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_automaton(R"({"alphabet": "0", "states": ["s"],
    "transitions": {}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_automaton(R"({"alphabet": ["0"], "states": ["s"],
    "transitions": {"s": {"0": ["0"]}}})"),
                  ParseError);
  CHECK_THROWS_AS(load_automaton("/nonexistent/automaton.json"), ParseError);
}

TEST_CASE("words") {
  auto m = catalog::fig1();
  auto const& A = m.alphabet();
  CHECK(parse_word(A, "0110") == Word{0, 1, 1, 0});
  CHECK(parse_word(A, "").empty());
  CHECK(format_word(A, Word{1, 0}) == "10");
  CHECK_THROWS_AS(parse_word(A, "012"), ParseError);

  Alphabet long_names({"x", "yy"});
  CHECK(parse_word(long_names, "yy.x.yy") == Word{1, 0, 1});
  CHECK(format_word(long_names, Word{1, 0}) == "yy.x");

  CHECK(parse_upword(A, "0(1)^ω") == UPWord({0}, {1}));
  CHECK(parse_upword(A, "(01)^w") == UPWord({}, {0, 1}));
  CHECK(parse_upword(A, "1(01)") == UPWord({}, {1, 0}));
  CHECK(format_upword(A, UPWord({0}, {1, 1})) == "0(1)^ω");
  CHECK_THROWS_AS(parse_upword(A, "01"), ParseError);
  CHECK_THROWS_AS(parse_upword(A, "0()"), ParseError);
  CHECK(parse_upword(long_names, "x.(yy)") == UPWord({0}, {1}));

  CHECK(parse_stateword(m, "t.s") == StateWord{{0, 1}});
  CHECK(format_stateword(m, StateWord{{1, 1, 0}}) == "s.s.t");
  CHECK_THROWS_AS(parse_stateword(m, "t.x"), ParseError);
  CHECK(parse_generators(m, "").size() == 2);
  CHECK(parse_generators(m, "t.s,s")
        == std::vector<StateWord>{StateWord{{0, 1}}, StateWord{{1}}});
}

TEST_CASE("serialisation round-trips (property)") {
  Rng rng(17);
  for (int iter = 0; iter < 200; ++iter) {
    auto const m    = test::random_automaton(rng, 4, 4);
    auto const text = to_json(m);
    auto const back = parse_automaton(text);
    CHECK(back.table() == m.table());
    CHECK(back.state_names() == m.state_names());
    CHECK(to_json(back) == text);

    auto const& A = m.alphabet();
    auto const  w = test::random_word(rng, m.num_letters(), rng() % 8);
    CHECK(parse_word(A, format_word(A, w)) == w);
    UPWord const x(test::random_word(rng, m.num_letters(), rng() % 4),
                   test::random_word(rng, m.num_letters(), 1 + rng() % 4));
    CHECK(parse_upword(A, format_upword(A, x)) == x);
    auto const s = test::random_stateword(rng, m.num_states(), 5);
    CHECK(parse_stateword(m, format_stateword(m, s)) == s);
  }
}

#include <algorithm>

#include "doctest.h"

#include "mealy/automaton.hpp"
#include "mealy/catalog.hpp"
#include "mealy/error.hpp"
#include "support/oracles.hpp"

using namespace mealy;
using mealy::test::Rng;

namespace {
  constexpr StateIndex T = 0, S = 1;  // fig1 state indices

  size_t count(std::string const& text, std::string const& needle) {
    size_t n = 0;
    for (auto p = text.find(needle); p != std::string::npos;
         p = text.find(needle, p + 1)) {
      ++n;
    }
    return n;
  }
}  // namespace

TEST_CASE("step reads the transition table") {
  auto m = catalog::fig1();
  CHECK(step(m, T, 1) == Transition{0, T});
  CHECK(step(m, T, 0) == Transition{0, S});
  CHECK(step(m, S, 0) == Transition{1, S});
  CHECK(step(m, S, 1) == Transition{0, S});
  CHECK_THROWS_AS(step(m, 2, 0), std::out_of_range);
  CHECK_THROWS_AS(step(m, 0, 2), std::out_of_range);
}

TEST_CASE("act_word") {
  auto m = catalog::fig1();
  auto r = act_word(m, S, Word{0, 1});
  CHECK(r.image == Word{1, 0});
  CHECK(r.section == S);

  r = act_word(m, T, Word{1, 1, 1});
  CHECK(r.image == Word{0, 0, 0});
  CHECK(r.section == T);

  r = act_word(m, T, Word{});
  CHECK(r.image.empty());
  CHECK(r.section == T);
}

TEST_CASE("act_stateword applies the rightmost state first") {
  auto m = catalog::fig1();
  auto r = act_stateword(m, StateWord{{T, S}}, Word{0});
  CHECK(r.image == Word{0});
  CHECK(r.section == StateWord{{T, S}});

  r = act_stateword(m, StateWord{{S, S}}, Word{0, 1, 1, 0});
  CHECK(r.image == Word{0, 1, 1, 0});
  CHECK(r.section == StateWord{{S, S}});

  // t.s on "1": s sends 1 to 0, then t sends 0 to 0 and moves to s.
  r = act_stateword(m, StateWord{{T, S}}, Word{1});
  CHECK(r.image == Word{0});
  CHECK(r.section == StateWord{{S, S}});

  CHECK_THROWS_AS(act_stateword(m, StateWord{}, Word{0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(act_stateword(m, StateWord{{5}}, Word{0}), std::out_of_range);
}

TEST_CASE("UPWord canonical form") {
  UPWord x(Word{0, 1}, Word{0, 1, 0, 1});
  CHECK(x.preperiod().empty());
  CHECK(x.period() == Word{0, 1});
  CHECK(x == UPWord(Word{}, Word{0, 1}));

  UPWord y(Word{1, 1, 0}, Word{0, 0});
  CHECK(y.preperiod() == Word{1, 1});
  CHECK(y.period() == Word{0});

  UPWord z(Word{1}, Word{0, 1});
  CHECK(z.preperiod().empty());
  CHECK(z.period() == Word{1, 0});

  CHECK(UPWord(Word{}, Word{0}) != UPWord(Word{1}, Word{0}));
  CHECK_THROWS_AS(UPWord(Word{0}, Word{}), std::invalid_argument);
}

TEST_CASE("UPWord canonical form is unique (property)") {
  // Any two representations of the same infinite word agree once
  // canonicalised; equality of long prefixes decides sameness here because
  // all periods and preperiods are short.
  Rng rng(7);
  for (int iter = 0; iter < 500; ++iter) {
    auto const pre1 = test::random_word(rng, 2, rng() % 4);
    auto const per1 = test::random_word(rng, 2, 1 + rng() % 4);
    auto const pre2 = test::random_word(rng, 2, rng() % 4);
    auto const per2 = test::random_word(rng, 2, 1 + rng() % 4);
    UPWord     a(pre1, per1), b(pre2, per2);
    CHECK((a == b) == (a.prefix(64) == b.prefix(64)));
    CHECK(UPWord(a.preperiod(), a.period()) == a);
  }
}

TEST_CASE("act_upword") {
  auto m = catalog::fig1();
  CHECK(act_upword(m, StateWord{{T}}, UPWord({}, {1})) == UPWord({}, {0}));
  CHECK(act_upword(m, StateWord{{S}}, UPWord({}, {0, 1}))
        == UPWord({}, {1, 0}));
  // t.0^w = 0 s.0^w = 0 1^w
  CHECK(act_upword(m, StateWord{{T}}, UPWord({}, {0})) == UPWord({0}, {1}));

  auto id = catalog::identity(3);
  UPWord x({2, 0}, {1, 2, 2});
  CHECK(act_upword(id, StateWord{{0}}, x) == x);

  auto adding = catalog::adding_machine();
  // a.1^w = 0^w (the carry never stops)
  CHECK(act_upword(adding, StateWord{{0}}, UPWord({}, {1}))
        == UPWord({}, {0}));
  CHECK(act_upword(adding, StateWord{{0, 0}}, UPWord({}, {0}))
        == UPWord({0, 1}, {0}));
}

TEST_CASE("act_upword resource limit") {
  auto m = catalog::adding_machine();
  CHECK_THROWS_AS(act_upword(m, StateWord{{0}}, UPWord({}, {0, 1}), 1),
                  ResourceLimitError);
}

TEST_CASE("action properties on random automata") {
  Rng rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    auto       m = test::random_automaton(rng, 3, 3);
    auto const n = m.num_states();
    auto const k = m.num_letters();
    auto const u = test::random_word(rng, k, rng() % 6);
    auto const v = test::random_word(rng, k, rng() % 6);
    auto const s = test::random_stateword(rng, n, 4);
    auto const t = test::random_stateword(rng, n, 4);
    StateIndex q = static_cast<StateIndex>(rng() % n);

    // prefix compatibility
    auto const uv   = test::cat(u, v);
    auto const whole = act_word(m, q, uv);
    auto const head  = act_word(m, q, u);
    auto const tail  = act_word(m, head.section, v);
    CHECK(whole.image == test::cat(head.image, tail.image));
    CHECK(whole.section == tail.section);

    // length preservation and singleton consistency
    CHECK(act_stateword(m, s, uv).image.size() == uv.size());
    auto const single = act_stateword(m, StateWord{{q}}, uv);
    CHECK(single.image == whole.image);
    CHECK(single.section == StateWord{{whole.section}});

    // associativity
    auto const st = concat(s, t);
    CHECK(act_stateword(m, st, u).image
          == act_stateword(m, s, act_stateword(m, t, u).image).image);

    // agrees with the letter-by-letter route, including sections
    auto const naive = test::naive_act(m, st, uv);
    auto const fast  = act_stateword(m, st, uv);
    CHECK(fast.image == naive.first);
    CHECK(fast.section == naive.second);

    // act_upword is canonical and agrees with finite prefixes
    UPWord const x(u, v.empty() ? Word{0} : v);
    auto const   y = act_upword(m, s, x);
    CHECK(UPWord(y.preperiod(), y.period()) == y);
    CHECK(y.prefix(24) == act_stateword(m, s, x.prefix(24)).image);
  }
}

TEST_CASE("export_dot") {
  auto dot = export_dot(catalog::fig1());
  CHECK(count(dot, "->") == 4);
  CHECK(count(dot, ";\n") == 2 + 4);
  CHECK(dot.find("\"t\" -> \"s\" [label=\"0|0\"];") != std::string::npos);
  CHECK(dot.find("\"s\" -> \"s\" [label=\"0|1\"];") != std::string::npos);

  auto id = export_dot(catalog::identity(1));
  CHECK(id == "digraph mealy {\n  \"e\";\n  \"e\" -> \"e\" [label=\"0|0\"];\n}\n");

  auto fig2 = export_dot(catalog::fig2(2));
  CHECK(count(fig2, "->") == 9);
  CHECK(count(fig2, ";\n") == 3 + 9);
}

TEST_CASE("MealyAutomaton rejects malformed tables") {
  CHECK_THROWS_AS(MealyAutomaton(Alphabet({"0"}), {"a", "a"},
                                 {{0, 0}, {0, 0}}),
                  ValidationError);
  CHECK_THROWS_AS(MealyAutomaton(Alphabet({"0"}), {"a"}, {}), ValidationError);
  CHECK_THROWS_AS(MealyAutomaton(Alphabet({"0"}), {"a"}, {{1, 0}}),
                  ValidationError);
  CHECK_THROWS_AS(MealyAutomaton(Alphabet({"0"}), {"a"}, {{0, 1}}),
                  ValidationError);
  CHECK_THROWS_AS(Alphabet({"0", "0"}), ValidationError);
  CHECK_THROWS_AS(Alphabet({}), ValidationError);
}

#include <set>

#include "doctest.h"

#include "mealy/catalog.hpp"
#include "mealy/element.hpp"
#include "mealy/error.hpp"
#include "support/oracles.hpp"

using namespace mealy;
using mealy::test::Rng;

namespace {
  constexpr StateIndex T = 0, S = 1;

  // Whether some word of length <= depth separates states p and q of e,
  // searched breadth-first over pairs of states.
  bool distinguished(Element const& e, StateIndex p, StateIndex q,
                     size_t depth) {
    std::set<std::pair<StateIndex, StateIndex>>    seen{{p, q}};
    std::vector<std::pair<StateIndex, StateIndex>> frontier{{p, q}};
    for (size_t d = 0; d < depth && !frontier.empty(); ++d) {
      std::vector<std::pair<StateIndex, StateIndex>> next;
      for (auto [x, y] : frontier) {
        for (Letter a = 0; a < e.num_letters(); ++a) {
          if (e(x, a).output != e(y, a).output) {
            return true;
          }
          if (seen.insert({e(x, a).next, e(y, a).next}).second) {
            next.push_back({e(x, a).next, e(y, a).next});
          }
        }
      }
      frontier = std::move(next);
    }
    return false;
  }
}  // namespace

TEST_CASE("element_of on Figure 1") {
  auto m = catalog::fig1();

  auto s = element_of(m, StateWord{{S}});
  CHECK(s.num_states() == 1);
  CHECK_FALSE(s.is_identity());

  auto ss = element_of(m, StateWord{{S, S}});
  CHECK(ss.num_states() == 1);
  CHECK(ss.is_identity());
  CHECK(ss == Element::identity(m.shared_alphabet()));
  CHECK(ss.provenance() == StateWord{{S, S}});

  // t has sections {t, s}, which act differently.
  CHECK(element_of(m, StateWord{{T}}).num_states() == 2);
}

TEST_CASE("single-state closure") {
  auto m = catalog::identity(3);
  CHECK(element_of(m, StateWord{{0}}).num_states() == 1);
  CHECK(element_of(m, StateWord{{0, 0, 0}}).is_identity());
}

TEST_CASE("element_equal") {
  auto m    = catalog::fig1();
  auto ss   = element_of(m, StateWord{{S, S}});
  auto ssss = element_of(m, StateWord{{S, S, S, S}});
  CHECK(element_equal(ss, ssss));
  auto s = element_of(m, StateWord{{S}});
  auto t = element_of(m, StateWord{{T}});
  CHECK_FALSE(element_equal(s, t));
  CHECK(s.act(Word{0}) == Word{1});
  CHECK(t.act(Word{0}) == Word{0});
  CHECK(element_equal(t, t));

  auto other = element_of(catalog::fig2(1), StateWord{{0}});
  CHECK_THROWS_AS(element_equal(s, other), std::invalid_argument);
  CHECK_THROWS_AS(compose(s, other), std::invalid_argument);
}

TEST_CASE("compose") {
  auto m  = catalog::fig1();
  auto s  = element_of(m, StateWord{{S}});
  auto t  = element_of(m, StateWord{{T}});
  auto id = Element::identity(m.shared_alphabet());
  CHECK(compose(s, s) == element_of(m, StateWord{{S, S}}));
  CHECK(compose(id, t) == t);
  CHECK(compose(t, id) == t);

  auto ts = compose(t, s);
  CHECK(ts == element_of(m, StateWord{{T, S}}));
  CHECK(ts.provenance() == StateWord{{T, S}});
  for (auto const& u : test::all_words_up_to(2, 6)) {
    CHECK(ts.act(u) == test::naive_act(m, StateWord{{T, S}}, u).first);
  }
}

TEST_CASE("resource bound") {
  auto m = catalog::fig4(2);
  CHECK_THROWS_AS(element_of(m, StateWord{{3, 4, 3, 4}}, 2),
                  ResourceLimitError);
  auto a = element_of(m, StateWord{{4}});
  CHECK_THROWS_AS(compose(a, a, 1), ResourceLimitError);
}

TEST_CASE("element equality matches brute-force comparison (property)") {
  Rng rng(2024);
  int equal_pairs = 0;
  for (int iter = 0; iter < 300; ++iter) {
    auto       m  = test::random_automaton(rng, 3, 2);
    auto const s1 = test::random_stateword(rng, m.num_states(), 4);
    auto const s2 = test::random_stateword(rng, m.num_states(), 4);
    auto const e1 = element_of(m, s1);
    auto const e2 = element_of(m, s2);
    size_t const depth = e1.num_states() + e2.num_states();
    bool const   brute = test::brute_equal_deep(m, s1, s2, depth);
    if (depth <= 8) {
      CHECK(test::brute_equal(m, s1, s2, depth) == brute);
    }
    CHECK(element_equal(e1, e2) == brute);
    equal_pairs += brute;

    // element acts as the state word
    for (auto const& u : test::all_words_up_to(m.num_letters(), 4)) {
      CHECK(e1.act(u) == test::naive_act(m, s1, u).first);
    }
    // canonicality
    CHECK(Element::from_transducer(e1.shared_alphabet(), e1.table(), 0) == e1);
    CHECK(compose(e1, e2) == element_of(m, concat(s1, s2)));
  }
  // the sample must exercise both outcomes
  CHECK(equal_pairs > 0);
  CHECK(equal_pairs < 300);
}

TEST_CASE("minimality: distinct states are distinguished by short words") {
  Rng rng(99);
  for (int iter = 0; iter < 100; ++iter) {
    auto       m = test::random_automaton(rng, 3, 2);
    auto const e = element_of(m, test::random_stateword(rng, m.num_states(), 3));
    size_t const n = e.num_states();
    for (StateIndex p = 0; p < n; ++p) {
      for (StateIndex q = p + 1; q < n; ++q) {
        CHECK(distinguished(e, p, q, n - 1));
      }
    }
  }
}

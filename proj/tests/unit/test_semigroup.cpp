#include "doctest.h"

#include "mealy/catalog.hpp"
#include "mealy/semigroup.hpp"
#include "support/oracles.hpp"

using namespace mealy;
using mealy::test::Rng;

namespace {
  void check_report_shape(GrowthReport const& r) {
    for (size_t k = 1; k < r.b.size(); ++k) {
      CHECK(r.b[k - 1] <= r.b[k]);
    }
    if (r.closed) {
      REQUIRE(r.b.size() >= 2);
      CHECK(r.total.has_value());
      CHECK(r.b.back() == *r.total);
      CHECK(r.b[r.b.size() - 2] == *r.total);
      CHECK(r.witnesses.size() == *r.total);
    } else {
      CHECK_FALSE(r.total.has_value());
    }
  }
}  // namespace

TEST_CASE("fig2(2) closes on its brute-force order") {
  auto m    = catalog::fig2(2);
  auto gens = test::all_states(m);
  // Oracle: distinct actions on A^8 among all generator products.
  size_t const n2 = test::brute_order(m, gens, 8, 1000);
  CHECK(n2 == 4);

  auto r = enumerate(m, gens, 1000, 64);
  check_report_shape(r);
  CHECK(r.closed);
  CHECK(r.total == n2);
  CHECK(r.b == std::vector<size_t>{3, 4, 4});
}

TEST_CASE("adding machine does not close") {
  auto m = catalog::adding_machine();
  StateWord const a{{0}};
  // a^i != a^j for i < j <= 20, by action on words of length 5 (32 is the
  // order of a on that level, so the powers up to 20 are distinct there).
  for (size_t i = 1; i <= 20; ++i) {
    for (size_t j = i + 1; j <= 20; ++j) {
      StateWord ai{std::vector<StateIndex>(i, 0)};
      StateWord aj{std::vector<StateIndex>(j, 0)};
      CHECK_FALSE(test::brute_equal(m, ai, aj, 5));
    }
  }
  auto r = enumerate(m, {a}, 1000, 5000);
  check_report_shape(r);
  CHECK_FALSE(r.closed);
  CHECK(r.b.size() == 1000);
  CHECK(r.b.back() == 1000);
  CHECK(r.witnesses[6] == StateWord{std::vector<StateIndex>(7, 0)});

  auto short_run = enumerate(m, {a}, 1000, 10);
  CHECK_FALSE(short_run.closed);
  CHECK(short_run.b.size() == 10);
}

TEST_CASE("single identity generator") {
  auto r = enumerate(catalog::identity(2), {StateWord{{0}}}, 10, 10);
  CHECK(r.closed);
  CHECK(r.total == 1);
  CHECK(r.b == std::vector<size_t>{1, 1});
  // closure needs a second level
  CHECK_FALSE(enumerate(catalog::identity(2), {StateWord{{0}}}, 10, 1).closed);
}

TEST_CASE("Figure 1 semigroup") {
  auto m = catalog::fig1();
  auto r = enumerate(m, test::all_states(m), 10000, 64);
  check_report_shape(r);
  if (r.closed) {
    CHECK(test::brute_order(m, test::all_states(m), 10, 10000) == *r.total);
  }
}

TEST_CASE("slicing does not change the result") {
  auto m    = catalog::fig2(3);
  auto gens = test::all_states(m);
  Enumerator a(m, gens), b(m, gens);
  while (!a.run(1)) {
  }
  b.run(1'000'000);
  CHECK(a.report() == b.report());
}

TEST_CASE("growth reports on random automata (property)") {
  Rng rng(5);
  for (int iter = 0; iter < 60; ++iter) {
    auto m    = test::random_automaton(rng, 3, 2);
    auto gens = test::all_states(m);
    auto r    = enumerate(m, gens, 300, 40);
    check_report_shape(r);
    if (r.closed) {
      // Stable under raising the budgets.
      auto bigger = enumerate(m, gens, 3000, 80);
      CHECK(bigger.closed);
      CHECK(bigger.b == r.b);
      CHECK(bigger.total == r.total);
      // Each witness evaluates to a distinct action.
      CHECK(test::brute_order(m, gens, 6, 1000) <= *r.total);
    }
  }
}

TEST_CASE("budgets must be positive") {
  auto m = catalog::fig1();
  CHECK_THROWS_AS(Enumerator(m, {StateWord{{0}}}, {0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Enumerator(m, {}, {}), std::invalid_argument);
}

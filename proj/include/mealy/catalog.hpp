#ifndef MEALY_CATALOG_HPP_
#define MEALY_CATALOG_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mealy/automaton.hpp"

// Builders for the standard example automata.  Families with infinitely many
// states are truncated; edges that would leave the truncation go to the
// identity state instead.

namespace mealy::catalog {

  // States t, s over {0, 1}:
  //   t: 0|0 -> s, 1|0 -> t
  //   s: 0|1 -> s, 1|0 -> s
  MealyAutomaton fig1();

  // States a1..an, 1 over {0, 1, 2}.  a1 swaps 0 and 1 and fixes 2, then
  // becomes the identity; ak (k >= 2) fixes 0, 1 (-> identity) and 2
  // (-> a(k-1)).  So ak flips the k-th letter of 2^(k-1) x.
  MealyAutomaton fig2(std::size_t n);

  // States x0..xn, a1..an, 1 over {0, 1}.  The x chain reads 0s
  // (xk: 0|0 -> x(k+1), 1|1 -> ak; x0: 1|1 -> 1), xn: 0|0 -> 1 closes the
  // truncation; a1 swaps 0 and 1, ak (k >= 2): 0|1 -> 1, 1|0 -> a(k-1).
  MealyAutomaton fig3(std::size_t n);

  // States e and a<i>_<j> for 1 <= i <= n, 1 <= j <= i^2 over {0, 1, 2},
  // with a<i>_0 = e:
  //   j = 1 mod i:  0|1 -> a<i>_<j-1>, 1|0 -> a<i>_<j-1>, 2|2 -> e
  //   otherwise:    0|0 -> e,          1|1 -> e,          2|2 -> a<i>_<j-1>
  MealyAutomaton fig4(std::size_t n);

  // Binary odometer: a: 0|1 -> e, 1|0 -> a; e the identity.  a^n are
  // pairwise distinct.
  MealyAutomaton adding_machine();

  // One state fixing every letter of an alphabet of the given size.
  MealyAutomaton identity(std::size_t num_letters = 2);

  // Name of the fig4 state a_ij.
  std::string fig4_state(std::size_t i, std::size_t j);

  // Words of length i^2 with a letter from {0, 1} at positions k = 1 mod i
  // (1-based) and 2 elsewhere, in lexicographic order; 2^i words.
  std::vector<Word> v_set(std::size_t i);

  // "fig1", "fig2:N", "fig3:N", "fig4:N", "adding", "identity[:K]".
  // Throws ParseError for unknown names or bad parameters.
  MealyAutomaton by_name(std::string_view spec);

  // The names accepted by by_name, with parameter placeholders.
  std::vector<std::string> names();

}  // namespace mealy::catalog

#endif  // MEALY_CATALOG_HPP_

#ifndef MEALY_ORBITS_HPP_
#define MEALY_ORBITS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mealy/automaton.hpp"
#include "mealy/element.hpp"
#include "mealy/hash.hpp"

// Orbits always contain their basepoint: they are computed as the closure of
// {u} under the generators, i.e. orbits of the semigroup with an identity
// adjoined.

namespace mealy {

  inline constexpr std::size_t kDefaultOrbitCap = 10000;

  // The generators of the acting semigroup, as canonical elements.
  class GeneratorSet {
   public:
    GeneratorSet(MealyAutomaton const& m, std::vector<StateWord> const& gens);
    explicit GeneratorSet(std::vector<Element> gens);

    // Every state of m, as single-state words.
    static GeneratorSet all_states(MealyAutomaton const& m);

    [[nodiscard]] std::size_t size() const noexcept {
      return _gens.size();
    }
    [[nodiscard]] std::size_t num_letters() const noexcept {
      return _gens.front().num_letters();
    }
    [[nodiscard]] Element const& operator[](std::size_t i) const {
      return _gens[i];
    }
    [[nodiscard]] std::vector<Element> const& elements() const noexcept {
      return _gens;
    }

   private:
    std::vector<Element> _gens;
  };

  struct Orbit {
    Word basepoint;
    // Discovery order; points[0] is the basepoint.
    std::vector<Word> points;
    // edges[i][g] is the index of g.points[i]; empty unless requested.
    std::vector<std::vector<std::size_t>> edges;

    [[nodiscard]] std::size_t size() const noexcept {
      return points.size();
    }
  };

  // Breadth-first closure of {u}.  Throws ResourceLimitError (lower bound
  // `cap`) if the orbit has more than `cap` points.
  Orbit orbit_finite(GeneratorSet const& gens, Word const& u,
                     std::size_t cap = kDefaultOrbitCap,
                     bool        with_edges = false);

  Orbit orbit_finite(MealyAutomaton const& m, std::vector<StateWord> const& gens,
                     Word const& u, std::size_t cap = kDefaultOrbitCap,
                     bool with_edges = false);

  // Finite-depth approximation max_{w in A^depth} |orbit(v w)| of the
  // supremum of orbit sizes over all infinite extensions of v.
  struct MDepthValue {
    Word        v;
    std::size_t depth    = 0;
    std::size_t value    = 0;
    // Some orbit hit the cap; value is then only a lower bound.
    bool        exceeded = false;

    bool operator==(MDepthValue const&) const = default;
  };

  // Memoised orbit sizes and m-values for one generator set.  Not
  // thread-safe; use one instance per thread.
  class OrbitCache {
   public:
    struct Size {
      std::size_t value;
      bool        exceeded;
    };

    OrbitCache(GeneratorSet gens, std::size_t cap);

    Size orbit_size(Word const& u);
    Size m_depth(Word const& v, std::size_t depth);

    [[nodiscard]] GeneratorSet const& generators() const noexcept {
      return _gens;
    }
    [[nodiscard]] std::size_t cap() const noexcept {
      return _cap;
    }
    // Orbit points generated so far (the work unit of orbit searches).
    [[nodiscard]] std::size_t work() const noexcept {
      return _work;
    }

   private:
    GeneratorSet                                             _gens;
    std::size_t                                              _cap;
    std::size_t                                              _work = 0;
    std::unordered_map<Word, Size, detail::VectorHash>       _orbits;
    std::map<std::pair<Word, std::size_t>, Size>             _m;
  };

  MDepthValue m_depth(GeneratorSet const& gens, Word const& v,
                      std::size_t depth, std::size_t cap = kDefaultOrbitCap);

  struct UPOrbit {
    UPWord              basepoint;
    std::vector<UPWord> points;  // discovery order, points[0] == basepoint
    bool                closed = false;
    // points.size(); a lower bound on the true size when !closed
    std::size_t         lower_bound = 0;
    std::size_t         cap         = 0;
  };

  // s.x for an element given as a transducer.
  UPWord act_upword(Element const& e, UPWord const& x,
                    std::size_t step_limit = kDefaultUPWordStepLimit);

  // Closure of {x} under the generators, stopping (closed == false) once
  // `cap` points are known and more remain.
  UPOrbit orbit_upword(GeneratorSet const& gens, UPWord const& x,
                       std::size_t cap = kDefaultOrbitCap);

  struct WitnessBudget {
    std::size_t max_depth = 8;
    std::size_t lookahead = 2;
    std::size_t orbit_cap = kDefaultOrbitCap;

    bool operator==(WitnessBudget const&) const = default;
  };

  // Prefixes u_0 < u_1 < ... along one greedy branch, recorded where the
  // orbit size strictly increases.  u_0 is the first prefix of length 1.
  struct WitnessChain {
    std::vector<Word>        prefixes;
    std::vector<std::size_t> sizes;
    WitnessBudget            budget;
    // The branch followed, up to the depth reached.
    Word                     branch;
    // Orbit points generated.
    std::size_t              work = 0;
    // Largest orbit size (or lower bound) seen while searching.
    std::size_t              largest_orbit = 0;
    // The search stopped because an orbit hit the cap.
    bool                     capped = false;

    bool operator==(WitnessChain const&) const = default;
  };

  // Greedy descent from the empty word: at prefix v move to the child v a
  // maximising m_depth(v a, lookahead), smallest letter on ties.  Can be
  // advanced one letter at a time.
  class WitnessSearch {
   public:
    WitnessSearch(GeneratorSet gens, WitnessBudget budget);

    // Extend the branch by one letter.  Returns finished().
    bool step();
    [[nodiscard]] bool finished() const noexcept {
      return _done;
    }
    [[nodiscard]] WitnessChain chain() const;
    [[nodiscard]] std::size_t work() const noexcept {
      return _cache.work();
    }

   private:
    OrbitCache   _cache;
    WitnessChain _chain;
    bool         _done = false;
  };

  WitnessChain witness_search(GeneratorSet const& gens, WitnessBudget budget);

  // Restriction to the generators of the map s -> (s., s@) on the orbit of
  // v: orbit points labelled breadth-first from the basepoint (label 0) with
  // generators in index order, the endomap of each generator on labels, and
  // the section of each generator at each point.  Equality is structural
  // and ignores the points themselves, so two signatures are equal iff a
  // basepoint-preserving bijection of orbits intertwines all of the data.
  template <typename Section>
  struct BasicOrbitSignature {
    std::size_t                           size = 0;
    std::vector<Word>                     points;
    std::vector<std::vector<std::size_t>> endomaps;  // [gen][label]
    std::vector<std::vector<Section>>     sections;  // [gen][label]

    bool operator==(BasicOrbitSignature const& other) const {
      return size == other.size && endomaps == other.endomaps
             && sections == other.sections;
    }
  };

  // Generators are states, so sections are states.
  using OrbitSignature = BasicOrbitSignature<StateIndex>;
  // Generators are arbitrary state words; sections are elements.
  using ExtendedOrbitSignature = BasicOrbitSignature<Element>;

  OrbitSignature orbit_signature(MealyAutomaton const&          m,
                                 std::vector<StateIndex> const& gens,
                                 Word const&                    v,
                                 std::size_t cap = kDefaultOrbitCap);

  ExtendedOrbitSignature
  extended_orbit_signature(MealyAutomaton const&         m,
                           std::vector<StateWord> const& gens, Word const& v,
                           std::size_t cap = kDefaultOrbitCap);

  template <typename Section>
  bool signature_equal(BasicOrbitSignature<Section> const& a,
                       BasicOrbitSignature<Section> const& b) {
    return a == b;
  }

  // The action of the generators on all of A^length, words encoded in base
  // |A| with the first letter most significant.
  class LevelAction {
   public:
    using Code = std::uint32_t;

    // Throws ResourceLimitError if |A|^length exceeds max_words.
    LevelAction(GeneratorSet const& gens, std::size_t length,
                std::size_t max_words = std::size_t(1) << 24);

    [[nodiscard]] std::size_t num_words() const noexcept {
      return _num_words;
    }
    [[nodiscard]] std::size_t length() const noexcept {
      return _length;
    }
    [[nodiscard]] Code image(std::size_t gen, Code w) const {
      return _images[gen][w];
    }
    [[nodiscard]] Code encode(Word const& w) const;
    [[nodiscard]] Word decode(Code c) const;

    // Size of the orbit of w, or nullopt if it exceeds cap.
    std::optional<std::size_t> orbit_size(Code w, std::size_t cap) const;

   private:
    std::size_t                    _num_letters;
    std::size_t                    _length;
    std::size_t                    _num_words;
    std::vector<std::vector<Code>> _images;
    // scratch for orbit_size
    mutable std::vector<std::uint32_t> _stamp;
    mutable std::uint32_t              _epoch = 0;
  };

}  // namespace mealy

#endif  // MEALY_ORBITS_HPP_

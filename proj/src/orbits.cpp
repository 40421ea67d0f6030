#include "mealy/orbits.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "mealy/error.hpp"

namespace mealy {

  ////////////////////////////////////////////////////////////////////////
  // GeneratorSet
  ////////////////////////////////////////////////////////////////////////

  GeneratorSet::GeneratorSet(MealyAutomaton const&         m,
                             std::vector<StateWord> const& gens) {
    if (gens.empty()) {
      throw std::invalid_argument("at least one generator is required");
    }
    _gens.reserve(gens.size());
    for (auto const& g : gens) {
      _gens.push_back(element_of(m, g));
    }
  }

  GeneratorSet::GeneratorSet(std::vector<Element> gens)
      : _gens(std::move(gens)) {
    if (_gens.empty()) {
      throw std::invalid_argument("at least one generator is required");
    }
    for (auto const& g : _gens) {
      if (g.alphabet() != _gens.front().alphabet()) {
        throw std::invalid_argument("generators over different alphabets");
      }
    }
  }

  GeneratorSet GeneratorSet::all_states(MealyAutomaton const& m) {
    std::vector<StateWord> gens;
    for (StateIndex q = 0; q < m.num_states(); ++q) {
      gens.push_back(StateWord{{q}});
    }
    return GeneratorSet(m, gens);
  }

  ////////////////////////////////////////////////////////////////////////
  // Finite orbits
  ////////////////////////////////////////////////////////////////////////

  Orbit orbit_finite(GeneratorSet const& gens, Word const& u, size_t cap,
                     bool with_edges) {
    if (cap == 0) {
      throw std::invalid_argument("orbit cap must be positive");
    }
    for (auto a : u) {
      if (a >= gens.num_letters()) {
        throw std::out_of_range("letter index out of range");
      }
    }
    Orbit orbit;
    orbit.basepoint = u;
    orbit.points.push_back(u);
    std::unordered_map<Word, size_t, detail::VectorHash> index;
    index.emplace(u, 0);
    Word image(u.size());
    for (size_t i = 0; i < orbit.points.size(); ++i) {
      if (with_edges) {
        orbit.edges.emplace_back(gens.size());
      }
      for (size_t g = 0; g < gens.size(); ++g) {
        gens[g].act(orbit.points[i], image);
        auto [it, inserted] = index.emplace(image, orbit.points.size());
        if (inserted) {
          if (orbit.points.size() >= cap) {
            throw ResourceLimitError("orbit has more than " + std::to_string(cap)
                                         + " points",
                                     cap);
          }
          orbit.points.push_back(image);
        }
        if (with_edges) {
          orbit.edges[i][g] = it->second;
        }
      }
    }
    return orbit;
  }

  Orbit orbit_finite(MealyAutomaton const& m, std::vector<StateWord> const& gens,
                     Word const& u, size_t cap, bool with_edges) {
    return orbit_finite(GeneratorSet(m, gens), u, cap, with_edges);
  }

  ////////////////////////////////////////////////////////////////////////
  // OrbitCache and m_depth
  ////////////////////////////////////////////////////////////////////////

  OrbitCache::OrbitCache(GeneratorSet gens, size_t cap)
      : _gens(std::move(gens)), _cap(cap) {
    if (cap == 0) {
      throw std::invalid_argument("orbit cap must be positive");
    }
  }

  OrbitCache::Size OrbitCache::orbit_size(Word const& u) {
    if (auto it = _orbits.find(u); it != _orbits.end()) {
      return it->second;
    }
    Size s;
    try {
      s = {orbit_finite(_gens, u, _cap).size(), false};
    } catch (ResourceLimitError const& e) {
      s = {e.lower_bound(), true};
    }
    _work += s.value;
    _orbits.emplace(u, s);
    return s;
  }

  OrbitCache::Size OrbitCache::m_depth(Word const& v, size_t depth) {
    if (depth == 0) {
      return orbit_size(v);
    }
    auto key = std::make_pair(v, depth);
    if (auto it = _m.find(key); it != _m.end()) {
      return it->second;
    }
    Size best{0, false};
    Word child = v;
    child.push_back(0);
    for (Letter a = 0; a < _gens.num_letters(); ++a) {
      child.back() = a;
      auto s       = m_depth(child, depth - 1);
      best.value   = std::max(best.value, s.value);
      best.exceeded |= s.exceeded;
    }
    _m.emplace(std::move(key), best);
    return best;
  }

  MDepthValue m_depth(GeneratorSet const& gens, Word const& v, size_t depth,
                      size_t cap) {
    OrbitCache cache(gens, cap);
    auto       s = cache.m_depth(v, depth);
    return {v, depth, s.value, s.exceeded};
  }

  ////////////////////////////////////////////////////////////////////////
  // Ultimately periodic orbits
  ////////////////////////////////////////////////////////////////////////

  UPWord act_upword(Element const& e, UPWord const& x, size_t step_limit) {
    size_t const k = e.num_letters();
    for (auto a : x.preperiod()) {
      if (a >= k) {
        throw std::out_of_range("letter index out of range");
      }
    }
    for (auto a : x.period()) {
      if (a >= k) {
        throw std::out_of_range("letter index out of range");
      }
    }
    StateIndex q = 0;
    Word       out;
    for (auto a : x.preperiod()) {
      auto const& t = e(q, a);
      out.push_back(t.output);
      q = t.next;
    }
    constexpr size_t    unseen = std::numeric_limits<size_t>::max();
    std::vector<size_t> boundary(e.num_states(), unseen);
    size_t              steps = out.size();
    while (boundary[q] == unseen) {
      boundary[q] = out.size();
      steps += x.period().size();
      if (steps > step_limit) {
        throw ResourceLimitError("act_upword: section cycle not closed within "
                                     + std::to_string(step_limit) + " letters",
                                 out.size());
      }
      for (auto a : x.period()) {
        auto const& t = e(q, a);
        out.push_back(t.output);
        q = t.next;
      }
    }
    size_t const start = boundary[q];
    return UPWord(Word(out.begin(), out.begin() + start),
                  Word(out.begin() + start, out.end()));
  }

  UPOrbit orbit_upword(GeneratorSet const& gens, UPWord const& x, size_t cap) {
    if (cap == 0) {
      throw std::invalid_argument("orbit cap must be positive");
    }
    UPOrbit orbit{x, {x}, false, 0, cap};
    std::map<UPWord, size_t> index;
    index.emplace(x, 0);
    for (size_t i = 0; i < orbit.points.size(); ++i) {
      for (size_t g = 0; g < gens.size(); ++g) {
        auto y = act_upword(gens[g], orbit.points[i]);
        if (index.contains(y)) {
          continue;
        }
        if (orbit.points.size() >= cap) {
          orbit.lower_bound = orbit.points.size();
          return orbit;
        }
        index.emplace(y, orbit.points.size());
        orbit.points.push_back(std::move(y));
      }
    }
    orbit.closed      = true;
    orbit.lower_bound = orbit.points.size();
    return orbit;
  }

  ////////////////////////////////////////////////////////////////////////
  // Witness search
  ////////////////////////////////////////////////////////////////////////

  WitnessSearch::WitnessSearch(GeneratorSet gens, WitnessBudget budget)
      : _cache(std::move(gens), budget.orbit_cap) {
    if (budget.max_depth == 0 || budget.orbit_cap == 0) {
      throw std::invalid_argument("witness budgets must be positive");
    }
    _chain.budget = budget;
  }

  bool WitnessSearch::step() {
    if (_done) {
      return true;
    }
    auto const& budget = _chain.budget;
    Word        child  = _chain.branch;
    child.push_back(0);
    Letter best       = 0;
    size_t best_value = 0;
    for (Letter a = 0; a < _cache.generators().num_letters(); ++a) {
      child.back() = a;
      auto s       = _cache.m_depth(child, budget.lookahead);
      _chain.largest_orbit = std::max(_chain.largest_orbit, s.value);
      if (a == 0 || s.value > best_value) {
        best       = a;
        best_value = s.value;
      }
    }
    _chain.branch.push_back(best);
    auto s = _cache.orbit_size(_chain.branch);
    _chain.largest_orbit = std::max(_chain.largest_orbit, s.value);
    if (s.exceeded) {
      _chain.capped = true;
      _done         = true;
    } else if (_chain.sizes.empty() || s.value > _chain.sizes.back()) {
      _chain.prefixes.push_back(_chain.branch);
      _chain.sizes.push_back(s.value);
    }
    if (_chain.branch.size() >= budget.max_depth) {
      _done = true;
    }
    return _done;
  }

  WitnessChain WitnessSearch::chain() const {
    WitnessChain c = _chain;
    c.work         = _cache.work();
    return c;
  }

  WitnessChain witness_search(GeneratorSet const& gens, WitnessBudget budget) {
    WitnessSearch search(gens, budget);
    while (!search.step()) {
    }
    return search.chain();
  }

  ////////////////////////////////////////////////////////////////////////
  // Signatures
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Shared breadth-first labelling; `apply(g, point)` returns the image
    // and the section of generator g at the point.
    template <typename Section, typename Apply>
    BasicOrbitSignature<Section> label_orbit(size_t num_gens, Word const& v,
                                             size_t cap, Apply&& apply) {
      BasicOrbitSignature<Section> sig;
      sig.points.push_back(v);
      sig.endomaps.resize(num_gens);
      sig.sections.resize(num_gens);
      std::unordered_map<Word, size_t, detail::VectorHash> label;
      label.emplace(v, 0);
      for (size_t i = 0; i < sig.points.size(); ++i) {
        for (size_t g = 0; g < num_gens; ++g) {
          auto [image, section] = apply(g, sig.points[i]);
          auto [it, inserted]   = label.emplace(image, sig.points.size());
          if (inserted) {
            if (sig.points.size() >= cap) {
              throw ResourceLimitError("orbit has more than "
                                           + std::to_string(cap) + " points",
                                       cap);
            }
            sig.points.push_back(std::move(image));
          }
          sig.endomaps[g].push_back(it->second);
          sig.sections[g].push_back(std::move(section));
        }
      }
      sig.size = sig.points.size();
      return sig;
    }
  }  // namespace

  OrbitSignature orbit_signature(MealyAutomaton const&          m,
                                 std::vector<StateIndex> const& gens,
                                 Word const& v, size_t cap) {
    if (gens.empty()) {
      throw std::invalid_argument("at least one generator is required");
    }
    for (auto q : gens) {
      if (q >= m.num_states()) {
        throw std::out_of_range("state index out of range");
      }
    }
    check_word(m, v);
    return label_orbit<StateIndex>(
        gens.size(), v, cap, [&](size_t g, Word const& w) {
          auto r = act_word(m, gens[g], w);
          return std::make_pair(std::move(r.image), r.section);
        });
  }

  ExtendedOrbitSignature
  extended_orbit_signature(MealyAutomaton const&         m,
                           std::vector<StateWord> const& gens, Word const& v,
                           size_t cap) {
    if (gens.empty()) {
      throw std::invalid_argument("at least one generator is required");
    }
    check_word(m, v);
    return label_orbit<Element>(
        gens.size(), v, cap, [&](size_t g, Word const& w) {
          auto r = act_stateword(m, gens[g], w);
          return std::make_pair(std::move(r.image), element_of(m, r.section));
        });
  }

  ////////////////////////////////////////////////////////////////////////
  // LevelAction
  ////////////////////////////////////////////////////////////////////////

  LevelAction::LevelAction(GeneratorSet const& gens, size_t length,
                           size_t max_words)
      : _num_letters(gens.num_letters()), _length(length), _num_words(1) {
    for (size_t i = 0; i < length; ++i) {
      _num_words *= _num_letters;
      if (_num_words > max_words) {
        throw ResourceLimitError("level has more than "
                                     + std::to_string(max_words) + " words",
                                 max_words);
      }
    }
    _images.resize(gens.size(), std::vector<Code>(_num_words));
    Word image(length);
    for (Code c = 0; c < _num_words; ++c) {
      Word const w = decode(c);
      for (size_t g = 0; g < gens.size(); ++g) {
        gens[g].act(w, image);
        _images[g][c] = encode(image);
      }
    }
    _stamp.assign(_num_words, 0);
  }

  LevelAction::Code LevelAction::encode(Word const& w) const {
    Code c = 0;
    for (auto a : w) {
      c = c * static_cast<Code>(_num_letters) + a;
    }
    return c;
  }

  Word LevelAction::decode(Code c) const {
    Word w(_length);
    for (size_t i = _length; i-- > 0;) {
      w[i] = c % _num_letters;
      c /= _num_letters;
    }
    return w;
  }

  std::optional<size_t> LevelAction::orbit_size(Code w, size_t cap) const {
    if (++_epoch == 0) {
      std::fill(_stamp.begin(), _stamp.end(), 0);
      _epoch = 1;
    }
    std::vector<Code> queue{w};
    _stamp[w] = _epoch;
    for (size_t i = 0; i < queue.size(); ++i) {
      for (auto const& img : _images) {
        Code const y = img[queue[i]];
        if (_stamp[y] != _epoch) {
          if (queue.size() >= cap) {
            return std::nullopt;
          }
          _stamp[y] = _epoch;
          queue.push_back(y);
        }
      }
    }
    return queue.size();
  }

}  // namespace mealy

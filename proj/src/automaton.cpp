#include "mealy/automaton.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "mealy/error.hpp"
#include "mealy/hash.hpp"

namespace mealy {

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  Alphabet::Alphabet(std::vector<std::string> names)
      : _names(std::move(names)), _compact(true) {
    if (_names.empty()) {
      throw ValidationError("the alphabet must contain at least one letter");
    }
    std::unordered_set<std::string> seen;
    for (auto const& n : _names) {
      if (n.empty()) {
        throw ValidationError("letter names must be non-empty");
      }
      if (!seen.insert(n).second) {
        throw ValidationError("duplicate letter name \"" + n + "\"");
      }
      _compact = _compact && n.size() == 1;
    }
  }

  std::optional<Letter> Alphabet::index_of(std::string_view name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    if (it == _names.end()) {
      return std::nullopt;
    }
    return static_cast<Letter>(it - _names.begin());
  }

  StateWord concat(StateWord const& s, StateWord const& t) {
    StateWord result = s;
    result.states.insert(result.states.end(), t.states.begin(), t.states.end());
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // MealyAutomaton
  ////////////////////////////////////////////////////////////////////////

  MealyAutomaton::MealyAutomaton(Alphabet                 alphabet,
                                 std::vector<std::string> state_names,
                                 std::vector<Transition>  table)
      : _alphabet(std::make_shared<Alphabet const>(std::move(alphabet))),
        _state_names(std::move(state_names)),
        _table(std::move(table)) {
    if (_state_names.empty()) {
      throw ValidationError("an automaton must have at least one state");
    }
    std::unordered_set<std::string> seen;
    for (auto const& n : _state_names) {
      if (n.empty()) {
        throw ValidationError("state names must be non-empty");
      }
      if (!seen.insert(n).second) {
        throw ValidationError("duplicate state name \"" + n + "\"");
      }
    }
    size_t const k = _alphabet->size();
    if (_table.size() != _state_names.size() * k) {
      throw ValidationError("transition table has " + std::to_string(_table.size())
                            + " entries, expected "
                            + std::to_string(_state_names.size() * k));
    }
    for (size_t i = 0; i < _table.size(); ++i) {
      if (_table[i].output >= k || _table[i].next >= _state_names.size()) {
        throw ValidationError("transition (" + _state_names[i / k] + ", "
                              + _alphabet->name(i % k)
                              + ") is out of range");
      }
    }
  }

  std::optional<StateIndex>
  MealyAutomaton::state_index(std::string_view name) const {
    auto it = std::find(_state_names.begin(), _state_names.end(), name);
    if (it == _state_names.end()) {
      return std::nullopt;
    }
    return static_cast<StateIndex>(it - _state_names.begin());
  }

  ////////////////////////////////////////////////////////////////////////
  // UPWord
  ////////////////////////////////////////////////////////////////////////

  namespace {
    size_t primitive_root_length(Word const& w) {
      size_t const n = w.size();
      for (size_t d = 1; d < n; ++d) {
        if (n % d != 0) {
          continue;
        }
        bool ok = true;
        for (size_t i = d; i < n && ok; ++i) {
          ok = w[i] == w[i - d];
        }
        if (ok) {
          return d;
        }
      }
      return n;
    }
  }  // namespace

  UPWord::UPWord(Word preperiod, Word period)
      : _preperiod(std::move(preperiod)), _period(std::move(period)) {
    if (_period.empty()) {
      throw std::invalid_argument("the period of an ultimately periodic word "
                                  "must be non-empty");
    }
    _period.resize(primitive_root_length(_period));
    // x.p_k (p_1 ... p_k)^w == x (p_k p_1 ... p_{k-1})^w
    while (!_preperiod.empty() && _preperiod.back() == _period.back()) {
      _preperiod.pop_back();
      std::rotate(_period.begin(), _period.end() - 1, _period.end());
    }
  }

  Letter UPWord::at(std::size_t i) const {
    if (i < _preperiod.size()) {
      return _preperiod[i];
    }
    return _period[(i - _preperiod.size()) % _period.size()];
  }

  Word UPWord::prefix(std::size_t n) const {
    Word result(n);
    for (size_t i = 0; i < n; ++i) {
      result[i] = at(i);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Actions
  ////////////////////////////////////////////////////////////////////////

  void check_word(MealyAutomaton const& m, std::span<Letter const> u) {
    for (auto a : u) {
      if (a >= m.num_letters()) {
        throw std::out_of_range("letter index " + std::to_string(a)
                                + " out of range");
      }
    }
  }

  void check_stateword(MealyAutomaton const& m, StateWord const& s) {
    if (s.states.empty()) {
      throw std::invalid_argument("state words must be non-empty");
    }
    for (auto q : s.states) {
      if (q >= m.num_states()) {
        throw std::out_of_range("state index " + std::to_string(q)
                                + " out of range");
      }
    }
  }

  Transition step(MealyAutomaton const& m, StateIndex q, Letter a) {
    if (q >= m.num_states() || a >= m.num_letters()) {
      throw std::out_of_range("step: state or letter out of range");
    }
    return m(q, a);
  }

  WordAction act_word(MealyAutomaton const& m, StateIndex q,
                      std::span<Letter const> u) {
    if (q >= m.num_states()) {
      throw std::out_of_range("act_word: state out of range");
    }
    check_word(m, u);
    WordAction result{Word(u.size()), q};
    for (size_t i = 0; i < u.size(); ++i) {
      auto const& t   = m(result.section, u[i]);
      result.image[i] = t.output;
      result.section  = t.next;
    }
    return result;
  }

  StateWordAction act_stateword(MealyAutomaton const& m, StateWord const& s,
                                std::span<Letter const> u) {
    check_stateword(m, s);
    check_word(m, u);
    StateWordAction result{Word(u.begin(), u.end()), s};
    for (size_t i = s.size(); i-- > 0;) {
      StateIndex q = s.states[i];
      for (auto& a : result.image) {
        auto const& t = m(q, a);
        a             = t.output;
        q             = t.next;
      }
      result.section.states[i] = q;
    }
    return result;
  }

  namespace {
    // Feed one letter through the tuple of states, rightmost first.
    Letter feed(MealyAutomaton const& m, std::vector<StateIndex>& tuple,
                Letter a) {
      for (size_t i = tuple.size(); i-- > 0;) {
        auto const& t = m(tuple[i], a);
        a             = t.output;
        tuple[i]      = t.next;
      }
      return a;
    }
  }  // namespace

  UPWord act_upword(MealyAutomaton const& m, StateWord const& s,
                    UPWord const& x, std::size_t step_limit) {
    check_stateword(m, s);
    check_word(m, x.preperiod());
    check_word(m, x.period());

    std::vector<StateIndex> tuple = s.states;
    Word                    out;
    for (auto a : x.preperiod()) {
      out.push_back(feed(m, tuple, a));
    }
    // The output after a period boundary only depends on the current tuple,
    // so the first repeated tuple closes the cycle.
    std::unordered_map<std::vector<StateIndex>, size_t, detail::VectorHash>
           boundary;
    size_t steps = out.size();
    while (true) {
      auto [it, inserted] = boundary.emplace(tuple, out.size());
      if (!inserted) {
        size_t const start = it->second;
        return UPWord(Word(out.begin(), out.begin() + start),
                      Word(out.begin() + start, out.end()));
      }
      steps += x.period().size();
      if (steps > step_limit) {
        throw ResourceLimitError(
            "act_upword: section cycle not closed within "
                + std::to_string(step_limit) + " letters",
            out.size());
      }
      for (auto a : x.period()) {
        out.push_back(feed(m, tuple, a));
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // DOT
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string quoted(std::string_view s) {
      std::string r = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          r += '\\';
        }
        r += c;
      }
      r += '"';
      return r;
    }
  }  // namespace

  std::string export_dot(MealyAutomaton const& m) {
    std::ostringstream os;
    os << "digraph mealy {\n";
    for (StateIndex q = 0; q < m.num_states(); ++q) {
      os << "  " << quoted(m.state_name(q)) << ";\n";
    }
    auto const& A = m.alphabet();
    for (StateIndex q = 0; q < m.num_states(); ++q) {
      for (Letter a = 0; a < A.size(); ++a) {
        auto const& t = m(q, a);
        os << "  " << quoted(m.state_name(q)) << " -> "
           << quoted(m.state_name(t.next))
           << " [label=" << quoted(A.name(a) + "|" + A.name(t.output))
           << "];\n";
      }
    }
    os << "}\n";
    return os.str();
  }

}  // namespace mealy

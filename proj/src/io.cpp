#include "mealy/io.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

#include "mealy/error.hpp"

namespace mealy {

  using json = nlohmann::json;

  ////////////////////////////////////////////////////////////////////////
  // Automaton files
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::vector<std::string> string_list(json const& j, char const* field) {
      if (!j.contains(field)) {
        throw ParseError(std::string("missing field \"") + field + "\"");
      }
      auto const& v = j.at(field);
      if (!v.is_array()) {
        throw ParseError(std::string("field \"") + field
                         + "\" must be a list of strings");
      }
      std::vector<std::string> out;
      for (auto const& x : v) {
        if (!x.is_string()) {
          throw ParseError(std::string("field \"") + field
                           + "\" must be a list of strings");
        }
        out.push_back(x.get<std::string>());
      }
      return out;
    }

    // Records keys that occur twice within one JSON object below
    // "transitions".  The DOM keeps only the last occurrence, so this has to
    // happen during parsing.
    class RepeatedKeyTracker {
     public:
      bool operator()(int, json::parse_event_t event, json& parsed) {
        switch (event) {
          case json::parse_event_t::object_start:
            _frames.push_back({true, {}, {}});
            break;
          case json::parse_event_t::array_start:
            _frames.push_back({false, {}, {}});
            break;
          case json::parse_event_t::object_end:
          case json::parse_event_t::array_end:
            if (!_frames.empty()) {
              _frames.pop_back();
            }
            break;
          case json::parse_event_t::key: {
            if (_frames.empty() || !_frames.back().object) {
              break;
            }
            auto& frame = _frames.back();
            auto  key   = parsed.get<std::string>();
            bool  fresh = frame.keys.insert(key).second;
            frame.current = key;
            if (!fresh && _frames.size() >= 2
                && _frames[0].current == "transitions") {
              if (_frames.size() == 2) {
                repeated.emplace_back(key, "");
              } else if (_frames.size() == 3) {
                repeated.emplace_back(_frames[1].current, key);
              }
            }
            break;
          }
          default:
            break;
        }
        return true;
      }

      std::vector<std::pair<std::string, std::string>> repeated;

     private:
      struct Frame {
        bool                  object;
        std::set<std::string> keys;
        std::string           current;
      };
      std::vector<Frame> _frames;
    };

  }  // namespace

  RawDescription parse_description(std::string_view text) {
    auto tracker = std::make_shared<RepeatedKeyTracker>();
    json j;
    try {
      j = json::parse(text.begin(), text.end(),
                      [tracker](int depth, json::parse_event_t event,
                                json& parsed) {
                        return (*tracker)(depth, event, parsed);
                      });
    } catch (json::parse_error const& e) {
      throw ParseError(std::string("malformed automaton file: ") + e.what());
    }
    if (!j.is_object()) {
      throw ParseError("an automaton file must contain a JSON object");
    }
    RawDescription raw;
    raw.alphabet = string_list(j, "alphabet");
    raw.states   = string_list(j, "states");
    raw.repeated = std::move(tracker->repeated);
    if (!j.contains("transitions") || !j.at("transitions").is_object()) {
      throw ParseError("field \"transitions\" must be an object");
    }
    for (auto const& [state, row] : j.at("transitions").items()) {
      if (!row.is_object()) {
        throw ParseError("transitions of state \"" + state
                         + "\" must be an object");
      }
      for (auto const& [letter, target] : row.items()) {
        if (!target.is_array() || target.size() != 2 || !target[0].is_string()
            || !target[1].is_string()) {
          throw ParseError("transition (" + state + ", " + letter
                           + ") must be [output letter, next state]");
        }
        raw.transitions.push_back({state, letter, target[0].get<std::string>(),
                                   target[1].get<std::string>()});
      }
    }
    return raw;
  }

  MealyAutomaton validate(RawDescription const& raw) {
    Alphabet alphabet(raw.alphabet);  // checks letter names
    std::unordered_map<std::string, StateIndex> state_index;
    for (size_t i = 0; i < raw.states.size(); ++i) {
      if (raw.states[i].empty()) {
        throw ValidationError("state names must be non-empty");
      }
      if (!state_index.emplace(raw.states[i], static_cast<StateIndex>(i))
               .second) {
        throw ValidationError("duplicate state name \"" + raw.states[i] + "\"");
      }
    }
    if (raw.states.empty()) {
      throw ValidationError("an automaton must have at least one state");
    }
    for (auto const& [state, letter] : raw.repeated) {
      if (letter.empty()) {
        throw ValidationError("transitions of state \"" + state
                              + "\" given more than once");
      }
      throw ValidationError("transition (" + state + ", " + letter
                            + ") given more than once");
    }

    size_t const                     k = alphabet.size();
    std::vector<std::optional<Transition>> table(raw.states.size() * k);
    for (auto const& t : raw.transitions) {
      auto const where = "(" + t.state + ", " + t.letter + ")";
      auto       q     = state_index.find(t.state);
      if (q == state_index.end()) {
        throw ValidationError("transition " + where + ": unknown state \""
                              + t.state + "\"");
      }
      auto a = alphabet.index_of(t.letter);
      if (!a) {
        throw ValidationError("transition " + where + ": unknown letter \""
                              + t.letter + "\"");
      }
      auto out = alphabet.index_of(t.output);
      if (!out) {
        throw ValidationError("transition " + where
                              + ": output letter \"" + t.output
                              + "\" is out of range");
      }
      auto next = state_index.find(t.next);
      if (next == state_index.end()) {
        throw ValidationError("transition " + where + ": next state \""
                              + t.next + "\" is out of range");
      }
      auto& slot = table[q->second * k + *a];
      if (slot) {
        throw ValidationError("transition " + where
                              + " given more than once");
      }
      slot = Transition{*out, next->second};
    }
    std::vector<Transition> full;
    full.reserve(table.size());
    for (size_t i = 0; i < table.size(); ++i) {
      if (!table[i]) {
        throw ValidationError("missing transition (" + raw.states[i / k] + ", "
                              + alphabet.name(i % k) + ")");
      }
      full.push_back(*table[i]);
    }
    return MealyAutomaton(std::move(alphabet), raw.states, std::move(full));
  }

  MealyAutomaton parse_automaton(std::string_view text) {
    return validate(parse_description(text));
  }

  MealyAutomaton load_automaton(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ParseError("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_automaton(buffer.str());
  }

  std::string to_json(MealyAutomaton const& m) {
    auto quote = [](std::string const& s) { return json(s).dump(); };
    auto list  = [&](std::vector<std::string> const& v) {
      std::string r = "[";
      for (size_t i = 0; i < v.size(); ++i) {
        r += (i ? ", " : "") + quote(v[i]);
      }
      return r + "]";
    };
    auto const&        A = m.alphabet();
    std::ostringstream os;
    os << "{\n";
    os << "  \"alphabet\": " << list(A.names()) << ",\n";
    os << "  \"states\": " << list(m.state_names()) << ",\n";
    os << "  \"transitions\": {\n";
    for (StateIndex q = 0; q < m.num_states(); ++q) {
      os << "    " << quote(m.state_name(q)) << ": {";
      for (Letter a = 0; a < A.size(); ++a) {
        auto const& t = m(q, a);
        os << (a ? ", " : "") << quote(A.name(a)) << ": ["
           << quote(A.name(t.output)) << ", " << quote(m.state_name(t.next))
           << "]";
      }
      os << "}" << (q + 1 < m.num_states() ? "," : "") << "\n";
    }
    os << "  }\n}\n";
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  std::string format_word(Alphabet const& alphabet, std::span<Letter const> w) {
    std::string r;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i > 0 && !alphabet.compact()) {
        r += '.';
      }
      r += alphabet.name(w[i]);
    }
    return r;
  }

  Word parse_word(Alphabet const& alphabet, std::string_view text) {
    Word w;
    auto push = [&](std::string_view name) {
      auto a = alphabet.index_of(name);
      if (!a) {
        throw ParseError("unknown letter \"" + std::string(name) + "\"");
      }
      w.push_back(*a);
    };
    if (text.empty()) {
      return w;
    }
    if (alphabet.compact()) {
      for (char c : text) {
        push(std::string_view(&c, 1));
      }
      return w;
    }
    size_t start = 0;
    while (true) {
      auto dot = text.find('.', start);
      push(text.substr(start, dot - start));
      if (dot == std::string_view::npos) {
        break;
      }
      start = dot + 1;
    }
    return w;
  }

  std::string format_upword(Alphabet const& alphabet, UPWord const& x) {
    return format_word(alphabet, x.preperiod()) + "("
           + format_word(alphabet, x.period()) + ")^ω";
  }

  UPWord parse_upword(Alphabet const& alphabet, std::string_view text) {
    for (std::string_view suffix : {"^ω", "^w"}) {
      if (text.ends_with(suffix)) {
        text.remove_suffix(suffix.size());
        break;
      }
    }
    auto open = text.find('(');
    if (open == std::string_view::npos || !text.ends_with(')')) {
      throw ParseError("ultimately periodic words are written pre(period), got \""
                       + std::string(text) + "\"");
    }
    auto pre = text.substr(0, open);
    auto per = text.substr(open + 1, text.size() - open - 2);
    if (!alphabet.compact() && pre.ends_with('.')) {
      pre.remove_suffix(1);
    }
    auto period = parse_word(alphabet, per);
    if (period.empty()) {
      throw ParseError("the period of an ultimately periodic word must be "
                       "non-empty");
    }
    return UPWord(parse_word(alphabet, pre), std::move(period));
  }

  std::string format_stateword(MealyAutomaton const& m, StateWord const& s) {
    std::string r;
    for (size_t i = 0; i < s.size(); ++i) {
      r += (i ? "." : "") + m.state_name(s.states[i]);
    }
    return r;
  }

  StateWord parse_stateword(MealyAutomaton const& m, std::string_view text) {
    StateWord s;
    size_t    start = 0;
    while (true) {
      auto dot  = text.find('.', start);
      auto name = text.substr(start, dot - start);
      auto q    = m.state_index(name);
      if (!q) {
        throw ParseError("unknown state \"" + std::string(name) + "\"");
      }
      s.states.push_back(*q);
      if (dot == std::string_view::npos) {
        break;
      }
      start = dot + 1;
    }
    return s;
  }

  std::vector<StateWord> parse_generators(MealyAutomaton const& m,
                                          std::string_view      text) {
    std::vector<StateWord> gens;
    if (text.empty()) {
      for (StateIndex q = 0; q < m.num_states(); ++q) {
        gens.push_back(StateWord{{q}});
      }
      return gens;
    }
    size_t start = 0;
    while (true) {
      auto comma = text.find(',', start);
      gens.push_back(parse_stateword(m, text.substr(start, comma - start)));
      if (comma == std::string_view::npos) {
        break;
      }
      start = comma + 1;
    }
    return gens;
  }

}  // namespace mealy

#include "mealy/catalog.hpp"

#include <charconv>
#include <stdexcept>

#include "mealy/error.hpp"

namespace mealy::catalog {

  namespace {

    // Fills a transition table by state name.
    class Builder {
     public:
      Builder(std::vector<std::string> letters, std::vector<std::string> states)
          : _alphabet(std::move(letters)),
            _states(std::move(states)),
            _table(_states.size() * _alphabet.size(), Transition{0, 0}) {}

      void set(std::string_view from, Letter in, Letter out,
               std::string_view to) {
        _table[index(from) * _alphabet.size() + in] = {out, index(to)};
      }

      void identity(std::string_view q) {
        for (Letter a = 0; a < _alphabet.size(); ++a) {
          set(q, a, a, q);
        }
      }

      MealyAutomaton build() && {
        return MealyAutomaton(std::move(_alphabet), std::move(_states),
                              std::move(_table));
      }

     private:
      StateIndex index(std::string_view name) const {
        for (size_t i = 0; i < _states.size(); ++i) {
          if (_states[i] == name) {
            return static_cast<StateIndex>(i);
          }
        }
        throw std::logic_error("catalog: unknown state " + std::string(name));
      }

      Alphabet                 _alphabet;
      std::vector<std::string> _states;
      std::vector<Transition>  _table;
    };

    std::string indexed(char prefix, size_t k) {
      return prefix + std::to_string(k);
    }

    void require_positive(size_t n, char const* what) {
      if (n == 0) {
        throw std::invalid_argument(std::string(what)
                                    + ": parameter must be at least 1");
      }
    }

  }  // namespace

  MealyAutomaton fig1() {
    Builder b({"0", "1"}, {"t", "s"});
    b.set("t", 0, 0, "s");
    b.set("t", 1, 0, "t");
    b.set("s", 0, 1, "s");
    b.set("s", 1, 0, "s");
    return std::move(b).build();
  }

  MealyAutomaton fig2(size_t n) {
    require_positive(n, "fig2");
    std::vector<std::string> states;
    for (size_t k = 1; k <= n; ++k) {
      states.push_back(indexed('a', k));
    }
    states.emplace_back("1");
    Builder b({"0", "1", "2"}, states);
    b.identity("1");
    b.set("a1", 0, 1, "1");
    b.set("a1", 1, 0, "1");
    b.set("a1", 2, 2, "1");
    for (size_t k = 2; k <= n; ++k) {
      auto const ak = indexed('a', k);
      b.set(ak, 0, 0, "1");
      b.set(ak, 1, 1, "1");
      b.set(ak, 2, 2, indexed('a', k - 1));
    }
    return std::move(b).build();
  }

  MealyAutomaton fig3(size_t n) {
    require_positive(n, "fig3");
    std::vector<std::string> states;
    for (size_t k = 0; k <= n; ++k) {
      states.push_back(indexed('x', k));
    }
    for (size_t k = 1; k <= n; ++k) {
      states.push_back(indexed('a', k));
    }
    states.emplace_back("1");
    Builder b({"0", "1"}, states);
    b.identity("1");
    b.set("x0", 0, 0, "x1");
    b.set("x0", 1, 1, "1");
    for (size_t k = 1; k <= n; ++k) {
      auto const xk = indexed('x', k);
      b.set(xk, 0, 0, k < n ? indexed('x', k + 1) : std::string("1"));
      b.set(xk, 1, 1, indexed('a', k));
    }
    b.set("a1", 0, 1, "1");
    b.set("a1", 1, 0, "1");
    for (size_t k = 2; k <= n; ++k) {
      auto const ak = indexed('a', k);
      b.set(ak, 0, 1, "1");
      b.set(ak, 1, 0, indexed('a', k - 1));
    }
    return std::move(b).build();
  }

  std::string fig4_state(size_t i, size_t j) {
    if (j == 0) {
      return "e";
    }
    return "a" + std::to_string(i) + "_" + std::to_string(j);
  }

  MealyAutomaton fig4(size_t n) {
    require_positive(n, "fig4");
    std::vector<std::string> states{"e"};
    for (size_t i = 1; i <= n; ++i) {
      for (size_t j = 1; j <= i * i; ++j) {
        states.push_back(fig4_state(i, j));
      }
    }
    Builder b({"0", "1", "2"}, states);
    b.identity("e");
    for (size_t i = 1; i <= n; ++i) {
      for (size_t j = 1; j <= i * i; ++j) {
        auto const q    = fig4_state(i, j);
        auto const prev = fig4_state(i, j - 1);
        if (j % i == 1 % i) {
          b.set(q, 0, 1, prev);
          b.set(q, 1, 0, prev);
          b.set(q, 2, 2, "e");
        } else {
          b.set(q, 0, 0, "e");
          b.set(q, 1, 1, "e");
          b.set(q, 2, 2, prev);
        }
      }
    }
    return std::move(b).build();
  }

  MealyAutomaton adding_machine() {
    Builder b({"0", "1"}, {"a", "e"});
    b.set("a", 0, 1, "e");
    b.set("a", 1, 0, "a");
    b.identity("e");
    return std::move(b).build();
  }

  MealyAutomaton identity(size_t num_letters) {
    require_positive(num_letters, "identity");
    std::vector<std::string> letters;
    for (size_t a = 0; a < num_letters; ++a) {
      letters.push_back(std::to_string(a));
    }
    Builder b(std::move(letters), {"e"});
    b.identity("e");
    return std::move(b).build();
  }

  std::vector<Word> v_set(size_t i) {
    require_positive(i, "v_set");
    size_t const length = i * i;
    std::vector<Word> result;
    // Free positions are 0, i, 2i, ... (0-based); the bits of `mask` fill
    // them most significant first, which yields lexicographic order.
    for (size_t mask = 0; mask < (size_t(1) << i); ++mask) {
      Word w(length, 2);
      for (size_t f = 0; f < i; ++f) {
        w[f * i] = (mask >> (i - 1 - f)) & 1;
      }
      result.push_back(std::move(w));
    }
    return result;
  }

  namespace {
    size_t parse_parameter(std::string_view text, std::string_view spec) {
      size_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                       value);
      if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
        throw ParseError("bad catalog parameter in \"" + std::string(spec)
                         + "\"");
      }
      return value;
    }
  }  // namespace

  MealyAutomaton by_name(std::string_view spec) {
    auto const colon = spec.find(':');
    auto const name  = spec.substr(0, colon);
    bool const has_param = colon != std::string_view::npos;
    auto param = [&]() { return parse_parameter(spec.substr(colon + 1), spec); };
    auto no_param = [&]() {
      if (has_param) {
        throw ParseError("catalog entry \"" + std::string(name)
                         + "\" takes no parameter");
      }
    };
    auto need_param = [&]() {
      if (!has_param) {
        throw ParseError("catalog entry \"" + std::string(name)
                         + "\" needs a parameter, e.g. " + std::string(name)
                         + ":2");
      }
      return param();
    };
    if (name == "fig1") {
      no_param();
      return fig1();
    }
    if (name == "fig2") {
      return fig2(need_param());
    }
    if (name == "fig3") {
      return fig3(need_param());
    }
    if (name == "fig4") {
      return fig4(need_param());
    }
    if (name == "adding") {
      no_param();
      return adding_machine();
    }
    if (name == "identity") {
      return identity(has_param ? param() : 2);
    }
    throw ParseError("unknown catalog automaton \"" + std::string(spec) + "\"");
  }

  std::vector<std::string> names() {
    return {"fig1", "fig2:N", "fig3:N", "fig4:N", "adding", "identity[:K]"};
  }

}  // namespace mealy::catalog

#include "mealy/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"

#include "mealy/catalog.hpp"
#include "mealy/element.hpp"
#include "mealy/error.hpp"
#include "mealy/finiteness.hpp"
#include "mealy/io.hpp"
#include "mealy/orbits.hpp"
#include "mealy/report.hpp"
#include "mealy/semigroup.hpp"

namespace mealy::cli {

  namespace {

    class UsageError : public std::runtime_error {
     public:
      using std::runtime_error::runtime_error;
    };

    struct RunConfig {
      std::string automaton_file;
      std::string catalog_name;
      std::string gens;
      std::string element;
      std::string word;
      std::string upword;
      bool        word_given   = false;
      bool        upword_given = false;
      std::size_t depth        = 8;
      std::size_t lookahead    = 2;
      std::size_t orbit_cap    = kDefaultOrbitCap;
      std::size_t max_elements = 10000;
      std::size_t max_length   = 12;
      std::size_t check_depth  = 0;
      bool        json         = false;
      bool        dot          = false;
      bool        witnesses    = false;
      std::string catalog_entry;
    };

    MealyAutomaton load(RunConfig const& c) {
      if (!c.automaton_file.empty() && !c.catalog_name.empty()) {
        throw UsageError("give either --automaton or --catalog, not both");
      }
      if (!c.automaton_file.empty()) {
        return load_automaton(c.automaton_file);
      }
      if (!c.catalog_name.empty()) {
        try {
          return catalog::by_name(c.catalog_name);
        } catch (ParseError const& e) {
          throw UsageError(e.what());
        }
      }
      throw UsageError("an automaton is required: --automaton FILE or "
                       "--catalog NAME[:PARAM]");
    }

    std::string shown(MealyAutomaton const& m, Word const& w) {
      return w.empty() ? std::string("ε") : format_word(m.alphabet(), w);
    }

    WitnessBudget witness_budget(RunConfig const& c) {
      return {c.depth, c.lookahead, c.orbit_cap};
    }

    ////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////

    void cmd_validate(RunConfig const& c, std::ostream& out) {
      auto m = load(c);
      if (c.json) {
        report::Json j;
        j["valid"]   = true;
        j["states"]  = m.num_states();
        j["letters"] = m.num_letters();
        out << report::dump(j);
      } else {
        out << m.num_states() << " states, " << m.num_letters()
            << " letters\n";
      }
    }

    void cmd_act(RunConfig const& c, std::ostream& out) {
      auto m = load(c);
      if (c.element.empty()) {
        throw UsageError("act needs --element");
      }
      if (c.word_given == c.upword_given) {
        throw UsageError("act needs exactly one of --word and --upword");
      }
      auto const s = parse_stateword(m, c.element);
      report::Json j;
      j["element"] = format_stateword(m, s);
      if (c.word_given) {
        auto const u = parse_word(m.alphabet(), c.word);
        auto const r = act_stateword(m, s, u);
        j["input"]   = format_word(m.alphabet(), u);
        j["image"]   = format_word(m.alphabet(), r.image);
        j["section"] = format_stateword(m, r.section);
        if (!c.json) {
          out << "image: " << shown(m, r.image) << "\n"
              << "section: " << format_stateword(m, r.section) << "\n";
        }
      } else {
        auto const x = parse_upword(m.alphabet(), c.upword);
        auto const y = act_upword(m, s, x);
        j["input"]   = format_upword(m.alphabet(), x);
        j["image"]   = format_upword(m.alphabet(), y);
        if (!c.json) {
          out << "image: " << format_upword(m.alphabet(), y) << "\n";
        }
      }
      if (c.json) {
        out << report::dump(j);
      }
    }

    void cmd_orbit(RunConfig const& c, std::ostream& out) {
      auto m    = load(c);
      auto gens = parse_generators(m, c.gens);
      if (c.word_given == c.upword_given) {
        throw UsageError("orbit needs exactly one of --word and --upword");
      }
      if (c.upword_given) {
        auto const x = parse_upword(m.alphabet(), c.upword);
        auto const o = orbit_upword(GeneratorSet(m, gens), x, c.orbit_cap);
        if (c.json) {
          out << report::dump(report::to_json(m, o));
          return;
        }
        if (o.closed) {
          out << "size " << o.points.size() << "\n";
        } else {
          out << "cap exceeded: at least " << o.lower_bound << " points\n";
        }
        for (auto const& y : o.points) {
          out << format_upword(m.alphabet(), y) << "\n";
        }
        return;
      }
      auto const u = parse_word(m.alphabet(), c.word);
      try {
        auto const o = orbit_finite(GeneratorSet(m, gens), u, c.orbit_cap,
                                    c.dot || c.json);
        if (c.dot) {
          out << report::orbit_dot(m, gens, o);
        } else if (c.json) {
          auto j        = report::to_json(m, gens, o);
          out << report::dump(j);
        } else {
          out << "size " << o.size() << "\n";
          for (auto const& p : o.points) {
            out << shown(m, p) << "\n";
          }
        }
      } catch (ResourceLimitError const& e) {
        if (c.json) {
          report::Json j;
          j["basepoint"]   = format_word(m.alphabet(), u);
          j["size"]        = nullptr;
          j["exceeded"]    = true;
          j["lower_bound"] = e.lower_bound();
          out << report::dump(j);
        } else {
          out << "cap exceeded: at least " << e.lower_bound() << " points\n";
        }
      }
    }

    void cmd_enumerate(RunConfig const& c, std::ostream& out) {
      auto       m    = load(c);
      auto       gens = parse_generators(m, c.gens);
      auto const r    = enumerate(m, gens, c.max_elements, c.max_length);
      if (c.json) {
        out << report::dump(report::to_json(m, r, c.witnesses));
        return;
      }
      out << "closed: " << (r.closed ? "yes" : "no") << "\n";
      if (r.total) {
        out << "total: " << *r.total << "\n";
      }
      out << "k b_k\n";
      for (size_t k = 0; k < r.b.size(); ++k) {
        out << (k + 1) << " " << r.b[k] << "\n";
      }
      if (c.witnesses) {
        for (auto const& w : r.witnesses) {
          out << format_stateword(m, w) << "\n";
        }
      }
    }

    void cmd_witness(RunConfig const& c, std::ostream& out) {
      auto       m     = load(c);
      auto       gens  = parse_generators(m, c.gens);
      auto const chain = witness_search(GeneratorSet(m, gens), witness_budget(c));
      if (c.json) {
        out << report::dump(report::to_json(m, chain));
        return;
      }
      out << "chain length " << chain.prefixes.size() << "\n";
      for (size_t i = 0; i < chain.prefixes.size(); ++i) {
        out << shown(m, chain.prefixes[i]) << " " << chain.sizes[i] << "\n";
      }
      if (chain.capped) {
        out << "stopped at orbit cap " << c.orbit_cap << "\n";
      }
    }

    void cmd_finiteness(RunConfig const& c, std::ostream& out) {
      auto m    = load(c);
      auto gens = parse_generators(m, c.gens);
      FinitenessBudget budget;
      budget.enumeration = {c.max_elements, c.max_length};
      budget.witness     = witness_budget(c);
      auto const v       = decide(m, gens, budget);
      std::optional<ConsistencyReport> check;
      if (c.check_depth > 0) {
        check = check_consistency(v, m, gens, c.check_depth);
      }
      if (c.json) {
        auto j = report::to_json(m, gens, v);
        if (check) {
          j["consistency"] = report::to_json(m, *check);
        }
        out << report::dump(j);
        return;
      }
      if (v.is_finite()) {
        out << "FINITE, order " << v.finite().order << "\n";
      } else {
        auto const& u = v.unknown();
        out << "UNKNOWN, largest orbit seen " << u.largest_orbit << "\n";
        out << "witness chain sizes:";
        for (auto s : u.chain.sizes) {
          out << " " << s;
        }
        out << "\n";
      }
      if (check) {
        out << "consistency: " << (check->consistent ? "ok" : "FAILED") << "\n";
        for (auto const& issue : check->issues) {
          out << "  " << issue << "\n";
        }
      }
    }

    void cmd_signature(RunConfig const& c, std::ostream& out) {
      auto m    = load(c);
      auto gens = parse_generators(m, c.gens);
      if (!c.word_given) {
        throw UsageError("signature needs --word");
      }
      auto const v = parse_word(m.alphabet(), c.word);
      bool const single
          = std::all_of(gens.begin(), gens.end(),
                        [](StateWord const& g) { return g.size() == 1; });
      report::Json j;
      if (single) {
        std::vector<StateIndex> states;
        for (auto const& g : gens) {
          states.push_back(g.states[0]);
        }
        j = report::to_json(m, states, orbit_signature(m, states, v, c.orbit_cap));
      } else {
        j = report::to_json(m, gens,
                            extended_orbit_signature(m, gens, v, c.orbit_cap));
      }
      if (c.json) {
        out << report::dump(j);
        return;
      }
      out << "orbit size " << j["size"].get<size_t>() << "\n";
      auto const& points = j["points"];
      for (size_t g = 0; g < gens.size(); ++g) {
        out << format_stateword(m, gens[g]) << ":";
        for (size_t l = 0; l < points.size(); ++l) {
          auto const& sec = j["sections"][g][l];
          out << " " << l << "->" << j["endomaps"][g][l].get<size_t>() << "@"
              << (sec.is_string() ? sec.get<std::string>()
                                  : sec["section"].get<std::string>());
        }
        out << "\n";
      }
    }

    void cmd_export_dot(RunConfig const& c, std::ostream& out) {
      out << export_dot(load(c));
    }

    void cmd_catalog(RunConfig const& c, std::ostream& out) {
      if (c.catalog_entry.empty()) {
        for (auto const& n : catalog::names()) {
          out << n << "\n";
        }
        return;
      }
      try {
        out << to_json(catalog::by_name(c.catalog_entry));
      } catch (ParseError const& e) {
        throw UsageError(e.what());
      }
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err) {
    CLI::App  app{"Mealy automaton semigroups: actions, orbits and finiteness",
                  "mealy"};
    RunConfig c;
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
      sub->add_option("--automaton", c.automaton_file, "automaton file (JSON)");
      sub->add_option("--catalog", c.catalog_name,
                      "catalog automaton NAME[:PARAM]");
      sub->add_option("--gens", c.gens,
                      "comma-separated generators, each a dot-separated "
                      "state word (t.s applies s first); default all states");
      sub->add_option("--depth", c.depth, "witness search depth")
          ->check(CLI::PositiveNumber);
      sub->add_option("--lookahead", c.lookahead, "witness lookahead depth");
      sub->add_option("--orbit-cap", c.orbit_cap, "maximum orbit size")
          ->check(CLI::PositiveNumber);
      sub->add_option("--max-elements", c.max_elements,
                      "enumeration element budget")
          ->check(CLI::PositiveNumber);
      sub->add_option("--max-length", c.max_length,
                      "enumeration product length budget")
          ->check(CLI::PositiveNumber);
      sub->add_flag("--json", c.json, "structured output");
    };
    auto add_word = [&](CLI::App* sub) {
      sub->add_option("--word", c.word, "finite word")
          ->each([&](std::string const&) { c.word_given = true; });
      sub->add_option("--upword", c.upword,
                      "ultimately periodic word pre(period)")
          ->each([&](std::string const&) { c.upword_given = true; });
    };

    std::vector<std::pair<CLI::App*, void (*)(RunConfig const&, std::ostream&)>>
        commands;
    auto add = [&](char const* name, char const* help,
                   void (*fn)(RunConfig const&, std::ostream&)) {
      auto* sub = app.add_subcommand(name, help);
      commands.emplace_back(sub, fn);
      return sub;
    };

    auto* validate_cmd = add("validate", "check an automaton", cmd_validate);
    add_common(validate_cmd);

    auto* act = add("act", "apply an element to a word", cmd_act);
    add_common(act);
    add_word(act);
    act->add_option("--element", c.element, "state word, e.g. t.s");

    auto* orbit = add("orbit", "orbit of a word", cmd_orbit);
    add_common(orbit);
    add_word(orbit);
    orbit->add_flag("--dot", c.dot, "emit the orbit graph in DOT");

    auto* enumerate_cmd
        = add("enumerate", "enumerate semigroup elements", cmd_enumerate);
    add_common(enumerate_cmd);
    enumerate_cmd->add_flag("--witnesses", c.witnesses,
                            "list a shortest state word per element");

    add_common(add("witness", "greedy search for growing orbits", cmd_witness));

    auto* fin = add("finiteness", "run the finiteness semi-decision",
                    cmd_finiteness);
    add_common(fin);
    fin->add_option("--check-depth", c.check_depth,
                    "re-check the verdict on all words up to this length");

    auto* sig = add("signature", "orbit signature of a word", cmd_signature);
    add_common(sig);
    add_word(sig);

    add_common(add("export-dot", "Moore diagram in DOT", cmd_export_dot));

    auto* cat = add("catalog", "list catalog automata or print one as JSON",
                    cmd_catalog);
    cat->add_option("name", c.catalog_entry, "catalog entry NAME[:PARAM]");

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return 0;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }

    try {
      for (auto const& [sub, fn] : commands) {
        if (sub->parsed()) {
          fn(c, out);
        }
      }
    } catch (UsageError const& e) {
      err << "usage error: " << e.what() << "\n";
      return 2;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
    return 0;
  }

}  // namespace mealy::cli

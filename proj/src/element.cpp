#include "mealy/element.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "mealy/error.hpp"
#include "mealy/hash.hpp"

namespace mealy {

  namespace {

    using Table = std::vector<Transition>;

    // Hopcroft partition refinement.  The initial partition groups states
    // by output row; a splitter (block, letter) separates the states whose
    // successor on that letter lies in the block.  Returns the block of
    // every state in the coarsest stable partition, which is unique, so the
    // canonical form does not depend on the order of splits.
    std::vector<StateIndex> coarsest_partition(Table const& table, size_t n,
                                               size_t k) {
      // predecessors on each letter, in CSR form
      std::vector<size_t>     pred_start((n + 1) * k, 0);
      std::vector<StateIndex> preds(n * k);
      for (size_t q = 0; q < n; ++q) {
        for (size_t a = 0; a < k; ++a) {
          ++pred_start[a * (n + 1) + table[q * k + a].next + 1];
        }
      }
      for (size_t a = 0; a < k; ++a) {
        for (size_t q = 0; q < n; ++q) {
          pred_start[a * (n + 1) + q + 1] += pred_start[a * (n + 1) + q];
        }
      }
      {
        std::vector<size_t> fill(pred_start);
        for (size_t q = 0; q < n; ++q) {
          for (size_t a = 0; a < k; ++a) {
            auto const t = table[q * k + a].next;
            preds[a * n + fill[a * (n + 1) + t]++] = static_cast<StateIndex>(q);
          }
        }
      }

      // elements[begin[b], end[b]) are the states of block b
      std::vector<StateIndex> block(n), elements(n), position(n);
      std::vector<size_t>     begin, end;
      {
        std::unordered_map<std::vector<Letter>, StateIndex, detail::VectorHash>
                                         ids;
        std::vector<Letter>              row(k);
        std::vector<std::vector<StateIndex>> members;
        for (size_t q = 0; q < n; ++q) {
          for (size_t a = 0; a < k; ++a) {
            row[a] = table[q * k + a].output;
          }
          auto [it, inserted]
              = ids.emplace(row, static_cast<StateIndex>(ids.size()));
          if (inserted) {
            members.emplace_back();
          }
          block[q] = it->second;
          members[it->second].push_back(static_cast<StateIndex>(q));
        }
        size_t i = 0;
        for (auto const& ms : members) {
          begin.push_back(i);
          for (auto q : ms) {
            position[q]   = static_cast<StateIndex>(i);
            elements[i++] = q;
          }
          end.push_back(i);
        }
      }

      std::vector<std::pair<StateIndex, Letter>> work;
      std::vector<char> pending(begin.size() * k, 1);  // [block * k + letter]
      for (size_t b = 0; b < begin.size(); ++b) {
        for (size_t a = 0; a < k; ++a) {
          work.emplace_back(static_cast<StateIndex>(b), static_cast<Letter>(a));
        }
      }

      std::vector<size_t>     marked(begin.size(), 0);
      std::vector<StateIndex> touched, splitter;
      while (!work.empty()) {
        auto const [s, a] = work.back();
        work.pop_back();
        pending[s * k + a] = 0;
        splitter.assign(elements.begin() + begin[s], elements.begin() + end[s]);
        for (auto q : splitter) {
          auto const lo = pred_start[a * (n + 1) + q];
          auto const hi = pred_start[a * (n + 1) + q + 1];
          for (auto i = lo; i < hi; ++i) {
            auto const p = preds[a * n + i];
            auto const b = block[p];
            auto const target = begin[b] + marked[b];
            if (position[p] < target) {
              continue;  // already marked
            }
            if (marked[b] == 0) {
              touched.push_back(b);
            }
            auto const other    = elements[target];
            elements[target]    = p;
            elements[position[p]] = other;
            position[other]     = position[p];
            position[p]         = static_cast<StateIndex>(target);
            ++marked[b];
          }
        }
        for (auto b : touched) {
          size_t const m = marked[b];
          marked[b]      = 0;
          if (m == end[b] - begin[b]) {
            continue;
          }
          // the marked prefix becomes a new block
          auto const nb = static_cast<StateIndex>(begin.size());
          begin.push_back(begin[b]);
          end.push_back(begin[b] + m);
          begin[b] += m;
          marked.push_back(0);
          pending.resize(pending.size() + k, 0);
          for (auto i = begin[nb]; i < end[nb]; ++i) {
            block[elements[i]] = nb;
          }
          bool const new_smaller
              = end[nb] - begin[nb] <= end[b] - begin[b];
          for (size_t c = 0; c < k; ++c) {
            StateIndex const add = pending[b * k + c] || new_smaller ? nb : b;
            if (!pending[add * k + c]) {
              pending[add * k + c] = 1;
              work.emplace_back(add, static_cast<Letter>(c));
            }
          }
        }
        touched.clear();
      }
      return block;
    }

    constexpr StateIndex kUnset = std::numeric_limits<StateIndex>::max();

    size_t effective_bound(size_t num_states, size_t length, size_t cap) {
      // min(num_states^length, cap) without overflow
      size_t bound = 1;
      for (size_t i = 0; i < length && bound <= cap; ++i) {
        bound *= num_states;
      }
      return std::min(bound, cap);
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Element
  ////////////////////////////////////////////////////////////////////////

  Element::Element(std::shared_ptr<Alphabet const> alphabet, Table table)
      : _alphabet(std::move(alphabet)), _table(std::move(table)), _hash(0) {
    _hash = _table.size();
    for (auto const& t : _table) {
      detail::hash_combine(_hash, (size_t(t.next) << 16) ^ t.output);
    }
  }

  Element Element::from_transducer(std::shared_ptr<Alphabet const> alphabet,
                                   Table const& table, StateIndex initial) {
    size_t const k = alphabet->size();
    size_t const n = table.size() / k;
    if (initial >= n) {
      throw std::out_of_range("initial state out of range");
    }

    auto const block = coarsest_partition(table, n, k);

    // Breadth-first renumbering of the quotient from the initial block; this
    // also drops unreachable blocks.
    std::vector<StateIndex> label(n, kUnset);  // block -> canonical index
    std::vector<StateIndex> rep;               // canonical index -> a state
    label[block[initial]] = 0;
    rep.push_back(initial);
    Table canonical;
    for (size_t i = 0; i < rep.size(); ++i) {
      StateIndex q = rep[i];
      for (size_t a = 0; a < k; ++a) {
        auto const& t = table[q * k + a];
        StateIndex  b = block[t.next];
        if (label[b] == kUnset) {
          label[b] = static_cast<StateIndex>(rep.size());
          rep.push_back(t.next);
        }
        canonical.push_back({t.output, label[b]});
      }
    }
    return Element(std::move(alphabet), std::move(canonical));
  }

  Element Element::identity(std::shared_ptr<Alphabet const> alphabet) {
    Table table;
    for (Letter a = 0; a < alphabet->size(); ++a) {
      table.push_back({a, 0});
    }
    return Element(std::move(alphabet), std::move(table));
  }

  bool Element::is_identity() const noexcept {
    if (num_states() != 1) {
      return false;
    }
    for (Letter a = 0; a < _table.size(); ++a) {
      if (_table[a].output != a) {
        return false;
      }
    }
    return true;
  }

  StateIndex Element::act(std::span<Letter const> u,
                          std::span<Letter>       out) const {
    size_t const k = _alphabet->size();
    StateIndex   q = 0;
    for (size_t i = 0; i < u.size(); ++i) {
      auto const& t = _table[q * k + u[i]];
      out[i]        = t.output;
      q             = t.next;
    }
    return q;
  }

  Word Element::act(std::span<Letter const> u) const {
    for (auto a : u) {
      if (a >= _alphabet->size()) {
        throw std::out_of_range("letter index out of range");
      }
    }
    Word out(u.size());
    act(u, out);
    return out;
  }

  bool Element::operator==(Element const& other) const {
    return _hash == other._hash && _table == other._table
           && (_alphabet == other._alphabet || *_alphabet == *other._alphabet);
  }

  ////////////////////////////////////////////////////////////////////////
  // Construction
  ////////////////////////////////////////////////////////////////////////

  Element element_of(MealyAutomaton const& m, StateWord const& s,
                     size_t max_states) {
    check_stateword(m, s);
    size_t const k = m.num_letters();
    size_t const bound
        = effective_bound(m.num_states(), s.size(), max_states);

    using Tuple = std::vector<StateIndex>;
    std::unordered_map<Tuple, StateIndex, detail::VectorHash> index;
    std::vector<Tuple>                                        tuples;
    index.emplace(s.states, 0);
    tuples.push_back(s.states);
    Table table;
    for (size_t i = 0; i < tuples.size(); ++i) {
      for (Letter a = 0; a < k; ++a) {
        Tuple  next = tuples[i];
        Letter b    = a;
        for (size_t j = next.size(); j-- > 0;) {
          auto const& t = m(next[j], b);
          b             = t.output;
          next[j]       = t.next;
        }
        auto [it, inserted]
            = index.emplace(std::move(next), static_cast<StateIndex>(tuples.size()));
        if (inserted) {
          if (tuples.size() >= bound) {
            throw ResourceLimitError("element_of: more than "
                                         + std::to_string(bound)
                                         + " section tuples",
                                     tuples.size());
          }
          tuples.push_back(it->first);
        }
        table.push_back({b, it->second});
      }
    }
    auto e = Element::from_transducer(m.shared_alphabet(), table, 0);
    e.set_provenance(s);
    return e;
  }

  bool element_equal(Element const& e1, Element const& e2) {
    if (e1.shared_alphabet() != e2.shared_alphabet()
        && e1.alphabet() != e2.alphabet()) {
      throw std::invalid_argument("element_equal: alphabets differ");
    }
    return e1 == e2;
  }

  Element compose(Element const& e1, Element const& e2, size_t max_states) {
    if (e1.shared_alphabet() != e2.shared_alphabet()
        && e1.alphabet() != e2.alphabet()) {
      throw std::invalid_argument("compose: alphabets differ");
    }
    size_t const k  = e1.num_letters();
    size_t const n2 = e2.num_states();
    // Pair (p1, p2) encoded as p1 * n2 + p2, discovered lazily.  The pair
    // index is a dense array unless the pair space is very large.
    size_t const                           space = e1.num_states() * n2;
    bool const                             dense = space <= (size_t(1) << 24);
    std::vector<StateIndex>                dense_index(dense ? space : 0, kUnset);
    std::unordered_map<size_t, StateIndex> sparse_index;
    auto lookup = [&](size_t code, StateIndex fresh) -> std::pair<StateIndex, bool> {
      if (dense) {
        auto& slot = dense_index[code];
        if (slot == kUnset) {
          slot = fresh;
          return {fresh, true};
        }
        return {slot, false};
      }
      auto [it, inserted] = sparse_index.emplace(code, fresh);
      return {it->second, inserted};
    };
    std::vector<size_t> pairs{0};
    lookup(0, 0);
    Table table;
    table.reserve(k * std::min(space, size_t(1) << 16));
    for (size_t i = 0; i < pairs.size(); ++i) {
      StateIndex const p1 = static_cast<StateIndex>(pairs[i] / n2);
      StateIndex const p2 = static_cast<StateIndex>(pairs[i] % n2);
      for (Letter a = 0; a < k; ++a) {
        auto const&  t2   = e2(p2, a);
        auto const&  t1   = e1(p1, t2.output);
        size_t const code = size_t(t1.next) * n2 + t2.next;
        auto [id, inserted]
            = lookup(code, static_cast<StateIndex>(pairs.size()));
        if (inserted) {
          if (pairs.size() >= max_states) {
            throw ResourceLimitError("compose: more than "
                                         + std::to_string(max_states)
                                         + " pair states",
                                     pairs.size());
          }
          pairs.push_back(code);
        }
        table.push_back({t1.output, id});
      }
    }
    auto e = Element::from_transducer(e1.shared_alphabet(), table, 0);
    if (e1.provenance() && e2.provenance()) {
      e.set_provenance(concat(*e1.provenance(), *e2.provenance()));
    }
    return e;
  }

}  // namespace mealy

#include "mealy/semigroup.hpp"

#include <stdexcept>

namespace mealy {

  Enumerator::Enumerator(MealyAutomaton const&  m,
                         std::vector<StateWord> gens,
                         EnumerationBudget      budget)
      : _budget(budget), _phase(Phase::left) {
    if (gens.empty()) {
      throw std::invalid_argument("at least one generator is required");
    }
    if (budget.max_elements == 0 || budget.max_length == 0) {
      throw std::invalid_argument("enumeration budgets must be positive");
    }
    for (auto const& g : gens) {
      _gens.push_back(element_of(m, g));
    }
    // Level 1: the generators themselves.
    for (auto const& g : _gens) {
      ++_work;
      if (!insert(g)) {
        _phase = Phase::done;
        return;
      }
    }
    _level_end = _elements.size();
    _b.push_back(_elements.size());
    _length = 2;
    if (_length > _budget.max_length) {
      _phase = Phase::done;
    }
  }

  bool Enumerator::insert(Element e) {
    if (_index.contains(e)) {
      return true;
    }
    if (_elements.size() >= _budget.max_elements) {
      return false;
    }
    _index.emplace(e, _elements.size());
    _elements.push_back(std::move(e));
    return true;
  }

  void Enumerator::finish_level() {
    size_t const added = _elements.size() - _level_end;
    _b.push_back(_elements.size());
    _cursor_elt = 0;
    _cursor_gen = 0;
    if (added == 0) {
      _phase = Phase::right;
      return;
    }
    _level_begin = _level_end;
    _level_end   = _elements.size();
    ++_length;
    if (_length > _budget.max_length) {
      _phase = Phase::done;
    }
  }

  bool Enumerator::run(size_t units) {
    while (units > 0 && _phase != Phase::done) {
      if (_phase == Phase::left) {
        size_t const i = _level_begin + _cursor_elt;
        if (i >= _level_end) {
          finish_level();
          continue;
        }
        ++_work;
        --units;
        if (!insert(compose(_gens[_cursor_gen], _elements[i]))) {
          _phase = Phase::done;
          break;
        }
        if (++_cursor_gen == _gens.size()) {
          _cursor_gen = 0;
          ++_cursor_elt;
        }
      } else {
        // The left closure must also be stable under right multiplication.
        if (_cursor_elt >= _elements.size()) {
          _closed = true;
          _phase  = Phase::done;
          break;
        }
        ++_work;
        --units;
        auto const p = compose(_elements[_cursor_elt], _gens[_cursor_gen]);
        if (!_index.contains(p)) {
          throw std::logic_error("left closure is not closed under right "
                                 "multiplication by a generator");
        }
        if (++_cursor_gen == _gens.size()) {
          _cursor_gen = 0;
          ++_cursor_elt;
        }
      }
    }
    return finished();
  }

  GrowthReport Enumerator::report() const {
    GrowthReport r;
    r.b       = _b;
    r.closed  = _closed;
    r.budgets = _budget;
    r.work    = _work;
    if (_closed) {
      r.total = _elements.size();
    }
    r.witnesses.reserve(_elements.size());
    for (auto const& e : _elements) {
      r.witnesses.push_back(e.provenance().value_or(StateWord{}));
    }
    return r;
  }

  GrowthReport enumerate(MealyAutomaton const&         m,
                         std::vector<StateWord> const& gens,
                         size_t max_elements, size_t max_length) {
    Enumerator e(m, gens, {max_elements, max_length});
    while (!e.run(size_t(1) << 20)) {
    }
    return e.report();
  }

}  // namespace mealy

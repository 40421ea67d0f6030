import json
import os

import pytest

import mealy

DATA = os.environ.get(
    "MEALY_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data")
)


def test_figure1_action():
    m = mealy.catalog("fig1")
    assert m.states == ["t", "s"]
    t, s = m.state_index("t"), m.state_index("s")
    assert m.step(t, 0) == (0, s)
    image, section = mealy.act_word(m, t, m.parse_word("111"))
    assert m.format_word(image) == "000"
    assert section == t
    assert mealy.act_stateword(m, [t, s], [1]) == ([0], [s, s])
    assert mealy.act_upword(m, [t], [], [0]) == ([0], [1])


def test_elements():
    m = mealy.catalog("fig1")
    t, s = m.state_index("t"), m.state_index("s")
    ss = mealy.element_of(m, [s, s])
    assert ss.is_identity and ss.num_states == 1
    assert ss == mealy.element_of(m, [s, s, s, s])
    assert mealy.compose(mealy.element_of(m, [t]), mealy.element_of(m, [s])) == (
        mealy.element_of(m, [t, s])
    )
    assert len({ss, mealy.element_of(m, [s, s, s, s])}) == 1


def test_enumerate_and_decide():
    m = mealy.catalog("fig2:2")
    r = mealy.enumerate(m)
    assert r.closed and r.total == 4 and r.b == [3, 4, 4]
    v = mealy.decide(mealy.catalog("fig2:3"))
    assert v.is_finite and v.order == 8

    a = mealy.catalog("adding")
    u = mealy.decide(a, [[0]], max_elements=200, max_depth=6)
    assert not u.is_finite and u.order is None
    assert u.witness_sizes == [2, 4, 8, 16, 32, 64]
    report = json.loads(mealy.verdict_json(a, [[0]], u))
    assert report["outcome"] == "unknown"


def test_orbits_and_signatures():
    a = mealy.catalog("adding")
    assert len(mealy.orbit(a, [[0]], [0, 0, 0])) == 8
    assert mealy.m_depth(a, [[0]], [], 4) == (16, False)
    chain = mealy.witness_search(a, [[0]], max_depth=5)
    assert chain.sizes == [2, 4, 8, 16, 32]
    with pytest.raises(mealy.ResourceLimitError):
        mealy.orbit(a, [[0]], [0] * 6, cap=10)

    m = mealy.catalog("fig1")
    sig = mealy.orbit_signature(m, [1, 0], [0])
    assert sig.size == 2 and sig.endomaps == [[1, 0], [0, 0]]
    assert sig != mealy.orbit_signature(m, [1, 0], [1])


def test_files_and_errors():
    m = mealy.load_automaton(os.path.join(DATA, "fig1.json"))
    assert m.to_json() == mealy.catalog("fig1").to_json()
    assert m.export_dot().startswith("digraph mealy {")
    with pytest.raises(mealy.ValidationError, match=r"missing transition \(s, 1\)"):
        mealy.parse_automaton(
            '{"alphabet": ["0", "1"], "states": ["s"],'
            ' "transitions": {"s": {"0": ["0", "s"]}}}'
        )
    with pytest.raises(mealy.ParseError):
        mealy.catalog("nope")
    assert mealy.v_set(2) == [[0, 2, 0, 2], [0, 2, 1, 2], [1, 2, 0, 2], [1, 2, 1, 2]]

"""Configuration, alphabet and tau."""

import json

import pytest

from boxgap import GridConfig, PRESETS, Symbol, load_config, preset, tau
from boxgap.grid import BLOCK, HUB, ROLES, TAIL, coerce_config


def test_preset_triples():
    assert PRESETS == {"paper": (2, 12, 13), "tiny": (2, 4, 2), "small": (2, 6, 3)}
    for name, (m, n, p) in PRESETS.items():
        cfg = preset(name)
        assert (cfg.m, cfg.n, cfg.p) == (m, n, p)


def test_preset_unknown():
    with pytest.raises(ValueError, match="unknown preset"):
        preset("huge")


def test_derived_fields(paper, tiny):
    assert paper.g == 10 and tiny.g == 2
    assert paper.paper_instance
    assert not tiny.paper_instance


@pytest.mark.parametrize(
    "m,n,p,fragment",
    [
        (1, 4, 2, "m >= 2"),
        (2, 2, 2, "n > m"),
        (4, 3, 2, "n > m"),
        (2, 4, 1, "p >= 2"),
        (2, 4, 0, "p >= 2"),
    ],
)
def test_invariant_messages(m, n, p, fragment):
    with pytest.raises(ValueError, match=fragment):
        GridConfig(m, n, p)


def test_non_integer_fields():
    with pytest.raises(ValueError, match="must be an integer"):
        GridConfig(2.0, 12, 13)
    with pytest.raises(ValueError, match="must be an integer"):
        GridConfig(True, 12, 13)


def test_composite_p_is_allowed():
    cfg = GridConfig(2, 5, 4)
    assert cfg.powers_upto(20) == [1, 4, 16]


def test_symbol_roles():
    assert Symbol(1, 1).role == HUB
    assert Symbol(2, 1).role == HUB
    assert Symbol(1, 2).role == TAIL
    assert Symbol(1, 3).role == BLOCK
    assert Symbol(2, 2).role is None
    assert repr(Symbol(2, 11)) == "(2,11)"


def test_alphabet(paper):
    alpha = paper.alphabet()
    assert len(alpha) == paper.m + paper.n - 1 == 13
    assert alpha == sorted(alpha)
    assert Symbol(2, 2) not in alpha
    assert set(paper.hub_symbols()) == {Symbol(1, 1), Symbol(2, 1)}
    assert paper.tail_symbol == Symbol(1, 2)
    assert len(paper.block_symbols()) == paper.g
    assert all(s.b >= 3 and s.a == 1 for s in paper.block_symbols())


def test_in_alphabet_and_role_of(paper):
    assert paper.in_alphabet((2, 1))
    assert not paper.in_alphabet((2, 2))
    assert not paper.in_alphabet((0, 1))
    assert not paper.in_alphabet((1, 13))
    assert paper.role_of((1, 12)) == BLOCK
    assert paper.role_of((2, 3)) is None


def test_role_weights(paper, alt):
    assert [paper.role_weight(r) for r in ROLES] == [2, 1, 10]
    assert [alt.role_weight(r) for r in ROLES] == [3, 1, 3]
    for role in ROLES:
        assert len(paper.symbols_with_role(role)) == paper.role_weight(role)
    with pytest.raises(ValueError, match="unknown role"):
        paper.role_weight("X")


def test_tau(paper, tiny):
    assert tau(1, paper) == 1
    assert tau(13, paper) == 13
    assert tau(14, paper) == 169
    assert tau(5, tiny) == 8
    assert tiny.tau(2) == 2
    with pytest.raises(ValueError, match="x >= 1"):
        paper.tau(0)


def test_powers_upto(paper, tiny):
    assert paper.powers_upto(169) == [1, 13, 169]
    assert paper.powers_upto(12) == [1]
    assert tiny.powers_upto(8) == [1, 2, 4, 8]
    assert tiny.powers_upto(0) == []


def test_load_config_roundtrip(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"m": 3, "n": 5, "p": 2}))
    cfg = load_config(path)
    assert (cfg.m, cfg.n, cfg.p) == (3, 5, 2)


@pytest.mark.parametrize(
    "doc,fragment",
    [
        ({"m": 2, "n": 12}, "missing fields: p"),
        ({"m": 2, "n": 12, "p": 13, "q": 1}, "unknown fields: q"),
        ([2, 12, 13], "JSON object"),
        ({"m": 1, "n": 12, "p": 13}, "m >= 2"),
    ],
)
def test_load_config_rejects(tmp_path, doc, fragment):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(doc))
    with pytest.raises(ValueError, match=fragment):
        load_config(path)


def test_load_config_bad_json(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text("{m: 2")
    with pytest.raises(ValueError, match="not valid JSON"):
        load_config(path)


def test_coerce_config(paper):
    assert coerce_config(paper) is paper
    assert coerce_config("paper") == paper
    assert coerce_config((2, 12, 13)) == paper
    with pytest.raises(ValueError):
        coerce_config(7)

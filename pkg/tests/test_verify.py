"""The cross-validation suite itself: registration, labels, failure text."""

import pytest

from boxgap import GridConfig, verify
from boxgap.verify import CHECKS, VerifyFailure, _fail, _label_for, _stream_factors


def test_full_suite_runs(tiny):
    done = verify(tiny, nmax=6)
    assert [name for name, _ in done] == [name for name, _, _ in CHECKS]
    assert all(seconds >= 0 for _, seconds in done)


def test_only_one_check(small):
    done = verify(small, nmax=5, only="counts")
    assert [name for name, _ in done] == ["counts"]


def test_unknown_check(tiny):
    with pytest.raises(ValueError, match="unknown check"):
        verify(tiny, only="everything")


def test_emit_lines(tiny):
    lines = []
    verify(tiny, nmax=4, only="budgets", emit=lines.append)
    assert len(lines) == 1 and lines[0].startswith("ok budgets")


def test_failure_reproduction_hint():
    with pytest.raises(VerifyFailure) as exc:
        _fail("counts", "--preset tiny", 4, "boom")
    msg = str(exc.value)
    assert "boom" in msg
    assert "reproduce: boxgap verify --preset tiny --nmax 4 --only counts" in msg


def test_label_for(tiny, alt):
    assert _label_for(tiny) == "--preset tiny"
    assert "m=3 n=5 p=2" in _label_for(alt)


def test_stream_factors_small(tiny):
    factors = _stream_factors(tiny, 3)
    assert "" in factors
    assert "TT" in factors  # window opening inside a long tail
    assert "HHH" in factors
    assert "BTH" in factors
    assert "BH" not in factors
    assert "HT" not in factors


def test_alt_configuration_suite(alt):
    # non-binary m and a JSON-style custom config pass the whole suite
    done = verify(alt, nmax=5)
    assert len(done) == len(CHECKS)

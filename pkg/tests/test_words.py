"""Word structure, legality rules, forced distance, classification."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from boxgap import Word, classify, forced_distance, is_legal, parse, preset
from boxgap.grid import BLOCK, HUB, ROLES, TAIL
from boxgap.scan import Scanner
from boxgap.words import ParseOutcome, coerce_word, word_from_roles

PAPER = preset("paper")
TINY = preset("tiny")


def W(*pairs):
    return Word(pairs)


def from_roles(text, cfg=PAPER):
    return word_from_roles(text, cfg)


class TestWordType:
    def test_basics(self):
        w = W((1, 1), (1, 3), (1, 3))
        assert len(w) == 3
        assert list(w)[0] == (1, 1)
        assert w[1] == (1, 3)
        assert isinstance(w[1:], Word) and len(w[1:]) == 2
        assert w == W((1, 1), (1, 3), (1, 3))
        assert hash(w) == hash(W((1, 1), (1, 3), (1, 3)))
        assert W((1, 1)) < W((1, 2))
        assert (W((1, 1)) + W((1, 2))) == W((1, 1), (1, 2))

    def test_runs(self):
        w = W((1, 1), (2, 1), (1, 3), (1, 4), (1, 2))
        assert w.runs == ((HUB, 2), (BLOCK, 2), (TAIL, 1))
        assert w.role_string() == "HHBBT"
        assert W((2, 2)).role_string() == "?"
        assert Word().runs == ()

    def test_coerce(self):
        w = coerce_word([(1, 1)])
        assert isinstance(w, Word)
        assert coerce_word(w) is w


class TestLegality:
    def test_hub_words(self):
        assert is_legal(W((1, 1), (2, 1), (1, 1)), PAPER)
        assert is_legal(Word(), PAPER)

    def test_block_run_needs_matching_tail(self):
        # visible block run of length 2 cannot finish with a length-1 tail
        assert not is_legal(W((1, 3), (1, 3), (1, 2), (1, 1)), PAPER)
        # but parsed as the end of a hidden length-13 block it may start a tail
        assert is_legal(W((1, 3), (1, 2), (1, 2)), PAPER)

    def test_dead_symbols_return_false(self):
        assert not is_legal(W((2, 2)), PAPER)
        assert not is_legal(W((0, 1)), PAPER)
        assert not is_legal(W((1, 13)), PAPER)

    def test_hub_cannot_follow_block(self):
        assert not is_legal(from_roles("BH"), PAPER)
        assert not is_legal(from_roles("BBH", TINY), TINY)

    def test_tail_cannot_follow_hub(self):
        assert not is_legal(from_roles("HT"), PAPER)

    def test_leading_tail_any_length(self):
        for z in range(1, 6):
            assert is_legal(from_roles("T" * z, TINY), TINY)

    def test_trailing_block_any_length(self):
        for w in range(1, 6):
            assert is_legal(from_roles("H" + "B" * w, TINY), TINY)
            assert is_legal(from_roles("B" * w, TINY), TINY)

    def test_visible_block_tail_lengths(self):
        # interior tail must equal its block length exactly, and the block
        # length must be a power of p
        assert is_legal(from_roles("HBBTTH", TINY), TINY)
        assert not is_legal(from_roles("HBBTH", TINY), TINY)
        assert not is_legal(from_roles("HBBBTTTH", TINY), TINY)  # 3 not a power of 2
        assert is_legal(from_roles("HBBBBTTTTH", TINY), TINY)
        # trailing tail may be unfinished but never longer than the block
        assert is_legal(from_roles("HBBT", TINY), TINY)
        assert not is_legal(from_roles("HBBTTT", TINY), TINY)

    def test_hidden_block_tail_lengths(self):
        # leading block run with hidden start: completed tail length must be a
        # power of p at least the visible block length
        assert is_legal(from_roles("BTTH", TINY), TINY)
        assert not is_legal(from_roles("BBBTH", TINY), TINY)
        assert is_legal(from_roles("BBBTTTT", TINY), TINY)  # unfinished tail


class TestForcedDistance:
    def test_illegal_raises(self):
        with pytest.raises(ValueError, match="illegal"):
            forced_distance(from_roles("HT"), PAPER)

    def test_closed_cases(self):
        assert forced_distance(Word(), PAPER) == 0
        assert forced_distance(W((2, 1)), PAPER) == 0
        assert forced_distance(from_roles("TTT", TINY), TINY) == 0
        # single block run, hidden start: finish at the window edge
        assert forced_distance(W((1, 3)), PAPER) == 1
        assert forced_distance(from_roles("BB", TINY), TINY) == 2
        assert forced_distance(from_roles("BBB", TINY), TINY) == 4
        # block+tail with hidden start: tau(max(w, z)) - z
        assert forced_distance(from_roles("BT", TINY), TINY) == 0
        assert forced_distance(from_roles("BBT", TINY), TINY) == 1
        assert forced_distance(from_roles("BTT", TINY), TINY) == 0
        # visible trailing block: 2 tau(w) - w
        assert forced_distance(from_roles("HB", TINY), TINY) == 1
        assert forced_distance(from_roles("HBBB", TINY), TINY) == 5
        # visible block + unfinished tail: w - z
        assert forced_distance(from_roles("HBBT", TINY), TINY) == 1
        assert forced_distance(from_roles("HBBBBTT", TINY), TINY) == 2

    def test_matches_scanner_exhaustively(self, tiny, paper, small, alt):
        for cfg in (tiny, paper, small, alt):
            sc = Scanner(cfg, 6)
            for n in range(7):
                for roles in itertools.product(ROLES, repeat=n):
                    live = sc.scan_roles(roles)
                    word = word_from_roles(roles, cfg)
                    assert is_legal(word, cfg) == bool(live)
                    if live:
                        assert forced_distance(word, cfg) == sc.min_distance(live)


class TestClassify:
    def test_illegal_raises(self):
        with pytest.raises(ValueError, match="illegal"):
            classify(from_roles("BH"), PAPER)

    def test_tags(self):
        assert classify(Word(), PAPER) == "a"
        assert classify(W((1, 1)), PAPER) == "hub-pure"
        assert classify(W((1, 1), (2, 1)), PAPER) == "hub-pure"
        assert classify(W((1, 2)), PAPER) == "a"  # completable tail
        assert classify(from_roles("BT", TINY), TINY) == "a"
        assert classify(from_roles("HB", TINY), TINY) == "b"
        assert classify(from_roles("B", TINY), TINY) == "c"
        assert classify(from_roles("BB", TINY), TINY) == "c"
        assert classify(from_roles("BBT", TINY), TINY) == "d"
        assert classify(from_roles("HBT", TINY), TINY) == "e"
        assert classify(from_roles("HBBTT", TINY), TINY) == "e"

    def test_e_wins_over_a(self):
        # completed visible block+tail has forced 0 yet still reports e
        w = from_roles("HBT", TINY)
        assert forced_distance(w, TINY) == 0
        assert classify(w, TINY) == "e"

    def test_partition_small(self, tiny):
        from boxgap import enumerate_words

        for n in range(5):
            for w in enumerate_words(n, tiny):
                assert classify(w, tiny) in {"a", "b", "c", "d", "e", "hub-pure"}


class TestParse:
    def test_illegal(self):
        assert parse(from_roles("HT"), PAPER) == ParseOutcome(False)

    def test_joint(self):
        out = parse(from_roles("HB", TINY), TINY)
        assert out == ParseOutcome(True, 1, "b")


ROLE_TEXT = st.text(alphabet="HTB", max_size=9)


@settings(max_examples=300, deadline=None)
@given(roles=ROLE_TEXT)
def test_factor_closure(roles):
    # every contiguous factor of a legal word is legal
    word = from_roles(roles, TINY)
    if not is_legal(word, TINY):
        return
    n = len(roles)
    for i in range(n):
        for j in range(i, n + 1):
            assert is_legal(word[i:j], TINY)


@settings(max_examples=300, deadline=None)
@given(roles=ROLE_TEXT)
def test_forced_zero_iff_hub_extension(roles):
    word = from_roles(roles, TINY)
    if not is_legal(word, TINY):
        return
    f = forced_distance(word, TINY)
    hub_ok = is_legal(word + W((1, 1)), TINY)
    assert (f == 0) == hub_ok
    if f > 0:
        # every legal continuation letter projects to first digit 1
        for sym in TINY.alphabet():
            if is_legal(word + Word([sym]), TINY):
                assert sym.a == 1


@settings(max_examples=200, deadline=None)
@given(roles=ROLE_TEXT, data=st.data())
def test_block_letters_interchangeable(roles, data):
    # swapping block letters never changes legality, forced or class
    word = from_roles(roles, TINY)
    if not any(s.role == BLOCK for s in word):
        return
    blocks = TINY.block_symbols()
    swapped = Word(
        data.draw(st.sampled_from(blocks)) if s.role == BLOCK else s for s in word
    )
    assert is_legal(word, TINY) == is_legal(swapped, TINY)
    if is_legal(word, TINY):
        assert forced_distance(word, TINY) == forced_distance(swapped, TINY)
        assert classify(word, TINY) == classify(swapped, TINY)


@settings(max_examples=200, deadline=None)
@given(roles=ROLE_TEXT)
def test_forced_distance_realizable(roles):
    # a hub letter is reachable in exactly f more letters: extending with the
    # greedy completion (finish block, then its tail) of length f ends forced-0
    word = from_roles(roles, TINY)
    if not is_legal(word, TINY):
        return
    f = forced_distance(word, TINY)
    assert f >= 0
    sc = Scanner(TINY, len(word) + f + 1)
    live = sc.scan_word(word)
    best = min(live, key=sc.distance)
    ext = []
    if isinstance(best, tuple):
        kind, pos, length = best
        if kind == BLOCK:
            ext += [BLOCK] * (length - pos) + [TAIL] * length
        else:
            ext += [TAIL] * (length - pos)
    assert len(ext) == f
    grown = word + word_from_roles(ext, TINY)
    assert is_legal(grown, TINY)
    assert forced_distance(grown, TINY) == 0

"""Finite words over the grid alphabet: legality, forced distance, classes.

A finite word is legal when it occurs as a factor of some one-sided infinite
stream of units, where a unit is either a single hub symbol or a block run of
length L = p^r followed by a tail run of the same length L.  The window may
open mid-unit, so the leftmost run can be the tail end of a unit whose start
is hidden, and the rightmost run can be an unfinished block or tail.

Legality and the minimal forced distance (how many symbols must still be read
before a hub symbol can legally occur) depend only on the run decomposition.
The closed rules below are validated against the nondeterministic scanner in
scan.py and against direct stream enumeration in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

from .grid import BLOCK, HUB, TAIL, GridConfig, Symbol


class Word:
    """Immutable sequence of symbols with a cached run decomposition."""

    def __init__(self, symbols=()):
        self.symbols = tuple(Symbol(a, b) for a, b in symbols)

    @cached_property
    def runs(self) -> tuple:
        """Maximal (role, length) runs; the dead role is kept as None runs."""
        out = []
        for sym in self.symbols:
            role = sym.role
            if out and out[-1][0] == role:
                out[-1][1] += 1
            else:
                out.append([role, 1])
        return tuple((r, ln) for r, ln in out)

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return Word(self.symbols[idx])
        return self.symbols[idx]

    def __eq__(self, other):
        if isinstance(other, Word):
            return self.symbols == other.symbols
        return NotImplemented

    def __hash__(self):
        return hash(self.symbols)

    def __lt__(self, other):
        return self.symbols < other.symbols

    def __add__(self, other):
        return Word(self.symbols + coerce_word(other).symbols)

    def __repr__(self):
        return "Word(%s)" % "".join(repr(s) for s in self.symbols)

    def role_string(self) -> str:
        """Roles as a string over H/T/B; '?' marks dead symbols."""
        return "".join(s.role or "?" for s in self.symbols)


def coerce_word(word) -> Word:
    if isinstance(word, Word):
        return word
    return Word(word)


@dataclass(frozen=True)
class ParseOutcome:
    """Joint result of legality, forced distance and classification."""

    legal: bool
    forced: Optional[int] = None
    class_tag: Optional[str] = None


def _checked_runs(word: Word, cfg: GridConfig):
    """Run decomposition, or None when some symbol is outside the alphabet."""
    for sym in word.symbols:
        if not cfg.in_alphabet(sym):
            return None
    return word.runs


def _runs_legal(runs, cfg: GridConfig) -> bool:
    # Scan maximal runs left to right.  Constraints only arise at the joints
    # where a block run meets its tail, plus the no-hub-after-block and
    # no-tail-after-hub exclusions.  A leading tail run is always a valid unit
    # suffix and a trailing block or tail run may be unfinished.
    powers = set(cfg.powers_upto(sum(ln for _, ln in runs) + 1) or [1])

    def is_power(x):
        return x in powers or cfg.tau(x) == x

    for idx, (role, ln) in enumerate(runs):
        prev = runs[idx - 1][0] if idx > 0 else None
        last = idx == len(runs) - 1
        if role == HUB:
            if prev == BLOCK:
                return False
        elif role == TAIL:
            if prev == HUB:
                return False
            if prev is None:
                continue  # unit suffix, any length
            w = runs[idx - 1][1]
            if idx - 1 == 0:
                # block start hidden: full block length is some p^r >= visible w
                if last:
                    continue  # unfinished tail, any p^r >= max(w, ln) works
                if not is_power(ln) or ln < w:
                    return False
            else:
                # block start visible: block length is exactly w
                if not is_power(w):
                    return False
                if last:
                    if ln > w:
                        return False
                elif ln != w:
                    return False
        else:  # BLOCK
            if not last and runs[idx + 1][0] == BLOCK:
                return False  # cannot happen for maximal runs, kept as a guard
            # length constraints are enforced at the following tail run, and a
            # trailing block run may always be extended inside some p^r block
    return True


def is_legal(word, cfg: GridConfig) -> bool:
    """True iff the word occurs in some unit stream.

    Symbols outside the alphabet (the a >= 2, b >= 2 corner or out-of-range
    pairs) make the word illegal rather than raising.
    """
    word = coerce_word(word)
    runs = _checked_runs(word, cfg)
    if runs is None:
        return False
    if not runs:
        return True
    return _runs_legal(runs, cfg)


def forced_distance(word, cfg: GridConfig) -> int:
    """Minimal number of further symbols before a hub symbol can occur.

    The minimum ranges over all parses of the word, including parses whose
    leading unit starts before the window.  Raises ValueError on illegal
    words.
    """
    word = coerce_word(word)
    if not is_legal(word, cfg):
        raise ValueError("forced_distance of an illegal word: %r" % (word,))
    runs = word.runs
    if not runs:
        return 0
    role, ln = runs[-1]
    if role == HUB:
        return 0
    if role == BLOCK:
        if len(runs) == 1:
            # hidden prefix allowed: best parse finishes the block at the
            # window edge, leaving a full tail of length tau(ln)
            return cfg.tau(ln)
        return 2 * cfg.tau(ln) - ln
    # trailing tail run
    if len(runs) == 1:
        return 0  # completable as an entire unit suffix
    w = runs[-2][1]
    if len(runs) == 2 and runs[0][0] == BLOCK:
        # block start hidden: minimize p^r - z over p^r >= max(w, z)
        return cfg.tau(max(w, ln)) - ln
    return w - ln


def classify(word, cfg: GridConfig) -> str:
    """Canonical reporting tag by trailing structure.

    Tags: "a" ends at a hub or a completed tail, "b" trailing block run after
    a hub-reachable prefix, "c" all-block word, "d" block-led word ending in
    an unfinished tail, "e" trailing block+tail with the block start visible,
    "hub-pure" nonempty all-hub word.  Overlaps resolve by the fixed priority
    e > a > b > c > d.  Raises ValueError on illegal words.
    """
    word = coerce_word(word)
    if not is_legal(word, cfg):
        raise ValueError("classify of an illegal word: %r" % (word,))
    runs = word.runs
    if not runs:
        return "a"
    if all(role == HUB for role, _ in runs):
        return "hub-pure"
    role, ln = runs[-1]
    if role == TAIL and len(runs) >= 2 and runs[-2][0] == BLOCK and len(runs) >= 3:
        return "e"
    if forced_distance(word, cfg) == 0:
        return "a"
    if role == BLOCK:
        return "c" if len(runs) == 1 else "b"
    # remaining: trailing tail with forced > 0, block run at the word start
    return "d"


def parse(word, cfg: GridConfig) -> ParseOutcome:
    """Legality, forced distance and class tag in one call."""
    word = coerce_word(word)
    if not is_legal(word, cfg):
        return ParseOutcome(False)
    return ParseOutcome(True, forced_distance(word, cfg), classify(word, cfg))


def word_from_roles(roles: Sequence[str], cfg: GridConfig) -> Word:
    """Canonical symbol word for a role string (first symbol of each role)."""
    pick = {HUB: Symbol(1, 1), TAIL: Symbol(1, 2), BLOCK: Symbol(1, 3)}
    return Word(pick[r] for r in roles)

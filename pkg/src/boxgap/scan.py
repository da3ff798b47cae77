"""Nondeterministic left-to-right scanner over unit-stream parses.

States track where the scan sits inside the current unit:

  "H"          at a unit boundary (a hub symbol may occur here)
  ("B", c, L)  c symbols into a block of full length L = p^r, 1 <= c <= L
  ("T", z, L)  z symbols into the tail of a length-L block, 1 <= z < L

A completed tail lands back on "H".  Scanning starts from the hidden set (any
mid-unit position, window opened mid-stream) or from {"H"} alone (stream
started at a unit boundary).  Hidden block lengths are capped at tau(maxlen):
a longer block can neither finish inside the window nor change which runs fit,
so the capped automaton accepts the same windows with the same minimal
distances.

The scanner is the oracle side of the package: words.is_legal and
words.forced_distance must agree with it everywhere, and the counting
recurrences must agree with census() on every configuration small enough to
enumerate.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .grid import BLOCK, HUB, ROLES, TAIL, GridConfig
from .words import Word, coerce_word

DEFAULT_BUDGET = 10**8

HUB_STATE = "H"


class BudgetError(RuntimeError):
    """Raised when a brute-force operation would exceed the enumeration cap."""


def enumeration_budget(explicit=None) -> int:
    """Effective enumeration cap: explicit value, else BOXGAP_BUDGET, else default."""
    if explicit is not None:
        return int(explicit)
    env = os.environ.get("BOXGAP_BUDGET")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError("BOXGAP_BUDGET must be an integer, got %r" % env) from None
    return DEFAULT_BUDGET


class Scanner:
    """Parse automaton for words of length <= maxlen over one configuration."""

    def __init__(self, cfg: GridConfig, maxlen: int):
        self.cfg = cfg
        self.maxlen = max(1, int(maxlen))
        self.cap = cfg.tau(self.maxlen)
        self.powers = cfg.powers_upto(self.cap)
        self._step_cache = {}
        self._hub_starts = frozenset(
            (BLOCK, 1, L) for L in self.powers
        )

    def initial(self, hidden: bool = True) -> frozenset:
        if not hidden:
            return frozenset((HUB_STATE,))
        states = [HUB_STATE]
        for L in self.powers:
            states.extend((BLOCK, c, L) for c in range(1, L + 1))
            states.extend((TAIL, z, L) for z in range(1, L))
        return frozenset(states)

    def step(self, states: frozenset, role: str) -> frozenset:
        key = (states, role)
        hit = self._step_cache.get(key)
        if hit is not None:
            return hit
        out = set()
        if role == HUB:
            if HUB_STATE in states:
                out.add(HUB_STATE)
        elif role == BLOCK:
            if HUB_STATE in states:
                out.update(self._hub_starts)
            for st in states:
                if isinstance(st, tuple) and st[0] == BLOCK and st[1] < st[2]:
                    out.add((BLOCK, st[1] + 1, st[2]))
        elif role == TAIL:
            for st in states:
                if not isinstance(st, tuple):
                    continue
                kind, pos, L = st
                if kind == BLOCK and pos == L:
                    out.add(HUB_STATE if L == 1 else (TAIL, 1, L))
                elif kind == TAIL:
                    out.add(HUB_STATE if pos + 1 == L else (TAIL, pos + 1, L))
        else:
            raise ValueError("unknown role %r" % (role,))
        result = frozenset(out)
        self._step_cache[key] = result
        return result

    def scan_roles(self, roles, hidden: bool = True) -> frozenset:
        states = self.initial(hidden)
        for role in roles:
            states = self.step(states, role)
            if not states:
                break
        return states

    def scan_word(self, word, hidden: bool = True) -> frozenset:
        word = coerce_word(word)
        roles = []
        for sym in word.symbols:
            if not self.cfg.in_alphabet(sym):
                return frozenset()
            roles.append(sym.role)
        return self.scan_roles(roles, hidden)

    @staticmethod
    def distance(state) -> int:
        """Symbols until a hub symbol can occur, from this state on."""
        if not isinstance(state, tuple):
            return 0
        kind, pos, L = state
        return 2 * L - pos if kind == BLOCK else L - pos

    def min_distance(self, states) -> int:
        return min(self.distance(st) for st in states)


@dataclass(frozen=True)
class Census:
    """Exact per-length family counts from direct automaton enumeration."""

    cfg: GridConfig
    nmax: int
    sigma: tuple
    loops: tuple
    ends_at_hub: tuple
    starts_at_hub: tuple


def census(nmax: int, cfg: GridConfig) -> Census:
    """Count all four word families for lengths 0..nmax by brute force.

    The walk enumerates role words (pruned by the scanner) and weights each
    by the number of symbol words carrying that role pattern; legality and
    family membership depend on roles only.
    """
    sc = Scanner(cfg, nmax)
    sigma = [0] * (nmax + 1)
    loops = [0] * (nmax + 1)
    ends = [0] * (nmax + 1)
    starts = [0] * (nmax + 1)
    weights = {role: cfg.role_weight(role) for role in ROLES}

    def visit(depth, full, start, weight):
        sigma[depth] += weight
        if HUB_STATE in full:
            ends[depth] += weight
        if start:
            starts[depth] += weight
            if HUB_STATE in start:
                loops[depth] += weight
        if depth == nmax:
            return
        for role in ROLES:
            nxt = sc.step(full, role)
            if nxt:
                visit(depth + 1, nxt, sc.step(start, role) if start else start, weight * weights[role])

    visit(0, sc.initial(True), sc.initial(False), 1)
    return Census(cfg, nmax, tuple(sigma), tuple(loops), tuple(ends), tuple(starts))


def enumerate_words(N: int, cfg: GridConfig, budget=None) -> list:
    """All legal words of length N, lexicographically sorted.

    Refuses with BudgetError when the projected word count exceeds the
    enumeration cap.
    """
    if N < 0:
        raise ValueError("word length must be >= 0, got %d" % N)
    from .counting import count_sigma

    cap = enumeration_budget(budget)
    projected = count_sigma(N, cfg)
    if projected > cap:
        raise BudgetError(
            "oracle infeasible: projected word count %d exceeds budget %d" % (projected, cap)
        )
    sc = Scanner(cfg, max(N, 1))
    alphabet = cfg.alphabet()
    out = []
    prefix = []

    def extend(depth, states):
        if depth == N:
            out.append(Word(prefix))
            return
        for sym in alphabet:
            nxt = sc.step(states, sym.role)
            if nxt:
                prefix.append(sym)
                extend(depth + 1, nxt)
                prefix.pop()

    extend(0, sc.initial(True))
    return out


def live_classes(k: int, cfg: GridConfig, maxlen=None) -> dict:
    """Group the legal length-k words by their live state set.

    The live set is computed with hidden block lengths capped for words up to
    maxlen (default k); pass the target extension length when the classes
    feed extension queries.  Returns {live: (word_count, representative)}
    where the representative is a role string and word_count sums the symbol
    words over all role patterns sharing the live set.
    """
    sc = Scanner(cfg, maxlen if maxlen is not None else k)
    weights = {role: cfg.role_weight(role) for role in ROLES}
    out = {}
    roles = []

    def walk(depth, states, weight):
        if depth == k:
            ent = out.get(states)
            if ent is None:
                out[states] = ["".join(roles), weight]
            else:
                ent[1] += weight
            return
        for role in ROLES:
            nxt = sc.step(states, role)
            if nxt:
                roles.append(role)
                walk(depth + 1, nxt, weight * weights[role])
                roles.pop()

    walk(0, sc.initial(True), 1)
    return {live: (count, rep) for live, (rep, count) in out.items()}

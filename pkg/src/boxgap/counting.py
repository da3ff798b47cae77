"""Exact big-integer counts of the word families.

Four families, all counted by peeling the last complete unit or the trailing
fragment off a word:

  loops          words that start and end at a unit boundary
  ends_at_hub    words with forced distance 0 (hidden left edge allowed)
  sigma          all legal words
  starts_at_hub  prefixes of streams that start at a unit boundary

With L = loops, I = ends_at_hub, g = n - 2 block symbols and block lengths
ranging over powers of p:

  L(N) = m L(N-1) + sum_{2 p^r <= N} g^{p^r} L(N - 2 p^r)
  I(N) = m I(N-1) + sum_{2 p^r <= N} g^{p^r} I(N - 2 p^r)
         + 1 + sum_{p^r = L > j >= 1, j + L = N} g^j

The +1 in I is the pure-tail word; the last sum covers words that are a
block suffix plus its entire tail.  sigma and starts_at_hub are assembled
from I and L by classifying the trailing fragment; every case group is
disjoint, so the sums are exact, never upper bounds.  census() in scan.py
re-derives all four families by direct enumeration and the test suite keeps
the two in exact agreement.

Everything here is pure integer arithmetic; floats appear only in the log
helpers at the very end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .grid import GridConfig

FAMILIES = ("sigma", "loops", "ends_at_hub", "starts_at_hub")

# family tables grow on demand and are shared across calls
_tables: dict = {}


def _gpow(cfg: GridConfig):
    cache = _tables.setdefault(("gpow", cfg), [1])
    return cache


def _g_to(w: int, cfg: GridConfig) -> int:
    cache = _gpow(cfg)
    while len(cache) <= w:
        cache.append(cache[-1] * cfg.g)
    return cache[w]


def _loops_table(nmax: int, cfg: GridConfig) -> list:
    vals = _tables.setdefault(("loops", cfg), [1])
    for N in range(len(vals), nmax + 1):
        total = cfg.m * vals[N - 1]
        L = 1
        while 2 * L <= N:
            total += _g_to(L, cfg) * vals[N - 2 * L]
            L *= cfg.p
        vals.append(total)
    return vals


def _ends_table(nmax: int, cfg: GridConfig) -> list:
    vals = _tables.setdefault(("ends_at_hub", cfg), [1])
    for N in range(len(vals), nmax + 1):
        total = cfg.m * vals[N - 1] + 1
        L = 1
        while 2 * L <= N:
            total += _g_to(L, cfg) * vals[N - 2 * L]
            L *= cfg.p
        # block suffix of visible length j plus its full tail of length L
        L = 1
        while L <= N - 1:
            if 2 * L > N:
                total += _g_to(N - L, cfg)
            L *= cfg.p
        vals.append(total)
    return vals


def _sigma_of(N: int, cfg: GridConfig) -> int:
    if N == 0:
        return 1
    ends = _ends_table(N, cfg)
    total = ends[N]
    # trailing block run of visible start, w < N, after a forced-0 prefix
    for w in range(1, N):
        total += _g_to(w, cfg) * ends[N - w]
    # all-block word
    total += _g_to(N, cfg)
    # trailing B^L T^z, z < L, block start visible after a forced-0 prefix
    L = 1
    while L <= N - 2:
        for z in range(1, L):
            u = N - L - z
            if u >= 1:
                total += _g_to(L, cfg) * ends[u]
        L *= cfg.p
    # whole word is a block suffix plus an unfinished tail (hidden start)
    for j in range(1, N):
        z = N - j
        if cfg.tau(max(j, z)) > z:
            total += _g_to(j, cfg)
    return total


def _sigma_table(nmax: int, cfg: GridConfig) -> list:
    vals = _tables.setdefault(("sigma", cfg), [1])
    for N in range(len(vals), nmax + 1):
        vals.append(_sigma_of(N, cfg))
    return vals


def _starts_table(nmax: int, cfg: GridConfig) -> list:
    vals = _tables.setdefault(("starts_at_hub", cfg), [1])
    loops = _loops_table(nmax, cfg)
    for N in range(len(vals), nmax + 1):
        total = loops[N]
        # unfinished trailing block run of length s
        for s in range(1, N + 1):
            total += _g_to(s, cfg) * loops[N - s]
        # complete block of length L plus unfinished tail of length t < L
        L = 1
        while L < N:
            for t in range(1, L):
                if N - L - t >= 0:
                    total += _g_to(L, cfg) * loops[N - L - t]
            L *= cfg.p
        vals.append(total)
    return vals


_BUILDERS = {
    "sigma": _sigma_table,
    "loops": _loops_table,
    "ends_at_hub": _ends_table,
    "starts_at_hub": _starts_table,
}


@dataclass(frozen=True)
class CountTable:
    """Family counts for 0 <= N <= nmax on one configuration."""

    family: str
    cfg: GridConfig
    values: tuple

    @property
    def nmax(self) -> int:
        return len(self.values) - 1

    def value(self, N: int) -> int:
        return self.values[N]


def count_table(family: str, nmax: int, cfg: GridConfig) -> CountTable:
    if family not in _BUILDERS:
        raise ValueError("unknown family %r (choose from %s)" % (family, ", ".join(FAMILIES)))
    if nmax < 0:
        raise ValueError("nmax must be >= 0, got %d" % nmax)
    vals = _BUILDERS[family](nmax, cfg)
    return CountTable(family, cfg, tuple(vals[: nmax + 1]))


def count_loops(N: int, cfg: GridConfig) -> int:
    """Words of length N that start and end at a unit boundary."""
    _check_n(N)
    return _loops_table(N, cfg)[N]


def count_ends_at_hub(N: int, cfg: GridConfig) -> int:
    """Legal words of length N with forced distance 0."""
    _check_n(N)
    return _ends_table(N, cfg)[N]


def count_sigma(N: int, cfg: GridConfig) -> int:
    """All legal words of length N."""
    _check_n(N)
    return _sigma_table(N, cfg)[N]


def count_starts_at_hub(N: int, cfg: GridConfig) -> int:
    """Length-N prefixes of unit streams that start at a unit boundary."""
    _check_n(N)
    return _starts_table(N, cfg)[N]


def _check_n(N: int):
    if N < 0:
        raise ValueError("word length must be >= 0, got %d" % N)


def ordered_power_sums(c: int, cfg: GridConfig) -> int:
    """Number of compositions of c into parts that are powers of p (p^0 included)."""
    if c < 0:
        raise ValueError("ordered_power_sums needs c >= 0, got %d" % c)
    vals = _tables.setdefault(("power_sums", cfg.p), [1])
    for x in range(len(vals), c + 1):
        total = 0
        q = 1
        while q <= x:
            total += vals[x - q]
            q *= cfg.p
        vals.append(total)
    return vals[c]


def reorder_count(multiplicities: Iterable[int]) -> int:
    """Multinomial (sum m_i)! / prod m_i!; 1 for an empty list."""
    ms = list(multiplicities)
    if any(m < 1 for m in ms):
        raise ValueError("multiplicities must be >= 1, got %r" % (ms,))
    total = math.factorial(sum(ms))
    for m in ms:
        total //= math.factorial(m)
    return total


def log_big(x: int) -> float:
    """Natural log of a positive integer of any size.

    Splits off all but the top 64 bits so the float conversion never
    overflows; relative error stays at float precision.
    """
    if x <= 0:
        raise ValueError("log_big needs a positive integer, got %r" % (x,))
    shift = x.bit_length() - 64
    if shift <= 0:
        return math.log(x)
    return math.log(x >> shift) + shift * math.log(2)


def entropy_series(table: CountTable, nmax=None) -> list:
    """Growth-rate probes (N, log(value)/N) for 1 <= N <= nmax.

    Entries with value 0 are omitted; N = 0 has no rate and is skipped.
    """
    if nmax is None:
        nmax = table.nmax
    if nmax > table.nmax:
        raise ValueError("table only filled to N = %d, asked for %d" % (table.nmax, nmax))
    out = []
    for N in range(1, nmax + 1):
        v = table.values[N]
        if v > 0:
            out.append((N, log_big(v) / N))
    return out

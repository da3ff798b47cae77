"""Geometric realization: cylinder rectangles, grid covers, rasters, files.

Every legal word i of length d names the closed rectangle S_i([0,1]^2) with
width m^-d and height n^-d; all coordinates are exact rationals with
power-of-base denominators.  grid_box_count counts the cells of the square
n^-k grid that meet the union of the depth-l rectangles, with l = l_of_k(k).
Cells are half-open [c n^-k, (c+1) n^-k) on both axes with the last cell
closed, so boundary touches resolve deterministically.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .boxdim import l_of_k
from .counting import count_sigma
from .grid import BLOCK, GridConfig, Symbol
from .scan import HUB_STATE, BudgetError, Scanner, enumeration_budget
from .words import coerce_word, is_legal


@dataclass(frozen=True)
class Rect:
    """Closed axis-aligned rectangle with exact rational corners."""

    x0: Fraction
    y0: Fraction
    width: Fraction
    height: Fraction
    depth: int

    @property
    def x1(self) -> Fraction:
        return self.x0 + self.width

    @property
    def y1(self) -> Fraction:
        return self.y0 + self.height

    def contains(self, other: "Rect") -> bool:
        return (
            self.x0 <= other.x0
            and self.y0 <= other.y0
            and other.x1 <= self.x1
            and other.y1 <= self.y1
        )

    def interior_disjoint(self, other: "Rect") -> bool:
        return (
            self.x1 <= other.x0
            or other.x1 <= self.x0
            or self.y1 <= other.y0
            or other.y1 <= self.y0
        )


def ifs_map(symbol, point, cfg: GridConfig):
    """Exact affine contraction for one symbol: ((x+a-1)/m, (y+b-1)/n)."""
    a, b = symbol
    x, y = point
    return (
        (Fraction(x) + (a - 1)) / cfg.m,
        (Fraction(y) + (b - 1)) / cfg.n,
    )


def cylinder_rect(word, cfg: GridConfig) -> Rect:
    """The rectangle S_word([0,1]^2); raises ValueError on illegal words."""
    word = coerce_word(word)
    if not is_legal(word, cfg):
        raise ValueError("cylinder_rect of an illegal word: %r" % (word,))
    d = len(word)
    xnum = 0
    ynum = 0
    for sym in word.symbols:
        xnum = xnum * cfg.m + (sym.a - 1)
        ynum = ynum * cfg.n + (sym.b - 1)
    return Rect(
        Fraction(xnum, cfg.m ** d),
        Fraction(ynum, cfg.n ** d),
        Fraction(1, cfg.m ** d),
        Fraction(1, cfg.n ** d),
        d,
    )


def _merged_length(intervals) -> int:
    """Total integer count covered by a list of inclusive (lo, hi) ranges."""
    total = 0
    cur_lo = cur_hi = None
    for lo, hi in sorted(intervals):
        if cur_lo is None:
            cur_lo, cur_hi = lo, hi
        elif lo <= cur_hi + 1:
            cur_hi = max(cur_hi, hi)
        else:
            total += cur_hi - cur_lo + 1
            cur_lo, cur_hi = lo, hi
    if cur_lo is not None:
        total += cur_hi - cur_lo + 1
    return total


def grid_box_count(k: int, cfg: GridConfig, budget=None) -> int:
    """Cells of the n^-k grid meeting the union of depth-l rectangles.

    Walks Sigma_k once: under a fixed prefix the depth-l rectangles form,
    per column, a contiguous range starting at the all-ones projection, so
    each prefix contributes one x-interval in its own cell row plus, when the
    all-block extension is legal, the first column's cells in the row above
    (those rectangles touch the top edge of the prefix strip).  Budgeted by
    the exact size of Sigma_k.
    """
    if k < 1:
        raise ValueError("grid_box_count needs k >= 1, got %d" % k)
    cap = enumeration_budget(budget)
    projected = count_sigma(k, cfg)
    if projected > cap:
        raise BudgetError(
            "oracle infeasible: projected word count %d exceeds budget %d" % (projected, cap)
        )
    l = l_of_k(k, cfg)
    sc = Scanner(cfg, l)
    nk = cfg.n ** k
    ml = cfg.m ** l
    mlk = cfg.m ** (l - k)
    ext = l - k
    alphabet = cfg.alphabet()
    rows: dict = {}

    def mark(row, lo, hi):
        rows.setdefault(row, []).append((lo, hi))

    def hub_entry_depth(live):
        # steps until the hub state can join the live set (digit stays 1
        # until then); None when it stays out for all ext steps
        states = live
        for j in range(ext + 1):
            if HUB_STATE in states:
                return j
            merged = set()
            for role in ("H", "T", "B"):
                merged.update(sc.step(states, role))
            states = frozenset(merged)
        return None

    def top_touch(live):
        # the all-block extension i (1,n)^ext is legal iff some parse can
        # still read ext more block symbols
        if HUB_STATE in live:
            return True
        for st in live:
            if isinstance(st, tuple) and st[0] == BLOCK and st[2] - st[1] >= ext:
                return True
        return False

    live_info: dict = {}

    def emit(xnum, ynum, live):
        info = live_info.get(live)
        if info is None:
            j = hub_entry_depth(live)
            width = 1 if j is None else cfg.m ** (ext - j)
            info = (width, top_touch(live))
            live_info[live] = info
        span, top = info
        base = xnum * mlk
        lo = base * nk // ml
        hi = (base + span) * nk // ml
        if hi >= nk:
            hi = nk - 1
        mark(ynum, lo, hi)
        if ynum + 1 <= nk - 1 and top:
            hi2 = (base + 1) * nk // ml
            if hi2 >= nk:
                hi2 = nk - 1
            mark(ynum + 1, lo, hi2)

    def walk(depth, states, xnum, ynum):
        if depth == k:
            emit(xnum, ynum, states)
            return
        for sym in alphabet:
            nxt = sc.step(states, sym.role)
            if nxt:
                walk(depth + 1, nxt, xnum * cfg.m + sym.a - 1, ynum * cfg.n + sym.b - 1)

    walk(0, sc.initial(True), 0, 0)
    return sum(_merged_length(iv) for iv in rows.values())


@dataclass(frozen=True)
class Raster:
    """Deterministic bitmap; row 0 is the top image row."""

    width: int
    height: int
    rows: tuple  # one bytes object of 0/1 flags per row

    def pixel(self, px: int, py: int) -> int:
        """Pixel with py counted upward from the bottom edge."""
        return self.rows[self.height - 1 - py][px]

    def packed(self) -> bytes:
        """Rows packed to bits, high bit first, padded to byte boundaries."""
        out = bytearray()
        for row in self.rows:
            byte = 0
            nbits = 0
            for v in row:
                byte = (byte << 1) | (1 if v else 0)
                nbits += 1
                if nbits == 8:
                    out.append(byte)
                    byte = 0
                    nbits = 0
            if nbits:
                out.append(byte << (8 - nbits))
        return bytes(out)


def rasterize(depth: int, width: int, height: int, cfg: GridConfig, budget=None) -> Raster:
    """Set pixel (px, py) iff some depth-d cylinder rectangle meets its
    closed pixel square; deterministic in (cfg, depth, width, height)."""
    if depth < 0:
        raise ValueError("depth must be >= 0, got %d" % depth)
    if width < 1 or height < 1:
        raise ValueError("raster size must be positive, got %dx%d" % (width, height))
    cap = enumeration_budget(budget)
    projected = count_sigma(depth, cfg)
    if projected > cap:
        raise BudgetError(
            "oracle infeasible: projected word count %d exceeds budget %d" % (projected, cap)
        )
    md = cfg.m ** depth
    nd = cfg.n ** depth
    grid = [bytearray(width) for _ in range(height)]  # grid[py][px], py from bottom
    sc = Scanner(cfg, max(depth, 1))
    alphabet = cfg.alphabet()

    def span(num, den, size):
        # pixels of [num/den, (num+1)/den] scaled by size, closed overlap
        a = num * size
        lo = a // den - 1 if a % den == 0 else a // den
        b = (num + 1) * size
        hi = b // den
        if lo < 0:
            lo = 0
        if hi > size - 1:
            hi = size - 1
        return lo, hi

    def paint(xnum, ynum):
        px_lo, px_hi = span(xnum, md, width)
        py_lo, py_hi = span(ynum, nd, height)
        for py in range(py_lo, py_hi + 1):
            row = grid[py]
            for px in range(px_lo, px_hi + 1):
                row[px] = 1

    def walk(d, states, xnum, ynum):
        if d == depth:
            paint(xnum, ynum)
            return
        for sym in alphabet:
            nxt = sc.step(states, sym.role)
            if nxt:
                walk(d + 1, nxt, xnum * cfg.m + sym.a - 1, ynum * cfg.n + sym.b - 1)

    walk(0, sc.initial(True), 0, 0)
    rows = tuple(bytes(grid[height - 1 - r]) for r in range(height))
    return Raster(width, height, rows)


def write_pnm(raster: Raster, path) -> None:
    """Write a type P4 portable bitmap: header 'P4\\n<W> <H>\\n', packed rows."""
    payload = b"P4\n%d %d\n" % (raster.width, raster.height) + raster.packed()
    try:
        with open(path, "wb") as fh:
            fh.write(payload)
    except OSError as exc:
        raise OSError("cannot write bitmap %s: %s" % (path, exc)) from exc


def export_csv(records: Sequence[Mapping], path, fieldnames: Iterable[str] = None) -> None:
    """Write records as CSV with a header row and LF line endings."""
    records = list(records)
    if fieldnames is None:
        if not records:
            raise ValueError("export_csv needs records or explicit fieldnames")
        fieldnames = list(records[0].keys())
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=list(fieldnames), lineterminator="\n")
            writer.writeheader()
            for rec in records:
                writer.writerow(rec)
    except OSError as exc:
        raise OSError("cannot write csv %s: %s" % (path, exc)) from exc

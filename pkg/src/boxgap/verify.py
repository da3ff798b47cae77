"""Cross-validation suite: every closed form against its brute-force oracle.

Each check is registered under a short name and raises VerifyFailure with a
reproduction command line on the first violation.  The checks cap their own
work so the suite stays usable at any --nmax; caps scale with nmax but stop
at fixed exhaustive limits.
"""

from __future__ import annotations

import itertools
import time
from collections import Counter
from fractions import Fraction

from . import boxdim, counting, geometry, scan, words
from .grid import BLOCK, HUB, PRESETS, ROLES, TAIL, GridConfig


class VerifyFailure(AssertionError):
    """A brute-force oracle disagreed with a production computation."""


def _fail(name, label, nmax, detail):
    raise VerifyFailure(
        "check %r failed: %s\nreproduce: boxgap verify %s --nmax %d --only %s"
        % (name, detail, label, nmax, name)
    )


def _label_for(cfg: GridConfig) -> str:
    for pname, triple in PRESETS.items():
        if (cfg.m, cfg.n, cfg.p) == triple:
            return "--preset %s" % pname
    return "--config <config.json with m=%d n=%d p=%d>" % (cfg.m, cfg.n, cfg.p)


def _stream_factors(cfg: GridConfig, upto: int) -> set:
    """All role strings of length <= upto occurring in unit streams.

    Definitional oracle: a factor is a prefix of (suffix of one unit)
    followed by complete units.  Hidden block lengths above tau(upto) cannot
    change any window, so units stop there.
    """
    cap = cfg.tau(upto)
    units = [HUB] + [BLOCK * L + TAIL * L for L in cfg.powers_upto(cap)]
    starts = {""}
    for u in units:
        starts.update(u[i:] for i in range(1, len(u)))
    seen = set()

    def grow(s):
        if len(s) >= upto:
            seen.update(s[:j] for j in range(upto + 1))
            return
        for u in units:
            grow(s + u)

    for s0 in starts:
        grow(s0)
    return seen


def check_counts(cfg, nmax, label):
    cap = min(nmax, 14)
    cen = scan.census(cap, cfg)
    for fam, got in (
        ("sigma", cen.sigma),
        ("loops", cen.loops),
        ("ends_at_hub", cen.ends_at_hub),
        ("starts_at_hub", cen.starts_at_hub),
    ):
        table = counting.count_table(fam, cap, cfg)
        if tuple(table.values) != got:
            _fail(
                "counts",
                label,
                nmax,
                "%s recurrence %r != census %r" % (fam, table.values, got),
            )
    for N in range(cap + 1):
        if not cen.loops[N] <= cen.ends_at_hub[N] <= cen.sigma[N]:
            _fail("counts", label, nmax, "family chain broken at N=%d" % N)


def check_legality(cfg, nmax, label):
    cap = min(nmax, 9)
    factors = _stream_factors(cfg, cap)
    sc = scan.Scanner(cfg, cap)
    for N in range(cap + 1):
        for roles in itertools.product(ROLES, repeat=N):
            word = words.word_from_roles(roles, cfg)
            live = sc.scan_roles(roles)
            by_rules = words.is_legal(word, cfg)
            if by_rules != bool(live):
                _fail(
                    "legality",
                    label,
                    nmax,
                    "rules=%r scanner=%r on %s" % (by_rules, bool(live), "".join(roles)),
                )
            if by_rules != ("".join(roles) in factors):
                _fail(
                    "legality",
                    label,
                    nmax,
                    "rules disagree with stream factors on %s" % "".join(roles),
                )
            if by_rules:
                closed = words.forced_distance(word, cfg)
                scanned = sc.min_distance(live)
                if closed != scanned:
                    _fail(
                        "legality",
                        label,
                        nmax,
                        "forced closed=%d scanner=%d on %s" % (closed, scanned, "".join(roles)),
                    )


def check_histogram(cfg, nmax, label):
    cap = min(nmax, 7)
    for k in range(1, cap + 1):
        if counting.count_sigma(k, cfg) > 300_000:
            break
        hist = boxdim.forced_histogram(k, cfg)
        brute = Counter(words.forced_distance(w, cfg) for w in scan.enumerate_words(k, cfg))
        if dict(hist.buckets) != dict(brute):
            _fail(
                "histogram",
                label,
                nmax,
                "k=%d closed %r != enumerated %r" % (k, dict(hist.buckets), dict(brute)),
            )
        if hist.total() != counting.count_sigma(k, cfg):
            _fail("histogram", label, nmax, "k=%d bucket total != count_sigma" % k)


def check_columns(cfg, nmax, label):
    kcap = min(nmax, 3)
    for k in range(kcap + 1):
        for word in scan.enumerate_words(k, cfg):
            f = words.forced_distance(word, cfg)
            for l in range(k, min(k + 3, 6) + 1):
                brute = boxdim.column_count_brute(word, l, cfg)
                closed = boxdim.column_count_closed(f, k, l, cfg.m)
                if brute != closed:
                    _fail(
                        "columns",
                        label,
                        nmax,
                        "M(%r, %d): brute %d != closed %d" % (word, l, brute, closed),
                    )


def _feasible_ks(cfg, nmax, work_cap):
    out = []
    for k in range(1, nmax + 1):
        l = boxdim.l_of_k(k, cfg)
        if counting.count_sigma(l, cfg) <= work_cap:
            out.append((k, l))
    return out


def check_nhat(cfg, nmax, label):
    for k, l in _feasible_ks(cfg, nmax, 50_000):
        total = sum(boxdim.column_count_brute(w, l, cfg) for w in scan.enumerate_words(k, cfg))
        value = boxdim.n_hat(k, cfg)
        if total != value:
            _fail("nhat", label, nmax, "k=%d brute sum %d != n_hat %d" % (k, total, value))


def check_scales(cfg, nmax, label):
    for k in range(1, max(nmax, 200) + 1):
        l = boxdim.l_of_k(k, cfg)
        nk = cfg.n ** k
        if not (cfg.m ** l >= nk and nk > cfg.m ** (l - 1)):
            _fail("scales", label, nmax, "l_of_k bracket fails at k=%d" % k)
    for k in range(1, min(nmax, 30) + 1):
        rec = boxdim.scale_record(k, cfg)
        if not 0.0 <= rec.ratio <= 2.0:
            _fail("scales", label, nmax, "ratio out of range at k=%d" % k)
        if rec.n_hat > counting.count_sigma(rec.l, cfg):
            _fail("scales", label, nmax, "n_hat exceeds #Sigma_l at k=%d" % k)
    large, half = boxdim.paper_scales(3, cfg)
    for N, q in enumerate(half, start=1):
        target = cfg.p ** (2 * N - 1)
        if not (q * q >= target and (q - 1) * (q - 1) < target):
            _fail("scales", label, nmax, "half-power scale wrong at N=%d: %d" % (N, q))


def _grid_box_count_literal(k, cfg, budget=None):
    """Independent cell count: every depth-l rectangle marks its cells."""
    l = boxdim.l_of_k(k, cfg)
    nk = cfg.n ** k
    cells = set()
    for w in scan.enumerate_words(l, cfg, budget):
        rect = geometry.cylinder_rect(w, cfg)
        xs = _cells_touched(rect.x0, rect.x1, nk)
        ys = _cells_touched(rect.y0, rect.y1, nk)
        for ix in xs:
            for iy in ys:
                cells.add((ix, iy))
    return len(cells)


def _cells_touched(lo: Fraction, hi: Fraction, cells: int):
    """Half-open cell indexes met by the closed interval [lo, hi] in [0,1]."""
    first = int(lo * cells)  # floor; boundary point belongs to its own cell
    last = int(hi * cells)
    if last == cells:  # right edge of the unit square, last cell is closed
        last = cells - 1
    return range(first, last + 1)


def check_geometry(cfg, nmax, label):
    for k, l in _feasible_ks(cfg, nmax, 50_000):
        lit = _grid_box_count_literal(k, cfg)
        fast = geometry.grid_box_count(k, cfg)
        if lit != fast:
            _fail("geometry", label, nmax, "grid count k=%d: literal %d != walk %d" % (k, lit, fast))
        hat = boxdim.n_hat(k, cfg)
        if not (hat <= 10 * fast and fast <= 10 * hat):
            _fail(
                "geometry",
                label,
                nmax,
                "bracket fails at k=%d: grid %d vs n_hat %d" % (k, fast, hat),
            )
    # nesting and disjoint interiors on a small depth
    lvl = 1
    while lvl < min(3, nmax) and counting.count_sigma(lvl + 1, cfg) <= 200:
        lvl += 1
    rects = [(w, geometry.cylinder_rect(w, cfg)) for w in scan.enumerate_words(lvl, cfg)]
    for (w1, r1), (w2, r2) in itertools.combinations(rects, 2):
        if not r1.interior_disjoint(r2):
            _fail("geometry", label, nmax, "interiors overlap: %r %r" % (w1, w2))
    for w, r in rects:
        parent = geometry.cylinder_rect(w[: lvl - 1], cfg)
        if not parent.contains(r):
            _fail("geometry", label, nmax, "nesting fails for %r" % (w,))


def check_power_sums(cfg, nmax, label):
    cap = min(10 + nmax, 24)
    for c in range(cap + 1):
        count = 0

        def compositions(rest):
            nonlocal count
            if rest == 0:
                count += 1
                return
            q = 1
            while q <= rest:
                compositions(rest - q)
                q *= cfg.p

        compositions(c)
        if count != counting.ordered_power_sums(c, cfg):
            _fail("power-sums", label, nmax, "S_%d mismatch" % c)
    for c in range(0, min(4 * nmax, 60) + 1):
        if _reorder_total(c, cfg) != counting.ordered_power_sums(c, cfg):
            _fail("power-sums", label, nmax, "reorder identity fails at c=%d" % c)


def _reorder_total(c: int, cfg: GridConfig) -> int:
    """Sum of reorder multinomials over multisets of powers summing to c."""
    powers = cfg.powers_upto(c) if c else []
    total = 0

    def choose(idx, rest, mults):
        nonlocal total
        if rest == 0:
            total += counting.reorder_count(mults) if mults else 1
            return
        if idx < 0:
            return
        q = powers[idx]
        choose(idx - 1, rest, mults)
        count = 1
        while count * q <= rest:
            mults.append(count)
            choose(idx - 1, rest - count * q, mults)
            mults.pop()
            count += 1

    if c == 0:
        return 1
    choose(len(powers) - 1, c, [])
    return total


def check_budgets(cfg, nmax, label):
    try:
        scan.enumerate_words(max(6, nmax), cfg, budget=1)
    except scan.BudgetError as exc:
        if "projected" not in str(exc):
            _fail("budgets", label, nmax, "budget error does not name the projected count")
    else:
        _fail("budgets", label, nmax, "enumerate_words ignored a budget of 1")
    try:
        geometry.grid_box_count(max(6, nmax), cfg, budget=1)
    except scan.BudgetError:
        pass
    else:
        _fail("budgets", label, nmax, "grid_box_count ignored a budget of 1")


CHECKS = (
    ("counts", check_counts, "family recurrences equal direct enumeration"),
    ("legality", check_legality, "legality and forced distance match scanner and stream factors"),
    ("histogram", check_histogram, "forced histograms equal per-word enumeration"),
    ("columns", check_columns, "column closed form equals literal projection count"),
    ("nhat", check_nhat, "n_hat equals the summed brute-force column counts"),
    ("scales", check_scales, "scale brackets, ratio range, half-power scales"),
    ("geometry", check_geometry, "grid counts, bracket, nesting, disjointness"),
    ("power-sums", check_power_sums, "composition counts and reorder identity"),
    ("budgets", check_budgets, "budget guards refuse and name projected counts"),
)


def verify(cfg: GridConfig, nmax: int = 10, only=None, emit=None) -> list:
    """Run the cross-validation suite; stop at the first failing check.

    Returns [(name, seconds)] for the checks run.  emit, when given, receives
    one progress line per check.
    """
    label = _label_for(cfg)
    names = [name for name, _, _ in CHECKS]
    if only is not None and only not in names:
        raise ValueError("unknown check %r (choose from %s)" % (only, ", ".join(names)))
    done = []
    for name, fn, blurb in CHECKS:
        if only is not None and name != only:
            continue
        started = time.perf_counter()
        fn(cfg, nmax, label)
        elapsed = time.perf_counter() - started
        done.append((name, elapsed))
        if emit is not None:
            emit("ok %-12s %6.2fs  %s" % (name, elapsed, blurb))
    return done

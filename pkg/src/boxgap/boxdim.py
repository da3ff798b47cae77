"""Exact covering estimates and the dimension-ratio series.

At scale delta = n^-k the plane is cut into n^-k columns of width m^-l where
l = l_of_k(k) is minimal with m^l >= n^k.  For a legal length-k word i, the
number of distinct level-l columns its extensions reach is determined by the
forced distance f of i alone:

    M(i, l) = m^max(0, l - k - f)

because until the forced symbols are consumed every extension projects to the
digit 1, and from the first hub choice on all digit strings occur.  The
covering estimate

    n_hat(k) = sum over i in Sigma_k of M(i, l_of_k(k))

therefore needs only the histogram of forced distances over Sigma_k, which is
assembled exactly from the ends_at_hub table by splitting off the trailing
fragment of each word.  The closed form for M is validated against literal
extension enumeration (column_count_brute) in the test suite, never assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .counting import _ends_table, _g_to, count_sigma, log_big
from .grid import BLOCK, HUB, TAIL, GridConfig
from .scan import BudgetError, Scanner, enumeration_budget
from .words import coerce_word, is_legal


def l_of_k(k: int, cfg: GridConfig) -> int:
    """Minimal l with m^l >= n^k, by exact integer comparison."""
    if k < 1:
        raise ValueError("l_of_k needs k >= 1, got %d" % k)
    nk = cfg.n ** k
    if cfg.m == 2:
        return (nk - 1).bit_length()
    l = max(1, int(k * math.log(cfg.n) / math.log(cfg.m)) - 2)
    while cfg.m ** l < nk:
        l += 1
    while l > 1 and cfg.m ** (l - 1) >= nk:
        l -= 1
    return l


@dataclass(frozen=True)
class ForcedHistogram:
    """Counts of legal length-k words grouped by forced distance."""

    k: int
    cfg: GridConfig
    buckets: tuple  # sorted ((f, count), ...)

    def total(self) -> int:
        return sum(c for _, c in self.buckets)

    def as_dict(self) -> dict:
        return dict(self.buckets)

    def count(self, f: int) -> int:
        return self.as_dict().get(f, 0)


def forced_histogram(k: int, cfg: GridConfig, budget=None) -> ForcedHistogram:
    """Exact forced-distance histogram over all legal length-k words.

    Case split on the trailing fragment, with I = ends_at_hub counts:

      forced 0 words                    -> bucket 0, I(k)
      prefix + visible block run w < k  -> bucket 2 tau(w) - w, I(k-w) g^w
      all-block word                    -> bucket tau(k), g^k
      prefix + B^L T^z, z < L           -> bucket L - z, I(k-L-z) g^L
      whole word B^j T^z (hidden start) -> bucket tau(max(j, z)) - z, g^j

    The groups partition Sigma_k, so the histogram sums to count_sigma(k).
    """
    if k < 1:
        raise ValueError("forced_histogram needs k >= 1, got %d" % k)
    cap = enumeration_budget(budget)
    if k * k > cap:
        raise BudgetError(
            "histogram infeasible: projected work %d exceeds budget %d" % (k * k, cap)
        )
    ends = _ends_table(k, cfg)
    buckets: dict = {0: ends[k]}

    def add(f, c):
        buckets[f] = buckets.get(f, 0) + c

    for w in range(1, k):
        add(2 * cfg.tau(w) - w, ends[k - w] * _g_to(w, cfg))
    add(cfg.tau(k), _g_to(k, cfg))
    L = 1
    while L <= k - 2:
        gL = _g_to(L, cfg)
        for z in range(1, L):
            u = k - L - z
            if u >= 1:
                add(L - z, ends[u] * gL)
        L *= cfg.p
    for j in range(1, k):
        z = k - j
        f = cfg.tau(max(j, z)) - z
        if f > 0:
            add(f, _g_to(j, cfg))
    return ForcedHistogram(k, cfg, tuple(sorted(buckets.items())))


def column_count_closed(f: int, k: int, l: int, base: int = 2) -> int:
    """Columns reached by extensions of a forced-f length-k word: base^max(0, l-k-f)."""
    if not 0 <= k <= l:
        raise ValueError("need 0 <= k <= l, got k=%d l=%d" % (k, l))
    if f < 0:
        raise ValueError("forced distance must be >= 0, got %d" % f)
    return base ** max(0, l - k - f)


def column_count_brute(word, l: int, cfg: GridConfig, budget=None) -> int:
    """Distinct first-coordinate strings over all legal length-l extensions.

    Literal oracle: enumerate every extension, project to the a-digits,
    count distinct strings.  Refuses via BudgetError when the exact number
    of extensions exceeds the enumeration cap.
    """
    word = coerce_word(word)
    if not is_legal(word, cfg):
        raise ValueError("column_count_brute of an illegal word: %r" % (word,))
    k = len(word)
    if l < k:
        raise ValueError("need l >= |word|, got l=%d |word|=%d" % (l, k))
    sc = Scanner(cfg, l)
    live = sc.scan_word(word)
    projected = _extension_count(sc, live, l - k, cfg)
    cap = enumeration_budget(budget)
    if projected > cap:
        raise BudgetError(
            "oracle infeasible: projected extension count %d exceeds budget %d"
            % (projected, cap)
        )
    # Branch per distinct projected letter: every hub letter (a, 1) carries
    # its own first digit, while all block letters share digit 1 and an
    # identical transition, so one representative enumerates them all.
    branches = [(a, HUB) for a in range(1, cfg.m + 1)] + [(1, TAIL), (1, BLOCK)]
    seen = set()
    prefix = []

    def extend(states, remaining):
        if remaining == 0:
            seen.add(tuple(prefix))
            return
        for digit, role in branches:
            nxt = sc.step(states, role)
            if nxt:
                prefix.append(digit)
                extend(nxt, remaining - 1)
                prefix.pop()

    extend(live, l - k)
    return len(seen)


def _extension_count(sc: Scanner, live, steps: int, cfg: GridConfig) -> int:
    """Number of digit-annotated extension paths, by DP over live sets.

    Hub letters count once per distinct first digit; tail and block letters
    collapse to one path each, mirroring the enumeration in
    column_count_brute.
    """
    from .grid import ROLES

    weight = {HUB: cfg.m, TAIL: 1, BLOCK: 1}
    front = {live: 1}
    for _ in range(steps):
        nxt: dict = {}
        for states, ways in front.items():
            for role in ROLES:
                stepped = sc.step(states, role)
                if stepped:
                    nxt[stepped] = nxt.get(stepped, 0) + ways * weight[role]
        front = nxt
    return sum(front.values())


def n_hat(k: int, cfg: GridConfig, budget=None) -> int:
    """Exact covering estimate: sum of column counts over all of Sigma_k."""
    hist = forced_histogram(k, cfg, budget)
    l = l_of_k(k, cfg)
    return sum(c * column_count_closed(f, k, l, cfg.m) for f, c in hist.buckets)


@dataclass(frozen=True)
class ScaleRecord:
    """One row of the ratio series: scale n^-k, column level l, estimate."""

    k: int
    l: int
    n_hat: int
    ratio: float


def scale_record(k: int, cfg: GridConfig, budget=None) -> ScaleRecord:
    l = l_of_k(k, cfg)
    nk = cfg.n ** k
    # exact bracket m^l >= n^k > m^(l-1)
    if not (cfg.m ** l >= nk and nk > cfg.m ** (l - 1)):
        raise ValueError("l_of_k bracket violated at k=%d (internal error)" % k)
    value = n_hat(k, cfg, budget)
    ratio = log_big(value) / (k * math.log(cfg.n))
    if not 0.0 <= ratio <= 2.0:
        raise ValueError("covering ratio %r out of [0, 2] at k=%d" % (ratio, k))
    return ScaleRecord(k, l, value, ratio)


def ratio_series(kmax: int, cfg: GridConfig, budget=None) -> list:
    """ScaleRecords for every k in 1..kmax."""
    if kmax < 1:
        raise ValueError("ratio_series needs kmax >= 1, got %d" % kmax)
    return [scale_record(k, cfg, budget) for k in range(1, kmax + 1)]


def paper_scales(nmax: int, cfg: Optional[GridConfig] = None):
    """The two interleaved scale families (k_N, k'_N) for N = 1..nmax.

    k_N = p^N and k'_N is the least integer q with q*q >= p^(2N-1), i.e.
    the rounded-up half power, both by exact integer arithmetic.  Defaults to
    p = 13 when no configuration is given.
    """
    if nmax < 1:
        raise ValueError("paper_scales needs nmax >= 1, got %d" % nmax)
    p = cfg.p if cfg is not None else 13
    large = []
    half = []
    for N in range(1, nmax + 1):
        large.append(p ** N)
        target = p ** (2 * N - 1)
        q = math.isqrt(target)
        if q * q < target:
            q += 1
        half.append(q)
    return large, half


def dimension_constants(cfg: Optional[GridConfig] = None):
    """The two closed-form box-dimension constants of the (2,12,13) instance."""
    if cfg is not None and not cfg.paper_instance:
        raise ValueError(
            "closed-form constants are specific to (m,n,p) = (2,12,13); "
            "got (%d,%d,%d)" % (cfg.m, cfg.n, cfg.p)
        )
    log2 = math.log(2)
    log12 = math.log(12)
    d_high = math.log(10) / log12 + log2 * (1 / log2 - 2 / log12)
    s = 1 / math.sqrt(13)
    d_low = (s * math.log(10) + (1 - s) * math.log(4)) / log12 + log2 * (
        1 / log2 - (1 + s) / log12
    )
    return d_high, d_low


@dataclass(frozen=True)
class BoundCheck:
    """Exact lower-bound check n_hat(p^N) >= g^k m^(l - 2k) at k = p^N."""

    N: int
    k: int
    l: int
    holds: bool


def check_large_scale_bound(N: int, cfg: GridConfig, budget=None) -> BoundCheck:
    k = cfg.p ** N
    rec_l = l_of_k(k, cfg)
    value = n_hat(k, cfg, budget)
    # compare value >= g^k * m^(l - 2k) without fractional powers
    lhs, rhs = value, _g_to(k, cfg)
    if rec_l >= 2 * k:
        rhs *= cfg.m ** (rec_l - 2 * k)
    else:
        lhs *= cfg.m ** (2 * k - rec_l)
    return BoundCheck(N, k, rec_l, lhs >= rhs)


@dataclass(frozen=True)
class GapReport:
    """Ratio oscillation summary over both scale families."""

    cfg: GridConfig
    nmax: int
    records: tuple  # ScaleRecord for k = 1..p^nmax
    large_scales: tuple  # (N, ScaleRecord at p^N)
    half_scales: tuple  # (N, ScaleRecord at ceil-half-power)
    d_high: Optional[float]
    d_low: Optional[float]
    ratio_min: float
    ratio_max: float
    bound_checks: tuple  # BoundCheck per N

    def to_markdown(self) -> str:
        cfg = self.cfg
        lines = []
        lines.append("# Covering ratio report")
        lines.append("")
        lines.append(
            "Configuration: m=%d, n=%d, p=%d; scales n^-k for k = 1..%d."
            % (cfg.m, cfg.n, cfg.p, self.records[-1].k)
        )
        lines.append("")
        if self.d_high is not None:
            lines.append(
                "Closed-form constants: D_high = %.10g (%.4f to four decimal "
                "places), D_low = %.10g (%.4f), gap of the rounded values %.4f."
                % (
                    self.d_high,
                    round(self.d_high, 4),
                    self.d_low,
                    round(self.d_low, 4),
                    round(self.d_high, 4) - round(self.d_low, 4),
                )
            )
        else:
            lines.append(
                "Closed-form constants: not available for this configuration "
                "(defined only for m=2, n=12, p=13)."
            )
        lines.append(
            "Observed ratio range over the computed scales: min %.10g, max %.10g."
            % (self.ratio_min, self.ratio_max)
        )
        lines.append("")
        lines.append("| family | N | k | l | n_hat | ratio |")
        lines.append("|---|---|---|---|---|---|")
        for fam, rows in (("k = p^N", self.large_scales), ("k = p^(N-1/2)", self.half_scales)):
            for N, rec in rows:
                lines.append(
                    "| %s | %d | %d | %d | %s | %.10g |"
                    % (fam, N, rec.k, rec.l, _sci(rec.n_hat), rec.ratio)
                )
        lines.append("")
        for chk in self.bound_checks:
            lines.append(
                "- exact bound n_hat(%d) >= g^%d * m^(%d): %s"
                % (chk.k, chk.k, chk.l - 2 * chk.k, "holds" if chk.holds else "FAILS")
            )
        lines.append("")
        return "\n".join(lines)


def _sci(value: int) -> str:
    """Deterministic short scientific form of a big positive integer."""
    s = str(value)
    if len(s) <= 12:
        return s
    return "%s.%se%d" % (s[0], s[1:11], len(s) - 1)


def gap_report(nmax: int, cfg: GridConfig, budget=None) -> GapReport:
    """Ratio series up to k = p^nmax with paper-scale subsequences and checks."""
    if nmax < 1:
        raise ValueError("gap_report needs nmax >= 1, got %d" % nmax)
    large, half = paper_scales(nmax, cfg)
    records = ratio_series(large[-1], cfg, budget)
    by_k = {rec.k: rec for rec in records}
    large_rows = tuple((N + 1, by_k[k]) for N, k in enumerate(large))
    half_rows = tuple((N + 1, by_k[k]) for N, k in enumerate(half))
    if cfg.paper_instance:
        d_high, d_low = dimension_constants(cfg)
    else:
        d_high = d_low = None
    ratios = [rec.ratio for rec in records]
    checks = tuple(check_large_scale_bound(N, cfg, budget) for N in range(1, nmax + 1))
    return GapReport(
        cfg,
        nmax,
        tuple(records),
        large_rows,
        half_rows,
        d_high,
        d_low,
        min(ratios),
        max(ratios),
        checks,
    )

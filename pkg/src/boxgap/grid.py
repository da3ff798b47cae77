"""Grid shift parameters and the symbol alphabet.

A configuration fixes a horizontal base m, a vertical base n > m and a block
base p.  Symbols are pairs (a, b) with 1 <= a <= m, 1 <= b <= n.  Three roles
matter: hub symbols (a, 1), the tail symbol (1, 2), and block symbols (1, b)
with b >= 3.  Symbols with a >= 2 and b >= 2 exist in the ambient alphabet but
never occur in legal words.  Block runs come in lengths that are exact powers
of p; each complete block run is followed by a tail run of equal length.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

HUB = "H"
TAIL = "T"
BLOCK = "B"

ROLES = (HUB, TAIL, BLOCK)


class Symbol(NamedTuple):
    a: int
    b: int

    @property
    def role(self) -> Optional[str]:
        """Role of the symbol, or None for the dead (a>=2, b>=2) corner."""
        if self.b == 1:
            return HUB
        if self.a == 1:
            return TAIL if self.b == 2 else BLOCK
        return None

    def __repr__(self) -> str:
        return "(%d,%d)" % (self.a, self.b)


@dataclass(frozen=True)
class GridConfig:
    """Immutable parameter block (m, n, p) with derived symbol sets."""

    m: int
    n: int
    p: int

    def __post_init__(self):
        # validation messages name the violated invariant
        for name in ("m", "n", "p"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError("config field %r must be an integer, got %r" % (name, v))
        if self.m < 2:
            raise ValueError("invariant m >= 2 violated: m = %d" % self.m)
        if self.n <= self.m:
            raise ValueError("invariant n > m violated: n = %d, m = %d" % (self.n, self.m))
        if self.p < 2:
            raise ValueError("invariant p >= 2 violated: p = %d" % self.p)
        if self.g < 1:
            raise ValueError("invariant g = n - 2 >= 1 violated: n = %d" % self.n)

    @property
    def g(self) -> int:
        """Number of block symbols."""
        return self.n - 2

    @property
    def paper_instance(self) -> bool:
        return (self.m, self.n, self.p) == (2, 12, 13)

    # symbol sets, in lexicographic order
    def hub_symbols(self) -> list[Symbol]:
        return [Symbol(a, 1) for a in range(1, self.m + 1)]

    @property
    def tail_symbol(self) -> Symbol:
        return Symbol(1, 2)

    def block_symbols(self) -> list[Symbol]:
        return [Symbol(1, b) for b in range(3, self.n + 1)]

    def alphabet(self) -> list[Symbol]:
        """All symbols that can occur in legal words, lexicographically sorted."""
        syms = [Symbol(1, b) for b in range(1, self.n + 1)]
        syms.extend(Symbol(a, 1) for a in range(2, self.m + 1))
        return sorted(syms)

    def in_alphabet(self, sym) -> bool:
        """True iff sym is a legal-alphabet symbol of this configuration."""
        a, b = sym
        if not (1 <= a <= self.m and 1 <= b <= self.n):
            return False
        return b == 1 or a == 1

    def role_of(self, sym) -> Optional[str]:
        """Role of sym within this configuration, None if it cannot occur."""
        if not self.in_alphabet(sym):
            return None
        return Symbol(*sym).role

    def symbols_with_role(self, role: str) -> list[Symbol]:
        if role == HUB:
            return self.hub_symbols()
        if role == TAIL:
            return [self.tail_symbol]
        if role == BLOCK:
            return self.block_symbols()
        raise ValueError("unknown role %r" % (role,))

    def role_weight(self, role: str) -> int:
        """How many alphabet symbols carry the given role."""
        if role == HUB:
            return self.m
        if role == TAIL:
            return 1
        if role == BLOCK:
            return self.g
        raise ValueError("unknown role %r" % (role,))

    def powers_upto(self, limit: int) -> list[int]:
        """Block lengths p^r <= limit, ascending.  p^0 = 1 is included."""
        out = []
        q = 1
        while q <= limit:
            out.append(q)
            q *= self.p
        return out

    def tau(self, x: int) -> int:
        """Smallest power of p that is >= x."""
        if x < 1:
            raise ValueError("tau is defined for x >= 1, got %d" % x)
        q = 1
        while q < x:
            q *= self.p
        return q


def tau(x: int, cfg: GridConfig) -> int:
    """Smallest p^r with p^r >= x (p from cfg)."""
    return cfg.tau(x)


PRESETS = {
    "paper": (2, 12, 13),
    "tiny": (2, 4, 2),
    "small": (2, 6, 3),
}


def preset(name: str) -> GridConfig:
    try:
        m, n, p = PRESETS[name]
    except KeyError:
        raise ValueError("unknown preset %r (choose from %s)" % (name, ", ".join(sorted(PRESETS)))) from None
    return GridConfig(m, n, p)


def load_config(path) -> GridConfig:
    """Read a GridConfig from a JSON document {"m": int, "n": int, "p": int}."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError("config file %s is not valid JSON: %s" % (path, exc)) from None
    if not isinstance(doc, dict):
        raise ValueError("config file %s must hold a JSON object" % path)
    extra = sorted(set(doc) - {"m", "n", "p"})
    if extra:
        raise ValueError("config file %s has unknown fields: %s" % (path, ", ".join(extra)))
    missing = sorted({"m", "n", "p"} - set(doc))
    if missing:
        raise ValueError("config file %s is missing fields: %s" % (path, ", ".join(missing)))
    return GridConfig(doc["m"], doc["n"], doc["p"])


def coerce_config(cfg) -> GridConfig:
    """Accept a GridConfig, a preset name, or an (m, n, p) triple."""
    if isinstance(cfg, GridConfig):
        return cfg
    if isinstance(cfg, str):
        return preset(cfg)
    if isinstance(cfg, Iterable):
        m, n, p = cfg
        return GridConfig(m, n, p)
    raise ValueError("cannot interpret %r as a grid configuration" % (cfg,))

"""
T-links: closures of products of left-aligned torus braids
(sigma_1 ... sigma_{r_i - 1})^{s_i} with 2 <= r_1 < ... < r_k.

A spec is equivalently a Young diagram with s_i rows of width r_i; the
transpose of that diagram gives the same link.
"""

from __future__ import annotations

import dataclasses
import re
from math import gcd

from .braid import BraidError, BraidWord, torus_block
from .invariants import closure_components


class TLinkError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class TLinkSpec:
    """Ordered (r, s) pairs. No pairs at all is the unknot."""
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(r), int(s)) for r, s in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        for k, (r, s) in enumerate(pairs):
            if r < 2:
                raise TLinkError(f"pair {k + 1}: r = {r} must be >= 2")
            if s < 1:
                raise TLinkError(f"pair {k + 1}: s = {s} must be positive")
            if k and r <= pairs[k - 1][0]:
                raise TLinkError(
                    f"pair {k + 1}: r values must strictly increase ({pairs[k - 1][0]} then {r})"
                )

    @classmethod
    def of(cls, *pairs: tuple[int, int]) -> TLinkSpec:
        return cls(tuple(pairs))

    @classmethod
    def unknot(cls) -> TLinkSpec:
        return cls(())

    @property
    def strands(self) -> int:
        return self.pairs[-1][0] if self.pairs else 1

    @property
    def top(self) -> tuple[int, int]:
        return self.pairs[-1]

    @property
    def lower(self) -> TLinkSpec:
        return TLinkSpec(self.pairs[:-1])

    def crossing_count(self) -> int:
        return sum(s * (r - 1) for r, s in self.pairs)

    def rows(self) -> list[int]:
        """Row widths of the Young diagram, widest first."""
        out: list[int] = []
        for r, s in reversed(self.pairs):
            out.extend([r] * s)
        return out

    def __str__(self) -> str:
        return format_tlink(self)


def from_rows(rows: list[int]) -> TLinkSpec:
    """Spec from a multiset of row widths; rows of width <= 1 carry no crossings and are dropped."""
    counts: dict[int, int] = {}
    for w in rows:
        if w >= 2:
            counts[w] = counts.get(w, 0) + 1
    return TLinkSpec(tuple(sorted(counts.items())))


def transpose_rows(rows: list[int]) -> list[int]:
    if not rows:
        return []
    return [sum(1 for w in rows if w >= j) for j in range(1, max(rows) + 1)]


def transpose_dual(spec: TLinkSpec) -> TLinkSpec:
    return from_rows(transpose_rows(spec.rows()))


@dataclasses.dataclass(frozen=True)
class TorusBraidSpec:
    """(sigma_{i} ... sigma_{j-1})^r, with i = 0 read as starting at sigma_1."""
    i: int
    j: int
    r: int

    def __post_init__(self):
        if self.i < 0 or self.j <= self.i or self.r < 1:
            raise TLinkError(f"invalid torus braid ({self.i}, {self.j}, {self.r})")

    @property
    def first(self) -> int:
        return max(self.i, 1)

    @property
    def width(self) -> int:
        """Strands touched: j for i = 0, otherwise j - i + 1."""
        return self.j - self.first + 1

    def is_aligned(self) -> bool:
        return self.first == 1


def torus_subbraid(t: TorusBraidSpec, ambient: int) -> BraidWord:
    if t.j > ambient:
        raise TLinkError(f"torus braid reaches strand {t.j} beyond {ambient}")
    return torus_block(ambient, t.width, t.r, start=t.first)


def standard_braid(spec: TLinkSpec) -> BraidWord:
    n = spec.strands
    letters: list[int] = []
    for r, s in spec.pairs:
        letters.extend(torus_block(n, r, s).letters)
    return BraidWord(n, tuple(letters))


def is_knot(spec: TLinkSpec) -> bool:
    return closure_components(standard_braid(spec)) == 1


def torus_knot(p: int, q: int) -> TLinkSpec:
    """T(p, q) as the spec ((p, q),)."""
    return TLinkSpec.of((p, q))


def torus_components(p: int, q: int) -> int:
    return gcd(p, q)


_PAIR = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def parse_tlink(text: str) -> TLinkSpec:
    """Parse "T((r1,s1),(r2,s2),...)"; errors carry the character position."""
    s = text.strip()
    if not s.startswith("T("):
        raise TLinkError("position 0: expected 'T('")
    if not s.endswith(")"):
        raise TLinkError(f"position {len(s)}: expected closing ')'")
    body = s[2:-1]
    pos = 0
    pairs = []
    while pos < len(body) and body[pos].isspace():
        pos += 1
    while pos < len(body):
        m = _PAIR.match(body, pos)
        if not m:
            raise TLinkError(f"position {pos + 2}: expected '(int,int)'")
        pairs.append((int(m.group(1)), int(m.group(2))))
        pos = m.end()
        rest = body[pos:].lstrip()
        pos = len(body) - len(rest)
        if rest.startswith(","):
            pos += 1
            while pos < len(body) and body[pos].isspace():
                pos += 1
            if pos == len(body):
                raise TLinkError(f"position {pos + 2}: dangling ','")
        elif rest:
            raise TLinkError(f"position {pos + 2}: expected ',' or ')'")
    try:
        return TLinkSpec(tuple(pairs))
    except TLinkError as exc:
        raise TLinkError(f"{exc} in {text.strip()!r}") from None


def format_tlink(spec: TLinkSpec) -> str:
    return "T(" + ",".join(f"({r},{s})" for r, s in spec.pairs) + ")"


def enumerate_specs(max_r: int, max_pairs: int, max_s: int):
    """Every valid nonempty spec with r_k <= max_r, k <= max_pairs and s_i <= max_s."""
    from itertools import combinations, product

    for k in range(1, max_pairs + 1):
        for rs in combinations(range(2, max_r + 1), k):
            for ss in product(range(1, max_s + 1), repeat=k):
                yield TLinkSpec(tuple(zip(rs, ss)))


__all__ = [
    "BraidError",
    "TLinkError",
    "TLinkSpec",
    "TorusBraidSpec",
    "enumerate_specs",
    "format_tlink",
    "from_rows",
    "is_knot",
    "parse_tlink",
    "standard_braid",
    "torus_subbraid",
    "transpose_dual",
    "transpose_rows",
]

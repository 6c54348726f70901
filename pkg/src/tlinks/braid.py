"""
Braid words on n strands and the basic moves on them.

A word is a tuple of nonzero ints: ``i`` stands for sigma_i and ``-i`` for its
inverse. Words act left to right (top to bottom in a diagram), and strand
positions are 1-based throughout.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Sequence


class BraidError(ValueError):
    pass


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    """Cancel adjacent pairs x, -x until none remain."""
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclasses.dataclass(frozen=True)
class Permutation:
    """``images[k]`` is the end position (0-based) of the strand starting at k."""
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise BraidError(f"not a bijection: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.images)

    def then(self, other: Permutation) -> Permutation:
        """Diagram-order composition: first self, then other."""
        return Permutation(tuple(other.images[k] for k in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for k, v in enumerate(self.images):
            inv[v] = k
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = []
            k = start
            while not seen[k]:
                seen[k] = True
                cyc.append(k)
                k = self.images[k]
            out.append(tuple(cyc))
        return out

    def fixed_points(self) -> int:
        return sum(1 for k, v in enumerate(self.images) if k == v)


@dataclasses.dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise BraidError(f"strand count must be >= 1, got {self.strands}")
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        for x in letters:
            if x == 0 or abs(x) >= self.strands:
                raise BraidError(f"generator {x} out of range for {self.strands} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return inverse(self) ** (-k)
        return BraidWord(self.strands, free_reduce(self.letters * k))

    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)

    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def with_strands(self, n: int) -> BraidWord:
        """Same letters viewed on n strands (n must fit every letter)."""
        return BraidWord(n, self.letters)

    def shifted(self, k: int, n: int | None = None) -> BraidWord:
        """Move every generator k positions to the right."""
        n = self.strands + k if n is None else n
        return BraidWord(n, tuple(x + k if x > 0 else x - k for x in self.letters))

    def __str__(self) -> str:
        return format_braid(self)


def word(n: int, *letters: int) -> BraidWord:
    return BraidWord(n, letters)


def compose(w1: BraidWord, w2: BraidWord) -> BraidWord:
    if w1.strands != w2.strands:
        raise BraidError(f"strand mismatch: {w1.strands} vs {w2.strands}")
    return BraidWord(w1.strands, free_reduce(w1.letters + w2.letters))


def concat(words: Sequence[BraidWord], strands: int | None = None) -> BraidWord:
    if strands is None:
        if not words:
            raise BraidError("need a strand count for an empty product")
        strands = words[0].strands
    out = BraidWord(strands)
    for w in words:
        out = compose(out, w)
    return out


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-x for x in reversed(w.letters)))


def permutation_of(w: BraidWord) -> Permutation:
    pos = list(range(w.strands))  # pos[strand] = current position
    at = list(range(w.strands))   # at[position] = strand
    for x in w.letters:
        i = abs(x) - 1
        a, b = at[i], at[i + 1]
        at[i], at[i + 1] = b, a
        pos[a], pos[b] = i + 1, i
    return Permutation(tuple(pos))


def torus_block(n: int, width: int, power: int, start: int = 1) -> BraidWord:
    """(sigma_start ... sigma_{start+width-2})^power embedded on n strands."""
    if width < 1 or start < 1 or start + width - 1 > n:
        raise BraidError(f"block of width {width} at {start} does not fit {n} strands")
    cycle = tuple(range(start, start + width - 1))
    return BraidWord(n, cycle * power)


def full_twist(n: int) -> BraidWord:
    if n < 2:
        raise BraidError("full twist needs at least 2 strands")
    return torus_block(n, n, n)


def half_twist(n: int) -> BraidWord:
    """Positive word for the Garside element: every pair of strands crosses once."""
    letters: list[int] = []
    for k in range(n - 1, 0, -1):
        letters.extend(range(1, k + 1))
    return BraidWord(n, tuple(letters))


def destabilize(w: BraidWord) -> BraidWord | None:
    """Remove the single positive sigma_{n-1}, dropping the last strand.

    Returns None when the top generator does not occur exactly once with a
    positive sign.
    """
    top = w.strands - 1
    hits = [k for k, x in enumerate(w.letters) if abs(x) == top]
    if top < 1 or len(hits) != 1 or w.letters[hits[0]] < 0:
        return None
    k = hits[0]
    return BraidWord(w.strands - 1, free_reduce(w.letters[:k] + w.letters[k + 1:]))


def destabilize_fully(w: BraidWord) -> BraidWord:
    while True:
        nxt = destabilize(w)
        if nxt is None:
            return w
        w = nxt


def stabilize(w: BraidWord, sign: int = 1) -> BraidWord:
    return BraidWord(w.strands + 1, w.letters + (sign * w.strands,))


def conjugate(w: BraidWord, g: BraidWord) -> BraidWord:
    """g^-1 . w . g"""
    if w.strands != g.strands:
        raise BraidError(f"strand mismatch: {w.strands} vs {g.strands}")
    return concat([inverse(g), w, g])


def cyclic_shift(w: BraidWord, k: int = 1) -> BraidWord:
    """Move the first k letters to the end (a conjugation)."""
    if not w.letters:
        return w
    k %= len(w.letters)
    return BraidWord(w.strands, free_reduce(w.letters[k:] + w.letters[:k]))


def format_braid(w: BraidWord) -> str:
    return f"n={w.strands}\n" + " ".join(str(x) for x in w.letters)


def parse_braid(text: str) -> BraidWord:
    lines = text.split("\n")
    if len(lines) > 2 and any(line.strip() for line in lines[2:]):
        raise BraidError("braid text has more than two lines")
    head = lines[0].strip()
    if not head.startswith("n="):
        raise BraidError(f"expected 'n=<strands>' on the first line, got {head!r}")
    try:
        n = int(head[2:])
        body = lines[1].split() if len(lines) > 1 else []
        letters = tuple(int(tok) for tok in body)
    except ValueError as exc:
        raise BraidError(f"malformed braid text: {exc}") from None
    return BraidWord(n, letters)

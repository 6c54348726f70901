"""
Left normal form in the Artin braid group with the classical Garside structure.

Simple elements are permutation braids, stored as ``Permutation`` values.
A braid is Delta^inf . A_1 ... A_k with every A_j a proper, nontrivial simple
element and every pair (A_j, A_{j+1}) left-weighted: whatever can start A_{j+1}
already finishes A_j.
"""

from __future__ import annotations

import dataclasses

from .braid import BraidWord, Permutation, full_twist, half_twist


def _swap(n: int, i: int) -> Permutation:
    """Permutation of sigma_{i+1} (i is 0-based)."""
    images = list(range(n))
    images[i], images[i + 1] = i + 1, i
    return Permutation(tuple(images))


def delta_perm(n: int) -> Permutation:
    return Permutation(tuple(range(n - 1, -1, -1)))


def starting_set(p: Permutation) -> frozenset[int]:
    """0-based i such that sigma_{i+1} is a left divisor of p."""
    return frozenset(i for i in range(p.n - 1) if p.images[i] > p.images[i + 1])


def finishing_set(p: Permutation) -> frozenset[int]:
    """0-based i such that sigma_{i+1} is a right divisor of p."""
    inv = p.inverse().images
    return frozenset(i for i in range(p.n - 1) if inv[i] > inv[i + 1])


def flip(p: Permutation) -> Permutation:
    """Conjugation by Delta: sigma_i -> sigma_{n-i}."""
    n = p.n
    return Permutation(tuple(n - 1 - p.images[n - 1 - k] for k in range(n)))


def simple_to_letters(p: Permutation) -> tuple[int, ...]:
    """A positive word for the permutation braid of p."""
    images = list(p.images)
    out = []
    while True:
        for i in range(len(images) - 1):
            if images[i] > images[i + 1]:
                out.append(i + 1)
                images[i], images[i + 1] = images[i + 1], images[i]
                break
        else:
            return tuple(out)


def _left_weight(a: Permutation, b: Permutation) -> tuple[Permutation, Permutation]:
    """Slide letters from the front of b onto the back of a until the pair is left-weighted."""
    n = a.n
    while True:
        fin = finishing_set(a)
        for i in starting_set(b):
            if i not in fin:
                s = _swap(n, i)
                a = a.then(s)
                b = s.then(b)
                break
        else:
            return a, b


@dataclasses.dataclass(frozen=True)
class GarsideNormalForm:
    strands: int
    inf: int
    factors: tuple[Permutation, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    def key(self) -> tuple:
        return (self.strands, self.inf, tuple(f.images for f in self.factors))

    def factor_letters(self) -> tuple[int, ...]:
        out: list[int] = []
        for f in self.factors:
            out.extend(simple_to_letters(f))
        return tuple(out)

    def to_word(self) -> BraidWord:
        """Reassemble Delta^inf . A_1 ... A_k as an Artin word."""
        delta = half_twist(self.strands).letters
        if self.inf >= 0:
            head = delta * self.inf
        else:
            head = tuple(-x for x in reversed(delta)) * (-self.inf)
        return BraidWord(self.strands, head + self.factor_letters())


def _normalize(strands: int, inf: int, factors: list[Permutation]) -> GarsideNormalForm:
    ident = Permutation.identity(strands)
    delta = delta_perm(strands)
    while factors and factors[0] == delta:
        factors.pop(0)
        inf += 1
    while factors and factors[-1] == ident:
        factors.pop()
    return GarsideNormalForm(strands, inf, tuple(factors))


def _append_simple(factors: list[Permutation], x: Permutation) -> None:
    factors.append(x)
    for j in range(len(factors) - 1, 0, -1):
        a, b = _left_weight(factors[j - 1], factors[j])
        if a == factors[j - 1]:
            break
        factors[j - 1], factors[j] = a, b


def garside_normal_form(w: BraidWord) -> GarsideNormalForm:
    n = w.strands
    if n == 1:
        return GarsideNormalForm(1, 0, ())
    delta = delta_perm(n)
    ident = Permutation.identity(n)
    inf = 0
    factors: list[Permutation] = []
    for x in w.letters:
        i = abs(x) - 1
        s = _swap(n, i)
        if x > 0:
            _append_simple(factors, s)
        else:
            # sigma^-1 = Delta^-1 . (Delta sigma^-1); pull Delta^-1 to the front
            inf -= 1
            factors = [flip(f) for f in factors]
            _append_simple(factors, delta.then(s))
        while factors and factors[0] == delta:
            factors.pop(0)
            inf += 1
        while factors and factors[-1] == ident:
            factors.pop()
    return _normalize(n, inf, factors)


def is_left_weighted(nf: GarsideNormalForm) -> bool:
    ident = Permutation.identity(nf.strands)
    delta = delta_perm(nf.strands)
    for f in nf.factors:
        if f in (ident, delta):
            return False
    return all(
        starting_set(b) <= finishing_set(a)
        for a, b in zip(nf.factors, nf.factors[1:])
    )


def contains_full_twist(w: BraidWord) -> bool:
    """True when Delta^2 left-divides w; trivially true on one strand."""
    if w.strands == 1:
        return True
    return garside_normal_form(w).inf >= 2


def extract_full_twist(w: BraidWord) -> tuple[BraidWord, BraidWord]:
    """Split a braid containing Delta^2 as (full twist word, positive remainder)."""
    nf = garside_normal_form(w)
    if w.strands == 1:
        return BraidWord(1), BraidWord(1)
    if nf.inf < 2:
        raise ValueError(f"no full twist: inf = {nf.inf}")
    rest = GarsideNormalForm(nf.strands, nf.inf - 2, nf.factors).to_word()
    return full_twist(w.strands), rest

"""
Link invariants of braid closures.

The Alexander polynomial comes from the reduced Burau representation,
det(I - B(w)) = (1 + t + ... + t^(n-1)) * Delta(t), evaluated exactly. The
Kauffman bracket is a second, independent oracle for small diagrams.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction

from .braid import BraidWord, permutation_of
from .laurent import Laurent, determinant

T = Laurent.monomial(1)
ONE = Laurent.const(1)
ZERO = Laurent()

DEFAULT_CROSSING_CAP = 16


class InvariantError(ValueError):
    pass


def closure_components(w: BraidWord) -> int:
    return len(permutation_of(w).cycles())


def self_linking(w: BraidWord) -> int:
    return w.exponent_sum() - w.strands


def bennequin_genus(w: BraidWord) -> int:
    """Seifert genus of the closure of a positive braid whose closure is a knot."""
    if not w.is_positive():
        raise InvariantError("genus formula needs a positive word")
    if closure_components(w) != 1:
        raise InvariantError("genus formula needs a knot closure")
    g2 = len(w) - w.strands + 1
    assert g2 % 2 == 0, "a positive knot braid has c - n + 1 even"
    return g2 // 2


def burau_generator(n: int, letter: int) -> list[list[Laurent]]:
    """Reduced Burau matrix of sigma_i^(+-1) on n strands, size (n-1) x (n-1)."""
    i = abs(letter)
    m = [[ONE if r == c else ZERO for c in range(n - 1)] for r in range(n - 1)]
    k = i - 1
    if letter > 0:
        m[k][k] = -T
        if k > 0:
            m[k][k - 1] = T
        if k < n - 2:
            m[k][k + 1] = ONE
    else:
        tinv = Laurent.monomial(-1)
        m[k][k] = -tinv
        if k > 0:
            m[k][k - 1] = ONE
        if k < n - 2:
            m[k][k + 1] = tinv
    return m


def _matmul(a, b):
    n = len(a)
    out = []
    for r in range(n):
        row = []
        for c in range(n):
            acc = ZERO
            for k in range(n):
                if a[r][k].is_zero() or b[k][c].is_zero():
                    continue
                acc = acc + a[r][k] * b[k][c]
            row.append(acc)
        out.append(row)
    return out


def _apply_generator(m, n: int, letter: int):
    """Right-multiply m by the Burau matrix of a generator, touching only affected columns."""
    g = burau_generator(n, letter)
    k = abs(letter) - 1
    cols = [c for c in (k - 1, k, k + 1) if 0 <= c < n - 1]
    out = [row[:] for row in m]
    for r in range(n - 1):
        for c in cols:
            acc = ZERO
            for j in cols:
                if not g[j][c].is_zero() and not m[r][j].is_zero():
                    acc = acc + m[r][j] * g[j][c]
            out[r][c] = acc
    return out


def burau_matrix(w: BraidWord) -> list[list[Laurent]]:
    n = w.strands
    m = [[ONE if r == c else ZERO for c in range(n - 1)] for r in range(n - 1)]
    for x in w.letters:
        m = _apply_generator(m, n, x)
    return m


def alexander_polynomial(w: BraidWord) -> Laurent:
    """Canonical Alexander polynomial of the closure (zero for some split links)."""
    n = w.strands
    m = burau_matrix(w)
    id_minus = [
        [(ONE if r == c else ZERO) - m[r][c] for c in range(n - 1)]
        for r in range(n - 1)
    ]
    det = determinant(id_minus)
    cyclo = Laurent.from_list([1] * n)
    try:
        return (det // cyclo).canonical()
    except ArithmeticError as exc:
        raise InvariantError(f"Burau determinant not divisible by [n]_t: {exc}") from None


def kauffman_bracket(w: BraidWord, cap: int = DEFAULT_CROSSING_CAP) -> Laurent:
    """Kauffman bracket <closure(w)> in A, with <unknot> = 1.

    Crossings are resolved top to bottom while tracking only the planar
    matching of the 2n boundary points (top row 0..n-1, current row n..2n-1);
    states with equal matchings are merged, which is the memoization.
    """
    if len(w) > cap:
        raise InvariantError(f"{len(w)} crossings exceeds the bracket cap of {cap}")
    n = w.strands
    a = Laurent.monomial(1)
    a_inv = Laurent.monomial(-1)
    loop = -Laurent.monomial(2) - Laurent.monomial(-2)

    start = tuple(list(range(n, 2 * n)) + list(range(n)))
    states: dict[tuple[int, ...], Laurent] = {start: ONE}
    for x in w.letters:
        i = abs(x) - 1
        p, q = n + i, n + i + 1
        # positive crossing: A-smoothing keeps strands vertical
        w_vert, w_horiz = (a, a_inv) if x > 0 else (a_inv, a)
        nxt: dict[tuple[int, ...], Laurent] = {}
        for match, poly in states.items():
            key = match
            nxt[key] = nxt.get(key, ZERO) + poly * w_vert
            m = list(match)
            weight = poly * w_horiz
            if m[p] == q:
                weight = weight * loop
            else:
                u, v = m[p], m[q]
                m[u], m[v] = v, u
            m[p], m[q] = q, p
            key = tuple(m)
            nxt[key] = nxt.get(key, ZERO) + weight
        states = {k: v for k, v in nxt.items() if not v.is_zero()}

    total = ZERO
    for match, poly in states.items():
        total = total + poly * loop ** (_closed_loops(match, n) - 1)
    return total


def _closed_loops(match: tuple[int, ...], n: int) -> int:
    """Loops formed by gluing bottom point n+k to top point k."""
    seen = [False] * (2 * n)
    loops = 0
    for s in range(2 * n):
        if seen[s]:
            continue
        loops += 1
        k = s
        while not seen[k]:
            seen[k] = True
            j = match[k]
            seen[j] = True
            k = j + n if j < n else j - n
    return loops


def jones_normalized(w: BraidWord, cap: int = DEFAULT_CROSSING_CAP) -> Laurent:
    """(-A^3)^(-writhe) <closure>, an ambient isotopy invariant."""
    factor = (-Laurent.monomial(3)) ** (-w.exponent_sum())
    return factor * kauffman_bracket(w, cap)


kauffman_bracket_oracle = jones_normalized


@dataclasses.dataclass(frozen=True)
class InvariantBundle:
    components: int
    exponent_sum: int
    self_linking: int
    genus: int | None
    alexander: Laurent

    def link_part(self) -> tuple:
        """The conjugation- and Markov-invariant fields."""
        return (self.components, self.self_linking, self.alexander)

    def to_dict(self) -> dict:
        return {
            "components": self.components,
            "exponent_sum": self.exponent_sum,
            "self_linking": self.self_linking,
            "genus": self.genus,
            "alexander": str(self.alexander),
        }


def invariant_bundle(w: BraidWord) -> InvariantBundle:
    comps = closure_components(w)
    genus = bennequin_genus(w) if comps == 1 and w.is_positive() else None
    return InvariantBundle(
        components=comps,
        exponent_sum=w.exponent_sum(),
        self_linking=self_linking(w),
        genus=genus,
        alexander=alexander_polynomial(w),
    )


def genus_from_alexander(w: BraidWord) -> Fraction:
    """Half the degree span, a lower bound for the genus."""
    return Fraction(alexander_polynomial(w).span(), 2)

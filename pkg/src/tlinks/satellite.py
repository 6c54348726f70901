"""
Braided satellites: cable the companion braid b times, drop the pattern braid
into the first block of b strands, then undo the blackboard framing.

The b-parallel of a braid closure inherits the blackboard framing, which
equals the companion's exponent sum e. Seifert (zero) framing therefore needs
e negative full twists on the b strands, i.e. (sigma_1..sigma_{b-1})^(-b*e).
"""

from __future__ import annotations

import dataclasses
import enum
import re

from .braid import BraidError, BraidWord, compose, free_reduce, inverse, parse_braid, permutation_of, torus_block
from .invariants import closure_components
from .tlink import TLinkSpec, is_knot, standard_braid


class SatelliteError(ValueError):
    pass


class Framing(str, enum.Enum):
    SEIFERT_ZERO = "seifert_zero"
    BLACKBOARD = "blackboard"


@dataclasses.dataclass(frozen=True)
class SatelliteSpec:
    companion: BraidWord
    pattern: BraidWord
    b: int
    framing: Framing = Framing.SEIFERT_ZERO

    def __post_init__(self):
        object.__setattr__(self, "framing", Framing(self.framing))
        if self.b < 2:
            raise SatelliteError(f"cable width b = {self.b} must be >= 2")
        if self.pattern.strands != self.b:
            raise SatelliteError(f"pattern has {self.pattern.strands} strands, expected b = {self.b}")
        if closure_components(self.companion) != 1:
            raise SatelliteError("companion closure is not a knot")
        if len(permutation_of(self.pattern).cycles()) != 1:
            raise SatelliteError("pattern permutation is not a single b-cycle")


def _block_crossing(i: int, b: int) -> tuple[int, ...]:
    """Positive braid passing block i (strands b(i-1)+1..bi) across block i+1."""
    letters: list[int] = []
    corner = b * i
    for j in range(b):
        letters.extend(range(corner - j, corner - j + b))
    return tuple(letters)


def cable(w: BraidWord, b: int) -> BraidWord:
    if b < 1:
        raise SatelliteError("cable width must be positive")
    if b == 1:
        return w
    n = w.strands * b
    letters: list[int] = []
    for x in w.letters:
        block = _block_crossing(abs(x), b)
        if x > 0:
            letters.extend(block)
        else:
            letters.extend(-y for y in reversed(block))
    return BraidWord(n, free_reduce(letters))


def framing_correction(b: int, e: int, framing: Framing | str = Framing.SEIFERT_ZERO) -> BraidWord:
    if b < 2:
        raise SatelliteError("framing correction needs b >= 2")
    if Framing(framing) is Framing.BLACKBOARD or e == 0:
        return BraidWord(b)
    twists = torus_block(b, b, b * abs(e))
    return inverse(twists) if e > 0 else twists


def _assemble(companion: BraidWord, pattern: BraidWord, b: int, framing: Framing) -> BraidWord:
    n = companion.strands * b
    out = cable(companion, b)
    out = compose(out, pattern.with_strands(n))
    corr = framing_correction(b, companion.exponent_sum(), framing)
    return compose(out, corr.with_strands(n))


def satellite_braid(spec: SatelliteSpec) -> BraidWord:
    return _assemble(spec.companion, spec.pattern, spec.b, spec.framing)


def companion_torus(a: int) -> BraidWord:
    """Minimal positive braid (sigma_1..sigma_{a-1})^(a+1) of T(a, a+1)."""
    return torus_block(a, a, a + 1)


def family_pattern(lower: tuple[tuple[int, int], ...], a: int, b: int, k: int) -> TLinkSpec:
    return TLinkSpec(tuple(lower) + ((b, (a - 1) * (a + 1) * b + k),))


def predicted_crossings(lower: tuple[tuple[int, int], ...], a: int, b: int, k: int) -> int:
    return (a * b - b) * b * (a + 1) + k * (b - 1) + sum(d * (c - 1) for c, d in lower)


def family_braid(lower: tuple[tuple[int, int], ...], a: int, b: int, k: int,
                 framing: Framing | str = Framing.SEIFERT_ZERO) -> BraidWord:
    """Satellite braid for the family without requiring the pattern to be a knot."""
    pattern = standard_braid(family_pattern(lower, a, b, k))
    return _assemble(companion_torus(a), pattern, b, Framing(framing))


@dataclasses.dataclass(frozen=True)
class FamilyInstance:
    spec: SatelliteSpec
    pattern_spec: TLinkSpec
    predicted: int


def paper_family_instance(lower: tuple[tuple[int, int], ...], a: int, b: int, k: int) -> FamilyInstance:
    """Pattern T(lower..., (b, (a^2-1)b + k)) around the companion T(a, a+1)."""
    if a < 2 or b < 2 or k < 1:
        raise SatelliteError(f"need a, b >= 2 and k >= 1, got a={a}, b={b}, k={k}")
    try:
        pattern_spec = family_pattern(tuple(lower), a, b, k)
    except ValueError as exc:
        raise SatelliteError(f"invalid pattern: {exc}") from None
    if not is_knot(pattern_spec):
        raise SatelliteError(f"pattern {pattern_spec} is not a knot")
    spec = SatelliteSpec(companion_torus(a), standard_braid(pattern_spec), b)
    return FamilyInstance(spec, pattern_spec, predicted_crossings(tuple(lower), a, b, k))


def _flat(w: BraidWord) -> str:
    return f"[n={w.strands}|{' '.join(str(x) for x in w.letters)}]"


def format_satellite(spec: SatelliteSpec) -> str:
    return (
        f"sat(companion={_flat(spec.companion)}, pattern={_flat(spec.pattern)}, "
        f"b={spec.b}, framing={spec.framing.value})"
    )


_SAT = re.compile(
    r"^sat\(companion=\[(?P<c>[^\]]*)\], pattern=\[(?P<p>[^\]]*)\], "
    r"b=(?P<b>\d+), framing=(?P<f>\w+)\)$"
)


def parse_satellite(text: str) -> SatelliteSpec:
    m = _SAT.match(text.strip())
    if not m:
        raise SatelliteError(f"malformed satellite text: {text!r}")
    try:
        comp = parse_braid(m["c"].replace("|", "\n"))
        pat = parse_braid(m["p"].replace("|", "\n"))
        framing = Framing(m["f"])
    except (BraidError, ValueError) as exc:
        raise SatelliteError(str(exc)) from None
    return SatelliteSpec(comp, pat, int(m["b"]), framing)

"""
Counting obstruction for satellites of T(a, a+1).

A knot given by a positive braid with a full twist on p strands needs more
than p(p-1) + p - 2 crossings. A positive braid on the braid index has its
crossing count fixed by the genus. The satellites built here have braid index
ab and a positive ab-strand braid that is too short, so no positive braid with a
full twist represents them, and hence they are not T-knots.
"""

from __future__ import annotations

import dataclasses
import enum
import itertools
import json

from .braid import BraidWord, compose, format_braid, full_twist
from .invariants import alexander_polynomial, bennequin_genus, closure_components
from .satellite import (
    companion_torus,
    family_braid,
    family_pattern,
    predicted_crossings,
)
from .tlink import TLinkError, format_tlink, is_knot


class ObstructionError(ValueError):
    pass


class Verdict(str, enum.Enum):
    CERTIFIED = "certified_not_tknot"
    INCONCLUSIVE = "inconclusive"


ASSUMPTIONS = (
    {
        "claim": "the torus knot T(a, a+1) has braid index a",
        "source": "Franks-Williams, Corollary 2.4",
    },
    {
        "claim": "the satellite with braid-index-b pattern of winding b and braid-index-a companion has braid index ab",
        "source": "Williams, Theorem 1",
    },
    {
        "claim": "a positive braid with a positive full twist realizes the braid index",
        "source": "Franks-Williams, Corollary 2.4",
    },
    {
        "claim": "the cabled companion plus pattern braid is a positive braid on ab strands",
        "source": "construction (checked: positivity and strand count)",
    },
    {
        "claim": "every T-link has a positive braid with a positive full twist",
        "source": "tlinks.rewrite.fulltwist_presentation (checked exhaustively on small specs)",
    },
)


def crossings_lower_bound(p: int) -> int:
    if p < 2:
        raise ObstructionError("need p >= 2")
    return p * (p - 1) + p - 2


@dataclasses.dataclass(frozen=True)
class BruteForceReport:
    strands: int
    words_checked: int
    by_length: dict[int, int]
    min_components: int
    passed: bool
    tight_example: BraidWord

    def to_dict(self) -> dict:
        return {
            "strands": self.strands,
            "words_checked": self.words_checked,
            "by_length": self.by_length,
            "min_components": self.min_components,
            "passed": self.passed,
            "tight_example": format_braid(self.tight_example),
        }


def verify_lemma_crossings_bruteforce(p: int) -> BruteForceReport:
    """Every positive full_twist(p) . w with |w| <= p - 2 closes to a link of >= 2 components."""
    if not 2 <= p <= 6:
        raise ObstructionError("brute force is limited to 2 <= p <= 6")
    twist = full_twist(p)
    by_length: dict[int, int] = {}
    lowest = p
    for length in range(p - 1):
        count = 0
        for letters in itertools.product(range(1, p), repeat=length):
            comps = closure_components(compose(twist, BraidWord(p, letters)))
            lowest = min(lowest, comps)
            count += 1
        by_length[length] = count
    # one more crossing than the budget already reaches a knot
    tight = compose(twist, BraidWord(p, tuple(range(1, p))))
    assert closure_components(tight) == 1
    return BruteForceReport(
        strands=p,
        words_checked=sum(by_length.values()),
        by_length=by_length,
        min_components=lowest,
        passed=lowest >= 2,
        tight_example=tight,
    )


def equal_crossings_check(w1: BraidWord, w2: BraidWord) -> bool:
    if not (w1.is_positive() and w2.is_positive()):
        raise ObstructionError("both braids must be positive")
    if w1.strands != w2.strands:
        raise ObstructionError(f"strand counts differ: {w1.strands} vs {w2.strands}")
    if closure_components(w1) != 1 or closure_components(w2) != 1:
        raise ObstructionError("both closures must be knots")
    if alexander_polynomial(w1) != alexander_polynomial(w2):
        raise ObstructionError("Alexander polynomials differ, not the same knot")
    return len(w1) == len(w2)


@dataclasses.dataclass(frozen=True)
class NotTKnotCertificate:
    lower: tuple[tuple[int, int], ...]
    a: int
    b: int
    k: int
    pattern: str
    companion: BraidWord
    braid_index: int
    minimal_crossings: int
    constructed_crossings: int
    bound: int
    pattern_is_knot: bool
    verdict: Verdict
    evidence: dict

    @property
    def certified(self) -> bool:
        return self.verdict is Verdict.CERTIFIED

    def to_dict(self) -> dict:
        return {
            "params": {"lower": [list(p) for p in self.lower], "a": self.a, "b": self.b, "k": self.k},
            "pattern": self.pattern,
            "companion": format_braid(self.companion),
            "braid_index": self.braid_index,
            "minimal_crossings": self.minimal_crossings,
            "bound": self.bound,
            "verdict": self.verdict.value,
            "assumptions": list(ASSUMPTIONS),
            "invariants": self.evidence,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def not_tknot_certificate(lower, a: int, b: int, k: int) -> NotTKnotCertificate:
    """Check the family inequality for pattern T(lower..., (b, (a^2-1)b + k)) around T(a, a+1).

    A failed hypothesis (pattern not a knot, or the inequality failing) gives an
    inconclusive verdict; a disagreement between the crossing formula and the
    constructed braid is a bug and raises.
    """
    lower = tuple((int(c), int(d)) for c, d in lower)
    if a < 2 or b < 2 or k < 1 or any(c < 1 or d < 1 for c, d in lower):
        raise ObstructionError(f"need a, b >= 2, k >= 1 and positive lower pairs, got a={a}, b={b}, k={k}")
    try:
        pattern_spec = family_pattern(lower, a, b, k)
    except TLinkError as exc:
        raise ObstructionError(f"invalid pattern: {exc}") from None

    formula = predicted_crossings(lower, a, b, k)
    word = family_braid(lower, a, b, k)
    if len(word) != formula or not word.is_positive() or word.strands != a * b:
        raise AssertionError(
            f"constructed satellite has {len(word)} letters on {word.strands} strands, formula says {formula}"
        )
    ab = a * b
    bound = crossings_lower_bound(ab)
    knot = is_knot(pattern_spec)
    holds = formula <= bound
    verdict = Verdict.CERTIFIED if (knot and holds) else Verdict.INCONCLUSIVE

    evidence: dict = {
        "pattern_is_knot": knot,
        "inequality": {"lhs": formula, "rhs": bound, "holds": holds},
        "satellite_word_length": len(word),
        "satellite_strands": word.strands,
        "conclusions": {
            "no_positive_fulltwist_braid": verdict is Verdict.CERTIFIED,
            "not_tknot": verdict is Verdict.CERTIFIED,
        },
    }
    if knot:
        genus = bennequin_genus(word)
        evidence["satellite_components"] = closure_components(word)
        evidence["genus"] = genus
        evidence["chain"] = [
            f"braid index of the satellite is {ab}",
            f"a positive full-twist braid for it would have {ab} strands",
            f"same genus {genus} on {ab} strands forces {formula} crossings",
            f"{formula} <= {bound} = {ab}({ab}-1) + {ab}-2 contradicts the full-twist crossing bound"
            if holds else f"{formula} > {bound}: no contradiction",
        ]
    return NotTKnotCertificate(
        lower=lower,
        a=a,
        b=b,
        k=k,
        pattern=format_tlink(pattern_spec),
        companion=companion_torus(a),
        braid_index=ab,
        minimal_crossings=formula,
        constructed_crossings=len(word),
        bound=bound,
        pattern_is_knot=knot,
        verdict=verdict,
        evidence=evidence,
    )


def corollary_chain(a: int, b: int) -> dict:
    """Each inequality in the derivation for k = 1 and no lower pairs, evaluated exactly."""
    ab = a * b
    steps = {
        "b^2 > 1 + b": b * b > 1 + b,
        "-b^2 + b < -1": -b * b + b < -1,
        "-b^2 + b - 1 < -2": -b * b + b - 1 < -2,
        "(ab)^2 - b^2 a + b^2 a - b^2 + b - 1 < (ab)^2 - ab + ab - 2":
            ab * ab - b * b * a + b * b * a - b * b + b - 1 < ab * ab - ab + ab - 2,
        "(ab - b) b (a+1) + b - 1 < ab(ab-1) + (ab-2)":
            (ab - b) * b * (a + 1) + b - 1 < ab * (ab - 1) + (ab - 2),
    }
    return steps


def corollary_family(a: int, b: int) -> NotTKnotCertificate:
    """Pattern T(b, (a^2-1)b + 1) around T(a, a+1)."""
    if a < 2 or b < 2:
        raise ObstructionError("need a, b >= 2")
    cert = not_tknot_certificate((), a, b, 1)
    chain = corollary_chain(a, b)
    cert.evidence["corollary_chain"] = chain
    if not all(chain.values()) or not cert.certified:
        raise AssertionError(f"corollary chain failed at a={a}, b={b}: {chain}")
    return cert


__all__ = [
    "ASSUMPTIONS",
    "BruteForceReport",
    "NotTKnotCertificate",
    "ObstructionError",
    "Verdict",
    "corollary_chain",
    "corollary_family",
    "crossings_lower_bound",
    "equal_crossings_check",
    "not_tknot_certificate",
    "verify_lemma_crossings_bruteforce",
]

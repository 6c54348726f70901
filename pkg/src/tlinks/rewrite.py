"""
Rewriting T-link standard braids into positive braids that contain a full twist.

The working object is a ``StructuredBraid`` on n strands::

    prefix blocks . lower T-link pairs . (sigma_1 ... sigma_{n-1})^m

where every prefix block is a right-aligned, descending torus block
(sigma_{n-1} ... sigma_{n-w+1})^g on the last w strands. A standard braid has
no prefix. One isopote move drops the strand count from n to a smaller r
(0 < m <= r): the top block becomes (sigma_1 ... sigma_{r-1})^m, a new prefix
block of width m and power n - r appears, and older prefix blocks stay
right-aligned on the shrunken braid.
"""

from __future__ import annotations

import dataclasses
import json

from .braid import BraidError, BraidWord, compose, format_braid, full_twist, torus_block
from .garside import contains_full_twist, extract_full_twist, garside_normal_form
from .invariants import InvariantBundle, invariant_bundle
from .tlink import TLinkSpec, TorusBraidSpec, format_tlink, standard_braid


class RewriteError(ValueError):
    pass


class CertificateError(AssertionError):
    pass


def descending_block(n: int, width: int, power: int) -> BraidWord:
    """(sigma_{n-1} ... sigma_{n-width+1})^power on n strands."""
    if not 1 <= width <= n:
        raise BraidError(f"block of width {width} does not fit {n} strands")
    return BraidWord(n, tuple(range(n - 1, n - width, -1)) * power)


def isopote_step(b: BraidWord, p: int, q: int) -> BraidWord:
    """Closure-preserving rewrite of b . (sigma_1 ... sigma_{p-1})^q down to b's r strands."""
    r = b.strands
    if not 0 < q <= r < p:
        raise RewriteError(f"isopote needs 0 < q <= r < p, got q={q}, r={r}, p={p}")
    head = descending_block(r, q, p - r) if q > 1 else BraidWord(r)
    return compose(compose(head, b), torus_block(r, r, q))


def isopote_input(b: BraidWord, p: int, q: int) -> BraidWord:
    """The braid b . (sigma_1 ... sigma_{p-1})^q that isopote_step rewrites."""
    return compose(b.with_strands(p), torus_block(p, p, q))


@dataclasses.dataclass(frozen=True)
class TwistBlock:
    width: int
    power: int


@dataclasses.dataclass(frozen=True)
class StructuredBraid:
    strands: int
    top_power: int
    prefix: tuple[TwistBlock, ...] = ()
    lower: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_spec(cls, spec: TLinkSpec) -> StructuredBraid:
        p, q = spec.top
        return cls(p, q, (), spec.pairs[:-1])

    def next_width(self) -> int:
        return self.lower[-1][0] if self.lower else 0

    def has_full_twist(self) -> bool:
        return self.top_power >= self.strands

    def word(self) -> BraidWord:
        n = self.strands
        letters: list[int] = []
        for blk in self.prefix:
            letters.extend(descending_block(n, blk.width, blk.power).letters)
        for r, s in self.lower:
            letters.extend(torus_block(n, r, s).letters)
        letters.extend(torus_block(n, n, self.top_power).letters)
        return BraidWord(n, tuple(letters))

    def isopote(self, r: int) -> StructuredBraid:
        """Shrink to r strands, absorbing the next lower pair when its width is exactly r."""
        m, n = self.top_power, self.strands
        if not 0 < m <= r < n:
            raise RewriteError(f"isopote needs 0 < {m} <= {r} < {n}")
        widest = max((blk.width for blk in self.prefix), default=0)
        if widest > r:
            raise RewriteError(f"prefix block of width {widest} cannot shrink onto {r} strands")
        lower = list(self.lower)
        power = m
        if lower and lower[-1][0] == r:
            power += lower.pop()[1]
        if lower and lower[-1][0] > r:
            raise RewriteError(f"lower pair of width {lower[-1][0]} does not fit {r} strands")
        prefix = self.prefix + ((TwistBlock(m, n - r),) if m > 1 else ())
        return StructuredBraid(r, power, prefix, tuple(lower))

    def describe(self) -> dict:
        return {
            "strands": self.strands,
            "top_power": self.top_power,
            "prefix": [[b.width, b.power] for b in self.prefix],
            "lower": [list(p) for p in self.lower],
        }


@dataclasses.dataclass(frozen=True)
class Step:
    name: str
    params: dict
    word: BraidWord

    def to_dict(self) -> dict:
        return {"step": self.name, "params": self.params, "word": format_braid(self.word)}


def absorb_trailing_q1(spec: TLinkSpec) -> TLinkSpec:
    """T(..., (r_n, s_n), (p, 1)) is T(..., (r_n, s_n + 1)); T((p, 1)) is the unknot."""
    if not spec.pairs or spec.top[1] != 1:
        raise RewriteError(f"{format_tlink(spec)} does not end in a pair with s = 1")
    rest = list(spec.pairs[:-1])
    if not rest:
        return TLinkSpec.unknot()
    r, s = rest[-1]
    rest[-1] = (r, s + 1)
    return TLinkSpec(tuple(rest))


def _check_prop10(sb: StructuredBraid) -> None:
    p, q = sb.strands, sb.top_power
    if not p > q > 1:
        raise RewriteError(f"proposition needs p > q > 1, got p={p}, q={q}")
    for blk in sb.prefix:
        if blk.width > q:
            raise RewriteError(f"shifted block of width {blk.width} exceeds q={q}")
    for r, _ in sb.lower:
        if r > q:
            raise RewriteError(f"lower torus braid of width {r} exceeds q={q}")


def proposition10_transform(sb: StructuredBraid | TLinkSpec, steps: list[Step] | None = None) -> StructuredBraid:
    """Move to q strands, where the top block (sigma_1..sigma_{q-1})^{>=q} holds a full twist.

    Accepts lower blocks that are left-aligned of width <= q, and right-aligned
    descending blocks of width <= q as produced by earlier isopote moves.
    """
    if isinstance(sb, TLinkSpec):
        sb = StructuredBraid.from_spec(sb)
    _check_prop10(sb)
    out = sb.isopote(sb.top_power)
    if steps is not None:
        steps.append(Step("duality", {"p": sb.strands, "q": sb.top_power, "to_strands": out.strands}, out.word()))
    assert out.has_full_twist()
    return out


def structured_from_subbraids(
    subbraids: list[TorusBraidSpec], p: int, q: int
) -> StructuredBraid:
    """Package torus sub-braids below a top B_{0,p}^q for proposition10_transform.

    Only left-aligned sub-braids (i = 0) forming a T-link below the top are supported.
    """
    pairs: list[tuple[int, int]] = []
    for t in subbraids:
        if not t.is_aligned():
            raise RewriteError(
                f"sub-braid B_({t.i},{t.j})^{t.r} is shifted; only left-aligned sub-braids are supported"
            )
        if t.j > p:
            raise RewriteError(f"sub-braid reaches strand {t.j} beyond {p}")
        if pairs and pairs[-1][0] == t.j:
            pairs[-1] = (t.j, pairs[-1][1] + t.r)
        else:
            pairs.append((t.j, t.r))
    if any(a[0] >= b[0] for a, b in zip(pairs, pairs[1:])):
        raise RewriteError("sub-braid widths must increase (T-link shape)")
    if pairs and pairs[-1][0] == 1:
        raise RewriteError("sub-braid of width 1")
    return StructuredBraid(p, q, (), tuple(pairs))


def secondcase_pipeline(spec: TLinkSpec) -> tuple[BraidWord, list[Step]]:
    """Iterated isopote moves B_1, B_2, ... until a full twist appears on top.

    If the accumulated top power m falls short of the strand count while the
    next lower width is at most m, the proposition10 move finishes the job.
    """
    p, q = spec.top
    r_n = spec.pairs[-2][0] if len(spec.pairs) > 1 else 0
    if not (p > q > 1 and r_n >= q):
        raise RewriteError(f"{format_tlink(spec)}: needs top (p, q) with p > q > 1 and r_n >= q")
    steps: list[Step] = []
    sb = StructuredBraid.from_spec(spec)
    iterations = 0
    while not sb.has_full_twist():
        r = sb.next_width()
        if r <= sb.top_power:
            sb = proposition10_transform(sb, steps)
            break
        if sb.prefix:
            steps.append(Step("cyclic-push", {"blocks": [[b.width, b.power] for b in sb.prefix]}, sb.word()))
        assert sb.top_power < r, "the next B_j block would not fit"
        before = sb
        sb = sb.isopote(r)
        iterations += 1
        steps.append(
            Step("isopote", {"p": before.strands, "q": before.top_power, "r": r, "iteration": iterations}, sb.word())
        )
    assert iterations <= len(spec.pairs)
    return sb.word(), steps


@dataclasses.dataclass(frozen=True)
class RewriteCertificate:
    spec: TLinkSpec
    input_word: BraidWord
    output_word: BraidWord
    steps: tuple[Step, ...]
    input_invariants: InvariantBundle
    output_invariants: InvariantBundle
    inf: int
    has_full_twist: bool

    @property
    def syntactic_prefix(self) -> bool:
        n = self.output_word.strands
        if n == 1:
            return True
        ft = full_twist(n).letters
        return self.output_word.letters[: len(ft)] == ft

    def check(self) -> None:
        if self.input_invariants.link_part() != self.output_invariants.link_part():
            raise CertificateError(f"invariants differ for {format_tlink(self.spec)}")
        if not self.output_word.is_positive():
            raise CertificateError("output word is not positive")
        if not self.has_full_twist:
            raise CertificateError(f"output has inf {self.inf} < 2")
        if self.output_word.strands > 1 and self.inf < 2:
            raise CertificateError(f"output has inf {self.inf} < 2")

    def is_valid(self) -> bool:
        try:
            self.check()
        except CertificateError:
            return False
        return True

    def to_dict(self) -> dict:
        return {
            "kind": "tlink_fulltwist",
            "spec": format_tlink(self.spec),
            "input_word": format_braid(self.input_word),
            "output_word": format_braid(self.output_word),
            "steps": [s.to_dict() for s in self.steps],
            "invariants": {
                "input": self.input_invariants.to_dict(),
                "output": self.output_invariants.to_dict(),
            },
            "fulltwist_witness": {
                "contains_full_twist": self.has_full_twist,
                "inf": self.inf,
                "strands": self.output_word.strands,
                "syntactic_prefix": self.syntactic_prefix,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _garside_extraction(w: BraidWord, steps: list[Step]) -> BraidWord:
    if w.strands == 1:
        return w
    twist, rest = extract_full_twist(w)
    out = compose(twist, rest)
    steps.append(Step("garside-extraction", {"inf": garside_normal_form(w).inf}, out))
    return out


def fulltwist_presentation(spec: TLinkSpec) -> RewriteCertificate:
    """Positive braid with a full twist for the T-link, with invariant evidence.

    Cases are tried in this order: top s = 1, q >= p, p > q >= r_n, r_n > q.
    """
    steps: list[Step] = []
    cur = spec
    while cur.pairs and cur.top[1] == 1:
        cur = absorb_trailing_q1(cur)
        steps.append(Step("absorb-q1", {"spec": format_tlink(cur)}, standard_braid(cur)))

    if not cur.pairs:
        word = BraidWord(1)
    else:
        p, q = cur.top
        r_n = cur.pairs[-2][0] if len(cur.pairs) > 1 else 0
        if q >= p:
            word = standard_braid(cur)
            steps.append(Step("standard", {"p": p, "q": q}, word))
        elif q >= r_n:
            word = proposition10_transform(StructuredBraid.from_spec(cur), steps).word()
        else:
            word, more = secondcase_pipeline(cur)
            steps.extend(more)
        word = _garside_extraction(word, steps)

    source = standard_braid(spec)
    nf = garside_normal_form(word)
    cert = RewriteCertificate(
        spec=spec,
        input_word=source,
        output_word=word,
        steps=tuple(steps),
        input_invariants=invariant_bundle(source),
        output_invariants=invariant_bundle(word),
        inf=nf.inf,
        has_full_twist=contains_full_twist(word),
    )
    cert.check()
    return cert

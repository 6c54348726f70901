import json

import pytest
from hypothesis import given, settings, strategies as st

from tlinks.braid import BraidWord, word
from tlinks.garside import garside_normal_form
from tlinks.invariants import invariant_bundle, self_linking
from tlinks.rewrite import (
    RewriteError,
    StructuredBraid,
    TwistBlock,
    absorb_trailing_q1,
    fulltwist_presentation,
    isopote_input,
    isopote_step,
    proposition10_transform,
    secondcase_pipeline,
    structured_from_subbraids,
)
from tlinks.tlink import TLinkSpec, TorusBraidSpec, standard_braid


def same_link(u: BraidWord, v: BraidWord) -> bool:
    return invariant_bundle(u).link_part() == invariant_bundle(v).link_part()


def test_isopote_examples():
    assert isopote_step(BraidWord(2), 3, 2) == word(2, 1, 1, 1)
    assert isopote_step(word(2, 1), 3, 1) == word(2, 1, 1)
    out = isopote_step(word(2, 1), 3, 2)
    assert out == BraidWord(2, (1,) * 4)
    assert self_linking(isopote_input(word(2, 1), 3, 2)) == self_linking(out) == 2


def test_isopote_preconditions():
    with pytest.raises(RewriteError):
        isopote_step(BraidWord(3), 3, 1)
    with pytest.raises(RewriteError):
        isopote_step(BraidWord(2), 4, 3)
    with pytest.raises(RewriteError):
        isopote_step(BraidWord(2), 4, 0)


@st.composite
def isopote_cases(draw):
    p = draw(st.integers(3, 6))
    r = draw(st.integers(2, p - 1))
    q = draw(st.integers(1, r))
    letters = draw(st.lists(st.integers(1, r - 1).flatmap(lambda g: st.sampled_from([g, -g])), max_size=6))
    return BraidWord(r, tuple(letters)), p, q


@given(isopote_cases())
@settings(max_examples=60, deadline=None)
def test_isopote_preserves_link(case):
    b, p, q = case
    assert same_link(isopote_input(b, p, q), isopote_step(b, p, q))


def test_absorb_q1():
    assert absorb_trailing_q1(TLinkSpec.of((2, 2), (5, 1))) == TLinkSpec.of((2, 3))
    assert absorb_trailing_q1(TLinkSpec.of((3, 1))) == TLinkSpec.unknot()
    assert absorb_trailing_q1(TLinkSpec.of((2, 1), (3, 1))) == TLinkSpec.of((2, 2))
    with pytest.raises(RewriteError):
        absorb_trailing_q1(TLinkSpec.of((2, 3)))


def test_structured_word_matches_standard():
    spec = TLinkSpec.of((2, 1), (4, 3), (5, 2))
    assert StructuredBraid.from_spec(spec).word() == standard_braid(spec)


def test_structured_isopote_keeps_link():
    sb = StructuredBraid.from_spec(TLinkSpec.of((2, 1), (4, 3), (6, 2)))
    nxt = sb.isopote(4)
    assert nxt.strands == 4 and nxt.top_power == 5
    assert nxt.prefix == (TwistBlock(2, 2),)
    assert same_link(sb.word(), nxt.word())
    with pytest.raises(RewriteError):
        nxt.isopote(6)


def test_secondcase_examples():
    w, steps = secondcase_pipeline(TLinkSpec.of((2, 1), (3, 2)))
    assert w == BraidWord(2, (1,) * 4)
    assert invariant_bundle(w).self_linking == 2 and invariant_bundle(w).components == 2
    w, _ = secondcase_pipeline(TLinkSpec.of((2, 2), (3, 2)))
    assert w == BraidWord(2, (1,) * 5)
    w, _ = secondcase_pipeline(TLinkSpec.of((2, 1), (4, 2)))
    assert w == BraidWord(2, (1,) * 5)
    assert steps and all(s.name in {"isopote", "cyclic-push", "duality"} for s in steps)


def test_secondcase_precondition():
    with pytest.raises(RewriteError):
        secondcase_pipeline(TLinkSpec.of((2, 1), (5, 3)))


def test_prop10_examples():
    sb = structured_from_subbraids([TorusBraidSpec(0, 2, 2)], 3, 2)
    out = proposition10_transform(sb)
    assert out.strands == 2 and garside_normal_form(out.word()).inf >= 2
    assert same_link(sb.word(), out.word())

    top_only = TLinkSpec.of((4, 3))
    out = proposition10_transform(top_only)
    assert out.strands == 3
    assert garside_normal_form(out.word()).inf >= 2
    assert same_link(standard_braid(top_only), out.word())


def test_prop10_rejects():
    with pytest.raises(RewriteError):
        structured_from_subbraids([TorusBraidSpec(2, 3, 1)], 4, 2)
    with pytest.raises(RewriteError):
        proposition10_transform(TLinkSpec.of((3, 1), (5, 2)))


@pytest.mark.parametrize(
    "pairs, strands, inf",
    [
        (((2, 3),), 2, 3),
        (((2, 2), (3, 2)), 2, 5),
        (((2, 1), (5, 1)), 2, 2),
        (((4, 3),), 3, 2),
    ],
)
def test_fulltwist_examples(pairs, strands, inf):
    cert = fulltwist_presentation(TLinkSpec(pairs))
    assert cert.output_word.strands == strands
    assert cert.inf == inf
    assert cert.is_valid() and cert.syntactic_prefix


def test_fulltwist_unknot():
    cert = fulltwist_presentation(TLinkSpec.of((3, 1)))
    assert cert.output_word == BraidWord(1)
    assert cert.is_valid()


def test_certificate_json():
    d = json.loads(fulltwist_presentation(TLinkSpec.of((2, 2), (3, 2))).to_json())
    assert d["output_word"] == "n=2\n1 1 1 1 1"
    assert d["fulltwist_witness"]["inf"] == 5
    assert d["invariants"]["input"]["alexander"] == d["invariants"]["output"]["alexander"]


@st.composite
def specs(draw):
    rs = sorted(draw(st.sets(st.integers(2, 7), min_size=1, max_size=4)))
    ss = draw(st.lists(st.integers(1, 6), min_size=len(rs), max_size=len(rs)))
    return TLinkSpec(tuple(zip(rs, ss)))


@given(specs())
@settings(max_examples=80, deadline=None)
def test_fulltwist_always_certifies(spec):
    cert = fulltwist_presentation(spec)
    assert cert.output_word.is_positive()
    assert cert.output_word.strands == 1 or cert.inf >= 2
    assert same_link(standard_braid(spec), cert.output_word)

"""End-to-end acceptance checks; each test reports one PASS/FAIL line in the summary."""

import itertools
import random
import time
from fractions import Fraction

from tlinks.braid import BraidWord, full_twist, half_twist
from tlinks.garside import garside_normal_form
from tlinks.invariants import (
    alexander_polynomial,
    bennequin_genus,
    closure_components,
    genus_from_alexander,
    invariant_bundle,
    self_linking,
)
from tlinks.obstruction import Verdict, corollary_family, crossings_lower_bound, verify_lemma_crossings_bruteforce
from tlinks.rewrite import fulltwist_presentation, isopote_input, isopote_step
from tlinks.satellite import family_braid, predicted_crossings
from tlinks.tlink import TLinkSpec, enumerate_specs, standard_braid, transpose_dual


def test_criterion_1_fulltwist_sweep(record_criterion):
    start = time.perf_counter()
    failures = []
    count = 0
    for spec in enumerate_specs(6, 3, 5):
        count += 1
        cert = fulltwist_presentation(spec)
        w = cert.output_word
        src = invariant_bundle(standard_braid(spec))
        out = invariant_bundle(w)
        ok = (
            w.is_positive()
            and (w.strands == 1 or garside_normal_form(w).inf >= 2)
            and (src.components, src.self_linking, src.alexander) == (out.components, out.self_linking, out.alexander)
        )
        if not ok:
            failures.append(str(spec))
    elapsed = time.perf_counter() - start
    passed = not failures and elapsed < 300
    record_criterion("criterion 1 full-twist sweep", passed, f"{count} specs, {len(failures)} failures, {elapsed:.1f}s")
    assert passed, failures[:10]


def test_criterion_2_isopote(record_criterion):
    rng = random.Random(20241018)
    bad = 0
    for _ in range(500):
        p = rng.randint(3, 7)
        r = rng.randint(2, p - 1)
        q = rng.randint(1, r)
        letters = tuple(rng.choice((1, -1)) * rng.randint(1, r - 1) for _ in range(rng.randint(0, 8)))
        b = BraidWord(r, letters)
        lhs, rhs = isopote_input(b, p, q), isopote_step(b, p, q)
        if (
            alexander_polynomial(lhs) != alexander_polynomial(rhs)
            or closure_components(lhs) != closure_components(rhs)
            or self_linking(lhs) != self_linking(rhs)
        ):
            bad += 1
    record_criterion("criterion 2 isopote formula", bad == 0, f"500 random instances, {bad} mismatches")
    assert bad == 0


def test_criterion_3_lemma_bruteforce(record_criterion):
    reports = [verify_lemma_crossings_bruteforce(p) for p in range(2, 7)]
    passed = all(r.passed for r in reports)
    detail = ", ".join(f"p={r.strands}:{r.words_checked}" for r in reports)
    record_criterion("criterion 3 crossing lemma brute force", passed, detail)
    assert passed


def _lower_choices(b):
    widths = range(2, b)
    out = [()]
    for k in (1, 2):
        for cs in itertools.combinations(widths, k):
            for ds in itertools.product((1, 2), repeat=k):
                out.append(tuple(zip(cs, ds)))
    return out


def test_criterion_4_satellite_ledger(record_criterion):
    checked = 0
    bad = []
    for a, b, k in itertools.product(range(2, 6), range(2, 6), range(1, 4)):
        for lower in _lower_choices(b):
            w = family_braid(lower, a, b, k)
            checked += 1
            if len(w) != predicted_crossings(lower, a, b, k) or not w.is_positive() or w.strands != a * b:
                bad.append((lower, a, b, k))
    anchor = (len(family_braid((), 2, 2, 1)), crossings_lower_bound(4))
    passed = not bad and anchor == (13, 14)
    record_criterion("criterion 4 satellite crossing ledger", passed,
                     f"{checked} instances, {len(bad)} mismatches, (2,2,1) -> {anchor[0]} vs bound {anchor[1]}")
    assert passed, bad[:5]


def test_criterion_5_corollary(record_criterion):
    verdicts = {(a, b): corollary_family(a, b).verdict for a in range(2, 9) for b in range(2, 9)}
    passed = all(v is Verdict.CERTIFIED for v in verdicts.values())
    record_criterion("criterion 5 corollary family", passed, f"{len(verdicts)} (a, b) pairs certified")
    assert passed


def test_criterion_6_duality(record_criterion):
    specs = [s for s in enumerate_specs(5, 4, 6) if sum(x for _, x in s.pairs) <= 6]
    bad = []
    for spec in specs:
        u, v = standard_braid(spec), standard_braid(transpose_dual(spec))
        if alexander_polynomial(u) != alexander_polynomial(v) or closure_components(u) != closure_components(v):
            bad.append(str(spec))
    record_criterion("criterion 6 duality oracle", not bad, f"{len(specs)} specs, {len(bad)} mismatches")
    assert not bad


def _positive_classes(n, length):
    """Union-find of positive words of one length under the positive braid relations."""
    words = list(itertools.product(range(1, n), repeat=length))
    index = {w: k for k, w in enumerate(words)}
    parent = list(range(len(words)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for w in words:
        for i in range(length - 1):
            x, y = w[i], w[i + 1]
            if abs(x - y) >= 2:
                v = w[:i] + (y, x) + w[i + 2:]
                parent[find(index[w])] = find(index[v])
            if i + 2 < length and abs(x - y) == 1 and w[i + 2] == x:
                v = w[:i] + (y, x, y) + w[i + 3:]
                parent[find(index[w])] = find(index[v])
    classes: dict[int, list] = {}
    for w in words:
        classes.setdefault(find(index[w]), []).append(w)
    return list(classes.values())


def test_criterion_7_garside_bruteforce(record_criterion):
    words_checked = 0
    bad = []
    for n in (2, 3, 4):
        delta = half_twist(n).letters
        twist = full_twist(n).letters
        for length in range(0, 9):
            keys_seen: dict[tuple, int] = {}
            for cid, cls in enumerate(_positive_classes(n, length)):
                # largest k such that some word in the class starts with Delta^k
                brute_inf = max(
                    (k for k in range(length // max(len(delta), 1) + 1)
                     if any(w[: k * len(delta)] == delta * k for w in cls)),
                    default=0,
                )
                brute_twist = any(w[: len(twist)] == twist for w in cls)
                class_keys = set()
                for w in cls:
                    words_checked += 1
                    nf = garside_normal_form(BraidWord(n, w))
                    if nf.inf != brute_inf or (nf.inf >= 2) != brute_twist:
                        bad.append((n, w))
                    class_keys.add(nf.key())
                    # distinct classes must get distinct normal forms
                    if keys_seen.setdefault(nf.key(), cid) != cid:
                        bad.append((n, w))
                if len(class_keys) != 1:
                    bad.append((n, cls[0]))
    record_criterion("criterion 7 Garside vs brute force", not bad,
                     f"{words_checked} positive words, {len(bad)} disagreements")
    assert not bad, bad[:5]


def test_criterion_8_genus(record_criterion):
    bad = []
    for q in range(3, 12, 2):
        w = standard_braid(TLinkSpec.of((2, q)))
        g = bennequin_genus(w)
        if g != (q - 1) // 2 or Fraction(g) != genus_from_alexander(w):
            bad.append(q)
    record_criterion("criterion 8 genus of T(2,q)", not bad, "q = 3..11 odd")
    assert not bad

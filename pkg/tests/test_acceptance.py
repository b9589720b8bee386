"""Acceptance criteria, one or more tests per criterion.

Run ``pytest tests/test_acceptance.py -v``; the terminal summary prints one
PASS/FAIL line per criterion.
"""

import json
import time

import pytest

from thetaconj import (
    Alphabet,
    conjugates,
    count_palindromes_in_theta_conjugates,
    count_theta_palindromes_in_conjugacy_class,
    count_theta_palindromes_in_theta_conjugates,
    deficiency_witness,
    enumerate_involutions,
    is_primitive,
    is_theta_maximal,
    palindrome_in_theta_conjugates_witness,
    parse_involution,
    power_growth,
    theta_conjugates,
    theta_palindrome_in_theta_conjugates_witness,
    two_theta_palindrome_conjugacy_witness,
)
from thetaconj.explorer import CHECK_IDS, SweepConfig, enumerate_words, run_checks

# alphabet -> max_len over the acceptance range
SWEEP_RANGE = {"a": 10, "ab": 10, "abc": 8}
MAX_POWER = 3


def sweep_pairs():
    for letters, max_len in SWEEP_RANGE.items():
        alphabet = Alphabet(letters)
        for theta in enumerate_involutions(alphabet):
            for w in enumerate_words(alphabet, max_len):
                yield theta, w


@pytest.fixture(scope="module")
def theta():
    return parse_involution("ab,c", Alphabet("abc"))


@pytest.fixture(scope="module")
def swap():
    return parse_involution("ab", Alphabet("ab"))


@pytest.fixture(scope="module")
def serial_sweeps():
    reports = {}
    started = time.perf_counter()
    for letters, max_len in SWEEP_RANGE.items():
        config = SweepConfig.build(letters, "ALL", max_len=max_len, max_power=MAX_POWER, jobs=1)
        reports[letters] = run_checks(config)
    return reports, time.perf_counter() - started


def _canonical(report) -> str:
    d = report.as_dict()
    d.pop("wall_time_ms")
    return json.dumps(d, ensure_ascii=False, indent=2)


# -- 1 ------------------------------------------------------------------------

EXAMPLE_3_1 = {
    "aac": {"aac", "caa", "cba", "cbb"},
    "abb": {"abb", "aab", "aaa"},
    "bccb": {"bccb", "abcc", "acbc", "accb", "acca"},
    "aba": {"aba", "bab", "baa"},
    "ab": {"ab", "aa"},
    "abcab": {"abcab", "aabca", "ababc", "abcaa"},
    "aaa": {"aaa", "baa", "bba", "bbb"},
}


@pytest.mark.criterion(1, "Example 3.1 theta-conjugate sets, exact, < 1 s")
def test_c1_golden_sets(theta):
    started = time.perf_counter()
    got = {w: set(theta_conjugates(w, theta).elements) for w in EXAMPLE_3_1}
    elapsed = time.perf_counter() - started
    assert got == EXAMPLE_3_1
    assert elapsed < 1.0


# -- 2 ------------------------------------------------------------------------

@pytest.mark.criterion(2, "powers of ac: sizes [3, 5, 7] and the i=3 set, < 1 s")
def test_c2_growth_sequence(theta):
    started = time.perf_counter()
    sizes = power_growth("ac", theta, 3)
    third = set(theta_conjugates("acacac", theta).elements)
    elapsed = time.perf_counter() - started
    assert sizes == [3, 5, 7]
    assert third == {"acacac", "cacaca", "cbacac", "cbcaca", "cbcbac", "cbcbca", "cbcbcb"}
    assert elapsed < 1.0


# -- 3 ------------------------------------------------------------------------

@pytest.mark.criterion(3, "Example 4.1 theta-palindromes in C(w): 0, 1, 2")
def test_c3_conjugacy_censuses(theta):
    got = {w: count_theta_palindromes_in_conjugacy_class(w, theta).theta_palindromes
           for w in ("aaa", "cabab", "abab")}
    assert got == {"aaa": (), "cabab": ("abcab",), "abab": ("abab", "baba")}


# -- 4 ------------------------------------------------------------------------

@pytest.mark.criterion(4, "Example 6.1 theta-conjugate sets and theta-palindrome censuses")
def test_c4_theta_conjugate_censuses(swap):
    c = count_theta_palindromes_in_theta_conjugates("aaa", swap)
    assert set(theta_conjugates("aaa", swap).elements) == {"aaa", "baa", "bba", "bbb"}
    assert c.theta_palindromes == ()
    c = count_theta_palindromes_in_theta_conjugates("abab", swap)
    assert set(theta_conjugates("abab", swap).elements) == {"abab", "aaba", "abaa"}
    assert c.theta_palindromes == ("abab",)


# -- 5 ------------------------------------------------------------------------

@pytest.mark.criterion(5, "T1-T9 sweep over the full range: zero counterexamples, < 5 min serial")
def test_c5_exhaustive_sweep(serial_sweeps, note):
    reports, elapsed = serial_sweeps
    assert [len(r.config.resolved_involutions()) for r in reports.values()] == [1, 2, 4]
    for letters, report in reports.items():
        assert [c.id for c in report.checks] == list(CHECK_IDS)
        for c in report.checks:
            note(f"    sweep {letters:>3} {c.id}: tested {c.tested}, excluded {c.excluded}, "
                 f"counterexamples {len(c.counterexamples)}")
        assert report.counterexamples == [], report.summary()
    note(f"    serial sweep wall time: {elapsed:.1f} s")
    assert elapsed < 300


@pytest.mark.criterion(5, "sweep report identical for jobs=1 and jobs=4")
def test_c5_determinism(serial_sweeps):
    reports, _ = serial_sweeps
    for letters, max_len in SWEEP_RANGE.items():
        config = SweepConfig.build(letters, "ALL", max_len=max_len, max_power=MAX_POWER, jobs=4)
        assert _canonical(run_checks(config)) == _canonical(reports[letters])


# -- 6 ------------------------------------------------------------------------

@pytest.mark.criterion(6, "is_theta_maximal agrees with deficiency_witness on 100% of the range")
def test_c6_maximality_cross_check(note):
    checked = disagreements = 0
    for theta, w in sweep_pairs():
        checked += 1
        if is_theta_maximal(w, theta) != (deficiency_witness(w, theta) is None):
            disagreements += 1
    note(f"    maximality cross-check: {checked} pairs, {disagreements} disagreements")
    assert checked == 11 + 2 * 2047 + 4 * 9841
    assert disagreements == 0


# -- 7 ------------------------------------------------------------------------

@pytest.mark.criterion(7, "every witness recomposes and meets its side conditions")
def test_c7_witness_soundness(note):
    bad = []
    counts = dict.fromkeys(("deficiency", "pal", "theta_pal", "two_theta_pal"), 0)
    for theta, w in sweep_pairs():
        wit = deficiency_witness(w, theta)
        if wit is not None:
            counts["deficiency"] += 1
            if not (len(wit.beta) >= 1 and theta(wit.alpha) == wit.alpha
                    and theta(wit.beta) == wit.beta
                    and (wit.alpha + wit.beta) * (wit.i + 1) + wit.alpha + wit.v == w):
                bad.append(("deficiency", theta.spec, w))
        wit = palindrome_in_theta_conjugates_witness(w, theta)
        if wit is not None:
            counts["pal"] += 1
            d = wit.as_dict()
            if d["form"] == "PREFIX_FORM":
                ok = d["u"] == d["u"][::-1] and d["u"] + theta(d["x"][::-1]) + d["x"] == w
            else:
                ok = d["v"] == d["v"][::-1] and d["y"] + d["v"] + theta(d["y"][::-1]) == w
            if not ok:
                bad.append(("pal", theta.spec, w))
        wit = theta_palindrome_in_theta_conjugates_witness(w, theta)
        if wit is not None:
            counts["theta_pal"] += 1
            u, x = wit.u, wit.x
            whole = u + x + u if wit.form.value == "UXU" else x + u + u
            if theta(x) != x or whole != w:
                bad.append(("theta_pal", theta.spec, w))
        wit = two_theta_palindrome_conjugacy_witness(w, theta)
        if wit is not None:
            counts["two_theta_pal"] += 1
            block = wit.x + theta(wit.x)
            conj = block * wit.l
            if not (is_primitive(block) and conj in conjugates(w).elements):
                bad.append(("two_theta_pal", theta.spec, w))
    note(f"    witnesses checked: {counts}")
    assert bad == []


# -- 8 ------------------------------------------------------------------------

@pytest.mark.criterion(8, "extremal report over the sweep range, argmax words reproduce counts")
def test_c8_extremal_report(serial_sweeps, note):
    reports, _ = serial_sweeps
    for letters, report in reports.items():
        ext = report.extremal
        alphabet = Alphabet(letters)
        for spec, w in ext.pal_argmax:
            c = count_palindromes_in_theta_conjugates(w, parse_involution(spec, alphabet))
            assert c.pal_count == ext.max_pal
        for spec, w in ext.theta_pal_argmax:
            c = count_palindromes_in_theta_conjugates(w, parse_involution(spec, alphabet))
            assert c.theta_pal_count == ext.max_theta_pal
        sample = ", ".join(f"{w or 'λ'}[{t}]" for t, w in ext.pal_argmax[:6])
        note(f"    extremal {letters:>3}: max palindromes {ext.max_pal} "
             f"({len(ext.pal_argmax)} words: {sample}{' ...' if len(ext.pal_argmax) > 6 else ''}); "
             f"max theta-palindromes {ext.max_theta_pal} ({len(ext.theta_pal_argmax)} words)")


def _palindromes_up_to(alphabet, n):
    return [w for w in enumerate_words(alphabet, n) if w and w == w[::-1]]


@pytest.mark.criterion(8, "u u theta(u) construction: >= 2 palindromes in C_theta")
def test_c8_palindrome_construction():
    tried = 0
    for letters in SWEEP_RANGE:
        alphabet = Alphabet(letters)
        for theta in enumerate_involutions(alphabet):
            for u in _palindromes_up_to(alphabet, 3):
                if theta(u) == u:
                    continue
                tried += 1
                c = count_palindromes_in_theta_conjugates(u + u + theta(u), theta)
                assert u * 3 in c.palindromes and u + theta(u) + u in c.palindromes
                assert c.pal_count >= 2
    assert tried > 0


def _theta_palindrome_pairs(alphabet, theta, max_len=2):
    tpals = [w for w in enumerate_words(alphabet, max_len) if theta(w) == w]
    return [(x, u) for x in tpals for u in tpals if x != u]


@pytest.mark.criterion(8, "u x x u x x construction: both named words are theta-palindromic members")
def test_c8_theta_palindrome_construction_membership():
    for letters in SWEEP_RANGE:
        alphabet = Alphabet(letters)
        for theta in enumerate_involutions(alphabet):
            for x, u in _theta_palindrome_pairs(alphabet, theta):
                c = count_theta_palindromes_in_theta_conjugates(u + x + x + u + x + x, theta)
                assert theta(x) + u + x + x + u + x in c.theta_palindromes
                assert theta(u + x + x) + u + x + x in c.theta_palindromes


@pytest.mark.criterion(8, "u x x u x x construction, non-commuting x, u: >= 2 theta-palindromes")
def test_c8_theta_palindrome_construction_noncommuting():
    for letters in SWEEP_RANGE:
        alphabet = Alphabet(letters)
        for theta in enumerate_involutions(alphabet):
            for x, u in _theta_palindrome_pairs(alphabet, theta):
                if x + u == u + x:
                    continue
                c = count_theta_palindromes_in_theta_conjugates(u + x + x + u + x + x, theta)
                assert c.theta_pal_count >= 2, (theta.spec, x, u)


@pytest.mark.criterion(8, "u x x u x x construction as stated: every distinct pair gives >= 2")
def test_c8_theta_palindrome_construction_as_stated(note):
    # Stated for all distinct theta-palindromes x, u with |x|, |u| <= 2.  Commuting
    # pairs collapse w to a theta-palindrome (e.g. x = c, u = cc gives c^8), which
    # has exactly one theta-palindromic theta-conjugate.
    failures = []
    for letters in SWEEP_RANGE:
        alphabet = Alphabet(letters)
        for theta in enumerate_involutions(alphabet):
            for x, u in _theta_palindrome_pairs(alphabet, theta):
                c = count_theta_palindromes_in_theta_conjugates(u + x + x + u + x + x, theta)
                if c.theta_pal_count < 2:
                    failures.append((letters, theta.spec, x or "λ", u or "λ"))
    note(f"    u x x u x x pairs with fewer than two theta-palindromes: {len(failures)}, "
         f"e.g. {failures[:4]}")
    assert failures == []

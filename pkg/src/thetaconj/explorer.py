"""Exhaustive verification of the theorems over all short words and involutions.

A sweep enumerates every word up to ``max_len`` over an alphabet and runs
each selected check T1..T9 against every (word, involution) pair.  Checks are
pure; work is split into contiguous word ranges and the partial results are
merged and sorted, so the report does not depend on the number of workers.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterator, Optional, Sequence

from .conjugacy import (
    conjugates,
    deficiency_witness,
    power_growth,
    theta_conjugates,
)
from .errors import InvalidConfig
from .involution import Alphabet, Involution, enumerate_involutions, parse_involution
from .structure import (
    census,
    palindrome_in_theta_conjugates_witness,
    theta_palindrome_in_theta_conjugates_witness,
    theta_palindrome_pair_structure,
    two_theta_palindrome_conjugacy_witness,
)
from .words import primitive_root

__all__ = [
    "CHECK_IDS",
    "SweepConfig",
    "Counterexample",
    "CheckResult",
    "Extremal",
    "SweepReport",
    "enumerate_words",
    "run_check",
    "run_checks",
    "extremal_search",
    "replay",
    "ConstructionResult",
    "explore_constructions",
]

CHECK_IDS = ("T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9")

# Words per work unit handed to a worker process.
_CHUNK = 1024


def enumerate_words(alphabet: Alphabet, max_len: int) -> Iterator[str]:
    """All words of length 0..max_len, by length then declared letter order."""
    if max_len < 0:
        return
    for n in range(max_len + 1):
        for letters in itertools.product(alphabet.letters, repeat=n):
            yield "".join(letters)


@dataclass(frozen=True)
class SweepConfig:
    alphabet: Alphabet
    involutions: Optional[tuple[Involution, ...]] = None  # None means every involution
    max_len: int = 6
    max_power: int = 3
    checks: tuple[str, ...] = CHECK_IDS
    jobs: int = 1

    def __post_init__(self):
        if self.max_len < 1:
            raise InvalidConfig(f"max_len must be at least 1, got {self.max_len}")
        if self.max_power < 1:
            raise InvalidConfig(f"max_power must be at least 1, got {self.max_power}")
        if self.jobs < 1:
            raise InvalidConfig(f"jobs must be at least 1, got {self.jobs}")
        if not self.checks:
            raise InvalidConfig("at least one check must be selected")
        unknown = [c for c in self.checks if c not in CHECK_IDS]
        if unknown:
            raise InvalidConfig(f"unknown checks: {', '.join(unknown)}")
        if self.involutions is not None:
            if not self.involutions:
                raise InvalidConfig("explicit involution list is empty")
            for theta in self.involutions:
                if theta.alphabet != self.alphabet:
                    raise InvalidConfig(f"involution {theta.spec} is over another alphabet")
        # canonical order, no duplicates
        object.__setattr__(self, "checks", tuple(c for c in CHECK_IDS if c in self.checks))

    @classmethod
    def build(cls, alphabet: str, theta: str = "ALL", **kwargs) -> "SweepConfig":
        """Convenience constructor from CLI-style strings."""
        alpha = Alphabet(alphabet)
        if theta.strip().upper() == "ALL":
            invs = None
        else:
            invs = tuple(parse_involution(s, alpha) for s in theta.split(";"))
        return cls(alpha, invs, **kwargs)

    def resolved_involutions(self) -> list[Involution]:
        if self.involutions is None:
            return enumerate_involutions(self.alphabet)
        unique = {t.images: t for t in self.involutions}
        return sorted(unique.values(), key=Involution.sort_key)

    def as_dict(self) -> dict:
        # jobs is deliberately omitted: reports must not depend on it.
        return {
            "alphabet": self.alphabet.letters,
            "involutions": [t.spec for t in self.resolved_involutions()],
            "max_len": self.max_len,
            "max_power": self.max_power,
            "checks": list(self.checks),
        }


@dataclass(frozen=True)
class Counterexample:
    check_id: str
    theta: str
    word: str
    detail: str
    observed: dict

    def as_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "theta": self.theta,
            "word": self.word,
            "detail": self.detail,
            "observed": self.observed,
        }


@dataclass
class CheckResult:
    id: str
    tested: int = 0
    excluded: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "tested": self.tested,
            "excluded": self.excluded,
            "counterexamples": [c.as_dict() for c in self.counterexamples],
        }


@dataclass
class Extremal:
    """Largest palindrome / theta-palindrome counts seen in any C_theta(w)."""

    max_pal: int = 0
    max_theta_pal: int = 0
    pal_argmax: list[tuple[str, str]] = field(default_factory=list)  # (theta spec, word)
    theta_pal_argmax: list[tuple[str, str]] = field(default_factory=list)

    def as_dict(self) -> dict:
        witnesses = [
            {"kind": "palindromes", "theta": t, "word": w, "count": self.max_pal}
            for t, w in self.pal_argmax
        ] + [
            {"kind": "theta_palindromes", "theta": t, "word": w, "count": self.max_theta_pal}
            for t, w in self.theta_pal_argmax
        ]
        return {
            "max_pal": self.max_pal,
            "max_theta_pal": self.max_theta_pal,
            "witnesses": witnesses,
        }


@dataclass
class SweepReport:
    config: SweepConfig
    checks: list[CheckResult]
    extremal: Extremal
    wall_time_ms: int = 0

    @property
    def counterexamples(self) -> list[Counterexample]:
        return [cx for c in self.checks for cx in c.counterexamples]

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def as_dict(self) -> dict:
        return {
            "config": self.config.as_dict(),
            "checks": [c.as_dict() for c in self.checks],
            "extremal": self.extremal.as_dict(),
            "wall_time_ms": self.wall_time_ms,
        }

    def summary(self) -> str:
        lines = []
        for c in self.checks:
            status = "ok" if not c.counterexamples else f"{len(c.counterexamples)} counterexample(s)"
            lines.append(f"{c.id}: tested {c.tested}, excluded {c.excluded}, {status}")
            for cx in c.counterexamples[:10]:
                lines.append(f"  theta={cx.theta} word={cx.word or 'λ'}: {cx.detail}")
        e = self.extremal
        lines.append(f"max palindromes in C_theta(w): {e.max_pal} ({len(e.pal_argmax)} words)")
        lines.append(
            f"max theta-palindromes in C_theta(w): {e.max_theta_pal} ({len(e.theta_pal_argmax)} words)"
        )
        lines.append(f"wall time: {self.wall_time_ms} ms")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------


class _Subject:
    """One (word, involution) pair with lazily shared intermediate results."""

    def __init__(self, w: str, theta: Involution, max_power: int):
        self.w = w
        self.theta = theta
        self.max_power = max_power

    @cached_property
    def tconj(self):
        return theta_conjugates(self.w, self.theta)

    @cached_property
    def tcensus(self):
        return census(self.tconj.elements, self.theta)

    @cached_property
    def ccensus(self):
        return census(conjugates(self.w, self.theta.alphabet).elements, self.theta)

    @cached_property
    def is_theta_pal(self) -> bool:
        return self.theta(self.w) == self.w


# A check returns None when its hypothesis does not apply (excluded), else a
# list of (detail, observed) violations, empty when the statement holds.
Violation = tuple[str, dict]
CheckFn = Callable[[_Subject], Optional[list[Violation]]]


def _t1_cardinality(s: _Subject):
    n = len(s.w)
    size = len(s.tconj.elements)
    out = []
    if size > n + 1:
        out.append(("|C_theta(w)| exceeds |w|+1", {"size": size}))
    if n >= 1 and s.is_theta_pal and size > n:
        out.append(("theta-palindrome w has |C_theta(w)| > |w|", {"size": size}))
    if len(s.tconj.entries) != n + 1:
        out.append(("split table does not have |w|+1 entries", {"entries": len(s.tconj.entries)}))
    if s.w not in s.tconj or s.theta(s.w) not in s.tconj:
        out.append(("w or theta(w) missing from C_theta(w)", {"elements": list(s.tconj.elements)}))
    return out


def _t2_maximality(s: _Subject):
    maximal = len(s.tconj.elements) == len(s.w) + 1
    wit = deficiency_witness(s.w, s.theta)
    out = []
    if maximal == (wit is not None):
        out.append((
            "is_theta_maximal disagrees with deficiency decomposition",
            {"maximal": maximal, "witness": None if wit is None else vars(wit)},
        ))
    if wit is not None and not wit.is_valid_for(s.w, s.theta):
        out.append(("deficiency witness does not recompose", {"witness": vars(wit)}))
    return out


def _t3_singleton(s: _Subject):
    singleton = len(s.tconj.elements) == 1
    w = s.w
    fixed_letter_power = len(set(w)) <= 1 and all(s.theta.letter(a) == a for a in set(w))
    if singleton != fixed_letter_power:
        return [(
            "|C_theta(z)| = 1 disagrees with z = a^n, theta(a) = a",
            {"size": len(s.tconj.elements), "fixed_letter_power": fixed_letter_power},
        )]
    return []


def _t4_growth(s: _Subject):
    if len(s.tconj.elements) == 1:
        return None
    sizes = power_growth(s.w, s.theta, s.max_power)
    if any(a >= b for a, b in zip(sizes, sizes[1:])):
        return [("|C_theta(z^i)| is not strictly increasing", {"sizes": sizes})]
    return []


def _t5_conjugacy_class(s: _Subject):
    tp = s.ccensus.theta_palindromes
    out = []
    if len(tp) > 2:
        out.append(("conjugacy class holds more than two theta-palindromes", {"theta_palindromes": list(tp)}))
    wit = two_theta_palindrome_conjugacy_witness(s.w, s.theta)
    if (len(tp) == 2) != (wit is not None):
        out.append((
            "exactly-two census disagrees with (x theta(x))^l witness",
            {"theta_palindromes": list(tp), "witness": None if wit is None else wit.as_dict()},
        ))
    if wit is not None and not wit.is_valid_for(s.w):
        out.append(("(x theta(x))^l witness is not a primitive-block conjugate", {"witness": wit.as_dict()}))
    for p, q in itertools.combinations(tp, 2):
        if (theta_palindrome_pair_structure(p, q, s.theta) is None
                and theta_palindrome_pair_structure(q, p, s.theta) is None):
            out.append(("theta-palindrome pair lacks (x theta(x))^i structure", {"pair": [p, q]}))
    return out


def _t6_palindromes(s: _Subject):
    pals = s.tcensus.palindromes
    out = []
    wit = palindrome_in_theta_conjugates_witness(s.w, s.theta)
    if (wit is not None) != (len(pals) >= 1):
        out.append((
            "palindrome census disagrees with u theta(x^R) x / y v theta(y^R) witness",
            {"palindromes": list(pals), "witness": None if wit is None else wit.as_dict()},
        ))
    if wit is not None and not wit.is_valid_for(s.w):
        out.append(("palindrome witness does not recompose", {"witness": wit.as_dict()}))
    if s.w == s.w[::-1]:
        if len(pals) > 2:
            out.append(("palindrome w has more than two palindromic theta-conjugates", {"palindromes": list(pals)}))
        if s.theta(s.w) != s.w and len(pals) != 2:
            out.append(("palindrome w != theta(w) without exactly two palindromes", {"palindromes": list(pals)}))
    return out


def _t7_theta_palindromes(s: _Subject):
    tpals = s.tcensus.theta_palindromes
    out = []
    wit = theta_palindrome_in_theta_conjugates_witness(s.w, s.theta)
    if (wit is not None) != (len(tpals) >= 1):
        out.append((
            "theta-palindrome census disagrees with u x u / x u u witness",
            {"theta_palindromes": list(tpals), "witness": None if wit is None else wit.as_dict()},
        ))
    if wit is not None and not wit.is_valid_for(s.w, s.theta):
        out.append(("theta-palindrome witness does not recompose", {"witness": wit.as_dict()}))
    if s.is_theta_pal and tpals != (s.w,):
        out.append(("theta-palindrome w: census is not exactly {w}", {"theta_palindromes": list(tpals)}))
    return out


def _t8_power_transfer(s: _Subject):
    if not s.w:
        return None
    flags = [s.theta(s.w * n) == s.w * n for n in range(1, max(s.max_power, 2) + 1)]
    if len(set(flags)) > 1:
        return [("theta-palindromicity of w^n depends on n", {"flags": flags})]
    return []


def _t9_odd_exponent(s: _Subject):
    w, n = s.w, len(s.w)
    if n == 0 or n % 2:
        return None
    u = w[: n // 2]
    tu = s.theta(u)
    if w[n // 2:] != tu or u == tu:
        return None
    z, i = primitive_root(w)
    half = len(z) // 2
    if i % 2 == 0 or len(z) % 2 or z[half:] != s.theta(z[:half]):
        return [("u theta(u) = z^i without i odd and z = x theta(x)", {"root": z, "exponent": i})]
    return []


_CHECKS: dict[str, CheckFn] = {
    "T1": _t1_cardinality,
    "T2": _t2_maximality,
    "T3": _t3_singleton,
    "T4": _t4_growth,
    "T5": _t5_conjugacy_class,
    "T6": _t6_palindromes,
    "T7": _t7_theta_palindromes,
    "T8": _t8_power_transfer,
    "T9": _t9_odd_exponent,
}


def run_check(check_id: str, w: str, theta: Involution, max_power: int = 3):
    """Run a single check on one pair; ``None`` if excluded, else the violation list."""
    theta.alphabet.check_word(w)
    return _CHECKS[check_id](_Subject(w, theta, max_power))


def replay(cx: Counterexample, config: SweepConfig) -> bool:
    """True if re-running ``cx``'s check through the public API reproduces a violation."""
    theta = parse_involution(cx.theta, config.alphabet)
    violations = run_check(cx.check_id, cx.word, theta, config.max_power)
    return bool(violations)


# ---------------------------------------------------------------------------
# Sweep driver
# ---------------------------------------------------------------------------


@dataclass
class _Partial:
    tested: dict
    excluded: dict
    counterexamples: list
    max_pal: int = 0
    max_theta_pal: int = 0
    pal_argmax: list = field(default_factory=list)
    theta_pal_argmax: list = field(default_factory=list)


def _sweep_unit(args) -> _Partial:
    theta, words, checks, max_power = args
    part = _Partial({c: 0 for c in checks}, {c: 0 for c in checks}, [])
    spec = theta.spec
    for w in words:
        s = _Subject(w, theta, max_power)
        for cid in checks:
            result = _CHECKS[cid](s)
            if result is None:
                part.excluded[cid] += 1
                continue
            part.tested[cid] += 1
            for detail, observed in result:
                part.counterexamples.append(Counterexample(cid, spec, w, detail, observed))
        npal, ntpal = s.tcensus.pal_count, s.tcensus.theta_pal_count
        if npal > part.max_pal:
            part.max_pal, part.pal_argmax = npal, []
        if npal == part.max_pal:
            part.pal_argmax.append((spec, w))
        if ntpal > part.max_theta_pal:
            part.max_theta_pal, part.theta_pal_argmax = ntpal, []
        if ntpal == part.max_theta_pal:
            part.theta_pal_argmax.append((spec, w))
    return part


def _units(config: SweepConfig, involutions: Sequence[Involution]):
    words = list(enumerate_words(config.alphabet, config.max_len))
    for theta in involutions:
        for start in range(0, len(words), _CHUNK):
            yield theta, words[start:start + _CHUNK], config.checks, config.max_power


def _merge(config: SweepConfig, involutions, partials, checks) -> tuple[list[CheckResult], Extremal]:
    results = {c: CheckResult(c) for c in checks}
    ext = Extremal()
    for part in partials:
        for c in checks:
            results[c].tested += part.tested[c]
            results[c].excluded += part.excluded[c]
        for cx in part.counterexamples:
            results[cx.check_id].counterexamples.append(cx)
        if part.max_pal > ext.max_pal:
            ext.max_pal, ext.pal_argmax = part.max_pal, []
        if part.max_pal == ext.max_pal:
            ext.pal_argmax.extend(part.pal_argmax)
        if part.max_theta_pal > ext.max_theta_pal:
            ext.max_theta_pal, ext.theta_pal_argmax = part.max_theta_pal, []
        if part.max_theta_pal == ext.max_theta_pal:
            ext.theta_pal_argmax.extend(part.theta_pal_argmax)

    order = {t.spec: i for i, t in enumerate(involutions)}
    wkey = config.alphabet.word_key

    def pair_key(pair):
        return order[pair[0]], wkey(pair[1])

    for r in results.values():
        r.counterexamples.sort(key=lambda cx: (cx.check_id, order[cx.theta], wkey(cx.word), cx.detail))
    ext.pal_argmax.sort(key=pair_key)
    ext.theta_pal_argmax.sort(key=pair_key)
    return [results[c] for c in checks], ext


def run_checks(config: SweepConfig) -> SweepReport:
    """Run every selected check over every (word, involution) pair in range."""
    if not isinstance(config, SweepConfig):
        raise InvalidConfig("run_checks expects a SweepConfig")
    started = time.perf_counter()
    involutions = config.resolved_involutions()
    units = list(_units(config, involutions))
    if config.jobs == 1 or len(units) == 1:
        partials = [_sweep_unit(u) for u in units]
    else:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            partials = list(pool.map(_sweep_unit, units))
    checks, ext = _merge(config, involutions, partials, config.checks)
    elapsed = int(round((time.perf_counter() - started) * 1000))
    return SweepReport(config, checks, ext, elapsed)


def extremal_search(config: SweepConfig) -> Extremal:
    """Observed maxima of palindrome and theta-palindrome counts in C_theta(w)."""
    if not isinstance(config, SweepConfig):
        raise InvalidConfig("extremal_search expects a SweepConfig")
    involutions = config.resolved_involutions()
    units = [(t, w, (), m) for t, w, _, m in _units(config, involutions)]
    if config.jobs > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            partials = list(pool.map(_sweep_unit, units))
    else:
        partials = [_sweep_unit(u) for u in units]
    return _merge(config, involutions, partials, ())[1]


# ---------------------------------------------------------------------------
# Constructions claimed to produce two or more palindromes
# ---------------------------------------------------------------------------


@dataclass
class ConstructionResult:
    name: str
    tried: int = 0
    min_count: Optional[int] = None
    below_two: list[dict] = field(default_factory=list)

    def add(self, count: int, params: dict):
        self.tried += 1
        self.min_count = count if self.min_count is None else min(self.min_count, count)
        if count < 2:
            self.below_two.append({**params, "count": count})

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "tried": self.tried,
            "min_count": self.min_count,
            "below_two": self.below_two,
        }


def explore_constructions(alphabet: Alphabet, max_part_len: int = 2, max_i: int = 2) -> list[ConstructionResult]:
    """Count palindromes produced by the four two-palindrome constructions.

    ``u u theta(u)`` and ``u^(2i) theta(u)^i`` use palindromes ``u`` with
    ``u != theta(u)`` and count palindromes in C_theta(w); ``u x x u x x`` and
    ``(u^i x^(2i))^(2i)`` use distinct theta-palindromes ``x, u`` and count
    theta-palindromes.  Nothing is asserted: cases with fewer than two are
    listed for inspection.
    """
    results = [
        ConstructionResult("u u theta(u)"),
        ConstructionResult("u^(2i) theta(u)^i"),
        ConstructionResult("u x x u x x"),
        ConstructionResult("(u^i x^(2i))^(2i)"),
    ]
    short = [w for w in enumerate_words(alphabet, max_part_len) if w]
    for theta in enumerate_involutions(alphabet):
        spec = theta.spec
        for u in short:
            if u != u[::-1] or theta(u) == u:
                continue
            tu = theta(u)
            results[0].add(census(theta_conjugates(u + u + tu, theta).elements, theta).pal_count,
                           {"theta": spec, "u": u})
            for i in range(1, max_i + 1):
                w = u * (2 * i) + tu * i
                results[1].add(census(theta_conjugates(w, theta).elements, theta).pal_count,
                               {"theta": spec, "u": u, "i": i})
        tpals = [w for w in enumerate_words(alphabet, max_part_len) if theta(w) == w]
        for x in tpals:
            for u in tpals:
                if x == u:
                    continue
                w = u + x + x + u + x + x
                results[2].add(census(theta_conjugates(w, theta).elements, theta).theta_pal_count,
                               {"theta": spec, "x": x, "u": u, "commuting": x + u == u + x})
                for i in range(1, max_i + 1):
                    w = (u * i + x * (2 * i)) * (2 * i)
                    results[3].add(census(theta_conjugates(w, theta).elements, theta).theta_pal_count,
                                   {"theta": spec, "x": x, "u": u, "i": i,
                                    "commuting": x + u == u + x})
    return results

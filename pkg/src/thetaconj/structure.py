"""Palindrome censuses and constructive witnesses for the structure theorems.

Each ``*_witness`` function searches a decomposition of the word directly,
without looking at the census; the explorer checks that the two agree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional

from .conjugacy import conjugates, theta_conjugates
from .involution import Involution
from .words import is_primitive

__all__ = [
    "PalCensus",
    "PalForm",
    "ThetaPalForm",
    "PalindromeInThetaConjWitness",
    "ThetaPalInThetaConjWitness",
    "TwoThetaPalConjugacyWitness",
    "census",
    "count_theta_palindromes_in_conjugacy_class",
    "two_theta_palindrome_conjugacy_witness",
    "count_palindromes_in_theta_conjugates",
    "palindrome_in_theta_conjugates_witness",
    "count_theta_palindromes_in_theta_conjugates",
    "theta_palindrome_in_theta_conjugates_witness",
    "theta_palindrome_pair_structure",
]


@dataclass(frozen=True)
class PalCensus:
    total: int
    palindromes: tuple[str, ...]
    theta_palindromes: tuple[str, ...]

    @property
    def pal_count(self) -> int:
        return len(self.palindromes)

    @property
    def theta_pal_count(self) -> int:
        return len(self.theta_palindromes)


class PalForm(str, enum.Enum):
    PREFIX_FORM = "PREFIX_FORM"  # w = u theta(x^R) x, u a palindrome
    SUFFIX_FORM = "SUFFIX_FORM"  # w = y v theta(y^R), v a palindrome


class ThetaPalForm(str, enum.Enum):
    UXU = "UXU"
    XUU = "XUU"


@dataclass(frozen=True)
class PalindromeInThetaConjWitness:
    form: PalForm
    outer: str  # x for PREFIX_FORM, y for SUFFIX_FORM
    palindrome: str  # u for PREFIX_FORM, v for SUFFIX_FORM
    theta: Involution

    def word(self) -> str:
        if self.form is PalForm.PREFIX_FORM:
            x = self.outer
            return self.palindrome + self.theta(x[::-1]) + x
        y = self.outer
        return y + self.palindrome + self.theta(y[::-1])

    def is_valid_for(self, w: str) -> bool:
        return self.palindrome == self.palindrome[::-1] and self.word() == w

    def as_dict(self) -> dict:
        if self.form is PalForm.PREFIX_FORM:
            return {"form": self.form.value, "u": self.palindrome, "x": self.outer}
        return {"form": self.form.value, "y": self.outer, "v": self.palindrome}


@dataclass(frozen=True)
class ThetaPalInThetaConjWitness:
    form: ThetaPalForm
    u: str
    x: str

    def word(self) -> str:
        if self.form is ThetaPalForm.UXU:
            return self.u + self.x + self.u
        return self.x + self.u + self.u

    def is_valid_for(self, w: str, theta: Involution) -> bool:
        return theta(self.x) == self.x and self.word() == w

    def as_dict(self) -> dict:
        return {"form": self.form.value, "u": self.u, "x": self.x}


@dataclass(frozen=True)
class TwoThetaPalConjugacyWitness:
    """``(x theta(x))^l`` is a conjugate of the word and ``x theta(x)`` is primitive."""

    x: str
    l: int
    theta: Involution

    def block(self) -> str:
        return self.x + self.theta(self.x)

    def word(self) -> str:
        return self.block() * self.l

    def is_valid_for(self, w: str) -> bool:
        if self.l < 1 or not self.x or len(self.word()) != len(w):
            return False
        return is_primitive(self.block()) and self.word() in (w + w)

    def as_dict(self) -> dict:
        return {"x": self.x, "l": self.l, "conjugate": self.word()}


def census(elements: Iterable[str], theta: Involution) -> PalCensus:
    """Classify every element as palindrome and/or theta-palindrome, keeping input order."""
    elements = list(elements)
    for w in elements:
        theta.alphabet.check_word(w)
    pals = tuple(w for w in elements if w == w[::-1])
    tpals = tuple(w for w in elements if theta(w) == w)
    return PalCensus(len(elements), pals, tpals)


def count_theta_palindromes_in_conjugacy_class(w: str, theta: Involution) -> PalCensus:
    return census(conjugates(w, theta.alphabet).elements, theta)


def count_palindromes_in_theta_conjugates(w: str, theta: Involution) -> PalCensus:
    return census(theta_conjugates(w, theta).elements, theta)


# Same census; the two names mirror the two counting questions.
count_theta_palindromes_in_theta_conjugates = count_palindromes_in_theta_conjugates


def two_theta_palindrome_conjugacy_witness(
    w: str, theta: Involution
) -> Optional[TwoThetaPalConjugacyWitness]:
    """Find a conjugate of ``w`` equal to ``(x theta(x))^l`` with ``x theta(x)`` primitive.

    Tries ``|x|`` in increasing order and, for a fixed length, the
    lexicographically smallest ``x``.
    """
    theta.alphabet.check_word(w)
    n = len(w)
    rotations = conjugates(w, theta.alphabet).elements
    key = theta.alphabet.word_key
    for k in range(1, n // 2 + 1):
        if n % (2 * k):
            continue
        l = n // (2 * k)
        found = []
        for c in rotations:
            x = c[:k]
            block = x + theta(x)
            if block * l == c and is_primitive(block):
                found.append(x)
        if found:
            return TwoThetaPalConjugacyWitness(min(found, key=key), l, theta)
    return None


def palindrome_in_theta_conjugates_witness(
    w: str, theta: Involution
) -> Optional[PalindromeInThetaConjWitness]:
    """Decompose ``w`` as ``u theta(x^R) x`` or ``y v theta(y^R)`` with u, v palindromes."""
    theta.alphabet.check_word(w)
    n = len(w)
    for k in range(n // 2 + 1):
        x = w[n - k:]
        u = w[: n - 2 * k]
        if w[n - 2 * k: n - k] == theta(x[::-1]) and u == u[::-1]:
            return PalindromeInThetaConjWitness(PalForm.PREFIX_FORM, x, u, theta)
    for k in range(n // 2 + 1):
        y = w[:k]
        v = w[k: n - k]
        if w[n - k:] == theta(y[::-1]) and v == v[::-1]:
            return PalindromeInThetaConjWitness(PalForm.SUFFIX_FORM, y, v, theta)
    return None


def theta_palindrome_in_theta_conjugates_witness(
    w: str, theta: Involution
) -> Optional[ThetaPalInThetaConjWitness]:
    """Decompose ``w`` as ``u x u`` or ``x u u`` with ``x`` a theta-palindrome."""
    theta.alphabet.check_word(w)
    n = len(w)
    for k in range(n // 2 + 1):
        u, x = w[:k], w[k: n - k]
        if w[n - k:] == u and theta(x) == x:
            return ThetaPalInThetaConjWitness(ThetaPalForm.UXU, u, x)
    for k in range(n // 2 + 1):
        x, u = w[: n - 2 * k], w[n - k:]
        if w[n - 2 * k: n - k] == u and theta(x) == x:
            return ThetaPalInThetaConjWitness(ThetaPalForm.XUU, u, x)
    return None


def theta_palindrome_pair_structure(
    p: str, q: str, theta: Involution
) -> Optional[tuple[str, int]]:
    """For distinct conjugate theta-palindromes p, q find ``(x, i)`` with
    ``p = (x theta(x))^i``, ``q = (theta(x) x)^i`` and ``x theta(x)`` primitive."""
    n = len(p)
    for k in range(1, n // 2 + 1):
        if n % (2 * k):
            continue
        i = n // (2 * k)
        x = p[:k]
        tx = theta(x)
        if (x + tx) * i == p and (tx + x) * i == q and is_primitive(x + tx):
            return x, i
    return None

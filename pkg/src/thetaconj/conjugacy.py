"""Conjugacy classes, theta-conjugate sets and the deficiency decomposition."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import EmptyWord
from .involution import Alphabet, Involution

__all__ = [
    "ConjugateSet",
    "ThetaConjugateSet",
    "DeficiencyWitness",
    "conjugates",
    "theta_conjugates",
    "is_theta_maximal",
    "deficiency_witness",
    "power_growth",
]


@dataclass(frozen=True)
class ConjugateSet:
    source: str
    elements: tuple[str, ...]

    def __len__(self):
        return len(self.elements)

    def __contains__(self, w):
        return w in self.elements


@dataclass(frozen=True)
class ThetaConjugateSet:
    """All values ``theta(v) u`` over the splits ``source = u v``.

    ``entries`` keeps one ``(k, value)`` pair per split, ``k = |u|``, so
    coinciding values can be traced back to the splits that produced them.
    """

    source: str
    theta: Involution
    entries: tuple[tuple[int, str], ...]
    elements: tuple[str, ...]

    def __len__(self):
        return len(self.elements)

    def __contains__(self, w):
        return w in self.elements

    def splits_of(self, value: str) -> list[int]:
        return [k for k, v in self.entries if v == value]


@dataclass(frozen=True)
class DeficiencyWitness:
    """``word == (alpha beta)^(i+1) alpha v`` with alpha, beta theta-palindromes."""

    alpha: str
    beta: str
    i: int
    v: str

    def word(self) -> str:
        return (self.alpha + self.beta) * (self.i + 1) + self.alpha + self.v

    def is_valid_for(self, w: str, theta: Involution) -> bool:
        return (
            len(self.beta) >= 1
            and self.i >= 0
            and theta(self.alpha) == self.alpha
            and theta(self.beta) == self.beta
            and self.word() == w
        )


def conjugates(w: str, alphabet: Optional[Alphabet] = None) -> ConjugateSet:
    """The conjugacy class ``{v u : w = u v}``; ``C(λ) = {λ}``."""
    if alphabet is not None:
        alphabet.check_word(w)
    rotations = {w[k:] + w[:k] for k in range(max(len(w), 1))}
    ordered = alphabet.sorted_words(rotations) if alphabet else sorted(rotations)
    return ConjugateSet(w, tuple(ordered))


def theta_conjugates(w: str, theta: Involution) -> ThetaConjugateSet:
    theta.alphabet.check_word(w)
    entries = tuple((k, theta(w[k:]) + w[:k]) for k in range(len(w) + 1))
    elements = tuple(theta.alphabet.sorted_words({v for _, v in entries}))
    return ThetaConjugateSet(w, theta, entries, elements)


def is_theta_maximal(w: str, theta: Involution) -> bool:
    """True iff all ``|w| + 1`` theta-conjugates of ``w`` are distinct."""
    return len(theta_conjugates(w, theta).elements) == len(w) + 1


def deficiency_witness(w: str, theta: Involution) -> Optional[DeficiencyWitness]:
    """Search ``w = (alpha beta)^(i+1) alpha v`` with theta-palindromic alpha, beta.

    Candidates are tried by increasing ``|alpha beta|``, then increasing
    ``|alpha|``; for the first admissible pair ``i`` is taken as large as the
    prefix allows.  Does not consult the theta-conjugate set.
    """
    theta.alphabet.check_word(w)
    n = len(w)
    for period in range(1, n + 1):
        for a in range(period):
            alpha, beta = w[:a], w[a:period]
            if theta(alpha) != alpha or theta(beta) != beta:
                continue
            block = alpha + beta
            reps = 1
            while (reps + 1) * period + a <= n and w.startswith(block * (reps + 1) + alpha):
                reps += 1
            if not w.startswith(block * reps + alpha):
                continue
            return DeficiencyWitness(alpha, beta, reps - 1, w[reps * period + a:])
    return None


def power_growth(z: str, theta: Involution, k_max: int) -> list[int]:
    """Sizes ``|C_theta(z^i)|`` for ``i = 1 .. k_max``."""
    if not z:
        raise EmptyWord("power growth needs a non-empty word")
    if k_max < 1:
        raise ValueError(f"k_max must be positive, got {k_max}")
    theta.alphabet.check_word(z)
    return [len(theta_conjugates(z * i, theta).elements) for i in range(1, k_max + 1)]

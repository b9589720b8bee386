"""Alphabets, antimorphic involutions and the theta-image of words.

Words are plain ``str`` values whose characters are letters of an
:class:`Alphabet`.  An :class:`Involution` stores a self-inverse letter map;
its antimorphic extension to words is ``theta(w) = map(reverse(w))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import (
    AlphabetMismatch,
    DuplicateLetter,
    IncompleteSpec,
    MalformedGroup,
    ThetaConjError,
    UnknownLetter,
)

__all__ = [
    "Alphabet",
    "Involution",
    "parse_involution",
    "apply_theta",
    "enumerate_involutions",
    "identity_involution",
]

# Reserved by the involution spec grammar.
_RESERVED = {","}


@dataclass(frozen=True)
class Alphabet:
    """An ordered, finite, non-empty set of single-character letters."""

    letters: str
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not self.letters:
            raise ThetaConjError("alphabet must contain at least one letter")
        seen = set()
        for ch in self.letters:
            if ch in seen:
                raise DuplicateLetter(f"letter {ch!r} listed twice in alphabet")
            if not ch.isprintable() or ch.isspace() or ch in _RESERVED:
                raise ThetaConjError(f"letter {ch!r} is not a usable symbol")
            seen.add(ch)
        object.__setattr__(self, "_index", {ch: i for i, ch in enumerate(self.letters)})

    @property
    def size(self) -> int:
        return len(self.letters)

    def __contains__(self, ch) -> bool:
        return ch in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def index(self, ch: str) -> int:
        return self._index[ch]

    def check_word(self, w: str) -> None:
        """Raise :class:`AlphabetMismatch` if ``w`` uses a foreign letter."""
        for ch in w:
            if ch not in self._index:
                raise AlphabetMismatch(
                    f"letter {ch!r} of word {w!r} is not in alphabet {self.letters!r}"
                )

    def word_key(self, w: str) -> tuple:
        """Sort key: length first, then lexicographic in declared letter order."""
        idx = self._index
        return (len(w), tuple(idx[ch] for ch in w))

    def sorted_words(self, words: Iterable[str]) -> list[str]:
        return sorted(words, key=self.word_key)

    @classmethod
    def from_words(cls, *words: str) -> "Alphabet":
        """Alphabet of every letter occurring in ``words``, in code-point order."""
        letters = sorted(set("".join(words)))
        return cls("".join(letters))


@dataclass(frozen=True)
class Involution:
    """A self-inverse letter map extended antimorphically to words.

    ``images[i]`` is the image of ``alphabet.letters[i]``.
    """

    alphabet: Alphabet
    images: tuple[str, ...]
    _table: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        letters = self.alphabet.letters
        if len(self.images) != len(letters):
            raise IncompleteSpec("letter map must cover the whole alphabet")
        mapping = dict(zip(letters, self.images))
        for a, b in mapping.items():
            if b not in self.alphabet:
                raise UnknownLetter(f"image {b!r} of {a!r} is not in the alphabet")
            if mapping[b] != a:
                raise ThetaConjError(f"letter map is not self-inverse at {a!r}")
        object.__setattr__(self, "_table", str.maketrans(mapping))

    @property
    def letter_map(self) -> dict[str, str]:
        return dict(zip(self.alphabet.letters, self.images))

    def letter(self, a: str) -> str:
        return self.images[self.alphabet.index(a)]

    def fixed_letters(self) -> str:
        return "".join(a for a, b in zip(self.alphabet.letters, self.images) if a == b)

    def is_identity(self) -> bool:
        return tuple(self.alphabet.letters) == self.images

    def __call__(self, w: str) -> str:
        # Unchecked fast path used by the inner loops.
        return w[::-1].translate(self._table)

    @property
    def spec(self) -> str:
        """Canonical spec string, groups ordered by their first letter."""
        groups = []
        seen = set()
        for a, b in zip(self.alphabet.letters, self.images):
            if a in seen:
                continue
            seen.update((a, b))
            groups.append(a if a == b else a + b)
        return ",".join(groups)

    def sort_key(self) -> tuple:
        return tuple(self.alphabet.index(b) for b in self.images)

    def __str__(self) -> str:
        return self.spec


def identity_involution(alphabet: Alphabet) -> Involution:
    return Involution(alphabet, tuple(alphabet.letters))


def parse_involution(spec: str, alphabet: Alphabet) -> Involution:
    """Parse ``"ab,c"`` style specs: a pair swaps two letters, a single letter is fixed."""
    mapping: dict[str, str] = {}
    for group in spec.split(","):
        group = group.strip()
        if len(group) not in (1, 2):
            raise MalformedGroup(f"group {group!r} must have one or two letters")
        for ch in group:
            if ch not in alphabet:
                raise UnknownLetter(f"letter {ch!r} is not in alphabet {alphabet.letters!r}")
            if ch in mapping:
                raise DuplicateLetter(f"letter {ch!r} appears more than once in {spec!r}")
        if len(group) == 1:
            mapping[group] = group
        else:
            a, b = group
            if a == b:
                raise DuplicateLetter(f"letter {a!r} appears more than once in {spec!r}")
            mapping[a] = b
            mapping[b] = a
    missing = [ch for ch in alphabet if ch not in mapping]
    if missing:
        raise IncompleteSpec(f"letters {''.join(missing)!r} have no image in {spec!r}")
    return Involution(alphabet, tuple(mapping[ch] for ch in alphabet))


def apply_theta(theta: Involution, w: str) -> str:
    """Return theta(w), i.e. the letter map applied to the reversal of ``w``."""
    theta.alphabet.check_word(w)
    return theta(w)


def _pairings(letters: list[str]) -> Iterator[dict[str, str]]:
    if not letters:
        yield {}
        return
    first, rest = letters[0], letters[1:]
    for sub in _pairings(rest):
        yield {first: first, **sub}
    for j, partner in enumerate(rest):
        remaining = rest[:j] + rest[j + 1:]
        for sub in _pairings(remaining):
            yield {first: partner, partner: first, **sub}


def enumerate_involutions(alphabet: Alphabet) -> list[Involution]:
    """Every self-inverse letter map on ``alphabet``, sorted by image sequence."""
    result = [
        Involution(alphabet, tuple(m[ch] for ch in alphabet))
        for m in _pairings(list(alphabet.letters))
    ]
    result.sort(key=Involution.sort_key)
    return result

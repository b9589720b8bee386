"""Classical word primitives: reversal, palindromes, powers and primitive roots."""

from __future__ import annotations

from typing import NamedTuple

from .errors import EmptyWord
from .involution import Involution, apply_theta

__all__ = [
    "PrimitiveRoot",
    "reverse",
    "is_palindrome",
    "is_theta_palindrome",
    "primitive_root",
    "is_primitive",
    "power",
    "border_array",
]


class PrimitiveRoot(NamedTuple):
    root: str
    exponent: int


def reverse(w: str) -> str:
    return w[::-1]


def is_palindrome(w: str) -> bool:
    return w == w[::-1]


def is_theta_palindrome(w: str, theta: Involution) -> bool:
    return w == apply_theta(theta, w)


def border_array(w: str) -> list[int]:
    """Failure function: ``b[i]`` is the longest proper border of ``w[:i+1]``."""
    b = [0] * len(w)
    k = 0
    for i in range(1, len(w)):
        while k and w[i] != w[k]:
            k = b[k - 1]
        if w[i] == w[k]:
            k += 1
        b[i] = k
    return b


def primitive_root(w: str) -> PrimitiveRoot:
    """Return ``(root, n)`` with ``root`` primitive and ``root * n == w``.

    Uses the smallest period ``p = |w| - border(w)``; ``w`` is a proper power
    exactly when ``p`` divides ``|w|`` and ``p < |w|``.
    """
    if not w:
        raise EmptyWord("the primitive root is defined for non-empty words only")
    n = len(w)
    p = n - border_array(w)[-1]
    if n % p:
        p = n
    return PrimitiveRoot(w[:p], n // p)


def is_primitive(w: str) -> bool:
    return primitive_root(w).exponent == 1


def power(w: str, k: int) -> str:
    if k < 1:
        raise ValueError(f"exponent must be positive, got {k}")
    return w * k

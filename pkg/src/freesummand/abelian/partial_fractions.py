"""Elements of Q/Z and their splitting into prime-power denominators."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Mapping

import numpy as np
from sympy import factorint

from ..exceptions import PrimeOutsideSet
from .primes import PrimeSet


@dataclass(frozen=True, order=True)
class RationalMod1:
    """Reduced representative ``a/b`` of an element of Q/Z, ``0 <= a < b``."""

    numerator: int
    denominator: int = 1

    def __post_init__(self):
        a, b = int(self.numerator), int(self.denominator)
        if b < 1:
            raise ValueError("denominator must be positive")
        if not 0 <= a < b:
            raise ValueError(f"numerator must satisfy 0 <= a < b, got {a}/{b}")
        if gcd(a, b) != 1 and not (a == 0 and b == 1):
            raise ValueError(f"{a}/{b} is not reduced")
        object.__setattr__(self, "numerator", a)
        object.__setattr__(self, "denominator", b)

    @classmethod
    def from_fraction(cls, x: Fraction | int) -> RationalMod1:
        x = Fraction(x)
        x -= x.numerator // x.denominator
        return cls(x.numerator, x.denominator)

    @classmethod
    def parse(cls, text: str) -> RationalMod1:
        return cls.from_fraction(Fraction(text))

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __add__(self, other: RationalMod1) -> RationalMod1:
        return RationalMod1.from_fraction(self.to_fraction() + other.to_fraction())

    def __str__(self):
        return f"{self.numerator}/{self.denominator}"


def sum_mod1(parts: Mapping[int, RationalMod1] | list[RationalMod1]) -> RationalMod1:
    values = parts.values() if isinstance(parts, Mapping) else parts
    return RationalMod1.from_fraction(sum((v.to_fraction() for v in values), Fraction(0)))


@lru_cache(maxsize=8192)
def crt_multipliers(b: int) -> tuple[tuple[int, int, int], ...]:
    """For each prime power ``p^s`` exactly dividing ``b``, the triple
    ``(p, p^s, c)`` with ``c * (b / p^s) = 1 (mod p^s)``.

    Then ``a/b = sum (a*c mod p^s) / p^s (mod 1)``.
    """
    out = []
    for p, s in sorted(factorint(b).items()):
        q = p ** s
        out.append((p, q, pow(b // q, -1, q)))
    return tuple(out)


def _check_primes(b: int, primes: PrimeSet) -> None:
    bad = primes.outside(b)
    if bad:
        raise PrimeOutsideSet(bad[0], primes)


def partial_fraction_decompose(x: RationalMod1, primes: PrimeSet) -> dict[int, RationalMod1]:
    """Write ``x`` as a sum of fractions ``a_p / p^s_p`` with ``0 <= a_p < p^s_p``.

    The result is unique; zero maps to the empty dict.
    """
    b = x.denominator
    _check_primes(b, primes)
    return {
        p: RationalMod1((x.numerator * c) % q, q) for p, q, c in crt_multipliers(b)
    }


def decompose_denominator(b: int, primes: PrimeSet) -> tuple[np.ndarray, dict[int, tuple[int, np.ndarray]]]:
    """Decompose every reduced fraction with denominator ``b`` at once.

    Returns the numerators ``a`` (``0 <= a < b``, coprime to ``b``) and, for
    each prime ``p``, the pair ``(p^s, a_p)`` with ``a_p`` aligned to ``a``.
    Denominators must stay below 2**31 so products fit in int64.
    """
    _check_primes(b, primes)
    if b >= 2**31:
        raise ValueError("batch decomposition limited to denominators below 2**31")
    a = np.arange(b, dtype=np.int64)
    a = a[np.gcd(a, b) == 1]
    return a, {p: (q, (a * c) % q) for p, q, c in crt_multipliers(b)}

"""James numbers b_q (equivalently Atiyah-Todd numbers M_q).

``v_p(b_q) = max{s + v_p(s) : 1 <= s <= floor((q-1)/(p-1))}`` when ``q >= p``
and zero otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

from sympy import isprime, primerange


def padic_valuation(p: int, n: int) -> int:
    """Largest ``e`` with ``p**e`` dividing ``n``."""
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def james_valuation(p: int, q: int) -> int:
    if q < 1:
        raise ValueError(f"q must be positive, got {q}")
    if q < p:
        return 0
    return max(s + padic_valuation(p, s) for s in range(1, (q - 1) // (p - 1) + 1))


@dataclass(frozen=True)
class JamesFactorization:
    q: int
    exponents: Mapping[int, int]
    value: int

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "value": str(self.value),
            "factorization": {str(p): e for p, e in self.exponents.items()},
        }

    def __str__(self):
        terms = [f"{p}^{e}" if e > 1 else str(p) for p, e in self.exponents.items()]
        return f"b_{self.q} = {self.value}" + (f" = {' * '.join(terms)}" if terms else "")


@lru_cache(maxsize=None)
def james_number(q: int) -> JamesFactorization:
    """The James number ``b_q`` with its prime factorization."""
    if q < 1:
        raise ValueError(f"q must be positive, got {q}")
    exponents = {}
    value = 1
    for p in primerange(2, q + 1):
        e = james_valuation(p, q)
        if e:
            exponents[int(p)] = e
            value *= p ** e
    return JamesFactorization(q, MappingProxyType(exponents), value)


@dataclass(frozen=True)
class JamesDivisibility:
    """Outcome of testing ``b_r | n``.

    ``quotient`` is ``n / b_r`` when it divides; otherwise ``failing_prime``
    is the smallest ``p`` with ``v_p(b_r) > v_p(n)``.
    """

    r: int
    n: int
    divides: bool
    james: JamesFactorization
    quotient: int | None = None
    failing_prime: int | None = None

    def certificate_json(self) -> dict:
        return {"quotient": None if self.quotient is None else str(self.quotient),
                "failing_prime": self.failing_prime}


def james_divides(r: int, n: int) -> JamesDivisibility:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    b = james_number(r)
    if n % b.value == 0:
        return JamesDivisibility(r, n, True, b, quotient=n // b.value)
    failing = next(p for p, e in b.exponents.items() if padic_valuation(p, n) < e)
    return JamesDivisibility(r, n, False, b, failing_prime=failing)

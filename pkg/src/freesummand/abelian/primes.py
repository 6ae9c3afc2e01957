"""Sets of primes: either every prime, or an explicit finite set."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from sympy import factorint, isprime


@dataclass(frozen=True)
class PrimeSet:
    """A set ``I`` of primes.  ``primes is None`` means all primes.

    The all-primes set is never materialized; membership and the
    "product of primes in I" test are answered lazily.
    """

    primes: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.primes is None:
            return
        ps = tuple(sorted(set(int(p) for p in self.primes)))
        for p in ps:
            if not isprime(p):
                raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "primes", ps)

    @classmethod
    def all(cls) -> PrimeSet:
        return cls(None)

    @classmethod
    def of(cls, *primes: int) -> PrimeSet:
        return cls(tuple(primes))

    @classmethod
    def parse(cls, text: str) -> PrimeSet:
        """``"all"`` or a comma-separated list such as ``"2,3"`` (``""`` is empty)."""
        text = text.strip()
        if text.lower() in ("all", "*"):
            return cls.all()
        if not text:
            return cls(())
        return cls(tuple(int(t) for t in text.split(",")))

    @property
    def is_all(self) -> bool:
        return self.primes is None

    @property
    def is_empty(self) -> bool:
        return self.primes == ()

    def __contains__(self, p: int) -> bool:
        if self.primes is None:
            return isprime(p)
        return p in self.primes

    def select(self, candidates: Iterable[int]) -> list[int]:
        """The members of ``I`` among ``candidates``, ascending."""
        return sorted(p for p in set(candidates) if p in self)

    def part(self, n: int) -> int:
        """Largest divisor of ``n`` that is a product of primes in ``I``."""
        if self.primes is None:
            return n
        out = 1
        for p in self.primes:
            while n % p == 0:
                n //= p
                out *= p
        return out

    def is_product_of(self, n: int) -> bool:
        """Whether every prime factor of ``n`` lies in ``I`` (true for ``n = 1``)."""
        if n < 1:
            raise ValueError("n must be positive")
        return self.part(n) == n

    def outside(self, n: int) -> list[int]:
        """Prime factors of ``n`` that are not in ``I``."""
        rest = n // self.part(n)
        return sorted(factorint(rest)) if rest > 1 else []

    def to_json(self):
        return "all" if self.primes is None else list(self.primes)

    def __str__(self):
        if self.primes is None:
            return "all primes"
        return "{" + ", ".join(map(str, self.primes)) + "}"

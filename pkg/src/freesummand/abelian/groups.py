"""Finitely generated abelian groups extended by copies of Q.

Groups are stored in canonical invariant-factor form, so two groups are
isomorphic exactly when the dataclasses compare equal.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd, prod
from typing import Iterable, Iterator

from sympy import factorint, isprime
from sympy.utilities.iterables import partitions

from .matrices import IntMatrix, smith_normal_form


def _require_prime(p: int) -> None:
    if not isprime(p):
        raise ValueError(f"{p} is not prime")


def _require_positive(m: int, name: str = "m") -> None:
    if m < 1:
        raise ValueError(f"{name} must be a positive integer, got {m}")


@dataclass(frozen=True)
class FinAbGroup:
    """A finite abelian group ``Z/d1 + ... + Z/dk`` with ``d1 | d2 | ... | dk``."""

    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        factors = tuple(int(d) for d in self.invariant_factors)
        for d in factors:
            if d < 2:
                raise ValueError(f"invariant factors must be >= 2, got {d}")
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise ValueError(f"invariant factors must form a divisor chain: {factors}")
        object.__setattr__(self, "invariant_factors", factors)

    @classmethod
    def trivial(cls) -> FinAbGroup:
        return cls(())

    @classmethod
    def cyclic(cls, n: int) -> FinAbGroup:
        _require_positive(n, "n")
        return cls((n,) if n > 1 else ())

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> FinAbGroup:
        """Canonical form of ``Z/n1 + Z/n2 + ...`` for arbitrary positive ``ni``."""
        powers: dict[int, list[int]] = {}
        for n in orders:
            n = int(n)
            _require_positive(n, "cyclic order")
            for p, e in factorint(n).items():
                powers.setdefault(p, []).append(e)
        if not powers:
            return cls.trivial()
        for exps in powers.values():
            exps.sort(reverse=True)
        length = max(len(e) for e in powers.values())
        # largest invariant factor collects the largest power of every prime
        factors = [
            prod(p ** exps[i] for p, exps in powers.items() if i < len(exps))
            for i in range(length)
        ]
        return cls(tuple(reversed(factors)))

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def primes(self) -> list[int]:
        """Primes dividing the order, ascending."""
        return sorted(factorint(self.exponent)) if self.invariant_factors else []

    def primary_part(self, p: int) -> FinAbGroup:
        _require_prime(p)
        out = []
        for d in self.invariant_factors:
            q = 1
            while d % p == 0:
                d //= p
                q *= p
            if q > 1:
                out.append(q)
        return FinAbGroup(tuple(out))

    def __add__(self, other: FinAbGroup) -> FinAbGroup:
        return FinAbGroup.from_orders(self.invariant_factors + other.invariant_factors)

    def __str__(self):
        if not self.invariant_factors:
            return "0"
        return " + ".join(f"Z/{d}" for d in self.invariant_factors)


@dataclass(frozen=True)
class AbGroupFQ:
    """``Q^q_rank + Z^free_rank + torsion``."""

    q_rank: int = 0
    free_rank: int = 0
    torsion: FinAbGroup = field(default_factory=FinAbGroup)

    def __post_init__(self):
        if self.q_rank < 0 or self.free_rank < 0:
            raise ValueError("ranks must be nonnegative")
        if not isinstance(self.torsion, FinAbGroup):
            object.__setattr__(self, "torsion", FinAbGroup(tuple(self.torsion)))

    @classmethod
    def finite(cls, *orders: int) -> AbGroupFQ:
        return cls(0, 0, FinAbGroup.from_orders(orders))

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return self.torsion.invariant_factors

    @property
    def is_finite(self) -> bool:
        return self.q_rank == 0 and self.free_rank == 0

    @property
    def order(self) -> int | None:
        """Order of the group, ``None`` when infinite."""
        return self.torsion.order if self.is_finite else None

    @property
    def is_trivial(self) -> bool:
        return self.is_finite and self.torsion.is_trivial

    @property
    def is_uniquely_divisible(self) -> bool:
        return self.free_rank == 0 and self.torsion.is_trivial

    def __add__(self, other: AbGroupFQ) -> AbGroupFQ:
        return AbGroupFQ(
            self.q_rank + other.q_rank,
            self.free_rank + other.free_rank,
            self.torsion + other.torsion,
        )

    def to_json(self) -> dict:
        return {
            "q_rank": self.q_rank,
            "free_rank": self.free_rank,
            "invariant_factors": list(self.invariant_factors),
        }

    @classmethod
    def from_json(cls, data: dict | str) -> AbGroupFQ:
        """Parse the JSON group form; invariant factors need not be canonical."""
        if isinstance(data, str):
            data = json.loads(data)
        unknown = set(data) - {"q_rank", "free_rank", "invariant_factors"}
        if unknown:
            raise ValueError(f"unknown group fields: {sorted(unknown)}")
        return cls(
            int(data.get("q_rank", 0)),
            int(data.get("free_rank", 0)),
            FinAbGroup.from_orders(data.get("invariant_factors", [])),
        )

    def __str__(self):
        parts = []
        if self.q_rank:
            parts.append("Q" if self.q_rank == 1 else f"Q^{self.q_rank}")
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        if not self.torsion.is_trivial:
            parts.append(str(self.torsion))
        return " + ".join(parts) or "0"


def as_group(a: AbGroupFQ | FinAbGroup) -> AbGroupFQ:
    return a if isinstance(a, AbGroupFQ) else AbGroupFQ(0, 0, a)


def group_from_presentation(m: IntMatrix) -> AbGroupFQ:
    """Cokernel of ``m : Z^cols -> Z^rows``, i.e. ``Z^rows / image(m)``."""
    d, _, _ = smith_normal_form(m)
    diag = d.diagonal_entries()
    rank = sum(1 for x in diag if x)
    return AbGroupFQ(0, m.rows - rank, FinAbGroup(tuple(x for x in diag if x > 1)))


def m_torsion(a: AbGroupFQ, m: int) -> AbGroupFQ:
    """The subgroup ``A[m]`` of elements killed by ``m``; this is ``Hom(Z/m, A)``."""
    _require_positive(m)
    a = as_group(a)
    return AbGroupFQ(0, 0, FinAbGroup.from_orders(gcd(d, m) for d in a.invariant_factors))


def mod_m(a: AbGroupFQ, m: int) -> AbGroupFQ:
    """The quotient ``A / mA``; this is ``Ext(Z/m, A)``."""
    _require_positive(m)
    a = as_group(a)
    orders = [m] * a.free_rank + [gcd(d, m) for d in a.invariant_factors]
    return AbGroupFQ(0, 0, FinAbGroup.from_orders(orders))


def multiple_subgroup(a: AbGroupFQ, n: int) -> AbGroupFQ:
    """The image ``nA`` of multiplication by ``n``, as an abstract group."""
    _require_positive(n, "n")
    a = as_group(a)
    return AbGroupFQ(
        a.q_rank,
        a.free_rank,
        FinAbGroup.from_orders(d // gcd(d, n) for d in a.invariant_factors),
    )


def primary_part(a: AbGroupFQ | FinAbGroup, p: int) -> FinAbGroup:
    """The ``p``-primary component of the torsion subgroup."""
    return as_group(a).torsion.primary_part(p)


def torsion_subgroup(a: AbGroupFQ) -> FinAbGroup:
    return as_group(a).torsion


def maximal_divisible_subgroup(a: AbGroupFQ) -> AbGroupFQ:
    return AbGroupFQ(as_group(a).q_rank)


def finite_abelian_groups(order: int) -> Iterator[FinAbGroup]:
    """Every abelian group of the given order, one per isomorphism class."""
    _require_positive(order, "order")
    factored = sorted(factorint(order).items())
    choices = []
    for p, e in factored:
        shapes = []
        for part in partitions(e):
            shapes.append([p ** k for k, mult in sorted(part.items()) for _ in range(mult)])
        choices.append(shapes)

    def walk(i, acc):
        if i == len(choices):
            yield FinAbGroup.from_orders(acc)
            return
        for shape in choices[i]:
            yield from walk(i + 1, acc + shape)

    yield from walk(0, [])


def groups_up_to(max_order: int) -> list[FinAbGroup]:
    """All finite abelian groups of order at most ``max_order`` (trivial group first)."""
    return [g for n in range(1, max_order + 1) for g in finite_abelian_groups(n)]


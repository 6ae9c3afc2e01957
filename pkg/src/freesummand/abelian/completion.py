"""Divisibility predicates, Ext-completions at a set of primes, and the
splitting of a group into its I-divisible part and its I-torsion part."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..exceptions import HypothesisViolated
from .groups import AbGroupFQ, FinAbGroup, as_group, m_torsion, multiple_subgroup
from .primes import PrimeSet


@dataclass(frozen=True)
class DivisibilityPredicates:
    is_I_divisible: bool
    is_uniquely_I_divisible: bool
    is_I_torsion_free: bool
    is_I_bounded_torsion: bool

    def to_json(self) -> dict:
        return {
            "is_I_divisible": self.is_I_divisible,
            "is_uniquely_I_divisible": self.is_uniquely_I_divisible,
            "is_I_torsion_free": self.is_I_torsion_free,
            "is_I_bounded_torsion": self.is_I_bounded_torsion,
        }


def divisibility_predicates(a: AbGroupFQ, primes: PrimeSet) -> DivisibilityPredicates:
    """Evaluate the I-divisibility and I-torsion predicates exactly.

    Multiplication by an I-number is onto Q always, onto Z only when the
    I-number is 1 (so only for empty I), and onto Z/d exactly when it is
    coprime to d.
    """
    a = as_group(a)
    meets_torsion = any(primes.part(d) > 1 for d in a.invariant_factors)
    free_ok = a.free_rank == 0 or primes.is_empty
    divisible = free_ok and not meets_torsion
    return DivisibilityPredicates(
        is_I_divisible=divisible,
        # on finite groups onto and one-to-one coincide; Q and Z are torsion-free
        is_uniquely_I_divisible=divisible,
        is_I_torsion_free=not meets_torsion,
        is_I_bounded_torsion=(
            a.is_finite and all(primes.is_product_of(d) for d in a.invariant_factors)
        ),
    )


def i_torsion_subgroup(a: AbGroupFQ, primes: PrimeSet) -> FinAbGroup:
    """Elements killed by some product of primes in ``I``.

    Computed as ``A[N]`` for ``N`` the I-part of the torsion exponent.
    """
    a = as_group(a)
    n = primes.part(a.torsion.exponent)
    return m_torsion(a, n).torsion


def i_divisible_subgroup(a: AbGroupFQ, primes: PrimeSet) -> AbGroupFQ:
    """Elements divisible by every product of primes in ``I``."""
    a = as_group(a)
    # on the torsion, the I-divisible elements are exactly N*T for N the
    # I-part of the exponent; Z has no nonzero I-divisible elements unless I is empty
    n = primes.part(a.torsion.exponent)
    torsion = multiple_subgroup(AbGroupFQ(0, 0, a.torsion), n).torsion
    return AbGroupFQ(a.q_rank, a.free_rank if primes.is_empty else 0, torsion)


@dataclass(frozen=True)
class ICompleteGroup:
    """Symbolic value of ``Ext(Z/(I^inf), A)``.

    ``padic_rank`` copies of the p-adic integers for every p in the prime
    set, plus a finite p-primary group for finitely many p.
    """

    prime_set: PrimeSet
    padic_rank: int = 0
    finite_parts: dict[int, FinAbGroup] = field(default_factory=dict)

    def __post_init__(self):
        for p, part in self.finite_parts.items():
            if p not in self.prime_set:
                raise ValueError(f"finite part at {p} outside {self.prime_set}")
            if part.primes() not in ([], [p]):
                raise ValueError(f"finite part at {p} is not {p}-primary: {part}")
        parts = {p: g for p, g in sorted(self.finite_parts.items()) if not g.is_trivial}
        object.__setattr__(self, "finite_parts", parts)

    @property
    def is_finite(self) -> bool:
        return self.padic_rank == 0

    @property
    def order(self) -> int | None:
        if not self.is_finite:
            return None
        out = 1
        for part in self.finite_parts.values():
            out *= part.order
        return out

    def finite_group(self) -> FinAbGroup:
        """The direct sum of the finite parts."""
        out = FinAbGroup.trivial()
        for part in self.finite_parts.values():
            out = out + part
        return out

    def to_json(self) -> dict:
        return {
            "primes": self.prime_set.to_json(),
            "padic_rank": self.padic_rank,
            "finite_parts": {
                str(p): list(g.invariant_factors) for p, g in self.finite_parts.items()
            },
        }

    def __str__(self):
        parts = []
        if self.padic_rank:
            if self.prime_set.is_all:
                ring = "Zhat"
            else:
                ring = "(" + " x ".join(f"Z_{p}" for p in self.prime_set.primes) + ")"
            parts.append(ring if self.padic_rank == 1 else f"{ring}^{self.padic_rank}")
        parts.extend(str(g) for g in self.finite_parts.values())
        return " + ".join(parts) or "0"


def ext_completion(a: AbGroupFQ, primes: PrimeSet) -> ICompleteGroup:
    """``Ext(Z/(I^inf), A)`` as a product over ``p`` in ``I`` of p-completions.

    Q contributes nothing, each Z contributes a p-adic integer ring at every
    ``p`` in ``I``, and the torsion contributes its p-primary parts.
    """
    a = as_group(a)
    parts = {p: a.torsion.primary_part(p) for p in primes.select(a.torsion.primes())}
    rank = 0 if primes.is_empty else a.free_rank
    return ICompleteGroup(primes, rank, parts)


@dataclass(frozen=True)
class CompletionDecomposition:
    """``A = kernel + section_image`` where the completion map kills ``kernel``."""

    kernel: AbGroupFQ
    completion: FinAbGroup
    section_image: FinAbGroup

    def reassembled(self) -> AbGroupFQ:
        return self.kernel + AbGroupFQ(0, 0, self.section_image)

    def to_json(self) -> dict:
        return {
            "kernel": self.kernel.to_json(),
            "completion": AbGroupFQ(0, 0, self.completion).to_json(),
            "section_image": AbGroupFQ(0, 0, self.section_image).to_json(),
        }


def completion_decomposition(a: AbGroupFQ, primes: PrimeSet) -> CompletionDecomposition:
    """Split exact sequence ``0 -> Hom(Z[1/I], A) -> A -> Ext(Z/(I^inf), A) -> 0``.

    Needs the completion to be of I-bounded torsion, which on this class of
    groups means no copy of Z.  ``Hom(Z/(I^inf), A)`` always vanishes here.
    """
    a = as_group(a)
    if a.free_rank > 0:
        raise HypothesisViolated(
            f"{a} has free rank {a.free_rank}: its completion contains p-adic "
            "integers and is not of I-bounded torsion"
        )
    completion = ext_completion(a, primes)
    finite = completion.finite_group()
    kernel = AbGroupFQ(
        a.q_rank,
        0,
        FinAbGroup.from_orders(d // primes.part(d) for d in a.invariant_factors),
    )
    return CompletionDecomposition(kernel=kernel, completion=finite, section_image=finite)

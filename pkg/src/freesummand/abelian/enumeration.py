"""Brute-force enumeration over small finite abelian groups.

These count by listing elements and never consult the closed-form
invariant-factor formulas, so they serve as oracles for them.
"""
from __future__ import annotations

from collections import Counter
from itertools import product
from math import gcd, prod
from typing import Iterator

from ..exceptions import BoundExceeded
from .groups import FinAbGroup

DEFAULT_BUDGET = 2**16


def elements(g: FinAbGroup) -> Iterator[tuple[int, ...]]:
    return product(*(range(d) for d in g.invariant_factors))


def _scale(x, n, factors):
    return tuple((n * xi) % d for xi, d in zip(x, factors))


def element_order(x, factors) -> int:
    order = 1
    for xi, d in zip(x, factors):
        o = d // gcd(xi, d)
        order = order * o // gcd(order, o)
    return order


def order_histogram(g: FinAbGroup) -> Counter:
    """Number of elements of each order; determines ``g`` up to isomorphism."""
    return Counter(element_order(x, g.invariant_factors) for x in elements(g))


def subgroup_histogram(g: FinAbGroup, members) -> Counter:
    return Counter(element_order(x, g.invariant_factors) for x in members)


def count_killed_by(g: FinAbGroup, m: int) -> int:
    """Number of ``x`` with ``m x = 0``."""
    zero = (0,) * len(g.invariant_factors)
    return sum(1 for x in elements(g) if _scale(x, m, g.invariant_factors) == zero)


def killed_by(g: FinAbGroup, m: int) -> list[tuple[int, ...]]:
    zero = (0,) * len(g.invariant_factors)
    return [x for x in elements(g) if _scale(x, m, g.invariant_factors) == zero]


def multiples(g: FinAbGroup, m: int) -> set[tuple[int, ...]]:
    """The set ``mG``."""
    return {_scale(x, m, g.invariant_factors) for x in elements(g)}


def count_quotient_mod(g: FinAbGroup, m: int) -> int:
    """``|G / mG|`` by listing the subgroup ``mG``."""
    return g.order // len(multiples(g, m))


def brute_force_hom_count(a: FinAbGroup, b: FinAbGroup, budget: int = DEFAULT_BUDGET) -> int:
    """Count homomorphisms ``a -> b``.

    A homomorphism is a choice of image for each cyclic generator of ``a``
    that respects the generator's relation ``d_i x = 0``; the images are
    found by listing every element of ``b``.
    """
    if a.order * b.order > budget:
        raise BoundExceeded(f"|A|*|B| = {a.order * b.order} exceeds budget {budget}")
    return prod(count_killed_by(b, d) for d in a.invariant_factors)


def hom_count_formula(a: FinAbGroup, b: FinAbGroup) -> int:
    return prod(gcd(d, e) for d in a.invariant_factors for e in b.invariant_factors)

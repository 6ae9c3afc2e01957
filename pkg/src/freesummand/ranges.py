"""Bidegree ranges in which realization and comparison maps are understood.

Each classifier is an ordered list of rules; the first rule whose condition
holds decides the verdict, so every input gets exactly one answer.  Rule
conditions are written with ``&``, ``|`` and ``np.minimum`` so the same list
evaluates on Python integers (one verdict with provenance) and on numpy
arrays (a grid of clause codes for sweeps).
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum

import numpy as np

from .exceptions import InvalidParameters


class Convention(str, Enum):
    STEM_WEIGHT = "stem-weight"
    COWEIGHT_WEIGHT = "coweight-weight"


@dataclass(frozen=True)
class Bidegree:
    """``(s, w)`` in stem-weight form or ``(c, w)`` for ``c + w*alpha``."""

    convention: Convention
    first: int
    second: int

    @property
    def weight(self):
        return self.second

    @property
    def stem(self):
        if self.convention is Convention.STEM_WEIGHT:
            return self.first
        return self.first + self.second

    @property
    def coweight(self):
        if self.convention is Convention.COWEIGHT_WEIGHT:
            return self.first
        return self.first - self.second


def convert(b: Bidegree, target: Convention) -> Bidegree:
    target = Convention(target)
    if target is b.convention:
        return b
    if target is Convention.STEM_WEIGHT:
        return Bidegree(target, b.stem, b.weight)
    return Bidegree(target, b.coweight, b.weight)


@dataclass(frozen=True)
class Assumptions:
    """``beilinson_soule``: assume rational motivic cohomology of the base
    field vanishes in positive stems (known for the algebraic closure of Q)."""

    beilinson_soule: bool = False


class KernelKind(str, Enum):
    ZERO = "zero"
    MOTIVIC_COHOMOLOGY = "motivic-cohomology"
    DIVISIBLE = "divisible-unidentified"
    UNIQUELY_DIVISIBLE = "uniquely-divisible"


@dataclass(frozen=True)
class KernelLabel:
    kind: KernelKind
    degree: int | None = None
    twist: int | None = None

    @property
    def label(self) -> str:
        if self.kind is KernelKind.MOTIVIC_COHOMOLOGY:
            return f"H^{self.degree}(Spec k; Z({self.twist}))"
        return {
            KernelKind.ZERO: "0",
            KernelKind.DIVISIBLE: "divisible subgroup (unidentified)",
            KernelKind.UNIQUELY_DIVISIBLE: "maximal divisible subgroup (uniquely divisible)",
        }[self.kind]

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "degree": self.degree,
                "twist": self.twist, "label": self.label}


ZERO_KERNEL = KernelLabel(KernelKind.ZERO)
DIVISIBLE_KERNEL = KernelLabel(KernelKind.DIVISIBLE)
UNIQUELY_DIVISIBLE_KERNEL = KernelLabel(KernelKind.UNIQUELY_DIVISIBLE)


def motivic_cohomology(degree, twist) -> KernelLabel:
    return KernelLabel(KernelKind.MOTIVIC_COHOMOLOGY, int(degree), int(twist))


class VerdictKind(str, Enum):
    ZERO_SOURCE = "zero-source"
    ISOMORPHISM = "isomorphism"
    INJECTIVE = "injective"
    SPLIT_SURJECTIVE = "split-surjective"
    TARGET_ZERO_DIVISIBLE_KERNEL = "target-zero-divisible-kernel"
    EXCLUDED_ZERO_STEM = "excluded-zero-stem"
    NOT_COVERED = "not-covered"


# how much a verdict asserts; used to check that extra assumptions only add
STRENGTH = {
    VerdictKind.NOT_COVERED: 0,
    VerdictKind.EXCLUDED_ZERO_STEM: 0,
    VerdictKind.SPLIT_SURJECTIVE: 1,
    VerdictKind.TARGET_ZERO_DIVISIBLE_KERNEL: 1,
    VerdictKind.INJECTIVE: 1,
    VerdictKind.ISOMORPHISM: 2,
    VerdictKind.ZERO_SOURCE: 2,
}


class Citation(str, Enum):
    SPHERE_COMPLETION_ISO = "sphere-completion-iso"
    STABLE_REALIZATION_SPLIT = "stable-realization-split"
    STABLE_REALIZATION_ISO = "stable-realization-iso"
    STABLE_BEILINSON_SOULE = "stable-realization-beilinson-soule"
    MOTIVIC_FREUDENTHAL = "motivic-freudenthal"
    UNSTABLE_SPHERE = "unstable-sphere-comparison"
    UNSTABLE_SPHERE_BEILINSON_SOULE = "unstable-sphere-beilinson-soule"
    NEGATIVE_COWEIGHT = "negative-coweight-vanishing"
    STIEFEL_SURJECTIVITY = "stiefel-surjectivity"
    STIEFEL_INJECTIVITY = "stiefel-injectivity"
    STIEFEL_BEILINSON_SOULE = "stiefel-beilinson-soule"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    citation: Citation | None = None
    kernel: KernelLabel | None = None
    target_torsion: bool | None = None
    failed: tuple[str, ...] = ()

    def __post_init__(self):
        if (self.kind is VerdictKind.NOT_COVERED) == (self.citation is not None):
            raise ValueError("exactly the covered verdicts carry a citation")

    @property
    def strength(self) -> int:
        return STRENGTH[self.kind]

    def to_json(self) -> dict:
        return {
            "verdict": self.kind.value,
            "kernel": None if self.kernel is None else self.kernel.to_json(),
            "target_torsion": self.target_torsion,
            "citation": None if self.citation is None else self.citation.value,
            "failed": list(self.failed),
        }

    def __str__(self):
        text = self.kind.value
        if self.kernel is not None and self.kernel.kind is not KernelKind.ZERO:
            text += f", kernel {self.kernel.label}"
        if self.citation is not None:
            text += f" (by {self.citation.value})"
        if self.failed:
            text += " (fails: " + "; ".join(self.failed) + ")"
        return text


def not_covered(*failed: str) -> Verdict:
    return Verdict(VerdictKind.NOT_COVERED, failed=tuple(failed))


def _first_clause(rules, default, *args):
    for clause, test in rules:
        if test(*args):
            return clause
    return default


def _clause_grid(rules, default, *args) -> np.ndarray:
    conds = np.broadcast_arrays(*(np.asarray(test(*args), dtype=bool) for _, test in rules))
    return np.select(conds, [int(c) for c, _ in rules], int(default)).astype(np.int8)


def _scalar(value):
    return value if isinstance(value, np.ndarray) else bool(value)


# -- stabilization range ----------------------------------------------------

def freudenthal_stable(a, b, s, w):
    """Whether ``pi_{a+s, b+w}(S^{a,b}) -> pi_{s,w}(1)`` is in the stable range.

    Holds iff ``b >= 2``, ``a - b >= 2`` and ``s - w <= min(a-b-2, b-2)``.
    Accepts integers or broadcastable arrays.
    """
    return _scalar((b >= 2) & (a - b >= 2) & (s - w <= np.minimum(a - b - 2, b - 2)))


def freudenthal_stable_coweight(x, y, c):
    """Same range test for ``S^{x + y alpha}`` and coweight ``c``."""
    return _scalar((x >= 2) & (y >= 2) & (c <= np.minimum(x - 2, y - 2)))


def freudenthal_failures(a: int, b: int, s: int, w: int) -> list[str]:
    failed = []
    if b < 2:
        failed.append(f"b >= 2 ({b} < 2)")
    if a - b < 2:
        failed.append(f"a - b >= 2 ({a - b} < 2)")
    bound = min(a - b - 2, b - 2)
    if s - w > bound:
        failed.append(f"s - w <= min(a-b-2, b-2) ({s - w} > {bound})")
    return failed


# -- stable sphere ----------------------------------------------------------

class StableClause(IntEnum):
    ZERO_STEM = 0
    WEIGHT_TOO_LARGE = 1
    ISO = 2
    ISO_MINUS_ONE_STEM = 3
    MINUS_ONE_STEM = 4
    ISO_BEILINSON_SOULE = 5
    SPLIT = 6


STABLE_RULES = [
    (StableClause.ZERO_STEM, lambda s, w, bs: s == 0),
    # w <= s/2 + 1 kept in integers
    (StableClause.WEIGHT_TOO_LARGE, lambda s, w, bs: 2 * w > s + 2),
    (StableClause.ISO, lambda s, w, bs: (w >= -1) & (s != -1)),
    (StableClause.ISO_MINUS_ONE_STEM, lambda s, w, bs: (s == -1) & (w >= 0)),
    (StableClause.MINUS_ONE_STEM, lambda s, w, bs: s == -1),
    (StableClause.ISO_BEILINSON_SOULE, lambda s, w, bs: bs & (s >= 1)),
]

STABLE_KINDS = {
    StableClause.ZERO_STEM: VerdictKind.EXCLUDED_ZERO_STEM,
    StableClause.WEIGHT_TOO_LARGE: VerdictKind.NOT_COVERED,
    StableClause.ISO: VerdictKind.ISOMORPHISM,
    StableClause.ISO_MINUS_ONE_STEM: VerdictKind.ISOMORPHISM,
    StableClause.MINUS_ONE_STEM: VerdictKind.SPLIT_SURJECTIVE,
    StableClause.ISO_BEILINSON_SOULE: VerdictKind.ISOMORPHISM,
    StableClause.SPLIT: VerdictKind.SPLIT_SURJECTIVE,
}


def stable_clause(s: int, w: int, asm: Assumptions = Assumptions()) -> StableClause:
    return _first_clause(STABLE_RULES, StableClause.SPLIT, s, w, asm.beilinson_soule)


def stable_clauses(s, w, beilinson_soule: bool = False) -> np.ndarray:
    return _clause_grid(STABLE_RULES, StableClause.SPLIT, s, w, beilinson_soule)


def classify_stable_realization(s: int, w: int, asm: Assumptions = Assumptions()) -> Verdict:
    """Complex realization ``pi_{s,w}(1) -> pi_s(S)`` over an algebraically
    closed subfield of C."""
    clause = stable_clause(s, w, asm)
    if clause is StableClause.ZERO_STEM:
        return Verdict(VerdictKind.EXCLUDED_ZERO_STEM, Citation.STABLE_REALIZATION_SPLIT)
    if clause is StableClause.WEIGHT_TOO_LARGE:
        return not_covered(f"2w <= s + 2 ({2 * w} > {s + 2})")
    if clause is StableClause.ISO:
        return Verdict(VerdictKind.ISOMORPHISM, Citation.STABLE_REALIZATION_ISO, ZERO_KERNEL, True)
    if clause is StableClause.ISO_MINUS_ONE_STEM:
        return Verdict(VerdictKind.ISOMORPHISM, Citation.SPHERE_COMPLETION_ISO, ZERO_KERNEL, True)
    if clause is StableClause.MINUS_ONE_STEM:
        return Verdict(VerdictKind.SPLIT_SURJECTIVE, Citation.STABLE_REALIZATION_SPLIT,
                       DIVISIBLE_KERNEL, True)
    if clause is StableClause.ISO_BEILINSON_SOULE:
        return Verdict(VerdictKind.ISOMORPHISM, Citation.STABLE_BEILINSON_SOULE, ZERO_KERNEL, True)
    return Verdict(VerdictKind.SPLIT_SURJECTIVE, Citation.STABLE_REALIZATION_SPLIT,
                   motivic_cohomology(-s, -w), True)


# -- unstable spheres -------------------------------------------------------

class SphereClause(IntEnum):
    SPHERE_TOO_SMALL = 0
    ZERO_SOURCE = 1
    FREUDENTHAL_FAILS = 2
    STABLE_UNKNOWN = 3
    ZERO_STEM = 4
    MINUS_ONE_STEM = 5
    ISO = 6
    ISO_BEILINSON_SOULE = 7
    DIVISIBLE = 8
    SPLIT = 9


SPHERE_RULES = [
    (SphereClause.SPHERE_TOO_SMALL, lambda x, y, d, e, bs: (x < 2) | (y < 2)),
    (SphereClause.ZERO_SOURCE, lambda x, y, d, e, bs: d < x),
    (SphereClause.FREUDENTHAL_FAILS,
     lambda x, y, d, e, bs: d > np.minimum(2 * x - 2, x + y - 2)),
    (SphereClause.STABLE_UNKNOWN, lambda x, y, d, e, bs: e - y > d - x + 2),
    (SphereClause.ZERO_STEM, lambda x, y, d, e, bs: d + e == x + y),
    # before the weight test: (d, e) = (x, y-1) is stable bidegree (-1, -1)
    (SphereClause.MINUS_ONE_STEM, lambda x, y, d, e, bs: d + e == x + y - 1),
    (SphereClause.ISO, lambda x, y, d, e, bs: e >= y - 1),
    (SphereClause.ISO_BEILINSON_SOULE, lambda x, y, d, e, bs: bs & (d + e > x + y)),
    (SphereClause.DIVISIBLE, lambda x, y, d, e, bs: d + e < x + y - 1),
]

SPHERE_KINDS = {
    SphereClause.SPHERE_TOO_SMALL: VerdictKind.NOT_COVERED,
    SphereClause.ZERO_SOURCE: VerdictKind.ZERO_SOURCE,
    SphereClause.FREUDENTHAL_FAILS: VerdictKind.NOT_COVERED,
    SphereClause.STABLE_UNKNOWN: VerdictKind.NOT_COVERED,
    SphereClause.ZERO_STEM: VerdictKind.EXCLUDED_ZERO_STEM,
    SphereClause.MINUS_ONE_STEM: VerdictKind.TARGET_ZERO_DIVISIBLE_KERNEL,
    SphereClause.ISO: VerdictKind.ISOMORPHISM,
    SphereClause.ISO_BEILINSON_SOULE: VerdictKind.ISOMORPHISM,
    SphereClause.DIVISIBLE: VerdictKind.TARGET_ZERO_DIVISIBLE_KERNEL,
    SphereClause.SPLIT: VerdictKind.SPLIT_SURJECTIVE,
}


def sphere_clause(x: int, y: int, d: int, e: int, asm: Assumptions = Assumptions()) -> SphereClause:
    return _first_clause(SPHERE_RULES, SphereClause.SPLIT, x, y, d, e, asm.beilinson_soule)


def sphere_clauses(x, y, d, e, beilinson_soule: bool = False) -> np.ndarray:
    return _clause_grid(SPHERE_RULES, SphereClause.SPLIT, x, y, d, e, beilinson_soule)


def classify_sphere_unstable(x: int, y: int, d: int, e: int,
                             asm: Assumptions = Assumptions()) -> Verdict:
    """Realization ``pi_{d + e alpha}(S^{x + y alpha}) -> pi_{d+e}(S^{x+y})``."""
    clause = sphere_clause(x, y, d, e, asm)
    degree, twist = x + y - d - e, y - e
    if clause is SphereClause.SPHERE_TOO_SMALL:
        return not_covered(f"x >= 2 and y >= 2 (x={x}, y={y})")
    if clause is SphereClause.ZERO_SOURCE:
        return Verdict(VerdictKind.ZERO_SOURCE, Citation.NEGATIVE_COWEIGHT, ZERO_KERNEL)
    if clause is SphereClause.FREUDENTHAL_FAILS:
        return not_covered(f"d <= min(2x-2, x+y-2) ({d} > {min(2 * x - 2, x + y - 2)})")
    if clause is SphereClause.STABLE_UNKNOWN:
        return not_covered(f"e - y <= d - x + 2 ({e - y} > {d - x + 2})")
    if clause is SphereClause.ZERO_STEM:
        return Verdict(VerdictKind.EXCLUDED_ZERO_STEM, Citation.UNSTABLE_SPHERE)
    if clause is SphereClause.MINUS_ONE_STEM:
        return Verdict(VerdictKind.TARGET_ZERO_DIVISIBLE_KERNEL, Citation.UNSTABLE_SPHERE,
                       DIVISIBLE_KERNEL, True)
    if clause is SphereClause.ISO:
        return Verdict(VerdictKind.ISOMORPHISM, Citation.UNSTABLE_SPHERE, ZERO_KERNEL, True)
    if clause is SphereClause.ISO_BEILINSON_SOULE:
        return Verdict(VerdictKind.ISOMORPHISM, Citation.UNSTABLE_SPHERE_BEILINSON_SOULE,
                       ZERO_KERNEL, True)
    if clause is SphereClause.DIVISIBLE:
        return Verdict(VerdictKind.TARGET_ZERO_DIVISIBLE_KERNEL, Citation.UNSTABLE_SPHERE,
                       motivic_cohomology(degree, twist), True)
    return Verdict(VerdictKind.SPLIT_SURJECTIVE, Citation.UNSTABLE_SPHERE,
                   motivic_cohomology(degree, twist), True)


# -- Stiefel varieties ------------------------------------------------------

class StiefelClause(IntEnum):
    FAIL_RANK = 0
    FAIL_DIMENSION = 1
    FAIL_WEIGHT_UPPER = 2
    FAIL_CONNECTIVITY = 3
    FAIL_WEIGHT_LOWER = 4
    ISO = 5
    ISO_BEILINSON_SOULE = 6
    SPLIT = 7
    INJECTIVE = 8
    INJECTIVE_BEILINSON_SOULE = 9


def _stiefel_hypotheses(n, r, d, e, *, injective: bool):
    """``(clause, label, holds)`` for the shared range hypotheses."""
    if injective:
        upper = ("e <= d + 3", e <= d + 3, f"{e} > {d + 3}")
    else:
        upper = ("e <= d + 4 - r", e <= d + 4 - r, f"{e} > {d + 4 - r}")
    return [
        (StiefelClause.FAIL_RANK, "r <= n - 2", r <= n - 2, f"{r} > {n - 2}"),
        (StiefelClause.FAIL_DIMENSION, "d <= 2n - 2r - 3", d <= 2 * n - 2 * r - 3,
         f"{d} > {2 * n - 2 * r - 3}"),
        (StiefelClause.FAIL_WEIGHT_UPPER, *upper),
        (StiefelClause.FAIL_CONNECTIVITY, "2n <= e + d", 2 * n <= e + d,
         f"{2 * n} > {e + d}"),
    ]


def _weight_rules(bs_clause):
    return [
        (bs_clause[0], lambda n, r, d, e, bs: n - 1 <= e),
        (bs_clause[1], lambda n, r, d, e, bs: bs & (np.minimum(n - 1, 2 * n - d) <= e)),
    ]


SURJECTIVE_RULES = [
    (StiefelClause.FAIL_RANK, lambda n, r, d, e, bs: r > n - 2),
    (StiefelClause.FAIL_DIMENSION, lambda n, r, d, e, bs: d > 2 * n - 2 * r - 3),
    (StiefelClause.FAIL_WEIGHT_UPPER, lambda n, r, d, e, bs: e > d + 4 - r),
    (StiefelClause.FAIL_CONNECTIVITY, lambda n, r, d, e, bs: 2 * n > e + d),
    *_weight_rules((StiefelClause.ISO, StiefelClause.ISO_BEILINSON_SOULE)),
]

INJECTIVE_RULES = [
    (StiefelClause.FAIL_RANK, lambda n, r, d, e, bs: r > n - 2),
    (StiefelClause.FAIL_DIMENSION, lambda n, r, d, e, bs: d > 2 * n - 2 * r - 3),
    (StiefelClause.FAIL_WEIGHT_UPPER, lambda n, r, d, e, bs: e > d + 3),
    (StiefelClause.FAIL_CONNECTIVITY, lambda n, r, d, e, bs: 2 * n > e + d),
    *_weight_rules((StiefelClause.INJECTIVE, StiefelClause.INJECTIVE_BEILINSON_SOULE)),
]

STIEFEL_KINDS = {
    StiefelClause.FAIL_RANK: VerdictKind.NOT_COVERED,
    StiefelClause.FAIL_DIMENSION: VerdictKind.NOT_COVERED,
    StiefelClause.FAIL_WEIGHT_UPPER: VerdictKind.NOT_COVERED,
    StiefelClause.FAIL_CONNECTIVITY: VerdictKind.NOT_COVERED,
    StiefelClause.FAIL_WEIGHT_LOWER: VerdictKind.NOT_COVERED,
    StiefelClause.ISO: VerdictKind.ISOMORPHISM,
    StiefelClause.ISO_BEILINSON_SOULE: VerdictKind.ISOMORPHISM,
    StiefelClause.SPLIT: VerdictKind.SPLIT_SURJECTIVE,
    StiefelClause.INJECTIVE: VerdictKind.INJECTIVE,
    StiefelClause.INJECTIVE_BEILINSON_SOULE: VerdictKind.INJECTIVE,
}


def _check_stiefel(n, r):
    if np.any(np.asarray(n) < 1) or np.any(np.asarray(r) < 1):
        raise InvalidParameters(f"need n >= 1 and r >= 1, got n={n}, r={r}")


def stiefel_surjective_clauses(n, r, d, e, beilinson_soule: bool = False) -> np.ndarray:
    _check_stiefel(n, r)
    return _clause_grid(SURJECTIVE_RULES, StiefelClause.SPLIT, n, r, d, e, beilinson_soule)


def stiefel_injective_clauses(n, r, d, e, beilinson_soule: bool = False) -> np.ndarray:
    _check_stiefel(n, r)
    return _clause_grid(INJECTIVE_RULES, StiefelClause.FAIL_WEIGHT_LOWER, n, r, d, e,
                        beilinson_soule)


def _weight_failure(n, d, e, bs):
    if bs:
        bound = min(n - 1, 2 * n - d)
        return f"min(n-1, 2n-d) <= e ({bound} > {e})"
    return f"n - 1 <= e ({n - 1} > {e})"


def classify_stiefel_surjective(n: int, r: int, d: int, e: int,
                                asm: Assumptions = Assumptions()) -> Verdict:
    """Realization ``pi_{d + e alpha}(V_r(A^n)) -> pi_{d+e}(W_r(C^n))``:
    split surjective with uniquely divisible kernel, or an isomorphism."""
    _check_stiefel(n, r)
    failed = [f"{label} ({why})" for _, label, holds, why
              in _stiefel_hypotheses(n, r, d, e, injective=False) if not holds]
    if failed:
        return not_covered(*failed)
    clause = _first_clause(SURJECTIVE_RULES, StiefelClause.SPLIT, n, r, d, e, asm.beilinson_soule)
    if clause is StiefelClause.ISO:
        return Verdict(VerdictKind.ISOMORPHISM, Citation.STIEFEL_SURJECTIVITY, ZERO_KERNEL, True)
    if clause is StiefelClause.ISO_BEILINSON_SOULE:
        return Verdict(VerdictKind.ISOMORPHISM, Citation.STIEFEL_BEILINSON_SOULE,
                       ZERO_KERNEL, True)
    return Verdict(VerdictKind.SPLIT_SURJECTIVE, Citation.STIEFEL_SURJECTIVITY,
                   UNIQUELY_DIVISIBLE_KERNEL, True)


def classify_stiefel_injective(n: int, r: int, d: int, e: int,
                               asm: Assumptions = Assumptions()) -> Verdict:
    """Injectivity of the same realization map on a wider range of ``e``."""
    _check_stiefel(n, r)
    failed = [f"{label} ({why})" for _, label, holds, why
              in _stiefel_hypotheses(n, r, d, e, injective=True) if not holds]
    bs = asm.beilinson_soule
    if not (n - 1 <= e or (bs and min(n - 1, 2 * n - d) <= e)):
        failed.append(_weight_failure(n, d, e, bs))
    if failed:
        return not_covered(*failed)
    clause = _first_clause(INJECTIVE_RULES, StiefelClause.FAIL_WEIGHT_LOWER, n, r, d, e, bs)
    citation = (Citation.STIEFEL_INJECTIVITY if clause is StiefelClause.INJECTIVE
                else Citation.STIEFEL_BEILINSON_SOULE)
    return Verdict(VerdictKind.INJECTIVE, citation)


def strength_grid(clauses: np.ndarray, kinds: dict) -> np.ndarray:
    """Map a clause grid to verdict strengths."""
    table = np.zeros(max(int(c) for c in kinds) + 1, dtype=np.int8)
    for clause, kind in kinds.items():
        table[int(clause)] = STRENGTH[kind]
    return table[clauses]

"""Right inverses of ``V_r(A^n) -> V_1(A^n)`` over rings containing the
algebraic closure of Q, equivalently free summands of the universal stably
free module of type ``(n, n-1)``."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .exceptions import InvalidParameters, OutOfRange
from .james import JamesFactorization, james_divides, james_number
from .ranges import VerdictKind, classify_stiefel_injective

HYPOTHESIS = "ring contains algebraic closure of Q"


class SectionVerdict(str, Enum):
    YES = "yes"
    NO = "no"
    TRIVIALLY_YES = "trivially-yes"
    OUT_OF_THEOREM_RANGE = "out-of-theorem-range"

    @property
    def affirmative(self) -> bool:
        return self in (SectionVerdict.YES, SectionVerdict.TRIVIALLY_YES)


class SectionCitation(str, Enum):
    DIVISIBILITY_CRITERION = "james-divisibility-criterion"
    FREE_SUMMAND = "free-summand-decomposition"
    OBSTRUCTION = "james-divisibility-obstruction"
    IDENTITY = "identity-projection"
    OUTSIDE_RANGE = "outside-criterion-range"


@dataclass(frozen=True)
class SectionDecision:
    n: int
    r: int
    verdict: SectionVerdict
    james: JamesFactorization
    quotient: int | None = None
    failing_prime: int | None = None
    citation: SectionCitation = SectionCitation.DIVISIBILITY_CRITERION

    @property
    def free_rank(self) -> int:
        return self.r - 1

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "free_rank": self.free_rank,
            "verdict": self.verdict.value,
            "james": self.james.to_json(),
            "certificate": {
                "quotient": None if self.quotient is None else str(self.quotient),
                "failing_prime": self.failing_prime,
            },
            "citation": self.citation.value,
            "hypothesis": HYPOTHESIS,
        }

    def __str__(self):
        head = (f"n={self.n}, r={self.r} (free summand of rank {self.free_rank}): "
                f"{self.verdict.value}")
        if self.quotient is not None:
            head += f"; b_{self.r} = {self.james.value} divides n, quotient {self.quotient}"
        elif self.failing_prime is not None:
            head += (f"; b_{self.r} = {self.james.value} does not divide n "
                     f"(excess power of {self.failing_prime})")
        return f"{head} [by {self.citation.value}; assuming {HYPOTHESIS}]"


def _require_positive(**values):
    for name, v in values.items():
        if v < 1:
            raise ValueError(f"{name} must be a positive integer, got {v}")


def decide_section(n: int, r: int) -> SectionDecision:
    """Does ``V_r(A^n) -> V_1(A^n)`` admit a right inverse?

    For ``2 <= r <= n-2`` the answer is yes exactly when ``b_r`` divides
    ``n``.  ``r = 1`` is the identity.  For ``r`` in ``{n-1, n}`` only the
    obstruction survives: ``b_r`` not dividing ``n`` still rules a section
    out (complex realization would give a classical one), but divisibility
    there is reported as unsettled rather than guessed.
    """
    _require_positive(n=n, r=r)
    if r > n:
        raise InvalidParameters(f"need r <= n, got n={n}, r={r}")
    b = james_number(r)
    if r == 1:
        return SectionDecision(n, r, SectionVerdict.TRIVIALLY_YES, b, quotient=n,
                               citation=SectionCitation.IDENTITY)
    test = james_divides(r, n)
    if test.divides:
        if r > n - 2:
            return SectionDecision(n, r, SectionVerdict.OUT_OF_THEOREM_RANGE, b,
                                   citation=SectionCitation.OUTSIDE_RANGE)
        return SectionDecision(n, r, SectionVerdict.YES, b, quotient=test.quotient)
    return SectionDecision(n, r, SectionVerdict.NO, b, failing_prime=test.failing_prime,
                           citation=SectionCitation.OBSTRUCTION)


def free_summand_decision(n: int, t: int) -> SectionDecision:
    """Does ``P`` with ``P + R = R^n`` split off a free module of rank ``t``?"""
    _require_positive(n=n)
    if t < 0:
        raise ValueError(f"rank must be nonnegative, got {t}")
    decision = decide_section(n, t + 1)
    if decision.verdict is SectionVerdict.YES:
        return SectionDecision(n, t + 1, decision.verdict, decision.james,
                               quotient=decision.quotient,
                               citation=SectionCitation.FREE_SUMMAND)
    return decision


def max_guaranteed_free_rank(n: int) -> int:
    """Largest ``t`` with an affirmative answer for rank ``t`` and ``t+1 <= max(1, n-2)``.

    The affirmative ``r`` form an initial interval because ``b_r | b_{r+1}``.
    """
    _require_positive(n=n)
    r = 1
    while r + 1 <= n - 2 and decide_section(n, r + 1).verdict is SectionVerdict.YES:
        r += 1
    return r - 1


@dataclass(frozen=True)
class ProofCheck:
    name: str
    inequality: str
    holds: bool
    citation: str

    def to_json(self) -> dict:
        return {"name": self.name, "inequality": self.inequality,
                "holds": self.holds, "citation": self.citation}


@dataclass(frozen=True)
class ProofTrace:
    n: int
    r: int
    branch: str
    checks: tuple[ProofCheck, ...] = field(default_factory=tuple)

    @property
    def passing(self) -> bool:
        return all(c.holds for c in self.checks)

    def to_json(self) -> dict:
        return {"n": self.n, "r": self.r, "branch": self.branch, "passing": self.passing,
                "checks": [c.to_json() for c in self.checks]}

    def __str__(self):
        lines = [f"proof trace n={self.n}, r={self.r} ({self.branch}): "
                 f"{'PASS' if self.passing else 'FAIL'}"]
        for c in self.checks:
            lines.append(f"  [{'ok' if c.holds else 'FAILED'}] {c.name}: {c.inequality}")
        return "\n".join(lines)


def verify_splitting_proof_inequalities(n: int, r: int) -> ProofTrace:
    """Replay the inequality chain behind the affirmative case for ``r >= 3``.

    The rough bound ``2^(r-1) <= b_r <= n`` forces ``r <= log2(n) + 1``,
    hence ``2r < n``, which is what the injectivity range for
    ``V_{r-1}(A^{n-1})`` at ``(d, e) = (n-2, n)`` needs.
    """
    if not 3 <= r <= n - 2:
        raise OutOfRange(f"need 3 <= r <= n - 2, got n={n}, r={r}")
    b = james_number(r).value
    if n % b:
        raise OutOfRange(f"b_{r} = {b} does not divide n = {n}")

    checks = [
        ProofCheck("rough bound", f"2^{r - 1} = {2 ** (r - 1)} <= b_{r} = {b}",
                   2 ** (r - 1) <= b, "james-rough-bound"),
        ProofCheck("divisor bound", f"b_{r} = {b} <= n = {n}", b <= n, "divisibility"),
        ProofCheck("logarithmic bound", f"2^{r - 1} = {2 ** (r - 1)} <= n = {n}",
                   2 ** (r - 1) <= n, "r <= log2(n) + 1"),
    ]
    if n >= 9:
        branch = "n >= 9"
    else:
        branch = "5 <= n <= 8"
        checks.append(ProofCheck("small n forces b_r = 2", f"b_{r} = {b} == 2", b == 2,
                                 "b_r <= n <= 8"))
    checks.append(ProofCheck("half bound", f"2r = {2 * r} < n = {n}", 2 * r < n,
                             "r < n/2"))

    nn, rr, d, e = n - 1, r - 1, n - 2, n
    citation = "stiefel-injectivity"
    checks += [
        ProofCheck("injectivity: rank", f"r' = {rr} <= n' - 2 = {nn - 2}", rr <= nn - 2, citation),
        ProofCheck("injectivity: dimension", f"d = {d} <= 2n' - 2r' - 3 = {2 * nn - 2 * rr - 3}",
                   d <= 2 * nn - 2 * rr - 3, citation),
        ProofCheck("injectivity: weight upper", f"e = {e} <= d + 3 = {d + 3}", e <= d + 3, citation),
        ProofCheck("injectivity: connectivity", f"2n' = {2 * nn} <= e + d = {e + d}",
                   2 * nn <= e + d, citation),
        ProofCheck("injectivity: weight lower", f"n' - 1 = {nn - 1} <= e = {e}",
                   nn - 1 <= e, citation),
    ]
    verdict = classify_stiefel_injective(nn, rr, d, e)
    checks.append(ProofCheck("injectivity classifier",
                             f"classify_stiefel_injective({nn}, {rr}, {d}, {e}) = {verdict.kind.value}",
                             verdict.kind is VerdictKind.INJECTIVE, citation))
    return ProofTrace(n, r, branch, tuple(checks))

"""Acceptance checks, runnable from the CLI (``freesummand verify``) and pytest.

Every check compares the library against something computed another way:
element enumeration, a naive re-scan of the James valuation formula, exact
summation in Q/Z, or lattice points of the polygons drawn in the reference
chart.
"""
from __future__ import annotations

import random
import time
from fractions import Fraction
from dataclasses import dataclass
from importlib import resources
from math import prod
from typing import Callable

import numpy as np
from sympy import primerange

from .abelian import (
    AbGroupFQ,
    RationalMod1,
    PrimeSet,
    brute_force_hom_count,
    completion_decomposition,
    decompose_denominator,
    divisibility_predicates,
    finite_abelian_groups,
    groups_up_to,
    hom_count_formula,
    i_divisible_subgroup,
    i_torsion_subgroup,
    m_torsion,
    mod_m,
    partial_fraction_decompose,
    primary_part,
)
from .abelian.enumeration import count_killed_by, count_quotient_mod
from .chart import boundary_lines, chart
from .james import james_number, padic_valuation
from .ranges import (
    SPHERE_KINDS,
    STABLE_KINDS,
    STIEFEL_KINDS,
    Bidegree,
    Convention,
    VerdictKind,
    classify_stable_realization,
    convert,
    freudenthal_stable,
    freudenthal_stable_coweight,
    sphere_clauses,
    stable_clauses,
    stiefel_injective_clauses,
    stiefel_surjective_clauses,
    strength_grid,
)
from .splitting import SectionVerdict, decide_section, verify_splitting_proof_inequalities

REFERENCE_X, REFERENCE_Y = 8, 9
REFERENCE_D = (0, 20)
REFERENCE_E = (-2, 20)
GOLDEN_CHART = "chart_x8_y9.tsv"
SCALAR_CROSS_CHECK = 400


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float
    limit: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"[{status}] criterion {self.number:2d}: {self.title} -- {self.detail} "
                f"({self.seconds:.2f}s, limit {self.limit:g}s)")


class CheckFailed(AssertionError):
    pass


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise CheckFailed(message)


# -- independent oracles ------------------------------------------------------

def naive_james_value(q: int) -> int:
    """``b_q`` by a direct loop: trial-division primes, repeated division."""
    value = 1
    for p in range(2, q + 1):
        if any(p % k == 0 for k in range(2, int(p ** 0.5) + 1)):
            continue
        best = 0
        for s in range(1, (q - 1) // (p - 1) + 1):
            t, v = s, 0
            while t % p == 0:
                t //= p
                v += 1
            best = max(best, s + v)
        value *= p ** best
    return value


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def polygon_position(point, vertices) -> str:
    """``"inside"``, ``"boundary"`` or ``"outside"`` for a convex polygon, exactly."""
    signs = set()
    n = len(vertices)
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        c = _cross(a, b, point)
        if c == 0 and min(a[0], b[0]) <= point[0] <= max(a[0], b[0]) \
                and min(a[1], b[1]) <= point[1] <= max(a[1], b[1]):
            return "boundary"
        signs.add(c > 0)
    return "inside" if len(signs) == 1 else "outside"


def _on_open_segment(point, a, b) -> bool:
    return (_cross(a, b, point) == 0 and point != a and point != b
            and min(a[0], b[0]) <= point[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= point[1] <= max(a[1], b[1]))


# polygons as drawn in the reference chart for x = 8, y = 9
ISO_PENTAGON = [(9, 8), (14, 8), (14, 17), (8, 11), (8, 9)]
BS_TRIANGLE = [(9, 8), (14, 8), (14, 3)]
DIV_QUADRILATERAL = [(8, 8), (14, 2), (14, -2), (8, -2)]


def reference_region(d: int, e: int) -> str:
    """Region code of ``(d, e)`` read off the drawn chart geometry."""
    p = (d, e)
    if d < 8:
        return "Z"
    if d + e == 17 and 8 <= d <= 14:
        return "S0"
    if polygon_position(p, ISO_PENTAGON) != "outside":
        return "ISO"
    # the triangle keeps its right edge only
    if polygon_position(p, BS_TRIANGLE) == "inside" or _on_open_segment(p, (14, 8), (14, 3)):
        return "BS"
    if polygon_position(p, DIV_QUADRILATERAL) != "outside" or (8 <= d <= 14 and d + e <= 16):
        return "S-1" if d + e == 16 else "DIV"
    return "NC"


def reference_tsv() -> str:
    d_values = range(REFERENCE_D[0], REFERENCE_D[1] + 1)
    out = ["e\\d\t" + "\t".join(str(d) for d in d_values)]
    for e in range(REFERENCE_E[1], REFERENCE_E[0] - 1, -1):
        out.append(f"{e}\t" + "\t".join(reference_region(d, e) for d in d_values))
    return "\n".join(out) + "\n"


def golden_chart_bytes() -> bytes:
    return resources.files("freesummand").joinpath("data", GOLDEN_CHART).read_bytes()


# -- criteria ---------------------------------------------------------------

def check_james_constants(quick: bool = False) -> str:
    expected = {1: 1, 2: 2, 3: 24, 4: 24, 5: 2880}
    got = {q: james_number(q).value for q in expected}
    _expect(got == expected, f"got {got}")
    _expect(dict(james_number(5).exponents) == {2: 6, 3: 2, 5: 1},
            f"b_5 factorization {dict(james_number(5).exponents)}")
    return "b_1..b_5 = 1, 2, 24, 24, 2880"


def check_james_bound(quick: bool = False) -> str:
    for q in range(2, 65):
        b = james_number(q)
        _expect(b.exponents.get(2, 0) >= q - 1, f"v_2(b_{q}) = {b.exponents.get(2, 0)} < {q - 1}")
        _expect(padic_valuation(2, b.value) == b.exponents[2], f"v_2 mismatch at q={q}")
        _expect(b.value >= 2 ** (q - 1), f"b_{q} < 2^{q - 1}")
    for q in range(1, 64):
        _expect(james_number(q + 1).value % james_number(q).value == 0,
                f"b_{q} does not divide b_{q + 1}")
    return "v_2(b_q) >= q-1 for 2<=q<=64; b_q | b_(q+1) for 1<=q<=63"


def check_hom_ext_oracle(quick: bool = False) -> str:
    bound = 16 if quick else 32
    groups = groups_up_to(bound)
    pairs = 0
    for a in groups:
        for b in groups:
            got = brute_force_hom_count(a, b)
            _expect(got == hom_count_formula(a, b), f"Hom({a}, {b}): {got} != formula")
            pairs += 1
    for b in groups:
        for m in range(1, bound + 1):
            tors = m_torsion(AbGroupFQ(0, 0, b), m).order
            _expect(tors == count_killed_by(b, m), f"|{b}[{m}]| = {tors} != enumeration")
            quot = mod_m(AbGroupFQ(0, 0, b), m).order
            _expect(quot == count_quotient_mod(b, m), f"|{b}/{m}| = {quot} != enumeration")
    return f"{len(groups)} groups of order <= {bound}, {pairs} pairs, m <= {bound}"


def check_partial_fractions(quick: bool = False) -> str:
    bound = 500 if quick else 5000
    every = PrimeSet.all()
    total = 0
    for b in range(1, bound + 1):
        a, parts = decompose_denominator(b, every)
        recombined = np.zeros_like(a)
        for p, (q, ap) in parts.items():
            _expect(bool(np.all((ap >= 0) & (ap < q))), f"normalization fails at b={b}, p={p}")
            _expect(bool(np.all(ap % p != 0)), f"unreduced part at b={b}, p={p}")
            recombined = (recombined + ap * (b // q)) % b
        _expect(bool(np.array_equal(recombined, a % b)), f"sum mismatch at denominator {b}")
        total += len(a)
        if b <= SCALAR_CROSS_CHECK:
            for numerator, *row in zip(a.tolist(), *(ap.tolist() for _, ap in parts.values())):
                x = RationalMod1(numerator, b)
                pieces = partial_fraction_decompose(x, every)
                _expect([piece.numerator for piece in pieces.values()] == row,
                        f"scalar and batch decompositions differ at {x}")
                _expect(sum((piece.to_fraction() for piece in pieces.values()), Fraction(0)) % 1
                        == x.to_fraction(), f"parts of {x} do not sum back")
    return (f"{total} reduced fractions with denominator <= {bound}; "
            f"scalar path summed exactly for denominators <= {SCALAR_CROSS_CHECK}")


def random_decomposition_inputs(count: int = 200, seed: int = 20240607):
    rng = random.Random(seed)
    small_primes = list(primerange(2, 30))
    for _ in range(count):
        order = rng.randint(1, 10**4)
        torsion = rng.choice(list(finite_abelian_groups(order)))
        group = AbGroupFQ(rng.randint(0, 3), 0, torsion)
        pool = sorted(set(small_primes) | set(torsion.primes()))
        primes = PrimeSet(tuple(rng.sample(pool, rng.randint(0, 4))))
        yield group, primes


def check_completion_structure(quick: bool = False) -> str:
    count = 0
    for a, primes in random_decomposition_inputs(50 if quick else 200):
        dec = completion_decomposition(a, primes)
        _expect(dec.reassembled() == a, f"{dec.kernel} + {dec.section_image} != {a}")
        _expect(dec.section_image == i_torsion_subgroup(a, primes),
                f"section image of {a} at {primes} is not the I-torsion")
        _expect(dec.kernel == i_divisible_subgroup(a, primes),
                f"kernel of {a} at {primes} is not the I-divisible subgroup")
        _expect(divisibility_predicates(dec.kernel, primes).is_I_divisible,
                f"kernel {dec.kernel} not I-divisible")
        for d in dec.section_image.invariant_factors:
            _expect(d > 1 and primes.is_product_of(d), f"section factor {d} not an I-number")
        _expect(i_divisible_subgroup(AbGroupFQ(0, 0, dec.section_image), primes).is_trivial,
                "section image has nonzero I-divisible elements")
        expected_order = prod(primary_part(a, p).order for p in primes.select(a.torsion.primes()))
        _expect(dec.completion.order == expected_order, "completion order != product of p-parts")
        count += 1
    return f"{count} randomized groups"


def check_reference_chart(quick: bool = False) -> str:
    c = chart(REFERENCE_X, REFERENCE_Y, REFERENCE_D, REFERENCE_E)
    tsv = c.to_tsv().encode()
    golden = golden_chart_bytes()
    _expect(golden == reference_tsv().encode(), "golden file disagrees with the drawn geometry")
    _expect(tsv == golden, "chart TSV differs from the golden file")
    codes = c.codes()
    iso = {p for p, code in codes.items() if code == "ISO"}
    pentagon = {(d, e) for d in range(0, 21) for e in range(-2, 21)
                if polygon_position((d, e), ISO_PENTAGON) != "outside" and d + e != 17}
    _expect(iso == pentagon, f"ISO cells differ from pentagon: {sorted(iso ^ pentagon)}")
    lines = boundary_lines(REFERENCE_X, REFERENCE_Y)
    _expect([(l.a, l.b, l.c) for l in lines] ==
            [(1, 0, 8), (1, 0, 14), (0, 1, 8), (-1, 1, 3), (1, 1, 17), (1, 1, 16)],
            "boundary lines differ from d=8, d=14, e=8, e=d+3, d+e=17, d+e=16")
    for (d, e), code in codes.items():
        for nb in ((d + 1, e), (d, e + 1)):
            if nb in codes and codes[nb] != code:
                _expect(any((l.a * d + l.b * e - l.c) * (l.a * nb[0] + l.b * nb[1] - l.c) <= 0
                            for l in lines),
                        f"cells {(d, e)} and {nb} differ without a boundary line between them")
    return f"{len(codes)} cells match the drawn regions byte-exactly; ISO pentagon has {len(iso)} cells"


def check_section_decisions(quick: bool = False) -> str:
    yes = [(24, 3), (24, 4), (48, 3), (2880, 6)] + [(24 * m, 4) for m in range(1, 11)]
    no = [(25, 3), (24, 5), (3, 2)]
    for n, r in yes:
        _expect(decide_section(n, r).verdict is SectionVerdict.YES, f"({n}, {r}) not yes")
    for n, r in no:
        v = decide_section(n, r).verdict
        _expect(v is SectionVerdict.NO, f"({n}, {r}) answered {v.value}")
        _expect(n % naive_james_value(r) != 0, f"b_{r} | {n}")
    oracle = {r: naive_james_value(r) for r in range(2, 255)}
    swept = 0
    for n in range(4, 257):
        for r in range(2, n - 1):
            v = decide_section(n, r).verdict
            _expect(v in (SectionVerdict.YES, SectionVerdict.NO), f"({n}, {r}) out of range")
            _expect((v is SectionVerdict.YES) == (n % oracle[r] == 0), f"({n}, {r}) wrong")
            swept += 1
    return f"named cases agree; {swept} pairs with 2 <= r <= n-2 <= 254 match b_r | n"


def check_proof_sweep(quick: bool = False) -> str:
    traces = 0
    for n in range(5, 257):
        for r in range(3, n - 1):
            if n % james_number(r).value:
                continue
            trace = verify_splitting_proof_inequalities(n, r)
            _expect(trace.passing, f"trace fails for ({n}, {r}):\n{trace}")
            traces += 1
    _expect(traces > 0, "empty sweep")
    return f"{traces} affirmative pairs with r >= 3, n <= 256, every inequality holds"


def check_stable_band(quick: bool = False) -> str:
    cells = 0
    for bs in (False, True):
        for s in range(1, 21):
            for w in range(-30, 31):
                if -1 <= 2 * w <= s + 2:
                    v = classify_stable_realization(s, w, _asm(bs))
                    _expect(v.kind is VerdictKind.ISOMORPHISM, f"({s}, {w}) gives {v}")
                    cells += 1
        for s in range(-20, 21):
            for w in range(-30, 31):
                if s != 0 and 2 * w > s + 2:
                    v = classify_stable_realization(s, w, _asm(bs))
                    _expect(v.kind is VerdictKind.NOT_COVERED, f"({s}, {w}) gives {v}")
    return f"{cells} isomorphism cells; NotCovered above 2w = s+2"


def _asm(bs):
    from .ranges import Assumptions
    return Assumptions(beilinson_soule=bs)


def check_conventions(quick: bool = False) -> str:
    k = 12 if quick else 30
    r = np.arange(-k, k + 1, dtype=np.int16)
    a, b, s, w = np.ix_(r, r, r, r)
    stem = freudenthal_stable(a, b, s, w)
    coweight = convert(Bidegree(Convention.STEM_WEIGHT, s, w), Convention.COWEIGHT_WEIGHT).first
    alt = freudenthal_stable_coweight(a - b, b, coweight)
    _expect(bool(np.array_equal(stem, alt)), "stem-weight and coweight-weight forms disagree")

    def monotone(grid_fn, kinds, *args):
        lo = strength_grid(grid_fn(*args, beilinson_soule=False), kinds)
        hi = strength_grid(grid_fn(*args, beilinson_soule=True), kinds)
        return bool(np.all(hi >= lo))

    s2, w2 = np.ix_(r, r)
    _expect(monotone(stable_clauses, STABLE_KINDS, s2, w2), "stable classifier downgrades")
    y, d, e = np.ix_(r, r, r)
    for x in range(-k, k + 1):
        _expect(monotone(sphere_clauses, SPHERE_KINDS, np.int16(x), y, d, e),
                f"sphere classifier downgrades at x={x}")
    pos = np.arange(1, k + 1, dtype=np.int16)
    n, rr, d4, e4 = np.ix_(pos, pos, r, r)
    _expect(monotone(stiefel_surjective_clauses, STIEFEL_KINDS, n, rr, d4, e4),
            "Stiefel surjectivity classifier downgrades")
    _expect(monotone(stiefel_injective_clauses, STIEFEL_KINDS, n, rr, d4, e4),
            "Stiefel injectivity classifier downgrades")
    return f"Freudenthal forms agree on {stem.size} parameter tuples; flag never downgrades"


CRITERIA: list[tuple[int, str, float, Callable[[bool], str]]] = [
    (1, "James constants", 1.0, check_james_constants),
    (2, "James growth bound and divisibility chain", 1.0, check_james_bound),
    (3, "Hom/Ext oracle equivalence", 30.0, check_hom_ext_oracle),
    (4, "partial fractions in Q/Z", 10.0, check_partial_fractions),
    (5, "completion splitting structure", 5.0, check_completion_structure),
    (6, "reference chart reproduction", 1.0, check_reference_chart),
    (7, "section decisions", 5.0, check_section_decisions),
    (8, "proof-obligation sweep", 5.0, check_proof_sweep),
    (9, "stable isomorphism band", 1.0, check_stable_band),
    (10, "convention coherence and flag monotonicity", 5.0, check_conventions),
]


def run_criterion(number: int, quick: bool = False) -> CriterionResult:
    _, title, limit, fn = next(c for c in CRITERIA if c[0] == number)
    start = time.perf_counter()
    try:
        detail = fn(quick)
        ok = True
    except CheckFailed as exc:
        detail, ok = f"check failed: {exc}", False
    seconds = time.perf_counter() - start
    if ok and seconds >= limit and not quick:
        ok = False
        detail += f"; too slow"
    return CriterionResult(number, title, ok, detail, seconds, limit)


def run_all(quick: bool = False) -> list[CriterionResult]:
    return [run_criterion(number, quick) for number, *_ in CRITERIA]

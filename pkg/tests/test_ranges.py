import numpy as np
import pytest
from hypothesis import given, strategies as st

from freesummand.ranges import (
    DIVISIBLE_KERNEL,
    SPHERE_RULES,
    STABLE_RULES,
    Assumptions,
    Bidegree,
    Convention,
    KernelKind,
    SphereClause,
    StableClause,
    VerdictKind,
    classify_sphere_unstable,
    classify_stable_realization,
    classify_stiefel_injective,
    classify_stiefel_surjective,
    convert,
    freudenthal_failures,
    freudenthal_stable,
    freudenthal_stable_coweight,
    motivic_cohomology,
    sphere_clause,
    sphere_clauses,
    stable_clause,
    stable_clauses,
    stiefel_injective_clauses,
    stiefel_surjective_clauses,
)
from freesummand.exceptions import InvalidParameters

BS = Assumptions(beilinson_soule=True)
SW, CW = Convention.STEM_WEIGHT, Convention.COWEIGHT_WEIGHT


def test_conversion_examples():
    assert convert(Bidegree(CW, 3, 5), SW) == Bidegree(SW, 8, 5)
    assert convert(Bidegree(SW, 0, 0), CW) == Bidegree(CW, 0, 0)
    assert convert(Bidegree(CW, 0, 0), SW) == Bidegree(SW, 0, 0)
    assert convert(Bidegree(SW, -1, -2), CW) == Bidegree(CW, 1, -2)


def test_conversion_round_trip():
    for s in range(-100, 101):
        for w in range(-100, 101):
            b = Bidegree(SW, s, w)
            assert convert(convert(b, CW), SW) == b
            c = Bidegree(CW, s, w)
            assert convert(convert(c, SW), CW) == c


def test_freudenthal_examples():
    assert freudenthal_stable(5, 2, 0, 0)
    assert not freudenthal_stable(4, 2, 1, 0)
    assert freudenthal_failures(4, 2, 1, 0)
    for w in range(-20, 21):
        assert freudenthal_stable(4, 2, w, w)


def test_freudenthal_forms_agree():
    r = np.arange(-12, 13)
    a, b, s, w = np.ix_(r, r, r, r)
    assert np.array_equal(freudenthal_stable(a, b, s, w),
                          freudenthal_stable_coweight(a - b, b, s - w))


def test_stable_examples():
    v = classify_stable_realization(1, 0)
    assert v.kind is VerdictKind.ISOMORPHISM and v.citation is not None
    v = classify_stable_realization(3, -5)
    assert v.kind is VerdictKind.SPLIT_SURJECTIVE
    assert v.kernel.label == "H^-3(Spec k; Z(5))"
    assert classify_stable_realization(3, -5, BS).kind is VerdictKind.ISOMORPHISM
    v = classify_stable_realization(2, 3)
    assert v.kind is VerdictKind.NOT_COVERED and v.failed
    assert classify_stable_realization(0, 0).kind is VerdictKind.EXCLUDED_ZERO_STEM


def test_stable_minus_one_stem():
    assert classify_stable_realization(-1, 0).kind is VerdictKind.ISOMORPHISM
    v = classify_stable_realization(-1, -1)
    assert v.kind is VerdictKind.SPLIT_SURJECTIVE and v.kernel == DIVISIBLE_KERNEL


def test_sphere_examples():
    assert classify_sphere_unstable(8, 9, 11, 11).kind is VerdictKind.ISOMORPHISM
    assert classify_sphere_unstable(8, 9, 5, 5).kind is VerdictKind.ZERO_SOURCE
    v = classify_sphere_unstable(8, 9, 10, 3)
    assert v.kind is VerdictKind.TARGET_ZERO_DIVISIBLE_KERNEL
    assert v.kernel.label == "H^4(Spec k; Z(6))"


def test_sphere_minus_one_stem_corner_is_not_iso():
    v = classify_sphere_unstable(8, 9, 8, 8)
    assert v.kind is VerdictKind.TARGET_ZERO_DIVISIBLE_KERNEL
    assert v.kernel.kind is KernelKind.DIVISIBLE


def test_sphere_needs_large_sphere():
    assert classify_sphere_unstable(1, 5, 3, 3).kind is VerdictKind.NOT_COVERED


def test_stiefel_surjective_examples():
    assert classify_stiefel_surjective(10, 2, 13, 15).kind is VerdictKind.ISOMORPHISM
    v = classify_stiefel_surjective(10, 2, 10, 9)
    assert v.kind is VerdictKind.NOT_COVERED
    assert any(f.startswith("2n <= e + d") for f in v.failed)
    v = classify_stiefel_surjective(5, 4, 0, 0)
    assert any(f.startswith("r <= n - 2") for f in v.failed)


def test_stiefel_surjective_split_and_bs():
    # 2n <= e + d but e < n - 1
    v = classify_stiefel_surjective(10, 2, 13, 8)
    assert v.kind is VerdictKind.SPLIT_SURJECTIVE
    assert v.kernel.kind is KernelKind.UNIQUELY_DIVISIBLE
    assert classify_stiefel_surjective(10, 2, 13, 7, BS).kind is VerdictKind.ISOMORPHISM


def test_stiefel_injective_examples():
    assert classify_stiefel_injective(10, 2, 12, 11).kind is VerdictKind.INJECTIVE
    assert classify_stiefel_injective(23, 2, 22, 24).kind is VerdictKind.INJECTIVE
    v = classify_stiefel_injective(10, 2, 14, 11)
    assert v.kind is VerdictKind.NOT_COVERED
    assert any(f.startswith("d <= 2n - 2r - 3") for f in v.failed)


def test_stiefel_rejects_bad_parameters():
    with pytest.raises(InvalidParameters):
        classify_stiefel_surjective(0, 1, 0, 0)
    with pytest.raises(InvalidParameters):
        classify_stiefel_injective(3, 0, 0, 0)


def test_stiefel_interplay():
    for n in range(1, 14):
        for r in range(1, 14):
            for d in range(-2, 26):
                for e in range(-2, 30):
                    inj = classify_stiefel_injective(n, r, d, e).kind is VerdictKind.INJECTIVE
                    surj = classify_stiefel_surjective(n, r, d, e).kind is not VerdictKind.NOT_COVERED
                    if inj and e <= d + 4 - r:
                        assert surj
                    if surj and n - 1 <= e:
                        assert inj


def test_citation_present_exactly_when_covered():
    for s in range(-6, 7):
        for w in range(-6, 7):
            v = classify_stable_realization(s, w)
            assert (v.citation is None) == (v.kind is VerdictKind.NOT_COVERED)


def test_unstable_consistent_with_stable():
    stable_side = {SphereClause.ZERO_STEM, SphereClause.MINUS_ONE_STEM, SphereClause.ISO,
                   SphereClause.ISO_BEILINSON_SOULE, SphereClause.DIVISIBLE, SphereClause.SPLIT}
    surjective = {VerdictKind.ISOMORPHISM, VerdictKind.SPLIT_SURJECTIVE,
                  VerdictKind.TARGET_ZERO_DIVISIBLE_KERNEL}
    checked = 0
    for asm in (Assumptions(), BS):
        for x in range(2, 12):
            for y in range(2, 12):
                for d in range(x, 2 * x + 1):
                    for e in range(-6, 16):
                        if sphere_clause(x, y, d, e, asm) not in stable_side:
                            continue
                        u = classify_sphere_unstable(x, y, d, e, asm)
                        s = classify_stable_realization(d + e - x - y, e - y, asm)
                        if u.kind is VerdictKind.EXCLUDED_ZERO_STEM:
                            assert s.kind is VerdictKind.EXCLUDED_ZERO_STEM
                            continue
                        assert u.kernel == s.kernel
                        assert u.kind in surjective and s.kind in surjective
                        assert (u.kind is VerdictKind.ISOMORPHISM) == \
                            (s.kind is VerdictKind.ISOMORPHISM)
                        checked += 1
    assert checked > 1000


def test_region_partition():
    for x in range(2, 10):
        for y in range(2, 10):
            for d in range(-3, 25):
                for e in range(-5, 25):
                    matches = [c for c, rule in SPHERE_RULES if rule(x, y, d, e, False)]
                    expected = matches[0] if matches else SphereClause.SPLIT
                    assert sphere_clause(x, y, d, e) is expected


def test_bs_flag_never_downgrades():
    for s in range(-10, 11):
        for w in range(-10, 11):
            assert classify_stable_realization(s, w, BS).strength >= \
                classify_stable_realization(s, w).strength
    for d in range(0, 21):
        for e in range(-2, 21):
            assert classify_sphere_unstable(8, 9, d, e, BS).strength >= \
                classify_sphere_unstable(8, 9, d, e).strength


ints = st.integers(-40, 40)


@given(ints, ints, st.booleans())
def test_stable_scalar_matches_grid(s, w, bs):
    grid = stable_clauses(np.array([s]), np.array([w]), bs)
    assert StableClause(int(grid[0])) is stable_clause(s, w, Assumptions(bs))


@given(ints, ints, ints, ints, st.booleans())
def test_sphere_scalar_matches_grid(x, y, d, e, bs):
    grid = sphere_clauses(np.array([x]), np.array([y]), np.array([d]), np.array([e]), bs)
    assert SphereClause(int(grid[0])) is sphere_clause(x, y, d, e, Assumptions(bs))


@given(st.integers(1, 40), st.integers(1, 40), ints, ints, st.booleans())
def test_stiefel_scalar_matches_grid(n, r, d, e, bs):
    asm = Assumptions(bs)
    args = [np.array([v]) for v in (n, r, d, e)]
    surj = stiefel_surjective_clauses(*args, bs)[0]
    inj = stiefel_injective_clauses(*args, bs)[0]
    from freesummand.ranges import STIEFEL_KINDS
    assert STIEFEL_KINDS[surj] is classify_stiefel_surjective(n, r, d, e, asm).kind
    assert STIEFEL_KINDS[inj] is classify_stiefel_injective(n, r, d, e, asm).kind


def test_motivic_label():
    assert motivic_cohomology(4, 6).label == "H^4(Spec k; Z(6))"
    assert STABLE_RULES[0][0] is StableClause.ZERO_STEM

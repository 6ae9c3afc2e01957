from math import prod

import pytest
from hypothesis import given, strategies as st

from freesummand.abelian import (
    AbGroupFQ,
    FinAbGroup,
    ICompleteGroup,
    PrimeSet,
    completion_decomposition,
    divisibility_predicates,
    ext_completion,
    i_divisible_subgroup,
    i_torsion_subgroup,
    m_torsion,
    mod_m,
    primary_part,
)
from freesummand.exceptions import HypothesisViolated

Z = AbGroupFQ.finite
ALL = PrimeSet.all()
TWO = PrimeSet.of(2)


def flags(a, primes):
    p = divisibility_predicates(a, primes)
    return (p.is_I_divisible, p.is_uniquely_I_divisible, p.is_I_torsion_free,
            p.is_I_bounded_torsion)


def test_predicate_examples():
    assert flags(AbGroupFQ(1, 0, FinAbGroup((3,))), TWO) == (True, True, True, False)
    d, _, tf, _ = flags(AbGroupFQ(0, 1), ALL)
    assert (d, tf) == (False, True)
    d, _, _, bounded = flags(Z(8), TWO)
    assert (d, bounded) == (False, True)


def test_predicates_for_empty_prime_set():
    assert flags(AbGroupFQ(0, 2, FinAbGroup((6,))), PrimeSet(())) == (True, True, True, False)
    assert flags(AbGroupFQ(), PrimeSet(())) == (True, True, True, True)


def test_completion_examples():
    c = ext_completion(AbGroupFQ(2, 0, FinAbGroup((12,))), TWO)
    assert c.padic_rank == 0 and c.finite_parts == {2: FinAbGroup((4,))}
    c = ext_completion(AbGroupFQ(0, 1), ALL)
    assert c.padic_rank == 1 and c.finite_parts == {}
    assert ext_completion(AbGroupFQ(), ALL) == ICompleteGroup(ALL, 0, {})


def test_completion_matches_stabilized_quotients():
    a = AbGroupFQ(2, 0, FinAbGroup((12,)))
    assert mod_m(a, 4) == mod_m(a, 2**5) == AbGroupFQ(0, 0, ext_completion(a, TWO).finite_group())


@pytest.mark.parametrize(
    "group, primes, kernel, completion",
    [
        (AbGroupFQ(1, 0, FinAbGroup((12,))), TWO, AbGroupFQ(1, 0, FinAbGroup((3,))), (4,)),
        (AbGroupFQ(1, 0, FinAbGroup((12,))), PrimeSet.of(2, 3), AbGroupFQ(1), (12,)),
        (Z(5), TWO, Z(5), ()),
    ],
)
def test_decomposition_examples(group, primes, kernel, completion):
    dec = completion_decomposition(group, primes)
    assert dec.kernel == kernel
    assert dec.completion == FinAbGroup(completion)
    assert dec.section_image == FinAbGroup(completion)


def test_decomposition_needs_free_rank_zero():
    with pytest.raises(HypothesisViolated):
        completion_decomposition(AbGroupFQ(0, 1), TWO)


finite_parts = st.lists(st.integers(2, 200), max_size=4).map(FinAbGroup.from_orders)
groups = st.builds(lambda q, t: AbGroupFQ(q, 0, t), st.integers(0, 3), finite_parts)
prime_sets = st.one_of(
    st.just(ALL),
    st.lists(st.sampled_from([2, 3, 5, 7, 11, 13]), max_size=3, unique=True).map(
        lambda ps: PrimeSet(tuple(ps))
    ),
)


@given(groups, prime_sets)
def test_decomposition_structure(a, primes):
    dec = completion_decomposition(a, primes)
    assert dec.reassembled() == a
    assert dec.section_image == i_torsion_subgroup(a, primes)
    assert dec.kernel == i_divisible_subgroup(a, primes)
    assert divisibility_predicates(dec.kernel, primes).is_I_divisible
    assert all(d > 1 and primes.is_product_of(d) for d in dec.section_image.invariant_factors)


@given(groups, prime_sets)
def test_completion_order_is_product_of_primary_parts(a, primes):
    expected = prod(primary_part(a, p).order for p in primes.select(a.torsion.primes()))
    assert ext_completion(a, primes).order == expected


def uniquely_divisible(a):
    return a.is_uniquely_divisible


@given(groups, groups)
def test_two_of_three(a, c):
    middle = a + c
    holds = [uniquely_divisible(a), uniquely_divisible(middle), uniquely_divisible(c)]
    assert sum(holds) != 2


@given(groups, prime_sets, st.integers(1, 5))
def test_divisible_and_torsion_free_facts(a, primes, k):
    m = prod(primes.select(list(range(2, 14)))[:3]) ** k if not primes.is_empty else 1
    if divisibility_predicates(a, primes).is_uniquely_I_divisible:
        assert m_torsion(a, m).is_trivial
        assert mod_m(a, m).is_trivial
    if divisibility_predicates(a, primes).is_I_torsion_free:
        assert m_torsion(a, m).is_trivial

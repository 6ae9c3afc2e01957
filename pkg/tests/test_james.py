import pytest
from hypothesis import given, strategies as st
from sympy import primerange

from freesummand.james import james_divides, james_number, james_valuation, padic_valuation
from freesummand.verification import naive_james_value


@pytest.mark.parametrize("p, n, v", [(2, 48, 4), (5, 48, 0), (3, 27, 3)])
def test_padic_valuation(p, n, v):
    assert padic_valuation(p, n) == v


@pytest.mark.parametrize("p, q, v", [(2, 5, 6), (3, 5, 2), (5, 5, 1), (7, 5, 0), (2, 6, 6)])
def test_james_valuation(p, q, v):
    assert james_valuation(p, q) == v


@pytest.mark.parametrize(
    "q, value", [(1, 1), (2, 2), (3, 24), (4, 24), (5, 2880), (6, 2880), (7, 2**7 * 3**4 * 5 * 7)]
)
def test_james_number(q, value):
    assert james_number(q).value == value


def test_factorization_of_b5():
    b = james_number(5)
    assert dict(b.exponents) == {2: 6, 3: 2, 5: 1}
    assert b.to_json() == {"q": 5, "value": "2880", "factorization": {"2": 6, "3": 2, "5": 1}}


def test_divides_examples():
    yes = james_divides(3, 24)
    assert yes.divides and yes.quotient == 1
    no = james_divides(3, 25)
    assert not no.divides and no.failing_prime == 2
    assert james_divides(1, 7).divides


def test_invalid_arguments():
    with pytest.raises(ValueError):
        james_number(0)
    with pytest.raises(ValueError):
        padic_valuation(4, 8)
    with pytest.raises(ValueError):
        james_valuation(2, 0)


def rescan(p, q):
    if q < p:
        return 0
    best = 0
    for s in range(1, (q - 1) // (p - 1) + 1):
        t, v = s, 0
        while t % p == 0:
            t //= p
            v += 1
        best = max(best, s + v)
    return best


def test_valuation_matches_rescan():
    for q in range(1, 65):
        for p in primerange(2, q + 1):
            assert james_valuation(p, q) == rescan(p, q)


def test_value_matches_naive_product():
    for q in range(1, 65):
        assert james_number(q).value == naive_james_value(q)


def test_monotone_and_growing():
    for q in range(1, 64):
        for p in primerange(2, 66):
            assert james_valuation(p, q) <= james_valuation(p, q + 1)
        assert james_number(q + 1).value % james_number(q).value == 0
    for q in range(2, 65):
        assert james_valuation(2, q) >= q - 1


@given(st.sampled_from([2, 3, 5, 7, 101]), st.integers(1, 10**30), st.integers(1, 10**30))
def test_valuation_is_additive(p, m, n):
    assert padic_valuation(p, m * n) == padic_valuation(p, m) + padic_valuation(p, n)

import math
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from oracles import X, sylvester_resultant
from skolemprime import arith
from skolemprime.errors import DegenerateInputError, InvalidArgumentError, PartialFactorizationError

coeff = st.integers(-9, 9)


def monic(max_deg=5):
    return st.lists(coeff, min_size=1, max_size=max_deg).map(lambda c: tuple(c) + (1,))


def nonzero_poly(max_deg=4):
    return st.lists(coeff, min_size=1, max_size=max_deg + 1).map(arith.poly).filter(bool)


def test_poly_canonical_form():
    assert arith.poly([1, 2, 0, 0]) == (1, 2)
    assert arith.poly([0, 0]) == ()
    assert arith.degree(()) == -1
    assert arith.degree((3, 0, 1)) == 2


@pytest.mark.parametrize("P,Q,expected", [
    ((1, 0, 1), (3, 4), 25),
    ((1, 0, 1), (1,), 1),
    ((-2, 0, 1), (0, 0, 0, 1), -8),
])
def test_resultant_examples(P, Q, expected):
    assert arith.resultant(P, Q) == expected


@pytest.mark.parametrize("P,expected", [((1, 0, 1), -4), ((-2, 0, 1), 8), ((-1, -1, 0, 1), -23)])
def test_discriminant_examples(P, expected):
    assert arith.discriminant(P) == expected


def test_discriminant_of_repeated_root_is_degenerate():
    with pytest.raises(DegenerateInputError) as exc:
        arith.discriminant((1, 2, 1))
    assert exc.value.value == 0


def test_resultant_needs_monic_first_argument():
    with pytest.raises(InvalidArgumentError):
        arith.resultant((1, 2), (1, 1))


@settings(max_examples=300, deadline=None)
@given(monic(), nonzero_poly(6))
def test_resultant_matches_sylvester_determinant(P, Q):
    assert arith.resultant(P, Q) == sylvester_resultant(P, Q)


@settings(max_examples=300, deadline=None)
@given(monic(), nonzero_poly(), nonzero_poly())
def test_resultant_multiplicative_in_second_argument(P, Q, R):
    assert arith.resultant(P, Q) * arith.resultant(P, R) == arith.resultant(P, arith.poly_mul(Q, R))


@pytest.mark.parametrize("N,expected", [(78961, [281, 281]), (1, []), (30, [2, 3, 5])])
def test_factor_examples(N, expected):
    assert arith.factor_integer(N) == expected


def test_factor_random_64_bit():
    rng = random.Random(7)
    for _ in range(1000):
        N = rng.randrange(1, 2**64)
        f = arith.factor_integer(N)
        assert math.prod(f) == N
        assert all(sympy.isprime(p) for p in f)


def test_factor_large_semiprime_with_square():
    N = (10**9 + 7) * (10**12 + 39) * (2**31 - 1) ** 2
    assert arith.factor_integer(N) == sorted([10**9 + 7, 10**12 + 39, 2**31 - 1, 2**31 - 1])


def test_factor_budget_exhaustion_reports_partial_result():
    N = 12 * (2**61 - 1) * (2**89 - 1)
    with pytest.raises(PartialFactorizationError) as exc:
        arith.factor_integer(N, effort=20_000)
    assert exc.value.factors == [2, 2, 3]
    assert exc.value.cofactor == (2**61 - 1) * (2**89 - 1)


def test_factor_negative_uses_absolute_value():
    assert arith.factor_integer(-30) == [2, 3, 5]


def test_primality_against_sympy():
    rng = random.Random(3)
    small = range(20_000)
    big = [rng.randrange(2**90) for _ in range(500)] + [2**89 - 1, 2**127 - 1, 3317044064679887385961981]
    for n in list(small) + big:
        assert arith.is_prime(n) == sympy.isprime(n), n


@pytest.mark.parametrize("P,p,expected", [
    ((1, 0, 1), 5, [(1, 1), (1, 1)]),
    ((1, 0, 1), 3, [(2, 1)]),
    ((1, 0, 1), 2, [(1, 2)]),
])
def test_factor_degrees_examples(P, p, expected):
    assert arith.factor_degrees_mod_p(P, p) == expected


@settings(max_examples=200, deadline=None)
@given(monic(), st.sampled_from(arith.primes_up_to(50)))
def test_factor_degrees_match_sympy(P, p):
    _, fl = sympy.Poly(list(reversed(P)), X, modulus=p).factor_list()
    assert arith.factor_degrees_mod_p(P, p) == sorted((f.degree(), e) for f, e in fl)


@settings(max_examples=100, deadline=None)
@given(monic())
def test_squarefree_degrees_sum_to_degree(P):
    if arith.degree(P) >= 2:
        try:
            arith.discriminant(P)
        except DegenerateInputError:
            return
    for p in arith.primes_up_to(50):
        assert sum(d * m for d, m in arith.factor_degrees_mod_p(P, p)) == arith.degree(P)


def test_cyclotomic():
    assert arith.cyclotomic_poly(1) == (-1, 1)
    assert arith.cyclotomic_poly(5) == (1, 1, 1, 1, 1)
    assert arith.cyclotomic_poly(15) == (1, -1, 0, 1, -1, 1, 0, -1, 1)


def test_next_prime():
    assert arith.next_prime(1) == 2
    assert arith.next_prime(2) == 3
    assert arith.next_prime(2**31) == 2147483659

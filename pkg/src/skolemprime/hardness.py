"""Subset-sum instances encoded as zeros of periodic recurrences.

Each integer a_k is attached to a 0/1 selector of prime period p_k.  The
combined sequence b - sum a_k * selector_k(n) vanishes at n exactly when the
selectors that fire at n pick out a subset summing to b.  In the one-phase
variant a selector fires at n = 1 mod p_k, so by CRT and Dirichlet a solving
subset shows up as a zero at some prime index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from . import arith
from .errors import InvalidArgumentError, ResourceError
from .lrs import RecurrenceSpec, iter_recurrence

VARIANTS = ("zero_phase", "one_phase")
SUBSET_BUDGET = 30
SCAN_CAP = 10**6


@dataclass(frozen=True)
class SubsetSumInstance:
    a: tuple
    b: int

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", int(self.b))
        if not self.a:
            raise InvalidArgumentError("a subset-sum instance needs at least one integer")

    @property
    def m(self) -> int:
        return len(self.a)


def selector_primes(m: int, variant: str) -> list:
    """First m primes (zero_phase) or first m odd primes (one_phase)."""
    if variant not in VARIANTS:
        raise InvalidArgumentError(f"unknown variant {variant!r}")
    out, p = [], 1 if variant == "zero_phase" else 2
    while len(out) < m:
        p = arith.next_prime(p)
        out.append(p)
    return out


def _selector_value(n: int, p: int, variant: str) -> int:
    return int(n % p == (0 if variant == "zero_phase" else 1))


def selector_sequence(k: int, variant: str) -> RecurrenceSpec:
    """Period-p_k selector firing at residue 0 (zero_phase) or 1 (one_phase)."""
    if k < 1:
        raise InvalidArgumentError("selector index starts at 1")
    p = selector_primes(k, variant)[-1]
    coeffs = [0] * (p - 1) + [1]
    return RecurrenceSpec(coeffs, [_selector_value(n, p, variant) for n in range(p)])


def _poly_product(polys):
    out = (1,)
    for f in polys:
        out = arith.poly_mul(out, f)
    return out


def reduce_to_lrs(instance: SubsetSumInstance, variant: str) -> RecurrenceSpec:
    """One homogeneous recurrence for n -> b - sum a_k selector_k(n).

    The characteristic polynomial is lcm((x^(p_1) - 1)(x - 1), x^(p_2) - 1, ...,
    x^(p_m) - 1) = (x - 1)^2 prod Phi_(p_k).
    """
    primes = selector_primes(instance.m, variant)
    factors = [(-1, 1), (-1, 1)] + [arith.cyclotomic_poly(p) for p in primes]
    char = _poly_product(factors)          # ascending, monic
    r = len(char) - 1
    coeffs = [-char[r - i] for i in range(1, r + 1)]
    initial = [combined_value(instance, n, variant) for n in range(r)]
    return RecurrenceSpec(coeffs, initial)


def combined_value(instance: SubsetSumInstance, n: int, variant: str) -> int:
    """b - sum a_k selector_k(n), computed directly from residues."""
    primes = selector_primes(instance.m, variant)
    return instance.b - sum(a * _selector_value(n, p, variant) for a, p in zip(instance.a, primes))


def subset_sum_bruteforce(instance: SubsetSumInstance) -> Optional[tuple]:
    """Lexicographically first 1-based subset S with sum a_S = b, or None.

    The empty subset counts (it solves b = 0).
    """
    if instance.m > SUBSET_BUDGET:
        raise ResourceError(f"m={instance.m} exceeds the exhaustive budget of {SUBSET_BUDGET}")
    a, b = instance.a, instance.b
    # DFS visits index tuples in lexicographic order, so the first hit wins
    if b == 0:
        return ()
    return _first_in_lex_order(a, b)


def _first_in_lex_order(a, b):
    def dfs(start, total, chosen):
        for i in range(start, len(a)):
            t = total + a[i]
            cand = chosen + (i + 1,)
            if t == b:
                return cand
            hit = dfs(i + 1, t, cand)
            if hit is not None:
                return hit
        return None
    return dfs(0, 0, ())


def residue_system(subset, m: int, variant: str = "one_phase") -> list:
    """(r_k, p_k): residue 1 for k in the subset, 2 otherwise (never 0 mod p_k)."""
    primes = selector_primes(m, variant)
    chosen = set(subset)
    return [(1 if k in chosen else 2, p) for k, p in enumerate(primes, start=1)]


def crt(residues) -> tuple:
    """(r, P) with r = r_k mod p_k for every pair; moduli must be coprime."""
    r, P = 0, 1
    for rk, pk in residues:
        if pk < 1:
            raise InvalidArgumentError("moduli must be positive")
        if math.gcd(P, pk) != 1:
            raise InvalidArgumentError(f"modulus {pk} is not coprime to the others")
        # r + P*t = rk (mod pk)
        t = (rk - r) * pow(P, -1, pk) % pk if pk > 1 else 0
        r, P = r + P * t, P * pk
    return r % P, P


def prime_in_progression(residues, cap: int = SCAN_CAP) -> int:
    """Smallest prime in r + P*N after combining the congruences by CRT."""
    r, P = crt(residues)
    if math.gcd(r, P) != 1:
        raise InvalidArgumentError(f"combined residue {r} shares a factor with {P}")
    n = r
    for _ in range(cap):
        if arith.is_prime(n):
            return n
        n += P
    raise ResourceError(f"no prime found in {r} + {P}*N within {cap} steps")


def scan_prime_zero(spec: RecurrenceSpec, limit: int) -> Optional[int]:
    """Smallest prime p <= limit with spec's p-th term equal to zero."""
    primes = set(arith.primes_up_to(limit))
    for n, val in enumerate(iter_recurrence(spec)):
        if n > limit:
            return None
        if n in primes and val == 0:
            return n


def witness_prime(instance: SubsetSumInstance) -> Optional[int]:
    """The prime zero promised by a solving subset, or None if unsolvable."""
    subset = subset_sum_bruteforce(instance)
    if subset is None:
        return None
    return prime_in_progression(residue_system(subset, instance.m))


def cyclotomic_roots(instance: SubsetSumInstance, variant: str, max_degree: int = 48):
    """(K, roots) expressing the reduced sequence over Q(zeta_P), P = prod p_k.

    The roots are those of the minimal recurrence, given with multiplicities;
    returns None when phi(P) exceeds ``max_degree``.
    """
    from .lrs import _root_multiplicity, minimal_recurrence
    from .number_field import NumberField

    primes = selector_primes(instance.m, variant)
    P = math.prod(primes)
    if math.prod(p - 1 for p in primes) > max_degree:
        return None
    K = NumberField.cyclotomic(P)
    minimal = minimal_recurrence(reduce_to_lrs(instance, variant))
    if minimal.is_zero:
        return None
    charpoly = [K.element([c]) for c in minimal.characteristic_poly()]
    zeta = K.theta
    candidates = [K.one] + [zeta ** (j * (P // p)) for p in primes for j in range(1, p)]
    roots = []
    for lam in candidates:
        k = _root_multiplicity(charpoly, lam)
        if k:
            roots.append((lam, k))
    return K, tuple(roots)

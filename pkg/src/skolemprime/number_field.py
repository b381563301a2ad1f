"""Arithmetic in K = Q(theta) for theta a root of a monic integer polynomial.

Elements are stored by their coordinates in the power basis
1, theta, ..., theta^(d-1).  Integer coordinates mean the element lies in
Z[theta], which sits inside the ring of integers; we never compute an
integral basis, so primes dividing the index [O : Z[theta]] are only
detected (through the discriminant of the defining polynomial), not resolved.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import arith
from .errors import InvalidArgumentError, NotGaloisError

try:  # big-integer speedups for long powers; plain ints work too
    from gmpy2 import mpz as _big
except ImportError:  # pragma: no cover
    _big = int

__all__ = [
    "NumberField", "FieldElement", "SplittingData",
    "nf_add", "nf_sub", "nf_mul", "nf_pow", "nf_norm", "nf_pow_mod",
    "splitting_data", "ramified_candidates", "clear_denominators",
]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or not hasattr(x, "__index__"):
        raise InvalidArgumentError(f"not an exact rational: {x!r}")
    return Fraction(int(x))


@functools.lru_cache(maxsize=64)
def _reduction_table(mu: tuple) -> tuple:
    """Rows j give theta^(d+j) in the power basis, j = 0 .. d-2."""
    d = len(mu) - 1
    row = [-c for c in mu[:d]]  # theta^d
    rows = []
    for _ in range(max(d - 1, 0)):
        rows.append(tuple(row))
        top = row[-1]
        row = [0] + row[:-1]
        if top:
            for i in range(d):
                row[i] -= top * mu[i]
    return tuple(rows)


def _mul_coords(a: Sequence, b: Sequence, mu: tuple) -> list:
    d = len(mu) - 1
    prod = [0] * (2 * d - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
    res = prod[:d]
    for j, c in enumerate(prod[d:]):
        if c:
            for i, t in enumerate(_reduction_table(mu)[j]):
                if t:
                    res[i] += c * t
    return res


def _mulmod_coords(a, b, mu, m):
    return [c % m for c in _mul_coords(a, b, mu)]


def _pow_int_coords(coords: Sequence[int], n: int, mu: tuple) -> list:
    d = len(mu) - 1
    result = [_big(1)] + [_big(0)] * (d - 1)
    base = [_big(c) for c in coords]
    while n:
        if n & 1:
            result = _mul_coords(result, base, mu)
        n >>= 1
        if n:
            base = _mul_coords(base, base, mu)
    return [int(c) for c in result]


def _pow_mod_coords(coords: Sequence[int], n: int, mu: tuple, m: int) -> list:
    d = len(mu) - 1
    result = [1 % m] + [0] * (d - 1)
    base = [c % m for c in coords]
    while n:
        if n & 1:
            result = _mulmod_coords(result, base, mu, m)
        n >>= 1
        if n:
            base = _mulmod_coords(base, base, mu, m)
    return result


@dataclass(frozen=True)
class NumberField:
    """Q[x]/(defining_poly) with defining_poly monic, integral, irreducible.

    Irreducibility is the caller's responsibility.  ``galois_claimed`` is an
    assertion that K/Q is Galois; it is checked only indirectly, when a prime
    splits non-uniformly.
    """

    defining_poly: tuple
    galois_claimed: bool = False

    def __post_init__(self):
        p = arith.poly(self.defining_poly)
        if len(p) < 2:
            raise InvalidArgumentError("defining polynomial must have degree >= 1")
        if p[-1] != 1:
            raise InvalidArgumentError("defining polynomial must be monic")
        object.__setattr__(self, "defining_poly", p)

    @property
    def degree(self) -> int:
        return len(self.defining_poly) - 1

    @classmethod
    def rationals(cls) -> "NumberField":
        return cls((0, 1), galois_claimed=True)

    @classmethod
    def quadratic(cls, D: int) -> "NumberField":
        """Q(sqrt(D)) presented by x^2 - D."""
        return cls((-D, 0, 1), galois_claimed=True)

    @classmethod
    def gaussian(cls) -> "NumberField":
        return cls.quadratic(-1)

    @classmethod
    def cyclotomic(cls, n: int) -> "NumberField":
        return cls(arith.cyclotomic_poly(n), galois_claimed=True)

    def element(self, coords: Iterable) -> "FieldElement":
        c = [_as_fraction(x) for x in coords]
        if len(c) > self.degree:
            raise InvalidArgumentError(
                f"{len(c)} coordinates given for a degree-{self.degree} field")
        c += [Fraction(0)] * (self.degree - len(c))
        return FieldElement(self, tuple(c))

    def __call__(self, *coords) -> "FieldElement":
        if len(coords) == 1 and isinstance(coords[0], (list, tuple)):
            coords = coords[0]
        return self.element(coords)

    @property
    def zero(self) -> "FieldElement":
        return self.element([0])

    @property
    def one(self) -> "FieldElement":
        return self.element([1])

    @property
    def theta(self) -> "FieldElement":
        if self.degree == 1:
            return self.element([-self.defining_poly[0]])
        return self.element([0, 1])

    def __repr__(self):
        return f"NumberField({list(self.defining_poly)}, galois_claimed={self.galois_claimed})"


@dataclass(frozen=True)
class FieldElement:
    field: NumberField = field(repr=False)
    coords: tuple

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise InvalidArgumentError("elements belong to different fields")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field.element([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return FieldElement(self.field, tuple(a * other for a in self.coords))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, tuple(_mul_coords(self.coords, other.coords,
                                                          self.field.defining_poly)))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return nf_pow(self.field, self, n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __bool__(self):
        return any(self.coords)

    def inverse(self) -> "FieldElement":
        if not self:
            raise ZeroDivisionError("inverse of zero in a number field")
        return FieldElement(self.field, _inverse(self.coords, self.field.defining_poly))

    @property
    def is_integral_coords(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    @property
    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def int_coords(self) -> tuple:
        if not self.is_integral_coords:
            raise InvalidArgumentError("element has non-integer coordinates")
        return tuple(int(c) for c in self.coords)

    def norm(self) -> Fraction:
        return nf_norm(self.field, self)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coords):
            if c:
                mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
                coef = str(c)
                if mono and c == 1:
                    coef = ""
                elif mono and c == -1:
                    coef = "-"
                elif mono and c.denominator != 1:
                    coef = f"({c})*"
                elif mono:
                    coef += "*"
                terms.append(coef + mono)
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _inverse(coords, mu) -> tuple:
    """Inverse of a nonzero element through the extended Euclidean algorithm over Q."""
    d = len(mu) - 1

    def trim(p):
        p = list(p)
        while p and p[-1] == 0:
            p.pop()
        return p

    def sub_mul(a, b, c, shift):  # a - c*x^shift*b
        a = list(a) + [Fraction(0)] * max(0, len(b) + shift - len(a))
        for i, y in enumerate(b):
            a[i + shift] -= c * y
        return trim(a)

    r0, r1 = trim(Fraction(c) for c in mu), trim(coords)
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q_terms = []
        r = r0
        while len(r) >= len(r1):
            c = r[-1] / r1[-1]
            shift = len(r) - len(r1)
            q_terms.append((c, shift))
            r = sub_mul(r, r1, c, shift)
        s = s0
        for c, shift in q_terms:
            s = sub_mul(s, s1, c, shift)
        r0, r1, s0, s1 = r1, r, s1, s
    if not r1:
        raise ZeroDivisionError("element is a zero divisor (defining polynomial reducible?)")
    inv = [c / r1[0] for c in s1]
    inv += [Fraction(0)] * (d - len(inv))
    return tuple(inv[:d])


def _check_same(K, *elts):
    for a in elts:
        if not isinstance(a, FieldElement) or len(a.coords) != K.degree:
            raise InvalidArgumentError("coordinate length does not match the field degree")


def nf_add(K: NumberField, a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(K, a, b)
    return a + b


def nf_sub(K: NumberField, a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(K, a, b)
    return a - b


def nf_mul(K: NumberField, a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(K, a, b)
    return a * b


def nf_pow(K: NumberField, a: FieldElement, n: int) -> FieldElement:
    """a**n by square-and-multiply on the integer numerator.

    Negative n goes through the inverse.
    """
    _check_same(K, a)
    if n < 0:
        return nf_pow(K, a.inverse(), -n)
    den = math.lcm(*(c.denominator for c in a.coords))
    num = [int(c * den) for c in a.coords]
    powed = _pow_int_coords(num, n, K.defining_poly)
    dn = den ** n
    return FieldElement(K, tuple(Fraction(c, dn) for c in powed))


def nf_norm(K: NumberField, a: FieldElement) -> Fraction:
    """N(a) as Res(defining_poly, coordinate polynomial of a)."""
    _check_same(K, a)
    if not a:
        return Fraction(0)
    den = math.lcm(*(c.denominator for c in a.coords))
    num = arith.poly(int(c * den) for c in a.coords)
    return Fraction(arith.resultant(K.defining_poly, num), den ** K.degree)


def nf_pow_mod(K: NumberField, a: FieldElement, n: int, q: int) -> tuple:
    """Coordinates of a**n in Z[x]/(q, defining_poly), each in range(q)."""
    _check_same(K, a)
    if not a.is_integral_coords:
        raise InvalidArgumentError("nf_pow_mod needs integer coordinates; clear denominators first")
    if not arith.is_prime(q):
        raise InvalidArgumentError(f"modulus {q} is not prime")
    if n < 0:
        raise InvalidArgumentError("exponent must be non-negative")
    return tuple(_pow_mod_coords(a.int_coords(), n, K.defining_poly, q))


@dataclass(frozen=True)
class SplittingData:
    """Decomposition shape of pO.

    ``shape`` lists (inertial degree, ramification index) per prime above p
    as read off the defining polynomial mod p.  When ``status`` is
    ``"index_obstructed"`` the read-off is not guaranteed and e, f, g are
    hints.  For non-uniform shapes (only possible without ``galois_claimed``)
    f is the lcm of the degrees and e the largest index.
    """

    p: int
    e: int
    f: int
    g: int
    status: str
    shape: tuple = ()

    @property
    def certified(self) -> bool:
        return self.status == "certified"

    @property
    def uniform(self) -> bool:
        return len(set(self.shape)) <= 1

    @property
    def unramified(self) -> bool:
        return self.certified and all(e == 1 for _, e in self.shape)


def _dedekind_p_maximal(mu: tuple, p: int) -> bool:
    """Dedekind's criterion: True iff p does not divide [O : Z[theta]]."""
    mu_bar = arith.gf_reduce(list(mu), p)
    rad = [1]
    for fac, _ in arith.gf_squarefree_decomposition(mu_bar, p):
        rad = arith.gf_mul(rad, fac, p)
    h, r = arith.gf_divmod(mu_bar, rad, p)
    assert not r
    lifted = arith.poly_mul(tuple(rad), tuple(h))
    diff = arith.poly_sub(lifted, mu)
    assert all(c % p == 0 for c in diff)
    F = arith.gf_reduce([c // p for c in diff], p)
    t = arith.gf_gcd(arith.gf_gcd(F, rad, p), h, p)
    return len(t) <= 1


def splitting_data(K: NumberField, p: int) -> SplittingData:
    """(e, f, g) for the prime p, Dedekind-style from the defining polynomial mod p."""
    if not arith.is_prime(p):
        raise InvalidArgumentError(f"{p} is not prime")
    shape = tuple(arith.factor_degrees_mod_p(K.defining_poly, p))
    squarefree = all(e == 1 for _, e in shape)
    if squarefree or _dedekind_p_maximal(K.defining_poly, p):
        status = "certified"
    else:
        status = "index_obstructed"
    uniform = len(set(shape)) == 1
    if not uniform and K.galois_claimed and status == "certified":
        raise NotGaloisError(
            f"prime {p} splits non-uniformly {list(shape)} in a field claimed Galois")
    e = max(m for _, m in shape)
    f = math.lcm(*(deg for deg, _ in shape))
    return SplittingData(p=p, e=e, f=f, g=len(shape), status=status, shape=shape)


def ramified_candidates(K: NumberField) -> tuple:
    """Primes dividing disc(defining_poly), sorted.

    A superset of the ramified primes and of the primes dividing the index.
    """
    if K.degree == 1:
        return ()
    return tuple(arith.prime_divisors(arith.discriminant(K.defining_poly)))


def clear_denominators(K: NumberField, elements: Sequence[FieldElement]):
    """(q, [q*a for a in elements]) with q the lcm of all coordinate denominators."""
    _check_same(K, *elements)
    q = math.lcm(1, *(c.denominator for a in elements for c in a.coords))
    return q, [a * q for a in elements]


def divisors(n: int) -> list:
    return [k for k in range(1, n + 1) if n % k == 0]

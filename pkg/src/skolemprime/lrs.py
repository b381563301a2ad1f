"""Linear recurrence sequences in recurrence form and exponential-polynomial form.

A :class:`RecurrenceSpec` holds rational coefficients and initial values,
u_n = a_1 u_(n-1) + ... + a_l u_(n-l).  An :class:`ExpPolySequence` holds
u_n = sum_i A_i(n) lambda_i^n over a declared number field.  Conversion from
the first to the second requires the caller to supply the field and the
characteristic roots; they are verified, never searched for.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from . import arith
from .errors import InternalConsistencyError, InvalidArgumentError, InvalidRootsError
from .number_field import (FieldElement, NumberField, _big, _mul_coords, _mulmod_coords,
                           _pow_mod_coords)

__all__ = [
    "RecurrenceSpec", "ExpPolySequence", "Scaled",
    "eval_recurrence", "eval_recurrence_mod", "iter_recurrence", "minimal_recurrence",
    "to_exp_poly", "eval_exp_poly", "eval_exp_poly_mod", "associated_simple",
    "scale_to_integral",
]

ITERATION_LIMIT = 10**4


def _frac(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)) and not hasattr(x, "__index__"):
        raise InvalidArgumentError(f"not an exact rational: {x!r}")
    return Fraction(x) if isinstance(x, Fraction) else Fraction(int(x))


@dataclass(frozen=True)
class RecurrenceSpec:
    """u_n = coeffs[0]*u_(n-1) + ... + coeffs[-1]*u_(n-order).

    Order 0 (both tuples empty) is the identically-zero sequence.
    """

    coeffs: tuple
    initial: tuple

    def __post_init__(self):
        a = tuple(_frac(x) for x in self.coeffs)
        u = tuple(_frac(x) for x in self.initial)
        if len(a) != len(u):
            raise InvalidArgumentError(
                f"order mismatch: {len(a)} coefficients but {len(u)} initial values")
        if a and a[-1] == 0:
            raise InvalidArgumentError("last recurrence coefficient must be nonzero")
        object.__setattr__(self, "coeffs", a)
        object.__setattr__(self, "initial", u)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return self.order == 0

    def characteristic_poly(self) -> tuple:
        """x^l - a_1 x^(l-1) - ... - a_l, ascending Fractions."""
        l = self.order
        c = [Fraction(0)] * (l + 1)
        c[l] = Fraction(1)
        for j, a in enumerate(self.coeffs, start=1):
            c[l - j] = -a
        return tuple(c)

    def terms(self, count: int) -> list:
        it = iter_recurrence(self)
        return [next(it) for _ in range(count)]


def iter_recurrence(spec: RecurrenceSpec):
    """Yield u_0, u_1, ... forever (ints when everything is integral)."""
    a, u = spec.coeffs, spec.initial
    if not a:
        while True:
            yield Fraction(0)
    if all(x.denominator == 1 for x in a + u):
        a = [int(x) for x in a]
        u = [int(x) for x in u]
    window = list(u)
    yield from window
    rev = a[::-1]
    while True:
        nxt = sum(c * x for c, x in zip(rev, window) if c)
        window.append(nxt)
        del window[0]
        yield nxt


def _companion_power_first_row(spec: RecurrenceSpec, n: int, mod: int | None = None):
    # state s_n = (u_n, ..., u_(n+l-1)); s_(n+1) = C s_n
    l = spec.order
    if mod is None:
        conv = lambda x: x  # noqa: E731
        red = lambda x: x  # noqa: E731
    else:
        conv = lambda x: x.numerator * pow(x.denominator, -1, mod) % mod  # noqa: E731
        red = lambda x: x % mod  # noqa: E731
    C = [[0] * l for _ in range(l)]
    for i in range(l - 1):
        C[i][i + 1] = 1
    for j, a in enumerate(spec.coeffs):
        C[l - 1][l - 1 - j] = conv(a)

    def matmul(X, Y):
        return [[red(sum(X[i][k] * Y[k][j] for k in range(l) if X[i][k])) for j in range(l)]
                for i in range(l)]

    R = [[int(i == j) for j in range(l)] for i in range(l)]
    while n:
        if n & 1:
            R = matmul(R, C)
        n >>= 1
        if n:
            C = matmul(C, C)
    s0 = [conv(x) for x in spec.initial]
    return red(sum(R[0][k] * s0[k] for k in range(l)))


def eval_recurrence(spec: RecurrenceSpec, n: int) -> Fraction:
    """Exact u_n: plain iteration up to 10^4, companion-matrix powering beyond."""
    if n < 0:
        raise InvalidArgumentError("index must be non-negative")
    if spec.is_zero:
        return Fraction(0)
    if n < spec.order:
        return spec.initial[n]
    if n <= ITERATION_LIMIT:
        it = iter_recurrence(spec)
        for _ in range(n):
            next(it)
        return Fraction(next(it))
    return Fraction(_companion_power_first_row(spec, n))


def eval_recurrence_mod(spec: RecurrenceSpec, n: int, q: int) -> int:
    """u_n mod q; every denominator must be invertible mod q."""
    if spec.is_zero:
        return 0
    if any(math.gcd(x.denominator, q) != 1 for x in spec.coeffs + spec.initial):
        raise InvalidArgumentError(f"a denominator is not invertible modulo {q}")
    return _companion_power_first_row(spec, n, mod=q)


def _rank(rows):
    M = [list(r) for r in rows]
    rank = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for r in range(len(M)):
            if r != rank and M[r][c]:
                f = M[r][c] / M[rank][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[rank])]
        rank += 1
    return rank


def _solve(A, b):
    """Solve a nonsingular square system by Gauss-Jordan elimination."""
    n = len(A)
    M = [list(A[i]) + [b[i]] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c]), None)
        if piv is None:
            raise InternalConsistencyError("singular linear system")
        M[c], M[piv] = M[piv], M[c]
        inv = 1 / M[c][c] if not isinstance(M[c][c], FieldElement) else M[c][c].inverse()
        M[c] = [x * inv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c]:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [M[i][n] for i in range(n)]


def minimal_recurrence(spec: RecurrenceSpec) -> RecurrenceSpec:
    """Shortest recurrence satisfied by the sequence (Hankel rank profile)."""
    l = spec.order
    if l == 0:
        return spec
    u = [Fraction(x) for x in spec.terms(2 * l)]
    H = [[u[i + j] for j in range(l)] for i in range(l)]
    r = _rank(H)
    if r == 0:
        return RecurrenceSpec((), ())
    if r == l:
        return spec
    # leading r x r Hankel block is nonsingular; solve for a_r .. a_1
    A = [[u[i + j] for j in range(r)] for i in range(r)]
    rev = _solve(A, [u[r + i] for i in range(r)])
    coeffs = tuple(reversed(rev))
    return RecurrenceSpec(coeffs, tuple(u[:r]))


# ---------------------------------------------------------------------------
# exponential polynomials
# ---------------------------------------------------------------------------

def _trim_poly(coeffs):
    c = list(coeffs)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class ExpPolySequence:
    """u_n = sum over terms (lam, A) of A(n) * lam^n.

    ``A`` is a tuple of field elements, the coefficients of a polynomial in n
    in ascending order.
    """

    field: NumberField
    terms: tuple

    def __post_init__(self):
        K = self.field
        clean = []
        for lam, A in self.terms:
            if not isinstance(lam, FieldElement) or lam.field != K:
                raise InvalidArgumentError("root is not an element of the sequence's field")
            if any(not isinstance(c, FieldElement) or c.field != K for c in A):
                raise InvalidArgumentError("coefficient is not an element of the sequence's field")
            A = _trim_poly(A)
            if not A:
                raise InvalidArgumentError("coefficient polynomial is zero")
            clean.append((lam, A))
        if not clean:
            raise InvalidArgumentError("an exponential polynomial needs at least one term")
        roots = [lam for lam, _ in clean]
        if len(set(roots)) != len(roots):
            raise InvalidArgumentError("characteristic roots must be pairwise distinct")
        object.__setattr__(self, "terms", tuple(clean))

    @classmethod
    def from_coords(cls, field: NumberField, terms) -> "ExpPolySequence":
        """Build from plain coordinate lists: [(lam_coords, [A0_coords, A1_coords, ...]), ...]."""
        return cls(field, tuple((field.element(lam), tuple(field.element(c) for c in A))
                                for lam, A in terms))

    @property
    def m(self) -> int:
        return len(self.terms)

    @property
    def integral_certified(self) -> bool:
        return all(lam.is_integral_coords and all(c.is_integral_coords for c in A)
                   for lam, A in self.terms)

    @property
    def is_simple(self) -> bool:
        return all(len(A) == 1 for _, A in self.terms)

    @property
    def has_rational_coefficients(self) -> bool:
        return all(c.is_rational for _, A in self.terms for c in A)

    def __call__(self, n: int) -> FieldElement:
        return eval_exp_poly(self, n)


def _coeff_at(A, n):
    """A(n) for a polynomial with field-element coefficients."""
    acc = A[-1]
    for c in reversed(A[:-1]):
        acc = acc * n + c
    return acc


def _int_pow_raw(coords, n, mu):
    d = len(mu) - 1
    result = [_big(1)] + [_big(0)] * (d - 1)
    base = [_big(c) for c in coords]
    while n:
        if n & 1:
            result = _mul_coords(result, base, mu)
        n >>= 1
        if n:
            base = _mul_coords(base, base, mu)
    return result


def _eval_int_coords(seq: ExpPolySequence, n: int) -> list:
    mu = seq.field.defining_poly
    d = seq.field.degree
    total = [_big(0)] * d
    for lam, A in seq.terms:
        a_n = _coeff_at(A, n).int_coords()
        if not any(a_n):
            continue
        p = _mul_coords([_big(c) for c in a_n], _int_pow_raw(lam.int_coords(), n, mu), mu)
        total = [x + y for x, y in zip(total, p)]
    return [int(c) for c in total]


def eval_exp_poly(seq: ExpPolySequence, n: int) -> FieldElement:
    """Exact u_n.  Coefficient size grows like n*log|lambda|; callers cap n."""
    if n < 0:
        raise InvalidArgumentError("index must be non-negative")
    K = seq.field
    if seq.integral_certified:
        return K.element(_eval_int_coords(seq, n))
    total = K.zero
    for lam, A in seq.terms:
        total = total + _coeff_at(A, n) * lam ** n
    return total


def _eval_mod(seq: ExpPolySequence, n: int, m: int) -> list:
    mu = seq.field.defining_poly
    d = seq.field.degree
    total = [0] * d
    for lam, A in seq.terms:
        a_n = [0] * d
        for c in reversed(A):
            a_n = [(x * n + y) % m for x, y in zip(a_n, c.int_coords())]
        if not any(a_n):
            continue
        p = _mulmod_coords(a_n, _pow_mod_coords(lam.int_coords(), n, mu, m), mu, m)
        total = [(x + y) % m for x, y in zip(total, p)]
    return total


def eval_exp_poly_mod(seq: ExpPolySequence, n: int, q: int) -> tuple:
    """Image of u_n in Z[x]/(q, mu); a nonzero image proves u_n != 0."""
    if not seq.integral_certified:
        raise InvalidArgumentError("modular evaluation needs an integral sequence")
    if not arith.is_prime(q):
        raise InvalidArgumentError(f"modulus {q} is not prime")
    if n < 0:
        raise InvalidArgumentError("index must be non-negative")
    return tuple(_eval_mod(seq, n, q))


def associated_simple(seq: ExpPolySequence):
    """(v, is_zero) with v_n = sum A_i(0) lambda_i^n.

    When every A_i(0) vanishes, v is identically zero: returns (None, True).
    """
    terms = tuple((lam, (A[0],)) for lam, A in seq.terms if A[0])
    if not terms:
        return None, True
    if terms == seq.terms:
        return seq, False
    return ExpPolySequence(seq.field, terms), False


class Scaled(NamedTuple):
    """w_n = multiplier * root_scale^n * u_n, with integral coordinates."""

    sequence: ExpPolySequence
    root_scale: int
    multiplier: int


def scale_to_integral(seq: ExpPolySequence) -> Scaled:
    """Clear denominators without changing the zero set."""
    q = math.lcm(1, *(c.denominator for lam, _ in seq.terms for c in lam.coords))
    M = math.lcm(1, *(c.denominator for _, A in seq.terms for a in A for c in a.coords))
    if q == 1 and M == 1:
        return Scaled(seq, 1, 1)
    terms = tuple((lam * q, tuple(a * M for a in A)) for lam, A in seq.terms)
    return Scaled(ExpPolySequence(seq.field, terms), q, M)


# ---------------------------------------------------------------------------
# recurrence form -> exponential polynomial
# ---------------------------------------------------------------------------

def _root_multiplicity(charpoly: list, lam: FieldElement) -> int:
    """Number of times (x - lam) divides charpoly (field-element coefficients)."""
    count = 0
    p = list(charpoly)
    while len(p) > 1:
        # synthetic division, highest degree first
        q = [p[-1]]
        for c in reversed(p[:-1]):
            q.append(c + q[-1] * lam)
        rem = q.pop()
        if rem:
            break
        count += 1
        p = list(reversed(q))
    return count


def to_exp_poly(spec: RecurrenceSpec, K: NumberField, roots: Sequence) -> ExpPolySequence:
    """Solve for the A_i given the roots (with multiplicity) of the minimal polynomial.

    ``roots`` is a list of (FieldElement, multiplicity).  Each root is checked
    against the minimal recurrence's characteristic polynomial.
    """
    minimal = minimal_recurrence(spec)
    if minimal.is_zero:
        raise InvalidRootsError("the sequence is identically zero; it has no root decomposition")
    r = minimal.order
    roots = [(K.element(lam.coords) if isinstance(lam, FieldElement) else K.element(lam), int(k))
             for lam, k in roots]
    if len({lam for lam, _ in roots}) != len(roots):
        raise InvalidRootsError("roots must be pairwise distinct")
    if sum(k for _, k in roots) != r:
        raise InvalidRootsError(
            f"multiplicities sum to {sum(k for _, k in roots)}, minimal order is {r}")
    charpoly = [K.element([c]) for c in minimal.characteristic_poly()]
    for lam, k in roots:
        if k < 1:
            raise InvalidRootsError("multiplicities must be positive")
        found = _root_multiplicity(charpoly, lam)
        if found != k:
            raise InvalidRootsError(
                f"root {lam} has multiplicity {found} in the minimal polynomial, not {k}")
    # confluent Vandermonde: u_n = sum_i sum_j c_ij n^j lam_i^n, n < r
    powers = []
    for lam, _ in roots:
        row, cur = [], K.one
        for _ in range(r):
            row.append(cur)
            cur = cur * lam
        powers.append(row)
    A_mat = []
    for n in range(r):
        A_mat.append([powers[i][n] * (n ** j) for i, (lam, k) in enumerate(roots)
                      for j in range(k)])
    rhs = [K.element([minimal.initial[n]]) for n in range(r)]
    sol = _solve(A_mat, rhs)
    terms, pos = [], 0
    for lam, k in roots:
        terms.append((lam, tuple(sol[pos:pos + k])))
        pos += k
    seq = ExpPolySequence(K, tuple(terms))
    for n in range(2 * r):
        if eval_exp_poly(seq, n) != K.element([eval_recurrence(spec, n)]):
            raise InternalConsistencyError("exponential polynomial does not reproduce the sequence")
    return seq

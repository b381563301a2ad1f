"""Exact integer and univariate polynomial arithmetic.

Polynomials are tuples of Python ints in ascending degree order; the zero
polynomial is the empty tuple.  Everything here is a pure function.

Polynomials over GF(p) use the same layout with coefficients in ``range(p)``.
"""

from __future__ import annotations

import functools
import math
import random
from typing import Iterable, Sequence

from .errors import DegenerateInputError, InvalidArgumentError, PartialFactorizationError

IntPolynomial = tuple  # tuple[int, ...], ascending coefficients


# ---------------------------------------------------------------------------
# dense integer polynomials
# ---------------------------------------------------------------------------

def poly(coeffs: Iterable[int]) -> tuple:
    """Canonical form: ints, trailing zeros stripped."""
    c = [int(a) for a in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(p: Sequence[int]) -> int:
    """Degree of a trimmed polynomial; -1 for the zero polynomial."""
    return len(p) - 1


def poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    res = list(a)
    for i, c in enumerate(b):
        res[i] += c
    return poly(res)


def poly_sub(a, b):
    return poly_add(a, [-c for c in b])


def poly_mul(a, b):
    if not a or not b:
        return ()
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] += x * y
    return poly(res)


def poly_scale(a, c):
    return poly(x * c for x in a)


def poly_eval(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_derivative(a):
    return poly(i * a[i] for i in range(1, len(a)))


def poly_divmod(a, b):
    """Division by a monic integer polynomial; exact over the integers."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if b[-1] != 1:
        raise InvalidArgumentError("poly_divmod needs a monic divisor")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return (), poly(r)
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            q[i - db] = c
            for j in range(db + 1):
                r[i - db + j] -= c * b[j]
    return poly(q), poly(r[:db])


def content(a) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g


def _pseudo_remainder(a, b):
    # lc(b)^(deg a - deg b + 1) * a  mod  b
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    e = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j in range(db + 1):
            r[shift + j] -= c * b[j]
        r = list(poly(r))
        e -= 1
    if e:
        f = lb ** e
        r = [x * f for x in r]
    return poly(r)


def _check_nonzero(p, name):
    if not p:
        raise InvalidArgumentError(f"{name} is the zero polynomial")


def resultant(P, Q) -> int:
    """Res(P, Q) for monic P, i.e. the product of Q over the roots of P.

    Fraction-free subresultant remainder sequence; the result is exact.
    """
    P, Q = poly(P), poly(Q)
    _check_nonzero(P, "P")
    _check_nonzero(Q, "Q")
    if P[-1] != 1:
        raise InvalidArgumentError("resultant expects a monic first argument")
    return _subresultant(P, Q)


def _subresultant(A, B) -> int:
    dA, dB = degree(A), degree(B)
    if dB == 0:
        return B[0] ** dA
    if dA == 0:
        return A[0] ** dB
    a, b = content(A), content(B)
    A = tuple(c // a for c in A)
    B = tuple(c // b for c in B)
    t = a ** dB * b ** dA
    s = 1
    if dA < dB:
        A, B = B, A
        if dA % 2 and dB % 2:
            s = -1
    g = h = 1
    while True:
        dA, dB = degree(A), degree(B)
        delta = dA - dB
        if dA % 2 and dB % 2:
            s = -s
        R = _pseudo_remainder(A, B)
        A = B
        if not R:
            return 0
        div = g * h ** delta
        B = tuple(c // div for c in R)
        g = A[-1]
        if delta:
            h = g ** delta // h ** (delta - 1)
        if degree(B) == 0:
            break
    dA = degree(A)
    h = B[0] ** dA // h ** (dA - 1)
    return s * t * h


def discriminant(P) -> int:
    """disc(P) = (-1)^(d(d-1)/2) Res(P, P') for monic P of degree d >= 2."""
    P = poly(P)
    _check_nonzero(P, "P")
    d = degree(P)
    if d < 2:
        raise InvalidArgumentError("discriminant needs degree >= 2")
    if P[-1] != 1:
        raise InvalidArgumentError("discriminant expects a monic polynomial")
    D = resultant(P, poly_derivative(P))
    if (d * (d - 1) // 2) % 2:
        D = -D
    if D == 0:
        raise DegenerateInputError("polynomial is not squarefree (discriminant 0)", value=0)
    return D


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple:
    """The n-th cyclotomic polynomial as an integer tuple."""
    if n < 1:
        raise InvalidArgumentError("cyclotomic index must be positive")
    num = poly([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            num, r = poly_divmod(num, cyclotomic_poly(d))
            assert not r
    return num


# ---------------------------------------------------------------------------
# primality and integer factorisation
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=8)
def primes_up_to(bound: int) -> tuple:
    if bound < 2:
        return ()
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, bound + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


_SMALL_PRIMES = primes_up_to(1000)
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# the first thirteen prime bases are deterministic below this bound
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981


def _strong_probable_prime(n, a):
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def jacobi(a: int, n: int) -> int:
    if n <= 0 or n % 2 == 0:
        raise InvalidArgumentError("Jacobi symbol needs odd positive modulus")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_probable_prime(n):
    if math.isqrt(n) ** 2 == n:
        return False
    D = 5
    while True:
        j = jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def half(x):
        if x % 2:
            x += n
        return (x // 2) % n

    U, V, Qk = 1, P % n, Q % n
    for bit in bin(d)[3:]:
        U = U * V % n
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = half(P * U + V), half(D * U + P * V)
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin below 3.3e24, Baillie-PSW above."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < 1_000_000:
        return True
    if n < _MR_DETERMINISTIC_LIMIT:
        return all(_strong_probable_prime(n, a) for a in _MR_BASES)
    return _strong_probable_prime(n, 2) and _strong_lucas_probable_prime(n)


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    n = max(n + 1, 2)
    while not is_prime(n):
        n += 1
    return n


def _pollard_brent(n, rng, budget):
    """(factor, steps used); factor is None if ``budget`` steps found nothing."""
    if n % 2 == 0:
        return 2, 1
    y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
    g = r = q = 1
    steps = 0
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        steps += r
        r *= 2
        if g == 1 and steps > budget:
            return None, steps
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return (g if g != n else None), steps


def factor_integer(N: int, effort: int = 2_000_000, trial_bound: int = 10**6) -> list:
    """Prime factorisation of |N| as a sorted list with multiplicity.

    Trial division up to ``trial_bound``, then Brent's variant of Pollard rho
    with ``effort`` bounding the total number of rho steps.  Raises
    :class:`PartialFactorizationError` when a composite cofactor survives.
    """
    if N == 0:
        raise InvalidArgumentError("cannot factor 0")
    n = abs(N)
    found = []
    for p in primes_up_to(trial_bound):
        if p * p > n:
            break
        while n % p == 0:
            found.append(p)
            n //= p
    if n == 1:
        return found
    if n <= trial_bound ** 2 or is_prime(n):
        found.append(n)
        return sorted(found)

    rng = random.Random(n)
    stack = [n]
    spent = 0
    leftovers = []
    while stack:
        m = stack.pop()
        if is_prime(m):
            found.append(m)
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack.extend([r, r])
            continue
        d = None
        if spent < effort:
            d, used = _pollard_brent(m, rng, effort - spent)
            spent += used
        if d is None:
            leftovers.append(m)
            continue
        stack.extend([d, m // d])
    if leftovers:
        cof = math.prod(leftovers)
        raise PartialFactorizationError(N, sorted(found), cof)
    return sorted(found)


def prime_divisors(N: int, **kw) -> list:
    return sorted(set(factor_integer(N, **kw)))


# ---------------------------------------------------------------------------
# polynomials over GF(p)
# ---------------------------------------------------------------------------

def _gf_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def gf_reduce(a, p):
    return _gf_trim([c % p for c in a])


def gf_sub(a, b, p):
    n = max(len(a), len(b))
    return _gf_trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                     for i in range(n)])


def gf_mul(a, b, p):
    if not a or not b:
        return []
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] += x * y
    return _gf_trim([c % p for c in res])


def gf_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], -1, p)
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] * inv % p
        if c:
            q[i - db] = c
            for j in range(db + 1):
                r[i - db + j] = (r[i - db + j] - c * b[j]) % p
    return _gf_trim(q), _gf_trim(r[:db])


def gf_monic(a, p):
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def gf_gcd(a, b, p):
    while b:
        a, b = b, gf_divmod(a, b, p)[1]
    return gf_monic(a, p)


def gf_powmod(base, e, mod, p):
    result = [1]
    base = gf_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = gf_divmod(gf_mul(result, base, p), mod, p)[1]
        e >>= 1
        if e:
            base = gf_divmod(gf_mul(base, base, p), mod, p)[1]
    return result


def gf_derivative(a, p):
    return _gf_trim([i * a[i] % p for i in range(1, len(a))])


def gf_squarefree_decomposition(f, p):
    """Monic f as a list of (squarefree factor, multiplicity) pairs."""
    f = gf_monic(gf_reduce(f, p), p)
    if len(f) <= 1:
        return []
    out = []
    df = gf_derivative(f, p)
    if not df:
        root = f[::p]  # f(x) = g(x^p) = g(x)^p over GF(p)
        return [(g, e * p) for g, e in gf_squarefree_decomposition(root, p)]
    c = gf_gcd(f, df, p)
    w = gf_divmod(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = gf_gcd(w, c, p)
        fac = gf_divmod(w, y, p)[0]
        if len(fac) > 1:
            out.append((gf_monic(fac, p), i))
        w = y
        c = gf_divmod(c, y, p)[0]
        i += 1
    if len(c) > 1:
        root = c[::p]
        out.extend((g, e * p) for g, e in gf_squarefree_decomposition(root, p))
    return out


def gf_distinct_degree(f, p):
    """Distinct-degree split of squarefree monic f: list of (degree, count)."""
    f = gf_monic(f, p)
    out = []
    x = [0, 1]
    h = x
    i = 1
    while len(f) - 1 >= 2 * i:
        h = gf_powmod(h, p, f, p)
        g = gf_gcd(f, gf_sub(h, x, p), p)
        if len(g) > 1:
            out.append((i, (len(g) - 1) // i))
            f = gf_divmod(f, g, p)[0]
            h = gf_divmod(h, f, p)[1]
        i += 1
    if len(f) > 1:
        out.append((len(f) - 1, 1))
    return out


def factor_degrees_mod_p(P, p: int) -> list:
    """Shape of the factorisation of P modulo p.

    Returns sorted (degree, multiplicity) pairs, one per distinct monic
    irreducible factor of P mod p.  The factors themselves are never built.
    """
    P = poly(P)
    if not P or degree(P) < 1 or P[-1] != 1:
        raise InvalidArgumentError("factor_degrees_mod_p expects a monic polynomial of degree >= 1")
    if not is_prime(p):
        raise InvalidArgumentError(f"{p} is not prime")
    shape = []
    for fac, e in gf_squarefree_decomposition(list(P), p):
        for deg, count in gf_distinct_degree(fac, p):
            shape.extend([(deg, e)] * count)
    return sorted(shape)

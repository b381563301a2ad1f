"""
From a recurrence to closed form and back
=========================================

Sequences can be given by a recurrence with initial values.  Given the
roots of the characteristic polynomial in some field, we can rewrite it
as a sum of polynomial-times-exponential terms.
"""

from fractions import Fraction

from skolemprime import (NumberField, RecurrenceSpec, eval_exp_poly, eval_recurrence,
                         minimal_recurrence, to_exp_poly)
from skolemprime.lrs import eval_recurrence_mod

# u_n = 3u_{n-1} - 2u_{n-2}, u_0 = -31, u_1 = -30.  That is 2^n - 32.
spec = RecurrenceSpec((3, -2), (-31, -30))
print([int(eval_recurrence(spec, n)) for n in range(8)])

# far terms modulo a prime, via companion matrix powers
print("u_(10^18) mod 1000003 =", eval_recurrence_mod(spec, 10**18, 1000003))

Q = NumberField.rationals()
closed = to_exp_poly(spec, Q, [(Q(2), 1), (Q(1), 1)])
for lam, A in closed.terms:
    print("root", lam, "coefficient", [str(c) for c in A])

# A redundant recurrence shrinks to its minimal form.
padded = RecurrenceSpec((4, -5, 2), (-31, -30, -28))
print("minimal order:", minimal_recurrence(padded).order)

# Repeated roots give polynomial coefficients: u_n = n * 2^n.
rep = RecurrenceSpec((4, -4), (0, 2))
seq = to_exp_poly(rep, Q, [(Q(2), 2)])
print([str(eval_exp_poly(seq, n)) for n in range(6)])

# Roots outside Q need a field that contains them.
fib = RecurrenceSpec((1, 1), (0, 1))
K = NumberField.quadratic(5)
phi = K(Fraction(1, 2), Fraction(1, 2))
psi = K(Fraction(1, 2), Fraction(-1, 2))
binet = to_exp_poly(fib, K, [(phi, 1), (psi, 1)])
print("F_30 from closed form:", eval_exp_poly(binet, 30))

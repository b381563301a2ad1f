"""
A Gaussian-integer sequence at prime indices
============================================

The sequence below lives in Q(i):

    u_n = (39+52i)^n + (39-52i)^n + 3(-60+25i)^n + 3(-60-25i)^n + 1

It is rational for every n.  We ask whether u_p = 0 for some prime p.
"""

from skolemprime import ExpPolySequence, NumberField, PrimePower, decide, eval_exp_poly
from skolemprime.skolem import summarize_value

K = NumberField.gaussian()
seq = ExpPolySequence.from_coords(K, [
    ((39, 52), [(1,)]),
    ((39, -52), [(1,)]),
    ((-60, 25), [(3,)]),
    ((-60, -25), [(3,)]),
    ((1,), [(1,)]),
])

# a few terms first
print([str(eval_exp_poly(seq, n)) for n in range(4)])

# Only primes dividing the norm of the associated value at n=1 can be zeros.
# Here that norm has a single prime factor, so one evaluation settles it.
report = decide(seq, PrimePower(1))
print("outcome:", report.outcome)
print("norm:", report.norms[1], "candidates:", report.candidates[1])

for ev in report.evidence:
    print(ev.role, "n =", ev.n, ev.status, "via", ev.method)

# the candidate value is big; print the rational coordinate in summary form
print(summarize_value(eval_exp_poly(seq, 281))[0])

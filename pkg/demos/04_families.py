"""
Zeros over prime-parameterised index families
=============================================

Four kinds of index sets are supported:

* p^k                          PrimePower(c)
* l p^k with l from a finite set    PrimePowerMultiple(c)
* l p^(k f(p))                 InertialFamily(c), Galois fields only
* sum of l_j p^(k_j f(p))      SumFamily(pattern)
"""

from skolemprime import (DecideConfig, ExpPolySequence, InertialFamily, NumberField,
                         PrimePower, PrimePowerMultiple, SumFamily, brute_force_oracle, decide)

Q = NumberField.rationals()

# 2^n - 32 vanishes at n = 5, a prime.
seq = ExpPolySequence.from_coords(Q, [((2,), [(1,)]), ((1,), [(-32,)])])
report = decide(seq, PrimePower(1))
print(report.outcome, report.zero)

# 2^n - 2^10 vanishes at n = 10 = 2 * 5, reachable with a multiplier.
seq = ExpPolySequence.from_coords(Q, [((2,), [(1,)]), ((1,), [(-2**10,)])])
print("p^k:", decide(seq, PrimePower(1)).outcome)
print("l p^k:", decide(seq, PrimePowerMultiple(2)).zero)

# In Q(i) the exponent also picks up the inertial degree of p.
# (1+i)^n + (1-i)^n - 32 vanishes at n = 9 = 3^2, and 3 is inert (f = 2),
# so the zero is reached with k = 1.
K = NumberField.gaussian()
seq = ExpPolySequence.from_coords(K, [((1, 1), [(1,)]), ((1, -1), [(1,)]), ((1,), [(-32,)])])
report = decide(seq, InertialFamily(1))
print("inertial:", report.outcome, report.zero, "candidates", report.candidates)

# A sum pattern: indices p + 2p^2.
seq = ExpPolySequence.from_coords(Q, [((2,), [(1,)]), ((1,), [(-2**10,)])])
print("sum:", decide(seq, SumFamily([(1, 1), (2, 1)])).outcome)

# Cross-check a small case against direct search over primes below 200.
seq = ExpPolySequence.from_coords(Q, [((3,), [(1,)]), ((1,), [(-3**7,)])])
print(decide(seq, PrimePower(1)).zero, brute_force_oracle(seq, PrimePower(1), 200))

# When exact evaluation is too expensive the report says so instead of guessing.
cfg = DecideConfig(exact_ceiling=2, witness_count=4)
report = decide(seq, PrimePower(1), cfg)
print(report.outcome, report.obstructions[:1])

# Reports serialize to stable JSON.
print(decide(seq, PrimePower(1)).to_json()[:200], "...")

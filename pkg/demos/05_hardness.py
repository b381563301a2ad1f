"""
Subset sum instances as recurrence zero questions
=================================================

For positive a_1..a_m and target b, build a rational recurrence tau with

    tau(n) = b - sum of a_k * [n = 1 mod p_k]

over small odd primes p_k.  A prime index zero exists exactly when some
subset of the a_k sums to b.
"""

from skolemprime.hardness import (SubsetSumInstance, cyclotomic_roots, reduce_to_lrs,
                                  selector_primes, subset_sum_bruteforce, witness_prime)
from skolemprime.lrs import eval_recurrence

inst = SubsetSumInstance((3, 5), 8)
tau = reduce_to_lrs(inst, "one_phase")
print("order", tau.order, "selector primes", selector_primes(inst.m, "one_phase"))
print("subset", subset_sum_bruteforce(inst))

# the witness is a prime that is 1 mod every chosen selector prime
p = witness_prime(inst)
print("witness prime", p, "tau(p) =", eval_recurrence(tau, p))

# without a solution there is no witness
print("b=4:", witness_prime(SubsetSumInstance((3, 5), 4)))

# Roots of tau live in a cyclotomic field, so the generator can hand the
# decision procedure an explicit closed form.
K, roots = cyclotomic_roots(inst, "one_phase")
print("closed form over a field of degree", K.degree, "with", len(roots), "distinct roots")

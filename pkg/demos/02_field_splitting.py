"""
How primes split in a few small fields
======================================

The decision procedure needs the inertial degree f(p) of each prime.
"""

from skolemprime import NumberField, ramified_candidates, splitting_data
from skolemprime.arith import discriminant

fields = {
    "Q(i)": NumberField.gaussian(),
    "Q(sqrt 2)": NumberField.quadratic(2),
    "Q(zeta_5)": NumberField.cyclotomic(5),
}

for name, K in fields.items():
    print(name, "disc:", discriminant(K.defining_poly),
          "ramified candidates:", ramified_candidates(K))
    for p in (2, 3, 5, 7, 11, 13):
        sd = splitting_data(K, p)
        print(f"  p={p}: e={sd.e} f={sd.f} g={sd.g} {sd.status}")

# In Q(i) an odd prime splits exactly when p = 1 mod 4.
K = fields["Q(i)"]
split = [p for p in range(3, 60, 2) if all(p % d for d in range(3, p, 2))
         and splitting_data(K, p).g == 2]
print("split odd primes below 60 in Q(i):", split)

# A cubic with non-cyclic Galois group: mark it non-Galois and
# the shapes may differ between primes.
K3 = NumberField((-2, 0, 0, 1), galois_claimed=False)
for p in (5, 7, 31):
    print(f"x^3-2 at p={p}:", splitting_data(K3, p).shape)

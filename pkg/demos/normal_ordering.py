"""Normal ordering in the Heisenberg algebra of a rank-one lattice."""

import random

from heiscat import heisenberg as hz
from heiscat.expr import parse_element
from heiscat.lattice import Lattice

lat = Lattice([[2]])

# q^(2) p^(3) 1_0: the coefficients are s^k(2) = 1, 2, 3
x = parse_element("q[1]^(2)*p[1]^(3)*1_{0}", lat)
print(x)

# the same normal form from one relation at a time, in random order
w = hz.AlgebraElement.word(hz.Word((("q", 0, 2), ("p", 0, 3)), 0))
for seed in range(3):
    print(seed, hz.rewrite(w, lat, "random", random.Random(seed)) == x)

# idempotents are orthogonal and absorb generators
print(hz.mul(hz.idempotent(1), hz.idempotent(0), lat))    # 0
print(hz.mul(hz.idempotent(3), hz.generator("p", 0, 2), lat))  # p^(2) 1_1

# vector-indexed generators: p_{-e1}^(2) = p p - p^(2)
print(hz.expand_vector_generator("p", (-1,), 2, lat))

# power sums a(n) and their commutators, [a(m), a(-n)] = delta m <e1, e1>
for m in (1, 2, 3):
    for n in (1, 2, 3):
        c = hz.commutator(hz.to_power_sums(0, m, lat), hz.to_power_sums(0, -n, lat), lat)
        print(f"[a({m}), a(-{n})] =", c)

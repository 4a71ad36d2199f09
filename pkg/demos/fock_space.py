"""Fock space: creation on the vacuum, annihilation, dimensions and faithfulness."""

from heiscat import fock, heisenberg as hz
from heiscat.lattice import Lattice

lat = Lattice([[1, 0], [0, 1]])
vac = fock.vacuum()

v = fock.act(hz.product([hz.generator("p", 0, 1), hz.generator("p", 1, 2)], lat), vac, lat)
print("p1 p2^(2) |0> =", v)
print("q1 on it      =", fock.act(hz.generator("q", 0, 1), v, lat))
print("q2^(2) on it  =", fock.act(hz.generator("q", 1, 2), v, lat))
print("q1 |0>        =", fock.act(hz.generator("q", 0, 1), vac, lat))

# graded dimensions: coefficients of prod (1 - t^m)^(-r)
for r in range(4):
    print(f"r={r}", [fock.graded_dim(n, r) for n in range(9)])
print("basis(2, 2):", fock.basis(2, 2))

# over multiplicities the partition sum matches, over parts it does not
print(fock.partition_sum_dim(2, 2), fock.partition_parts_dim(2, 2))

# a(-1) a(1) on degree 2, in the divided-power monomial basis (not diagonal there)
print(fock.basis(2, 2))
num = hz.mul(hz.to_power_sums(0, -1, lat), hz.to_power_sums(0, 1, lat), lat)
for row in fock.matrix_of(num, 2, lat):
    print([str(c) for c in row])

# every normal word acts differently on low degrees
for gram in ([[1]], [[1, 0], [0, 1]]):
    print(gram, fock.faithfulness_report(3, Lattice(gram)))

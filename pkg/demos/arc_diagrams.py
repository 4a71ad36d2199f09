"""Symmetrisers, arc-diagram symbols and the decategorified relation."""

import itertools

from heiscat import diagram as dg

# symmetriser and antisymmetriser of S_3
et, es = dg.e_triv(3), dg.e_sign(3)
print(et * et == et, es * es == es, et * es)

cycle = dg.GroupAlgebraElement.of(dg.from_cycles(3, (1, 2, 3)))
print("absorbs a 3-cycle:", cycle * et == et)

for lam in [(3,), (2, 1), (1, 1, 1)]:
    e = dg.young_symmetriser(lam)
    print(lam, "idempotent:", e * e == e, "terms:", len(e))

# <1,1|n,n|0> in the spanning symbols
for n in range(4):
    print(f"<1,1|{n},{n}|0> =", dg.rewrite_link(dg.sdcross(1, n, 0)))

# <m,n|0,0|0> splits into i! C(m,i) C(n,i) copies of <0,0|m-i,n-i|i>
print(dg.rewrite_link(dg.dcross(2, 3, 0, 0, 0)))
print(dg.rewrite_link(dg.dcross(2, 3, 0, 0, 0), "untwist"))

rep = dg.verify_sdcross_lemma(6)
print(rep.name, rep.passed, len(rep.checks))

# decategorified: the class of the Q^(m) P^(n) decomposition is the normal form of q^(m) p^(n)
print(dg.decategorify_qp(2, 3, 2))
print(all(dg.cross_check(m, n, c) for m, n, c in itertools.product(range(5), range(5), range(-2, 4))))

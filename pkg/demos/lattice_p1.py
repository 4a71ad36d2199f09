"""Euler form of the projective line, its Smith form, and the induced algebra map."""

from heiscat import heisenberg as hz
from heiscat.lattice import ExtTable, Lattice, euler_matrix, diagonalizing_map, numerical_quotient, radical, smith_normal_form

# Ext table of the exceptional pair O, O(1)
table = ExtTable.from_json({
    "objects": ["O", "O(1)"],
    "hom": {"O,O": {"0": 1}, "O,O(1)": {"0": 2}, "O(1),O": {}, "O(1),O(1)": {"0": 1}},
})
X = euler_matrix(table)
print("euler form:", X)  # not symmetric

lat = Lattice(X)
print("pair(e1, e2) =", lat.pair((1, 0), (0, 1)), " pair(e2, e1) =", lat.pair((0, 1), (1, 0)))

S, D, T = smith_normal_form(X)
print("S =", S, " D =", D, " T =", T)  # D is the unit matrix

# the Heisenberg algebra of X is the one of the identity form, through this substitution
gmap = diagonalizing_map(lat)
for i, v in enumerate(gmap.p_images):
    print(f"p[{i + 1}] -> pv[{v}]")
for i, v in enumerate(gmap.q_images):
    print(f"q[{i + 1}] -> qv[{v}]")

w = hz.AlgebraElement.word(hz.Word((("q", 1, 1), ("p", 0, 2)), 0))
lhs = hz.substitute(hz.normal_order(w, gmap.source), gmap)
rhs = hz.substitute(w, gmap)
print("normal forms agree across the map:", lhs == rhs)

# a degenerate form and its numerical quotient
Y = [[1, 1], [1, 1]]
print("radical of", Y, ":", radical(Y))
q = numerical_quotient(Lattice(Y))
print("quotient gram", q.lattice.gram, "projection", q.projection)

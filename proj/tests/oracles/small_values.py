"""Independent values frozen into the unit tests.

sym_delta by permutation average, the contraction examples, the single-term H*0
value and two Galilean boost matrix entries. Run by hand; ctest does not call it.
"""
import itertools
from fractions import Fraction
from math import factorial

import sympy as sp


def sym_delta(idx):
    hits = 0
    for p in itertools.permutations(range(len(idx))):
        hits += all(idx[p[k]] == idx[p[k + 1]] for k in range(0, len(idx), 2))
    return Fraction(hits, factorial(len(idx)))


print("delta(1,1,2,2) =", sym_delta((1, 1, 2, 2)))
v = (1, 2, 3)
full = sum(sym_delta(ix) * v[ix[0] - 1] * v[ix[1] - 1] * v[ix[2] - 1] * v[ix[3] - 1]
           for ix in itertools.product((1, 2, 3), repeat=4))
print("delta4 . v^4 =", full)
r2 = sum(sym_delta((1, 1, a, b)) * v[a - 1] * v[b - 1] for a, b in itertools.product((1, 2, 3), repeat=2))
print("delta4 . v^2 at (1,1) =", r2)
eye = sum(sym_delta((a, a, b, b)) for a in (1, 2, 3) for b in (1, 2, 3))
print("delta4 . I I =", eye)
e2 = (0, 1, 0)
idx = (1, 1, 2)
outer = sum(Fraction(int(idx[p[0]] == idx[p[1]]) * e2[idx[p[2]] - 1]) for p in itertools.permutations(range(3))) / 6
print("sym(delta v) at (1,1,2) with v = e2:", outer)

# H*0 with only psi_{0,0,0} = 2: (2/2!) delta^{(j1 j2)} lambda_j1 lambda_j2.
l = sp.symbols("l1:4")
hstar = sp.Rational(2, 2) * sum(x * x for x in l)
print("H*0 at lambda_vec = (1,0,0):", hstar.subs({l[0]: 1, l[1]: 0, l[2]: 0}))

# Galilean boost rows: G gets v^2 F, G_i gets (v^2 delta_ij + 2 v_i v_j) F_j, F_ij gets v_i v_j F.
vx = (1, 0, 0)
v2 = sum(x * x for x in vx)
print("X(1,0,0)[G,F] =", v2, " X(1,0,0)[G1,F1] =", v2 + 2 * vx[0] * vx[0])
vy = (1, 2, 0)
print("X(1,2,0)[F11,F] =", vy[0] * vy[0], " X(1,2,0)[F12,F] =", vy[0] * vy[1])

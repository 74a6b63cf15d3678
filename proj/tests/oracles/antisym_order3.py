"""Order-3 antisymmetric (k,i) part of F^{kij} for beta_1 = 1, F = G_1.

Builds DeltaH from the assembled closed form with sympy, differentiates with the
symmetric mu_ij convention, extracts the t^3 part and evaluates at
lambda = 2, lambda_vec = (1,0,0), mu_mat = diag(1,0,0), mu_vec = 0.
Also evaluates the closed-form non-symmetric flux remainder at the same point.
"""
import itertools
import sympy as sp

t, mu, lam = sp.symbols("t mu lam")
m = sp.symbols("m1:4")
l = sp.symbols("l1:4")
Ms = {}
for i in range(3):
    for j in range(i, 3):
        Ms[(i, j)] = sp.Symbol(f"M{i+1}{j+1}")
M = lambda i, j: Ms[(min(i, j), max(i, j))]

def dM(expr, i, j):
    s = M(i, j)
    return sp.diff(expr, s) if i == j else sp.Rational(1, 2) * sp.diff(expr, s)

R3 = range(3)
G0 = sum(l[a] ** 2 for a in R3)
tr = sum(M(a, a) for a in R3)
mll = sum(M(a, b) * l[a] * l[b] for a in R3 for b in R3)
mumu = sum(M(a, b) ** 2 for a in R3 for b in R3)
mml = sum(M(b, d) * M(d, c) * l[b] * l[c] for b in R3 for c in R3 for d in R3)
Ml = [sum(M(k, d) * l[d] for d in R3) for k in R3]
G1 = G0 * tr - mll
beta1 = 1

Hstar = -2 * lam * 5 * G0 ** 2 * beta1 + 5 * G0 * beta1 * mll
inner = 5 * beta1 * G0 * (lam * mll - lam ** 2 * G0)
ttH = []
for k in R3:
    e = l[k] * G1
    e -= sp.Rational(5, 4) * beta1 * (4 * mll * Ml[k] + l[k] * (mumu * G0 + 2 * mml))
    e += sp.diff(inner, l[k])
    ttH.append(e)

DH = mu * Hstar
DH += sp.Rational(1, 2) * sum(m[i] * m[j] * dM(Hstar, i, j) for i in R3 for j in R3)
DH += sum(m[k] * ttH[k] for k in R3)

scale = {**{x: t * x for x in m}, **{x: t * x for x in l}, **{x: t * x for x in Ms.values()}}
point = {lam: 2, mu: 0, l[0]: 1, l[1]: 0, l[2]: 0, m[0]: 0, m[1]: 0, m[2]: 0}
point.update({s: 0 for s in Ms.values()})
point[Ms[(0, 0)]] = 1

F = {}
for k, i, j in itertools.product(R3, R3, R3):
    expr = dM(sp.diff(DH, m[k]), i, j)
    g3 = sp.expand(expr.subs(scale, simultaneous=True)).coeff(t, 3)
    F[(k, i, j)] = sp.nsimplify(g3.subs(point))

anti = {(k, i, j): (F[(k, i, j)] - F[(i, k, j)]) / 2 for k, i, j in F}
print("max |antisym F| order 3 =", max(abs(v) for v in anti.values()))
for key in [(0, 1, 1), (1, 0, 1), (0, 2, 2), (1, 2, 2)]:
    print("antisym F", tuple(x + 1 for x in key), "=", anti[key])

# Closed-form non-symmetric remainder, graded the same way.
d = lambda a, b: 1 if a == b else 0
Mlv = Ml
def dF(k, i, j):
    sym_dl = sp.Rational(1, 2) * (d(k, i) * l[j] + d(k, j) * l[i])
    sym_lM = sp.Rational(1, 2) * (l[i] * Mlv[j] + l[j] * Mlv[i])
    v = l[k] * dM(G1, i, j)
    v -= sp.Rational(5, 4) * beta1 * (4 * mll * sym_dl + l[k] * (2 * M(i, j) * G0 - 4 * sym_lM))
    v += 2 * 5 * beta1 * G0 * lam * sym_dl
    return v
D = {}
for key in F:
    g3 = sp.expand(dF(*key).subs(scale, simultaneous=True)).coeff(t, 3)
    D[key] = sp.nsimplify(g3.subs(point))
antiD = {(k, i, j): (D[(k, i, j)] - D[(i, k, j)]) / 2 for k, i, j in F}
print("closed-form remainder max |antisym| order 3 =", max(abs(v) for v in antiD.values()))
print("agree:", all(anti[x] == antiD[x] for x in F))

# Vector potential, beta_1 = 1, F = 0, k = 1, full value at the point.
ttH1 = ttH[0] - l[0] * G1
print("ttH^1 (F = 0) =", sp.nsimplify(ttH1.subs(point)))

G = {}
for k, i in itertools.product(R3, R3):
    expr = sp.diff(sp.diff(DH, m[k]), l[i])
    g3 = sp.expand(expr.subs(scale, simultaneous=True)).coeff(t, 3)
    G[(k, i)] = sp.nsimplify(g3.subs(point))
print("max |antisym G| order 3 =", max(abs((G[(k, i)] - G[(i, k)]) / 2) for k, i in G))

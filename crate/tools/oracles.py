"""Independent oracles for derived constants frozen into the Rust tests.

Uses the textbook Chevalley-Eilenberg formula with adjoint coefficients,
    (dψ)(X0..Xk) = Σ_i (-1)^i [Xi, ψ(..X̂i..)] + Σ_{i<j} (-1)^{i+j} ψ([Xi,Xj], ..X̂i..X̂j..),
and sympy matrices. Run: python3 tools/oracles.py
"""
from itertools import combinations, permutations
import sympy as sp


def algebra(n, rels):
    c = {}
    for (i, j), terms in rels.items():
        v = [0] * n
        for k, x in terms:
            v[k - 1] += sp.Rational(x)
        c[(i - 1, j - 1)] = v
        c[(j - 1, i - 1)] = [-x for x in v]
    return n, c


def br(alg, i, j):
    n, c = alg
    return c.get((i, j), [0] * n)


def perm_sign(p):
    s, p = 1, list(p)
    for a in range(len(p)):
        for b in range(a + 1, len(p)):
            if p[a] > p[b]:
                s = -s
    return s


def eval_alt(psi, tup, n):
    """psi: dict sorted-tuple -> vector (length n); tup may contain repeats."""
    if len(set(tup)) < len(tup):
        return [0] * n
    srt = tuple(sorted(tup))
    order = [srt.index(x) for x in tup]
    s = perm_sign(order)
    v = psi.get(srt, [0] * n)
    return [s * x for x in v]


def d_adjoint(alg, psi, k):
    n, _ = alg
    out = {}
    for tup in combinations(range(n), k + 1):
        acc = [sp.Integer(0)] * n
        for i in range(k + 1):
            rest = tup[:i] + tup[i + 1:]
            val = eval_alt(psi, rest, n)
            for m, vm in enumerate(val):
                if vm:
                    b = br(alg, tup[i], m)
                    for t in range(n):
                        acc[t] += (-1) ** i * vm * b[t]
        for i in range(k + 1):
            for j in range(i + 1, k + 1):
                b = br(alg, tup[i], tup[j])
                rest = tuple(x for a, x in enumerate(tup) if a not in (i, j))
                for m, bm in enumerate(b):
                    if bm:
                        val = eval_alt(psi, (m,) + rest, n)
                        for t in range(n):
                            acc[t] += (-1) ** (i + j) * bm * val[t]
        out[tup] = acc
    return out


def d_matrix(alg, k):
    n, _ = alg
    src = list(combinations(range(n), k))
    dst = list(combinations(range(n), k + 1))
    cols = []
    for s in src:
        for t in range(n):
            psi = {s: [1 if a == t else 0 for a in range(n)]}
            img = d_adjoint(alg, psi, k)
            cols.append([img[u][tt] for tt in range(n) for u in dst])
    return sp.Matrix(cols).T  # rows: (target, dst tuple)


def center(alg):
    n, _ = alg
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append([br(alg, j, i)[k] for i in range(n)])
    return sp.Matrix(rows).nullspace()


def invariant_forms(alg):
    n, _ = alg
    idx = {}
    for i in range(n):
        for j in range(i, n):
            idx[(i, j)] = len(idx)
    var = lambda i, j: idx[(min(i, j), max(i, j))]
    rows = []
    for z in range(n):
        for a in range(n):
            for b in range(n):
                r = [0] * len(idx)
                for k, c in enumerate(br(alg, z, a)):
                    if c:
                        r[var(k, b)] += c
                for k, c in enumerate(br(alg, z, b)):
                    if c:
                        r[var(a, k)] += c
                rows.append(r)
    sols = sp.Matrix(rows).nullspace()
    forms = []
    for s in sols:
        m = sp.zeros(n, n)
        for (i, j), p in idx.items():
            m[i, j] = m[j, i] = s[p]
        forms.append(m)
    return forms


def koszul(alg, B):
    n, _ = alg
    return [sum(br(alg, i, j)[m] * B[m, k] for m in range(n)) for (i, j, k) in combinations(range(n), 3)]


def report(name, alg):
    n, _ = alg
    forms = invariant_forms(alg)
    imgs = [koszul(alg, B) for B in forms]
    im = sp.Matrix(imgs).T.columnspace() if forms else []
    im_rank = len(im)
    ker_dim = len(forms) - im_rank
    z = center(alg)
    d1 = d_matrix(alg, 1)
    d2 = d_matrix(alg, 2)
    h2 = n * len(list(combinations(range(n), 2))) - d2.rank() - d1.rank()
    # (c ⊗ Im I) ∩ B³(g,g): dim A + dim B - dim(A+B)
    L3 = len(list(combinations(range(n), 3)))
    A = []
    for zv in z:
        for w in im:
            A.append([zv[t] * w[i] for t in range(n) for i in range(L3)])
    Bm = d2
    if A:
        Am = sp.Matrix(A).T
        coupled = Am.rank() + Bm.rank() - Am.row_join(Bm).rank()
    else:
        coupled = 0
    zl = len(z) * ker_dim
    print(f"{name}: forms={len(forms)} imI={im_rank} kerI={ker_dim} center={len(z)} "
          f"H2(g,g)={h2} ZL2_0={zl} coupled={coupled} HL2={h2 + zl + coupled}")


def derivation_dim(alg):
    n, _ = alg
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                r = [0] * (n * n)
                for m, c in enumerate(br(alg, i, j)):
                    if c:
                        r[k * n + m] += c
                for m in range(n):
                    cm = br(alg, m, j)[k]
                    if cm:
                        r[m * n + i] -= cm
                    cm = br(alg, i, m)[k]
                    if cm:
                        r[m * n + j] -= cm
                rows.append(r)
    return n * n - sp.Matrix(rows).rank()


def trivial_betti(alg):
    n, _ = alg
    # d on Λ^k g* with trivial coefficients: dω(X0..Xk) = Σ_{i<j} (-1)^{i+j} ω([Xi,Xj], ...)
    def dm(k):
        src = list(combinations(range(n), k))
        dst = list(combinations(range(n), k + 1))
        M = sp.zeros(len(dst), len(src))
        for r, tup in enumerate(dst):
            for i in range(k + 1):
                for j in range(i + 1, k + 1):
                    rest = tuple(x for a, x in enumerate(tup) if a not in (i, j))
                    for m, bm in enumerate(br(alg, tup[i], tup[j])):
                        if bm and m not in rest:
                            full = (m,) + rest
                            srt = tuple(sorted(full))
                            s = perm_sign([srt.index(x) for x in full])
                            M[r, src.index(srt)] += (-1) ** (i + j) * bm * s
        return M
    ranks = [dm(k).rank() if k < n else 0 for k in range(n + 1)]
    from math import comb
    return [comb(n, k) - ranks[k] - (ranks[k - 1] if k else 0) for k in range(n + 1)]


if __name__ == "__main__":
    g54 = algebra(5, {(1, 2): [(3, 1)], (1, 3): [(4, 1)], (2, 3): [(5, 1)]})
    h3 = algebra(3, {(1, 2): [(3, 1)]})
    f5 = algebra(5, {(1, 2): [(3, 1)], (1, 3): [(4, 1)], (1, 4): [(5, 1)]})
    diamond = algebra(4, {(1, 2): [(3, 1)], (1, 3): [(2, -1)], (2, 3): [(4, 1)]})
    g724 = algebra(7, {(1, 2): [(3, 1)], (1, 3): [(4, 1)], (1, 4): [(5, 1)], (1, 5): [(6, 1)],
                       (2, 5): [(7, -1)], (3, 4): [(7, 1)]})
    report("g54", g54)
    report("h3", h3)
    report("filiform5", f5)
    report("diamond", diamond)
    print("h3 trivial betti", trivial_betti(h3))
    print("g54 trivial betti", trivial_betti(g54))
    print("g54 dim Der", derivation_dim(g54))
    print("g724 dim Der", derivation_dim(g724))

"""Brute-force oracles used only by the test suite.

Nothing here calls the Hom engine's τ-recursion or the Weyl group code.
"""
from __future__ import annotations

from itertools import combinations, permutations, product

import sympy


# -- explicit representations -----------------------------------------------

def thin_rep(quiver, root):
    """Indecomposable with a 0/1 dimension vector on a tree: k on the support, identity maps."""
    assert all(d in (0, 1) for d in root)
    maps = []
    for s, t in quiver.arrows:
        d_s, d_t = root[s - 1], root[t - 1]
        maps.append(sympy.ones(d_t, d_s) if d_s and d_t else sympy.zeros(d_t, d_s))
    return list(root), maps


def d4_big_rep():
    """(1,2,1,1) for 1->2, 2->3, 2->4: three distinct lines in k^2."""
    return [1, 2, 1, 1], [sympy.Matrix([[1], [1]]), sympy.Matrix([[1, 0]]), sympy.Matrix([[0, 1]])]


def intertwiner_dim(quiver, rep_m, rep_n) -> int:
    """dim {(f_v): f_t M_a = N_a f_s for each arrow a: s -> t}, by exact rank."""
    dm, mm = rep_m
    dn, mn = rep_n
    offsets, total = [], 0
    for v in range(quiver.n):
        offsets.append(total)
        total += dn[v] * dm[v]
    if total == 0:
        return 0
    rows = []
    for (s, t), a_m, a_n in zip(quiver.arrows, mm, mn):
        s, t = s - 1, t - 1
        # entry (r, c) of f_t M_a - N_a f_s, as a linear form in the unknowns
        for r in range(dn[t]):
            for c in range(dm[s]):
                row = [0] * total
                for k in range(dm[t]):  # (f_t M_a)[r, c] = sum_k f_t[r, k] M_a[k, c]
                    row[offsets[t] + r * dm[t] + k] += a_m[k, c]
                for k in range(dn[s]):  # (N_a f_s)[r, c] = sum_k N_a[r, k] f_s[k, c]
                    row[offsets[s] + k * dm[s] + c] -= a_n[r, k]
                rows.append(row)
    if not rows:
        return total
    return total - sympy.Matrix(rows).rank()


def kronecker_rep(kind: str, index: int, eigen: int | None = None):
    """Explicit Kronecker representations V_1 ⇉ V_2 (arrows a, b)."""
    k = index
    if kind == "P":  # (k, k+1)
        a = sympy.Matrix.vstack(sympy.eye(k), sympy.zeros(1, k)) if k else sympy.zeros(1, 0)
        b = sympy.Matrix.vstack(sympy.zeros(1, k), sympy.eye(k)) if k else sympy.zeros(1, 0)
        return [k, k + 1], [a, b]
    if kind == "I":  # (k+1, k)
        a = sympy.Matrix.hstack(sympy.eye(k), sympy.zeros(k, 1)) if k else sympy.zeros(0, 1)
        b = sympy.Matrix.hstack(sympy.zeros(k, 1), sympy.eye(k)) if k else sympy.zeros(0, 1)
        return [k + 1, k], [a, b]
    # regular in the tube at eigen: a = 1, b = Jordan block
    jordan = sympy.Matrix(k, k, lambda i, j: eigen if i == j else (1 if j == i + 1 else 0))
    return [k, k], [sympy.eye(k), jordan]


# -- Weyl group of A_2 as S_3 ------------------------------------------------

def compose(p, q):
    """(p q)(i) = p(q(i))."""
    return tuple(p[q[i]] for i in range(len(q)))


def s3_nc_tuples(w: int):
    """NC_w(S_3) for c = s1 s2, with s1 = (0 1), s2 = (1 2); positive flags included."""
    elems = list(permutations(range(3)))
    ident = (0, 1, 2)
    s1, s2 = (1, 0, 2), (0, 2, 1)

    def length(p):  # n - #cycles
        seen, cycles = set(), 0
        for i in range(3):
            if i not in seen:
                cycles += 1
                while i not in seen:
                    seen.add(i)
                    i = p[i]
        return 3 - cycles

    c = compose(s1, s2)
    out = []
    for parts in product(elems, repeat=w + 1):
        prod_ = ident
        for p in parts:
            prod_ = compose(prod_, p)
        if prod_ == c and sum(length(p) for p in parts) == length(c):
            tail = ident
            for p in parts[1:]:
                tail = compose(tail, p)
            out.append((parts, tail not in (ident, s1, s2)))
    return out


def reflection_length_bfs(group) -> dict:
    """Reflection length of every element by breadth-first search over reflections."""
    dist = {group.identity: 0}
    frontier = [group.identity]
    while frontier:
        nxt = []
        for u in frontier:
            for t in group.reflections:
                v = t.elem * u
                if v not in dist:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    return dist


# -- brute-force collections ------------------------------------------------

def brute_force_smc(eng, objs, is_smc_oracle):
    return sorted(tuple(sorted(c)) for c in combinations(sorted(objs), eng.n) if is_smc_oracle(eng, c))


def fuss_catalan(degrees, h, w):
    num = den = 1
    for d in degrees:
        num *= w * h + d
        den *= d
    return num // den


def positive_fuss_catalan(degrees, h, w):
    num = den = 1
    for d in degrees:
        num *= w * h + d - 2
        den *= d
    return num // den


DEGREES = {"A2": (2, 3), "A3": (2, 3, 4), "A4": (2, 3, 4, 5), "D4": (2, 4, 4, 6)}

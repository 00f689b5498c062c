"""Hom dimensions in the bounded derived category of a Dynkin quiver.

Indecomposables of D^b(kQ) are shifts Σ^a M of indecomposable modules, and
for Dynkin Q a module is determined by its dimension vector, so everything
here works on (root, degree) pairs.  Module Homs come from the Euler form
plus Auslander-Reiten duality Ext^1(M, N) = D Hom(N, τM), recursing along
τ-orbits until the first argument is projective.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .quiver import Quiver, QuiverError


class RootError(QuiverError):
    """A dimension vector that does not name an indecomposable module."""


@dataclass(frozen=True, order=True)
class DerivedObject:
    root: tuple
    degree: int = 0

    def shift(self, k: int = 1) -> "DerivedObject":
        return DerivedObject(self.root, self.degree + k)

    def __str__(self):
        return f"({','.join(map(str, self.root))})@{self.degree}"


def parse_object(text: str) -> DerivedObject:
    """Parse the literal syntax ``(d1,...,dn)@deg``; ``@deg`` defaults to 0."""
    body, _, deg = text.strip().partition("@")
    body = body.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"object literal must look like '(1,0)@0', got {text!r}")
    try:
        root = tuple(int(x) for x in body[1:-1].split(",") if x.strip())
        degree = int(deg) if deg.strip() else 0
    except ValueError:
        raise ValueError(f"bad object literal {text!r}") from None
    return DerivedObject(root, degree)


def _vec(r) -> tuple:
    return tuple(int(x) for x in r)


class HomEngine:
    """Numerical model of ind D^b(kQ) for a Dynkin quiver Q."""

    def __init__(self, quiver: Quiver):
        quiver.require_dynkin()
        self.quiver = quiver
        self.n = quiver.n
        self.roots = quiver.positive_roots
        self.index = quiver.root_index
        self._proj = {p: i for i, p in enumerate(quiver.projectives)}
        self._inj = {p: i for i, p in enumerate(quiver.injectives)}
        self._phi = quiver.coxeter
        self._phi_inv = quiver.coxeter_inverse
        self._euler = quiver.euler
        self._memo: dict[tuple[int, int], int] = {}
        self.max_depth = 10 * max(self.n, 1) * quiver.coxeter_number
        self.deepest = 0

    # -- module level --------------------------------------------------

    def check_root(self, m) -> tuple:
        m = tuple(int(x) for x in m)
        if m not in self.index:
            raise RootError(f"{m} is not a positive root of {self.quiver.type_name}")
        return m

    def is_projective(self, m) -> bool:
        return tuple(m) in self._proj

    def is_injective(self, m) -> bool:
        return tuple(m) in self._inj

    def coxeter(self, m) -> tuple:
        return _vec(self._phi @ np.asarray(m))

    def coxeter_inv(self, m) -> tuple:
        return _vec(self._phi_inv @ np.asarray(m))

    def euler(self, m, n) -> int:
        return int(np.asarray(m) @ self._euler @ np.asarray(n))

    def hom_mod(self, m, n) -> int:
        """dim Hom(M, N) for indecomposable modules with dimension vectors m, n."""
        m, n = self.check_root(m), self.check_root(n)
        key = (self.index[m], self.index[n])
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        # Hom(a, b) = <a, b> + Hom(b, τa) while a is not projective
        total, depth = 0, 0
        a, b = m, n
        trail = []
        while True:
            k = (self.index[a], self.index[b])
            if k in self._memo:
                total += self._memo[k]
                break
            if a in self._proj:
                total += b[self._proj[a]]
                break
            trail.append((k, total))
            total += self.euler(a, b)
            a, b = b, self.coxeter(a)
            depth += 1
            if depth > self.max_depth:
                raise AssertionError(f"τ-recursion exceeded {self.max_depth} steps")
        self.deepest = max(self.deepest, depth)
        # total is Hom(m, n); each intermediate pair's value is total minus its prefix
        for k, prefix in trail:
            value = total - prefix
            if value < 0:
                raise AssertionError(f"negative Hom dimension {value} for root pair {k}")
            self._memo.setdefault(k, value)
        self._memo.setdefault(key, total)
        return self._memo[key]

    def ext_mod(self, m, n) -> int:
        """dim Ext^1(M, N) = dim Hom(N, τM); zero when M is projective."""
        m, n = self.check_root(m), self.check_root(n)
        if m in self._proj:
            return 0
        return self.hom_mod(n, self.coxeter(m))

    # -- derived level -------------------------------------------------

    def hom(self, x: DerivedObject, y: DerivedObject) -> int:
        gap = y.degree - x.degree
        if gap == 0:
            return self.hom_mod(x.root, y.root)
        if gap == 1:
            return self.ext_mod(x.root, y.root)
        self.check_root(x.root)
        self.check_root(y.root)
        return 0

    def tau(self, x: DerivedObject) -> DerivedObject:
        m = self.check_root(x.root)
        if m in self._proj:
            return DerivedObject(self.quiver.injectives[self._proj[m]], x.degree - 1)
        return DerivedObject(self.coxeter(m), x.degree)

    def tau_inv(self, x: DerivedObject) -> DerivedObject:
        m = self.check_root(x.root)
        if m in self._inj:
            return DerivedObject(self.quiver.projectives[self._inj[m]], x.degree + 1)
        return DerivedObject(self.coxeter_inv(m), x.degree)

    def serre(self, x: DerivedObject) -> DerivedObject:
        return self.tau(x).shift(1)

    def serre_inv(self, x: DerivedObject) -> DerivedObject:
        return self.tau_inv(x.shift(-1))

    def f_power(self, x: DerivedObject, w: int, k: int) -> DerivedObject:
        """Apply (Σ^w 𝕊)^k, k of either sign."""
        if w < 1:
            raise ValueError("w must be at least 1")
        for _ in range(k):
            x = self.serre(x).shift(w)
        for _ in range(-k):
            x = self.serre_inv(x.shift(-w))
        return x

    # -- helpers used across modules -----------------------------------

    def objects(self, degrees) -> list[DerivedObject]:
        return sorted(DerivedObject(r, d) for r, d in product(self.roots, degrees))

    def hom_any_shift(self, x: DerivedObject, y: DerivedObject) -> bool:
        """True when Hom(x, Σ^i y) is nonzero for some integer i."""
        return self.hom_mod(x.root, y.root) > 0 or self.ext_mod(x.root, y.root) > 0

    def is_exceptional_sequence(self, objs) -> bool:
        for j, later in enumerate(objs):
            if self.hom_mod(later.root, later.root) != 1 or self.ext_mod(later.root, later.root):
                return False
            for earlier in objs[:j]:
                if self.hom_any_shift(later, earlier):
                    return False
        return True

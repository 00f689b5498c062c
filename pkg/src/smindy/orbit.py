"""The negative cluster category C_{-w} = D^b(kQ) / F with F = Σ^w 𝕊.

Objects of C_{-w} are named by their unique lift to the fundamental domain
X ∩ Σ^w 𝕊 Y, which for the standard t-structure consists of Σ^a M for
0 <= a <= w-1 together with Σ^w M for M not injective.  (Σ^w I_i is the
image F(P_i) of a degree-0 projective, so it is not a new orbit.)
"""
from __future__ import annotations

from functools import cached_property

import numpy as np

from .homs import DerivedObject, HomEngine
from .quiver import Quiver


class DomainError(ValueError):
    """An object outside the fundamental domain where one was required."""


class OrbitCategory:
    def __init__(self, quiver: Quiver | HomEngine, w: int):
        if w < 1:
            raise ValueError("w must be at least 1")
        self.engine = quiver if isinstance(quiver, HomEngine) else HomEngine(quiver)
        self.quiver = self.engine.quiver
        self.w = w
        self._canon: dict[DerivedObject, tuple[DerivedObject, int]] = {}

    # -- fundamental domain --------------------------------------------

    def in_domain(self, d: DerivedObject) -> bool:
        if 0 <= d.degree < self.w:
            return True
        return d.degree == self.w and not self.engine.is_injective(d.root)

    def in_domain_by_definition(self, d: DerivedObject) -> bool:
        """Membership in X ∩ Σ^w 𝕊 Y computed literally: d in X and (Σ^w 𝕊)^{-1} d in Y."""
        pulled = self.engine.serre_inv(d.shift(-self.w))
        return d.degree >= 0 and pulled.degree < 0

    @cached_property
    def objects(self) -> list[DerivedObject]:
        """ind C_{-w}, as canonically sorted fundamental-domain representatives."""
        return [d for d in self.engine.objects(range(self.w + 1)) if self.in_domain(d)]

    @cached_property
    def position(self) -> dict[DerivedObject, int]:
        return {d: i for i, d in enumerate(self.objects)}

    def f_power(self, d: DerivedObject, k: int) -> DerivedObject:
        return self.engine.f_power(d, self.w, k)

    def canonicalize(self, d: DerivedObject) -> tuple[DerivedObject, int]:
        """Return (rep, k) with F^k d = rep in the fundamental domain."""
        hit = self._canon.get(d)
        if hit is not None:
            return hit
        k, cur = 0, d
        while cur.degree > self.w:
            cur, k = self.f_power(cur, -1), k - 1
        while cur.degree < 0:
            cur, k = self.f_power(cur, 1), k + 1
        # F moves degree by w or w+1, so the lift is within one step of here
        hits = []
        for j in range(k - 2, k + 3):
            cand = self.f_power(d, j)
            if self.in_domain(cand):
                hits.append((cand, j))
        if len(hits) != 1:
            raise AssertionError(f"{d} has {len(hits)} lifts to the fundamental domain")
        self._canon[d] = hits[0]
        return hits[0]

    def rep(self, d: DerivedObject) -> DerivedObject:
        return self.canonicalize(d)[0]

    # -- morphisms -----------------------------------------------------

    def hom_terms(self, x: DerivedObject, y: DerivedObject) -> dict[int, int]:
        """Nonzero summands k -> dim Hom_D(x, F^k y) of the orbit Hom space.

        deg F^k y is strictly increasing in k and Hom_D(x, -) needs a degree
        gap of 0 or 1, so the walk in each direction stops exactly when the
        gap leaves that range.
        """
        terms = {}
        k, cur = 0, y
        while cur.degree <= x.degree + 1:
            dim = self.engine.hom(x, cur)
            if dim:
                terms[k] = dim
            k, cur = k + 1, self.f_power(cur, 1)
        k, cur = -1, self.f_power(y, -1)
        while cur.degree >= x.degree:
            dim = self.engine.hom(x, cur)
            if dim:
                terms[k] = dim
            k, cur = k - 1, self.f_power(cur, -1)
        return terms

    def hom(self, x: DerivedObject, y: DerivedObject) -> int:
        return sum(self.hom_terms(x, y).values())

    def lemma_rhs(self, x: DerivedObject, y: DerivedObject, i: int) -> int:
        """dim Hom_D(x, Σ^{-i} y) + dim Hom_D(y, Σ^{i-w} x)."""
        return self.engine.hom(x, y.shift(-i)) + self.engine.hom(y, x.shift(i - self.w))

    def lemma_check(self, x: DerivedObject, y: DerivedObject, i: int) -> bool:
        if not (self.in_domain(x) and self.in_domain(y)):
            raise DomainError("lemma_check needs both objects in the fundamental domain")
        if not 0 <= i <= self.w:
            raise ValueError("need 0 <= i <= w")
        lhs = self.hom(x, self.rep(y.shift(-i)))
        return lhs == self.lemma_rhs(x, y, i)

    # -- index tables for enumeration ------------------------------------

    @cached_property
    def hom_table(self) -> np.ndarray:
        objs = self.objects
        table = np.zeros((len(objs), len(objs)), dtype=np.int64)
        for i, x in enumerate(objs):
            for j, y in enumerate(objs):
                table[i, j] = self.hom(x, y)
        table.setflags(write=False)
        return table

    def shift_index(self, k: int) -> list[int]:
        """i -> index of Σ^k(object i) in ind C_{-w}."""
        return [self.position[self.rep(d.shift(k))] for d in self.objects]

"""Weyl group of a Dynkin quiver acting on the root lattice, and w-noncrossing partitions.

Elements are integer matrices in the simple-root basis acting on column
vectors, so the matrix product is the group product.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property, reduce

import numpy as np
import sympy

from .quiver import NotDynkinError, Quiver


@dataclass(frozen=True)
class WeylElement:
    mat: tuple  # tuple of row tuples

    @classmethod
    def from_array(cls, a) -> "WeylElement":
        return cls(tuple(tuple(int(x) for x in row) for row in np.asarray(a)))

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.mat, dtype=np.int64).reshape(len(self.mat), len(self.mat))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement.from_array(self.array @ other.array)

    def __call__(self, v) -> tuple:
        return tuple(int(x) for x in self.array @ np.asarray(v))

    def inverse(self) -> "WeylElement":
        # orthogonal for the symmetric form B: u^{-1} = B^{-1} u^T B, but the
        # group is finite so the cheapest exact route is integer inversion
        inv = sympy.Matrix(self.mat).inv()
        return WeylElement(tuple(tuple(int(x) for x in inv.row(i)) for i in range(inv.rows)))


@dataclass(frozen=True)
class Reflection:
    elem: WeylElement
    root: tuple


class WeylGroup:
    def __init__(self, quiver: Quiver):
        if not quiver.is_dynkin:
            raise NotDynkinError(f"quiver of type {quiver.type_name} has an infinite Weyl group")
        self.quiver = quiver
        self.n = quiver.n
        self.form = quiver.symmetric
        self.identity = WeylElement.from_array(np.eye(self.n, dtype=np.int64))
        self.simple = [self.reflection(s).elem for s in quiver.simples]
        self._length: dict[WeylElement, int] = {}
        self._inv: dict[WeylElement, WeylElement] = {}

    def reflection(self, alpha) -> Reflection:
        """t_α(y) = y - (y, α) α for a real root α."""
        a = np.asarray(alpha, dtype=np.int64)
        if int(a @ self.form @ a) != 2:
            raise ValueError(f"{tuple(alpha)} is not a real root: (α, α) != 2")
        mat = np.eye(self.n, dtype=np.int64) - np.outer(a, a @ self.form)
        return Reflection(WeylElement.from_array(mat), tuple(int(x) for x in alpha))

    @cached_property
    def reflections(self) -> list[Reflection]:
        """One reflection per positive root, in root order."""
        return [self.reflection(r) for r in self.quiver.positive_roots]

    @cached_property
    def reflection_of(self) -> dict[WeylElement, tuple]:
        return {t.elem: t.root for t in self.reflections}

    def preserves_form(self, u: WeylElement) -> bool:
        a = u.array
        return bool(np.array_equal(a.T @ self.form @ a, self.form))

    @cached_property
    def elements(self) -> list[WeylElement]:
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            u = queue.popleft()
            for s in self.simple:
                v = u * s
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        for u in seen:
            assert self.preserves_form(u)
        return sorted(seen, key=lambda u: u.mat)

    def inverse(self, u: WeylElement) -> WeylElement:
        hit = self._inv.get(u)
        if hit is None:
            hit = self._inv[u] = u.inverse()
        return hit

    def abs_length(self, u: WeylElement) -> int:
        """Reflection length = rank(u - 1) (codimension of the fixed space)."""
        hit = self._length.get(u)
        if hit is None:
            diff = sympy.Matrix(u.mat) - sympy.eye(self.n)
            hit = self._length[u] = int(diff.rank())
        return hit

    @cached_property
    def coxeter_element(self) -> WeylElement:
        order = self.quiver.exceptional_vertex_order()
        return reduce(lambda a, b: a * b, (self.simple[v - 1] for v in order), self.identity)

    def support(self, u: WeylElement, rng: random.Random | None = None) -> frozenset[int]:
        """Letters (1-based vertices) of a reduced word, found by stripping right descents."""
        letters = set()
        while u != self.identity:
            a = u.array
            descents = [i for i in range(self.n) if (a[:, i] <= 0).all()]
            i = rng.choice(descents) if rng else descents[0]
            letters.add(i + 1)
            u = u * self.simple[i]
        return frozenset(letters)

    def in_proper_parabolic(self, u: WeylElement) -> bool:
        return len(self.support(u)) < self.n

    def t_reduced_expression(self, u: WeylElement, rng: random.Random | None = None) -> list[tuple]:
        """Roots β_1..β_k with u = t_β1 ... t_βk and k = abs_length(u)."""
        word = []
        refl = self.reflections
        while u != self.identity:
            length = self.abs_length(u)
            order = list(refl)
            if rng:
                rng.shuffle(order)
            for t in order:
                rest = t.elem * u
                if self.abs_length(rest) == length - 1:
                    word.append(t.root)
                    u = rest
                    break
            else:
                raise AssertionError("no reflection lowers the absolute length")
        return word

    def t_reduced_expressions(self, u: WeylElement) -> list[list[tuple]]:
        """Every T-reduced expression of u (exponential; small ranks only)."""
        if u == self.identity:
            return [[]]
        length = self.abs_length(u)
        out = []
        for t in self.reflections:
            rest = t.elem * u
            if self.abs_length(rest) == length - 1:
                out.extend([t.root] + tail for tail in self.t_reduced_expressions(rest))
        return out

    # -- noncrossing partitions ----------------------------------------

    def below(self, v: WeylElement) -> list[WeylElement]:
        """Prefixes u of v in absolute order: l(u) + l(u^{-1} v) = l(v)."""
        lv = self.abs_length(v)
        return [u for u in self.elements
                if self.abs_length(u) + self.abs_length(self.inverse(u) * v) == lv]

    def nc_tuples(self, w: int) -> list[tuple[WeylElement, ...]]:
        """All (u_1, ..., u_{w+1}) with u_1 ... u_{w+1} = c and lengths adding to n."""
        if w < 1:
            raise ValueError("w must be at least 1")
        interval = self.below(self.coxeter_element)
        memo: dict[tuple[WeylElement, int], list] = {}

        def factor(v: WeylElement, parts: int) -> list:
            if parts == 1:
                return [(v,)]
            key = (v, parts)
            if key not in memo:
                lv = self.abs_length(v)
                out = []
                for u in interval:
                    rest = self.inverse(u) * v
                    if self.abs_length(u) + self.abs_length(rest) == lv:
                        out.extend((u,) + tail for tail in factor(rest, parts - 1))
                memo[key] = out
            return memo[key]

        return factor(self.coxeter_element, w + 1)

    def is_positive(self, t: tuple[WeylElement, ...]) -> bool:
        tail = reduce(lambda a, b: a * b, t[1:], self.identity)
        return not self.in_proper_parabolic(tail)

    def positive_nc_tuples(self, w: int) -> list[tuple[WeylElement, ...]]:
        return [t for t in self.nc_tuples(w) if self.is_positive(t)]

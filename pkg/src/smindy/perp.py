"""Perpendicular categories of exceptional modules and SMC reduction counts.

For a collection E of exceptional modules, (Σ^Z E)^⊥ is Σ^Z of the abelian
perpendicular category E^⊥ = {N : Hom(E, N) = 0 = Ext^1(E, N)}, which is
equivalent to mod kQ' for an acyclic Q' on n - |E| vertices.  Wide closures
are computed as double perpendiculars, and simples are recovered as the
unique Hom-orthogonal complete exceptional sequence inside a wide
subcategory.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from .homs import DerivedObject, HomEngine
from .orthogonal import canonical, enumerate_smc_window, exceptional_order
from .quiver import Quiver
from .report import VerificationReport


def _roots_of(e) -> list[tuple]:
    return sorted({x.root if isinstance(x, DerivedObject) else tuple(x) for x in e})


def perp_indecomposables(eng: HomEngine, e) -> list[tuple]:
    """Right perpendicular: roots N with Hom(H(x), N) = 0 = Ext^1(H(x), N) for every x in e."""
    src = _roots_of(e)
    return [r for r in eng.roots
            if all(eng.hom_mod(m, r) == 0 and eng.ext_mod(m, r) == 0 for m in src)]


def left_perp_indecomposables(eng: HomEngine, e) -> list[tuple]:
    tgt = _roots_of(e)
    return [r for r in eng.roots
            if all(eng.hom_mod(r, m) == 0 and eng.ext_mod(r, m) == 0 for m in tgt)]


def wide_closure(eng: HomEngine, e) -> list[tuple]:
    """ind of the smallest wide subcategory containing e, as ⊥(e^⊥)."""
    return left_perp_indecomposables(eng, perp_indecomposables(eng, e))


def simples_of(eng: HomEngine, wide: Sequence[tuple], k: int) -> list[tuple]:
    """The simple objects of a rank-k wide subcategory given by its indecomposables."""
    wide = sorted(wide)
    hits = []
    for cand in combinations(wide, k):
        if any(eng.hom_mod(a, b) for a in cand for b in cand if a != b):
            continue
        if exceptional_order(eng, [DerivedObject(r) for r in cand]) is None:
            continue
        hits.append(list(cand))
    if len(hits) != 1:
        raise AssertionError(f"expected one orthogonal exceptional {k}-set, found {len(hits)}")
    return hits[0]


def wide_simples(eng: HomEngine, e, k: int | None = None) -> list[tuple]:
    k = len(_roots_of(e)) if k is None else k
    return simples_of(eng, wide_closure(eng, e), k)


@dataclass
class PerpCategory:
    """(Σ^Z E)^⊥ inside D^b(kQ), identified with D^b(kQ')."""
    engine: HomEngine
    generators: list[tuple]
    indecomposables: list[tuple]
    simples: list[tuple]
    quiver: Quiver = field(init=False)

    def __post_init__(self):
        m = len(self.simples)
        arrows = []
        for i, a in enumerate(self.simples):
            for j, b in enumerate(self.simples):
                if i != j:
                    arrows += [(i + 1, j + 1)] * self.engine.ext_mod(a, b)
        self.quiver = Quiver(m, tuple(arrows))  # raises on a cycle

    @property
    def rank(self) -> int:
        return len(self.simples)

    def embed_root(self, d) -> tuple:
        """Dimension vector over Q of the object with class d over Q'."""
        vec = np.zeros(self.engine.n, dtype=np.int64)
        for coeff, s in zip(d, self.simples):
            vec += coeff * np.asarray(s)
        return tuple(int(x) for x in vec)

    def embed(self, x: DerivedObject) -> DerivedObject:
        return DerivedObject(self.embed_root(x.root), x.degree)


def perp_category(eng: HomEngine, e) -> PerpCategory:
    gens = _roots_of(e)
    if exceptional_order(eng, [DerivedObject(r) for r in gens]) is None:
        raise ValueError("generators must be orderable into an exceptional sequence")
    ind = perp_indecomposables(eng, gens)
    simples = simples_of(eng, ind, eng.n - len(gens))
    return PerpCategory(eng, gens, ind, simples)


def perp_quiver(eng: HomEngine, e) -> Quiver:
    q = perp_category(eng, e).quiver
    if not q.is_dynkin:
        raise AssertionError(f"perpendicular quiver of a Dynkin quiver came out {q.type_name}")
    return q


def verify_reduction(eng: HomEngine, s: Sequence[DerivedObject], w: int = 1,
                     budget: int | None = None, timing: bool = False) -> VerificationReport:
    """Compare SMCs of D containing s with SMCs of the perpendicular category.

    Both sides are confined to degrees 0..w+1.  Where every other member of an
    SMC already lies in the perpendicular category, the SMC minus s must be
    (the image of) an SMC of D^b(kQ').
    """
    start = time.perf_counter()
    s = canonical(s)
    if any(x.degree != 0 for x in s):
        raise ValueError("reduction generators must be modules in degree 0")
    perp = perp_category(eng, s)
    lo, hi = 0, w + 1
    ambient = [c for c in enumerate_smc_window(eng, lo, hi, budget) if set(s) <= set(c)]
    reduced = enumerate_smc_window(HomEngine(perp.quiver), lo, hi, budget) if perp.rank else [()]
    reduced_images = {canonical(perp.embed(x) for x in c) for c in reduced}
    perp_set = set(perp.indecomposables)
    degenerate, degenerate_bad = 0, []
    for c in ambient:
        rest = [x for x in c if x not in s]
        if all(x.root in perp_set for x in rest):
            degenerate += 1
            if canonical(rest) not in reduced_images:
                degenerate_bad.append([str(x) for x in c])
    passed = len(ambient) == len(reduced) and not degenerate_bad
    witness = None
    if not passed:
        witness = {"degenerate_mismatch": degenerate_bad[:5],
                   "ambient_sample": [[str(x) for x in c] for c in ambient[:5]]}
    counts = {"ambient": len(ambient), "perp": len(reduced), "degenerate": degenerate,
              "perp_rank": perp.rank, "perp_type": perp.quiver.type_name}
    elapsed = int((time.perf_counter() - start) * 1000) if timing else None
    return VerificationReport(eng.quiver.type_name, w, "Reduction", counts, passed, witness, elapsed,
                              params={"generators": [str(x) for x in s], "window": [lo, hi]})

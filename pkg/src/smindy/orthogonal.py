"""Orthogonal collections: ∞-orthogonal collections and simple-minded
collections in D^b(kQ), w-orthogonal collections and w-simple-minded systems
in C_{-w}, and their exhaustive enumeration.

Enumeration builds the pairwise compatibility graph first and only runs the
global predicates (generation / Riedtmann vanishing) on its cliques.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from graphlib import CycleError, TopologicalSorter
from typing import Iterable, Iterator, Sequence

from .homs import DerivedObject, HomEngine
from .orbit import OrbitCategory
from .quiver import Quiver

DEFAULT_BUDGET = 10**8

Collection = tuple  # canonically sorted tuple of DerivedObject


class BudgetExceeded(RuntimeError):
    pass


def canonical(objs: Iterable[DerivedObject]) -> Collection:
    return tuple(sorted(set(objs)))


def default_budget() -> int:
    return int(os.environ.get("SMINDY_BUDGET", DEFAULT_BUDGET))


def check_budget(candidates: int, size: int, budget: int | None) -> None:
    budget = default_budget() if budget is None else budget
    need = math.comb(candidates, size)
    if need > budget:
        raise BudgetExceeded(f"search space C({candidates}, {size}) = {need} exceeds budget {budget}")


# -- derived category ------------------------------------------------------

def inf_orthogonal_pair(eng: HomEngine, x: DerivedObject, y: DerivedObject) -> bool:
    """Hom(x, Σ^j y) = 0 = Hom(y, Σ^j x) for every j <= 0 (x != y)."""
    d = y.degree - x.degree
    if d >= 0 and eng.hom_mod(x.root, y.root):
        return False
    if d >= 1 and eng.ext_mod(x.root, y.root):
        return False
    if d <= 0 and eng.hom_mod(y.root, x.root):
        return False
    if d <= -1 and eng.ext_mod(y.root, x.root):
        return False
    return True


def is_inf_orthogonal(eng: HomEngine, s: Sequence[DerivedObject]) -> bool:
    s = list(s)
    for i, x in enumerate(s):
        if eng.hom(x, x) != 1:
            return False
        # Hom(Σ^k x, x) for k >= 1 vanishes in a hereditary category
        for y in s[i + 1:]:
            if x == y or not inf_orthogonal_pair(eng, x, y):
                return False
    return True


def generates(eng: HomEngine, s: Sequence[DerivedObject]) -> bool:
    """thick(S) = D, tested as (Σ^Z S)^⊥ = 0 on indecomposable modules."""
    for root in eng.roots:
        if not any(eng.hom_any_shift(x, DerivedObject(root)) for x in s):
            return False
    return True


def is_smc(eng: HomEngine, s: Sequence[DerivedObject]) -> bool:
    return is_inf_orthogonal(eng, s) and generates(eng, s)


def exceptional_order(eng: HomEngine, s: Sequence[DerivedObject]) -> list[DerivedObject] | None:
    """An ordering with no morphisms (in any shift) from later to earlier objects, if one exists."""
    graph: dict[DerivedObject, set[DerivedObject]] = {x: set() for x in s}
    for x in s:
        if eng.hom_mod(x.root, x.root) != 1 or eng.ext_mod(x.root, x.root):
            return None
        for y in s:
            if x != y and eng.hom_any_shift(x, y):
                graph[y].add(x)  # x must precede y
    try:
        return list(TopologicalSorter(graph).static_order())
    except CycleError:
        return None


def is_smc_oracle(eng: HomEngine, s: Sequence[DerivedObject]) -> bool:
    """|S| = n, ∞-orthogonal, and orderable into an exceptional sequence."""
    return len(s) == eng.n and is_inf_orthogonal(eng, s) and exceptional_order(eng, s) is not None


# -- clique search ---------------------------------------------------------

def cliques(adj: Sequence[int], max_size: int | None = None) -> Iterator[tuple[int, ...]]:
    """All nonempty cliques of a graph given as neighbour bitmasks, in lexicographic order."""
    stack: list[tuple[tuple[int, ...], int]] = [((), (1 << len(adj)) - 1)]
    while stack:
        clique, cand = stack.pop()
        branches = []
        rest = cand
        while rest:
            v = rest.bit_length() - 1
            rest &= ~(1 << v)
            branches.append(v)
        # push larger vertices first so smaller ones pop first
        for v in branches:
            grown = clique + (v,)
            if max_size is None or len(grown) < max_size:
                stack.append((grown, cand & adj[v] & ~((1 << (v + 1)) - 1)))
            else:
                stack.append((grown, 0))
        if clique:
            yield clique


def compatibility_graph(n_items: int, ok) -> list[int]:
    adj = [0] * n_items
    for i in range(n_items):
        for j in range(i + 1, n_items):
            if ok(i, j):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


# -- enumeration in D^b(kQ) --------------------------------------------------

_WORKER: dict = {}


def _worker_filter(args):
    kind, quiver, w, objs, chunk = args
    key = (kind, quiver, w)
    if key not in _WORKER:
        _WORKER.clear()
        eng = HomEngine(quiver)
        _WORKER[key] = (eng, OrbitCategory(eng, w) if kind == "sms" else None)
    eng, cat = _WORKER[key]
    if kind == "sms":
        model = SMSModel(cat)
        return [c for c in chunk if model.is_sms_indices(c)]
    return [c for c in chunk if _smc_verdict(eng, [objs[i] for i in c], check=True)]


def _smc_verdict(eng: HomEngine, s: list[DerivedObject], check: bool) -> bool:
    verdict = generates(eng, s)  # clique members are already pairwise compatible
    if check:
        oracle = is_smc_oracle(eng, s)
        if oracle != verdict:
            raise AssertionError(f"generation test and exceptional oracle disagree on {s}")
    return verdict


def _filter(kind, quiver, w, objs, found, keep, jobs):
    if jobs <= 1 or len(found) < 64:
        return [c for c in found if keep(c)]
    size = max(1, len(found) // (4 * jobs))
    chunks = [found[i:i + size] for i in range(0, len(found), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_worker_filter, [(kind, quiver, w, objs, ch) for ch in chunks])
        return [c for part in parts for c in part]


def enumerate_smc(eng: HomEngine, objs: Sequence[DerivedObject], budget: int | None = None,
                  jobs: int = 1, check: bool = True) -> list[Collection]:
    """All simple-minded collections made of objects from `objs`."""
    objs = sorted(objs)
    check_budget(len(objs), eng.n, budget)
    if eng.n == 0:
        return [()]
    adj = _inf_orthogonal_graph(eng, objs)
    # every clique is screened, so the size-n consequence below is a real check
    found = list(cliques(adj))
    keep = lambda c: _smc_verdict(eng, [objs[i] for i in c], check)
    kept = _filter("smc", eng.quiver, 1, objs, found, keep, jobs)
    if any(len(c) != eng.n for c in kept):
        raise AssertionError("found a simple-minded collection without exactly n objects")
    return sorted(canonical(objs[i] for i in c) for c in kept)


def _inf_orthogonal_graph(eng: HomEngine, objs: Sequence[DerivedObject]) -> list[int]:
    usable = {i for i, x in enumerate(objs) if eng.hom(x, x) == 1}
    return compatibility_graph(len(objs), lambda i, j: i in usable and j in usable
                               and inf_orthogonal_pair(eng, objs[i], objs[j]))


def enumerate_smc_in_fd(quiver: Quiver | HomEngine, w: int, budget: int | None = None,
                        jobs: int = 1) -> list[Collection]:
    cat = OrbitCategory(quiver, w)
    return enumerate_smc(cat.engine, cat.objects, budget, jobs)


def enumerate_smc_window(quiver: Quiver | HomEngine, lo: int, hi: int, budget: int | None = None,
                         jobs: int = 1) -> list[Collection]:
    """SMCs with every object in degrees lo..hi."""
    eng = quiver if isinstance(quiver, HomEngine) else HomEngine(quiver)
    return enumerate_smc(eng, eng.objects(range(lo, hi + 1)), budget, jobs)


def enumerate_inf_orthogonal(eng: HomEngine, objs: Sequence[DerivedObject]) -> list[Collection]:
    """All nonempty ∞-orthogonal collections drawn from `objs`."""
    objs = sorted(objs)
    return sorted(canonical(objs[i] for i in c) for c in cliques(_inf_orthogonal_graph(eng, objs)))


# -- the orbit category ----------------------------------------------------

class SMSModel:
    """Index-level tables of ind C_{-w} for w-orthogonality and Riedtmann tests."""

    def __init__(self, cat: OrbitCategory):
        self.cat = cat
        self.w = cat.w
        self.objects = cat.objects
        self.size = len(self.objects)
        self.hom = cat.hom_table
        self.shift = {k: cat.shift_index(k) for k in range(-self.w + 1, self.w)}

    def self_ok(self, i: int) -> bool:
        if self.hom[i, i] != 1:
            return False
        return all(self.hom[self.shift[k][i], i] == 0 for k in range(1, self.w))

    def pair_ok(self, i: int, j: int) -> bool:
        if self.hom[i, j] or self.hom[j, i]:
            return False
        for k in range(1, self.w):
            if self.hom[self.shift[k][i], j] or self.hom[self.shift[k][j], i]:
                return False
        return True

    def is_w_orthogonal(self, idx: Sequence[int]) -> bool:
        return all(self.self_ok(i) for i in idx) and all(
            self.pair_ok(i, j) for a, i in enumerate(idx) for j in idx[a + 1:])

    def left_riedtmann(self, idx: Sequence[int]) -> bool:
        """No nonzero z with Hom(Σ^k s, z) = 0 for all s in S and 0 <= k < w."""
        sources = [self.shift[k][s] if k else s for s in idx for k in range(self.w)]
        return all(any(self.hom[a, z] for a in sources) for z in range(self.size))

    def right_riedtmann(self, idx: Sequence[int]) -> bool:
        """No nonzero z with Hom(z, Σ^{-k} s) = 0 for all s in S and 0 <= k < w."""
        targets = [self.shift[-k][s] if k else s for s in idx for k in range(self.w)]
        return all(any(self.hom[z, b] for b in targets) for z in range(self.size))

    def is_sms_indices(self, idx: Sequence[int]) -> bool:
        return self.is_w_orthogonal(idx) and self.left_riedtmann(idx) and self.right_riedtmann(idx)

    def indices(self, s: Iterable[DerivedObject]) -> list[int]:
        return sorted({self.cat.position[self.cat.rep(x)] for x in s})

    def is_sms(self, s: Iterable[DerivedObject]) -> bool:
        s = list(s)
        idx = self.indices(s)
        if len(idx) != len(s):  # two members name the same orbit object
            return False
        return self.is_sms_indices(idx)


def is_sms(cat: OrbitCategory, s: Iterable[DerivedObject]) -> bool:
    return SMSModel(cat).is_sms(s)


def enumerate_sms(quiver: Quiver | HomEngine | OrbitCategory, w: int | None = None,
                  budget: int | None = None, jobs: int = 1) -> list[Collection]:
    """All w-simple-minded systems of C_{-w}, as canonical fundamental-domain lifts."""
    cat = quiver if isinstance(quiver, OrbitCategory) else OrbitCategory(quiver, w)
    model = SMSModel(cat)
    check_budget(model.size, cat.engine.n, budget)
    usable = {i for i in range(model.size) if model.self_ok(i)}
    adj = compatibility_graph(model.size, lambda i, j: i in usable and j in usable and model.pair_ok(i, j))
    found = list(cliques(adj))
    kept = _filter("sms", cat.quiver, cat.w, cat.objects, found, model.is_sms_indices, jobs)
    if any(len(c) != cat.engine.n for c in kept):
        raise AssertionError("found a w-simple-minded system without exactly n objects")
    return sorted(canonical(cat.objects[i] for i in c) for c in kept)

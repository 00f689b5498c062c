"""The maps relating SMCs, SMSs, w-sincere collections and noncrossing
partitions, plus drivers that check them exhaustively on one (quiver, w).

phi sends (u_1, ..., u_{w+1}) to the union of Σ^{w+1-i} S_i, where S_i are
the simples of the wide subcategory spanned by a T-reduced expression of u_i.
"""
from __future__ import annotations

import random
import time
from typing import Iterable, Sequence

from .homs import DerivedObject, HomEngine
from .orbit import DomainError, OrbitCategory
from .orthogonal import (canonical, enumerate_inf_orthogonal, enumerate_smc_in_fd,
                         enumerate_smc_window, enumerate_sms, exceptional_order, is_smc)
from .perp import wide_simples
from .quiver import Quiver
from .report import VerificationReport
from .weyl import WeylElement, WeylGroup


def _fmt(c: Iterable[DerivedObject]) -> list[str]:
    return [str(x) for x in c]


def pi_map(cat: OrbitCategory, s: Iterable[DerivedObject]) -> tuple:
    """Project a collection in the fundamental domain to C_{-w} (named by domain reps)."""
    s = list(s)
    for x in s:
        if not cat.in_domain(x):
            raise DomainError(f"{x} is outside the fundamental domain for w={cat.w}")
    return canonical(cat.rep(x) for x in s)


def theta(cat: OrbitCategory, s: Iterable[DerivedObject], check: bool = True) -> tuple:
    """The part of an SMC in the fundamental domain lying in degrees 0..w-1."""
    s = list(s)
    if check:
        if any(not cat.in_domain(x) for x in s):
            raise DomainError("theta needs a collection inside the fundamental domain")
        if not is_smc(cat.engine, s):
            raise ValueError("theta needs a simple-minded collection")
    return canonical(x for x in s if x.degree < cat.w)


def is_w_sincere(q: Quiver, s: Iterable[DerivedObject], w: int) -> bool:
    support = set()
    for x in s:
        if not 0 <= x.degree <= w - 1:
            raise ValueError(f"{x} is outside degrees 0..{w - 1}")
        support.update(i for i, d in enumerate(x.root) if d > 0)
    return len(support) == q.n


def phi(group: WeylGroup, eng: HomEngine, t: Sequence[WeylElement],
        rng: random.Random | None = None) -> tuple:
    w = len(t) - 1
    total = sum(group.abs_length(u) for u in t)
    if total != group.n:
        raise ValueError(f"part lengths add to {total}, not {group.n}")
    out = []
    for i, u in enumerate(t, start=1):
        roots = group.t_reduced_expression(u, rng)
        if len(roots) != group.abs_length(u):
            raise AssertionError("T-reduced expression has the wrong length")
        for r in roots:
            assert r in eng.index, f"reflection root {r} is not a module"
        if roots:
            out += [DerivedObject(r, w + 1 - i) for r in wide_simples(eng, roots, len(roots))]
    return canonical(out)


# -- drivers -----------------------------------------------------------------

def _finish(q, w, theorem, counts, ok, witness, start, timing) -> VerificationReport:
    elapsed = int((time.perf_counter() - start) * 1000) if timing else None
    return VerificationReport(q.type_name, w, theorem, counts, ok, witness if not ok else None, elapsed)


def verify_theorem_a(q: Quiver, w: int, budget: int | None = None, jobs: int = 1,
                     timing: bool = False) -> VerificationReport:
    start = time.perf_counter()
    cat = OrbitCategory(q, w)
    smcs = enumerate_smc_in_fd(cat.engine, w, budget, jobs)
    images = [pi_map(cat, s) for s in smcs]
    sms = set(enumerate_sms(cat, budget=budget, jobs=jobs))
    image_set = set(images)
    injective = len(image_set) == len(images)
    ok = injective and image_set == sms
    witness = {"not_sms": [_fmt(c) for c in sorted(image_set - sms)[:5]],
               "missed_sms": [_fmt(c) for c in sorted(sms - image_set)[:5]],
               "injective": injective}
    counts = {"smc": len(smcs), "sms": len(sms)}
    return _finish(q, w, "A", counts, ok, witness, start, timing)


def verify_theorem_b(q: Quiver, w: int, budget: int | None = None, jobs: int = 1,
                     seed: int | None = None, timing: bool = False,
                     full_count: bool = False) -> VerificationReport:
    """phi is injective on positive tuples with image the SMCs in the domain.

    Non-positive tuples must land outside that set.  With full_count the
    number of all tuples is also compared with SMCs in degrees 0..w.
    """
    start = time.perf_counter()
    group = WeylGroup(q)
    cat = OrbitCategory(q, w)
    eng = cat.engine
    rng = random.Random(seed) if seed is not None else None
    tuples = group.nc_tuples(w)
    smcs = set(enumerate_smc_in_fd(eng, w, budget, jobs))
    pos_images, bad_neg, not_smc = {}, [], []
    n_pos = 0
    for t in tuples:
        img = phi(group, eng, t, rng)
        if group.is_positive(t):
            n_pos += 1
            pos_images.setdefault(img, []).append(t)
            if not is_smc(eng, img):
                not_smc.append(_fmt(img))
        elif img in smcs:
            bad_neg.append(_fmt(img))
    image_set = set(pos_images)
    injective = len(image_set) == n_pos
    ok = injective and image_set == smcs and not bad_neg and not not_smc
    counts = {"nc": len(tuples), "nc_positive": n_pos, "smc_in_fd": len(smcs)}
    if full_count:
        counts["smc_degrees_0_to_w"] = len(enumerate_smc_window(eng, 0, w, budget, jobs))
        ok = ok and counts["smc_degrees_0_to_w"] == len(tuples)
    witness = {"injective": injective,
               "image_not_smc": not_smc[:5],
               "nonpositive_hits": bad_neg[:5],
               "missed_smc": [_fmt(c) for c in sorted(smcs - image_set)[:5]],
               "extra_image": [_fmt(c) for c in sorted(image_set - smcs)[:5]]}
    return _finish(q, w, "B", counts, ok, witness, start, timing)


def theta_target(q: Quiver | HomEngine, w: int) -> list[tuple]:
    """Exceptionally orderable, w-sincere ∞-orthogonal collections in degrees 0..w-1."""
    eng = q if isinstance(q, HomEngine) else HomEngine(q)
    objs = eng.objects(range(w))
    return [c for c in enumerate_inf_orthogonal(eng, objs)
            if exceptional_order(eng, c) is not None and is_w_sincere(eng.quiver, c, w)]


def verify_theta(q: Quiver, w: int, budget: int | None = None, jobs: int = 1,
                 timing: bool = False) -> VerificationReport:
    start = time.perf_counter()
    cat = OrbitCategory(q, w)
    smcs = enumerate_smc_in_fd(cat.engine, w, budget, jobs)
    images = [theta(cat, s, check=False) for s in smcs]
    target = set(theta_target(cat.engine, w))
    image_set = set(images)
    injective = len(image_set) == len(images)
    ok = injective and image_set == target
    witness = {"injective": injective,
               "outside_target": [_fmt(c) for c in sorted(image_set - target)[:5]],
               "missed_target": [_fmt(c) for c in sorted(target - image_set)[:5]]}
    counts = {"smc_in_fd": len(smcs), "target": len(target)}
    return _finish(q, w, "Theta", counts, ok, witness, start, timing)

"""Quivers, their integer bilinear forms and positive roots.

Vertices are 1-based in every external representation (text, JSON, CLI)
and 0-based internally. Dimension vectors are plain tuples of ints.
"""
from __future__ import annotations

import json
import re
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

Root = tuple  # tuple[int, ...]


class QuiverError(ValueError):
    """Invalid quiver data (cycle, bad vertex index, ...)."""


class QuiverSyntaxError(QuiverError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class NotDynkinError(QuiverError):
    """Raised by operations that need a finite root system."""


# arm lengths (edges) of the three branches at the trivalent vertex
_E_ARMS = {(1, 2, 2): "E6", (1, 2, 3): "E7", (1, 2, 4): "E8"}
_COXETER_NUMBER = {"E6": 12, "E7": 18, "E8": 30}


@dataclass(frozen=True)
class Quiver:
    n: int
    arrows: tuple[tuple[int, int], ...] = ()
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise QuiverError("vertex count must be non-negative")
        object.__setattr__(self, "arrows", tuple((int(s), int(t)) for s, t in self.arrows))
        for s, t in self.arrows:
            if not (1 <= s <= self.n and 1 <= t <= self.n):
                raise QuiverError(f"arrow {s}->{t}: vertex index out of range [1, {self.n}]")
            if s == t:
                raise QuiverError(f"arrow {s}->{t}: loops make the quiver cyclic (cycle detected)")
        if self.labels is not None and len(self.labels) != self.n:
            raise QuiverError("labels must name every vertex")
        if self._topological_order() is None:
            raise QuiverError("cycle detected in arrow digraph")

    # -- structure -----------------------------------------------------

    @cached_property
    def adjacency(self) -> np.ndarray:
        """A[i][j] = number of arrows i -> j (0-based)."""
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for s, t in self.arrows:
            a[s - 1, t - 1] += 1
        return a

    def _topological_order(self) -> list[int] | None:
        indeg = Counter(t for _, t in self.arrows)
        out: dict[int, list[int]] = {}
        for s, t in self.arrows:
            out.setdefault(s, []).append(t)
        ready = sorted(v for v in range(1, self.n + 1) if indeg[v] == 0)
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for t in out.get(v, []):
                indeg[t] -= 1
                if indeg[t] == 0:
                    ready.append(t)
            ready.sort()
        return order if len(order) == self.n else None

    def topological_order(self) -> list[int]:
        """Sources first; ties broken by ascending vertex index."""
        return self._topological_order()  # type: ignore[return-value]

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        nbrs: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for s, t in self.arrows:
            nbrs[s].add(t)
            nbrs[t].add(s)
        for v in range(1, self.n + 1):
            if v in seen:
                continue
            comp, queue = [], deque([v])
            seen.add(v)
            while queue:
                u = queue.popleft()
                comp.append(u)
                for x in sorted(nbrs[u] - seen):
                    seen.add(x)
                    queue.append(x)
            comps.append(sorted(comp))
        return comps

    @cached_property
    def component_types(self) -> tuple[str | None, ...]:
        return tuple(self._classify(c) for c in self.components())

    def _classify(self, comp: list[int]) -> str | None:
        k = len(comp)
        edges = Counter(frozenset(a) for a in self.arrows if a[0] in comp)
        if any(m > 1 for m in edges.values()):
            return None
        if len(edges) != k - 1:  # connected, so this means a cycle
            return None
        deg = Counter()
        for e in edges:
            for v in e:
                deg[v] += 1
        if all(d <= 2 for d in deg.values()):
            return f"A{k}"
        branch = [v for v, d in deg.items() if d >= 3]
        if len(branch) != 1 or deg[branch[0]] != 3:
            return None
        centre = branch[0]
        nbrs = {v: set() for v in comp}
        for e in edges:
            a, b = tuple(e)
            nbrs[a].add(b)
            nbrs[b].add(a)
        arms = []
        for start in nbrs[centre]:
            length, prev, cur = 1, centre, start
            while len(nbrs[cur]) == 2:
                prev, cur = cur, next(iter(nbrs[cur] - {prev}))
                length += 1
            arms.append(length)
        arms = tuple(sorted(arms))
        if arms[0] == arms[1] == 1:
            return f"D{k}"
        return _E_ARMS.get(arms)

    @property
    def is_dynkin(self) -> bool:
        return all(t is not None for t in self.component_types)

    @property
    def type_name(self) -> str:
        """'A3', 'D4', 'A1xA1', 'Kronecker', 'empty' or 'non-Dynkin'."""
        if self.n == 0:
            return "empty"
        if self.is_dynkin:
            return "x".join(self.component_types)  # type: ignore[arg-type]
        if self.n == 2 and len(self.arrows) == 2 and len(set(self.arrows)) == 1:
            return "Kronecker"
        return "non-Dynkin"

    @property
    def dynkin(self) -> str | None:
        return self.type_name if self.is_dynkin and self.n else None

    def require_dynkin(self) -> None:
        if not self.is_dynkin:
            raise NotDynkinError(f"quiver of type {self.type_name} has an infinite Weyl group")

    @property
    def coxeter_number(self) -> int:
        self.require_dynkin()
        h = 1
        for t in self.component_types:
            kind, rank = t[0], int(t[1:])
            h = max(h, rank + 1 if kind == "A" else 2 * rank - 2 if kind == "D" else _COXETER_NUMBER[t])
        return h

    # -- forms ---------------------------------------------------------

    @cached_property
    def euler(self) -> np.ndarray:
        e = np.eye(self.n, dtype=np.int64) - self.adjacency
        e.setflags(write=False)
        return e

    @cached_property
    def symmetric(self) -> np.ndarray:
        b = self.euler + self.euler.T
        b.setflags(write=False)
        return b

    @cached_property
    def path_counts(self) -> np.ndarray:
        """N[i][j] = number of paths i -> j; equals the inverse of the Euler matrix."""
        total = np.eye(self.n, dtype=np.int64)
        power = np.eye(self.n, dtype=np.int64)
        for _ in range(self.n):
            power = power @ self.adjacency
            total = total + power
        total.setflags(write=False)
        return total

    @cached_property
    def coxeter(self) -> np.ndarray:
        phi = -self.path_counts @ self.euler.T
        phi.setflags(write=False)
        return phi

    @cached_property
    def coxeter_inverse(self) -> np.ndarray:
        inv = -self.path_counts.T @ self.euler
        inv.setflags(write=False)
        return inv

    def euler_form(self, d, e) -> int:
        return int(np.asarray(d) @ self.euler @ np.asarray(e))

    def sym_form(self, d, e) -> int:
        return int(np.asarray(d) @ self.symmetric @ np.asarray(e))

    @cached_property
    def projectives(self) -> tuple[Root, ...]:
        return tuple(tuple(int(x) for x in self.path_counts[i]) for i in range(self.n))

    @cached_property
    def injectives(self) -> tuple[Root, ...]:
        return tuple(tuple(int(x) for x in self.path_counts[:, i]) for i in range(self.n))

    @cached_property
    def simples(self) -> tuple[Root, ...]:
        return tuple(tuple(int(i == j) for j in range(self.n)) for i in range(self.n))

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        """Positive roots in lexicographic order, by closure under simple reflections."""
        self.require_dynkin()
        b = self.symmetric
        seen = set(self.simples) | {tuple(-x for x in s) for s in self.simples}
        queue = deque(seen)
        while queue:
            r = queue.popleft()
            v = np.asarray(r)
            for i in range(self.n):
                c = int(v @ b[:, i])
                if c == 0:
                    continue
                img = list(r)
                img[i] -= c
                img = tuple(img)
                if img not in seen:
                    seen.add(img)
                    queue.append(img)
        return tuple(sorted(r for r in seen if all(x >= 0 for x in r)))

    @cached_property
    def root_index(self) -> dict[Root, int]:
        return {r: i for i, r in enumerate(self.positive_roots)}

    def is_root(self, d) -> bool:
        return tuple(d) in self.root_index

    def exceptional_vertex_order(self) -> list[int]:
        """Vertex order whose simples form an exceptional sequence.

        With E = I - A, Ext^1(S_i, S_j) counts arrows i -> j, so every
        arrow must point forward; any topological order does.  The result is
        re-checked against the Hom engine.
        """
        from .homs import HomEngine, DerivedObject

        order = self.topological_order()
        eng = HomEngine(self)
        objs = [DerivedObject(self.simples[v - 1], 0) for v in order]
        if not eng.is_exceptional_sequence(objs):
            raise AssertionError("simples in topological order are not exceptional")
        return order

    def describe(self) -> str:
        arrows = ", ".join(f"{s}->{t}" for s, t in self.arrows)
        return f"vertices {self.n}; arrows {arrows}" if arrows else f"vertices {self.n}"

    def to_json(self) -> dict:
        return {"vertices": self.n, "arrows": [list(a) for a in self.arrows]}


# -- parsing -----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<arrow>->)|(?P<word>[A-Za-z]+)|(?P<punct>[;,])|(?P<bad>\S))")


def _tokens(text: str):
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        kind = m.lastgroup
        if kind is None:
            break
        yield kind, m.group(kind), m.start(kind)
        pos = m.end()
    yield "end", "", len(text)


def _parse_text(text: str) -> Quiver:
    toks = list(_tokens(text))
    i = 0

    def expect(kind, value=None):
        nonlocal i
        k, v, p = toks[i]
        if k != kind or (value is not None and v.lower() != value):
            want = value or kind
            raise QuiverSyntaxError(f"expected {want!r}, found {v or 'end of input'!r}", p)
        i += 1
        return v, p

    expect("word", "vertices")
    n_str, n_pos = expect("int")
    n = int(n_str)
    if n < 1:
        raise QuiverSyntaxError("vertex count must be positive", n_pos)
    arrows = []
    if toks[i][0] == "punct" and toks[i][1] == ";":
        i += 1
    if toks[i][0] == "word":
        expect("word", "arrows")
        while toks[i][0] == "int":
            s, _ = expect("int")
            expect("arrow")
            t, _ = expect("int")
            arrows.append((int(s), int(t)))
            if toks[i][0] == "punct" and toks[i][1] == ",":
                i += 1
                if toks[i][0] != "int":
                    raise QuiverSyntaxError("expected arrow after ','", toks[i][2])
            else:
                break
        if toks[i][0] == "punct" and toks[i][1] == ";":
            i += 1
    k, v, p = toks[i]
    if k != "end":
        raise QuiverSyntaxError(f"unexpected {v!r}", p)
    return Quiver(n, tuple(arrows))


def _parse_json(text: str) -> Quiver:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise QuiverSyntaxError(exc.msg, exc.pos) from None
    if not isinstance(data, dict) or "vertices" not in data:
        raise QuiverSyntaxError("JSON quiver needs a 'vertices' field", 0)
    n = data["vertices"]
    if not isinstance(n, int) or n < 1:
        raise QuiverError("vertex count must be a positive integer")
    arrows = data.get("arrows", [])
    if not all(isinstance(a, (list, tuple)) and len(a) == 2 for a in arrows):
        raise QuiverError("arrows must be [source, target] pairs")
    labels = data.get("labels")
    return Quiver(n, tuple(tuple(a) for a in arrows), tuple(labels) if labels else None)


def parse_quiver(text: str) -> Quiver:
    """Parse the text grammar or the JSON form (detected by a leading '{')."""
    lines = [ln.split("#", 1)[0] for ln in text.splitlines()]
    body = "\n".join(lines)
    if body.lstrip().startswith("{"):
        return _parse_json(body)
    return _parse_text(body)


def dynkin_quiver(name: str) -> Quiver:
    """Linearly oriented A_n, or D_n / E_n with all arrows pointing away from vertex 1."""
    kind, n = name[0].upper(), int(name[1:])
    if kind == "A":
        return Quiver(n, tuple((i, i + 1) for i in range(1, n)))
    if kind == "D" and n >= 4:
        # 1 - 2 - ... - (n-2) with (n-1) and n attached to (n-2)
        arrows = [(i, i + 1) for i in range(1, n - 2)] + [(n - 2, n - 1), (n - 2, n)]
        return Quiver(n, tuple(arrows))
    if kind == "E" and n in (6, 7, 8):
        # chain 1 - 2 - ... - (n-1), vertex n attached to vertex 3
        arrows = [(i, i + 1) for i in range(1, n - 1)] + [(3, n)]
        return Quiver(n, tuple(arrows))
    raise QuiverError(f"unknown Dynkin type {name!r}")


KRONECKER = Quiver(2, ((1, 2), (1, 2)))

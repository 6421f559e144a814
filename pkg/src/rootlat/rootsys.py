"""Finite root systems of root lattices over real cyclotomic integers.

A root lattice is described by the Gram matrix of a basis of simple roots,
with entries in a real cyclotomic field.  From it this module computes

* the full root set, by closing the basis under reflections,
* positive and fundamental systems for a generic linear functional,
* the labelled Coxeter-Dynkin diagram and the Coxeter type,
* the orthogonal decomposition of a Gram matrix into irreducible blocks,
* an exact validation report (total positive definiteness, pairings).

Every comparison is exact; signs are decided by certified interval
enclosures in :mod:`rootlat.cyclo`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from rootlat._nt import lcm
from rootlat.cyclo import (
    CycElem,
    TwoCosPiRational,
    _ring,
    canonicalize,
    is_algebraic_integer,
    is_real,
    is_totally_positive,
    kronecker_classify,
    make_zeta_plus,
    sign,
    two_cos_pi,
)
from rootlat.errors import (
    CapExceeded,
    InadmissibleType,
    InvalidRootPair,
    NonGenericFunctional,
    UnrecognizedDiagram,
    VerificationFailure,
)

# ---------------------------------------------------------------------------
# Coxeter types


_RANKS = {"E": (6, 7, 8), "F": (4,), "H": (3, 4)}
_MIN_RANK = {"A": 1, "B": 2, "D": 4}


@dataclass(frozen=True, order=True)
class CoxeterType:
    """An irreducible finite Coxeter type.

    ``n`` is the rank, except for the dihedral family ``I2`` where it holds
    the label m.  I2(3) and I2(4) normalize to A2 and B2.
    """

    family: str
    n: int

    def __post_init__(self):
        fam, n = self.family, self.n
        if fam == "I2":
            if n < 3:
                raise InadmissibleType(f"I2({n}) needs m >= 3")
            if n in (3, 4):
                object.__setattr__(self, "family", "A" if n == 3 else "B")
                object.__setattr__(self, "n", 2)
            return
        if fam in _MIN_RANK:
            if n < _MIN_RANK[fam]:
                raise InadmissibleType(f"{fam}{n} is not admissible")
        elif fam in _RANKS:
            if n not in _RANKS[fam]:
                raise InadmissibleType(f"{fam}{n} is not admissible")
        else:
            raise InadmissibleType(f"unknown family {fam!r}")

    @property
    def rank(self) -> int:
        return 2 if self.family == "I2" else self.n

    def __str__(self) -> str:
        return f"I2({self.n})" if self.family == "I2" else f"{self.family}{self.n}"

    @classmethod
    def parse(cls, text: str) -> "CoxeterType":
        s = text.strip().replace(" ", "")
        m = re.fullmatch(r"I_?2\((\d+)\)", s)
        if m:
            return cls("I2", int(m.group(1)))
        m = re.fullmatch(r"([ABDEFH])_?(\d+)", s)
        if m:
            return cls(m.group(1), int(m.group(2)))
        raise InadmissibleType(f"cannot parse Coxeter type {text!r}")

    def expected_size(self) -> int:
        fam, n = self.family, self.n
        if fam == "A":
            return n * (n + 1)
        if fam == "B":
            return 2 * n * n
        if fam == "D":
            return 2 * n * (n - 1)
        if fam == "I2":
            return 2 * n
        return {("E", 6): 72, ("E", 7): 126, ("E", 8): 240,
                ("F", 4): 48, ("H", 3): 30, ("H", 4): 120}[(fam, n)]


def catalogue_edges(t: CoxeterType) -> list[tuple[int, int, int]]:
    """Labelled edges (i, j, m) of the catalogued diagram, 0-indexed, m >= 3."""
    fam, n = t.family, t.rank
    if fam == "I2":
        return [(0, 1, t.n)]
    if fam in "ABFH":
        edges = [(i, i + 1, 3) for i in range(n - 1)]
        if fam == "B":
            edges[-1] = (n - 2, n - 1, 4)
        elif fam == "F":
            edges[1] = (1, 2, 4)
        elif fam == "H":
            edges[0] = (0, 1, 5)
        return edges
    if fam == "D":
        return [(i, i + 1, 3) for i in range(n - 2)] + [(n - 3, n - 1, 3)]
    # E_n: a chain with the last node attached to the third one
    return [(i, i + 1, 3) for i in range(n - 2)] + [(2, n - 1, 3)]


def catalogue_types(n_max: int) -> list[CoxeterType]:
    """All irreducible types of rank <= n_max except the dihedral family."""
    out = [CoxeterType("A", n) for n in range(1, n_max + 1)]
    out += [CoxeterType("B", n) for n in range(2, n_max + 1)]
    out += [CoxeterType("D", n) for n in range(4, n_max + 1)]
    out += [CoxeterType(f, n) for f, ns in _RANKS.items() for n in ns if n <= n_max]
    return out


# ---------------------------------------------------------------------------
# Gram matrices


def _coerce(x) -> CycElem:
    return x if isinstance(x, CycElem) else CycElem.rational(Fraction(x))


class GramMatrix:
    """Symmetric matrix of real cyclotomic numbers, lifted to one modulus.

    The ambient modulus is the lcm of the conductors of the entries, so a
    matrix built from rationals lives at modulus 1 and B_n at modulus 8.
    """

    __slots__ = ("size", "modulus", "entries")

    def __init__(self, rows: Sequence[Sequence]):
        rows = [[_coerce(x) for x in row] for row in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("Gram matrix must be square")
        canon = {}
        for r in rows:
            for x in r:
                canon.setdefault(x.key(), canonicalize(x))
        modulus = lcm(*(c.modulus for c in canon.values()))
        self.size = n
        self.modulus = modulus
        self.entries = tuple(
            tuple(canon[x.key()].lift(modulus) for x in r) for r in rows
        )

    def __getitem__(self, ij: tuple[int, int]) -> CycElem:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GramMatrix):
            return NotImplemented
        return self.size == other.size and all(
            a == b for r, s in zip(self.entries, other.entries) for a, b in zip(r, s)
        )

    def __hash__(self) -> int:
        return hash((self.size, tuple(hash(x) for r in self.entries for x in r)))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in r) for r in self.entries)
        return f"GramMatrix([{body}])"

    def is_symmetric(self) -> bool:
        n = self.size
        return all(self.entries[i][j] == self.entries[j][i]
                   for i in range(n) for j in range(i + 1, n))

    def apply(self, v: Sequence[CycElem]) -> list[CycElem]:
        return [sum((g * x for g, x in zip(row, v)), CycElem.rational(0))
                for row in self.entries]

    def pair(self, x: Sequence[CycElem], y: Sequence[CycElem]) -> CycElem:
        gy = self.apply(y)
        return sum((a * b for a, b in zip(x, gy)), CycElem.rational(0))

    def restrict(self, indices: Sequence[int]) -> "GramMatrix":
        return GramMatrix([[self.entries[i][j] for j in indices] for i in indices])

    def to_rows(self) -> list[list[str]]:
        return [[str(canonicalize(x)) for x in r] for r in self.entries]


def gram_of_type(t: CoxeterType) -> GramMatrix:
    if not isinstance(t, CoxeterType):
        t = CoxeterType.parse(str(t))
    n = t.rank
    rows: list[list] = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, m in catalogue_edges(t):
        rows[i][j] = rows[j][i] = -two_cos_pi(1, m)
    return GramMatrix(rows)


def block_diagonal(*blocks: GramMatrix) -> GramMatrix:
    n = sum(b.size for b in blocks)
    rows: list[list] = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i in range(b.size):
            for j in range(b.size):
                rows[off + i][off + j] = b.entries[i][j]
        off += b.size
    return GramMatrix(rows)


# ---------------------------------------------------------------------------
# root vectors


@dataclass(frozen=True)
class RootVec:
    """Coordinates of a lattice vector over the simple basis."""

    coords: tuple[CycElem, ...]
    _hash: int = field(default=0, compare=False, repr=False)

    def __init__(self, coords: Iterable):
        coords = tuple(_coerce(c) for c in coords)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "_hash", hash(coords))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if not isinstance(other, RootVec):
            return NotImplemented
        return self._hash == other._hash and self.coords == other.coords

    def __neg__(self) -> "RootVec":
        return RootVec(-c for c in self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i: int) -> CycElem:
        return self.coords[i]

    def __str__(self) -> str:
        return "(" + ", ".join(str(canonicalize(c)) for c in self.coords) + ")"

    def sort_key(self) -> str:
        return str(self)


def sorted_roots(roots: Iterable[RootVec]) -> list[RootVec]:
    return sorted(roots, key=RootVec.sort_key)


def _vec_key(v: Sequence[CycElem]) -> tuple:
    return tuple((c.numerators, c.denominator) for c in v)


def _key_at(v: Sequence[CycElem], modulus: int) -> tuple:
    return _vec_key([c.lift(lcm(modulus, c.modulus)) for c in v])


def enumerate_roots(G: GramMatrix, cap: int | None = None) -> set[RootVec]:
    """All roots reachable from the simple basis by reflections.

    The closure under all root reflections equals the closure under the simple
    reflections (every root reflection is a product of simple ones), so the
    worklist only applies s_i: only coordinate i changes, by ``(G v)_i``.
    """
    n, N = G.size, G.modulus
    if cap is None:
        cap = 10_000
    zero = CycElem.rational(0).lift(N)
    one = CycElem.rational(1).lift(N)
    basis = [[one if i == j else zero for j in range(n)] for i in range(n)]
    seen: dict[tuple, list[CycElem]] = {}
    work = []
    for v in basis:
        for w in (v, [-x for x in v]):
            k = _vec_key(w)
            if k not in seen:
                seen[k] = w
                work.append(w)
    rows = G.entries
    while work:
        v = work.pop()
        for i in range(n):
            c = zero
            for g, x in zip(rows[i], v):
                if not g.is_zero() and not x.is_zero():
                    c = c + g * x
            if c.is_zero():
                continue
            w = list(v)
            w[i] = v[i] - c
            k = _vec_key(w)
            if k not in seen:
                seen[k] = w
                work.append(w)
                if len(seen) > cap:
                    raise CapExceeded(f"more than {cap} roots; Gram matrix is not of finite type")
    return {RootVec(v) for v in seen.values()}


def expected_roots_classical(t: CoxeterType) -> set[RootVec]:
    """Closed-form root sets of A_n, B_n and D_n over the simple basis."""
    if not isinstance(t, CoxeterType):
        t = CoxeterType.parse(str(t))
    n, fam = t.rank, t.family
    if fam not in "ABD" or fam == "I2":
        raise InadmissibleType(f"{t} is not a classical type")
    r2 = make_zeta_plus(8)
    out: set[RootVec] = set()

    def add(coeffs):
        v = RootVec(coeffs)
        out.add(v)
        out.add(-v)

    def interval(i, j, value=1):
        # indices i..j-1 (1-based, half-open) set to value
        return [value if i <= k < j else 0 for k in range(1, n + 1)]

    if fam == "A":
        for i in range(1, n + 1):
            for j in range(i + 1, n + 2):
                add(interval(i, j))
    elif fam == "B":
        for i, j in combinations(range(1, n + 1), 2):
            add(interval(i, j))
        for k in range(1, n + 1):
            v = [r2 * c for c in interval(k, n)]
            v[n - 1] = 1
            add(v)
        for i, j in combinations(range(1, n + 1), 2):
            v = [a + 2 * b for a, b in zip(interval(i, j), interval(j, n))]
            v[n - 1] = r2
            add(v)
    else:
        for i, j in combinations(range(1, n + 2), 2):
            if (i, j) == (n - 1, n + 1):
                continue  # alpha_{n-1} + alpha_n is not a root (norm 4)
            add(interval(i, j))
        for k, l in combinations(range(1, n - 1), 2):
            v = [a + 2 * b for a, b in zip(interval(k, l), interval(l, n - 1))]
            v[n - 2] = v[n - 1] = 1
            add(v)
        for m in range(1, n - 1):
            v = interval(m, n - 1)
            v[n - 1] = 1
            add(v)
    return out


# ---------------------------------------------------------------------------
# positive and fundamental systems


def _functional(G: GramMatrix, t: Sequence) -> list[CycElem]:
    tt = [_coerce(x) for x in t]
    if len(tt) != G.size:
        raise ValueError("functional has the wrong length")
    # row vector t^T G
    return [sum((tt[i] * G.entries[i][j] for i in range(G.size)), CycElem.rational(0))
            for j in range(G.size)]


def _evaluate(w: Sequence[CycElem], v: Sequence[CycElem]) -> CycElem:
    return sum((a * b for a, b in zip(w, v) if not a.is_zero() and not b.is_zero()),
               CycElem.rational(0))


def positive_system(roots: Iterable[RootVec], G: GramMatrix, t: Sequence) -> tuple[set[RootVec], set[RootVec]]:
    """Split roots by the sign of ``t^T G alpha``."""
    w = _functional(G, t)
    plus: set[RootVec] = set()
    minus: set[RootVec] = set()
    for r in roots:
        s = sign(_evaluate(w, r.coords))
        if s == 0:
            raise NonGenericFunctional(f"functional vanishes on root {r}", root=r)
        (plus if s > 0 else minus).add(r)
    return plus, minus


def default_functional(G: GramMatrix, roots: Iterable[RootVec], cap: int) -> list[int]:
    """Deterministic generic functional t_i = (cap+1)^(n-i), shifted if needed."""
    roots = list(roots)
    n = G.size
    base = [(cap + 1) ** (n - 1 - i) for i in range(n)]
    offsets = [i + 1 for i in range(n)]
    for j in range(0, 1000):
        t = [b + j * o for b, o in zip(base, offsets)]
        w = _functional(G, t)
        if all(not _evaluate(w, r.coords).is_zero() for r in roots):
            return t
    raise NonGenericFunctional("no generic functional found")


def _solve(matrix: list[list[CycElem]], rhs_cols: list[list[CycElem]]) -> list[list[CycElem]]:
    """Solve ``matrix @ X = rhs`` exactly by Gauss-Jordan elimination."""
    n = len(matrix)
    aug = [list(matrix[i]) + [col[i] for col in rhs_cols] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if not aug[r][c].is_zero()), None)
        if piv is None:
            raise VerificationFailure("candidate fundamental system is not a basis")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and not aug[r][c].is_zero():
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [[aug[i][n + k] for i in range(n)] for k in range(len(rhs_cols))]


def express_over(basis: Sequence[RootVec], roots: Sequence[RootVec]) -> list[list[CycElem]]:
    """Coefficients of each root over ``basis`` (columns of the basis matrix)."""
    n = len(basis)
    matrix = [[basis[j][i] for j in range(n)] for i in range(n)]
    return _solve(matrix, [list(r.coords) for r in roots])


def verify_fundamental(delta: Sequence[RootVec], roots: Iterable[RootVec]) -> None:
    """Check the defining coefficient conditions of a fundamental system.

    Every root must be a combination of ``delta`` whose coefficients are
    algebraic integers of one sign, each nonzero one being at least 1 in
    absolute value under the fixed embedding.
    """
    roots = list(roots)
    for r, coeffs in zip(roots, express_over(delta, roots)):
        signs = {sign(c) for c in coeffs} - {0}
        if len(signs) != 1:
            raise VerificationFailure(f"root {r} has mixed-sign coefficients")
        s = signs.pop()
        for c in coeffs:
            if not is_algebraic_integer(c):
                raise VerificationFailure(f"root {r} has non-integral coefficient {c}")
            if not c.is_zero() and sign(c * s - 1) < 0:
                raise VerificationFailure(f"root {r} has a coefficient in (0, 1)")


def fundamental_system(roots: Iterable[RootVec], G: GramMatrix, t: Sequence | None = None,
                       verify: bool = True) -> list[RootVec]:
    """The simple roots of the positive system cut out by ``t``.

    A positive root is simple iff its reflection permutes the remaining
    positive roots; the result is then checked against the coefficient
    definition unless ``verify`` is false.
    """
    roots = set(roots)
    if t is None:
        t = default_functional(G, roots, 2 * len(roots))
    plus, _ = positive_system(roots, G, t)
    N = lcm(G.modulus, *(c.modulus for r in roots for c in r.coords))
    keys = {_key_at(r.coords, N) for r in plus}
    delta = []
    for a in sorted_roots(plus):
        ga = G.apply(a.coords)
        ok = True
        for b in plus:
            if b == a:
                continue
            c = _evaluate(ga, b.coords)
            if c.is_zero():
                continue
            img = [x - c * y for x, y in zip(b.coords, a.coords)]
            if _key_at(img, N) not in keys:
                ok = False
                break
        if ok:
            delta.append(a)
    if len(delta) != G.size:
        raise VerificationFailure(f"found {len(delta)} simple roots, expected {G.size}")
    if verify:
        verify_fundamental(delta, roots)
    return delta


# ---------------------------------------------------------------------------
# diagrams and type recognition


def pair_label(a: RootVec, b: RootVec, G: GramMatrix) -> int:
    """The m with ``a.b = -2cos(pi/m)`` for two distinct simple roots."""
    value = G.pair(a.coords, b.coords)
    cls = kronecker_classify(value) if is_algebraic_integer(value) else None
    if not isinstance(cls, TwoCosPiRational) or cls.k != cls.m - 1 or cls.m < 2:
        raise InvalidRootPair(f"pairing {value} is not of the form -2cos(pi/m)")
    return cls.m


@dataclass(frozen=True)
class DiagramGraph:
    """Labelled Coxeter-Dynkin diagram; edges are (i, j, m) with i < j, m >= 3."""

    n: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        norm = []
        for i, j, m in self.edges:
            if i == j:
                raise ValueError("diagram has a loop")
            if m < 3:
                raise ValueError("edge labels must be >= 3")
            norm.append((min(i, j), max(i, j), m))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    def neighbours(self) -> dict[int, dict[int, int]]:
        adj: dict[int, dict[int, int]] = {v: {} for v in range(self.n)}
        for i, j, m in self.edges:
            adj[i][j] = m
            adj[j][i] = m
        return adj

    def components(self) -> list[list[int]]:
        adj = self.neighbours()
        seen: set[int] = set()
        out = []
        for v in range(self.n):
            if v in seen:
                continue
            comp, stack = [], [v]
            seen.add(v)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def to_dot(self) -> str:
        lines = ["graph diagram {"]
        lines += [f"  {v};" for v in range(self.n)]
        for i, j, m in self.edges:
            lines.append(f"  {i} -- {j};" if m == 3 else f'  {i} -- {j} [label="{m}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def diagram_of(delta: Sequence[RootVec], G: GramMatrix) -> DiagramGraph:
    edges = []
    for i, j in combinations(range(len(delta)), 2):
        m = pair_label(delta[i], delta[j], G)
        if m >= 3:
            edges.append((i, j, m))
    return DiagramGraph(len(delta), tuple(edges))


def diagram_of_type(t: CoxeterType) -> DiagramGraph:
    return DiagramGraph(t.rank, tuple(catalogue_edges(t)))


def _recognize_component(adj: dict[int, dict[int, int]], comp: list[int]) -> CoxeterType:
    k = len(comp)
    edges = {(min(a, b), max(a, b)): m for a in comp for b, m in adj[a].items()}
    if len(edges) != k - 1:
        raise UnrecognizedDiagram("diagram component contains a cycle")
    if k == 1:
        return CoxeterType("A", 1)
    if k == 2:
        return CoxeterType("I2", next(iter(edges.values())))
    degree = {v: len(adj[v]) for v in comp}
    labels = sorted(edges.values())
    branch = [v for v in comp if degree[v] >= 3]
    if not branch:
        ends = [v for v in comp if degree[v] == 1]
        order = [min(ends)]
        while len(order) < k:
            order.append(next(y for y in adj[order[-1]] if y not in order))
        path = [adj[order[i]][order[i + 1]] for i in range(k - 1)]
        if path[-1] != 3 and path[0] == 3:
            path.reverse()
        special = [i for i, m in enumerate(path) if m != 3]
        if not special:
            return CoxeterType("A", k)
        if len(special) == 1:
            pos, m = special[0], path[special[0]]
            if m == 4 and pos == 0:
                return CoxeterType("B", k)
            if m == 4 and k == 4 and pos == 1:
                return CoxeterType("F", 4)
            if m == 5 and pos == 0 and k in (3, 4):
                return CoxeterType("H", k)
        raise UnrecognizedDiagram(f"path with labels {path} is not catalogued")
    if len(branch) != 1 or degree[branch[0]] != 3 or labels[-1] != 3:
        raise UnrecognizedDiagram("branched diagram is not catalogued")
    centre = branch[0]
    arms = []
    for start in adj[centre]:
        length, prev, cur = 1, centre, start
        while degree[cur] == 2:
            prev, cur = cur, next(y for y in adj[cur] if y != prev)
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == arms[1] == 1:
        return CoxeterType("D", arms[2] + 3)
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return CoxeterType("E", arms[2] + 4)
    raise UnrecognizedDiagram(f"branched diagram with arms {arms} is not catalogued")


def recognize_type(D: DiagramGraph) -> list[CoxeterType]:
    """One catalogued type per connected component, in component order."""
    adj = D.neighbours()
    return [_recognize_component(adj, comp) for comp in D.components()]


def decompose(G: GramMatrix) -> list[tuple[tuple[int, ...], GramMatrix]]:
    """Irreducible orthogonal blocks of ``G`` ordered by smallest index."""
    n = G.size
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in combinations(range(n), 2):
        if not G.entries[i][j].is_zero():
            parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    blocks = sorted(groups.values())
    return [(tuple(b), G.restrict(b)) for b in blocks]


# ---------------------------------------------------------------------------
# validation


def _pivots(G: GramMatrix) -> list[CycElem] | None:
    """Pivots of Gaussian elimination without row swaps (None on a zero pivot).

    The k-th leading principal minor is the product of the first k pivots,
    and Galois conjugation respects that product, so the leading minors are
    totally positive iff every pivot is.
    """
    a = [list(r) for r in G.entries]
    n = G.size
    out = []
    for c in range(n):
        p = a[c][c]
        if p.is_zero():
            return None
        out.append(p)
        inv = 1 / p
        for r in range(c + 1, n):
            if not a[r][c].is_zero():
                f = a[r][c] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return out


def is_totally_positive_definite(G: GramMatrix) -> bool:
    if not G.is_symmetric() or not all(is_real(x) for r in G.entries for x in r):
        return False
    piv = _pivots(G)
    return piv is not None and all(is_totally_positive(p) for p in piv)


def pairing_values(G: GramMatrix, roots: Sequence[RootVec]) -> dict[tuple, CycElem]:
    """Distinct values of ``x^T G y`` over all ordered pairs of roots.

    Vectors are laid out as integer arrays of power-basis coefficients and
    the products are formed as cyclic convolutions with one integer matrix
    product, then reduced modulo the cyclotomic polynomial.  Non-integral
    input falls back to exact element arithmetic.
    """
    N, n = G.modulus, G.size
    vecs = [[c.lift(N) if c.modulus != N else c for c in r.coords] for r in roots]
    integral = all(c.denominator == 1 for v in vecs for c in v) and all(
        x.denominator == 1 for row in G.entries for x in row)
    if not integral or not roots:
        out = {}
        for x in roots:
            gx = G.apply(x.coords)
            for y in roots:
                v = _evaluate(gx, y.coords)
                out.setdefault(hash(v), v)
        return {(k,): v for k, v in out.items()}
    ring = _ring(N)
    phi = ring.phi
    # full-length (mod x^N - 1) representations
    X = np.zeros((len(vecs), n, N), dtype=np.int64)
    for r, v in enumerate(vecs):
        for i, c in enumerate(v):
            X[r, i, :phi] = c.numerators
    Gfull = np.zeros((n, n, N), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            Gfull[i, j, :phi] = G.entries[i][j].numerators

    def cyc_mul(a, b):
        # cyclic convolution along the last axis, broadcasting the rest
        out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.int64)
        for k in range(N):
            if a[..., k].any():
                out += a[..., k:k + 1] * np.roll(b, k, axis=-1)
        return out

    # W[s, i, :] = (G y_s)_i
    W = np.zeros((len(vecs), n, N), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if Gfull[i, j].any():
                W[:, i, :] += cyc_mul(Gfull[i, j][None, :], X[:, j, :])
    bound = int(np.abs(X).max()) * int(np.abs(W).max()) * n * N
    if bound >= 2**62:
        raise VerificationFailure("pairing table would overflow int64")
    # circulant expansion: P[r, s, k] = sum_{i,a} X[r,i,a] W[s,i,(k-a) mod N]
    idx = (np.arange(N)[None, :] - np.arange(N)[:, None]) % N  # [a, k]
    Wc = W[:, :, idx]  # [s, i, a, k]
    P = np.einsum("ria,siak->rsk", X, Wc, optimize=True)
    red = np.zeros((N, phi), dtype=np.int64)
    for k in range(N):
        for j, t in ring.powers[k]:
            red[k, j] = t
    reduced = (P.reshape(-1, N) @ red)
    distinct = np.unique(reduced, axis=0)
    return {tuple(int(x) for x in row): CycElem._raw(N, [int(x) for x in row]) for row in distinct}


@dataclass
class ValidationReport:
    checks: list[tuple[str, bool, str]]
    n_roots: int
    n_pairing_values: int

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.checks)

    @property
    def failed(self) -> list[str]:
        return [name for name, passed, _ in self.checks if not passed]


def validate_root_lattice(G: GramMatrix, roots: Iterable[RootVec]) -> ValidationReport:
    roots = sorted_roots(roots)
    checks: list[tuple[str, bool, str]] = []
    diag_ok = all(G.entries[i][i] == 2 for i in range(G.size))
    checks.append(("diagonal", diag_ok, "all diagonal entries equal 2" if diag_ok else "diagonal entry != 2"))
    sym = G.is_symmetric()
    checks.append(("symmetric", sym, ""))
    tpd = is_totally_positive_definite(G)
    checks.append(("totally_positive_definite", tpd, "leading minors positive under every conjugate"))
    bad_norm = [str(r) for r in roots if G.pair(r.coords, r.coords) != 2]
    checks.append(("self_pairing", not bad_norm, ", ".join(bad_norm[:3])))
    bad_int = [str(r) for r in roots if not all(is_algebraic_integer(c) for c in r.coords)]
    checks.append(("integral_coordinates", not bad_int, ", ".join(bad_int[:3])))
    n_values = 0
    if roots and sym:
        values = pairing_values(G, roots)
        n_values = len(values)
        bad = []
        for v in values.values():
            if not is_algebraic_integer(v) or not is_real(v) or not isinstance(kronecker_classify(v), TwoCosPiRational):
                bad.append(str(v))
        checks.append(("pairings_two_cos", not bad, ", ".join(bad[:3])))
    return ValidationReport(checks, len(roots), n_values)

"""The directed graph Q_K and the classification it drives.

Q_K has a vertex n > 1 for every n with ``zeta_{2n}^+`` in K, and an edge
x -> y when y/x is prime.  Rank-2 root lattices over the integers of K are
classified by the prime-power vertices together with the components that
contain a non-prime-power; the class of a lattice is the order of the group
of roots of unity it realizes.

Rank >= 3 existence only needs two membership tests: sqrt(2) for B_n and
F_4, the golden ratio for H_3 and H_4.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from rootlat._nt import divisors, is_prime, is_prime_power, lcm, totient
from rootlat.cyclo import (
    CycElem,
    canonicalize,
    conjugate_bound_leq,
    galois,
    is_algebraic_integer,
    make_zeta_plus,
    zeta,
)
from rootlat.errors import (
    ClassificationMismatch,
    IntegralityViolation,
    InvalidGenerator,
    NotInQK,
    NotSubfield,
)
from rootlat.fieldspec import (
    FieldDescriptor,
    contains_element,
    contains_zeta_plus,
    subfield_of,
)
from rootlat.rootsys import CoxeterType, GramMatrix


@dataclass(frozen=True)
class QGraph:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    components: tuple[tuple[int, ...], ...]

    def is_prime_power(self, n: int) -> bool:
        return is_prime_power(n)

    def component_of(self, n: int) -> tuple[int, ...]:
        for c in self.components:
            if n in c:
                return c
        raise NotInQK(f"{n} is not a vertex of Q_K")

    def to_dot(self) -> str:
        lines = ["digraph QK {", "  node [shape=circle];"]
        for v in self.vertices:
            shape = "doublecircle" if is_prime_power(v) else "circle"
            lines.append(f"  {v} [shape={shape}];")
        lines += [f"  {x} -> {y};" for x, y in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def compute_qk(F: FieldDescriptor) -> QGraph:
    """Vertices n > 1 with zeta_{2n}^+ in K.

    Every vertex satisfies phi(2n) <= 2d, hence n <= 4d^2.  Beyond 2 and 3
    (always present) the field Q(zeta_{2n}^+) has conductor n or 2n, which
    must divide M, so only divisors of M are scanned.
    """
    d = F.degree
    candidates = sorted({2, 3} | {n for n in divisors(F.modulus) if n >= 2})
    verts = [n for n in candidates
             if n <= 4 * d * d and totient(2 * n) <= 2 * d and contains_zeta_plus(F, n)]
    vset = set(verts)
    edges = sorted((x, y) for y in verts for x in verts if y % x == 0 and is_prime(y // x))
    g = nx.Graph()
    g.add_nodes_from(verts)
    g.add_edges_from(edges)
    comps = sorted(tuple(sorted(c)) for c in nx.connected_components(g))
    return QGraph(tuple(verts), tuple(edges), tuple(comps))


@dataclass(frozen=True, order=True)
class RankTwoClass:
    """A rank-2 isomorphism class: a prime-power vertex or a component."""

    mu_order: int
    kind: str  # "prime_power" or "component"
    members: tuple[int, ...]

    @property
    def label(self) -> str:
        return "A1xA1" if self.mu_order == 4 else f"I2({self.mu_order // 2})"

    @property
    def alias(self) -> str:
        """Human-readable label, with A2 and B2 for the crystallographic cases."""
        if self.mu_order == 4:
            return "A1xA1"
        return str(CoxeterType("I2", self.mu_order // 2))

    @property
    def irreducible(self) -> bool:
        return self.mu_order != 4

    def to_json(self) -> dict:
        return {"label": self.label, "mu_order": self.mu_order,
                "kind": self.kind, "members": list(self.members)}


def mu_order(members) -> int:
    """Order of the group generated by zeta_{2n}, n in members."""
    return lcm(*(2 * n for n in members))


def partition_classes(G: QGraph) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    P = [(q,) for q in G.vertices if is_prime_power(q)]
    R = [c for c in G.components if any(not is_prime_power(n) for n in c)]
    return P, R


def classify_rank2(F: FieldDescriptor) -> list[RankTwoClass]:
    P, R = partition_classes(compute_qk(F))
    out = [RankTwoClass(mu_order(c), "prime_power", c) for c in P]
    out += [RankTwoClass(mu_order(c), "component", c) for c in R]
    return sorted(out)


def _i2_exists_direct(F: FieldDescriptor, m: int) -> bool:
    G = compute_qk(F)
    if m not in G.vertices:
        return False
    if is_prime_power(m):
        return True
    return not any(v != m and v % m == 0 for v in G.vertices)


def irreducible_I2_exists(F: FieldDescriptor, m: int) -> bool:
    """Whether a rank-2 lattice of type I2(m) exists over the integers of K.

    The vertex criterion (prime power or maximal) is cross-checked against the
    class list; disagreement raises ``ClassificationMismatch``.
    """
    if m < 3:
        raise ValueError(f"need m >= 3, got {m}")
    direct = _i2_exists_direct(F, m)
    listed = any(c.mu_order == 2 * m for c in classify_rank2(F))
    if direct != listed:
        raise ClassificationMismatch(f"I2({m}) over {F}: vertex test {direct}, class list {listed}")
    return direct


# ---------------------------------------------------------------------------
# rank >= 3


@dataclass(frozen=True)
class ExistenceTable:
    entries: tuple[tuple[str, bool, str], ...]  # (type label, exists, condition)

    def as_dict(self) -> dict[str, bool]:
        return {t: e for t, e, _ in self.entries}

    def families(self) -> dict[str, bool]:
        out: dict[str, bool] = {}
        for t, e, _ in self.entries:
            fam = t[0]
            out[fam] = out.get(fam, False) or e
        return dict(sorted(out.items()))


def classify_rank_ge3(F: FieldDescriptor, n_max: int) -> ExistenceTable:
    if n_max < 3:
        raise ValueError("n_max must be >= 3")
    sqrt2 = contains_zeta_plus(F, 4)
    golden = contains_zeta_plus(F, 5)
    rows: list[tuple[str, bool, str]] = []
    rows += [(f"A{n}", True, "always") for n in range(3, n_max + 1)]
    rows += [(f"B{n}", sqrt2, "4 in Q_K") for n in range(3, n_max + 1)]
    rows += [(f"D{n}", True, "always") for n in range(4, n_max + 1)]
    rows += [(f"E{n}", True, "always") for n in (6, 7, 8) if n <= n_max]
    if n_max >= 4:
        rows.append(("F4", sqrt2, "4 in Q_K"))
    rows += [(f"H{n}", golden, "5 in Q_K") for n in (3, 4) if n <= n_max]
    return ExistenceTable(tuple(rows))


# ---------------------------------------------------------------------------
# explicit rank-2 lattices


def rank2_gram(n: int) -> GramMatrix:
    """Gram matrix of the basis {1, zeta_{2n}} for <x, y> = x conj(y) + conj(x) y."""
    if n < 2:
        raise InvalidGenerator(f"need n >= 2, got {n}")
    c = make_zeta_plus(2 * n)
    return GramMatrix([[2, c], [c, 2]])


def rank2_roots(F: FieldDescriptor, n: int) -> list[tuple[CycElem, CycElem]]:
    """Coordinates (a, b) with x = a + b zeta_{2n} for every root of unity x.

    The root group is mu_{2m'} with m' = n for a prime power and the lcm of
    the component of n otherwise.  The roots are not the reflection orbit of
    {1, zeta_{2n}} in general, so they are listed directly.
    """
    G = compute_qk(F)
    if n not in G.vertices:
        raise NotInQK(f"{n} is not a vertex of Q_K for {F}")
    m1 = n if is_prime_power(n) else lcm(*G.component_of(n))
    big = lcm(2 * m1, 2 * n, F.modulus)
    z = zeta(2 * n).lift(big)
    zbar = galois(z, -1)
    inv = 1 / (z - zbar)
    out = []
    for k in range(2 * m1):
        x = zeta(2 * m1, k).lift(big)
        xbar = galois(x, -1)
        b = (x - xbar) * inv
        a = x - b * z
        for c in (a, b):
            if not is_algebraic_integer(c) or not contains_element(F, c):
                raise IntegralityViolation(f"coordinate {c} of zeta_{2 * m1}^{k} is not in the integers of K")
        out.append((canonicalize(a), canonicalize(b)))
    return out


def rank2_pairing(n: int, x: tuple[CycElem, CycElem], y: tuple[CycElem, CycElem]) -> CycElem:
    g = rank2_gram(n)
    return g.pair(list(x), list(y))


def check_rank2_pairings(F: FieldDescriptor, n: int) -> bool:
    """Every pairing of two listed roots has all conjugates bounded by 2."""
    roots = rank2_roots(F, n)
    g = rank2_gram(n)
    seen = set()
    for x in roots:
        gx = g.apply(list(x))
        for y in roots:
            v = gx[0] * y[0] + gx[1] * y[1]
            if v in seen:
                continue
            seen.add(v)
            if not conjugate_bound_leq(v, 2):
                return False
    return True


# ---------------------------------------------------------------------------
# scalar extension


def extend_classes(F1: FieldDescriptor, F2: FieldDescriptor) -> dict[RankTwoClass, RankTwoClass]:
    if not subfield_of(F1, F2):
        raise NotSubfield(f"{F1} is not a subfield of {F2}")
    G2 = compute_qk(F2)
    by_members = {c.members: c for c in classify_rank2(F2)}
    out = {}
    for c in classify_rank2(F1):
        if c.kind == "prime_power":
            out[c] = by_members[c.members]
        else:
            out[c] = by_members[G2.component_of(c.members[0])]
    return out


# ---------------------------------------------------------------------------
# reports


def report(F: FieldDescriptor, n_max: int = 8) -> dict:
    G = compute_qk(F)
    table = classify_rank_ge3(F, n_max)
    return {
        "field": {"gens": list(F.gens), "modulus": F.modulus, "degree": F.degree},
        "qk": {"vertices": list(G.vertices), "edges": [list(e) for e in G.edges]},
        "rank2": [c.to_json() for c in classify_rank2(F)],
        "rank_ge3": table.families(),
        "rank_ge3_types": table.as_dict(),
    }


def report_json(F: FieldDescriptor, n_max: int = 8) -> str:
    return json.dumps(report(F, n_max), indent=2) + "\n"

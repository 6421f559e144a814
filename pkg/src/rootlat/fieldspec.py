"""Totally real abelian base fields given by real cyclotomic generators.

A field is ``K = Q(zeta_{2n}^+ : n in gens)`` with ``zeta^+ = zeta + zeta^-1``.
Generators are indexed the same way as the vertices of Q_K: the usual
notation ``zeta_28^+`` corresponds to ``n = 14``.

K is realized inside Q(zeta_M), M = lcm(2n : n in gens), as the fixed field of
the subgroup

    H = {a mod M : a = +-1 (mod 2n) for every n in gens}

of (Z/MZ)^x, so ``[K:Q] = phi(M) / |H|``.  All membership questions reduce to
congruence checks on H or to Galois invariance of explicit elements.

Only abelian fields are representable; this covers every quantity the
classification consumes, since Q_K and the tests ``c(X_n) in K`` are decided
inside the cyclotomic closure.
"""

from __future__ import annotations

import json
import math
from functools import cached_property
from typing import Iterable

import numpy as np

from rootlat._nt import lcm, totient, units_array
from rootlat.cyclo import CycElem, galois
from rootlat.errors import InvalidGenerator


class FieldDescriptor:
    """Immutable descriptor of ``K = Q(zeta_{2n}^+ : n in gens)``.

    Two descriptors compare equal when they describe the same subfield of the
    real numbers, even if their generator sets differ.
    """

    __slots__ = ("gens", "modulus", "group", "degree", "__dict__")

    def __init__(self, gens: Iterable[int] = ()):
        gens = tuple(sorted(set(int(n) for n in gens)))
        for n in gens:
            if n <= 1:
                raise InvalidGenerator(f"generator n must be >= 2, got {n}")
        modulus = lcm(*(2 * n for n in gens))
        cand = units_array(modulus)
        for n in gens:
            r = cand % (2 * n)
            cand = cand[(r == 1) | (r == 2 * n - 1)]
        group = frozenset(int(a) for a in cand)
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "degree", totient(modulus) // len(group))

    def __setattr__(self, name, value):
        raise AttributeError("FieldDescriptor is immutable")

    def __repr__(self) -> str:
        return f"FieldDescriptor(gens={list(self.gens)}, degree={self.degree})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldDescriptor):
            return NotImplemented
        return self.degree == other.degree and subfield_of(self, other)

    def __hash__(self) -> int:
        return hash(self.degree)

    def restricted_group(self, modulus: int) -> list[int]:
        """Gal(Q(zeta_L)/K) restricted to Q(zeta_modulus), L = lcm(M, modulus).

        By CRT a unit b mod ``modulus`` is such a restriction exactly when
        b = h (mod gcd(M, modulus)) for some h in H.
        """
        return [int(b) for b in self._restricted_array(modulus)]

    def _restricted_array(self, modulus: int) -> np.ndarray:
        g = math.gcd(self.modulus, modulus)
        residues = np.array(sorted({h % g for h in self.group}), dtype=np.int64)
        b = units_array(modulus)
        return b[np.isin(b % g, residues)]

    def restricted_generators(self, modulus: int) -> list[int]:
        """A generating set of :meth:`restricted_group`."""
        gens: list[int] = []
        span = {1 % modulus}
        for a in self.restricted_group(modulus):
            if a in span:
                continue
            gens.append(a)
            frontier = list(span)
            while frontier:
                nxt = []
                for x in frontier:
                    for g in gens:
                        y = x * g % modulus
                        if y not in span:
                            span.add(y)
                            nxt.append(y)
                frontier = nxt
        return gens

    @cached_property
    def _zeta_plus_cache(self) -> dict[int, bool]:
        return {}

    def to_json(self) -> str:
        return json.dumps({"gens": list(self.gens)})


def make_field(gens: Iterable[int] = ()) -> FieldDescriptor:
    return FieldDescriptor(gens)


def field_from_json(text: str) -> FieldDescriptor:
    data = json.loads(text)
    return FieldDescriptor(data.get("gens", []))


def contains_zeta_plus(field: FieldDescriptor, n: int) -> bool:
    """Decide ``zeta_{2n}^+ in K``: every restricted automorphism is +-1 mod 2n."""
    if n <= 1:
        raise InvalidGenerator(f"n must be >= 2, got {n}")
    cache = field._zeta_plus_cache
    if n not in cache:
        two_n = 2 * n
        b = field._restricted_array(two_n)
        cache[n] = bool(np.all((b == 1) | (b == two_n - 1)))
    return cache[n]


def contains_element(field: FieldDescriptor, a: CycElem) -> bool:
    """True iff ``a`` is fixed by the automorphisms of Q(zeta_N) that fix K."""
    return all(galois(a, u) == a for u in field.restricted_generators(a.modulus))


def subfield_of(small: FieldDescriptor, large: FieldDescriptor) -> bool:
    return all(contains_zeta_plus(large, n) for n in small.gens)

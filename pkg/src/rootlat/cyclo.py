"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is stored in the power basis ``{zeta_N**i : 0 <= i < phi(N)}``
after reduction modulo the N-th cyclotomic polynomial, as a tuple of
integer numerators over one positive common denominator.  The
representation at a fixed modulus is unique, so equality at a common
modulus is a tuple comparison.  Elements of different moduli are lifted
to the least common multiple before any binary operation.

The fixed real embedding sends ``zeta_N`` to ``exp(2*pi*i/N)``.  Real
values are enclosed in intervals with dyadic endpoints; zero is only ever
decided by the exact coefficient test.

The ring of integers of Q(zeta_N) is Z[zeta_N], and the power basis is a
Z-basis of it, so an element is an algebraic integer exactly when all its
power-basis coordinates are integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from mpmath import iv

from rootlat._nt import divisors, factorize, lcm, totient, units
from rootlat.errors import (
    DivisionByZero,
    NotAlgebraicInteger,
    NotCoprime,
    NotReal,
    VerificationFailure,
)

Rational = Union[int, Fraction]

__all__ = [
    "CycElem",
    "RealInterval",
    "RootOfUnity",
    "TwoCosPiRational",
    "SmallSet",
    "zeta",
    "rational",
    "make_zeta_plus",
    "two_cos_pi",
    "add",
    "sub",
    "mul",
    "neg",
    "invert",
    "galois",
    "is_real",
    "eval_real",
    "sign",
    "is_algebraic_integer",
    "conjugate_bound_leq",
    "kronecker_classify",
    "chebyshev_q",
    "poly_eval",
    "cyclotomic_unit_c",
    "minimal_polynomial",
    "conjugate_product",
    "canonicalize",
    "cyclotomic_polynomial",
]


# ---------------------------------------------------------------------------
# per-modulus tables


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, lowest first."""
    # x^n - 1 divided by every Phi_d, d a proper divisor of n
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        num = _divide_monic(num, cyclotomic_polynomial(d))
    return tuple(num)


def _divide_monic(num: list[int], den: Sequence[int]) -> list[int]:
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            quot[k - dd] = c
            for i, t in enumerate(den):
                num[k - dd + i] -= c * t
    assert not any(num[:dd]), "inexact cyclotomic division"
    return quot


class _Ring:
    """Reduction data for Q(zeta_n)."""

    __slots__ = ("n", "phi", "red", "powers")

    def __init__(self, n: int):
        self.n = n
        poly = cyclotomic_polynomial(n)
        self.phi = phi = len(poly) - 1
        # x^phi == sum(c * x^i for i, c in red)
        self.red = tuple((i, -c) for i, c in enumerate(poly[:-1]) if c)
        rows = []
        vec = [0] * phi
        vec[0] = 1
        for _ in range(n):
            rows.append(tuple((i, c) for i, c in enumerate(vec) if c))
            top = vec[-1]
            vec = [0] + vec[:-1]
            if top:
                for i, c in self.red:
                    vec[i] += top * c
        self.powers = tuple(rows)

    def reduce(self, prod: list[int]) -> tuple[int, ...]:
        phi = self.phi
        red = self.red
        for k in range(len(prod) - 1, phi - 1, -1):
            c = prod[k]
            if c:
                base = k - phi
                for i, t in red:
                    prod[base + i] += c * t
        return tuple(prod[:phi])

    def mul(self, x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
        phi = self.phi
        if phi == 1:
            return (x[0] * y[0],)
        ys = [(j, c) for j, c in enumerate(y) if c]
        prod = [0] * (2 * phi - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in ys:
                    prod[i + j] += a * b
        return self.reduce(prod)

    def permute(self, x: tuple[int, ...], u: int) -> tuple[int, ...]:
        """Coefficients of sigma_u applied to x."""
        n = self.n
        out = [0] * self.phi
        powers = self.powers
        for i, c in enumerate(x):
            if c:
                for j, t in powers[(i * u) % n]:
                    out[j] += c * t
        return tuple(out)

    def spread(self, x: tuple[int, ...], step: int) -> tuple[int, ...]:
        """Lift coefficients from modulus n // step into this ring."""
        out = [0] * self.phi
        powers = self.powers
        for i, c in enumerate(x):
            if c:
                for j, t in powers[i * step]:
                    out[j] += c * t
        return tuple(out)


@lru_cache(maxsize=None)
def _ring(n: int) -> _Ring:
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    return _Ring(n)


# ---------------------------------------------------------------------------
# elements


def _normalize(num: Sequence[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = math.gcd(den, *num)
    if g == 0 or not any(num):
        return tuple(0 for _ in num), 1
    if g != 1:
        return tuple(c // g for c in num), den // g
    return tuple(num), den


class CycElem:
    """An element of Q(zeta_N) with exact rational power-basis coordinates.

    >>> z = zeta(4)
    >>> z * z == -1
    True
    """

    __slots__ = ("modulus", "_num", "_den", "_real", "_hash")

    def __init__(self, modulus: int, coeffs: Sequence[Rational]):
        ring = _ring(modulus)
        if len(coeffs) != ring.phi:
            raise ValueError(
                f"expected {ring.phi} coefficients for modulus {modulus}, got {len(coeffs)}"
            )
        fr = [Fraction(c) for c in coeffs]
        den = lcm(*(c.denominator for c in fr))
        num = [c.numerator * (den // c.denominator) for c in fr]
        self._set(modulus, *_normalize(num, den))

    def _set(self, modulus: int, num: tuple[int, ...], den: int) -> None:
        self.modulus = modulus
        self._num = num
        self._den = den
        self._real = None
        self._hash = None

    @classmethod
    def _raw(cls, modulus: int, num: Sequence[int], den: int = 1) -> "CycElem":
        obj = cls.__new__(cls)
        obj._set(modulus, *_normalize(num, den))
        return obj

    @classmethod
    def rational(cls, q: Rational) -> "CycElem":
        q = Fraction(q)
        return cls._raw(1, (q.numerator,), q.denominator)

    # -- views -------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def key(self) -> tuple:
        """Exact identity at this modulus (not comparable across moduli)."""
        return (self.modulus, self._num, self._den)

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def lift(self, modulus: int) -> "CycElem":
        if modulus == self.modulus:
            return self
        if modulus % self.modulus:
            raise ValueError(f"cannot lift modulus {self.modulus} to {modulus}")
        ring = _ring(modulus)
        obj = CycElem.__new__(CycElem)
        obj._set(modulus, ring.spread(self._num, modulus // self.modulus), self._den)
        return obj

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "CycElem | None":
        if isinstance(other, CycElem):
            return other
        if isinstance(other, (int, Fraction)):
            return CycElem.rational(other)
        return None

    def _aligned(self, other: "CycElem") -> tuple["CycElem", "CycElem"]:
        if self.modulus == other.modulus:
            return self, other
        if other.modulus == 1:
            return self, other.lift(self.modulus)
        if self.modulus == 1:
            return self.lift(other.modulus), other
        m = lcm(self.modulus, other.modulus)
        return self.lift(m), other.lift(m)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._aligned(other)
        if a._den == b._den:
            num = [x + y for x, y in zip(a._num, b._num)]
            return CycElem._raw(a.modulus, num, a._den)
        num = [x * b._den + y * a._den for x, y in zip(a._num, b._num)]
        return CycElem._raw(a.modulus, num, a._den * b._den)

    __radd__ = __add__

    def __neg__(self) -> "CycElem":
        obj = CycElem.__new__(CycElem)
        obj._set(self.modulus, tuple(-c for c in self._num), self._den)
        return obj

    def __pos__(self) -> "CycElem":
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._aligned(other)
        if b.is_rational():
            c = b._num[0]
            return CycElem._raw(a.modulus, [x * c for x in a._num], a._den * b._den)
        if a.is_rational():
            c = a._num[0]
            return CycElem._raw(a.modulus, [x * c for x in b._num], a._den * b._den)
        num = _ring(a.modulus).mul(a._num, b._num)
        return CycElem._raw(a.modulus, num, a._den * b._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * invert(other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * invert(self)

    def __pow__(self, exponent: int) -> "CycElem":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return invert(self) ** (-exponent)
        result = CycElem.rational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # -- comparison ------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._aligned(other)
        return a._den == b._den and a._num == b._num

    def __hash__(self) -> int:
        if self._hash is None:
            c = canonicalize(self)
            if c.modulus == 1:
                self._hash = hash(Fraction(c._num[0], c._den))
            else:
                self._hash = hash((c.modulus, c._num, c._den))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"CycElem({self.modulus}, {str(self)!r})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            base = f"z({self.modulus})" if i == 1 else f"z({self.modulus})^{i}"
            if c == 1:
                terms.append(base)
            elif c == -1:
                terms.append("-" + base)
            else:
                terms.append(f"{c}*{base}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out


# ---------------------------------------------------------------------------
# constructors


def rational(q: Rational) -> CycElem:
    return CycElem.rational(q)


def zeta(n: int, k: int = 1) -> CycElem:
    """The power ``zeta_n**k`` of the fixed primitive n-th root of unity."""
    ring = _ring(n)
    num = [0] * ring.phi
    for j, t in ring.powers[k % n]:
        num[j] = t
    return CycElem._raw(n, num)


def make_zeta_plus(m: int) -> CycElem:
    """``zeta_m + zeta_m**-1 = 2*cos(2*pi/m)``; modulus 1 when m is 1 or 2."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if m <= 2:
        return CycElem.rational(2 if m == 1 else -2)
    return zeta(m) + zeta(m, -1)


def two_cos_pi(k: int, m: int) -> CycElem:
    """``2*cos(k*pi/m)`` as an element of modulus 2m (modulus 1 if rational)."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    r = Fraction(k, m) % 2
    if r.denominator <= 2 or r.denominator == 3:
        table = {Fraction(0): 2, Fraction(1): -2, Fraction(1, 2): 0, Fraction(3, 2): 0,
                 Fraction(1, 3): 1, Fraction(5, 3): 1, Fraction(2, 3): -1, Fraction(4, 3): -1}
        return CycElem.rational(table[r])
    return zeta(2 * m, k) + zeta(2 * m, -k)


# ---------------------------------------------------------------------------
# arithmetic entry points


def add(a: CycElem, b: CycElem) -> CycElem:
    return a + b


def sub(a: CycElem, b: CycElem) -> CycElem:
    return a - b


def mul(a: CycElem, b: CycElem) -> CycElem:
    return a * b


def neg(a: CycElem) -> CycElem:
    return -a


def invert(a: CycElem) -> CycElem:
    """Multiplicative inverse by an exact linear solve in the power basis."""
    if a.is_zero():
        raise DivisionByZero("inverse of zero")
    if a.is_rational():
        return CycElem._raw(a.modulus, [a._den] + [0] * (len(a._num) - 1), a._num[0])
    ring = _ring(a.modulus)
    phi = ring.phi
    # column j holds the coordinates of a * zeta^j
    cols = []
    vec = list(a._num)
    for _ in range(phi):
        cols.append(vec)
        top = vec[-1]
        vec = [0] + vec[:-1]
        if top:
            for i, t in ring.red:
                vec[i] += top * t
    matrix = [[cols[j][i] for j in range(phi)] for i in range(phi)]
    rhs = [0] * phi
    rhs[0] = a._den
    sol = _solve_integer_system(matrix, rhs)
    den = lcm(*(s.denominator for s in sol))
    return CycElem._raw(a.modulus, [s.numerator * (den // s.denominator) for s in sol], den)


def _solve_integer_system(matrix: list[list[int]], rhs: list[int]) -> list[Fraction]:
    """Solve a nonsingular integer system exactly (fraction-free elimination)."""
    n = len(matrix)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    prev = 1
    for k in range(n):
        piv = next((r for r in range(k, n) if aug[r][k]), None)
        if piv is None:
            raise DivisionByZero("singular system")
        if piv != k:
            aug[k], aug[piv] = aug[piv], aug[k]
        pk = aug[k][k]
        row_k = aug[k]
        for i in range(k + 1, n):
            row_i = aug[i]
            f = row_i[k]
            for j in range(k + 1, n + 1):
                row_i[j] = (row_i[j] * pk - f * row_k[j]) // prev
            row_i[k] = 0
        prev = pk
    sol = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(aug[i][n])
        for j in range(i + 1, n):
            if aug[i][j]:
                s -= aug[i][j] * sol[j]
        sol[i] = s / aug[i][i]
    return sol


def galois(a: CycElem, u: int) -> CycElem:
    """Apply the automorphism zeta_N -> zeta_N**u."""
    n = a.modulus
    if math.gcd(u, n) != 1:
        raise NotCoprime(f"{u} is not coprime to modulus {n}")
    u %= n
    if u == 1 or n <= 2:
        return a
    obj = CycElem.__new__(CycElem)
    obj._set(n, _ring(n).permute(a._num, u), a._den)
    return obj


def is_real(a: CycElem) -> bool:
    if a._real is None:
        a._real = a.modulus <= 2 or galois(a, -1) == a
    return a._real


def is_algebraic_integer(a: CycElem) -> bool:
    return a._den == 1


# ---------------------------------------------------------------------------
# the real embedding


@dataclass(frozen=True)
class RealInterval:
    """A closed interval with exact dyadic rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty interval")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi


def _endpoint_scaled(raw, prec: int, up: bool) -> int:
    sgn, man, exp, _ = raw
    man = -int(man) if sgn else int(man)
    shift = exp + prec
    if shift >= 0:
        return int(man) << shift
    q = -((-int(man)) >> -shift) if up else int(man) >> -shift
    return q


@lru_cache(maxsize=None)
def _cos_bounds(n: int, prec: int) -> tuple[tuple[int, int], ...]:
    """Integers (lo, hi) with lo <= 2^prec cos(2 pi k/n) <= hi for each k < n."""
    out = []
    saved = iv.prec
    iv.prec = prec + 24
    try:
        for k in range(n):
            if 4 * k % n == 0 or 6 * k % n == 0:
                # exact values 1, 0, -1, 1/2, -1/2
                r = Fraction(k, n)
                exact = {Fraction(0): 1, Fraction(1, 4): 0, Fraction(1, 2): -1, Fraction(3, 4): 0,
                         Fraction(1, 6): Fraction(1, 2), Fraction(5, 6): Fraction(1, 2),
                         Fraction(1, 3): Fraction(-1, 2), Fraction(2, 3): Fraction(-1, 2)}[r]
                scaled = Fraction(exact) * 2**prec
                out.append((math.floor(scaled), math.ceil(scaled)))
                continue
            c = iv.cos(2 * iv.pi * k / n)
            lo_raw, hi_raw = c._mpi_
            out.append((_endpoint_scaled(lo_raw, prec, False), _endpoint_scaled(hi_raw, prec, True)))
    finally:
        iv.prec = saved
    return tuple(out)


def _enclose(a: CycElem, u: int, prec: int) -> tuple[int, int, int]:
    """(lo, hi, scale): the real part of sigma_u(a) lies in [lo/scale, hi/scale]."""
    n = a.modulus
    bounds = _cos_bounds(n, prec)
    lo = hi = 0
    for i, c in enumerate(a._num):
        if c:
            blo, bhi = bounds[(i * u) % n]
            if c > 0:
                lo += c * blo
                hi += c * bhi
            else:
                lo += c * bhi
                hi += c * blo
    return lo, hi, a._den << prec


def eval_real(a: CycElem, width: Rational = Fraction(1, 2**53)) -> RealInterval:
    """Certified enclosure of a real element with width at most ``width``."""
    if not is_real(a):
        raise NotReal(f"{a} is not real")
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    prec = 64
    while True:
        lo, hi, scale = _enclose(a, 1, prec)
        if Fraction(hi - lo, scale) <= width:
            return RealInterval(Fraction(lo, scale), Fraction(hi, scale))
        prec *= 2


def _sign_real(a: CycElem, u: int = 1) -> int:
    if a.is_zero():
        return 0
    prec = 64
    while True:
        lo, hi, _ = _enclose(a, u, prec)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        prec *= 2


def sign(a: CycElem) -> int:
    """Exact sign of a real element under the fixed embedding."""
    if not is_real(a):
        raise NotReal(f"{a} is not real")
    return _sign_real(a)


def is_totally_positive(a: CycElem) -> bool:
    """True iff every real conjugate of ``a`` is strictly positive."""
    if not is_real(a):
        raise NotReal(f"{a} is not real")
    n = a.modulus
    return all(
        _sign_real(a, u) > 0 for u in units(n) if not (2 * u > n and n > 2)
    )


def _conjugate_abs_leq(a: CycElem, u: int, bound_sq: Fraction) -> bool:
    """Decide |sigma_u(a)| <= sqrt(bound_sq) for real a."""
    bn, bd = bound_sq.numerator, bound_sq.denominator
    prec = 64
    while prec <= 512:
        lo, hi, scale = _enclose(a, u, prec)
        s2 = scale * scale
        if max(lo * lo, hi * hi) * bd <= bn * s2:
            return True
        low_sq = 0 if lo <= 0 <= hi else min(lo * lo, hi * hi)
        if low_sq * bd > bn * s2:
            return False
        prec *= 2
    conj = galois(a, u)
    return _sign_real(bound_sq - conj * conj) >= 0


def conjugate_bound_leq(a: CycElem, bound) -> bool:
    """True iff every Galois conjugate of the real element ``a`` has |.| <= bound.

    ``bound`` must be a positive real whose square is rational (1, sqrt(2), 2).
    """
    if not is_real(a):
        raise NotReal(f"{a} is not real")
    b = CycElem._coerce(bound)
    if b is None:
        raise TypeError(f"unsupported bound {bound!r}")
    bsq = b * b
    if not bsq.is_rational() or sign(b) <= 0:
        raise ValueError(f"bound {bound} must be positive with rational square")
    bound_sq = bsq.to_fraction()
    n = a.modulus
    for u in units(n):
        if 2 * u > n and n > 2:
            continue  # sigma_{-u} agrees with sigma_u on real elements
        if not _conjugate_abs_leq(a, u, bound_sq):
            return False
    return True


# ---------------------------------------------------------------------------
# Kronecker classification


@dataclass(frozen=True)
class RootOfUnity:
    order: int

    def __str__(self) -> str:
        return f"RootOfUnity({self.order})"


@dataclass(frozen=True)
class SmallSet:
    """Membership in {0, 1, -1, sqrt(2), -sqrt(2)}; ``value`` is that literal."""

    value: str

    def __str__(self) -> str:
        return f"SmallSet({self.value})"


@dataclass(frozen=True)
class TwoCosPiRational:
    """The element equals ``2*cos(k*pi/m)`` with gcd(k, m) = 1 and 0 <= k <= m."""

    k: int
    m: int
    small: SmallSet | None = None

    def __str__(self) -> str:
        s = f"TwoCos({self.k},{self.m})"
        return s + f"/{self.small}" if self.small else s


KroneckerClass = Union[RootOfUnity, TwoCosPiRational, SmallSet, None]

_SMALL_VALUES = {
    (1, 2): "0",
    (1, 3): "1",
    (2, 3): "-1",
    (1, 4): "sqrt(2)",
    (3, 4): "-sqrt(2)",
}

_RATIONAL_TWO_COS = {2: (0, 1), -2: (1, 1), 0: (1, 2), 1: (1, 3), -1: (2, 3)}


def _root_of_unity_order(a: CycElem) -> int | None:
    # the roots of unity in Q(zeta_N) form the cyclic group of order lcm(2, N)
    total = lcm(2, a.modulus)
    if a ** total != 1:
        return None
    for d in divisors(total):
        if a ** d == 1:
            return d
    raise AssertionError("unreachable")


def _two_cos_search(a: CycElem) -> tuple[int, int]:
    if a.is_rational():
        value = a.to_fraction()
        if value.denominator == 1 and int(value) in _RATIONAL_TWO_COS:
            return _RATIONAL_TWO_COS[int(value)]
        raise VerificationFailure(f"rational {value} is not 2cos(r pi)")
    n = a.modulus
    lo, hi, scale = _enclose(a, 1, 64)
    x = max(-2.0, min(2.0, (lo + hi) / (2 * scale)))
    r = math.acos(x / 2) / math.pi
    bound = 2 * totient(n)
    # Q(2cos(k pi/m)) = Q(zeta_2m^+) has conductor dividing 2m; inside
    # Q(zeta_N) this forces m | 2N once the rational cases are excluded.
    for m in divisors(2 * n):
        if totient(2 * m) > bound:
            continue
        k0 = round(r * m)
        for k in (k0 - 1, k0, k0 + 1):
            if 0 <= k <= m and math.gcd(k, m) == 1 and abs(k / m - r) < 1e-6:
                if two_cos_pi(k, m) == a:
                    return k, m
    raise VerificationFailure(f"no 2cos(k pi/m) representation found for {a}")


def kronecker_classify(a: CycElem) -> KroneckerClass:
    """Decide which case of Kronecker's theorem applies to an algebraic integer.

    Real elements whose conjugates are bounded by 2 are reported as
    ``TwoCosPiRational`` (carrying a ``SmallSet`` flag when the conjugates are
    bounded by sqrt(2)); non-real roots of unity as ``RootOfUnity``; anything
    else yields ``None``.
    """
    if not is_algebraic_integer(a):
        raise NotAlgebraicInteger(f"{a} is not an algebraic integer")
    if a.is_zero():
        return TwoCosPiRational(1, 2, SmallSet("0"))
    if not is_real(a):
        order = _root_of_unity_order(a)
        return RootOfUnity(order) if order else None
    if not conjugate_bound_leq(a, 2):
        return None
    k, m = _two_cos_search(a)
    small = None
    if conjugate_bound_leq(a, make_zeta_plus(8)):
        if (k, m) not in _SMALL_VALUES:
            raise VerificationFailure(f"{a} bounded by sqrt(2) but equals 2cos({k}pi/{m})")
        small = SmallSet(_SMALL_VALUES[(k, m)])
    return TwoCosPiRational(k, m, small)


# ---------------------------------------------------------------------------
# Chebyshev polynomials and cyclotomic units


@lru_cache(maxsize=None)
def chebyshev_q(k: int) -> tuple[int, ...]:
    """Coefficients (lowest first) of q_k(t) = U_k(t/2): q_0 = 1, q_1 = t,
    q_{k+1} = t q_k - q_{k-1}."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return (1,)
    if k == 1:
        return (0, 1)
    prev, cur = chebyshev_q(k - 2), chebyshev_q(k - 1)
    nxt = [0] + list(cur)
    for i, c in enumerate(prev):
        nxt[i] -= c
    return tuple(nxt)


def poly_eval(coeffs: Sequence, x: CycElem) -> CycElem:
    result = CycElem.rational(0)
    for c in reversed(coeffs):
        result = result * x + c
    return result


def cyclotomic_unit_c(m: int, k: int) -> CycElem:
    """``sin(k pi/m) / sin(pi/m)`` evaluated as q_{k-1}(2cos(pi/m))."""
    if m < 2 or k < 1:
        raise ValueError("need m >= 2 and k >= 1")
    return poly_eval(chebyshev_q(k - 1), make_zeta_plus(2 * m))


def _conjugates(a: CycElem) -> list[CycElem]:
    seen = {}
    for u in units(a.modulus):
        c = galois(a, u)
        seen.setdefault(c.key(), c)
    return list(seen.values())


def minimal_polynomial(a: CycElem) -> tuple[Fraction, ...]:
    """Monic minimal polynomial over Q, coefficients lowest first."""
    poly = [CycElem.rational(1)]
    for c in _conjugates(a):
        nxt = [CycElem.rational(0)] * (len(poly) + 1)
        for i, p in enumerate(poly):
            nxt[i + 1] = nxt[i + 1] + p
            nxt[i] = nxt[i] - p * c
        poly = nxt
    return tuple(p.to_fraction() for p in poly)


def conjugate_product(a: CycElem) -> Fraction:
    """Product of the distinct Galois conjugates of ``a`` (its norm to Q from Q(a))."""
    mp = minimal_polynomial(a)
    deg = len(mp) - 1
    return mp[0] * (-1) ** deg


def canonicalize(a: CycElem) -> CycElem:
    """Rewrite ``a`` at the smallest modulus whose field contains it."""
    if a.is_rational():
        return CycElem._raw(1, (a._num[0],), a._den)
    cur = a
    changed = True
    while changed:
        changed = False
        n = cur.modulus
        for p, _ in factorize(n):
            d = n // p
            if _in_subfield(cur, d):
                cur = _restrict(cur, d)
                changed = True
                break
    return cur


def _in_subfield(a: CycElem, d: int) -> bool:
    n = a.modulus
    # generators of the kernel of (Z/n)^x -> (Z/d)^x
    kernel = [u for u in units(n) if u % d == 1 % d and u != 1]
    return all(galois(a, u) == a for u in kernel)


@lru_cache(maxsize=None)
def _restriction_data(n: int, d: int) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...], int]:
    """Rows and scaled inverse expressing Q(zeta_d) coordinates from Q(zeta_n) ones."""
    ring_d = _ring(d)
    ring_n = _ring(n)
    step = n // d
    # columns: lifts of the basis of Q(zeta_d)
    cols = []
    for j in range(ring_d.phi):
        col = [0] * ring_n.phi
        for i, t in ring_n.powers[j * step]:
            col[i] = t
        cols.append(col)
    # pick phi(d) rows that make the system square and nonsingular
    rows: list[int] = []
    basis: list[list[Fraction]] = []
    for i in range(ring_n.phi):
        vec = [Fraction(cols[j][i]) for j in range(ring_d.phi)]
        reduced = _reduce_against(vec, basis)
        if any(reduced):
            basis.append(reduced)
            rows.append(i)
        if len(rows) == ring_d.phi:
            break
    matrix = [[cols[j][i] for j in range(ring_d.phi)] for i in rows]
    k = len(rows)
    inv_cols = [_solve_integer_system(matrix, [int(r == c) for r in range(k)]) for c in range(k)]
    den = lcm(*(x.denominator for col in inv_cols for x in col))
    inv = tuple(
        tuple(int(inv_cols[c][r] * den) for c in range(k)) for r in range(k)
    )
    return tuple(rows), inv, den


def _restrict(a: CycElem, d: int) -> CycElem:
    n = a.modulus
    rows, inv, den = _restriction_data(n, d)
    rhs = [a._num[i] for i in rows]
    num = [sum(x * y for x, y in zip(row, rhs)) for row in inv]
    out = CycElem._raw(d, num, den * a._den)
    if out.lift(n) != a:
        raise VerificationFailure("restriction to subfield failed")
    return out


def _reduce_against(vec: list[Fraction], basis: list[list[Fraction]]) -> list[Fraction]:
    vec = vec[:]
    for b in basis:
        piv = next(i for i, x in enumerate(b) if x)
        if vec[piv]:
            f = vec[piv] / b[piv]
            vec = [x - f * y for x, y in zip(vec, b)]
    return vec

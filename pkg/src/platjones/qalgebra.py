"""SU(2)_q algebra at a root of unity.

Everything is parameterized by a level k >= 1 with deformation parameter
q = exp(2*pi*i/(k+2)) (optionally the conjugate root).  Spins are stored as
twice-values (integers 0..k) so that all admissibility arithmetic is exact;
only the final trigonometric evaluation touches floats.

Quantum integers are computed from the real sine-ratio form
[x] = sin(pi x/(k+2)) / sin(pi/(k+2)), which is manifestly real and avoids
spurious imaginary parts from complex q-powers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import AdmissibilityError, DomainError

#: relative comparison tolerance used throughout the package
TOL = 1e-9


@dataclass(frozen=True)
class RootOfUnity:
    """Level k and the primitive root q = exp(2*pi*i/(k+2)).

    ``conjugate=True`` selects q = exp(-2*pi*i/(k+2)); conjugating q
    conjugates every invariant computed from it.
    """

    k: int
    conjugate: bool = False

    def __post_init__(self) -> None:
        if self.k < 1:
            raise DomainError(f"level k must be >= 1, got {self.k}")

    @property
    def angle(self) -> float:
        """arg(q); all q-powers are exp(1j * angle * exponent)."""
        a = 2.0 * math.pi / (self.k + 2)
        return -a if self.conjugate else a

    @property
    def q(self) -> complex:
        return complex(math.cos(self.angle), math.sin(self.angle))

    def qpow(self, exponent: float) -> complex:
        """q**exponent for real (possibly fractional) exponents."""
        return complex(math.cos(self.angle * exponent), math.sin(self.angle * exponent))

    def max_twice(self) -> int:
        """Largest admissible twice-spin (= k)."""
        return self.k


@dataclass(frozen=True, order=True)
class Spin:
    """Half-integer spin stored as its twice-value."""

    twice: int

    def __post_init__(self) -> None:
        if self.twice < 0:
            raise DomainError(f"spin twice-value must be >= 0, got {self.twice}")

    @property
    def value(self) -> float:
        return self.twice / 2.0

    def casimir(self) -> float:
        """Quadratic Casimir j(j+1)."""
        j = self.twice / 2.0
        return j * (j + 1.0)


def casimir(j: Spin | int) -> float:
    """j(j+1) for a Spin or a twice-value."""
    tw = j.twice if isinstance(j, Spin) else j
    half = tw / 2.0
    return half * (half + 1.0)


def qint(x: float, root: RootOfUnity) -> float:
    """Quantum integer [x] = sin(pi x/(k+2)) / sin(pi/(k+2))."""
    d = root.k + 2
    return math.sin(math.pi * x / d) / math.sin(math.pi / d)


def qfact(n: int, root: RootOfUnity) -> float:
    """q-factorial [n]! = [n][n-1]...[1], with [0]! = 1.

    Only defined while every entering quantum integer is positive, i.e.
    n <= k+1 ([k+2] = 0 would make the factorial vanish identically).
    """
    if n < 0 or n > root.k + 1:
        raise DomainError(f"[{n}]! undefined at level k={root.k} (need 0 <= n <= k+1)")
    return _qfact_table(root.k)[n]


@lru_cache(maxsize=None)
def _qfact_table(k: int) -> tuple[float, ...]:
    root = RootOfUnity(k)
    out = [1.0]
    for i in range(1, k + 2):
        out.append(out[-1] * qint(i, root))
    return tuple(out)


def admissible(a: Spin | int, b: Spin | int, c: Spin | int, root: RootOfUnity) -> bool:
    """SU(2)_k fusion rules: triangle inequality, integer total, a+b+c <= k."""
    ta = a.twice if isinstance(a, Spin) else a
    tb = b.twice if isinstance(b, Spin) else b
    tc = c.twice if isinstance(c, Spin) else c
    if (ta + tb + tc) % 2:
        return False
    return abs(ta - tb) <= tc <= ta + tb and ta + tb + tc <= 2 * root.k


@dataclass(frozen=True)
class QRacahArgs:
    """The six spins of a q-6j symbol.

    The channel ``l`` couples (j1,j2) and (j3,j4); ``m`` couples (j2,j3)
    and (j1,j4).  All four triples must satisfy the fusion rules.
    """

    j1: Spin
    j2: Spin
    j3: Spin
    j4: Spin
    l: Spin
    m: Spin

    def triples(self) -> tuple[tuple[Spin, Spin, Spin], ...]:
        return (
            (self.j1, self.j2, self.l),
            (self.j3, self.j4, self.l),
            (self.j1, self.j4, self.m),
            (self.j2, self.j3, self.m),
        )

    def validate(self, root: RootOfUnity) -> None:
        for (a, b, c) in self.triples():
            if not admissible(a, b, c, root):
                raise AdmissibilityError(
                    f"triple (2j = {a.twice}, {b.twice}, {c.twice}) violates fusion rules at k={root.k}"
                )


def _tri_delta(ta: int, tb: int, tc: int, k: int) -> float:
    # sqrt([-a+b+c]! [a-b+c]! [a+b-c]! / [a+b+c+1]!), twice-value args
    f = _qfact_table(k)
    return math.sqrt(
        f[(-ta + tb + tc) // 2] * f[(ta - tb + tc) // 2] * f[(ta + tb - tc) // 2]
        / f[(ta + tb + tc) // 2 + 1]
    )


@lru_cache(maxsize=None)
def _racah_cached(t1: int, t2: int, t3: int, t4: int, tl: int, tm: int, k: int) -> float:
    root = RootOfUnity(k)
    for (a, b, c) in ((t1, t2, tl), (t3, t4, tl), (t1, t4, tm), (t2, t3, tm)):
        if not admissible(a, b, c, root):
            return 0.0
    pref = (_tri_delta(t1, t2, tl, k) * _tri_delta(t3, t4, tl, k)
            * _tri_delta(t1, t4, tm, k) * _tri_delta(t2, t3, tm, k))
    # Summation variable x runs over integers where every factorial argument
    # lies in [0, k+1]; terms past x = k vanish since [k+2] = 0 enters the
    # numerator factorial, so the upper bound is clamped to k.
    lo = max(t1 + t2 + tl, t3 + t4 + tl, t1 + t4 + tm, t2 + t3 + tm) // 2
    hi = min(t1 + t2 + t3 + t4, t1 + t3 + tl + tm, t2 + t4 + tl + tm) // 2
    hi = min(hi, k)
    f = _qfact_table(k)
    total = 0.0
    for x in range(lo, hi + 1):
        num = (-1.0) ** x * f[x + 1]
        den = (f[x - (t1 + t2 + tl) // 2] * f[x - (t3 + t4 + tl) // 2]
               * f[x - (t1 + t4 + tm) // 2] * f[x - (t2 + t3 + tm) // 2]
               * f[(t1 + t2 + t3 + t4) // 2 - x]
               * f[(t1 + t3 + tl + tm) // 2 - x]
               * f[(t2 + t4 + tl + tm) // 2 - x])
        total += num / den
    return pref * total


def qracah(args: QRacahArgs, root: RootOfUnity) -> float:
    """q-Racah coefficient: Delta-prefactored alternating sum over x.

    Raises AdmissibilityError if any of the four coupling triples fails the
    fusion rules.  The result is real; it does not depend on the sign
    convention of q.
    """
    args.validate(root)
    return _racah_cached(args.j1.twice, args.j2.twice, args.j3.twice, args.j4.twice,
                         args.l.twice, args.m.twice, root.k)


def duality6j(args: QRacahArgs, root: RootOfUnity) -> float:
    """Elementary duality (q-6j) coefficient A_m^l.

    A_m^l = (-1)^(j1+j2+j3+j4) sqrt([2m+1][2l+1]) x (q-Racah symbol).
    The phase exponent is asserted integral (guaranteed by admissibility).
    """
    args.validate(root)
    return _duality6j_raw(args.j1.twice, args.j2.twice, args.j3.twice, args.j4.twice,
                          args.l.twice, args.m.twice, root.k)


def _duality6j_raw(t1: int, t2: int, t3: int, t4: int, tl: int, tm: int, k: int) -> float:
    """Zero-returning variant used by matrix assembly (no admissibility raise)."""
    v = _racah_cached(t1, t2, t3, t4, tl, tm, k)
    if v == 0.0:
        return 0.0
    total = t1 + t2 + t3 + t4
    assert total % 2 == 0, "phase exponent j1+j2+j3+j4 must be an integer"
    phase = -1.0 if (total // 2) % 2 else 1.0
    root = RootOfUnity(k)
    return phase * math.sqrt(qint(tm + 1, root) * qint(tl + 1, root)) * v


def spin_range(root: RootOfUnity):
    """All spins 0, 1/2, ..., k/2 as twice-values."""
    return range(root.k + 1)

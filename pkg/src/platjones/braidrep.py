"""Unitary representation of the colored braid groupoid on conformal blocks.

Odd-indexed generators act diagonally on the odd (p; r) basis with braiding
eigenvalues; even-indexed generators are conjugated through the odd-to-even
duality matrix, which is assembled from elementary q-6j coefficients as a
sum over intermediate channels t_1..t_{m-2} of factor products.

Two binary conventions are not determined a priori (the deformation
parameter appears in the literature with both signs of its phase, and the
adjoint can sit on either duality factor).  Both are fixed numerically by
requiring the braid relations to hold and the spin-1/2 invariants to
reproduce the Kauffman oracle:

* the antiparallel braiding eigenvalue carries the opposite sign of its
  q-exponent relative to the parallel one (equivalently, it is evaluated at
  the conjugate root); only this pairing satisfies Yang-Baxter;
* the duality matrix enters the even generator as U = D^T diag(lambda) D
  with D the odd-to-even matrix built below.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .blocks import BlockBasis, PunctureColors, enumerate_basis, enumerate_even_basis
from .errors import AdmissibilityError, DimensionMismatch, RangeError, ResourceError
from .qalgebra import RootOfUnity, Spin, _duality6j_raw, admissible, spin_range

#: dense-path cap on block-space dimension
MAX_DENSE_DIM = 2 ** 14


@dataclass(frozen=True)
class UnitaryOp:
    """Dense operator between (possibly differently colored) block bases."""

    basis_in: BlockBasis
    basis_out: BlockBasis
    entries: np.ndarray

    @property
    def dim(self) -> tuple[int, int]:
        return self.entries.shape

    def unitarity_defect(self) -> float:
        U = self.entries
        d = U.shape[1]
        return float(np.abs(U.conj().T @ U - np.eye(d)).max())

    def compose(self, earlier: "UnitaryOp") -> "UnitaryOp":
        """self after earlier; boundary colors must match."""
        if earlier.basis_out.colors != self.basis_in.colors:
            raise DimensionMismatch("boundary colorings do not match for composition")
        return UnitaryOp(earlier.basis_in, self.basis_out, self.entries @ earlier.entries)


@dataclass(frozen=True)
class EigenvalueSpec:
    """Braiding eigenvalue selector: channel t for strands colored (j, i)."""

    t: Spin
    j: Spin
    i: Spin
    parallel: bool
    over: bool = True


def braiding_eigenvalue(spec: EigenvalueSpec, root: RootOfUnity) -> complex:
    """Eigenvalue of a half-twist on adjacent strands in fusion channel t.

    Right-handed half twists (over-crossings, ``over=True``):

        parallel:      (-1)^(j+i-t) q^((c_j+c_i)/2 + c_min(i,j) - c_t/2)
        antiparallel:  (-1)^(|j-i|-t) q^(+|c_j-c_i|/2 - c_t/2)

    Under-crossings give the complex conjugate.  The sign of the
    antiparallel q-exponent is the one selected by the braid relations
    (see the module docstring for the convention resolution).
    """
    tt, tj, ti = spec.t.twice, spec.j.twice, spec.i.twice
    if not admissible(tj, ti, tt, root):
        raise AdmissibilityError(f"channel 2t={tt} inadmissible for spins 2j={tj}, 2i={ti}")
    j, i, t = tj / 2.0, ti / 2.0, tt / 2.0
    cj, ci, ct = j * (j + 1), i * (i + 1), t * (t + 1)
    if spec.parallel:
        sign = -1.0 if round(j + i - t) % 2 else 1.0
        expo = (cj + ci) / 2.0 + min(ci, cj) - ct / 2.0
    else:
        sign = -1.0 if round(abs(j - i) - t) % 2 else 1.0
        expo = abs(cj - ci) / 2.0 - ct / 2.0
    val = sign * complex(math.cos(root.angle * expo), math.sin(root.angle * expo))
    return val if spec.over else val.conjugate()


def _pair_orientation(colors: PunctureColors, pos: int) -> bool:
    """True if strands at 0-based positions pos, pos+1 are parallel oriented."""
    return colors.colors[pos].orient == colors.colors[pos + 1].orient


def odd_generator(letter: int, basis: BlockBasis, root: RootOfUnity, sign: int = +1) -> UnitaryOp:
    """Image of b_letter for odd letter = 2a+1: diagonal with entries
    lambda_{p_a}; the output basis carries the swapped coloring."""
    if letter % 2 == 0:
        raise RangeError(f"odd generator requires an odd letter, got {letter}")
    colors = basis.colors
    if not 1 <= letter <= 2 * colors.m - 1:
        raise RangeError(f"letter {letter} out of range for {2 * colors.m} strands")
    a = (letter - 1) // 2
    cj, ci = colors.colors[letter - 1], colors.colors[letter]
    par = _pair_orientation(colors, letter - 1)
    out_basis = enumerate_basis(colors.swapped(letter - 1), root)
    entries = np.zeros((basis.dim, basis.dim), dtype=complex)
    for idx, label in enumerate(basis.labels):
        spec = EigenvalueSpec(Spin(label.p[a]), Spin(cj.twice), Spin(ci.twice),
                              parallel=par, over=(sign > 0))
        entries[idx, idx] = braiding_eigenvalue(spec, root)
    return UnitaryOp(basis_in=basis, basis_out=out_basis, entries=entries)


def _duality_factor_f1(tw, r_prev, r_next, t_i, p_i, i, k):
    # channel move p_i -> t_i on objects (r_{i-1}, j_{2i+1}, j_{2i+2}, r_i)
    return _duality6j_raw(r_prev, tw[2 * i], tw[2 * i + 1], r_next, t_i, p_i, k)


def full_duality_matrix(colors: PunctureColors, root: RootOfUnity):
    """Odd-to-even duality matrix D[(q;s), (p;r)] from the factored q-6j sum.

    Returns (D, odd_basis, even_basis); D is real orthogonal.  For m = 2 the
    sum collapses to a single elementary coefficient.  The matrix depends
    only on the spins, so it is cached by (twices, k).
    """
    colors.check_level(root)
    ob = enumerate_basis(colors, root)
    eb = enumerate_even_basis(colors, root)
    D = _duality_cached(colors.twices(), root.k)
    return D, ob, eb


@lru_cache(maxsize=4096)
def _duality_cached(tw: tuple[int, ...], k: int) -> np.ndarray:
    from .blocks import _enumerate_cached, _enumerate_even_cached

    root = RootOfUnity(k)
    odd_labels = _enumerate_cached(tw, k)
    even_labels = _enumerate_even_cached(tw, k)
    if len(odd_labels) != len(even_labels):
        raise AdmissibilityError("odd and even block bases disagree in dimension")
    if len(odd_labels) > MAX_DENSE_DIM:
        raise ResourceError(f"block dimension {len(odd_labels)} exceeds dense cap {MAX_DENSE_DIM}")
    m = len(tw) // 2
    D = np.zeros((len(even_labels), len(odd_labels)))
    if m == 2:
        for col, (p, _r) in enumerate(odd_labels):
            for row, (q, _s) in enumerate(even_labels):
                D[row, col] = _duality6j_raw(tw[0], tw[1], tw[2], tw[3], p[0], q[1], k)
        D.flags.writeable = False
        return D
    t_first, t_last = tw[0], tw[-1]
    for col, (p, r) in enumerate(odd_labels):
        for row, (q, s) in enumerate(even_labels):
            total = 0.0
            for t_mid in itertools.product(spin_range(root), repeat=m - 2):
                t = (t_first,) + t_mid + (t_last,)
                term = 1.0
                for i in range(1, m - 1):
                    term *= _duality_factor_f1(tw, r[i - 1], r[i], t[i], p[i], i, k)
                    if term == 0.0:
                        break
                    term *= _duality6j_raw(t[i - 1], q[i], s[i], t_last, t[i], s[i - 1], k)
                    if term == 0.0:
                        break
                if term == 0.0:
                    continue
                for l in range(m - 1):
                    term *= _duality6j_raw(t[l], tw[2 * l + 1], tw[2 * l + 2], t[l + 1],
                                           r[l], q[l + 1], k)
                    if term == 0.0:
                        break
                total += term
            D[row, col] = total
    D.flags.writeable = False
    return D


def even_generator(letter: int, basis: BlockBasis, root: RootOfUnity, sign: int = +1) -> UnitaryOp:
    """Image of b_letter for even letter = 2a: duality-conjugated diagonal.

    U = D(out)^T diag(lambda_{q_a}) D(in), where D(in)/D(out) are the
    odd-to-even matrices of the incoming and swapped colorings.
    """
    if letter % 2:
        raise RangeError(f"even generator requires an even letter, got {letter}")
    colors = basis.colors
    if not 1 <= letter <= 2 * colors.m - 1:
        raise RangeError(f"letter {letter} out of range for {2 * colors.m} strands")
    a = letter // 2
    cj, ci = colors.colors[letter - 1], colors.colors[letter]
    par = _pair_orientation(colors, letter - 1)
    out_colors = colors.swapped(letter - 1)
    D_in, ob_in, eb_in = full_duality_matrix(colors, root)
    D_out, ob_out, eb_out = full_duality_matrix(out_colors, root)
    if eb_in.labels != eb_out.labels:
        raise AdmissibilityError("even bases of swapped colorings disagree")
    lam = np.empty(eb_in.dim, dtype=complex)
    for row, (q, _s) in enumerate(eb_in.labels):
        spec = EigenvalueSpec(Spin(q[a]), Spin(cj.twice), Spin(ci.twice),
                              parallel=par, over=(sign > 0))
        lam[row] = braiding_eigenvalue(spec, root)
    entries = D_out.T @ (lam[:, None] * D_in)
    return UnitaryOp(basis_in=ob_in, basis_out=ob_out, entries=entries)


def generator(letter: int, basis: BlockBasis, root: RootOfUnity, sign: int = +1) -> UnitaryOp:
    return (odd_generator if letter % 2 else even_generator)(letter, basis, root, sign)


def represent_letters(colors: PunctureColors, letters, root: RootOfUnity) -> UnitaryOp:
    """Ordered product of generator images with groupoid color tracking.

    Does not require plat-compatible colors; any coloring with a nonempty
    block basis is representable.
    """
    basis = enumerate_basis(colors, root)
    M = np.eye(basis.dim, dtype=complex)
    current = basis
    for (l, s) in letters:
        G = generator(l, current, root, s)
        M = G.entries @ M
        current = G.basis_out
    return UnitaryOp(basis_in=basis, basis_out=current, entries=M)


def represent_word(word, root: RootOfUnity) -> UnitaryOp:
    """Block-basis representation of a colored braid word."""
    return represent_letters(word.puncture_colors(), word.letters, root)

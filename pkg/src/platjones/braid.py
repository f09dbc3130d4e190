"""Colored oriented braid words, plat validation, writhe and linking data.

JSON schema (External Interface):

    {"strands": int, "colors_twice": [int, ...], "orient": ["+"/"-", ...],
     "word": [[index, sign], ...], "framings": [int, ...] (optional)}

A letter (l, +1) is the generator b_l braiding strand positions l, l+1
(1-indexed); (l, -1) is its inverse.  Orientations ride with colors
through the letter-induced transpositions; the sign of an oriented
crossing is eps = letter_sign * orient_a * orient_b for the two strands
involved (the convention is validated against the Kauffman oracle).
"""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .blocks import OrientedSpin, PunctureColors
from .errors import OddCrossingParity, ParseError, PlatError, RangeError


@dataclass(frozen=True)
class ColoredBraidWord:
    """Validated plat-compatible colored braid word."""

    strands: int
    colors: tuple[OrientedSpin, ...]
    letters: tuple[tuple[int, int], ...]
    framings: tuple[int, ...] | None = None

    @property
    def m(self) -> int:
        return self.strands // 2

    def puncture_colors(self) -> PunctureColors:
        return PunctureColors(self.colors)

    def permutation(self) -> list[int]:
        """perm[pos] = bottom strand index arriving at top position pos (0-based)."""
        occ = list(range(self.strands))
        for (l, _s) in self.letters:
            occ[l - 1], occ[l] = occ[l], occ[l - 1]
        return occ

    def top_colors(self) -> tuple[OrientedSpin, ...]:
        occ = self.permutation()
        return tuple(self.colors[i] for i in occ)

    def mirror(self) -> "ColoredBraidWord":
        """Same word with all letter signs flipped (mirror image link)."""
        return ColoredBraidWord(self.strands, self.colors,
                                tuple((l, -s) for (l, s) in self.letters), self.framings)

    def reversed_inverse(self) -> "ColoredBraidWord":
        """The formal inverse word (reversed order, flipped signs)."""
        return ColoredBraidWord(self.strands, self.top_colors(),
                                tuple((l, -s) for (l, s) in reversed(self.letters)),
                                self.framings)

    def recolored(self, twice: int) -> "ColoredBraidWord":
        """Uniform recoloring, keeping orientations (plat validity preserved)."""
        cols = tuple(OrientedSpin(twice, c.orient) for c in self.colors)
        return ColoredBraidWord(self.strands, cols, self.letters, self.framings)

    def to_json_dict(self) -> dict:
        out = {
            "strands": self.strands,
            "colors_twice": [c.twice for c in self.colors],
            "orient": ["+" if c.orient > 0 else "-" for c in self.colors],
            "word": [[l, s] for (l, s) in self.letters],
        }
        if self.framings is not None:
            out["framings"] = list(self.framings)
        return out


def _plat_check(strands: int, colors: tuple[OrientedSpin, ...], letters) -> None:
    for i in range(strands // 2):
        a, b = colors[2 * i], colors[2 * i + 1]
        if a.twice != b.twice or a.orient == b.orient:
            raise PlatError(
                f"bottom pair ({2*i+1}, {2*i+2}) is not a conjugate pair: "
                f"spins ({a.twice}, {b.twice})/2, orientations ({a.orient:+d}, {b.orient:+d})"
            )
    occ = list(range(strands))
    for (l, _s) in letters:
        occ[l - 1], occ[l] = occ[l], occ[l - 1]
    for i in range(strands // 2):
        a, b = colors[occ[2 * i]], colors[occ[2 * i + 1]]
        if a.twice != b.twice or a.orient == b.orient:
            raise PlatError(
                f"top pair ({2*i+1}, {2*i+2}) is not a conjugate pair after braiding"
            )


def parse_word(source: str | bytes | dict) -> ColoredBraidWord:
    """Parse and validate the braid JSON schema (text or parsed dict)."""
    if isinstance(source, (str, bytes)):
        try:
            obj = json.loads(source)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
    else:
        obj = source
    if not isinstance(obj, dict):
        raise ParseError("braid input must be a JSON object")
    try:
        strands = int(obj["strands"])
        colors_twice = list(obj["colors_twice"])
        orient = list(obj["orient"])
        word = list(obj.get("word", []))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"missing or malformed field: {exc}") from None
    if strands < 2 or strands % 2:
        raise RangeError(f"strands must be even and >= 2, got {strands}")
    if len(colors_twice) != strands or len(orient) != strands:
        raise ParseError(
            f"colors_twice/orient must have length {strands}, "
            f"got {len(colors_twice)}/{len(orient)}"
        )
    colors = []
    for i, (tw, o) in enumerate(zip(colors_twice, orient)):
        if not isinstance(tw, int) or tw < 0:
            raise RangeError(f"colors_twice[{i}] must be a nonnegative integer, got {tw!r}")
        if o not in ("+", "-", +1, -1):
            raise ParseError(f"orient[{i}] must be '+' or '-', got {o!r}")
        colors.append(OrientedSpin(tw, +1 if o in ("+", +1) else -1))
    letters = []
    for n, entry in enumerate(word):
        try:
            l, s = int(entry[0]), int(entry[1])
        except (TypeError, ValueError, IndexError):
            raise ParseError(f"word[{n}] must be a pair [index, sign], got {entry!r}") from None
        if not 1 <= l <= strands - 1:
            raise RangeError(f"word[{n}]: letter index {l} out of range [1, {strands - 1}]")
        if s not in (+1, -1):
            raise RangeError(f"word[{n}]: sign must be +1 or -1, got {s}")
        letters.append((l, s))
    framings = None
    if "framings" in obj and obj["framings"] is not None:
        framings = tuple(int(f) for f in obj["framings"])
    colors = tuple(colors)
    letters = tuple(letters)
    _plat_check(strands, colors, letters)
    word_obj = ColoredBraidWord(strands, colors, letters, framings)
    if framings is not None:
        ncomp = components(ColoredBraidWord(strands, colors, letters, None)).n_components
        if len(framings) != ncomp:
            raise ParseError(f"framings has length {len(framings)}, link has {ncomp} components")
    return word_obj


def serialize_word(word: ColoredBraidWord) -> str:
    return json.dumps(word.to_json_dict())


@dataclass(frozen=True)
class Crossing:
    """One crossing: bottom-strand ids and the oriented sign eps."""

    strand_a: int
    strand_b: int
    eps: int
    parallel: bool


@dataclass(frozen=True)
class LinkComponents:
    component_of: tuple[int, ...]  # bottom strand index -> component id
    n_components: int
    framings: tuple[int, ...]

    def color_of(self, comp: int, word: ColoredBraidWord) -> int:
        for s, c in enumerate(self.component_of):
            if c == comp:
                return word.colors[s].twice
        raise RangeError(f"component {comp} out of range")


def crossings(word: ColoredBraidWord) -> list[Crossing]:
    """Crossing list with strand ids tracked through the braiding."""
    occ = list(range(word.strands))
    flags = [c.orient for c in word.colors]
    out = []
    for (l, s) in word.letters:
        a, b = occ[l - 1], occ[l]
        eps = s * flags[a] * flags[b]
        out.append(Crossing(a, b, eps, flags[a] == flags[b]))
        occ[l - 1], occ[l] = b, a
    return out


def components(word: ColoredBraidWord, framings: tuple[int, ...] | None = None) -> LinkComponents:
    """Connected components of the plat closure via union-find over strands."""
    n = word.strands
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        parent[find(x)] = find(y)

    for i in range(n // 2):
        union(2 * i, 2 * i + 1)
    occ = word.permutation()
    for i in range(n // 2):
        union(occ[2 * i], occ[2 * i + 1])
    roots: dict[int, int] = {}
    comp_of = []
    for s in range(n):
        r = find(s)
        if r not in roots:
            roots[r] = len(roots)
        comp_of.append(roots[r])
    ncomp = len(roots)
    if framings is None:
        framings = word.framings if word.framings is not None else (0,) * ncomp
    if len(framings) != ncomp:
        raise RangeError(f"expected {ncomp} framings, got {len(framings)}")
    return LinkComponents(tuple(comp_of), ncomp, tuple(framings))


def writhe(word: ColoredBraidWord) -> int:
    """Sum of eps over self-crossings (inter-component crossings excluded)."""
    comp = components(word)
    return sum(c.eps for c in crossings(word)
               if comp.component_of[c.strand_a] == comp.component_of[c.strand_b])


def self_writhes(word: ColoredBraidWord) -> tuple[int, ...]:
    """Per-component signed self-crossing counts."""
    comp = components(word)
    out = [0] * comp.n_components
    for c in crossings(word):
        ca, cb = comp.component_of[c.strand_a], comp.component_of[c.strand_b]
        if ca == cb:
            out[ca] += c.eps
    return tuple(out)


def total_writhe(word: ColoredBraidWord) -> int:
    """Sum of eps over all crossings (used by the Kauffman normalization)."""
    return sum(c.eps for c in crossings(word))


def linking_matrix(word: ColoredBraidWord, framings: tuple[int, ...] | None = None) -> np.ndarray:
    """Symmetric integer matrix: framings on the diagonal, linking numbers off it."""
    comp = components(word, framings)
    n = comp.n_components
    counts = np.zeros((n, n), dtype=np.int64)
    for c in crossings(word):
        ca, cb = comp.component_of[c.strand_a], comp.component_of[c.strand_b]
        if ca != cb:
            counts[ca, cb] += c.eps
            counts[cb, ca] += c.eps
    M = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        M[i, i] = comp.framings[i]
        for j in range(i + 1, n):
            if counts[i, j] % 2:
                raise OddCrossingParity(
                    f"components {i}, {j} cross an odd signed number of times ({counts[i, j]})"
                )
            M[i, j] = M[j, i] = counts[i, j] // 2
    return M


def signature(M: np.ndarray) -> int:
    """(# positive - # negative) eigenvalues of the symmetric integer matrix."""
    if M.size == 0:
        return 0
    ev = np.linalg.eigvalsh(M.astype(float))
    return int(np.sum(ev > 1e-9) - np.sum(ev < -1e-9))

"""Conformal-block bases for 2m punctures.

The odd ("plat-side") basis pairs punctures (1,2), (3,4), ... with pair
channels p_0..p_{m-1} and a left-to-right chain r_0..r_{m-2}; the singlet
condition forces r_0 = p_0 and r_{m-2} = p_{m-1}.  The even basis is the
same structure on the pairing shifted by one strand: channels q_a couple
punctures (2a, 2a+1) for a = 1..m-1, q_0 couples the wrap-around pair
(2m, 1), and the s-chain mirrors the r-chain with s_0 = q_0 and
s_{m-2} = q_{m-1}.

Labels are tuples of twice-values; bases are ordered lexicographically,
which fixes every downstream matrix layout and the qubit encoding order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import EmptyBasis, NotFound, NotPlatCompatible, OutOfRange, RangeError
from .qalgebra import RootOfUnity, admissible, spin_range


@dataclass(frozen=True, order=True)
class OrientedSpin:
    """Spin with strand orientation: +1 up, -1 down (j-hat = (j, eps))."""

    twice: int
    orient: int

    def __post_init__(self) -> None:
        if self.orient not in (+1, -1):
            raise RangeError(f"orientation must be +1 or -1, got {self.orient}")
        if self.twice < 0:
            raise RangeError(f"spin twice-value must be >= 0, got {self.twice}")

    def reversed(self) -> "OrientedSpin":
        return OrientedSpin(self.twice, -self.orient)


@dataclass(frozen=True)
class PunctureColors:
    """Ordered boundary colors for 2m punctures."""

    colors: tuple[OrientedSpin, ...]

    def __post_init__(self) -> None:
        if len(self.colors) % 2 or not self.colors:
            raise RangeError(f"need an even positive number of punctures, got {len(self.colors)}")

    @property
    def m(self) -> int:
        return len(self.colors) // 2

    def twices(self) -> tuple[int, ...]:
        return tuple(c.twice for c in self.colors)

    def orients(self) -> tuple[int, ...]:
        return tuple(c.orient for c in self.colors)

    def swapped(self, pos: int) -> "PunctureColors":
        """Colors with entries pos, pos+1 (0-based) exchanged."""
        c = list(self.colors)
        c[pos], c[pos + 1] = c[pos + 1], c[pos]
        return PunctureColors(tuple(c))

    def check_level(self, root: RootOfUnity) -> None:
        for c in self.colors:
            if c.twice > root.k:
                raise RangeError(f"color 2j={c.twice} exceeds level k={root.k}")


@dataclass(frozen=True, order=True)
class BlockLabel:
    """(p; r) multi-index of an odd-pairing conformal block.

    p has m entries, r has m-1 (empty for m=1), all twice-values, with
    r[0] = p[0] and r[-1] = p[-1].
    """

    p: tuple[int, ...]
    r: tuple[int, ...]

    def is_vacuum(self) -> bool:
        return not any(self.p) and not any(self.r)


def _chain_labels(pair_channels: list[list[int]], root: RootOfUnity):
    """All (channels; chain) label pairs for a chain coupling tree on m >= 2
    pair channels: chain[0] = channels[0], adm(chain[i-1], channels[i], chain[i])
    for interior i, and singlet closure chain[m-2] = channels[m-1]."""
    m = len(pair_channels)
    out: list[tuple[tuple[int, ...], tuple[int, ...]]] = []

    def extend(idx: int, chosen: tuple[int, ...], chain: tuple[int, ...]) -> None:
        if idx == m - 1:
            if chain[-1] in pair_channels[idx]:
                out.append((chosen + (chain[-1],), chain))
            return
        for ch in pair_channels[idx]:
            if idx == 0:
                extend(1, (ch,), (ch,))
            else:
                for nxt in spin_range(root):
                    if admissible(chain[-1], ch, nxt, root):
                        extend(idx + 1, chosen + (ch,), chain + (nxt,))

    extend(0, (), ())
    return out


@dataclass(frozen=True)
class BlockBasis:
    """Ordered odd-pairing basis with label -> position lookup."""

    colors: PunctureColors
    root: RootOfUnity
    labels: tuple[BlockLabel, ...]
    index: dict = field(compare=False, repr=False, default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "index", {lab: i for i, lab in enumerate(self.labels)})

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index_of(self, label: BlockLabel) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise NotFound(f"label {label} not in basis") from None

    def label_at(self, i: int) -> BlockLabel:
        if not 0 <= i < len(self.labels):
            raise OutOfRange(f"basis index {i} out of range [0, {len(self.labels)})")
        return self.labels[i]


@lru_cache(maxsize=None)
def _enumerate_cached(twices: tuple[int, ...], k: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    root = RootOfUnity(k)
    m = len(twices) // 2
    if m == 1:
        # Degenerate two-puncture case: dimension 1 iff the spins agree.
        return (((0,), ()),) if twices[0] == twices[1] else ()
    pair_channels = []
    for i in range(m):
        opts = [p for p in spin_range(root) if admissible(twices[2 * i], twices[2 * i + 1], p, root)]
        pair_channels.append(opts)
    labels = []
    for (p, chain) in _chain_labels(pair_channels, root):
        labels.append((p, chain))
    labels.sort()
    return tuple(labels)


def enumerate_basis(colors: PunctureColors, root: RootOfUnity) -> BlockBasis:
    """All admissible (p; r) labels in lexicographic twice-value order.

    A zero-dimensional basis is legal and returned as such; callers that
    require a nonempty space raise EmptyBasis via require_nonempty.
    """
    colors.check_level(root)
    raw = _enumerate_cached(colors.twices(), root.k)
    labels = tuple(BlockLabel(p, r) for (p, r) in raw)
    return BlockBasis(colors=colors, root=root, labels=labels)


def require_nonempty(basis: BlockBasis) -> BlockBasis:
    if basis.dim == 0:
        raise EmptyBasis(f"no admissible conformal block for colors {basis.colors.twices()}")
    return basis


def vacuum_label(basis: BlockBasis) -> BlockLabel:
    """The all-zero (0; 0) label; exists iff adjacent pairs carry equal spins."""
    tw = basis.colors.twices()
    m = basis.colors.m
    for i in range(m):
        if tw[2 * i] != tw[2 * i + 1]:
            raise NotPlatCompatible(
                f"pair ({2*i+1}, {2*i+2}) carries unequal spins {tw[2*i]}, {tw[2*i+1]}"
            )
    label = BlockLabel((0,) * m, (0,) * (m - 1) if m >= 2 else ())
    if label not in basis.index:
        raise NotPlatCompatible("vacuum label missing from basis")
    return label


@dataclass(frozen=True)
class EvenBlockBasis:
    """Ordered even-pairing basis; labels are (q, s) twice-value tuples.

    Transient object: it exists only to diagonalize even braid generators
    and to index the rows of the odd-to-even duality matrix.
    """

    colors: PunctureColors
    root: RootOfUnity
    labels: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    @property
    def dim(self) -> int:
        return len(self.labels)


@lru_cache(maxsize=None)
def _enumerate_even_cached(twices: tuple[int, ...], k: int):
    root = RootOfUnity(k)
    m = len(twices) // 2
    if m < 2:
        raise RangeError("even basis requires m >= 2")
    pair_channels = [[q for q in spin_range(root) if admissible(twices[-1], twices[0], q, root)]]
    for a in range(1, m):
        pair_channels.append(
            [q for q in spin_range(root) if admissible(twices[2 * a - 1], twices[2 * a], q, root)]
        )
    labels = list(_chain_labels(pair_channels, root))
    labels.sort()
    return tuple(labels)


def enumerate_even_basis(colors: PunctureColors, root: RootOfUnity) -> EvenBlockBasis:
    colors.check_level(root)
    return EvenBlockBasis(colors=colors, root=root,
                          labels=_enumerate_even_cached(colors.twices(), root.k))

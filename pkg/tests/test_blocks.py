import itertools

import pytest

from platjones.blocks import (BlockLabel, OrientedSpin, PunctureColors, enumerate_basis,
                              enumerate_even_basis, vacuum_label)
from platjones.errors import NotFound, NotPlatCompatible, OutOfRange
from platjones.qalgebra import RootOfUnity, admissible, spin_range


def plat_colors(*twices):
    cols = []
    for t in twices:
        cols += [OrientedSpin(t, +1), OrientedSpin(t, -1)]
    return PunctureColors(tuple(cols))


def test_enumerate_m2_half():
    basis = enumerate_basis(plat_colors(1, 1), RootOfUnity(2))
    assert basis.dim == 2
    assert [lab.p for lab in basis.labels] == [(0, 0), (2, 2)]
    # truncation at k=1 kills p=1
    basis1 = enumerate_basis(plat_colors(1, 1), RootOfUnity(1))
    assert basis1.dim == 1
    assert basis1.labels[0] == BlockLabel((0, 0), (0,))


def test_enumerate_all_zero_colors():
    basis = enumerate_basis(plat_colors(0, 0), RootOfUnity(3))
    assert basis.dim == 1
    assert basis.labels[0].is_vacuum()


def test_empty_basis_is_legal():
    cols = PunctureColors((OrientedSpin(1, +1), OrientedSpin(2, -1)))
    basis = enumerate_basis(cols, RootOfUnity(3))
    assert basis.dim == 0
    with pytest.raises(OutOfRange):
        basis.label_at(0)


def test_vacuum_label():
    basis = enumerate_basis(plat_colors(1, 1), RootOfUnity(2))
    assert vacuum_label(basis) == BlockLabel((0, 0), (0,))
    assert basis.index_of(vacuum_label(basis)) == 0  # lexicographic least
    basis3 = enumerate_basis(plat_colors(2, 2, 2), RootOfUnity(4))
    assert vacuum_label(basis3) == BlockLabel((0, 0, 0), (0, 0))
    # mixed colors still admit the vacuum
    mixed = enumerate_basis(plat_colors(1, 2), RootOfUnity(4))
    assert vacuum_label(mixed).is_vacuum()


def test_vacuum_rejects_nonplat():
    cols = PunctureColors((OrientedSpin(1, +1), OrientedSpin(2, -1)))
    basis = enumerate_basis(cols, RootOfUnity(4))
    with pytest.raises(NotPlatCompatible):
        vacuum_label(basis)


def test_index_roundtrip():
    for k in (2, 4):
        root = RootOfUnity(k)
        for tw in ((1, 1), (1, 2), (2, 2, 2), (1, 1, 1)):
            basis = enumerate_basis(plat_colors(*tw), root)
            for i, lab in enumerate(basis.labels):
                assert basis.index_of(lab) == i
                assert basis.label_at(i) == lab
    with pytest.raises(NotFound):
        enumerate_basis(plat_colors(1, 1), RootOfUnity(2)).index_of(BlockLabel((4, 4), (4,)))


def brute_force_count(twices, root):
    """Count all label tuples passing the fusion constraints directly."""
    m = len(twices) // 2
    if m == 1:
        return 1 if twices[0] == twices[1] else 0
    count = 0
    for p in itertools.product(spin_range(root), repeat=m):
        if not all(admissible(twices[2 * i], twices[2 * i + 1], p[i], root) for i in range(m)):
            continue
        for r in itertools.product(spin_range(root), repeat=m - 1):
            if r[0] != p[0] or r[-1] != p[-1]:
                continue
            if all(admissible(r[i - 1], p[i], r[i], root) for i in range(1, m - 1)):
                count += 1
    return count


def test_dimension_matches_brute_force():
    for k in (1, 2, 3, 4):
        root = RootOfUnity(k)
        for tw in itertools.product(range(k + 1), repeat=3):
            cols = plat_colors(*tw)
            assert enumerate_basis(cols, root).dim == brute_force_count(cols.twices(), root)


def test_label_constraints_hold():
    root = RootOfUnity(4)
    for tw in ((1, 1, 1), (2, 1, 2), (2, 2, 2)):
        cols = plat_colors(*tw)
        basis = enumerate_basis(cols, root)
        twc = cols.twices()
        m = cols.m
        for lab in basis.labels:
            assert lab.r[0] == lab.p[0] and lab.r[-1] == lab.p[-1]
            for i in range(m):
                assert admissible(twc[2 * i], twc[2 * i + 1], lab.p[i], root)
            for i in range(1, m - 1):
                assert admissible(lab.r[i - 1], lab.p[i], lab.r[i], root)


def test_dimension_mirror_symmetry():
    root = RootOfUnity(3)
    for tw in ((1, 2, 1), (1, 1, 3), (2, 3, 1)):
        cols = plat_colors(*tw)
        rev = PunctureColors(tuple(reversed(cols.colors)))
        assert enumerate_basis(cols, root).dim == enumerate_basis(rev, root).dim


def test_even_basis_matches_odd_dimension():
    for k in (2, 3, 4):
        root = RootOfUnity(k)
        for tw in ((1, 1), (1, 2), (1, 1, 1), (2, 1, 2)):
            cols = plat_colors(*tw)
            ob = enumerate_basis(cols, root)
            eb = enumerate_even_basis(cols, root)
            assert ob.dim == eb.dim


def test_register_label_count():
    # the independent labels number m + (m-3) = 2m-3 for m >= 3
    root = RootOfUnity(4)
    cols = plat_colors(1, 1, 1, 1)  # m = 4
    basis = enumerate_basis(cols, root)
    for lab in basis.labels:
        assert len(lab.p) == 4 and len(lab.r) == 3
        # r[0], r[-1] are dependent; independent: 4 p's + 1 interior r = 5 = 2m-3

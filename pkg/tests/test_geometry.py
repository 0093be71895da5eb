import random
from itertools import combinations
from math import comb

import pytest

from arrcohom.geometry import (
    BadIndexError,
    BadKError,
    DuplicateLineError,
    IdenticalLinesError,
    ProjArrangement,
    ProjLine,
    ProjPoint,
    TooFewLinesError,
    ZeroLineError,
    decone,
    intersect,
    is_essential,
    lattice,
    mu,
    parse_line,
)
from arrcohom import catalog


@pytest.mark.parametrize(
    "raw,expected",
    [
        ((0, 0, 2), (0, 0, 1)),
        ((-1, 1, 0), (1, -1, 0)),
        ((2, -4, 6), (1, -2, 3)),
        ((0, -3, -6), (0, 1, 2)),
    ],
)
def test_parse_line_canonicalizes(raw, expected):
    assert parse_line(raw).coeffs == expected


def test_parse_line_rejects_zero():
    with pytest.raises(ZeroLineError):
        parse_line((0, 0, 0))


def test_canonical_form_is_scaling_invariant():
    rng = random.Random(7)
    for _ in range(200):
        triple = tuple(rng.randint(-30, 30) for _ in range(3))
        if triple == (0, 0, 0):
            continue
        line = ProjLine(triple)
        for c in (-3, -1, 2, 5):
            assert ProjLine(tuple(c * t for t in triple)) == line
        a, b, cc = line.coeffs
        first = next(t for t in (a, b, cc) if t)
        assert first > 0


@pytest.mark.parametrize(
    "l1,l2,expected",
    [
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((1, -1, 0), (1, 0, -1), (1, 1, 1)),
        ((1, 0, 0), (0, 1, -1), (0, 1, 1)),
    ],
)
def test_intersect_examples(l1, l2, expected):
    pt = intersect(ProjLine(l1), ProjLine(l2))
    assert pt == ProjPoint(expected)
    assert pt.on(ProjLine(l1)) and pt.on(ProjLine(l2))


def test_intersect_identical_lines():
    with pytest.raises(IdenticalLinesError):
        intersect(ProjLine((1, -1, 0)), ProjLine((-2, 2, 0)))


def test_arrangement_validation():
    with pytest.raises(TooFewLinesError):
        ProjArrangement.from_coeffs([(1, 0, 0), (0, 1, 0)])
    with pytest.raises(DuplicateLineError):
        ProjArrangement.from_coeffs([(1, 0, 0), (2, 0, 0), (0, 1, 0)])
    with pytest.raises(ZeroLineError):
        ProjArrangement.from_coeffs([(1, 0, 0), (0, 0, 0), (0, 1, 0)])


def test_braid_lattice(braid):
    lat = lattice(braid)
    assert len(lat) == 7
    assert lat.histogram() == {2: 3, 3: 4}


def test_triangle_lattice():
    lat = lattice(catalog.generic(3))
    assert len(lat) == 3
    assert lat.histogram() == {2: 3}


def test_pencil_lattice():
    lat = lattice(catalog.pencil(4))
    assert len(lat) == 1
    assert lat.multiplicities() == [4]
    assert lat.points[0][0] == ProjPoint((0, 0, 1))


def test_lattice_against_pair_grouping(members):
    # independent recount: group every pair by its intersection point
    for _, arr in members:
        groups = {}
        for i, j in combinations(range(len(arr.lines)), 2):
            groups.setdefault(intersect(arr.lines[i], arr.lines[j]), set()).update((i, j))
        lat = lattice(arr)
        assert {pt: tuple(sorted(inc)) for pt, inc in lat.points} == {
            pt: tuple(sorted(inc)) for pt, inc in groups.items()
        }


def test_pairing_completeness_and_pair_count(members):
    for _, arr in members:
        lat = lattice(arr)
        n_plus_1 = len(arr.lines)
        for i, j in combinations(range(n_plus_1), 2):
            hits = [inc for _, inc in lat.points if i in inc and j in inc]
            assert len(hits) == 1
        assert sum(comb(m, 2) for m in lat.multiplicities()) == comb(n_plus_1, 2)


def test_mu_braid(braid):
    lat = lattice(braid)
    for i in range(6):
        assert mu(braid, i, 3, lat) == 2
        assert mu(braid, i, 2, lat) == 1
        assert mu(braid, i, 6, lat) == 0


def test_mu_generic_and_bounds():
    arr = catalog.generic(3)
    for i in range(3):
        assert mu(arr, i, 3) == 0
    lat = lattice(arr)
    for i in range(3):
        assert mu(arr, i, 2, lat) <= len(lat.on_line(i))


def test_mu_errors(braid):
    with pytest.raises(BadKError):
        mu(braid, 0, 1)
    with pytest.raises(BadIndexError):
        mu(braid, 6, 2)


def test_is_essential(braid):
    assert is_essential(braid)
    assert is_essential(catalog.generic(3))
    assert not is_essential(catalog.pencil(5))


def test_decone_braid(braid):
    aff = decone(braid, 2)
    assert aff.affine_indices == (0, 1, 3, 4, 5)
    assert aff.classes == ((0, 4), (1, 5), (3,))
    assert [m for _, m in aff.class_points] == [2, 2, 1]
    assert aff.num_classes == 3
    # infinity line carries two triple points and one double point
    assert sorted(m + 1 for _, m in aff.class_points) == [2, 3, 3]
    assert aff.finite_points_as_positions() == ((0, 1, 2), (0, 4), (1, 3), (2, 3, 4))


def test_decone_triangle():
    aff = decone(catalog.generic(3), 0)
    assert aff.n == 2
    assert aff.num_classes == 2
    assert len(aff.finite_points) == 1


def test_decone_pencil():
    aff = decone(catalog.pencil(5), 0)
    assert aff.num_classes == 1
    assert aff.finite_points == ()
    assert aff.classes == ((1, 2, 3, 4),)


def test_decone_bad_index(braid):
    with pytest.raises(BadIndexError):
        decone(braid, 6)


def test_decone_roundtrip_and_counts(members):
    for _, arr in members:
        lat = lattice(arr)
        for infinity in range(len(arr.lines)):
            aff = decone(arr, infinity, lat)
            inf_line = arr.lines[infinity]
            assert sorted(i for c in aff.classes for i in c) == list(aff.affine_indices)
            for members_c, (pt, m) in zip(aff.classes, aff.class_points):
                assert len(members_c) == m
                assert pt.on(inf_line)
                for i, j in combinations(members_c, 2):
                    assert intersect(arr.lines[i], arr.lines[j]) == pt
                # singleton classes still intersect infinity at their point
                assert intersect(arr.lines[members_c[0]], inf_line) == pt
            # total multiplicity defect on the infinity line is the affine line count
            assert sum(m for _, m in aff.class_points) == aff.n
            for pt, _ in aff.finite_points:
                assert not inf_line.contains(pt)

import pytest
from hypothesis import given, strategies as st

from lietori.errors import BadSemilattice, RankMismatch, UnsupportedType
from lietori.lattice import DegreeWindow, GroupHom, Semilattice, cartan_integer, root_system, window_enum
from lietori.scalars import as_scalar

# textbook root counts
COUNTS = {
    ("A", 1): 2, ("A", 2): 6, ("A", 3): 12,
    ("B", 2): 8, ("B", 3): 18,
    ("C", 3): 18,
    ("D", 4): 24,
    ("BC", 1): 4, ("BC", 2): 12,
}


@pytest.mark.parametrize("kind,rank", sorted(COUNTS))
def test_root_counts(kind, rank):
    assert len(root_system(kind, rank).nonzero) == COUNTS[kind, rank]


@pytest.mark.parametrize("kind,rank,want", [("A", 2, 2), ("B", 2, 2), ("B", 3, 2), ("BC", 1, 4), ("BC", 2, 4)])
def test_string_length(kind, rank, want):
    assert root_system(kind, rank).string_length() == want


@pytest.mark.parametrize("kind,rank", sorted(COUNTS))
def test_cartan_integers_are_integral_and_closed(kind, rank):
    D = root_system(kind, rank)
    for a in D.nonzero:
        assert D.cartan_integer(a, a) == 2
        for b in D.nonzero:
            c = cartan_integer(b, a)
            assert c in (-4, -3, -2, -1, 0, 1, 2, 3, 4)
            # reflections preserve the root system
            assert tuple(x - c * y for x, y in zip(b, a)) in D


def test_bc_divisibility():
    D = root_system("BC", 1)
    assert D.is_indivisible((1,)) and not D.is_indivisible((2,))
    assert D.long == [(-2,), (2,)] and D.short == [(-1,), (1,)]


def test_unsupported():
    with pytest.raises(UnsupportedType):
        root_system("G", 2)
    with pytest.raises(UnsupportedType):
        root_system("D", 3)


@given(st.integers(0, 3), st.integers(1, 3))
def test_window_enum(R, n):
    pts = window_enum(R, n)
    assert len(pts) == (2 * R + 1) ** n == len(set(pts))
    assert pts == sorted(pts)
    assert all(DegreeWindow(R).contains(p) for p in pts)


def test_window_axes():
    W = DegreeWindow(1, axes=(0, 2))
    assert len(W.enum(2)) == 5
    with pytest.raises(RankMismatch):
        W.enum(3)
    with pytest.raises(ValueError):
        DegreeWindow(-1)


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3), st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_group_hom_additive(a, b):
    th = GroupHom([1, as_scalar(2), -3])
    assert th(tuple(x + y for x, y in zip(a, b))) == th(a) + th(b)
    assert (-th)(a) == -th(a)


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=2))
def test_semilattice_membership(alpha):
    S = Semilattice(2, [(1, 0)])
    want = alpha[1] % 2 == 0
    assert S.contains(tuple(alpha)) == want
    if want:
        rep = S.representative(tuple(alpha))
        assert all((x - y) % 2 == 0 for x, y in zip(alpha, rep))


def test_semilattice_errors():
    with pytest.raises(BadSemilattice):
        Semilattice(2, [(2, 0)])
    with pytest.raises(BadSemilattice):
        Semilattice(2, [(1, 0), (3, 0)])
    with pytest.raises(RankMismatch):
        Semilattice(2, [(1, 0)]).representative((1,))

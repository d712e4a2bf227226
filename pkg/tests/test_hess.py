"""Hessenberg functions, admissibility, representatives, fixed points."""

import pytest

from hessgkm.hess import (
    admissible_representative,
    cell_dimension,
    complexity_dimension,
    enumerate_admissible,
    format_hessenberg,
    h_bruhat_leq,
    h_length,
    hess_schubert_fixed_points,
    hessenberg_connected,
    is_admissible,
    parse_hessenberg,
    validate_hessenberg,
    windows,
)
from hessgkm.perms import (
    all_permutations,
    bruhat_interval,
    bruhat_leq,
    compose,
    identity,
    inverse,
    longest_element,
)
from hessgkm.verify import hessenberg_functions

H3344 = (3, 3, 4, 4)

TWELVE = [
    (1, 2, 3, 4), (1, 4, 2, 3), (2, 1, 3, 4), (2, 3, 4, 1), (2, 4, 3, 1),
    (3, 2, 4, 1), (3, 4, 1, 2), (3, 4, 2, 1), (4, 1, 2, 3), (4, 2, 3, 1),
    (4, 3, 1, 2), (4, 3, 2, 1),
]


def test_validate():
    assert validate_hessenberg([2, 3, 3]) == (2, 3, 3)
    assert validate_hessenberg([1, 2, 3]) == (1, 2, 3)
    with pytest.raises(ValueError):
        validate_hessenberg([3, 2, 3])
    with pytest.raises(ValueError):
        validate_hessenberg([1, 1, 3])
    with pytest.raises(ValueError):
        validate_hessenberg([2, 3, 4])
    with pytest.raises(ValueError):
        validate_hessenberg([])


def test_parse_format():
    assert parse_hessenberg("3,3,4,4") == H3344
    assert format_hessenberg(H3344) == "3,3,4,4"
    with pytest.raises(ValueError):
        parse_hessenberg("3;3")


def test_complexity_dimension():
    assert complexity_dimension((4, 4, 4, 4)) == 6
    assert complexity_dimension((2, 3, 3)) == 2
    assert complexity_dimension(H3344) == 4
    assert complexity_dimension((1, 2, 3)) == 0


def test_windows():
    assert windows((2, 2, 3)) == ((1, 2),)
    assert windows((2, 3, 3)) == ((1, 2), (2, 3))
    assert windows(H3344) == ((1, 2), (1, 3), (2, 3), (3, 4))


def test_h_length_frozen_values():
    assert h_length(identity(4), H3344) == 0
    assert h_length((2, 1, 3, 4), H3344) == 1
    assert h_length((4, 3, 1, 2), H3344) == 3
    with pytest.raises(ValueError):
        h_length((1, 2, 3), H3344)


def test_cell_dimension_nonnegative_exhaustive():
    for n in range(1, 6):
        for h in hessenberg_functions(n):
            for w in all_permutations(n):
                assert cell_dimension(w, h) >= 0


def test_is_admissible_frozen():
    assert is_admissible((2, 1, 3, 4), H3344)
    assert not is_admissible((3, 2, 1, 4), H3344)
    for h in hessenberg_functions(4):
        assert is_admissible(longest_element(4), h)


def test_enumerate_admissible_twelve():
    assert list(enumerate_admissible(H3344)) == TWELVE


def test_enumerate_admissible_full_h_is_everything():
    assert set(enumerate_admissible((4, 4, 4, 4))) == set(all_permutations(4))


def test_enumerate_admissible_minimal_h():
    # exhaustive scan over S_3 leaves only the order-reversing element
    assert enumerate_admissible((1, 2, 3)) == ((3, 2, 1),)


def test_representative_frozen_values():
    assert admissible_representative((3, 2, 1, 4), H3344) == ((4, 3, 1, 2), (1, 4, 2, 3))
    assert admissible_representative((2, 1, 3, 4), H3344) == ((2, 1, 3, 4), identity(4))
    assert admissible_representative((1, 2, 3), (1, 2, 3)) == ((3, 2, 1), (3, 2, 1))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_representative_properties_exhaustive(n):
    e = identity(n)
    for h in hessenberg_functions(n):
        win = windows(h)
        for w in all_permutations(n):
            wt, u = admissible_representative(w, h)
            assert is_admissible(wt, h)
            assert bruhat_leq(w, wt)
            assert compose(u, wt) == w
            assert u == compose(w, inverse(wt))
            for i, j in win:
                assert (wt[i - 1] < wt[j - 1]) == (w[i - 1] < w[j - 1])
            if is_admissible(w, h):
                assert wt == w and u == e


def test_fixed_points_frozen():
    assert hess_schubert_fixed_points((3, 2, 1, 4), H3344) == frozenset(
        {(3, 2, 1, 4), (3, 2, 4, 1)}
    )
    assert hess_schubert_fixed_points(longest_element(4), H3344) == frozenset(
        {longest_element(4)}
    )


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_fixed_points_vs_interval_exhaustive(n):
    for h in hessenberg_functions(n):
        for w in all_permutations(n):
            fixed = hess_schubert_fixed_points(w, h)
            interval = bruhat_interval(w)
            assert fixed <= interval
            assert (fixed == interval) == is_admissible(w, h)


def test_hessenberg_connected():
    assert hessenberg_connected((2, 3, 3))
    assert not hessenberg_connected((2, 2, 3))
    assert not hessenberg_connected((1, 2, 3))
    assert hessenberg_connected((2, 3, 4, 4))


def test_h_bruhat_reflexive_and_full_h():
    w = (2, 1, 3)
    assert h_bruhat_leq(w, w, (2, 3, 3))
    # with the maximal function the h-order is the Bruhat order
    for n in (2, 3, 4):
        full = tuple([n] * n)
        for u in all_permutations(n):
            for v in all_permutations(n):
                assert h_bruhat_leq(u, v, full) == bruhat_leq(u, v)


def test_h_bruhat_full_h_reachable_sets_n5():
    from hessgkm.hess import h_bruhat_successors

    full = (5, 5, 5, 5, 5)
    for u in all_permutations(5):
        seen = {u}
        frontier = [u]
        while frontier:
            nxt = []
            for x in frontier:
                for y in h_bruhat_successors(x, full):
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        assert seen == set(bruhat_interval(u))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_h_bruhat_sandwich_for_admissible(n):
    w0 = longest_element(n)
    for h in hessenberg_functions(n):
        for w in enumerate_admissible(h):
            for v in bruhat_interval(w):
                assert h_bruhat_leq(w, v, h)
                assert h_bruhat_leq(v, w0, h)

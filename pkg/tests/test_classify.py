"""Verdict assembly: smoothness, irreducibility, smooth points, bounds."""

import pytest

from hessgkm.classify import classify, component_lower_bound, smooth_points_theorem
from hessgkm.graphs import interval_graph
from hessgkm.hess import (
    cell_dimension,
    enumerate_admissible,
    hess_schubert_fixed_points,
    is_admissible,
)
from hessgkm.patterns import avoids_all_associated
from hessgkm.perms import all_permutations, bruhat_interval, identity, longest_element
from hessgkm.verify import hessenberg_functions

H3344 = (3, 3, 4, 4)


def test_report_for_translated_curve_case():
    r = classify((3, 2, 1, 4), H3344)
    assert r.admissible is False
    assert r.representative == (4, 3, 1, 2)
    assert r.translation == (1, 4, 2, 3)
    assert r.h_length == 3
    assert r.cell_dimension == 1
    assert r.interval_size == 8
    assert r.fixed_points == ((3, 2, 1, 4), (3, 2, 4, 1))
    assert r.intersection_smooth == "no"
    assert r.intersection_irreducible == "no"
    assert r.intersection_equals_closure == "unknown"
    assert r.hess_schubert_smooth == "yes"
    assert r.smooth_fixed_points == ((3, 2, 1, 4), (3, 2, 4, 1))
    assert r.reducible_reason is not None
    assert r.graph_stats.connected and not r.graph_stats.regular
    assert r.graph_stats.violating_vertex == (3, 2, 4, 1)
    assert "Thm1.2" in r.citations and "Prop2.5" in r.citations


def test_report_for_admissible_irregular_case():
    r = classify((2, 1, 3, 4), H3344)
    assert r.admissible is True
    assert r.representative == (2, 1, 3, 4)
    assert r.translation == identity(4)
    assert r.graph_stats.connected and not r.graph_stats.regular
    assert r.graph_stats.min_degree == 3 and r.graph_stats.max_degree == 4
    assert r.graph_stats.violating_vertex == (2, 3, 4, 1)
    assert r.intersection_smooth == "no"
    assert r.intersection_irreducible == "unknown"
    assert r.hess_schubert_smooth == "unknown"
    assert ("2134", (1, 2, 3, 4)) in r.pattern_witnesses
    assert len(r.smooth_fixed_points) == 12
    assert (2, 4, 3, 1) not in r.smooth_fixed_points  # degree 4 vertex


def test_report_top_element():
    w0 = longest_element(4)
    r = classify(w0, H3344)
    assert r.admissible
    assert r.intersection_smooth == "yes"
    assert r.intersection_irreducible == "yes"
    assert r.intersection_equals_closure == "yes"
    assert r.hess_schubert_smooth == "yes"
    assert r.smooth_fixed_points == (w0,)
    assert r.fixed_points == (w0,)


def test_rank_mismatch():
    with pytest.raises(ValueError):
        classify((1, 2, 3), H3344)


def test_json_round_trip_shape():
    d = classify((3, 2, 1, 4), H3344).to_json_dict()
    assert d["w"] == "3214"
    assert d["representative"] == "4312"
    assert d["translation"] == "1423"
    assert d["verdicts"]["intersection_irreducible"] == "no"
    assert d["verdicts"]["smooth_fixed_points"] == ["3214", "3241"]
    assert d["graph_stats"]["violating_vertex"] == "3241"
    assert isinstance(d["citations"], list)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_verdict_soundness_exhaustive(n):
    for h in hessenberg_functions(n):
        for w in all_permutations(n):
            r = classify(w, h)
            g = interval_graph(h, w)
            # independent degree recount from the edge list
            degs = {u: 0 for u in g.vertices}
            for e in g.edges:
                degs[e.u] += 1
                degs[e.v] += 1
            if r.intersection_smooth == "yes":
                assert all(d == r.cell_dimension for d in degs.values())
            else:
                assert any(d != r.cell_dimension for d in degs.values())
            if r.intersection_irreducible == "no":
                assert hess_schubert_fixed_points(w, h) != bruhat_interval(w)
            if r.intersection_irreducible == "yes":
                assert r.intersection_smooth == "yes" and r.graph_stats.connected


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_rep_smooth_matches_pattern_criterion(n):
    for h in hessenberg_functions(n):
        for w in enumerate_admissible(h):
            r = classify(w, h)
            avoids, _ = avoids_all_associated(w, h)
            assert (r.hess_schubert_smooth == "yes") == avoids


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_smooth_points_cover_everything_when_regular(n):
    for h in hessenberg_functions(n):
        for w in all_permutations(n):
            r = classify(w, h)
            assert w in r.smooth_fixed_points
            assert set(r.smooth_fixed_points) <= set(r.fixed_points)
            if r.hess_schubert_smooth == "yes":
                assert r.smooth_fixed_points == r.fixed_points


def test_smooth_points_theorem_op():
    assert smooth_points_theorem((3, 2, 1, 4), H3344) == frozenset(
        {(3, 2, 1, 4), (3, 2, 4, 1)}
    )
    w0 = longest_element(4)
    assert smooth_points_theorem(w0, H3344) == frozenset({w0})
    # the literal reflection rule over-certifies: full flag at 1324 includes
    # the top element even though the closure is singular there
    assert (4, 3, 2, 1) in smooth_points_theorem((1, 3, 2, 4), (4, 4, 4, 4))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_smooth_points_theorem_is_reflection_neighborhood(n):
    from hessgkm.perms import apply_transposition, transpositions

    for h in hessenberg_functions(n):
        for w in enumerate_admissible(h):
            interval = bruhat_interval(w)
            expected = {w} | {
                apply_transposition(w, a, b)
                for a, b in transpositions(n)
                if apply_transposition(w, a, b) in interval
            }
            assert smooth_points_theorem(w, h) == expected


def test_certified_smooth_points_match_classical_singular_locus():
    # full flag, w = 1324: the closure is a Schubert variety that is
    # singular exactly on the sub-interval above 3412; the degree
    # certificate recovers its complement
    r = classify((1, 3, 2, 4), (4, 4, 4, 4))
    singular = {(3, 4, 1, 2), (3, 4, 2, 1), (4, 3, 1, 2), (4, 3, 2, 1)}
    assert set(r.fixed_points) - set(r.smooth_fixed_points) == singular


def test_component_lower_bound_frozen():
    b = component_lower_bound((3, 2, 1, 4), H3344)
    assert b == frozenset({(3, 2, 1, 4), (3, 4, 1, 2), (4, 2, 1, 3)})
    w0 = longest_element(4)
    assert component_lower_bound(w0, H3344) == frozenset({w0})
    # regular + connected: irreducible, the bound collapses to {w}
    assert component_lower_bound((4, 3, 1, 2), H3344) == frozenset({(4, 3, 1, 2)})


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_component_lower_bound_structure(n):
    for h in hessenberg_functions(n):
        for w in all_permutations(n):
            b = component_lower_bound(w, h)
            assert w in b
            assert b <= bruhat_interval(w)
            r = classify(w, h)
            if r.intersection_irreducible == "yes":
                assert b == frozenset({w})

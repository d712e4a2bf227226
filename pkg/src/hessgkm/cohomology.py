"""Compatibility conditions and Betti numbers read off the moment graph.

A class assigns to every vertex a polynomial in Z[t_1, ..., t_n], stored
sparsely as {exponent tuple: coefficient}.  A class is compatible with the
graph when for every edge with value pair (a, b) the difference of the two
endpoint polynomials is divisible by t_a - t_b; divisibility is decided by
substituting t_a := t_b and checking for zero, which is exact over Z.

Betti numbers come from the cell dimensions: the 2k-th coefficient counts
permutations whose cell has dimension k, and the total is n!.

For a regular interval graph the localized class candidate assigns to each
interval vertex the product of the weights of the full-graph edges leaving
the interval there, with signs fixed by propagation along a spanning tree
(root positive).  The underlying product is only determined up to a global
constant per connected component; the root-positive choice is a convention.
"""

from __future__ import annotations

from collections import Counter

from .graphs import GkmEdge, GkmGraph, interval_graph, is_regular
from .hess import cell_dimension, complexity_dimension, h_length, validate_hessenberg, windows
from .perms import Perm, all_permutations, apply_transposition, format_permutation

Poly = dict[tuple[int, ...], int]


def zero_poly() -> Poly:
    return {}


def const_poly(n: int, c: int) -> Poly:
    if c == 0:
        return {}
    return {(0,) * n: c}


def linear_form(n: int, a: int, b: int) -> Poly:
    """t_a - t_b."""
    if not (1 <= a <= n and 1 <= b <= n and a != b):
        raise ValueError(f"bad variable indices ({a}, {b}) for n={n}")
    ea = [0] * n
    ea[a - 1] = 1
    eb = [0] * n
    eb[b - 1] = 1
    return {tuple(ea): 1, tuple(eb): -1}


def poly_add(p: Poly, q: Poly) -> Poly:
    out = Counter(p)
    for m, c in q.items():
        out[m] += c
    return {m: c for m, c in out.items() if c}


def poly_neg(p: Poly) -> Poly:
    return {m: -c for m, c in p.items()}


def poly_sub(p: Poly, q: Poly) -> Poly:
    return poly_add(p, poly_neg(q))


def poly_mul(p: Poly, q: Poly) -> Poly:
    out: Counter = Counter()
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            out[tuple(x + y for x, y in zip(m1, m2))] += c1 * c2
    return {m: c for m, c in out.items() if c}


def poly_scale(p: Poly, c: int) -> Poly:
    if c == 0:
        return {}
    return {m: c * x for m, x in p.items()}


def poly_is_zero(p: Poly) -> bool:
    return not p


def substitute_equal(p: Poly, a: int, b: int) -> Poly:
    """Substitute t_a := t_b (move the a-exponent onto b)."""
    out: Counter = Counter()
    for m, c in p.items():
        mm = list(m)
        mm[b - 1] += mm[a - 1]
        mm[a - 1] = 0
        out[tuple(mm)] += c
    return {m: c for m, c in out.items() if c}


def divisible_by_form(p: Poly, a: int, b: int) -> bool:
    """Whether t_a - t_b divides p (sign-free: (a, b) and (b, a) agree)."""
    return poly_is_zero(substitute_equal(p, a, b))


def serialize_poly(p: Poly) -> list[list]:
    """Deterministic list-of-(exponents, coefficient) form."""
    return [[list(m), p[m]] for m in sorted(p)]


def check_compatibility(g: GkmGraph, cls: dict[Perm, Poly]) -> tuple[bool, list[GkmEdge]]:
    """Test p(u) == p(v) mod (t_a - t_b) on every edge of g.

    Returns (ok, offending edges)."""
    if set(cls) != set(g.vertices):
        raise ValueError("class domain does not match the graph vertex set")
    violations = []
    for e in g.edges:
        diff = poly_sub(cls[e.u], cls[e.v])
        if not divisible_by_form(diff, e.val[0], e.val[1]):
            violations.append(e)
    return (not violations, violations)


def poincare_polynomial(h) -> tuple[int, ...]:
    """Coefficients (b_0, b_2, ..., b_{2 d_h}) from the cell dimensions."""
    h = validate_hessenberg(h)
    d = complexity_dimension(h)
    counts = [0] * (d + 1)
    for w in all_permutations(len(h)):
        counts[d - h_length(w, h)] += 1
    return tuple(counts)


def localized_class_candidate(h, w: Perm) -> dict[Perm, Poly]:
    """Candidate localization of the interval class on the full graph.

    Defined when the interval graph of (w, h) is regular.  Each interval
    vertex gets +-1 times the product of t_a - t_b over the full-graph
    edges at that vertex whose other endpoint leaves the interval; vertices
    outside the interval get zero.  Signs are propagated along a spanning
    tree of each component, root positive; a cycle that cannot be signed
    consistently raises rather than being patched silently.
    """
    h = validate_hessenberg(h)
    n = len(h)
    g = interval_graph(h, w)
    target = cell_dimension(w, h)
    check = is_regular(g, target)
    if not check.ok:
        raise ValueError(
            f"interval graph of w={format_permutation(w)}, h={h} is not regular "
            f"(violation at {format_permutation(check.violator)})"
        )
    interval = g.vertex_set()

    products: dict[Perm, Poly] = {}
    for u in g.vertices:
        prod = const_poly(n, 1)
        for i, j in windows(h):
            if apply_transposition(u, i, j) not in interval:
                a, b = u[i - 1], u[j - 1]
                prod = poly_mul(prod, linear_form(n, min(a, b), max(a, b)))
        products[u] = prod

    # Spanning-tree sign propagation, one root per component.
    adj: dict[Perm, list] = {u: [] for u in g.vertices}
    for e in g.edges:
        adj[e.u].append((e.v, e.val))
        adj[e.v].append((e.u, e.val))
    sign: dict[Perm, int] = {}
    for root in g.vertices:
        if root in sign:
            continue
        sign[root] = 1
        stack = [root]
        while stack:
            u = stack.pop()
            for v, val in adj[u]:
                if v in sign:
                    continue
                fu = substitute_equal(products[u], val[0], val[1])
                fv = substitute_equal(products[v], val[0], val[1])
                if fu == fv:
                    sign[v] = sign[u]
                elif fu == poly_neg(fv):
                    sign[v] = -sign[u]
                else:
                    raise RuntimeError(
                        "sign propagation failed on edge "
                        f"{format_permutation(u)} ~ {format_permutation(v)}: "
                        "residues are not equal up to sign"
                    )
                stack.append(v)

    cls = {u: poly_scale(products[u], sign[u]) for u in g.vertices}
    # Non-tree edges can still be inconsistent; verify every internal edge.
    for e in g.edges:
        if not divisible_by_form(poly_sub(cls[e.u], cls[e.v]), e.val[0], e.val[1]):
            raise RuntimeError(
                "sign propagation inconsistent on cycle through edge "
                f"{format_permutation(e.u)} ~ {format_permutation(e.v)}"
            )

    full = {u: cls.get(u, zero_poly()) for u in all_permutations(n)}
    return full

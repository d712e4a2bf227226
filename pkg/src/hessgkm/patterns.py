"""Window-decorated pattern containment tests on admissible permutations.

Seven decorated patterns govern the regularity of the interval graph of an
admissible permutation: the graph is regular iff w contains none of them.
A pattern is an index quadruple i < j < k < l whose values are
order-isomorphic to the pattern digits, subject to window inequalities on
the Hessenberg function.  The constraint sets are:

====== ==================== ===========================================
id     value order          windows
====== ==================== ===========================================
2143   w(j)<w(i)<w(l)<w(k)  l <= h(i)
1324   w(i)<w(k)<w(j)<w(l)  l <= h(j),  k <= h(i)
1243   w(i)<w(j)<w(l)<w(k)  l <= h(j),  j <= h(i) < l
2134   w(j)<w(i)<w(k)<w(l)  l <= h(k),  k <= h(i) < l
1423   w(i)<w(k)<w(l)<w(j)  l <= h(j),  k <= h(i) < l
2314   w(k)<w(i)<w(j)<w(l)  l <= h(j),  k <= h(i) < l
2413   w(k)<w(i)<w(l)<w(j)  j <= h(i) < k <= h(j) < l <= h(k)
====== ==================== ===========================================

The regularity equivalence only holds for h-admissible w; containment
itself is computed for any input, but no regularity conclusion is drawn
for non-admissible w.
"""

from __future__ import annotations

from itertools import combinations

from .hess import HessFunc, is_admissible, validate_hessenberg
from .perms import Perm, format_permutation

PATTERN_IDS = ("2143", "1324", "1243", "2134", "1423", "2314", "2413")

Witness = tuple[int, int, int, int]


def _window_ok(pattern_id: str, h: HessFunc, i: int, j: int, k: int, l: int) -> bool:
    hi, hj, hk = h[i - 1], h[j - 1], h[k - 1]
    if pattern_id == "2143":
        return l <= hi
    if pattern_id == "1324":
        return l <= hj and k <= hi
    if pattern_id == "1243":
        return l <= hj and j <= hi < l
    if pattern_id == "2134":
        return l <= hk and k <= hi < l
    if pattern_id in ("1423", "2314"):
        return l <= hj and k <= hi < l
    if pattern_id == "2413":
        return j <= hi < k <= hj < l <= hk
    raise ValueError(f"unknown pattern id {pattern_id!r}")


def _order_matches(pattern_id: str, values: tuple[int, int, int, int]) -> bool:
    ranks = tuple(sorted(values).index(v) + 1 for v in values)
    return ranks == tuple(int(c) for c in pattern_id)


def contains_hpattern(w: Perm, h, pattern_id: str) -> Witness | None:
    """First witness quadruple (lexicographic scan) or None.

    >>> contains_hpattern((2, 1, 3, 4), (3, 3, 4, 4), "2134")
    (1, 2, 3, 4)
    """
    h = validate_hessenberg(h)
    if len(w) != len(h):
        raise ValueError(f"rank mismatch: |w| = {len(w)}, |h| = {len(h)}")
    if pattern_id not in PATTERN_IDS:
        raise ValueError(f"unknown pattern id {pattern_id!r}")
    for i, j, k, l in combinations(range(1, len(w) + 1), 4):
        if not _window_ok(pattern_id, h, i, j, k, l):
            continue
        values = (w[i - 1], w[j - 1], w[k - 1], w[l - 1])
        if _order_matches(pattern_id, values):
            return (i, j, k, l)
    return None


def pattern_witnesses(w: Perm, h) -> list[tuple[str, Witness]]:
    """First witness for each contained pattern, in the fixed pattern order."""
    out = []
    for pid in PATTERN_IDS:
        witness = contains_hpattern(w, h, pid)
        if witness is not None:
            out.append((pid, witness))
    return out


def avoids_all_associated(w: Perm, h) -> tuple[bool, list[tuple[str, Witness]]]:
    """Whether the admissible permutation w avoids all seven patterns.

    Raises for non-admissible w: the regularity equivalence this test feeds
    is only stated in that case.
    """
    h = validate_hessenberg(h)
    if not is_admissible(w, h):
        raise ValueError(
            f"{format_permutation(w)} is not admissible for h={h}; "
            "the pattern criterion does not apply"
        )
    witnesses = pattern_witnesses(w, h)
    return (not witnesses, witnesses)

"""Hessenberg functions and the combinatorics they induce on S_n.

A Hessenberg function is a nondecreasing h: [n] -> [n] with h(i) >= i,
stored as the value tuple (h(1), ..., h(n)).  Its *window* pairs are the
positions (i, j) with i < j <= h(i); they control everything downstream:

* the complexity dimension d_h = sum(h(i) - i),
* the window inversion count l_h(w) = #{(i, j) window : w(i) > w(j)},
  with d_h - l_h(w) the dimension of the cell attached to w,
* h-admissibility: w is admissible iff the position of w(j) + 1 in w is
  at most h(j) for every j with w(j) <= n - 1,
* the unique admissible representative w~ >= w that agrees with w in
  relative order on every window pair, together with the translation
  u = w o w~^{-1},
* the fixed-point set of the cell closure, u . [w~, w0], which equals
  [w, w0] exactly when w is admissible,
* the h-Bruhat order: reachability by length-increasing window swaps.

Degenerate h with h(i) = i for some i < n (a disconnected ambient space)
is fully supported; nothing here special-cases it.
"""

from __future__ import annotations

from functools import lru_cache

from .perms import (
    Perm,
    all_permutations,
    apply_transposition,
    bruhat_interval,
    bruhat_leq,
    compose,
    inverse,
    length,
)

HessFunc = tuple[int, ...]


def validate_hessenberg(values) -> HessFunc:
    """Validate raw values as a Hessenberg function.

    >>> validate_hessenberg([2, 3, 3])
    (2, 3, 3)
    """
    h = tuple(int(x) for x in values)
    n = len(h)
    if n < 1:
        raise ValueError("empty Hessenberg function")
    for i, v in enumerate(h, start=1):
        if v < i:
            raise ValueError(f"h({i}) = {v} < {i}")
        if v > n:
            raise ValueError(f"h({i}) = {v} > n = {n}")
    for i in range(n - 1):
        if h[i] > h[i + 1]:
            raise ValueError(f"not nondecreasing at position {i + 1}: {h[i]} > {h[i + 1]}")
    return h


def parse_hessenberg(text: str) -> HessFunc:
    """Parse comma-separated values, e.g. "3,3,4,4"."""
    parts = [p.strip() for p in text.strip().split(",") if p.strip()]
    if not parts:
        raise ValueError("empty Hessenberg function")
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"cannot parse Hessenberg function from {text!r}") from None
    return validate_hessenberg(values)


def format_hessenberg(h: HessFunc) -> str:
    return ",".join(str(x) for x in h)


def complexity_dimension(h: HessFunc) -> int:
    """d_h = sum(h(i) - i); the dimension of the ambient Hessenberg space."""
    return sum(v - i for i, v in enumerate(h, start=1))


@lru_cache(maxsize=None)
def windows(h: HessFunc) -> tuple[tuple[int, int], ...]:
    """All position pairs (i, j) with i < j <= h(i)."""
    return tuple((i, j) for i in range(1, len(h) + 1) for j in range(i + 1, h[i - 1] + 1))


def _check_rank(w: Perm, h: HessFunc) -> None:
    if len(w) != len(h):
        raise ValueError(f"rank mismatch: |w| = {len(w)}, |h| = {len(h)}")


def h_length(w: Perm, h: HessFunc) -> int:
    """Window inversion count l_h(w).

    >>> h_length((2, 1, 3, 4), (3, 3, 4, 4))
    1
    """
    _check_rank(w, h)
    return sum(1 for i, j in windows(h) if w[i - 1] > w[j - 1])


def cell_dimension(w: Perm, h: HessFunc) -> int:
    """Dimension d_h - l_h(w) of the cell attached to w."""
    return complexity_dimension(h) - h_length(w, h)


def is_admissible(w: Perm, h: HessFunc) -> bool:
    """True iff the position of w(j) + 1 is at most h(j) whenever w(j) <= n - 1."""
    _check_rank(w, h)
    n = len(w)
    winv = inverse(w)
    for j in range(1, n + 1):
        v = w[j - 1]
        if v <= n - 1 and winv[v] > h[j - 1]:  # winv[v] is the position of v + 1
            return False
    return True


@lru_cache(maxsize=None)
def enumerate_admissible(h: HessFunc) -> tuple[Perm, ...]:
    """All h-admissible permutations, in lexicographic order."""
    return tuple(w for w in all_permutations(len(h)) if is_admissible(w, h))


@lru_cache(maxsize=None)
def admissible_representative(w: Perm, h: HessFunc) -> tuple[Perm, Perm]:
    """The unique admissible w~ >= w agreeing with w on window order, and u.

    Returns (w~, u) with u = compose(w, inverse(w~)), so that
    compose(u, w~) == w.  Found by searching [w, w0]; exactly one candidate
    must survive, which doubles as a built-in self-check.
    """
    _check_rank(w, h)
    win = windows(h)
    candidates = []
    for v in sorted(bruhat_interval(w)):
        if not is_admissible(v, h):
            continue
        if all((v[i - 1] < v[j - 1]) == (w[i - 1] < w[j - 1]) for i, j in win):
            candidates.append(v)
    if len(candidates) != 1:
        raise RuntimeError(
            f"expected exactly one admissible representative for w={w}, h={h}; "
            f"found {len(candidates)}: {candidates}"
        )
    wt = candidates[0]
    return wt, compose(w, inverse(wt))


@lru_cache(maxsize=None)
def hess_schubert_fixed_points(w: Perm, h: HessFunc) -> frozenset[Perm]:
    """Fixed points of the cell closure attached to (w, h): u . [w~, w0].

    Equals the full interval [w, w0] iff w is h-admissible.
    """
    wt, u = admissible_representative(w, h)
    return frozenset(compose(u, v) for v in bruhat_interval(wt))


def hessenberg_connected(h: HessFunc) -> bool:
    """Whether the ambient space is connected: h(i) > i for all i < n."""
    return all(h[i - 1] > i for i in range(1, len(h)))


def h_bruhat_successors(u: Perm, h: HessFunc) -> list[Perm]:
    """One-step h-Bruhat moves: window swaps that increase length."""
    _check_rank(u, h)
    lu = length(u)
    out = []
    for i, j in windows(h):
        v = apply_transposition(u, i, j)
        if length(v) > lu:
            out.append(v)
    return out


def h_bruhat_leq(u: Perm, v: Perm, h: HessFunc) -> bool:
    """Reflexive-transitive closure of length-increasing window swaps.

    >>> h_bruhat_leq((2, 1, 3), (3, 2, 1), (2, 3, 3))
    True
    """
    _check_rank(u, h)
    _check_rank(v, h)
    if u == v:
        return True
    # Every h-step strictly increases the Bruhat order, so states above v
    # (or incomparable to it) can never reach v.
    if not bruhat_leq(u, v):
        return False
    target = length(v)
    seen = {u}
    frontier = [u]
    while frontier:
        nxt = []
        for x in frontier:
            for y in h_bruhat_successors(x, h):
                if y == v:
                    return True
                if y not in seen and length(y) < target and bruhat_leq(y, v):
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return False


if __name__ == "__main__":
    import doctest

    doctest.testmod()

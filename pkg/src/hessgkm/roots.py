"""Root systems, Weyl groups, and Hessenberg spaces in arbitrary Lie type.

Roots are stored as integer coordinate vectors over the simple roots, so
"a1+a2" is (1, 1).  Supported types: A, B, C, D (within a group-order cap),
G2, and F4.  Conventions follow the standard Euclidean realizations; in
particular for type C the last simple root is long, so C2 has positive
roots a1, a2, a1+a2, 2a1+a2.

Weyl group elements are stored as permutations of the signed root list
(positives first, then their negatives); this representation is faithful
and makes composition, inversion sets, and lengths cheap.  Composition is
function composition, matching :func:`hessgkm.perms.compose`.

A Hessenberg space is a subset M of the positive roots closed under
subtracting positive roots (if a is in M, b is positive, and a - b is a
positive root, then a - b is in M) -- the root-level shadow of being a
module over the Borel.  The machinery built on M:

* Weyl-type subsets: S with both S and M - S closed under addition inside
  M; these are exactly the traces N(w) & M of inversion sets.
* The partition of W into classes {w : N(w) & M = S}, one per Weyl-type S;
  each class is a left weak order interval [z_S, w_S], where z_S is the
  unique class member sending no positive root outside M to a negative
  simple root, and w_S = w0 * z_{M-S}.
* The admissible elements: the class tops w_S.
* The moment graph on W with edges {w, w s_a} for a in M, and the
  regularity verdict on Bruhat interval subgraphs; the smoothness
  conclusion is withheld outside the simply-laced types.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .perms import Perm, compose as perm_compose

Coords = tuple[int, ...]
Element = tuple[int, ...]  # permutation of the signed root index list

# Covers A<=7, B/C<=6, D<=6, G2, F4; E types are not built here.
DEFAULT_MAX_ORDER = 50_000

# Brute-force subset scan for Weyl-type subsets is kept below this |M|;
# larger M fall back to collecting inversion-set traces.
_SUBSET_SCAN_MAX = 16


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


_ORDER_FORMULA = {
    "A": lambda r: _factorial(r + 1),
    "B": lambda r: (1 << r) * _factorial(r),
    "C": lambda r: (1 << r) * _factorial(r),
    "D": lambda r: (1 << (r - 1)) * _factorial(r),
    "G": lambda r: 12,
    "F": lambda r: 1152,
}

_POSITIVE_COUNT = {
    "A": lambda r: r * (r + 1) // 2,
    "B": lambda r: r * r,
    "C": lambda r: r * r,
    "D": lambda r: r * (r - 1),
    "G": lambda r: 6,
    "F": lambda r: 24,
}


def _unit_diff(dim: int, i: int, j: int) -> tuple[Fraction, ...]:
    v = [Fraction(0)] * dim
    v[i] = Fraction(1)
    v[j] = Fraction(-1)
    return tuple(v)


def _simple_roots_euclidean(type_label: str, rank: int) -> list[tuple[Fraction, ...]]:
    t = type_label
    if t == "A":
        if rank < 1:
            raise ValueError("type A needs rank >= 1")
        return [_unit_diff(rank + 1, i, i + 1) for i in range(rank)]
    if t in ("B", "C"):
        if rank < 2:
            raise ValueError(f"type {t} needs rank >= 2")
        out = [_unit_diff(rank, i, i + 1) for i in range(rank - 1)]
        last = [Fraction(0)] * rank
        last[rank - 1] = Fraction(1 if t == "B" else 2)
        return out + [tuple(last)]
    if t == "D":
        if rank < 3:
            raise ValueError("type D needs rank >= 3")
        out = [_unit_diff(rank, i, i + 1) for i in range(rank - 1)]
        last = [Fraction(0)] * rank
        last[rank - 2] = Fraction(1)
        last[rank - 1] = Fraction(1)
        return out + [tuple(last)]
    if t == "G":
        if rank != 2:
            raise ValueError("type G has rank 2")
        return [
            (Fraction(1), Fraction(-1), Fraction(0)),
            (Fraction(-2), Fraction(1), Fraction(1)),
        ]
    if t == "F":
        if rank != 4:
            raise ValueError("type F has rank 4")
        half = Fraction(1, 2)
        return [
            (Fraction(0), Fraction(1), Fraction(-1), Fraction(0)),
            (Fraction(0), Fraction(0), Fraction(1), Fraction(-1)),
            (Fraction(0), Fraction(0), Fraction(0), Fraction(1)),
            (half, -half, -half, -half),
        ]
    raise ValueError(f"unsupported type {type_label!r} (supported: A, B, C, D, G2, F4)")


class RootSystem:
    """Positive roots, reflections, and the Weyl group of one Cartan type."""

    def __init__(self, type_label: str, rank: int, max_order: int = DEFAULT_MAX_ORDER):
        type_label = type_label.upper()
        simples = _simple_roots_euclidean(type_label, rank)
        self.type_label = type_label
        self.rank = rank
        self.order = _ORDER_FORMULA[type_label](rank)
        if self.order > max_order:
            raise ValueError(
                f"|W({type_label}{rank})| = {self.order} exceeds the cap {max_order}"
            )
        self._simple_euclid = tuple(simples)
        gram = [[sum(a * b for a, b in zip(x, y)) for y in simples] for x in simples]
        # cartan[i][j] = <alpha_j, alpha_i^vee>
        self.cartan = [
            [int(2 * gram[i][j] / gram[i][i]) for j in range(rank)] for i in range(rank)
        ]
        self._gram = gram

        self.simple_roots: tuple[Coords, ...] = tuple(
            tuple(1 if k == i else 0 for k in range(rank)) for i in range(rank)
        )
        self.positive_roots = self._close_positive_roots()
        expected = _POSITIVE_COUNT[type_label](rank)
        if len(self.positive_roots) != expected:
            raise RuntimeError(
                f"positive root closure produced {len(self.positive_roots)} roots, "
                f"expected {expected}"
            )
        self._pos_index = {c: i for i, c in enumerate(self.positive_roots)}
        p = len(self.positive_roots)
        self._num_positive = p
        self._signed: tuple[Coords, ...] = self.positive_roots + tuple(
            tuple(-x for x in c) for c in self.positive_roots
        )
        self._signed_index = {c: i for i, c in enumerate(self._signed)}
        self._simple_indices = tuple(self._pos_index[c] for c in self.simple_roots)
        self.identity: Element = tuple(range(2 * p))
        self.generators: tuple[Element, ...] = tuple(
            self._simple_reflection(i) for i in range(rank)
        )
        self._elements: tuple[Element, ...] | None = None
        self._bruhat_memo: dict[tuple[Element, Element], bool] = {}
        self._word_memo: dict[Element, tuple[int, ...]] = {}

    # -- construction ----------------------------------------------------------

    def _cartan_pairing(self, coords: Coords, i: int) -> int:
        return sum(c * self.cartan[i][j] for j, c in enumerate(coords))

    def _close_positive_roots(self) -> tuple[Coords, ...]:
        rank = self.rank
        seen = {tuple(1 if k == i else 0 for k in range(rank)) for i in range(rank)}
        frontier = list(seen)
        while frontier:
            nxt = []
            for c in frontier:
                for i in range(rank):
                    img = list(c)
                    img[i] -= self._cartan_pairing(c, i)
                    img_t = tuple(img)
                    if all(x >= 0 for x in img_t) and any(img_t) and img_t not in seen:
                        seen.add(img_t)
                        nxt.append(img_t)
            frontier = nxt
        return tuple(sorted(seen, key=lambda c: (sum(c), tuple(-x for x in c))))

    def _simple_reflection(self, i: int) -> Element:
        img = []
        for c in self._signed:
            new = list(c)
            new[i] -= self._cartan_pairing(c, i)
            img.append(self._signed_index[tuple(new)])
        return tuple(img)

    # -- element operations ------------------------------------------------------

    def act(self, w: Element, coords: Coords) -> Coords:
        return self._signed[w[self._signed_index[coords]]]

    def mul(self, a: Element, b: Element) -> Element:
        """Function composition: (a*b)(root) = a(b(root))."""
        return tuple(a[x] for x in b)

    def inv(self, w: Element) -> Element:
        out = [0] * len(w)
        for i, x in enumerate(w):
            out[x] = i
        return tuple(out)

    def length(self, w: Element) -> int:
        p = self._num_positive
        return sum(1 for i in range(p) if w[i] >= p)

    def inversion_set(self, w: Element) -> frozenset[Coords]:
        p = self._num_positive
        return frozenset(self._signed[i] for i in range(p) if w[i] >= p)

    def inversion_mask(self, w: Element) -> int:
        p = self._num_positive
        mask = 0
        for i in range(p):
            if w[i] >= p:
                mask |= 1 << i
        return mask

    def mask_of(self, roots) -> int:
        mask = 0
        for c in roots:
            mask |= 1 << self._pos_index[c]
        return mask

    def roots_of_mask(self, mask: int) -> frozenset[Coords]:
        return frozenset(
            self.positive_roots[i] for i in range(self._num_positive) if mask >> i & 1
        )

    def _euclid(self, coords: Coords) -> tuple[Fraction, ...]:
        dim = len(self._simple_euclid[0])
        return tuple(
            sum(coords[j] * self._simple_euclid[j][k] for j in range(self.rank))
            for k in range(dim)
        )

    def reflection(self, coords: Coords) -> Element:
        """The reflection in a positive root, as a signed-root permutation."""
        if coords not in self._pos_index:
            raise ValueError(f"{coords} is not a positive root")
        beta_e = self._euclid(coords)
        bb = sum(x * x for x in beta_e)
        img = []
        for c in self._signed:
            gamma_e = self._euclid(c)
            pairing = 2 * sum(x * y for x, y in zip(gamma_e, beta_e)) / bb
            if pairing.denominator != 1:
                raise RuntimeError("non-integral pairing in reflection")
            k = int(pairing)
            img.append(self._signed_index[tuple(x - k * y for x, y in zip(c, coords))])
        return tuple(img)

    def reflections(self) -> tuple[Element, ...]:
        return tuple(self.reflection(c) for c in self.positive_roots)

    # -- group enumeration ---------------------------------------------------------

    def elements(self) -> tuple[Element, ...]:
        """The whole group, in BFS-by-length order (deterministic)."""
        if self._elements is None:
            seen = {self.identity}
            ordered = [self.identity]
            frontier = [self.identity]
            while frontier:
                nxt = []
                for w in frontier:
                    for s in self.generators:
                        x = self.mul(w, s)
                        if x not in seen:
                            seen.add(x)
                            nxt.append(x)
                nxt.sort()
                ordered.extend(nxt)
                frontier = nxt
            if len(ordered) != self.order:
                raise RuntimeError(
                    f"enumerated {len(ordered)} elements, expected {self.order}"
                )
            self._elements = tuple(ordered)
        return self._elements

    def longest(self) -> Element:
        w = self.identity
        p = self._num_positive
        progressed = True
        while progressed:
            progressed = False
            for i, s in enumerate(self.generators):
                if w[self._simple_indices[i]] < p:  # w(alpha_i) still positive
                    w = self.mul(w, s)
                    progressed = True
        return w

    def left_descents(self, w: Element) -> list[int]:
        lw = self.length(w)
        return [
            i for i, s in enumerate(self.generators) if self.length(self.mul(s, w)) < lw
        ]

    def right_descents(self, w: Element) -> list[int]:
        p = self._num_positive
        return [i for i in range(self.rank) if w[self._simple_indices[i]] >= p]

    def canonical_word(self, w: Element) -> tuple[int, ...]:
        """Reduced word, greedy smallest left descent first (0-indexed letters)."""
        if w in self._word_memo:
            return self._word_memo[w]
        word = []
        x = w
        while x != self.identity:
            i = min(self.left_descents(x))
            word.append(i)
            x = self.mul(self.generators[i], x)
        out = tuple(word)
        self._word_memo[w] = out
        return out

    def format_element(self, w: Element) -> str:
        word = self.canonical_word(w)
        return "".join(f"s{i + 1}" for i in word) if word else "e"

    def sort_key(self, w: Element):
        return (self.length(w), self.canonical_word(w))

    # -- orders ----------------------------------------------------------------------

    def bruhat_leq(self, u: Element, v: Element) -> bool:
        """Strong Bruhat order, decided by the right-descent recursion."""
        if u == v:
            return True
        key = (u, v)
        memo = self._bruhat_memo
        if key in memo:
            return memo[key]
        if self.length(u) >= self.length(v):
            memo[key] = False
            return False
        ds = self.right_descents(v)
        s = self.generators[ds[0]]
        vs = self.mul(v, s)
        us = self.mul(u, s)
        if self.length(us) < self.length(u):
            out = self.bruhat_leq(us, vs)
        else:
            out = self.bruhat_leq(u, vs)
        memo[key] = out
        return out

    def weak_leq(self, u: Element, v: Element) -> bool:
        """Left weak order: l(v) = l(u) + l(v u^{-1})."""
        return self.length(v) == self.length(u) + self.length(self.mul(v, self.inv(u)))

    def bruhat_interval_up(self, w: Element) -> tuple[Element, ...]:
        return tuple(v for v in self.elements() if self.bruhat_leq(w, v))

    # -- text forms ---------------------------------------------------------------------

    def format_root(self, coords: Coords) -> str:
        terms = []
        for j, c in enumerate(coords):
            if c:
                terms.append(f"a{j + 1}" if c == 1 else f"{c}a{j + 1}")
        return "+".join(terms) if terms else "0"

    def format_root_set(self, roots) -> str:
        ordered = sorted(roots, key=lambda c: self._pos_index[c])
        return "{" + ", ".join(self.format_root(c) for c in ordered) + "}"

    def parse_root(self, text: str) -> Coords:
        text = text.strip()
        if not text:
            raise ValueError("empty root")
        if text.startswith("["):
            if not text.endswith("]"):
                raise ValueError(f"unbalanced brackets in {text!r}")
            coords = tuple(int(p.strip()) for p in text[1:-1].split(","))
            if len(coords) != self.rank:
                raise ValueError(f"expected {self.rank} coordinates in {text!r}")
        else:
            acc = [0] * self.rank
            for term in text.split("+"):
                term = term.strip()
                if "a" not in term:
                    raise ValueError(f"cannot parse root term {term!r}")
                coeff_s, idx_s = term.split("a", 1)
                coeff = int(coeff_s) if coeff_s else 1
                idx = int(idx_s)
                if not (1 <= idx <= self.rank):
                    raise ValueError(f"no simple root a{idx} at rank {self.rank}")
                acc[idx - 1] += coeff
            coords = tuple(acc)
        if coords not in self._pos_index:
            raise ValueError(f"{text!r} = {coords} is not a positive root")
        return coords

    def parse_root_list(self, text: str) -> frozenset[Coords]:
        items = []
        depth = 0
        current: list[str] = []
        for ch in text:
            if ch == "[":
                depth += 1
            elif ch == "]":
                depth -= 1
            if ch == "," and depth == 0:
                items.append("".join(current))
                current = []
            else:
                current.append(ch)
        if current:
            items.append("".join(current))
        return frozenset(self.parse_root(item) for item in items if item.strip())

    @property
    def simply_laced(self) -> bool:
        return self.type_label in ("A", "D")

    # -- type A dictionary -----------------------------------------------------------------

    def one_line_map(self) -> dict[Element, Perm]:
        """For type A: element -> one-line permutation of S_{rank+1}."""
        if self.type_label != "A":
            raise ValueError("one-line notation only applies to type A")
        n = self.rank + 1
        adjacent = []
        for i in range(self.rank):
            p = list(range(1, n + 1))
            p[i], p[i + 1] = p[i + 1], p[i]
            adjacent.append(tuple(p))
        out: dict[Element, Perm] = {self.identity: tuple(range(1, n + 1))}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for i, s in enumerate(self.generators):
                    x = self.mul(s, w)
                    if x not in out:
                        out[x] = perm_compose(adjacent[i], out[w])
                        nxt.append(x)
            frontier = nxt
        return out


def build_root_system(
    type_label: str, rank: int, max_order: int = DEFAULT_MAX_ORDER
) -> RootSystem:
    return RootSystem(type_label, rank, max_order)


def root_from_positions(rs: RootSystem, i: int, j: int) -> Coords:
    """Type A root e_i - e_j (i < j) in simple-root coordinates."""
    if rs.type_label != "A":
        raise ValueError("position roots only apply to type A")
    if not (1 <= i < j <= rs.rank + 1):
        raise ValueError(f"need 1 <= i < j <= {rs.rank + 1}")
    return tuple(1 if i <= k < j else 0 for k in range(1, rs.rank + 1))


def hessenberg_space_from_function(rs: RootSystem, h) -> "HessenbergSpace":
    """Type A dictionary: e_i - e_j lies in M iff j <= h(i)."""
    from .hess import validate_hessenberg

    h = validate_hessenberg(h)
    if rs.type_label != "A" or len(h) != rs.rank + 1:
        raise ValueError("expected a type A system of rank n-1")
    roots = frozenset(
        root_from_positions(rs, i, j)
        for i in range(1, len(h) + 1)
        for j in range(i + 1, h[i - 1] + 1)
    )
    return validate_hessenberg_space(rs, roots)


# -- Hessenberg spaces ------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class HessenbergSpace:
    rs: RootSystem
    roots: frozenset[Coords]

    def _cache(self, key: str, compute):
        store = self.__dict__.setdefault("_memo", {})
        if key not in store:
            store[key] = compute()
        return store[key]


def validate_hessenberg_space(rs: RootSystem, roots) -> HessenbergSpace:
    """Check closure under subtracting positive roots and wrap the subset."""
    m = frozenset(tuple(int(x) for x in c) for c in roots)
    pos = set(rs.positive_roots)
    for c in m:
        if c not in pos:
            raise ValueError(f"{rs.format_root(c)} is not a positive root")
    for alpha in m:
        for beta in rs.positive_roots:
            diff = tuple(a - b for a, b in zip(alpha, beta))
            if diff in pos and diff not in m:
                raise ValueError(
                    f"not closed under subtraction: {rs.format_root(alpha)} - "
                    f"{rs.format_root(beta)} = {rs.format_root(diff)} is missing"
                )
    return HessenbergSpace(rs, m)


def is_closed_in(rs: RootSystem, subset, ambient) -> bool:
    """Whether a + b lands back in `subset` whenever a, b are in `subset`
    and a + b lies in `ambient`."""
    sub = frozenset(subset)
    amb = frozenset(ambient)
    items = sorted(sub)
    for idx, a in enumerate(items):
        for b in items[idx:]:
            s = tuple(x + y for x, y in zip(a, b))
            if s in amb and s not in sub:
                return False
    return True


def is_weyl_type(hs: HessenbergSpace, subset) -> bool:
    sub = frozenset(subset)
    if not sub <= hs.roots:
        raise ValueError("subset is not contained in M")
    comp = hs.roots - sub
    return is_closed_in(hs.rs, sub, hs.roots) and is_closed_in(hs.rs, comp, hs.roots)


def weyl_type_subsets(hs: HessenbergSpace) -> list[frozenset[Coords]]:
    """All Weyl-type subsets of M, sorted by (size, root order).

    Scans all subsets when M is small; for large M collects the traces
    N(w) & M instead (every trace is Weyl type and every Weyl-type subset
    is a trace) and still verifies each definitionally.
    """

    def compute():
        rs = hs.rs
        m_sorted = sorted(hs.roots, key=lambda c: rs._pos_index[c])
        found: set[frozenset[Coords]] = set()
        if len(m_sorted) <= _SUBSET_SCAN_MAX:
            for mask in range(1 << len(m_sorted)):
                sub = frozenset(
                    m_sorted[i] for i in range(len(m_sorted)) if mask >> i & 1
                )
                if is_weyl_type(hs, sub):
                    found.add(sub)
        else:
            for w in rs.elements():
                trace = rs.inversion_set(w) & hs.roots
                if trace not in found:
                    if not is_weyl_type(hs, trace):
                        raise RuntimeError(
                            f"inversion trace {rs.format_root_set(trace)} fails the "
                            "Weyl-type check"
                        )
                    found.add(trace)
        return sorted(
            found, key=lambda s: (len(s), sorted(rs._pos_index[c] for c in s))
        )

    return hs._cache("weyl_type_subsets", compute)


def partition_classes(hs: HessenbergSpace) -> dict[frozenset[Coords], tuple[Element, ...]]:
    """Group W by the trace of the inversion set on M."""

    def compute():
        rs = hs.rs
        buckets: dict[frozenset[Coords], list[Element]] = {}
        for w in rs.elements():
            trace = rs.inversion_set(w) & hs.roots
            buckets.setdefault(trace, []).append(w)
        return {s: tuple(sorted(ws, key=rs.sort_key)) for s, ws in buckets.items()}

    return hs._cache("partition_classes", compute)


def _neg_simple_preimage(rs: RootSystem, w: Element) -> frozenset[Coords]:
    """Positive roots sent by w to a negative simple root."""
    p = rs._num_positive
    neg_simple = {p + i for i in rs._simple_indices}
    return frozenset(
        rs.positive_roots[i] for i in range(p) if w[i] in neg_simple
    )


def _z_element(hs: HessenbergSpace, cls: tuple[Element, ...]) -> Element:
    rs = hs.rs
    hits = [w for w in cls if _neg_simple_preimage(rs, w) <= hs.roots]
    if len(hits) != 1:
        raise RuntimeError(
            f"expected exactly one class minimum, found {len(hits)}"
        )
    return hits[0]


def z_and_w(hs: HessenbergSpace, subset) -> tuple[Element, Element]:
    """The minimum z_S and maximum w_S of the class of S in left weak order.

    z_S comes from the characterization scan; w_S = w0 * z_{M-S}.  Both are
    verified to bound the class, which doubles as an internal self-check.
    """
    rs = hs.rs
    s = frozenset(subset)
    classes = partition_classes(hs)
    if s not in classes:
        raise ValueError(f"{rs.format_root_set(s)} is not a Weyl-type subset of M")
    comp = hs.roots - s
    if comp not in classes:
        raise RuntimeError("complement of a Weyl-type subset has no class")
    z = _z_element(hs, classes[s])
    w = rs.mul(rs.longest(), _z_element(hs, classes[comp]))
    cls = classes[s]
    if w not in cls:
        raise RuntimeError("computed class maximum lies outside the class")
    for x in cls:
        if not (rs.weak_leq(z, x) and rs.weak_leq(x, w)):
            raise RuntimeError("class is not sandwiched between z_S and w_S")
    return z, w


def h_admissible_elements(hs: HessenbergSpace) -> list[Element]:
    """The class tops w_S over all Weyl-type S, sorted by (length, word)."""
    tops = {z_and_w(hs, s)[1] for s in weyl_type_subsets(hs)}
    return sorted(tops, key=hs.rs.sort_key)


def enumerate_hessenberg_spaces(rs: RootSystem) -> list[frozenset[Coords]]:
    """All subsets of the positive roots closed under subtracting positive
    roots, grown by closure from below."""
    pos = list(rs.positive_roots)
    pos_set = set(pos)

    def close(start: frozenset[Coords]) -> frozenset[Coords]:
        out = set(start)
        stack = list(start)
        while stack:
            alpha = stack.pop()
            for beta in pos:
                diff = tuple(a - b for a, b in zip(alpha, beta))
                if diff in pos_set and diff not in out:
                    out.add(diff)
                    stack.append(diff)
        return frozenset(out)

    spaces = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for m in frontier:
            for alpha in pos:
                if alpha in m:
                    continue
                grown = close(m | {alpha})
                if grown not in spaces:
                    spaces.add(grown)
                    nxt.append(grown)
        frontier = nxt
    return sorted(
        spaces, key=lambda s: (len(s), sorted(rs._pos_index[c] for c in s))
    )


# -- moment graph over W -----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class WeylGraph:
    rs: RootSystem
    vertices: tuple[Element, ...]
    edges: tuple[tuple[Element, Element, Coords], ...]

    def degrees(self) -> dict[Element, int]:
        degs = {v: 0 for v in self.vertices}
        for u, v, _ in self.edges:
            degs[u] += 1
            degs[v] += 1
        return degs

    def adjacency(self) -> dict[Element, list[Element]]:
        adj: dict[Element, list[Element]] = {v: [] for v in self.vertices}
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj = self.adjacency()
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == len(self.vertices)

    def first_degree_violation(self, expected: int) -> Element | None:
        degs = self.degrees()
        for v in self.vertices:
            if degs[v] != expected:
                return v
        return None


def _induced_weyl_graph(hs: HessenbergSpace, vertex_set: frozenset[Element]) -> WeylGraph:
    rs = hs.rs
    m_sorted = sorted(hs.roots, key=lambda c: rs._pos_index[c])
    refl = {c: rs.reflection(c) for c in m_sorted}
    vertices = sorted(vertex_set, key=rs.sort_key)
    edges = set()
    for w in vertices:
        for c in m_sorted:
            x = rs.mul(w, refl[c])
            if x in vertex_set:
                u, v = sorted((w, x), key=rs.sort_key)
                # weight at w is +-w(c); store the positive representative
                img = rs.act(w, c)
                if img not in rs._pos_index:
                    img = tuple(-y for y in img)
                edges.add((u, v, img))
    return WeylGraph(rs, tuple(vertices), tuple(sorted(edges)))


def arbitrary_gkm_graph(hs: HessenbergSpace) -> WeylGraph:
    """Moment graph on all of W: edges {w, w s_a} for a in M."""
    return _induced_weyl_graph(hs, frozenset(hs.rs.elements()))


@dataclass(frozen=True)
class WeylClassification:
    type_label: str
    rank: int
    element: str
    class_subset: tuple[str, ...]
    representative: str
    cell_dimension: int
    interval_size: int
    regular: bool
    violating_vertex: str | None
    simply_laced: bool
    hess_schubert_smooth: str
    reason: str | None

    def to_json_dict(self) -> dict:
        return {
            "type": self.type_label,
            "rank": self.rank,
            "element": self.element,
            "class_subset": list(self.class_subset),
            "representative": self.representative,
            "cell_dimension": self.cell_dimension,
            "interval_size": self.interval_size,
            "regular": self.regular,
            "violating_vertex": self.violating_vertex,
            "simply_laced": self.simply_laced,
            "hess_schubert_smooth": self.hess_schubert_smooth,
            "reason": self.reason,
        }


def classify_arbitrary(hs: HessenbergSpace, w: Element) -> WeylClassification:
    """Regularity of the interval graph at the admissible representative of
    w, with the smoothness verdict gated on the simply-laced hypothesis."""
    rs = hs.rs
    s = rs.inversion_set(w) & hs.roots
    _, rep = z_and_w(hs, s)
    interval = frozenset(rs.bruhat_interval_up(rep))
    graph = _induced_weyl_graph(hs, interval)
    expected = len(hs.roots) - len(s)
    violator = graph.first_degree_violation(expected)
    regular = violator is None
    if not regular:
        smooth, reason = "unknown", "interval graph is not regular"
    elif not rs.simply_laced:
        smooth, reason = "unknown", "non-simply-laced"
    else:
        smooth, reason = "yes", None
    s_sorted = sorted(s, key=lambda c: rs._pos_index[c])
    return WeylClassification(
        type_label=rs.type_label,
        rank=rs.rank,
        element=rs.format_element(w),
        class_subset=tuple(rs.format_root(c) for c in s_sorted),
        representative=rs.format_element(rep),
        cell_dimension=expected,
        interval_size=len(interval),
        regular=regular,
        violating_vertex=None if violator is None else rs.format_element(violator),
        simply_laced=rs.simply_laced,
        hess_schubert_smooth=smooth,
        reason=reason,
    )

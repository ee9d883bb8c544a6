"""Finite posets and monotone test functions.

On a finite poset every directed set has a greatest element, so the
continuous maps are exactly the monotone ones and every topological notion
used elsewhere in the library is decidable: open sets are the upper sets,
closed sets the lower sets, and the compact saturated sets are again just
the upper sets.  That makes finite posets the ground spaces on which all
exact checks run.

Points are opaque identifiers (strings in literals, tuples for product
spaces); they must be hashable and mutually orderable within one poset so
normal forms can sort by point.  The order relation is stored explicitly
and validated as reflexive, transitive and antisymmetric on construction;
relations given to the constructor are closed under reflexivity and
transitivity first, so callers may pass just the covering pairs.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from typing import Dict, Hashable, Iterable, Iterator, List, Mapping, Sequence, Tuple

from .algebra import INTERVALS, ExtNonNeg, ValueAlgebra
from .errors import EmptySupport, NotMonotone, PointNotInSpace

Point = Hashable


class FinitePoset:
    """A finite set of points with an explicit partial order."""

    __slots__ = ("_points", "_index", "_up", "_key")

    def __init__(self, points: Iterable[Point], relation: Iterable[Tuple[Point, Point]] = ()):
        pts = tuple(points)
        if len(set(pts)) != len(pts):
            raise ValueError("poset points must be distinct")
        index = {p: i for i, p in enumerate(pts)}
        up: Dict[Point, set] = {p: {p} for p in pts}
        for a, b in relation:
            if a not in index or b not in index:
                raise PointNotInSpace(f"relation mentions unknown point {a!r} or {b!r}")
            up[a].add(b)
        # transitive closure (tiny spaces; cubic is fine)
        changed = True
        while changed:
            changed = False
            for a in pts:
                extra = set()
                for b in up[a]:
                    extra |= up[b]
                if not extra <= up[a]:
                    up[a] |= extra
                    changed = True
        for a, b in combinations(pts, 2):
            if b in up[a] and a in up[b]:
                raise ValueError(f"antisymmetry fails: {a!r} and {b!r} are equivalent")
        self._points = pts
        self._index = index
        self._up = {p: frozenset(s) for p, s in up.items()}
        self._key = (frozenset(pts), frozenset((a, b) for a in pts for b in self._up[a]))

    @property
    def points(self) -> Tuple[Point, ...]:
        return self._points

    def __len__(self) -> int:
        return len(self._points)

    def __contains__(self, point: Point) -> bool:
        return point in self._index

    def require(self, point: Point) -> None:
        if point not in self._index:
            raise PointNotInSpace(f"point {point!r} is not in the space")

    def leq(self, a: Point, b: Point) -> bool:
        self.require(a)
        self.require(b)
        return b in self._up[a]

    def strict_pairs(self) -> Iterator[Tuple[Point, Point]]:
        """All pairs (a, b) with a < b."""
        for a in self._points:
            for b in self._up[a]:
                if b != a:
                    yield a, b

    def cover_pairs(self) -> List[Tuple[Point, Point]]:
        """The covering pairs (a, b): a < b with nothing strictly between."""
        covers = []
        for a, b in self.strict_pairs():
            if not any(c != a and c != b and self.leq(c, b) for c in self._up[a]):
                covers.append((a, b))
        return covers

    def up_closure(self, points: Iterable[Point]) -> frozenset:
        out: set = set()
        for p in points:
            self.require(p)
            out |= self._up[p]
        return frozenset(out)

    def down_closure(self, points: Iterable[Point]) -> frozenset:
        target = set(points)
        for p in target:
            self.require(p)
        return frozenset(q for q in self._points if self._up[q] & target)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        items = [str(p) for p in self._points]
        items += [f"{a} <= {b}" for a, b in self.cover_pairs()]
        return "poset { " + "; ".join(items) + " }"


def singleton(label: Point = "pt") -> FinitePoset:
    return FinitePoset([label])


def chain(labels: Sequence[Point]) -> FinitePoset:
    """A totally ordered poset: labels[0] < labels[1] < ..."""
    rel = list(zip(labels, labels[1:]))
    return FinitePoset(labels, rel)


def antichain(labels: Sequence[Point]) -> FinitePoset:
    return FinitePoset(labels, [])


def product_poset(x: FinitePoset, y: FinitePoset) -> FinitePoset:
    """Componentwise-ordered product; points are (x_point, y_point) pairs."""
    pts = [(a, b) for a in x.points for b in y.points]
    rel = [
        ((a, b), (c, d))
        for (a, b) in pts
        for (c, d) in pts
        if x.leq(a, c) and y.leq(b, d)
    ]
    return FinitePoset(pts, rel)


class MonotoneMap:
    """A total, monotone map from a finite poset into a value algebra.

    Monotonicity here is exactly continuity: on a finite poset, order
    preservation is all that continuity can require.  Both interval-valued
    and scalar-valued test functions use this one class, parameterized by
    the algebra.
    """

    __slots__ = ("space", "algebra", "_table")

    def __init__(
        self,
        space: FinitePoset,
        table: Mapping[Point, object],
        algebra: ValueAlgebra = INTERVALS,
        validate: bool = True,
    ):
        self.space = space
        self.algebra = algebra
        self._table = dict(table)
        if validate:
            for p in space.points:
                if p not in self._table:
                    raise ValueError(f"map not total: missing value at {p!r}")
                if not algebra.contains(self._table[p]):
                    raise ValueError(
                        f"value at {p!r} is not a {algebra.name} element: {self._table[p]!r}"
                    )
            if len(self._table) != len(space.points):
                extra = set(self._table) - set(space.points)
                raise PointNotInSpace(f"map defined at unknown points {extra!r}")
            for a, b in space.strict_pairs():
                if not algebra.leq(self._table[a], self._table[b]):
                    raise NotMonotone(
                        f"map not monotone: {a!r} <= {b!r} but "
                        f"{self._table[a]} !<= {self._table[b]}"
                    )

    def __call__(self, point: Point):
        try:
            return self._table[point]
        except KeyError:
            raise PointNotInSpace(f"point {point!r} is not in the space") from None

    def items(self):
        return self._table.items()

    def table(self) -> dict:
        return dict(self._table)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonotoneMap):
            return NotImplemented
        return (
            self.space == other.space
            and self.algebra is other.algebra
            and self._table == other._table
        )

    def __hash__(self) -> int:
        return hash((self.space, self.algebra.name, frozenset(self._table.items())))

    def __repr__(self) -> str:
        body = "; ".join(
            f"{p} -> {self.algebra.render(self._table[p])}" for p in self.space.points
        )
        return "fn h { " + body + " }"


def endpoint_maps(h: MonotoneMap) -> Tuple[Dict[Point, ExtNonNeg], Dict[Point, ExtNonNeg]]:
    """Split an interval-valued map into its endpoint tables (lower, upper).

    The lower table is monotone and the upper table antitone; both facts
    follow from monotonicity of h under reverse inclusion and are
    re-checked here as a guard.
    """
    if h.algebra is not INTERVALS:
        raise ValueError("endpoint_maps needs an interval-valued map")
    lower = {p: h(p).lo for p in h.space.points}
    upper = {p: h(p).hi for p in h.space.points}
    for a, b in h.space.strict_pairs():
        if not lower[a] <= lower[b]:
            raise NotMonotone(f"lower endpoint map fails monotonicity at {a!r} <= {b!r}")
        if not upper[b] <= upper[a]:
            raise NotMonotone(f"upper endpoint map fails antitonicity at {a!r} <= {b!r}")
    return lower, upper


class UpperSet:
    """An upward-closed subset of a finite poset."""

    __slots__ = ("poset", "members")

    def __init__(self, poset: FinitePoset, members: Iterable[Point]):
        mem = frozenset(members)
        for p in mem:
            poset.require(p)
        if poset.up_closure(mem) != mem:
            raise ValueError("set is not upward closed")
        self.poset = poset
        self.members = mem

    def __contains__(self, point: Point) -> bool:
        return point in self.members

    def __eq__(self, other) -> bool:
        if not isinstance(other, UpperSet):
            return NotImplemented
        return self.poset == other.poset and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.poset, self.members))

    def __repr__(self) -> str:
        return "upper{" + ", ".join(sorted(map(str, self.members))) + "}"


def min_upper_support(poset: FinitePoset, mass_points: Iterable[Point]) -> UpperSet:
    """The least upper set supporting a measure with the given mass points.

    Any upward-closed support must contain every positive-mass point (a
    point outside it could be swapped for the empty set without changing
    intersections), hence must contain the whole upward closure; and the
    upward closure itself is a support.
    """
    pts = list(mass_points)
    if not pts:
        raise EmptySupport("no mass points: the minimal upper support is undefined")
    return UpperSet(poset, poset.up_closure(pts))


def closed_support(poset: FinitePoset, mass_points: Iterable[Point]) -> frozenset:
    """The smallest closed (= downward-closed) set containing the mass points."""
    return poset.down_closure(mass_points)


# ---------------------------------------------------------------------------
# Enumeration helpers for exhaustive law checks.  Small posets and small
# value grids are cheap to enumerate completely, which turns several of the
# library's structural identities into finite, decidable checks.
# ---------------------------------------------------------------------------


def all_monotone_maps(
    space: FinitePoset,
    values: Sequence[object],
    algebra: ValueAlgebra = INTERVALS,
) -> List[MonotoneMap]:
    """Every monotone map from the poset into the given finite value grid."""
    pts = _linear_extension(space)
    out: List[MonotoneMap] = []
    table: Dict[Point, object] = {}

    def fill(i: int):
        if i == len(pts):
            out.append(MonotoneMap(space, dict(table), algebra, validate=False))
            return
        p = pts[i]
        below = [q for q in pts[:i] if space.leq(q, p)]
        for v in values:
            if all(algebra.leq(table[q], v) for q in below):
                table[p] = v
                fill(i + 1)
        table.pop(p, None)

    fill(0)
    return out


def all_monotone_point_maps(source: FinitePoset, target: FinitePoset) -> List[dict]:
    """Every monotone function between two posets, as point tables."""
    pts = _linear_extension(source)
    out: List[dict] = []
    table: Dict[Point, Point] = {}

    def fill(i: int):
        if i == len(pts):
            out.append(dict(table))
            return
        p = pts[i]
        below = [q for q in pts[:i] if source.leq(q, p)]
        for v in target.points:
            if all(target.leq(table[q], v) for q in below):
                table[p] = v
                fill(i + 1)
        table.pop(p, None)

    fill(0)
    return out


def _linear_extension(space: FinitePoset) -> List[Point]:
    pts = list(space.points)
    pts.sort(key=lambda p: sum(1 for q in space.points if space.leq(q, p)))
    return pts


_POSET_LABELS = ("a", "b", "c", "d", "e")


def enumerate_posets(max_points: int) -> List[FinitePoset]:
    """All posets with 1..max_points points, up to order isomorphism.

    Enumerates by choosing, for each unordered pair, one of <, > or
    incomparable, keeping the transitive antisymmetric outcomes, and
    deduplicating by the minimal relation matrix over all relabelings.
    Intended for max_points <= 5 (1, 2, 5, 16, 63 posets).
    """
    if max_points > len(_POSET_LABELS):
        raise ValueError(f"enumeration supports at most {len(_POSET_LABELS)} points")
    found: List[FinitePoset] = []
    for n in range(1, max_points + 1):
        labels = _POSET_LABELS[:n]
        pairs = list(combinations(range(n), 2))
        seen = set()
        for choice in product((0, 1, 2), repeat=len(pairs)):
            rel = [[False] * n for _ in range(n)]
            for i in range(n):
                rel[i][i] = True
            for (i, j), c in zip(pairs, choice):
                if c == 1:
                    rel[i][j] = True
                elif c == 2:
                    rel[j][i] = True
            if not _is_transitive(rel, n):
                continue
            canon = min(
                tuple(
                    rel[perm[i]][perm[j]] for i in range(n) for j in range(n)
                )
                for perm in permutations(range(n))
            )
            if canon in seen:
                continue
            seen.add(canon)
            relation = [
                (labels[i], labels[j]) for i in range(n) for j in range(n) if rel[i][j]
            ]
            found.append(FinitePoset(labels, relation))
    return found


def _is_transitive(rel, n: int) -> bool:
    for i in range(n):
        for j in range(n):
            if rel[i][j]:
                for k in range(n):
                    if rel[j][k] and not rel[i][k]:
                        return False
    return True

"""Finite-support measures and exact lower/upper integrals.

A finite-support measure assigns a positive mass (possibly infinite) to
finitely many points of a finite poset.  Every set is measurable and every
measure restricts to a continuous assignment on opens, so the entire
integration theory below is computed exactly, with no limits.

The *lower* integral is the supremum of integrals of truncations; for a
finite weighted sum it collapses to

    lower_integral(f, mu) = sum_x mass(x) *l f(x)

using the lower product (so an infinite mass at an f = 0 point contributes
nothing, while any positive-mass point with f = inf forces inf).  The
Choquet layer-cake formula - integrate the mass of the superlevel sets
over thresholds - computes the same number by a genuinely different route
and serves as the oracle for it.

The *upper* integral of an antitone (= upper semicontinuous) integrand is
the lower integral when the integrand is bounded on Q n Supp(mu) for some
compact saturated support Q of mu, and inf otherwise.  On a finite poset
the minimal such Q is the upward closure of the mass points and Supp(mu)
is their downward closure, so boundedness is decided by inspecting the
intersection of the two closures; the witness set is returned so tests can
inspect the decision.

A measure then induces the interval-valued functional

    interval_integral(mu, h) = [ lower_integral(h_lo, mu),
                                 upper_integral(h_hi, mu) ]

which is linear and monotone in h, and encloses lower_integral(f, mu) for
every measurable f squeezed between the endpoint maps of h.  Conversely,
every interval-valued functional determines an ordinary valuation through
its lower endpoints alone (``scalar_view``), and every ordinary valuation
admits a least interval-valued functional inducing it, namely
h -> [nu(h_lo), inf] (``least_interval_extension``).
"""

from __future__ import annotations

from typing import Callable, Dict, Mapping, NamedTuple, Union

from .algebra import (
    INFINITY,
    INTERVALS,
    SCALARS,
    ZERO,
    ExtNonNeg,
    IntervalValue,
    ext,
    mul_left,
)
from .errors import NotMonotone, SpaceMismatch, UnboundedMeasure, ZeroMeasure
from .spaces import (
    FinitePoset,
    MonotoneMap,
    Point,
    UpperSet,
    closed_support,
    endpoint_maps,
    min_upper_support,
)

Table = Union[Mapping[Point, ExtNonNeg], Callable[[Point], ExtNonNeg]]


class FiniteSupportMeasure:
    """A finite weighted sum of point masses on a finite poset.

    Zero masses are dropped on construction, so the stored table contains
    exactly the positive-mass points.  The measure may be unbounded (some
    mass infinite, or just a large total); upper integrals additionally
    require it to be non-zero and bounded.
    """

    __slots__ = ("space", "_masses")

    def __init__(self, space: FinitePoset, masses: Mapping[Point, object]):
        table: Dict[Point, ExtNonNeg] = {}
        for point, m in masses.items():
            space.require(point)
            m = ext(m)
            if not m.is_zero:
                table[point] = m
        self.space = space
        self._masses = table

    def mass(self, point: Point) -> ExtNonNeg:
        self.space.require(point)
        return self._masses.get(point, ZERO)

    @property
    def mass_points(self) -> frozenset:
        return frozenset(self._masses)

    def items(self):
        return self._masses.items()

    @property
    def is_zero(self) -> bool:
        return not self._masses

    def total_mass(self) -> ExtNonNeg:
        total = ZERO
        for m in self._masses.values():
            total = total + m
        return total

    @property
    def is_bounded(self) -> bool:
        return not self.total_mass().is_infinite

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteSupportMeasure):
            return NotImplemented
        return self.space == other.space and self._masses == other._masses

    def __hash__(self) -> int:
        return hash((self.space, frozenset(self._masses.items())))

    def __repr__(self) -> str:
        from .valuations import _point_key

        body = "; ".join(
            f"{m} @ {p}"
            for p, m in sorted(self._masses.items(), key=lambda kv: _point_key(kv[0]))
        )
        return "measure { " + (body if body else "") + " }"


def _lookup(f: Table, point: Point) -> ExtNonNeg:
    v = f[point] if isinstance(f, Mapping) else f(point)
    return ext(v)


def _require_total(f: Table, space: FinitePoset) -> None:
    if isinstance(f, Mapping):
        missing = [p for p in space.points if p not in f]
        if missing:
            raise ValueError(f"integrand not total: missing {missing!r}")


def lower_integral(f: Table, mu: FiniteSupportMeasure) -> ExtNonNeg:
    """Supremum-of-truncations integral, evaluated in closed form.

    Equals sum over mass points of mass *l f; the lower product encodes
    exactly what the truncation supremum does at the 0/inf corners.
    """
    _require_total(f, mu.space)
    total = ZERO
    for point, m in mu.items():
        total = total + mul_left(m, _lookup(f, point))
    return total


def choquet_integral(f: Table, mu: FiniteSupportMeasure) -> ExtNonNeg:
    """Layer-cake integral: sum of threshold-rectangle areas.

    The superlevel mass t -> mu(f > t) is a decreasing step function; its
    area is accumulated rectangle by rectangle over the sorted distinct
    finite values of f, with an infinite tail whenever some positive-mass
    point has f = inf.  Independent of ``lower_integral`` by construction;
    the two must agree exactly on every instance.
    """
    _require_total(f, mu.space)
    values = {}
    infinite_tail = False
    for point, m in mu.items():
        v = _lookup(f, point)
        if v.is_infinite:
            infinite_tail = True
        elif not v.is_zero:
            values.setdefault(v, None)
    total = ZERO
    prev = ZERO
    for v in sorted(values):
        level_mass = ZERO
        for point, m in mu.items():
            if v <= _lookup(f, point):
                level_mass = level_mass + m
        rect_width = ExtNonNeg._make(v.value - prev.value)
        total = total + mul_left(rect_width, level_mass)
        prev = v
    if infinite_tail:
        return INFINITY
    return total


def pushforward(g, mu: FiniteSupportMeasure, target: FinitePoset) -> FiniteSupportMeasure:
    """Transport masses along a point map and merge collisions.

    Satisfies the change-of-variables identity
    lower_integral(f, pushforward(g, mu)) = lower_integral(f o g, mu).
    """
    out: Dict[Point, ExtNonNeg] = {}
    for point, m in mu.items():
        y = g[point] if isinstance(g, Mapping) else g(point)
        target.require(y)
        out[y] = out.get(y, ZERO) + m
    return FiniteSupportMeasure(target, out)


class BoundednessWitness(NamedTuple):
    bounded: bool
    witness: UpperSet


def _check_antitone(f: Table, space: FinitePoset) -> None:
    for a, b in space.strict_pairs():
        if not _lookup(f, b) <= _lookup(f, a):
            raise NotMonotone(
                f"integrand not antitone: {a!r} <= {b!r} but values increase"
            )


def is_mu_bounded(fplus: Table, mu: FiniteSupportMeasure) -> BoundednessWitness:
    """Decide boundedness of an antitone integrand over the measure.

    Returns whether fplus is finite on the intersection of the minimal
    compact saturated support (the upward closure of the mass points) with
    the closed support (their downward closure), together with that
    minimal witness.  Because every compact saturated support contains all
    mass points, the minimal witness decides the existential definition.
    """
    if mu.is_zero:
        raise ZeroMeasure("the zero measure has no support witness")
    _require_total(fplus, mu.space)
    _check_antitone(fplus, mu.space)
    witness = min_upper_support(mu.space, mu.mass_points)
    closed = closed_support(mu.space, mu.mass_points)
    core = witness.members & closed
    bounded = all(not _lookup(fplus, p).is_infinite for p in core)
    return BoundednessWitness(bounded, witness)


def upper_integral(fplus: Table, mu: FiniteSupportMeasure) -> ExtNonNeg:
    """Upper integral of an antitone integrand against a bounded measure.

    Equals the lower integral when the integrand is bounded on the witness
    intersection (where it restricts to a plain finite sum), and inf
    otherwise.
    """
    if mu.is_zero:
        raise ZeroMeasure("upper integrals need a non-zero measure")
    if not mu.is_bounded:
        raise UnboundedMeasure("upper integrals need a bounded measure")
    bounded, _ = is_mu_bounded(fplus, mu)
    if not bounded:
        return INFINITY
    return lower_integral(fplus, mu)


def interval_integral(mu: FiniteSupportMeasure, h: MonotoneMap) -> IntervalValue:
    """The interval enclosing all integrals compatible with h.

    Lower endpoint: the lower integral of h's lower endpoints.  Upper
    endpoint: the upper integral of h's upper endpoints.  The result is a
    well-formed interval (lo <= hi) for every non-zero bounded measure.
    """
    if h.space != mu.space:
        raise SpaceMismatch("test function lives on a different space")
    if mu.is_zero:
        raise ZeroMeasure("interval integration needs a non-zero measure")
    if not mu.is_bounded:
        raise UnboundedMeasure("interval integration needs a bounded measure")
    lower, upper = endpoint_maps(h)
    return IntervalValue(lower_integral(lower, mu), upper_integral(upper, mu))


def scalar_view(F, f: MonotoneMap) -> ExtNonNeg:
    """Recover the ordinary valuation hidden in an interval functional.

    F is any evaluator of a linear monotone interval-valued functional;
    f is a monotone scalar test function.  The value of the induced scalar
    valuation at f is the lower endpoint of F at [f, inf], and it does not
    depend on the choice of upper part: adding the absorbing bottom to any
    h with the same lower endpoints flattens the upper endpoint to inf
    without touching the lower one.
    """
    if f.algebra is not SCALARS:
        raise ValueError("scalar_view needs a scalar-valued test function")
    h = MonotoneMap(
        f.space,
        {p: IntervalValue._make(f(p), INFINITY) for p in f.space.points},
        INTERVALS,
        validate=False,
    )
    return F(h).lo


def least_interval_extension(nu) -> Callable[[MonotoneMap], IntervalValue]:
    """The least interval functional whose scalar view is nu.

    nu is an evaluator of an ordinary valuation (monotone scalar test
    functions to scalars).  The returned evaluator sends h to
    [nu(h_lo), inf]: the least precise interval functional compatible
    with nu, since inf upper endpoints are least in reverse inclusion.
    """

    def extended(h: MonotoneMap) -> IntervalValue:
        lower, _ = endpoint_maps(h)
        f = MonotoneMap(h.space, lower, SCALARS, validate=False)
        return IntervalValue._make(nu(f), INFINITY)

    return extended

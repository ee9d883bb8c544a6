"""Guaranteed enclosures of unit-interval integrals by dyadic refinement.

The integrator never produces an approximate number: at refinement depth n
it splits [0, 1] into the 2^n dyadic cells [(i-1)/2^n, i/2^n], evaluates an
interval-valued test function h on each cell, and returns the exact
interval

    level(n, h) = sum_i [1/2^n, 1/2^n] * h([(i-1)/2^n, i/2^n]).

Because h is monotone under reverse inclusion, the levels form an
ascending chain: each halving step rewrites a cell's weight as two halves
(distributivity) and then refines each half's argument, which can only
shrink the result interval.  Every level is therefore a certified
enclosure of the limit, and the enclosure's width is the exact price of
stopping at depth n.

Test functions are either written directly as evaluators on dyadic
intervals, or derived from a piecewise-monotone function f on [0, 1] via
the canonical extension

    ext(f)(I) = [ inf of f over I n [0,1], sup of f over I n [0,1] ],

computed exactly from piece endpoints: monotone pieces attain their
extrema at the ends of the overlap, so no root finding is ever needed.
Piece monotonicity is declared in the input and spot-validated on a
dyadic grid; a piece that fails the check must be split by the caller at
its turning point.

``dyadic_round`` is the grid-rounding companion: it sends a number
x in [0, 1] to the depth-n dyadic interval [round_down(x), round_up(x)],
an ascending (in n) chain of enclosures of the precise point [x, x].
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

from .algebra import (
    IZERO,
    ExtNonNeg,
    IntervalValue,
    ext,
    ival_leq,
    rational,
    width,
)
from .errors import DepthCapExceeded, NonEvaluablePiece, OutOfRange

DEFAULT_DEPTH_CAP = 24

_ZERO_RAT = rational(0)
_ONE_RAT = rational(1)


def is_dyadic(r) -> bool:
    """True iff r is an integer multiple of some 1/2^n."""
    den = int(r.denominator)
    return den & (den - 1) == 0


@dataclass(frozen=True, slots=True)
class DyadicInterval:
    """A closed interval with dyadic endpoints, a point of the ground space.

    Ordered (like all intervals here) by reverse inclusion.  These are the
    arguments that test functions are evaluated at; hashability makes them
    usable as memo keys.
    """

    lo: object
    hi: object

    def __post_init__(self):
        object.__setattr__(self, "lo", rational(self.lo))
        object.__setattr__(self, "hi", rational(self.hi))
        if not is_dyadic(self.lo) or not is_dyadic(self.hi):
            raise ValueError(f"endpoints must be dyadic: [{self.lo}, {self.hi}]")
        if self.lo > self.hi:
            raise ValueError(f"endpoints out of order: [{self.lo}, {self.hi}]")

    def refines(self, other: "DyadicInterval") -> bool:
        """True iff self is a sub-interval of other (other <= self)."""
        return other.lo <= self.lo and self.hi <= other.hi

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __repr__(self) -> str:
        return f"[{self.lo},{self.hi}]"


class Polynomial:
    """A polynomial with exact rational coefficients, low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[object]):
        cs = [rational(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs) if cs else (_ZERO_RAT,)

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls([c])

    @classmethod
    def identity(cls) -> "Polynomial":
        return cls([0, 1])

    def __call__(self, x):
        acc = _ZERO_RAT
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            [
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(n)
            ]
        )

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out = [_ZERO_RAT] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = Polynomial.constant(1)
        for _ in range(n):
            result = result * self
        return result

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) == 1

    def scaled(self, c) -> "Polynomial":
        return Polynomial([rational(c) * a for a in self.coeffs])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        def term(i, c):
            if i == 0:
                return str(c)
            pow_part = "x" if i == 1 else f"x^{i}"
            return pow_part if c == 1 else f"{c}*{pow_part}"

        parts = [term(i, c) for i, c in enumerate(self.coeffs) if c != 0]
        return " + ".join(parts) if parts else "0"


# number of sample points per piece for the monotonicity spot check
_SPOT_GRID = 16


class PiecewiseMonotoneFn:
    """A nonnegative function on [0, 1] given as monotone polynomial pieces.

    Each piece carries a declared direction ('inc' or 'dec'); the
    declaration is what makes exact range computation possible (extrema of
    a monotone piece sit at the ends of any sub-segment).  Directions are
    spot-validated on a dyadic grid, and nonnegativity is checked at piece
    endpoints, which bound the range once monotonicity holds.  Adjacent
    pieces may disagree at a shared breakpoint; ranges then include both
    one-sided values, which is the tight enclosure of the jump.
    """

    __slots__ = ("breakpoints", "pieces")

    def __init__(
        self,
        breakpoints: Sequence[object],
        pieces: Sequence[Tuple[str, Polynomial]],
    ):
        bps = [rational(b) for b in breakpoints]
        if len(bps) < 2 or len(pieces) != len(bps) - 1:
            raise ValueError("need k+1 breakpoints for k pieces")
        if bps[0] != 0 or bps[-1] != 1:
            raise ValueError("breakpoints must start at 0 and end at 1")
        if any(not a < b for a, b in zip(bps, bps[1:])):
            raise ValueError("breakpoints must be strictly ascending")
        checked = []
        for (direction, poly), lo, hi in zip(pieces, bps, bps[1:]):
            if direction not in ("inc", "dec"):
                raise ValueError(f"unknown direction {direction!r}")
            self._spot_check(direction, poly, lo, hi)
            checked.append((direction, poly))
        self.breakpoints = tuple(bps)
        self.pieces = tuple(checked)

    @staticmethod
    def _spot_check(direction: str, poly: Polynomial, lo, hi) -> None:
        step = (hi - lo) / _SPOT_GRID
        samples = [poly(lo + k * step) for k in range(_SPOT_GRID + 1)]
        for a, b in zip(samples, samples[1:]):
            ok = a <= b if direction == "inc" else b <= a
            if not ok:
                raise NonEvaluablePiece(
                    f"piece on [{lo},{hi}] is not {direction} (violated between "
                    f"sampled grid points); split the segment at the turning point"
                )
        if min(samples[0], samples[-1]) < 0:
            raise ValueError(f"piece on [{lo},{hi}] takes negative values")

    def __call__(self, x):
        """Pointwise value; at interior breakpoints the left piece wins."""
        x = rational(x)
        if not (0 <= x <= 1):
            raise OutOfRange(f"{x} is outside [0, 1]")
        for k, (lo, hi) in enumerate(zip(self.breakpoints, self.breakpoints[1:])):
            if lo <= x <= hi:
                return self.pieces[k][1](x)
        raise OutOfRange(f"{x} is outside [0, 1]")  # pragma: no cover

    def range_over(self, lo, hi) -> Tuple[object, object]:
        """Exact (min, max) of the function over [lo, hi] within [0, 1]."""
        best_lo = None
        best_hi = None
        for k, (seg_lo, seg_hi) in enumerate(
            zip(self.breakpoints, self.breakpoints[1:])
        ):
            a = max(seg_lo, lo)
            b = min(seg_hi, hi)
            if a > b:
                continue
            poly = self.pieces[k][1]
            va, vb = poly(a), poly(b)
            lo_k, hi_k = (va, vb) if va <= vb else (vb, va)
            best_lo = lo_k if best_lo is None else min(best_lo, lo_k)
            best_hi = hi_k if best_hi is None else max(best_hi, hi_k)
        if best_lo is None:
            raise OutOfRange(f"[{lo},{hi}] misses [0, 1]")
        return best_lo, best_hi

    def __repr__(self) -> str:
        segs = []
        for (direction, poly), lo, hi in zip(
            self.pieces, self.breakpoints, self.breakpoints[1:]
        ):
            segs.append(f"[{lo},{hi}] {direction}: {poly!r}")
        return "piecewise { " + "; ".join(segs) + " }"


class IntervalTestFn:
    """A memoized interval-valued test function on dyadic intervals.

    The evaluator must be monotone under reverse inclusion: shrinking the
    argument interval may only refine the result.  That is spot-validated
    on nested dyadic pairs at construction.  The memo table is insert-only
    with deterministic values, so concurrent grid evaluation cannot change
    any result.
    """

    __slots__ = ("_evaluator", "_cache", "name")

    def __init__(
        self,
        evaluator: Callable[[DyadicInterval], IntervalValue],
        *,
        validate: bool = True,
        name: str = "",
    ):
        self._evaluator = evaluator
        self._cache: dict = {}
        self.name = name
        if validate:
            self._spot_check()

    def _spot_check(self) -> None:
        for n in range(3):
            step = rational(1, 2 ** n)
            half = step / 2
            for i in range(2 ** n):
                parent = DyadicInterval(i * step, (i + 1) * step)
                for child in (
                    DyadicInterval(i * step, i * step + half),
                    DyadicInterval(i * step + half, (i + 1) * step),
                    DyadicInterval(i * step + half, i * step + half),
                ):
                    if not ival_leq(self(parent), self(child)):
                        raise ValueError(
                            f"evaluator is not monotone under refinement at "
                            f"{parent} -> {child}"
                        )

    def __call__(self, interval: DyadicInterval) -> IntervalValue:
        cached = self._cache.get(interval)
        if cached is None:
            cached = self._evaluator(interval)
            if not isinstance(cached, IntervalValue):
                raise TypeError("evaluator must return an IntervalValue")
            self._cache[interval] = cached
        return cached

    def __repr__(self) -> str:
        return f"<test fn {self.name or 'anonymous'}>"


def canonical_extension(f: PiecewiseMonotoneFn) -> IntervalTestFn:
    """The tight interval extension of a piecewise-monotone function.

    Sends an interval I to [inf f, sup f] over I n [0, 1], which is
    monotone under refinement by construction.  Raises OutOfRange when I
    misses [0, 1] entirely.
    """

    def evaluator(interval: DyadicInterval) -> IntervalValue:
        lo = max(_ZERO_RAT, interval.lo)
        hi = min(_ONE_RAT, interval.hi)
        if lo > hi:
            raise OutOfRange(f"{interval} misses [0, 1]")
        mn, mx = f.range_over(lo, hi)
        return IntervalValue._make(ExtNonNeg._make(mn), ExtNonNeg._make(mx))

    return IntervalTestFn(evaluator, validate=False, name=repr(f))


def dyadic_grid(n: int) -> List[DyadicInterval]:
    """The 2^n closed dyadic cells of depth n covering [0, 1]."""
    step = rational(1, 2 ** n)
    return [DyadicInterval(i * step, (i + 1) * step) for i in range(2 ** n)]


def lebesgue_n(
    n: int,
    h: IntervalTestFn,
    *,
    cap: int = DEFAULT_DEPTH_CAP,
    threads: int = 1,
) -> IntervalValue:
    """The depth-n enclosure: sum of uniformly weighted cell values.

    Computed entirely in interval arithmetic; equals the pair of endpoint
    sums (weighted lower endpoints, weighted upper endpoints) because the
    cell weight is finite and positive.
    """
    if n < 0:
        raise ValueError("depth must be nonnegative")
    if n > cap:
        raise DepthCapExceeded(f"depth {n} exceeds the cap {cap}", depth=cap)
    cells = dyadic_grid(n)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(h, cells))
    else:
        values = [h(cell) for cell in cells]
    w = IntervalValue(rational(1, 2 ** n), rational(1, 2 ** n))
    acc = IZERO
    for v in values:
        acc = acc + w * v
    return acc


def lebesgue_integrate(
    h: IntervalTestFn,
    eps,
    *,
    cap: int = DEFAULT_DEPTH_CAP,
    threads: int = 1,
) -> Tuple[IntervalValue, int]:
    """Refine until the enclosure width is at most eps.

    Returns (enclosure, depth) for the smallest depth n <= cap with
    width(level n) <= eps.  Every returned interval is a certified
    enclosure of the limit from below in the refinement order.  If the cap
    is hit first, raises DepthCapExceeded carrying the deepest enclosure
    computed, so callers still see the best certified result.
    """
    eps = ext(eps)
    if eps.is_infinite or eps.is_zero:
        raise ValueError("eps must be a positive rational width target")
    best = None
    for n in range(cap + 1):
        best = lebesgue_n(n, h, cap=cap, threads=threads)
        if width(best) <= eps:
            return best, n
    raise DepthCapExceeded(
        f"width target {eps} not reached by depth {cap}",
        enclosure=best,
        depth=cap,
    )


def chain_check(h: IntervalTestFn, n_max: int, *, cap: int = DEFAULT_DEPTH_CAP) -> bool:
    """Exact check that the dyadic levels ascend up to depth n_max."""
    if n_max > cap:
        raise DepthCapExceeded(f"depth {n_max} exceeds the cap {cap}", depth=cap)
    previous = None
    for n in range(n_max + 1):
        current = lebesgue_n(n, h, cap=cap)
        if previous is not None and not ival_leq(previous, current):
            return False
        previous = current
    return True


def dyadic_round(n: int, x) -> DyadicInterval:
    """Round x in [0, 1] outward to the depth-n dyadic grid.

    The lower endpoint is the largest grid point strictly approximating x
    from below (grid point i/2^n for x in (i/2^n, (i+1)/2^n], and 0 on
    [0, 1/2^n]); the upper endpoint mirrors it: 1 - round_down(1 - x).
    The results ascend with n and squeeze onto the precise point [x, x].
    """
    if n < 0:
        raise ValueError("depth must be nonnegative")
    x = rational(x)
    if not (0 <= x <= 1):
        raise OutOfRange(f"{x} is outside [0, 1]")
    lo = _round_down(n, x)
    hi = 1 - _round_down(n, 1 - x)
    return DyadicInterval(lo, hi)


def _round_down(n: int, x):
    scaled = x * 2 ** n
    ceil = -((-scaled.numerator) // scaled.denominator)
    return rational(max(0, ceil - 1), 2 ** n)

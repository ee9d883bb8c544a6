"""Monad structure on elementary valuations: unit, bind, image, strength.

The unit sends a point to its Dirac mass.  A kernel is a monotone map from
a source poset into valuations on a target poset; its extension acts on an
elementary valuation by the closed form

    bind(f, sum_i r_i x delta_{x_i}) = sum_i r_i . f(x_i)

(scale each image valuation and add), which agrees with the functional
description bind(f, nu)(k) = nu(x -> f(x)(k)) on every test function k.
The closed form is primary because it returns a value in normal form; the
functional description is kept by the test suites as an oracle.

With unit and bind come the derived operations: the pushforward along a
monotone point map, the two tensorial strengths pairing a point with a
valuation on the other factor, and the product valuation

    product(mu, nu) = sum_ij (r_i x s_j) delta_{(x_i, y_j)}

whose evaluation matches both iterated orders exactly (the coefficient
algebra is commutative and distributive, so the exchange of summation is
an identity, not an approximation).  Ascending chains of valuations are
pushed through bind/product element-wise; no limit objects are built.
"""

from __future__ import annotations

from typing import Callable, Mapping, Union

from .algebra import INTERVALS, ValueAlgebra
from .errors import NotMonotone, PointNotInSpace, SpaceMismatch
from .spaces import FinitePoset, Point, product_poset
from .valuations import (
    ElementaryValuation,
    add,
    dirac,
    exhaustive_tests,
    leq_on,
    scale,
)

# Exhaustive monotonicity validation of kernels is exponential in the
# target size; beyond this many target points the caller must vouch for
# monotonicity explicitly.
KERNEL_VALIDATION_LIMIT = 4

PointFn = Union[Mapping[Point, Point], Callable[[Point], Point]]


def _apply(g: PointFn, x: Point) -> Point:
    return g[x] if isinstance(g, Mapping) else g(x)


class Kernel:
    """A monotone map from source points to valuations on a target poset.

    Monotonicity (in the pointwise order on valuations) is checked against
    the exhaustive test family when the target is small; larger kernels
    must be declared monotone by the caller.
    """

    __slots__ = ("source", "target", "algebra", "_table", "declared_monotone")

    def __init__(
        self,
        source: FinitePoset,
        target: FinitePoset,
        table: Mapping[Point, ElementaryValuation],
        *,
        declared_monotone: bool = False,
        validate: bool = True,
    ):
        self.source = source
        self.target = target
        self._table = dict(table)
        self.declared_monotone = declared_monotone
        algebra: ValueAlgebra | None = None
        for p in source.points:
            if p not in self._table:
                raise ValueError(f"kernel not total: missing image at {p!r}")
            img = self._table[p]
            if img.space != target:
                raise SpaceMismatch(f"image at {p!r} lives off the target poset")
            if algebra is None:
                algebra = img.algebra
            elif img.algebra is not algebra:
                raise SpaceMismatch("kernel images mix coefficient algebras")
        if len(self._table) != len(source.points):
            extra = set(self._table) - set(source.points)
            raise PointNotInSpace(f"kernel defined at unknown points {extra!r}")
        self.algebra = algebra if algebra is not None else INTERVALS
        if validate and not declared_monotone:
            if len(target) > KERNEL_VALIDATION_LIMIT:
                raise NotMonotone(
                    "target too large to validate kernel monotonicity "
                    "exhaustively; pass declared_monotone=True"
                )
            tests = exhaustive_tests(target, algebra=self.algebra)
            for a, b in source.strict_pairs():
                if not leq_on(self._table[a], self._table[b], tests):
                    raise NotMonotone(
                        f"kernel not monotone: {a!r} <= {b!r} but images are "
                        "not ordered on the exhaustive test family"
                    )

    def __call__(self, x: Point) -> ElementaryValuation:
        try:
            return self._table[x]
        except KeyError:
            raise PointNotInSpace(f"point {x!r} is not in the kernel source") from None

    def __repr__(self) -> str:
        body = "; ".join(f"{p} -> {self._table[p]!r}" for p in self.source.points)
        return "kernel { " + body + " }"


def unit(space: FinitePoset, x: Point, algebra: ValueAlgebra = INTERVALS) -> ElementaryValuation:
    """The monad unit: the Dirac mass at x."""
    return dirac(space, x, algebra)


def bind(f: Kernel, nu: ElementaryValuation) -> ElementaryValuation:
    """Extend a kernel to valuations: sum_i scale(r_i, f(x_i))."""
    if nu.space != f.source:
        raise SpaceMismatch("valuation lives off the kernel source")
    if nu.algebra is not f.algebra:
        raise SpaceMismatch("valuation and kernel use different algebras")
    acc = None
    for coeff, point in nu.terms:
        part = scale(coeff, f(point))
        acc = part if acc is None else add(acc, part)
    return acc


def kleisli_compose(g: Kernel, f: Kernel) -> Kernel:
    """The kernel x -> bind(g, f(x)); the composite used by the third monad law."""
    if f.target != g.source:
        raise SpaceMismatch("kernels do not compose: target/source mismatch")
    table = {x: bind(g, f(x)) for x in f.source.points}
    # monotone as a composite of monotone maps; skip the exhaustive recheck
    return Kernel(
        f.source, g.target, table, declared_monotone=True, validate=False
    )


def map_valuation(
    g: PointFn,
    nu: ElementaryValuation,
    target: FinitePoset,
    *,
    validate: bool = True,
) -> ElementaryValuation:
    """Pushforward along a monotone point map: sum_i r_i delta_{g(x_i)}.

    Satisfies evaluate(map_valuation(g, nu), k) = evaluate(nu, k o g) for
    every test function k, the usual image-measure identity.
    """
    source = nu.space
    if validate:
        for x in source.points:
            y = _apply(g, x)
            if y not in target:
                raise PointNotInSpace(f"image point {y!r} is not in the target")
        for a, b in source.strict_pairs():
            if not target.leq(_apply(g, a), _apply(g, b)):
                raise NotMonotone(f"point map not monotone at {a!r} <= {b!r}")
    terms = [(c, _apply(g, p)) for c, p in nu.terms]
    return ElementaryValuation(terms=terms, space=target, algebra=nu.algebra, validate=False)


def strength(space_x: FinitePoset, x: Point, nu: ElementaryValuation) -> ElementaryValuation:
    """Pair a fixed left point with a valuation on the right factor.

    Returns sum_i r_i delta_{(x, y_i)} on the product poset, satisfying
    evaluate(strength(x, nu), h) = evaluate(nu, y -> h(x, y)).
    """
    space_x.require(x)
    prod = product_poset(space_x, nu.space)
    terms = [(c, (x, y)) for c, y in nu.terms]
    return ElementaryValuation(prod, terms, nu.algebra, validate=False)


def dual_strength(mu: ElementaryValuation, space_y: FinitePoset, y: Point) -> ElementaryValuation:
    """Mirror image of ``strength``: fix the right point, spread the left."""
    space_y.require(y)
    prod = product_poset(mu.space, space_y)
    terms = [(c, (x, y)) for c, x in mu.terms]
    return ElementaryValuation(prod, terms, mu.algebra, validate=False)


def product(mu: ElementaryValuation, nu: ElementaryValuation) -> ElementaryValuation:
    """The product valuation sum_ij (r_i x s_j) delta_{(x_i, y_j)}.

    Its evaluation on any test function k equals both iterated forms:
    integrate in x then y, or in y then x.  Coefficient arithmetic is
    pure, so any evaluation schedule yields the same normalized result.
    """
    if mu.algebra is not nu.algebra:
        raise SpaceMismatch("cannot form the product over different algebras")
    alg = mu.algebra
    prod = product_poset(mu.space, nu.space)
    terms = [
        (alg.mul(c, d), (x, y))
        for c, x in mu.terms
        for d, y in nu.terms
    ]
    return ElementaryValuation(prod, terms, alg, validate=False)

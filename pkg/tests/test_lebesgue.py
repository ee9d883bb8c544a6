import pytest

from oracle_dyadic import brute_force_level

from intval.algebra import INFINITY, IntervalValue, ext, ival, ival_leq, rational, width
from intval.errors import DepthCapExceeded, NonEvaluablePiece, OutOfRange
from intval.laws import FIXTURE_INTEGRALS, fixture_functions
from intval.lebesgue import (
    DyadicInterval,
    IntervalTestFn,
    PiecewiseMonotoneFn,
    Polynomial,
    canonical_extension,
    chain_check,
    dyadic_grid,
    dyadic_round,
    is_dyadic,
    lebesgue_integrate,
    lebesgue_n,
)


class TestDyadicInterval:
    def test_dyadic_check(self):
        assert is_dyadic(rational(3, 8))
        assert not is_dyadic(rational(1, 3))

    def test_validation(self):
        with pytest.raises(ValueError):
            DyadicInterval(rational(1, 3), 1)
        with pytest.raises(ValueError):
            DyadicInterval(1, 0)

    def test_refines(self):
        assert DyadicInterval("1/4", "1/2").refines(DyadicInterval(0, 1))
        assert not DyadicInterval(0, 1).refines(DyadicInterval("1/4", "1/2"))


class TestPolynomial:
    def test_horner(self):
        p = Polynomial([1, -2, 1])  # (x-1)^2
        assert p(rational(3)) == rational(4)

    def test_arithmetic(self):
        x = Polynomial.identity()
        assert (x * x - x)(rational(2)) == rational(2)
        assert (x ** 3).coeffs == (0, 0, 0, 1)

    def test_trailing_zeros_trimmed(self):
        assert Polynomial([1, 0, 0]).coeffs == (1,)


class TestPiecewiseMonotoneFn:
    def test_rejects_misdeclared_direction(self):
        with pytest.raises(NonEvaluablePiece):
            PiecewiseMonotoneFn([0, 1], [("inc", Polynomial([1, -1]))])

    def test_rejects_non_monotone_piece(self):
        # x(1-x) turns at 1/2; declared monotone on all of [0,1] it must fail
        bump = Polynomial([0, 1, -1])
        with pytest.raises(NonEvaluablePiece):
            PiecewiseMonotoneFn([0, 1], [("inc", bump)])
        # split at the turning point it is fine
        PiecewiseMonotoneFn(
            [0, rational(1, 2), 1], [("inc", bump), ("dec", bump)]
        )

    def test_rejects_negative_values(self):
        with pytest.raises(ValueError):
            PiecewiseMonotoneFn([0, 1], [("inc", Polynomial([-1, 1]))])

    def test_rejects_bad_breakpoints(self):
        with pytest.raises(ValueError):
            PiecewiseMonotoneFn([0, rational(1, 2)], [("inc", Polynomial.identity())])
        with pytest.raises(ValueError):
            PiecewiseMonotoneFn(
                [0, 0, 1],
                [("inc", Polynomial.identity()), ("inc", Polynomial.identity())],
            )

    def test_pointwise_value(self):
        fn = fixture_functions()["tent"]
        assert fn(rational(1, 4)) == rational(1, 2)
        assert fn(rational(1, 2)) == rational(1)
        assert fn(rational(7, 8)) == rational(1, 4)


class TestCanonicalExtension:
    def test_identity_clips(self):
        h = canonical_extension(fixture_functions()["id"])
        assert h(DyadicInterval("1/4", "1/2")) == ival("1/4", "1/2")
        assert h(DyadicInterval(0, 2)) == ival(0, 1)

    def test_constant(self):
        fn = PiecewiseMonotoneFn([0, 1], [("inc", Polynomial.constant(rational(2, 3)))])
        h = canonical_extension(fn)
        assert h(DyadicInterval("1/8", "3/8")) == ival("2/3", "2/3")

    def test_square_on_subinterval(self):
        h = canonical_extension(fixture_functions()["square"])
        assert h(DyadicInterval("1/4", "1/2")) == ival("1/16", "1/4")

    def test_misses_domain(self):
        h = canonical_extension(fixture_functions()["id"])
        with pytest.raises(OutOfRange):
            h(DyadicInterval(2, 3))

    def test_jump_at_breakpoint_takes_both_sides(self):
        step = PiecewiseMonotoneFn(
            [0, rational(1, 2), 1],
            [("inc", Polynomial.constant(0)), ("inc", Polynomial.constant(1))],
        )
        h = canonical_extension(step)
        assert h(DyadicInterval("1/2", "1/2")) == ival(0, 1)

    def test_monotone_under_refinement(self):
        for fn in fixture_functions().values():
            h = canonical_extension(fn)
            for n in range(4):
                for cell in dyadic_grid(n):
                    mid = (cell.lo + cell.hi) / 2
                    for sub in (
                        DyadicInterval(cell.lo, mid),
                        DyadicInterval(mid, cell.hi),
                        DyadicInterval(mid, mid),
                    ):
                        assert ival_leq(h(cell), h(sub))


class TestLevels:
    def test_identity_levels(self):
        h = canonical_extension(fixture_functions()["id"])
        assert lebesgue_n(1, h) == ival("1/4", "3/4")
        assert lebesgue_n(2, h) == ival("3/8", "5/8")

    def test_square_level_one(self):
        h = canonical_extension(fixture_functions()["square"])
        assert lebesgue_n(1, h) == ival("1/8", "5/8")

    def test_constant_is_exact_at_depth_zero(self):
        h = canonical_extension(fixture_functions()["half"])
        assert lebesgue_n(0, h) == ival("1/2", "1/2")

    def test_against_brute_force_oracle(self):
        for name, fn in fixture_functions().items():
            h = canonical_extension(fn)
            for n in range(9):
                assert lebesgue_n(n, h) == brute_force_level(fn, n), (name, n)

    def test_endpoint_sum_identity(self):
        """Interval-arithmetic path equals separate weighted endpoint sums."""
        from intval.algebra import ZERO, mul_left, mul_right

        for fn in fixture_functions().values():
            h = canonical_extension(fn)
            for n in range(7):
                w = ext(rational(1, 2 ** n))
                lo_sum, hi_sum = ZERO, ZERO
                for cell in dyadic_grid(n):
                    lo_sum = lo_sum + mul_left(w, h(cell).lo)
                    hi_sum = hi_sum + mul_right(w, h(cell).hi)
                assert lebesgue_n(n, h) == IntervalValue(lo_sum, hi_sum)

    def test_depth_cap(self):
        h = canonical_extension(fixture_functions()["id"])
        with pytest.raises(DepthCapExceeded):
            lebesgue_n(5, h, cap=4)

    def test_threads_do_not_change_results(self):
        h1 = canonical_extension(fixture_functions()["tent"])
        h2 = canonical_extension(fixture_functions()["tent"])
        for n in range(6):
            assert lebesgue_n(n, h1, threads=4) == lebesgue_n(n, h2)


class TestIntegrate:
    def test_identity_to_eighth(self):
        h = canonical_extension(fixture_functions()["id"])
        assert lebesgue_integrate(h, "1/8") == (ival("7/16", "9/16"), 3)

    def test_zero_function_converges_immediately(self):
        fn = PiecewiseMonotoneFn([0, 1], [("inc", Polynomial.constant(0))])
        h = canonical_extension(fn)
        assert lebesgue_integrate(h, "1/1000000") == (ival(0, 0), 0)

    def test_loose_target_stops_at_depth_zero(self):
        # the depth-0 enclosure of the square fixture is [0, 1], width 1,
        # already within a width target of 1
        h = canonical_extension(fixture_functions()["square"])
        assert lebesgue_integrate(h, 1) == (ival(0, 1), 0)

    def test_cap_exceeded_carries_partial_result(self):
        h = canonical_extension(fixture_functions()["id"])
        with pytest.raises(DepthCapExceeded) as info:
            lebesgue_integrate(h, "1/1024", cap=3)
        assert info.value.depth == 3
        assert info.value.enclosure == ival("7/16", "9/16")

    def test_rejects_bad_eps(self):
        h = canonical_extension(fixture_functions()["id"])
        for bad in (0, "inf"):
            with pytest.raises(ValueError):
                lebesgue_integrate(h, bad)


class TestChainAndSqueeze:
    def test_chain_check_fixtures(self):
        for name, fn in fixture_functions().items():
            assert chain_check(canonical_extension(fn), 10), name

    def test_squeeze_and_monotone_convergence(self):
        for name, fn in fixture_functions().items():
            target = ext(FIXTURE_INTEGRALS[name])
            h = canonical_extension(fn)
            prev = None
            for n in range(11):
                enc = lebesgue_n(n, h)
                assert enc.lo <= target <= enc.hi, (name, n)
                if prev is not None:
                    assert prev.lo <= enc.lo
                    assert enc.hi <= prev.hi
                prev = enc

    def test_lipschitz_width_bounds(self):
        bounds = {"id": 1, "square": 2, "half": 0, "tent": 2}
        for name, fn in fixture_functions().items():
            h = canonical_extension(fn)
            L = rational(bounds[name])
            for n in range(9):
                assert width(lebesgue_n(n, h)) <= ext(L / 2 ** n), (name, n)


class TestInfinityBranch:
    @staticmethod
    def spike():
        """A test function with an infinite upper endpoint at 1/2."""
        half = rational(1, 2)

        def evaluator(cell: DyadicInterval) -> IntervalValue:
            lo = max(rational(0), cell.lo)
            hi = min(rational(1), cell.hi)
            if lo > hi:
                raise OutOfRange(f"{cell} misses [0, 1]")
            upper = INFINITY if half in cell else ext(hi)
            return IntervalValue(ext(lo), upper)

        return IntervalTestFn(evaluator, name="spike at 1/2")

    def test_spot_validation_accepts_it(self):
        self.spike()

    def test_upper_endpoint_pinned_at_infinity(self):
        h = self.spike()
        for n in range(9):
            enc = lebesgue_n(n, h)
            assert enc.hi.is_infinite
            assert not enc.lo.is_infinite

    def test_never_converges(self):
        with pytest.raises(DepthCapExceeded):
            lebesgue_integrate(self.spike(), "1/2", cap=6)


class TestDyadicRound:
    def test_examples(self):
        assert dyadic_round(1, "1/2") == DyadicInterval(0, 1)
        assert dyadic_round(2, 1) == DyadicInterval("3/4", 1)
        for n in range(6):
            assert dyadic_round(n, 0) == DyadicInterval(0, rational(1, 2 ** n))

    def test_encloses_and_ascends(self):
        xs = [rational(0), rational(1, 3), rational(1, 2), rational(5, 8), rational(1)]
        for x in xs:
            prev = None
            for n in range(10):
                cell = dyadic_round(n, x)
                assert cell.lo <= x <= cell.hi
                if prev is not None:
                    assert cell.refines(prev)
                prev = cell
            assert cell.hi - cell.lo <= rational(2, 2 ** 9)

    def test_squeezes_evaluations(self):
        h = canonical_extension(fixture_functions()["square"])
        x = rational(3, 8)
        point = DyadicInterval(x, x)
        prev = None
        for n in range(9):
            enc = h(dyadic_round(n, x))
            assert ival_leq(enc, h(point))
            if prev is not None:
                assert ival_leq(prev, enc)
            prev = enc

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            dyadic_round(3, 2)


class TestEvaluatorValidation:
    def test_non_monotone_evaluator_rejected(self):
        def bad(cell: DyadicInterval) -> IntervalValue:
            # wider intervals get tighter values: wrong way around
            w = cell.hi - cell.lo
            return ival(0, str(w)) if w > 0 else ival(0, 1)

        with pytest.raises(ValueError):
            IntervalTestFn(bad)

    def test_memoization_returns_identical_objects(self):
        h = canonical_extension(fixture_functions()["id"])
        cell = DyadicInterval(0, "1/2")
        assert h(cell) is h(cell)

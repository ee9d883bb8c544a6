import random

from intval.algebra import IONE, ival
from intval.laws import (
    FAMILIES,
    all_grid_valuations,
    choquet_oracle,
    interval_axioms,
    fubini_exchange,
    lebesgue_chain,
    random_poset,
    random_valuation,
    strength_identities,
    _shrink_valuation,
)
from intval.spaces import antichain, chain
from intval.valuations import ElementaryValuation


class TestFamilies:
    def test_registry_names(self):
        assert list(FAMILIES) == [
            "interval-axioms",
            "monad-laws",
            "strength",
            "fubini",
            "choquet",
            "lebesgue-chain",
        ]

    def test_interval_axioms_small(self):
        assert interval_axioms(seed=1, cases=300).passed

    def test_strength_small(self):
        assert strength_identities(seed=1, cases=40).passed

    def test_fubini_small(self):
        assert fubini_exchange(seed=1, cases=40).passed

    def test_choquet_small(self):
        assert choquet_oracle(seed=1, cases=150).passed

    def test_lebesgue_chain_small(self):
        r = lebesgue_chain(cases=4)
        assert r.passed

    def test_seeded_reproducibility(self):
        a = fubini_exchange(seed=9, cases=30)
        b = fubini_exchange(seed=9, cases=30)
        assert (a.cases, a.failures, a.counterexample) == (
            b.cases,
            b.failures,
            b.counterexample,
        )


class TestEnumerators:
    def test_grid_valuation_count(self):
        # one grid coefficient per chosen point over every nonempty subset
        space = antichain(["a", "b", "c"])
        assert len(all_grid_valuations(space)) == 3 * 5 + 3 * 25 + 125


class TestShrinking:
    def test_drops_irrelevant_terms(self):
        space = antichain(["a", "b", "c"])
        nu = ElementaryValuation(
            space, [(ival(1, 2), "a"), (IONE, "b"), (ival(0, 3), "c")]
        )
        # pretend the failure only needs a term at 'b'
        fails = lambda v: any(p == "b" for _, p in v.terms)
        small = _shrink_valuation(nu, fails)
        assert [p for _, p in small.terms] == ["b"]
        assert fails(small)

    def test_simplifies_coefficients(self):
        space = antichain(["a"])
        nu = ElementaryValuation(space, [(ival("1/3", "22/7"), "a")])
        fails = lambda v: True
        small = _shrink_valuation(nu, fails)
        assert small.terms[0][0] == IONE


class TestGenerators:
    def test_random_posets_are_valid_and_varied(self):
        rng = random.Random(0)
        sizes = set()
        for _ in range(100):
            p = random_poset(rng, 6)
            sizes.add(len(p))
            for a, b in p.strict_pairs():
                assert p.leq(a, b)
        assert sizes == {1, 2, 3, 4, 5, 6}

    def test_random_valuations_are_normalized(self):
        rng = random.Random(1)
        space = chain(["a", "b", "c"])
        for _ in range(100):
            nu = random_valuation(rng, space)
            again = ElementaryValuation(space, nu.terms, nu.algebra)
            assert nu == again

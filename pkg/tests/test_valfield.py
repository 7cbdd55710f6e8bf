"""Exact valued arithmetic: frozen examples first, then algebraic laws."""

import random

import pytest
from gmpy2 import mpq

from hyperred.errors import DomainError, E_DIV_ZERO, E_RAMIFICATION
from hyperred.valfield import (
    INF,
    GaussRat,
    MoebiusMap,
    RationalAtP,
    RootPair,
    ValuedElement,
    apply_moebius,
    format_gauss,
    pair_bracket,
    parse_gauss,
    rescale_common,
)


def VE(num, den=None, e=1):
    return ValuedElement.from_pairs(num, den, e)


class TestFrozenExamples:
    def test_sum_of_pi_powers_over_unit(self):
        # (pi^3 + pi^5)/(1 + pi) has valuation 3: lowest-exponent rule
        x = VE([[3, "1"], [5, "1"]], [[0, "1"], [1, "1"]])
        assert x.valuation() == 3

    def test_zero_valuation_is_infinite(self):
        assert ValuedElement.zero().valuation() == INF
        z = ValuedElement.pi() - ValuedElement.pi()
        assert z.is_zero() and z.valuation() == INF

    def test_ramified_tau_cubed(self):
        x = ValuedElement.tau(2)
        cube = x * x * x
        assert cube.valuation() == mpq(3, 2)

    def test_bracket_finite_pairs(self):
        # (1:0), (1:pi) -> -pi
        i = RootPair.finite(ValuedElement.zero())
        j = RootPair.finite(ValuedElement.pi())
        b = pair_bracket(i, j)
        assert b == ValuedElement.pi().neg()
        assert b.valuation() == 1

    def test_bracket_with_infinity_first(self):
        # (0:1), (1:x) -> 1 for any finite x
        for x in [ValuedElement.pi(), ValuedElement.constant(17),
                  ValuedElement.from_pairs([[0, "1"], [7, "-2/3"]])]:
            inf = RootPair.infinity(x)
            assert pair_bracket(inf, RootPair.finite(x)) == ValuedElement.one()

    def test_bracket_rational_at_p(self):
        # (1:1), (1:1+p) at p=7 -> -p
        one = RationalAtP(1, 7)
        b = pair_bracket(RootPair.finite(one), RootPair.finite(RationalAtP(8, 7)))
        assert b.value == -7
        assert b.valuation() == 1

    def test_moebius_identity(self):
        m = MoebiusMap.from_ints(1, 0, 0, 1)
        r = RootPair.finite(ValuedElement.pi())
        s = apply_moebius(m, r)
        assert s.projectively_equal(r)

    def test_moebius_inversion_sends_pi_to_pi_inverse(self):
        # x -> 1/x on (1:pi) gives (pi:1) projectively
        m = MoebiusMap.from_ints(0, 1, 1, 0)
        s = apply_moebius(m, RootPair.finite(ValuedElement.pi()))
        target = RootPair(ValuedElement.pi(), ValuedElement.one())
        assert s.projectively_equal(target)
        assert s.affine().valuation() == -1


def _random_element(rng, e=1):
    num = {}
    for _ in range(rng.randint(1, 4)):
        num[rng.randint(0, 6)] = GaussRat(mpq(rng.randint(-9, 9), rng.randint(1, 5)),
                                          mpq(rng.randint(-3, 3), 1))
    den = {rng.randint(0, 3): GaussRat(1)}
    if rng.random() < 0.5:
        den[rng.randint(1, 5)] = GaussRat(rng.randint(1, 4))
    x = ValuedElement(num, den, e)
    return x


class TestValuationLaws:
    def test_multiplicativity_and_ultrametric(self):
        rng = random.Random(20260822)
        for _ in range(1000):
            x = _random_element(rng)
            y = _random_element(rng)
            if x.is_zero() or y.is_zero():
                continue
            assert (x * y).valuation() == x.valuation() + y.valuation()
            s = x + y
            if s.is_zero():
                continue
            lo = min(x.valuation(), y.valuation())
            assert s.valuation() >= lo
            if x.valuation() != y.valuation():
                assert s.valuation() == lo

    def test_exactness_roundtrips(self):
        rng = random.Random(7)
        for _ in range(200):
            x = _random_element(rng)
            y = _random_element(rng)
            assert (x + y) - y == x
            if not y.is_zero():
                assert (x * y) / y == x

    def test_reduction_is_idempotent(self):
        x = VE([[3, "1"], [5, "1"]], [[0, "1"], [1, "1"]])
        again = ValuedElement(dict(x.num), dict(x.den), x.e)
        assert again.num == x.num and again.den == x.den

    def test_unit_coeff_picks_lowest_term(self):
        x = VE([[2, "5"], [9, "-1"]], [[0, "1"], [1, "3"]])
        assert x.unit_coeff() == GaussRat(5)
        y = RationalAtP(mpq(98, 3), 7)  # 2*7^2/3
        assert y.valuation() == 2
        assert y.unit_coeff() == mpq(2, 3)


class TestBracketLaws:
    def test_antisymmetry(self):
        rng = random.Random(11)
        for _ in range(50):
            r = RootPair.finite(_random_element(rng))
            s = RootPair.finite(_random_element(rng))
            assert pair_bracket(r, s) == pair_bracket(s, r).neg()

    def test_bracket_against_infinity_is_minus_alpha(self):
        rng = random.Random(12)
        inf = RootPair.infinity(ValuedElement.one())
        for _ in range(20):
            r = RootPair(_random_element(rng), _random_element(rng))
            if r.alpha.is_zero():
                continue
            assert pair_bracket(r, inf) == r.alpha.neg()

    def test_moebius_bracket_identity(self):
        # bracket(m r, m s) = det(m) * bracket(r, s), with no stray scalars
        rng = random.Random(13)
        for _ in range(30):
            try:
                m = MoebiusMap.from_ints(rng.randint(-4, 4), rng.randint(-4, 4),
                                         rng.randint(-4, 4), rng.randint(1, 4))
            except DomainError:
                continue
            r = RootPair.finite(_random_element(rng))
            s = RootPair.finite(_random_element(rng))
            lhs = pair_bracket(apply_moebius(m, r), apply_moebius(m, s))
            rhs = m.det() * pair_bracket(r, s)
            assert lhs == rhs


class TestErrorsAndRescue:
    def test_mismatched_ramification_raises(self):
        x = ValuedElement.tau(2)
        y = ValuedElement.pi(1)
        with pytest.raises(DomainError) as err:
            _ = x + y
        assert err.value.code == E_RAMIFICATION

    def test_rescale_common(self):
        x = ValuedElement.tau(2)       # v = 1/2
        y = ValuedElement.tau(3)       # v = 1/3
        (a, b), e = rescale_common([x, y])
        assert e == 6
        assert a.valuation() == mpq(1, 2) and b.valuation() == mpq(1, 3)
        assert (a * b).valuation() == mpq(5, 6)

    def test_division_by_zero(self):
        with pytest.raises(DomainError) as err:
            ValuedElement.one() / ValuedElement.zero()
        assert err.value.code == E_DIV_ZERO


class TestGaussianParsing:
    def test_round_trip(self):
        cases = ["3", "-4/7", "i", "-i", "2/3*i", "1/2+3/4*i", "5-2*i", "0"]
        for s in cases:
            g = parse_gauss(s)
            assert parse_gauss(format_gauss(g)) == g

    def test_values(self):
        assert parse_gauss("1/2+3/4*i") == GaussRat(mpq(1, 2), mpq(3, 4))
        assert parse_gauss("-i") == GaussRat(0, -1)
        assert parse_gauss("7") == GaussRat(7)

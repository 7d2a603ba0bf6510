"""Skew Waldschmidt constants: exact values per rule, certified
brackets, and validation."""

from dataclasses import dataclass
from fractions import Fraction

import pytest

from fthresh import (
    BinomialSum,
    CeilingPower,
    Filtration,
    IntegralClosurePowers,
    IntersectionFiltration,
    MonomialIdeal,
    OrdinaryPowers,
    PrimePowerIntersection,
    ProductFiltration,
    SymbolicSquarefree,
    UnsupportedInputError,
    VeroneseAnnotation,
    skew_waldschmidt,
)

F = Fraction
xy = MonomialIdeal.from_exponents

TRIANGLE = xy(3, [[1, 1, 0], [0, 1, 1], [1, 0, 1]])


def test_validation():
    f = OrdinaryPowers(xy(2, [[1, 1]]))
    with pytest.raises(UnsupportedInputError):
        skew_waldschmidt([1], f)
    with pytest.raises(UnsupportedInputError):
        skew_waldschmidt([1, -1], f)
    with pytest.raises(UnsupportedInputError):
        skew_waldschmidt([0, 0], f)
    with pytest.raises(UnsupportedInputError):
        skew_waldschmidt([1, 1], OrdinaryPowers(MonomialIdeal.zero(2)))


def test_ordinary_exact():
    res = skew_waldschmidt([1, 1], OrdinaryPowers(xy(2, [[2, 0], [0, 3]])))
    assert res.exact == 2 and res.method == "ordinary_exact"
    assert res.lower == res.upper == 2
    # skew weights pick a different supporting generator
    res = skew_waldschmidt([F(1, 2), 5], OrdinaryPowers(xy(2, [[2, 0], [0, 3]])))
    assert res.exact == 1


def test_symbolic_lp_all_ones():
    res = skew_waldschmidt([1, 1, 1], SymbolicSquarefree(TRIANGLE))
    assert res.exact == F(3, 2) and res.method == "symbolic_lp"
    # upper bound for the symbolic threshold: v(xyz)/vhat = 3/(3/2) = height
    assert F(3) / res.exact == 2


def test_symbolic_lp_prime_indicator_is_one():
    # the valuation v_P counting degrees along one minimal prime has
    # skew Waldschmidt constant exactly 1 on the symbolic filtration
    f = SymbolicSquarefree(TRIANGLE)
    for prime in f.primes:
        w = [1 if j in prime else 0 for j in range(3)]
        assert skew_waldschmidt(w, f).exact == 1


def test_prime_power_lp():
    f = PrimePowerIntersection(3, [(frozenset({0, 1}), 2), (frozenset({2}), 3)])
    res = skew_waldschmidt([1, 1, 1], f)
    # min x0+x1+x2 with x0+x1 >= 2, x2 >= 3
    assert res.exact == 5 and res.method == "prime_power_lp"


def test_integral_closure_newton_lp():
    res = skew_waldschmidt([1, 1], IntegralClosurePowers(xy(2, [[2, 0], [0, 3]])))
    # min x+y over 3x+2y >= 6, x,y >= 0 sits at the vertex (2,0)
    assert res.exact == 2 and res.method == "newton_lp"
    # the Rees facet normal itself is the tight valuation for C^m
    res = skew_waldschmidt([3, 2], IntegralClosurePowers(xy(2, [[2, 0], [0, 3]])))
    assert res.exact == 6
    assert F(3 + 2) / res.exact == F(5, 6)


def test_ceiling_exact():
    res = skew_waldschmidt([1, 2], CeilingPower(MonomialIdeal.maximal(2), F(5, 3)))
    assert res.exact == F(5, 3) and res.method == "ceiling_exact"


def test_product_and_binomial():
    a = OrdinaryPowers(xy(2, [[1, 0]]))
    b = OrdinaryPowers(xy(2, [[0, 2]]))
    prod = skew_waldschmidt([1, 1], ProductFiltration(a, b))
    assert prod.exact == 3 and prod.method == "product_sum"
    bs = skew_waldschmidt([1, 1], BinomialSum(a, b))
    assert bs.exact == 1 and bs.method == "binomial_min"


def test_intersection_bracket_pinches():
    f = IntersectionFiltration(
        OrdinaryPowers(xy(1, [[2]])), OrdinaryPowers(xy(1, [[3]]))
    )
    res = skew_waldschmidt([1], f)
    assert res.method == "intersection_bracket"
    assert res.lower == res.upper == res.exact == 3


def test_intersection_bracket_sound_when_open():
    f = IntersectionFiltration(
        SymbolicSquarefree(TRIANGLE), OrdinaryPowers(MonomialIdeal.maximal(3))
    )
    res = skew_waldschmidt([1, 1, 1], f, horizon=8)
    assert res.lower <= res.upper
    # levels materialized agree with the bracket
    for r in range(1, 9):
        assert f.level(r).valuation([1, 1, 1]) >= res.lower * r


def test_veronese_level():
    base = OrdinaryPowers(xy(2, [[2, 0], [0, 3]]))
    res = skew_waldschmidt([1, 1], VeroneseAnnotation(base, 3))
    assert res.exact == 2 and res.method == "veronese_level"


@dataclass(frozen=True)
class _DoubledMaximal(Filtration):
    """a_r = m^{2r}; deliberately not one of the shipped rules."""

    nvars: int

    def _level_impl(self, r):
        return MonomialIdeal.maximal(self.nvars).power(2 * r)

    def witness_level(self, u):
        return u.degree() // 2

    def degree_slope(self):
        return F(2)

    def admissibility(self):
        return (1, 2)

    def support(self):
        return frozenset(range(self.nvars))

    def to_json(self):
        return {"rule": "test_doubled", "nvars": self.nvars}

    def embed(self, nvars, offset=0):
        raise NotImplementedError

    @property
    def rule(self):
        return "test_doubled"


def test_generic_fallback_sampled():
    res = skew_waldschmidt([1, 1], _DoubledMaximal(2), horizon=5)
    assert res.method == "sampled"
    assert res.lower == 0 and res.upper == 2 and res.exact is None

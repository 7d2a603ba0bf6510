"""Graded families (filtrations) of monomial ideals.

A filtration here is a rule assigning to each level r >= 0 a monomial
ideal a_r with a_0 = R, a_{r+1} subseteq a_r and a_i * a_j subseteq
a_{i+j}.  The architecture is membership-first: the dominant consumer
(the nu engine) only ever asks whether a single witness monomial lies in
a_r, and every shipped rule answers that with an exact closed form or a
bounded search -- generator sets are materialized lazily and cached only
when genuinely needed (axiom checks, containment certificates, composite
rules).

Shipped rules:

* ``OrdinaryPowers(I)``            a_r = I^r
* ``SymbolicSquarefree(I)``        a_r = r-th symbolic power of a
                                   square-free ideal (intersection of
                                   minimal-prime powers)
* ``PrimePowerIntersection``       a_r = intersection of P_i^{w_i r}
* ``IntegralClosurePowers(I)``     a_r = integral closure of I^r
* ``CeilingPower(I, beta)``        a_r = I^{ceil(beta*r)}
* ``ProductFiltration(F, G)``      c_r = F_r * G_r
* ``IntersectionFiltration(F, G)`` d_r = F_r cap G_r
* ``BinomialSum(F, G)``            e_r = sum_i F_i * G_{r-i}
* ``VeroneseAnnotation(F, d)``     F with the user assertion F_{kd} = (F_d)^k

Each rule also reports a positive ``degree_slope`` delta with
min-degree(a_r) >= delta * r (used to bound witness searches) and
pigeonhole ``admissibility`` constants (h, c) such that
a_{(h+m)q + c} subseteq a_{m+1}^{[q]} for all m, q = p^e (used to bound
containment searches on the general nu path).
"""

from __future__ import annotations

import itertools
import threading
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .errors import (
    AmbientMismatchError,
    SizeGuardError,
    UnsupportedInputError,
    UnsupportedSymbolicPowerError,
)
from .monomial import Monomial, MonomialIdeal
from .newton import (
    integral_closure_generators,
    integral_closure_level,
    newton_polyhedron,
)
from .lp import solve_lp

__all__ = [
    "Filtration",
    "OrdinaryPowers",
    "SymbolicSquarefree",
    "PrimePowerIntersection",
    "IntegralClosurePowers",
    "CeilingPower",
    "ProductFiltration",
    "IntersectionFiltration",
    "BinomialSum",
    "VeroneseAnnotation",
    "symbolic_filtration",
    "verify_filtration_axioms",
    "is_admissible_witness",
    "AxiomReport",
    "AdmissibilityReport",
    "filtration_from_json",
]

_BINSUM_LEVEL_GUARD = 4096


@lru_cache(maxsize=4096)
def _cached_level(filtration: "Filtration", r: int) -> MonomialIdeal:
    return filtration._level_impl(r)


def _ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _floor_div_frac(s: int, beta: Fraction) -> int:
    # max integer r with beta * r <= s
    return (s * beta.denominator) // beta.numerator


class Filtration(ABC):
    """Abstract base; subclasses are frozen dataclasses, hashable and
    JSON round-trippable."""

    nvars: int

    # -- levels ---------------------------------------------------------- #

    def level(self, r: int) -> MonomialIdeal:
        """Minimal generators of a_r (cached, LRU-bounded globally)."""
        if r < 0:
            raise UnsupportedInputError("filtration level must be >= 0")
        if r == 0:
            return MonomialIdeal.unit(self.nvars)
        return _cached_level(self, r)

    @abstractmethod
    def _level_impl(self, r: int) -> MonomialIdeal: ...

    # -- membership ------------------------------------------------------ #

    def member(self, r: int, u: Monomial) -> bool:
        """Is the monomial u in a_r?"""
        if u.nvars != self.nvars:
            raise AmbientMismatchError("monomial lives in a different ring")
        if r <= 0:
            return True
        return self.witness_level(u) >= r

    @abstractmethod
    def witness_level(self, u: Monomial) -> int:
        """Largest r >= 0 with u in a_r (finite for all shipped rules)."""

    # -- structure data --------------------------------------------------- #

    @abstractmethod
    def degree_slope(self) -> Fraction:
        """A positive delta with min-degree(a_r) >= delta * r for r >= 1."""

    @abstractmethod
    def admissibility(self) -> tuple[int, int]:
        """Pigeonhole constants (h, c): a_{(h+m)q+c} subseteq a_{m+1}^{[q]}."""

    @abstractmethod
    def support(self) -> frozenset[int]:
        """Variables that can appear in any level >= 1."""

    def radical(self) -> MonomialIdeal:
        """Radical of a_1 (= radical of every positive level)."""
        return self.level(1).radical()

    # -- serialization / embedding ---------------------------------------- #

    @abstractmethod
    def to_json(self) -> dict: ...

    @abstractmethod
    def embed(self, nvars: int, offset: int = 0) -> "Filtration": ...

    def describe(self) -> str:
        return f"{type(self).__name__} in {self.nvars} variables"


# ---------------------------------------------------------------------- #
# base rules
# ---------------------------------------------------------------------- #


def _require_usable_base(ideal: MonomialIdeal, *, allow_zero: bool = True) -> None:
    if ideal.is_unit():
        raise UnsupportedInputError(
            "unit-ideal filtration is constantly R; not a useful filtration"
        )
    if ideal.is_zero() and not allow_zero:
        raise UnsupportedInputError("rule needs a nonzero ideal")


@dataclass(frozen=True)
class OrdinaryPowers(Filtration):
    """a_r = I^r.  A zero base ideal gives the zero filtration."""

    ideal: MonomialIdeal

    def __post_init__(self):
        _require_usable_base(self.ideal)

    @property
    def nvars(self) -> int:
        return self.ideal.nvars

    def _level_impl(self, r: int) -> MonomialIdeal:
        return self.ideal.power(r)

    def witness_level(self, u: Monomial) -> int:
        lvl = self.ideal.membership_level(u)
        assert lvl is not None  # unit base excluded at construction
        return lvl

    def degree_slope(self) -> Fraction:
        if self.ideal.is_zero():
            return Fraction(1)
        return Fraction(self.ideal.alpha())

    def admissibility(self) -> tuple[int, int]:
        return (max(self.ideal.num_generators(), 1), 0)

    def support(self) -> frozenset[int]:
        return self.ideal.support_vars()

    def to_json(self) -> dict:
        return {"rule": "ordinary", "ideal": self.ideal.to_json()}

    def embed(self, nvars: int, offset: int = 0) -> "OrdinaryPowers":
        return OrdinaryPowers(self.ideal.embed(nvars, offset))


@dataclass(frozen=True)
class SymbolicSquarefree(Filtration):
    """Symbolic powers of a square-free monomial ideal:
    a_r = intersection over minimal primes P of P^r."""

    ideal: MonomialIdeal

    def __post_init__(self):
        _require_usable_base(self.ideal, allow_zero=False)
        if not self.ideal.is_square_free():
            raise UnsupportedSymbolicPowerError(
                "symbolic powers are implemented for square-free monomial "
                "ideals; for intersections of prime powers use "
                "PrimePowerIntersection, for pure-power ideals the ordinary "
                "powers coincide with the symbolic ones"
            )

    @property
    def nvars(self) -> int:
        return self.ideal.nvars

    @cached_property
    def primes(self) -> tuple[frozenset[int], ...]:
        return self.ideal.minimal_primes()

    def _level_impl(self, r: int) -> MonomialIdeal:
        out: MonomialIdeal | None = None
        for p in self.primes:
            pw = _prime_power(self.nvars, tuple(sorted(p)), r)
            out = pw if out is None else out.intersect(pw)
        assert out is not None
        return out

    def witness_level(self, u: Monomial) -> int:
        return min(sum(u.exps[j] for j in p) for p in self.primes)

    def degree_slope(self) -> Fraction:
        return Fraction(1)

    def admissibility(self) -> tuple[int, int]:
        h = self.ideal.big_height()
        return (h, 1 - h)

    def support(self) -> frozenset[int]:
        return self.ideal.support_vars()

    def to_json(self) -> dict:
        return {"rule": "symbolic", "ideal": self.ideal.to_json()}

    def embed(self, nvars: int, offset: int = 0) -> "SymbolicSquarefree":
        return SymbolicSquarefree(self.ideal.embed(nvars, offset))


def symbolic_filtration(ideal: MonomialIdeal) -> Filtration:
    """Symbolic-power filtration of an ideal, when supported.

    Square-free ideals use the minimal-prime intersection; pure-power
    ideals (x1^a1, .., xk^ak) are m-primary on their support so symbolic
    and ordinary powers agree; everything else raises.
    """
    if ideal.is_square_free():
        return SymbolicSquarefree(ideal)
    if ideal.pure_power_map() is not None:
        return OrdinaryPowers(ideal)
    raise UnsupportedSymbolicPowerError(
        "symbolic powers of a non-square-free, non-pure-power monomial "
        "ideal are not supported"
    )


@lru_cache(maxsize=4096)
def _prime_power(nvars: int, variables: tuple[int, ...], r: int) -> MonomialIdeal:
    """P^r for the monomial prime on the given variables: all degree-r
    monomials in those variables."""
    gens = []
    for combo in itertools.combinations_with_replacement(variables, r):
        e = [0] * nvars
        for j in combo:
            e[j] += 1
        gens.append(Monomial(e))
    return MonomialIdeal(nvars, gens)


@dataclass(frozen=True)
class PrimePowerIntersection(Filtration):
    """a_r = intersection of P_i^{w_i * r} for monomial primes P_i."""

    nvars: int
    components: tuple[tuple[frozenset[int], int], ...]

    def __post_init__(self):
        if not self.components:
            raise UnsupportedInputError("need at least one prime-power component")
        canon = []
        for supp, w in self.components:
            supp = frozenset(int(j) for j in supp)
            w = int(w)
            if not supp:
                raise UnsupportedInputError("empty prime support")
            if any(not 0 <= j < self.nvars for j in supp):
                raise AmbientMismatchError("prime support out of range")
            if w < 1:
                raise UnsupportedInputError("prime-power weight must be >= 1")
            canon.append((supp, w))
        canon.sort(key=lambda c: (sorted(c[0]), c[1]))
        object.__setattr__(self, "components", tuple(canon))

    def _level_impl(self, r: int) -> MonomialIdeal:
        out: MonomialIdeal | None = None
        for supp, w in self.components:
            pw = _prime_power(self.nvars, tuple(sorted(supp)), w * r)
            out = pw if out is None else out.intersect(pw)
        assert out is not None
        return out

    def witness_level(self, u: Monomial) -> int:
        return min(
            sum(u.exps[j] for j in supp) // w for supp, w in self.components
        )

    def degree_slope(self) -> Fraction:
        return Fraction(max(w for _, w in self.components))

    def admissibility(self) -> tuple[int, int]:
        h = 1
        for supp, w in self.components:
            h = max(h, 1 + _ceil_frac(Fraction(len(supp) - 1, w)))
        return (h, 0)

    def support(self) -> frozenset[int]:
        out: set[int] = set()
        for supp, _ in self.components:
            out |= supp
        return frozenset(out)

    def to_json(self) -> dict:
        return {
            "rule": "prime_power_intersection",
            "vars": self.nvars,
            "components": [
                {"support": sorted(supp), "weight": w}
                for supp, w in self.components
            ],
        }

    def embed(self, nvars: int, offset: int = 0) -> "PrimePowerIntersection":
        comps = tuple(
            (frozenset(j + offset for j in supp), w) for supp, w in self.components
        )
        if any(j >= nvars for supp, _ in comps for j in supp):
            raise AmbientMismatchError("embedding does not fit in target ring")
        return PrimePowerIntersection(nvars, comps)


@dataclass(frozen=True)
class IntegralClosurePowers(Filtration):
    """a_r = integral closure of I^r (Newton polyhedron lattice points)."""

    ideal: MonomialIdeal

    def __post_init__(self):
        _require_usable_base(self.ideal, allow_zero=False)

    @property
    def nvars(self) -> int:
        return self.ideal.nvars

    def _level_impl(self, r: int) -> MonomialIdeal:
        return integral_closure_generators(self.ideal, r)

    def witness_level(self, u: Monomial) -> int:
        return integral_closure_level(self.ideal, u)

    def degree_slope(self) -> Fraction:
        np_ = newton_polyhedron(self.ideal)
        cons = [(list(f.normal), ">=", f.offset) for f in np_.essential]
        res = solve_lp([1] * self.nvars, cons, sense="min")
        assert res.status == "optimal" and res.value is not None
        assert res.value > 0
        return res.value

    def admissibility(self) -> tuple[int, int]:
        return (self.nvars - 1 + self.ideal.num_generators(), 0)

    def support(self) -> frozenset[int]:
        return self.ideal.support_vars()

    def to_json(self) -> dict:
        return {"rule": "integral_closure", "ideal": self.ideal.to_json()}

    def embed(self, nvars: int, offset: int = 0) -> "IntegralClosurePowers":
        return IntegralClosurePowers(self.ideal.embed(nvars, offset))


@dataclass(frozen=True)
class CeilingPower(Filtration):
    """a_r = I^{ceil(beta * r)} for a positive rational beta."""

    ideal: MonomialIdeal
    beta: Fraction

    def __post_init__(self):
        _require_usable_base(self.ideal, allow_zero=False)
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.beta <= 0:
            raise UnsupportedInputError("ceiling exponent beta must be > 0")

    @property
    def nvars(self) -> int:
        return self.ideal.nvars

    def _level_impl(self, r: int) -> MonomialIdeal:
        return self.ideal.power(_ceil_frac(self.beta * r))

    def witness_level(self, u: Monomial) -> int:
        base = self.ideal.membership_level(u)
        assert base is not None
        return _floor_div_frac(base, self.beta)

    def degree_slope(self) -> Fraction:
        return self.beta * self.ideal.alpha()

    def admissibility(self) -> tuple[int, int]:
        mu = self.ideal.num_generators()
        return (1 + _ceil_frac(Fraction(mu) / self.beta), 0)

    def support(self) -> frozenset[int]:
        return self.ideal.support_vars()

    def to_json(self) -> dict:
        return {
            "rule": "ceiling",
            "ideal": self.ideal.to_json(),
            "beta": str(self.beta),
        }

    def embed(self, nvars: int, offset: int = 0) -> "CeilingPower":
        return CeilingPower(self.ideal.embed(nvars, offset), self.beta)


# ---------------------------------------------------------------------- #
# composite rules
# ---------------------------------------------------------------------- #


def _check_same_ambient(left: Filtration, right: Filtration) -> None:
    if left.nvars != right.nvars:
        raise AmbientMismatchError("component filtrations live in different rings")


@dataclass(frozen=True)
class ProductFiltration(Filtration):
    """c_r = a_r * b_r."""

    left: Filtration
    right: Filtration

    def __post_init__(self):
        _check_same_ambient(self.left, self.right)

    @property
    def nvars(self) -> int:
        return self.left.nvars

    def _level_impl(self, r: int) -> MonomialIdeal:
        return self.left.level(r) * self.right.level(r)

    def member(self, r: int, u: Monomial) -> bool:
        if u.nvars != self.nvars:
            raise AmbientMismatchError("monomial lives in a different ring")
        if r <= 0:
            return True
        return any(
            g.divides(u) and self.right.member(r, u.quotient(g))
            for g in self.left.level(r).gens
        )

    def witness_level(self, u: Monomial) -> int:
        hi = min(self.left.witness_level(u), self.right.witness_level(u))
        lo = 0
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.member(mid, u):
                lo = mid
            else:
                hi = mid - 1
        return lo

    def degree_slope(self) -> Fraction:
        return self.left.degree_slope() + self.right.degree_slope()

    def admissibility(self) -> tuple[int, int]:
        hl, cl = self.left.admissibility()
        hr, cr = self.right.admissibility()
        return (max(hl, hr), max(cl, cr))

    def support(self) -> frozenset[int]:
        return self.left.support() | self.right.support()

    def to_json(self) -> dict:
        return {
            "rule": "product",
            "left": self.left.to_json(),
            "right": self.right.to_json(),
        }

    def embed(self, nvars: int, offset: int = 0) -> "ProductFiltration":
        return ProductFiltration(
            self.left.embed(nvars, offset), self.right.embed(nvars, offset)
        )


@dataclass(frozen=True)
class IntersectionFiltration(Filtration):
    """d_r = a_r cap b_r."""

    left: Filtration
    right: Filtration

    def __post_init__(self):
        _check_same_ambient(self.left, self.right)

    @property
    def nvars(self) -> int:
        return self.left.nvars

    def _level_impl(self, r: int) -> MonomialIdeal:
        return self.left.level(r).intersect(self.right.level(r))

    def witness_level(self, u: Monomial) -> int:
        return min(self.left.witness_level(u), self.right.witness_level(u))

    def degree_slope(self) -> Fraction:
        return max(self.left.degree_slope(), self.right.degree_slope())

    def admissibility(self) -> tuple[int, int]:
        hl, cl = self.left.admissibility()
        hr, cr = self.right.admissibility()
        return (max(hl, hr), max(cl, cr))

    def support(self) -> frozenset[int]:
        return self.left.support() | self.right.support()

    def to_json(self) -> dict:
        return {
            "rule": "intersection",
            "left": self.left.to_json(),
            "right": self.right.to_json(),
        }

    def embed(self, nvars: int, offset: int = 0) -> "IntersectionFiltration":
        return IntersectionFiltration(
            self.left.embed(nvars, offset), self.right.embed(nvars, offset)
        )


@dataclass(frozen=True)
class BinomialSum(Filtration):
    """e_r = sum over i of a_i * b_{r-i} (the binomial-sum filtration)."""

    left: Filtration
    right: Filtration

    def __post_init__(self):
        _check_same_ambient(self.left, self.right)

    @property
    def nvars(self) -> int:
        return self.left.nvars

    def _level_impl(self, r: int) -> MonomialIdeal:
        out = MonomialIdeal.zero(self.nvars)
        for i in range(r + 1):
            out = out + (self.left.level(i) * self.right.level(r - i))
        return out

    def witness_level(self, u: Monomial) -> int:
        # u in e_r iff some i and generator g of a_i with g | u put u/g in
        # b_{r-i}; so the exact level is max_i max_g (i + wl_b(u/g)).
        hi_left = self.left.witness_level(u)
        if hi_left > _BINSUM_LEVEL_GUARD:
            raise SizeGuardError(
                "binomial-sum witness search too deep; reduce p^e or levels"
            )
        best = self.right.witness_level(u)  # the i = 0 term
        for i in range(1, hi_left + 1):
            for g in self.left.level(i).gens:
                if g.divides(u):
                    best = max(best, i + self.right.witness_level(u.quotient(g)))
        return best

    def degree_slope(self) -> Fraction:
        return min(self.left.degree_slope(), self.right.degree_slope())

    def admissibility(self) -> tuple[int, int]:
        hl, cl = self.left.admissibility()
        hr, cr = self.right.admissibility()
        return (hl + hr, cl + cr)

    def support(self) -> frozenset[int]:
        return self.left.support() | self.right.support()

    def to_json(self) -> dict:
        return {
            "rule": "binomial_sum",
            "left": self.left.to_json(),
            "right": self.right.to_json(),
        }

    def embed(self, nvars: int, offset: int = 0) -> "BinomialSum":
        return BinomialSum(
            self.left.embed(nvars, offset), self.right.embed(nvars, offset)
        )


@dataclass(frozen=True)
class VeroneseAnnotation(Filtration):
    """A filtration together with the assertion that a_{k d} = (a_d)^k.

    The assertion is user-supplied and checked on demand by ``verify``;
    the threshold engine uses it to reduce to an ordinary-power question
    at level d.
    """

    base: Filtration
    degree: int

    def __post_init__(self):
        if self.degree < 1:
            raise UnsupportedInputError("Veronese degree must be >= 1")

    @property
    def nvars(self) -> int:
        return self.base.nvars

    def _level_impl(self, r: int) -> MonomialIdeal:
        return self.base.level(r)

    def member(self, r: int, u: Monomial) -> bool:
        return self.base.member(r, u)

    def witness_level(self, u: Monomial) -> int:
        return self.base.witness_level(u)

    def degree_slope(self) -> Fraction:
        return self.base.degree_slope()

    def admissibility(self) -> tuple[int, int]:
        return self.base.admissibility()

    def support(self) -> frozenset[int]:
        return self.base.support()

    def verify(self, k_max: int = 4) -> bool:
        """Check a_{k d} = (a_d)^k for k = 1..k_max."""
        vd = self.base.level(self.degree)
        for k in range(1, k_max + 1):
            if self.base.level(k * self.degree) != vd.power(k):
                return False
        return True

    def to_json(self) -> dict:
        return {
            "rule": "veronese",
            "base": self.base.to_json(),
            "degree": self.degree,
        }

    def embed(self, nvars: int, offset: int = 0) -> "VeroneseAnnotation":
        return VeroneseAnnotation(self.base.embed(nvars, offset), self.degree)


# ---------------------------------------------------------------------- #
# verification reports
# ---------------------------------------------------------------------- #


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    levels_checked: int
    violations: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "levels_checked": self.levels_checked,
            "violations": list(self.violations),
        }


def verify_filtration_axioms(filtration: Filtration, r_max: int) -> AxiomReport:
    """Finite check of the filtration axioms up to level r_max:
    a_0 = R, descending levels, and a_i * a_j subseteq a_{i+j}."""
    violations: list[str] = []
    if not filtration.level(0).is_unit():
        violations.append("a_0 is not the unit ideal")
    levels = [filtration.level(r) for r in range(r_max + 1)]
    for r in range(1, r_max + 1):
        if not levels[r - 1].contains_ideal(levels[r]):
            violations.append(f"a_{r} is not contained in a_{r - 1}")
    for i in range(1, r_max + 1):
        for j in range(i, r_max - i + 1):
            if not levels[i + j].contains_ideal(levels[i] * levels[j]):
                violations.append(f"a_{i} * a_{j} not contained in a_{i + j}")
    return AxiomReport(not violations, r_max, tuple(violations))


@dataclass(frozen=True)
class AdmissibilityReport:
    ok: bool
    h: int
    c: int
    k: int
    failures: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "h": self.h,
            "c": self.c,
            "k": self.k,
            "failures": list(self.failures),
        }


def is_admissible_witness(
    filtration: Filtration,
    target: MonomialIdeal,
    p: int,
    h: int,
    c: int,
    k: int,
    e_max: int = 2,
    m_max: int = 3,
) -> AdmissibilityReport:
    """Finite verification that (h, c, k) witness admissibility with
    respect to the target: a_k subseteq target and
    a_{(h+m)p^e + c} subseteq a_{m+1}^{[p^e]} for e <= e_max, m <= m_max."""
    if target.nvars != filtration.nvars:
        raise AmbientMismatchError("target lives in a different ring")
    failures: list[str] = []
    if not target.contains_ideal(filtration.level(k)):
        failures.append(f"a_{k} is not contained in the target")
    for e in range(e_max + 1):
        q = p**e
        for m in range(m_max + 1):
            lvl = (h + m) * q + c
            if lvl < 0:
                failures.append(f"(h+m)q+c = {lvl} < 0 at e={e}, m={m}")
                continue
            lhs = filtration.level(lvl)
            rhs = filtration.level(m + 1).bracket_power(q)
            if not rhs.contains_ideal(lhs):
                failures.append(
                    f"a_{lvl} not contained in a_{m + 1}^[{q}] (e={e}, m={m})"
                )
    return AdmissibilityReport(not failures, h, c, k, tuple(failures))


# ---------------------------------------------------------------------- #
# JSON round trip
# ---------------------------------------------------------------------- #

def filtration_from_json(data: dict) -> Filtration:
    rule = data.get("rule")
    if rule == "ordinary":
        return OrdinaryPowers(MonomialIdeal.from_json(data["ideal"]))
    if rule == "symbolic":
        return symbolic_filtration(MonomialIdeal.from_json(data["ideal"]))
    if rule == "prime_power_intersection":
        comps = tuple(
            (frozenset(c["support"]), int(c["weight"]))
            for c in data["components"]
        )
        return PrimePowerIntersection(int(data["vars"]), comps)
    if rule == "integral_closure":
        return IntegralClosurePowers(MonomialIdeal.from_json(data["ideal"]))
    if rule == "ceiling":
        return CeilingPower(
            MonomialIdeal.from_json(data["ideal"]), Fraction(data["beta"])
        )
    if rule == "product":
        return ProductFiltration(
            filtration_from_json(data["left"]), filtration_from_json(data["right"])
        )
    if rule == "intersection":
        return IntersectionFiltration(
            filtration_from_json(data["left"]), filtration_from_json(data["right"])
        )
    if rule == "binomial_sum":
        return BinomialSum(
            filtration_from_json(data["left"]), filtration_from_json(data["right"])
        )
    if rule == "veronese":
        return VeroneseAnnotation(
            filtration_from_json(data["base"]), int(data["degree"])
        )
    raise UnsupportedInputError(f"unknown filtration rule {rule!r}")

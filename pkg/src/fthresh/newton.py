"""Newton polyhedra of monomial ideals: facets, Rees valuations,
integral-closure membership, and the exact threshold linear program.

The Newton polyhedron of a nonzero proper monomial ideal I in n variables
is NP(I) = conv(exponents of generators) + R^n_{>=0}.  Its facet
inequalities with positive offset ("essential facets") are, after primitive
integer normalization, exactly the monomial Rees valuations of I:

* u in the integral closure of I^r  iff  <normal, u> >= r * offset on
  every essential facet;
* the F-threshold of the power filtration of I with respect to the
  maximal ideal is min over essential facets of <normal, (1,..,1)>/offset.

Facets are enumerated by solving for supporting hyperplanes through all
(size n) selections of generator points and coordinate recession rays,
then pruning redundant inequalities with exact LPs.  This is exponential
in n and documented as desk scale; the threshold itself is also available
through a direct LP (`threshold_lp`) that stays cheap for larger inputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

from .errors import SizeGuardError, UnsupportedInputError
from .lp import solve_lp
from .monomial import Monomial, MonomialIdeal

__all__ = [
    "FacetInequality",
    "NewtonPolyhedron",
    "newton_polyhedron",
    "rees_valuations",
    "integral_closure_contains",
    "integral_closure_generators",
    "threshold_lp",
]

# candidate systems = C(gens + nvars, nvars); above this we refuse and the
# caller should use the LP route instead of explicit facets
_FACET_CANDIDATE_GUARD = 400_000
_BOX_GUARD = 4_000_000


@dataclass(frozen=True)
class FacetInequality:
    """<normal, x> >= offset with primitive nonnegative integer normal."""

    normal: tuple[int, ...]
    offset: int

    def value(self, u: Monomial) -> int:
        return sum(a * e for a, e in zip(self.normal, u.exps))

    def to_json(self) -> dict:
        return {"normal": list(self.normal), "offset": self.offset}


@dataclass(frozen=True)
class NewtonPolyhedron:
    """Facet description of NP(I).

    ``essential`` are the irredundant facets with offset > 0 (the Rees
    valuations); ``coordinate`` are the x_j >= 0 facets, kept separate.
    """

    ideal: MonomialIdeal
    essential: tuple[FacetInequality, ...]
    coordinate: tuple[FacetInequality, ...]

    def contains_point(self, point: Sequence[Fraction]) -> bool:
        if any(p < 0 for p in point):
            return False
        for f in self.essential:
            if sum(Fraction(a) * p for a, p in zip(f.normal, point)) < f.offset:
                return False
        return True

    def to_json(self) -> dict:
        return {
            "ideal": self.ideal.to_json(),
            "essential_facets": [f.to_json() for f in self.essential],
            "coordinate_facets": [f.to_json() for f in self.coordinate],
        }


def _primitive(vec: Sequence[Fraction]) -> tuple[int, ...] | None:
    """Scale a rational vector to primitive integers, preserving sign."""
    den = 1
    for v in vec:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g == 0:
        return None
    return tuple(v // g for v in ints)


def _nullspace_direction(rows: list[list[Fraction]]) -> list[Fraction] | None:
    """A nonzero kernel vector of an (k x w) rational matrix if the kernel is
    one-dimensional, else None."""
    w = len(rows[0])
    mat = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    for col in range(w):
        piv = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = Fraction(1) / mat[r][col]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(w) if c not in pivots]
    if len(free) != 1:
        return None
    fc = free[0]
    vec = [Fraction(0)] * w
    vec[fc] = Fraction(1)
    for i, pc in enumerate(pivots):
        vec[pc] = -mat[i][fc]
    return vec


@lru_cache(maxsize=512)
def newton_polyhedron(ideal: MonomialIdeal) -> NewtonPolyhedron:
    if ideal.is_zero() or ideal.is_unit():
        raise UnsupportedInputError("Newton polyhedron needs a nonzero proper ideal")
    n = ideal.nvars
    gens = [g.exps for g in ideal.gens]
    count = 1
    for k in range(1, n + 1):
        count += _binom(len(gens), k) * _binom(n, n - k)
        if count > _FACET_CANDIDATE_GUARD:
            raise SizeGuardError(
                "facet enumeration too large; use threshold_lp / LP routes"
            )

    candidates: dict[tuple[int, ...], int] = {}
    for k in range(1, min(n, len(gens)) + 1):
        for pts in itertools.combinations(range(len(gens)), k):
            for coords in itertools.combinations(range(n), n - k):
                # unknowns (v_1..v_n, c); rows: <v,p> - c = 0, v_j = 0
                rows: list[list[Fraction]] = []
                for pi in pts:
                    rows.append([Fraction(e) for e in gens[pi]] + [Fraction(-1)])
                for j in coords:
                    row = [Fraction(0)] * (n + 1)
                    row[j] = Fraction(1)
                    rows.append(row)
                direction = _nullspace_direction(rows)
                if direction is None:
                    continue
                prim = _primitive(direction)
                if prim is None:
                    continue
                v, c = prim[:n], prim[n]
                if all(a == 0 for a in v):
                    continue
                if any(a < 0 for a in v):
                    if all(a <= 0 for a in v):
                        v = tuple(-a for a in v)
                        c = -c
                    else:
                        continue
                # supporting requires <v,g> >= c for every generator with
                # equality on the chosen points; recompute the offset as the
                # true minimum and keep only genuinely supporting normals.
                offset = min(sum(a * e for a, e in zip(v, g)) for g in gens)
                if offset <= 0:
                    continue
                candidates[v] = offset

    facets = [FacetInequality(v, c) for v, c in sorted(candidates.items())]
    essential = _prune_redundant(facets, n)
    coordinate = tuple(
        FacetInequality(tuple(1 if i == j else 0 for i in range(n)), 0)
        for j in range(n)
    )
    return NewtonPolyhedron(ideal, tuple(essential), coordinate)


def _binom(a: int, b: int) -> int:
    if b < 0 or b > a:
        return 0
    out = 1
    for i in range(b):
        out = out * (a - i) // (i + 1)
    return out


def _prune_redundant(
    facets: list[FacetInequality], n: int
) -> list[FacetInequality]:
    """Drop inequalities implied by the others (plus x >= 0), via exact LP."""
    kept = list(facets)
    i = 0
    while i < len(kept):
        f = kept[i]
        others = [g for g in kept if g is not f]
        cons = [(list(g.normal), ">=", g.offset) for g in others]
        res = solve_lp(list(f.normal), cons, sense="min")
        # the objective is bounded below by 0 on x >= 0, so status is optimal
        assert res.status == "optimal"
        if res.value is not None and res.value >= f.offset:
            kept.pop(i)  # redundant: others already force <v,x> >= offset
        else:
            i += 1
    return kept


def rees_valuations(ideal: MonomialIdeal) -> tuple[FacetInequality, ...]:
    """The monomial Rees valuations of I: essential Newton facets.

    Each facet carries its primitive integer weight vector (the valuation)
    and the offset (the valuation's value on I).
    """
    return newton_polyhedron(ideal).essential


def integral_closure_contains(ideal: MonomialIdeal, r: int, u: Monomial) -> bool:
    """Is u in the integral closure of I^r?  Exact facet test."""
    if r < 0:
        raise UnsupportedInputError("negative power")
    if r == 0:
        return True
    np_ = newton_polyhedron(ideal)
    return all(f.value(u) >= r * f.offset for f in np_.essential)


def integral_closure_level(ideal: MonomialIdeal, u: Monomial) -> int:
    """Largest r >= 0 with u in the integral closure of I^r."""
    np_ = newton_polyhedron(ideal)
    return min(f.value(u) // f.offset for f in np_.essential)


def integral_closure_generators(ideal: MonomialIdeal, r: int) -> MonomialIdeal:
    """Minimal monomial generators of the integral closure of I^r.

    Box-bounded scan over lattice points: a minimal generator is a lattice
    point of r*NP(I) none of whose coordinate predecessors stays inside.
    Guarded; intended for small instances (tests, axiom checks).
    """
    if r == 0:
        return MonomialIdeal.unit(ideal.nvars)
    np_ = newton_polyhedron(ideal)
    n = ideal.nvars
    box = [r * max(g.exps[j] for g in ideal.gens) for j in range(n)]
    vol = 1
    for b in box:
        vol *= b + 1
        if vol > _BOX_GUARD:
            raise SizeGuardError("integral-closure generator box too large")
    facets = np_.essential
    offs = [r * f.offset for f in facets]

    def inside(pt: tuple[int, ...]) -> bool:
        return all(
            sum(a * e for a, e in zip(f.normal, pt)) >= o
            for f, o in zip(facets, offs)
        )

    gens = []
    for pt in itertools.product(*[range(b + 1) for b in box]):
        if not inside(pt):
            continue
        minimal = True
        for j in range(n):
            if pt[j] > 0:
                down = pt[:j] + (pt[j] - 1,) + pt[j + 1 :]
                if inside(down):
                    minimal = False
                    break
        if minimal:
            gens.append(Monomial(pt))
    return MonomialIdeal(ideal.nvars, gens)


def threshold_lp(ideal: MonomialIdeal) -> tuple[Fraction, FacetInequality]:
    """Exact C^m(I^bullet) together with a certifying valuation.

    Primal: s* = min { s : s*(1,..,1) in NP(I) }, i.e. some convex
    combination of generators fits under s*(1,..,1); then C = 1/s*.
    The certificate is recovered from the explicit dual LP
    max { t : sum v_j = 1, <v, g> >= t for all generators, v >= 0 },
    whose optimum equals s* (checked exactly here).
    """
    if ideal.is_zero() or ideal.is_unit():
        raise UnsupportedInputError("threshold needs a nonzero proper ideal")
    gens = [g.exps for g in ideal.gens]
    n = ideal.nvars
    G = len(gens)
    # primal: variables (lambda_1..lambda_G, s)
    cons: list[tuple[list[int], str, int]] = []
    for j in range(n):
        cons.append(([g[j] for g in gens] + [-1], "<=", 0))
    cons.append(([1] * G + [0], "==", 1))
    primal = solve_lp([0] * G + [1], cons, sense="min")
    assert primal.status == "optimal" and primal.value is not None
    s_star = primal.value

    # dual: variables (v_1..v_n, t)
    dcons: list[tuple[list[int], str, int]] = []
    for g in gens:
        dcons.append((list(g) + [-1], ">=", 0))
    dcons.append(([1] * n + [0], "==", 1))
    dual = solve_lp([0] * n + [1], dcons, sense="max")
    assert dual.status == "optimal" and dual.value is not None
    if dual.value != s_star:
        raise AssertionError(
            f"threshold LP duality gap: primal {s_star} vs dual {dual.value}"
        )
    assert dual.x is not None
    prim = _primitive(list(dual.x[:n]))
    assert prim is not None
    weights = prim
    offset = min(sum(a * e for a, e in zip(weights, g)) for g in gens)
    if s_star == 0:
        raise UnsupportedInputError("degenerate threshold LP (zero optimum)")
    return Fraction(1) / s_star, FacetInequality(weights, offset)

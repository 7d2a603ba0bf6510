"""Shared helpers: seeded random generators for ideals and graphs, plus
small independent oracles used across test modules."""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from fthresh import Hypergraph, MonomialIdeal


def random_ideal(
    rng: random.Random,
    nvars: int,
    max_gens: int = 4,
    max_exp: int = 4,
    *,
    proper: bool = True,
) -> MonomialIdeal:
    """Random nonzero monomial ideal; proper means no unit generator."""
    while True:
        gens = []
        for _ in range(rng.randint(1, max_gens)):
            g = [rng.randint(0, max_exp) for _ in range(nvars)]
            if proper and not any(g):
                continue
            gens.append(g)
        if gens:
            return MonomialIdeal.from_exponents(nvars, gens)


def random_squarefree_ideal(
    rng: random.Random, nvars: int, max_gens: int = 5
) -> MonomialIdeal:
    while True:
        gens = []
        for _ in range(rng.randint(1, max_gens)):
            size = rng.randint(1, nvars)
            supp = rng.sample(range(nvars), size)
            gens.append([1 if j in supp else 0 for j in range(nvars)])
        ideal = MonomialIdeal.from_exponents(nvars, gens)
        if not ideal.is_zero() and ideal.is_proper():
            return ideal


def random_graph(rng: random.Random, n: int, density: float = 0.45) -> Hypergraph:
    edges = [e for e in combinations(range(n), 2) if rng.random() < density]
    return Hypergraph(n, edges)


def random_chordal_graph(rng: random.Random, n: int) -> Hypergraph:
    """Build along a perfect elimination order: each new vertex is joined
    to a clique inside an existing one."""
    adj: dict[int, set[int]] = {0: set()}
    cliques: list[set[int]] = [{0}]
    for v in range(1, n):
        base = rng.choice(cliques)
        k = rng.randint(0, len(base))
        sub = set(rng.sample(sorted(base), k))
        adj[v] = set(sub)
        for u in sub:
            adj[u].add(v)
        cliques.append(sub | {v})
    edges = [(u, v) for v in adj for u in adj[v] if u < v]
    return Hypergraph(n, edges)


def naive_power_member(ideal: MonomialIdeal, exps: tuple[int, ...], r: int) -> bool:
    """Decision oracle for u in I^r by direct multiset search, written
    independently of the library's membership DP."""
    gens = [g.exps for g in ideal.gens]
    memo: dict[tuple[tuple[int, ...], int], bool] = {}

    def go(u: tuple[int, ...], k: int) -> bool:
        if k == 0:
            return True
        key = (u, k)
        if key in memo:
            return memo[key]
        ans = False
        for g in gens:
            if all(a <= b for a, b in zip(g, u)):
                if go(tuple(b - a for a, b in zip(g, u)), k - 1):
                    ans = True
                    break
        memo[key] = ans
        return ans

    return go(tuple(exps), r)


@pytest.fixture
def rng():
    return random.Random(20260814)

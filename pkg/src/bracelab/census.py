"""Enumerating every skew brace on a fixed additive group.

Braces with additive group G correspond to regular subgroups of the
holomorph of G: the subgroup element sending 0 to x becomes row x of the
multiplicative table.  The search grows closed permutation sets one
generator at a time, always branching on the smallest point of the
carrier not yet hit from 0 — which visits each regular subgroup along
exactly one path, so no deduplication is needed.

For carriers of order at most 6 an independent oracle is available:
transport every abstract group of that order through every identity-
fixing relabeling and keep the tables satisfying the brace law.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Sequence

import numpy as np

from .braces import (
    SkewBrace,
    are_brace_isomorphic,
    brace_from_groups,
    validate_direct,
)
from .errors import CapExceeded, SearchLimitExceeded
from .groups import (
    FiniteGroup,
    abelian_group,
    automorphism_group,
    cyclic_group,
    holomorph,
    make_group,
    recognize,
    search_budget,
    symmetric_group,
)
from .perms import Perm, PermutationGroup, compose, identity_perm, is_fixed_point_free

__all__ = [
    "CensusEntry",
    "BraceCensus",
    "regular_subgroups_of_holomorph",
    "circle_table_from_regular",
    "enumerate_braces",
    "oracle_tables",
    "classify_braces",
]

DEFAULT_CAP = 12


@dataclass(frozen=True)
class CensusEntry:
    """One isomorphism class: a representative brace and its class size."""

    brace: SkewBrace
    circle_name: str
    size: int


@dataclass(frozen=True)
class BraceCensus:
    """All braces on one additive group, grouped up to brace isomorphism."""

    group: FiniteGroup
    raw_count: int
    entries: tuple[CensusEntry, ...]


def regular_subgroups_of_holomorph(
    g: FiniteGroup, cap: int = DEFAULT_CAP, budget: Optional[int] = None
) -> list[PermutationGroup]:
    """All regular subgroups of the holomorph, sorted deterministically.

    Raises CapExceeded when more than ``cap`` subgroups exist and
    SearchLimitExceeded when the search outgrows its node budget.
    """
    n = g.order
    hol = holomorph(g)
    ident = identity_perm(n)
    usable = frozenset(p for p in hol if p == ident or is_fixed_point_free(p))
    by_start: dict[int, list[Perm]] = {x: [] for x in range(1, n)}
    for p in usable:
        if p != ident:
            by_start[p[0]].append(p)
    for lst in by_start.values():
        lst.sort()

    limit = search_budget(budget)
    nodes = 0
    found: list[frozenset[Perm]] = []

    def closure(base: frozenset[Perm], extra: Perm) -> Optional[frozenset[Perm]]:
        """Grow to a closed set, or None when it leaves the usable pool."""
        elems = set(base)
        frontier = [extra]
        elems.add(extra)
        while frontier:
            nxt = []
            for p in frontier:
                for q in list(elems):
                    for r in (compose(p, q), compose(q, p)):
                        if r not in elems:
                            if r not in usable or len(elems) >= n:
                                return None
                            elems.add(r)
                            nxt.append(r)
            frontier = nxt
        return frozenset(elems)

    def grow(current: frozenset[Perm]) -> None:
        nonlocal nodes
        covered = {p[0] for p in current}
        target = min(x for x in range(n) if x not in covered)
        for q in by_start[target]:
            nodes += 1
            if nodes > limit:
                raise SearchLimitExceeded(limit, "regular subgroup search")
            grown = closure(current, q)
            if grown is None or n % len(grown):
                continue
            if len(grown) == n:
                found.append(grown)
                if len(found) > cap:
                    raise CapExceeded(cap, "regular subgroup enumeration")
            elif len({p[0] for p in grown}) == len(grown):
                grow(grown)

    if n == 1:
        return [PermutationGroup(1, [(0,)])]
    grow(frozenset([ident]))
    groups = [PermutationGroup(n, fs) for fs in found]
    groups.sort(key=lambda pg: pg.elements)
    return groups


def circle_table_from_regular(n_sub: PermutationGroup) -> np.ndarray:
    """Multiplicative table read off a regular subgroup: row x sends 0 to x."""
    n = n_sub.degree
    rows = {p[0]: p for p in n_sub.elements}
    if len(rows) != n:
        raise ValueError("subgroup is not regular: images of 0 collide")
    table = np.array([rows[x] for x in range(n)], dtype=np.int32)
    return table


def enumerate_braces(
    g: FiniteGroup, cap: int = DEFAULT_CAP, budget: Optional[int] = None
) -> list[SkewBrace]:
    """Every skew brace with additive group g, one per regular subgroup.

    Each produced pair is re-validated against the brace law.
    """
    braces = []
    for sub in regular_subgroups_of_holomorph(g, cap=cap, budget=budget):
        mult = make_group(circle_table_from_regular(sub))
        braces.append(brace_from_groups(g, mult))
    return braces


# ---------------------------------------------------------------------------
# independent oracle for tiny carriers


def _abstract_groups_of_order(n: int) -> list[FiniteGroup]:
    if n == 4:
        return [cyclic_group(4), abelian_group([2, 2])]
    if n == 6:
        return [cyclic_group(6), symmetric_group(3)]
    if 1 <= n <= 5:
        return [cyclic_group(n)]
    raise ValueError(f"the abstract catalog stops at order 6, got {n}")


def oracle_tables(g: FiniteGroup) -> list[tuple[tuple[int, ...], ...]]:
    """Brute-force multiplicative tables for every brace on g (order <= 6).

    Transports each catalog group through all identity-fixing bijections and
    keeps the tables satisfying the brace law with g additive.  The result
    is a sorted, duplicate-free list, suitable for set comparison with the
    holomorph route.
    """
    n = g.order
    keep: set[tuple[tuple[int, ...], ...]] = set()
    for h in _abstract_groups_of_order(n):
        base = h.table
        for rest in permutations(range(1, n)):
            sigma = np.array((0,) + rest, dtype=np.int32)
            inv = np.argsort(sigma)
            transported = sigma[base[np.ix_(inv, inv)]]
            if validate_direct(g, make_group(transported)) is None:
                keep.add(tuple(tuple(int(v) for v in row) for row in transported))
    return sorted(keep)


# ---------------------------------------------------------------------------
# classification


def _canonical_circ(brace: SkewBrace, auts: PermutationGroup) -> bytes:
    """Lexicographically least transport of the multiplicative table."""
    base = brace.mult.table
    best: Optional[bytes] = None
    for alpha in auts:
        sigma = np.asarray(alpha, dtype=np.int32)
        inv = np.argsort(sigma)
        cand = np.ascontiguousarray(sigma[base[np.ix_(inv, inv)]]).tobytes()
        if best is None or cand < best:
            best = cand
    assert best is not None
    return best


def classify_braces(braces: Sequence[SkewBrace]) -> BraceCensus:
    """Group braces into isomorphism classes.

    When every brace shares one additive table (the enumeration case) the
    classes are orbits under additive automorphisms, detected by a
    canonical transported table.  Mixed inputs fall back to pairwise
    isomorphism search.
    """
    if not braces:
        raise ValueError("cannot classify an empty brace list")
    add = braces[0].add
    same_add = all(b.add == add for b in braces)
    classes: list[list[SkewBrace]] = []
    if same_add:
        auts = automorphism_group(add)
        seen: dict[bytes, int] = {}
        for b in braces:
            key = _canonical_circ(b, auts)
            if key in seen:
                classes[seen[key]].append(b)
            else:
                seen[key] = len(classes)
                classes.append([b])
    else:
        for b in braces:
            for cls in classes:
                if are_brace_isomorphic(cls[0], b) is not None:
                    cls.append(b)
                    break
            else:
                classes.append([b])
    entries = tuple(
        CensusEntry(cls[0], recognize(cls[0].mult), len(cls)) for cls in classes
    )
    return BraceCensus(add, len(braces), entries)

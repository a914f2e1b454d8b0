"""Finite groups as dense multiplication tables.

Elements are the indices 0..n-1 and the identity is always element 0
(constructors relabel if needed).  Tables are immutable numpy arrays:
``table[a, b]`` is the product of ``a`` and ``b``.

Symmetric groups built by :func:`symmetric_group` multiply left-to-right
("apply a, then b"), which is the usual convention for composing
permutations written on the right.  Permutation-*valued* maps in this
package (regular representations, automorphisms, holomorphs) compose as
functions instead; the two conventions never mix because abstract tables
and permutation tuples are distinct types.
"""
from __future__ import annotations

import hashlib
import itertools
import os
from dataclasses import dataclass, field
from math import lcm
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    ActionNotAutomorphism,
    ActionNotHomomorphism,
    InvalidTableError,
    NoIdentityError,
    NotAssociativeError,
    NotBijectiveRowError,
    SearchLimitExceeded,
)
from .perms import Perm, PermutationGroup, all_perms, compose, identity_perm, invert

__all__ = [
    "MAX_ORDER",
    "FiniteGroup",
    "GroupHom",
    "PermRepresentation",
    "make_group",
    "cyclic_group",
    "abelian_group",
    "symmetric_group",
    "dihedral_group",
    "heisenberg_group",
    "m3_group",
    "direct_product",
    "semidirect_product",
    "subgroup_closure",
    "subgroup_group",
    "generating_sequence",
    "automorphism_group",
    "brute_force_automorphisms",
    "are_isomorphic",
    "left_regular",
    "holomorph",
    "group_from_permutations",
    "recognize",
    "search_budget",
]

MAX_ORDER = 1024
_DEFAULT_BUDGET = 2_000_000


def search_budget(override: Optional[int] = None) -> int:
    """Node budget for backtracking searches.

    Priority: explicit argument, then the BRACELAB_BUDGET environment
    variable, then a built-in default.
    """
    if override is not None:
        return int(override)
    env = os.environ.get("BRACELAB_BUDGET")
    if env:
        return int(env)
    return _DEFAULT_BUDGET


class FiniteGroup:
    """Immutable finite group on {0, ..., n-1} with identity 0.

    Construct through :func:`make_group` (or the named constructors), which
    validate the table; the constructor itself trusts its inputs.
    """

    def __init__(self, table: np.ndarray, inverses: np.ndarray) -> None:
        self.order: int = int(table.shape[0])
        self.table = table
        self.inverses = inverses
        self._digest: Optional[bytes] = None
        self._orders: Optional[np.ndarray] = None
        self._abelian: Optional[bool] = None
        self._derived: Optional[int] = None

    # -- basic operations ---------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def conjugate(self, a: int, g: int) -> int:
        """g^-1 * a * g."""
        return int(self.table[self.table[self.inv(g), a], g])

    # -- cached structure ---------------------------------------------------

    @property
    def digest(self) -> bytes:
        if self._digest is None:
            h = hashlib.sha256()
            h.update(str(self.order).encode())
            h.update(np.ascontiguousarray(self.table).tobytes())
            self._digest = h.digest()
        return self._digest

    def element_orders(self) -> np.ndarray:
        """Vector of element orders, computed by iterated multiplication."""
        if self._orders is None:
            n = self.order
            idx = np.arange(n)
            power = idx.copy()
            orders = np.where(power == 0, 1, 0)
            k = 1
            while (orders == 0).any():
                k += 1
                if k > n:
                    raise AssertionError("element order exceeded the group order")
                power = self.table[power, idx]
                orders[(power == 0) & (orders == 0)] = k
            orders.flags.writeable = False
            self._orders = orders
        return self._orders

    def element_order(self, g: int) -> int:
        return int(self.element_orders()[g])

    def exponent(self) -> int:
        return int(np.lcm.reduce(self.element_orders()))

    def is_abelian(self) -> bool:
        if self._abelian is None:
            self._abelian = bool(np.array_equal(self.table, self.table.T))
        return self._abelian

    def center(self) -> list[int]:
        mask = (self.table == self.table.T).all(axis=1)
        return [int(g) for g in np.nonzero(mask)[0]]

    def derived_size(self) -> int:
        """Order of the commutator subgroup."""
        if self._derived is None:
            inv = self.inverses
            t = self.table
            lefts = t[np.ix_(inv, inv)]
            comms = t[lefts, t]
            self._derived = len(subgroup_closure(self, set(int(x) for x in comms.ravel())))
        return self._derived

    # -- identity and comparison -------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteGroup) and self.digest == other.digest

    def __hash__(self) -> int:
        return hash(self.digest)

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"


# ---------------------------------------------------------------------------
# construction and validation


def _find_identity(arr: np.ndarray) -> Optional[int]:
    n = arr.shape[0]
    idx = np.arange(n)
    for e in range(n):
        if np.array_equal(arr[e], idx) and np.array_equal(arr[:, e], idx):
            return e
    return None


def _relabel(arr: np.ndarray, sigma: np.ndarray) -> np.ndarray:
    """Push the table through a relabeling: new[s(a), s(b)] = s(old[a, b])."""
    inv_s = np.argsort(sigma)
    return sigma[arr[np.ix_(inv_s, inv_s)]]


def make_group(table: Sequence[Sequence[int]] | np.ndarray) -> FiniteGroup:
    """Validate an n x n multiplication table and wrap it as a group.

    Checks, in order: shape and entry range (InvalidTableError), a two-sided
    identity (NoIdentityError) which is moved to index 0 by swapping labels,
    bijective rows and columns (NotBijectiveRowError), and associativity
    with a lexicographically first witness (NotAssociativeError).
    """
    arr = np.asarray(table, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise InvalidTableError(f"table must be square, got shape {arr.shape}")
    n = arr.shape[0]
    if n == 0:
        raise InvalidTableError("table must have at least one element")
    if n > MAX_ORDER:
        raise InvalidTableError(f"order {n} exceeds the supported cap of {MAX_ORDER}")
    if arr.min() < 0 or arr.max() >= n:
        raise InvalidTableError(f"table entries must lie in 0..{n - 1}")
    arr = arr.astype(np.int32)

    e = _find_identity(arr)
    if e is None:
        raise NoIdentityError("table has no two-sided identity element")
    if e != 0:
        sigma = np.arange(n, dtype=np.int32)
        sigma[0], sigma[e] = e, 0
        arr = _relabel(arr, sigma)

    idx = np.arange(n)
    for a in range(n):
        if not np.array_equal(np.sort(arr[a]), idx):
            raise NotBijectiveRowError(a, "row")
    for a in range(n):
        if not np.array_equal(np.sort(arr[:, a]), idx):
            raise NotBijectiveRowError(a, "column")

    for a in range(n):
        left = arr[arr[a]]          # [b, c] -> (a*b)*c
        right = arr[a][arr]         # [b, c] -> a*(b*c)
        if not np.array_equal(left, right):
            bad = np.argwhere(left != right)
            b, c = (int(v) for v in bad[0])
            raise NotAssociativeError((a, b, c))

    inverses = np.argmax(arr == 0, axis=1).astype(np.int32)
    arr.flags.writeable = False
    inverses.flags.writeable = False
    return FiniteGroup(arr, inverses)


def cyclic_group(n: int) -> FiniteGroup:
    """The integers mod n under addition."""
    if n < 1 or n > MAX_ORDER:
        raise InvalidTableError(f"cyclic group order must be in 1..{MAX_ORDER}, got {n}")
    idx = np.arange(n)
    return make_group((idx[:, None] + idx[None, :]) % n)


def abelian_group(factors: Sequence[int]) -> FiniteGroup:
    """Direct product of cyclic groups of the given orders."""
    g = cyclic_group(int(factors[0]))
    for m in factors[1:]:
        g = direct_product(g, cyclic_group(int(m)))
    return g


def symmetric_group(m: int) -> FiniteGroup:
    """All permutations of m letters, in lexicographic order of image tuples.

    ``table[i, j]`` is "apply permutation i, then permutation j", so that
    products read left to right.  Element 0 is the identity.
    """
    perms = all_perms(m)
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    table = np.empty((n, n), dtype=np.int32)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            table[i, j] = index[compose(q, p)]
    return make_group(table)


def dihedral_group(m: int) -> FiniteGroup:
    """Symmetries of an m-gon, order 2m; index = rotation + m * flip."""
    if m < 1:
        raise InvalidTableError("dihedral parameter must be positive")
    n = 2 * m
    table = np.empty((n, n), dtype=np.int32)
    for r1 in range(m):
        for s1 in range(2):
            for r2 in range(m):
                for s2 in range(2):
                    r = (r1 + (r2 if s1 == 0 else -r2)) % m
                    s = s1 ^ s2
                    table[r1 + m * s1, r2 + m * s2] = r + m * s
    return make_group(table)


def heisenberg_group(p: int) -> FiniteGroup:
    """Unitriangular 3x3 matrices over Z/p; order p^3, exponent p for odd p."""
    triples = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]
    index = {t: i for i, t in enumerate(triples)}
    n = p**3
    table = np.empty((n, n), dtype=np.int32)
    for i, (a1, b1, c1) in enumerate(triples):
        for j, (a2, b2, c2) in enumerate(triples):
            table[i, j] = index[((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p)]
    return make_group(table)


def m3_group(p: int) -> FiniteGroup:
    """The nonabelian group of order p^3 and exponent p^2 (p odd).

    Presented as Z/p^2 extended by Z/p, with the outer generator acting as
    multiplication by 1 + p.
    """
    if p % 2 == 0:
        raise InvalidTableError("the exponent-p^2 construction needs an odd prime")
    p2 = p * p
    pairs = [(x, y) for x in range(p2) for y in range(p)]
    index = {t: i for i, t in enumerate(pairs)}
    n = p2 * p
    table = np.empty((n, n), dtype=np.int32)
    for i, (x1, y1) in enumerate(pairs):
        for j, (x2, y2) in enumerate(pairs):
            table[i, j] = index[((x1 + x2 * pow(1 + p, y1, p2)) % p2, (y1 + y2) % p)]
    return make_group(table)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Componentwise product; index = a * |h| + b."""
    nh = h.order
    blocks = np.add.outer(g.table * nh, h.table)
    table = blocks.transpose(0, 2, 1, 3).reshape(g.order * nh, g.order * nh)
    return make_group(table)


def semidirect_product(
    base: FiniteGroup, actor: FiniteGroup, action: Sequence[Sequence[int]]
) -> FiniteGroup:
    """Split extension of ``base`` by ``actor``.

    ``action[j]`` must be an automorphism of ``base`` for each actor element
    j, and j -> action[j] a homomorphism into the automorphism group (with
    automorphisms composing as functions).  The product rule is
    (a1, j1)(a2, j2) = (a1 * action[j1](a2), j1 j2); index = a * |actor| + j.
    """
    nb, nj = base.order, actor.order
    act = np.asarray(action, dtype=np.int32)
    if act.shape != (nj, nb):
        raise ActionNotHomomorphism(
            f"action must give one permutation of {nb} points per actor element, "
            f"got shape {act.shape}"
        )
    idx = np.arange(nb)
    for j in range(nj):
        img = act[j]
        if not np.array_equal(np.sort(img), idx):
            raise ActionNotAutomorphism(j, "not a bijection")
        if not np.array_equal(img[base.table], base.table[np.ix_(img, img)]):
            raise ActionNotAutomorphism(j, "does not preserve the product")
    for j1 in range(nj):
        for j2 in range(nj):
            if not np.array_equal(act[actor.table[j1, j2]], act[j1][act[j2]]):
                raise ActionNotHomomorphism(
                    f"action of product {j1}*{j2} differs from composed actions"
                )
    moved = act[:, :]                       # [j1, h2] -> action_{j1}(h2)
    hpart = base.table[:, moved]            # [h1, j1, h2] -> h1 * action_{j1}(h2)
    flat = hpart[:, :, :, None] * nj + actor.table[None, :, None, :]
    table = flat.reshape(nb * nj, nb * nj)
    return make_group(table)


# ---------------------------------------------------------------------------
# subgroups


def subgroup_closure(g: FiniteGroup, seed: Iterable[int]) -> list[int]:
    """Sorted elements of the subgroup generated by ``seed``."""
    seen = {0}
    frontier = [0]
    gens = sorted(set(int(x) for x in seed))
    for x in gens:
        if x not in seen:
            seen.add(x)
            frontier.append(x)
    t = g.table
    while frontier:
        nxt = []
        for x in frontier:
            for y in gens:
                z = int(t[x, y])
                if z not in seen:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    return sorted(seen)


def subgroup_group(g: FiniteGroup, elements: Iterable[int]) -> FiniteGroup:
    """Reindex a closed subset as a group in its own right.

    Elements are sorted, so local index 0 is the identity.  Raises
    ValueError if the subset is not closed or misses the identity.
    """
    elems = sorted(set(int(x) for x in elements))
    if not elems or elems[0] != 0:
        raise ValueError("subgroup must contain the identity 0")
    pos = {x: i for i, x in enumerate(elems)}
    k = len(elems)
    table = np.empty((k, k), dtype=np.int32)
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            z = int(g.table[x, y])
            if z not in pos:
                raise ValueError(f"subset is not closed: {x} * {y} = {z} escapes")
            table[i, j] = pos[z]
    return make_group(table)


def is_normal(g: FiniteGroup, elements: Iterable[int]) -> bool:
    """Whether a subset is stable under conjugation by every group element."""
    subset = set(int(x) for x in elements)
    return all(g.conjugate(a, x) in subset for a in subset for x in range(g.order))


# ---------------------------------------------------------------------------
# homomorphisms and isomorphism search


@dataclass(frozen=True)
class GroupHom:
    """A verified homomorphism, stored as the image of every element."""

    source: FiniteGroup
    target: FiniteGroup
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        img = np.asarray(self.images, dtype=np.int32)
        if img.shape != (self.source.order,):
            raise ValueError("images must list one target element per source element")
        st, tt = self.source.table, self.target.table
        if not np.array_equal(img[st], tt[np.ix_(img, img)]):
            bad = np.argwhere(img[st] != tt[np.ix_(img, img)])
            a, b = (int(v) for v in bad[0])
            raise ValueError(f"not a homomorphism: fails at ({a}, {b})")

    def __call__(self, g: int) -> int:
        return self.images[g]

    def is_bijective(self) -> bool:
        return len(set(self.images)) == self.source.order


def generating_sequence(g: FiniteGroup) -> list[int]:
    """A small generating list, chosen greedily.

    Repeatedly append the element whose addition grows the generated
    subgroup the most, breaking ties toward the smallest index.  Greedy
    selection keeps backtracking searches shallow; it does not promise a
    minimum-length sequence.
    """
    gens: list[int] = []
    size = 1
    while size < g.order:
        best_g, best_size = -1, size
        for cand in range(1, g.order):
            grown = len(subgroup_closure(g, gens + [cand]))
            if grown > best_size:
                best_g, best_size = cand, grown
                if grown == g.order:
                    break
        gens.append(best_g)
        size = best_size
    return gens


def _definition_chain(
    g: FiniteGroup, gens: Sequence[int]
) -> tuple[list[int], list[tuple[int, int]]]:
    """BFS order and (parent, generator-slot) witness for every element."""
    n = g.order
    parent = [(-1, -1)] * n
    seen = [False] * n
    seen[0] = True
    order = [0]
    qi = 0
    t = g.table
    while qi < len(order):
        x = order[qi]
        qi += 1
        for gi, gen in enumerate(gens):
            y = int(t[x, gen])
            if not seen[y]:
                seen[y] = True
                parent[y] = (x, gi)
                order.append(y)
    if not all(seen):
        raise AssertionError("generating sequence does not generate")
    return order, parent


def _extend_images(
    target_table: np.ndarray,
    order: Sequence[int],
    parent: Sequence[tuple[int, int]],
    gen_images: Sequence[int],
) -> np.ndarray:
    img = np.empty(len(order), dtype=np.int32)
    img[0] = 0
    for x in order[1:]:
        px, gi = parent[x]
        img[x] = target_table[img[px], gen_images[gi]]
    return img


def _is_bijective_hom(src: np.ndarray, dst: np.ndarray, img: np.ndarray) -> bool:
    n = src.shape[0]
    if np.bincount(img, minlength=n).max() != 1:
        return False
    return bool(np.array_equal(img[src], dst[np.ix_(img, img)]))


_aut_cache: dict[bytes, PermutationGroup] = {}


def automorphism_group(g: FiniteGroup, budget: Optional[int] = None) -> PermutationGroup:
    """All automorphisms, found by assigning images to a generating sequence.

    Candidate images are filtered by element order; every full assignment is
    checked as a bijective homomorphism.  Results are cached per table.
    Raises SearchLimitExceeded when the assignment count passes the budget.
    """
    cached = _aut_cache.get(g.digest)
    if cached is not None:
        return cached
    n = g.order
    if n == 1:
        result = PermutationGroup(1, [(0,)])
        _aut_cache[g.digest] = result
        return result
    gens = generating_sequence(g)
    order, parent = _definition_chain(g, gens)
    orders = g.element_orders()
    cands = [[h for h in range(n) if orders[h] == orders[gen]] for gen in gens]
    limit = search_budget(budget)
    nodes = 0
    auts = []
    for images in itertools.product(*cands):
        nodes += 1
        if nodes > limit:
            raise SearchLimitExceeded(limit, "automorphism search")
        img = _extend_images(g.table, order, parent, images)
        if _is_bijective_hom(g.table, g.table, img):
            auts.append(tuple(int(v) for v in img))
    result = PermutationGroup(n, auts)
    _aut_cache[g.digest] = result
    return result


def brute_force_automorphisms(g: FiniteGroup) -> PermutationGroup:
    """Automorphisms by trying every identity-fixing bijection.

    Exponential; refuses orders above 8.  Exists as an independent check on
    :func:`automorphism_group`.
    """
    n = g.order
    if n > 8:
        raise ValueError(f"brute force is limited to order <= 8, got {n}")
    auts = []
    for rest in itertools.permutations(range(1, n)):
        img = np.array((0,) + rest, dtype=np.int32)
        if np.array_equal(img[g.table], g.table[np.ix_(img, img)]):
            auts.append(tuple(int(v) for v in img))
    return PermutationGroup(n, auts)


def are_isomorphic(
    g: FiniteGroup, h: FiniteGroup, budget: Optional[int] = None
) -> Optional[GroupHom]:
    """An isomorphism g -> h if one exists, else None.

    Cheap invariants (order, abelianness, element-order multiset, center,
    derived subgroup) run first; then a generator-image search.
    """
    if g.order != h.order:
        return None
    if g.order == 1:
        return GroupHom(g, h, (0,))
    if g.is_abelian() != h.is_abelian():
        return None
    go, ho = g.element_orders(), h.element_orders()
    if sorted(go.tolist()) != sorted(ho.tolist()):
        return None
    if len(g.center()) != len(h.center()):
        return None
    if g.derived_size() != h.derived_size():
        return None
    gens = generating_sequence(g)
    order, parent = _definition_chain(g, gens)
    cands = [[x for x in range(h.order) if ho[x] == go[gen]] for gen in gens]
    limit = search_budget(budget)
    nodes = 0
    for images in itertools.product(*cands):
        nodes += 1
        if nodes > limit:
            raise SearchLimitExceeded(limit, "isomorphism search")
        img = _extend_images(h.table, order, parent, images)
        if _is_bijective_hom(g.table, h.table, img):
            return GroupHom(g, h, tuple(int(v) for v in img))
    return None


# ---------------------------------------------------------------------------
# permutation representations


@dataclass(frozen=True)
class PermRepresentation:
    """A homomorphism from a group into permutations of 0..degree-1.

    ``perms[g]`` is the permutation attached to g; the homomorphism law
    perms[a*b] = perms[a] ∘ perms[b] uses function composition.  Verification
    is opt-in via :meth:`verify` (quadratic in the group order).
    """

    source: FiniteGroup
    degree: int
    perms: tuple[Perm, ...]

    def __call__(self, g: int) -> Perm:
        return self.perms[g]

    def is_injective(self) -> bool:
        return len(set(self.perms)) == self.source.order

    def is_regular(self) -> bool:
        """Injective, degree = order, and only the identity has fixed points."""
        if self.degree != self.source.order or not self.is_injective():
            return False
        ident = identity_perm(self.degree)
        return all(
            p == ident or all(p[i] != i for i in range(self.degree)) for p in self.perms
        )

    def image(self) -> PermutationGroup:
        return PermutationGroup(self.degree, self.perms)

    def verify(self) -> None:
        t = self.source.table
        for a in range(self.source.order):
            pa = self.perms[a]
            for b in range(self.source.order):
                if self.perms[int(t[a, b])] != compose(pa, self.perms[b]):
                    raise AssertionError(f"representation law fails at ({a}, {b})")


def left_regular(g: FiniteGroup) -> PermRepresentation:
    """Left translations a -> (x -> a*x); a regular representation."""
    rows = tuple(tuple(int(v) for v in g.table[a]) for a in range(g.order))
    return PermRepresentation(g, g.order, rows)


def holomorph(g: FiniteGroup, budget: Optional[int] = None) -> PermutationGroup:
    """Normalizer of the left-translation copy of g inside all permutations.

    Realized as the set of products (left translation) ∘ (automorphism);
    there are exactly |g| * |Aut(g)| of them and the set is closed.
    """
    aut = automorphism_group(g, budget)
    rows = [tuple(int(v) for v in g.table[a]) for a in range(g.order)]
    elements = {compose(row, alpha) for row in rows for alpha in aut}
    if len(elements) != g.order * aut.order:
        raise AssertionError("holomorph product set collapsed; table is corrupt")
    return PermutationGroup(g.order, elements)


def group_from_permutations(pg: PermutationGroup) -> FiniteGroup:
    """Abstract table of a permutation group under function composition.

    Lexicographic element order puts the identity first, so indices transfer
    unchanged; ``table[i, j]`` is elements[i] ∘ elements[j].
    """
    elems = pg.elements
    n = len(elems)
    table = np.empty((n, n), dtype=np.int32)
    for i, p in enumerate(elems):
        for j, q in enumerate(elems):
            table[i, j] = pg.index(compose(p, q))
    return make_group(table)


# ---------------------------------------------------------------------------
# recognition


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _prime_cube_root(n: int) -> Optional[int]:
    p = round(n ** (1 / 3))
    for cand in (p - 1, p, p + 1):
        if cand >= 2 and cand**3 == n and _prime_factors(cand) == [cand]:
            return cand
    return None


def _abelian_invariant_factors(g: FiniteGroup) -> list[int]:
    """Invariant factors d1 | d2 | ... of a finite abelian group.

    For each prime p, the partition describing the p-primary part is read
    off from the counts of elements whose order divides p^k (those counts
    are p raised to a sum of truncated partition parts).
    """
    orders = g.element_orders()
    primary: dict[int, list[int]] = {}
    for p in _prime_factors(g.order):
        conj: list[int] = []
        m_prev = 0
        k = 1
        while True:
            c = int(np.count_nonzero(pow(p, k) % orders == 0))
            m = c.bit_length() - 1 if p == 2 else round(np.log(c) / np.log(p))
            if p**m != c:
                raise AssertionError("element counts of an abelian group must be prime powers")
            d = m - m_prev
            if d == 0:
                break
            conj.append(d)
            m_prev = m
            k += 1
        # conjugate partition: part j counts how many conj entries are >= j
        parts = [sum(1 for d in conj if d >= j) for j in range(1, conj[0] + 1)]
        primary[p] = parts
    width = max(len(v) for v in primary.values())
    factors = []
    for i in range(width):
        f = 1
        for p, parts in primary.items():
            if i < len(parts):
                f *= p ** parts[i]
        factors.append(f)
    factors.reverse()  # ascending divisibility d1 | d2 | ...
    return factors


def recognize(g: FiniteGroup) -> str:
    """A human-readable structure name, or "unrecognized".

    Abelian groups always resolve (invariant factor form, e.g. "C2 x C6").
    Beyond that only a handful of named families are attempted: S3, S4,
    dihedral groups, and the two nonabelian groups of odd prime-cubed order.
    """
    n = g.order
    if n == 1:
        return "C1"
    if g.is_abelian():
        return " x ".join(f"C{d}" for d in _abelian_invariant_factors(g))
    if n == 6:
        return "S3"
    if n == 24 and are_isomorphic(g, symmetric_group(4)) is not None:
        return "S4"
    p = _prime_cube_root(n)
    if p is not None and p % 2 == 1:
        if g.exponent() == p and are_isomorphic(g, heisenberg_group(p)) is not None:
            return f"M({p})"
        if g.exponent() == p * p and are_isomorphic(g, m3_group(p)) is not None:
            return f"M3({p})"
    if n % 2 == 0 and n >= 8 and are_isomorphic(g, dihedral_group(n // 2)) is not None:
        return f"D{n // 2}"
    return "unrecognized"

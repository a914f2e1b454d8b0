"""Nilpotent rings and the braces their circle operation produces.

Two carrier shapes are supported: vector algebras over Z/p given by
structure constants on a basis, and the cyclic carrier Z/p^3 with the
scaled product x . y = p^r x y.  Every validated algebra yields a skew
brace whose addition is the ring addition and whose multiplication is
the circle operation a o b = a + b + a.b; the inverse for o is the
alternating geometric series -a + a^2 - a^3 + ..., which terminates by
nilpotency.
"""
from __future__ import annotations

import itertools
from typing import Optional, Sequence, Union

import numpy as np

from .braces import SkewBrace, brace_from_groups
from .errors import (
    BadPrime,
    InvalidTableError,
    NotAssociativeError,
    NotNilpotent,
    QuasiInverseMissing,
    UnknownName,
    UnsupportedParameter,
)
from .groups import MAX_ORDER, FiniteGroup, _prime_factors, make_group

__all__ = [
    "NilpotentAlgebra",
    "make_algebra",
    "cyclic_ring",
    "power_ideal_dims",
    "cubes_vanish",
    "quasi_inverse",
    "additive_group",
    "circle_group",
    "to_brace",
    "catalog",
    "CATALOG_NAMES",
]

Element = Union[np.ndarray, int]

CATALOG_NAMES = ("degraaf_A340", "sixdim_wedge", "truncated_poly", "cyclic")
_CATALOG_PRIMES = {
    "degraaf_A340": (3, 5, 7),
    "sixdim_wedge": (3, 5, 7),
    "truncated_poly": (2, 3, 5, 7),
    "cyclic": (3, 5, 7),
}


def _is_prime(p: int) -> bool:
    return p >= 2 and _prime_factors(p) == [p]


class NilpotentAlgebra:
    """A finite nilpotent ring; construct via make_algebra or cyclic_ring.

    ``kind`` is "modp" (coefficient vectors over Z/p, product given by
    structure constants) or "cyclic" (integers mod p^3, product scaled by
    p^r).  Elements are numpy coefficient vectors for "modp" and plain
    ints for "cyclic".
    """

    def __init__(
        self,
        kind: str,
        p: int,
        dim: int,
        consts: Optional[np.ndarray] = None,
        r: Optional[int] = None,
    ) -> None:
        self.kind = kind
        self.p = p
        self.dim = dim
        self.consts = consts
        self.r = r
        self.order = p**dim if kind == "modp" else p**3
        self._dims: Optional[list[int]] = None

    # -- arithmetic ---------------------------------------------------------

    def add(self, u: Element, v: Element) -> Element:
        if self.kind == "cyclic":
            return (int(u) + int(v)) % self.order
        return (np.asarray(u) + np.asarray(v)) % self.p

    def neg(self, u: Element) -> Element:
        if self.kind == "cyclic":
            return (-int(u)) % self.order
        return (-np.asarray(u)) % self.p

    def multiply(self, u: Element, v: Element) -> Element:
        if self.kind == "cyclic":
            return (self.p**self.r * int(u) * int(v)) % self.order
        uu, vv = np.asarray(u), np.asarray(v)
        return np.einsum("i,j,ijl->l", uu, vv, self.consts) % self.p

    def circle(self, u: Element, v: Element) -> Element:
        return self.add(self.add(u, v), self.multiply(u, v))

    def zero(self) -> Element:
        if self.kind == "cyclic":
            return 0
        return np.zeros(self.dim, dtype=np.int64)

    def is_zero(self, u: Element) -> bool:
        if self.kind == "cyclic":
            return int(u) == 0
        return not np.asarray(u).any()

    # -- element <-> index codecs ------------------------------------------

    def decode(self, index: int) -> Element:
        """Element for a carrier index (big-endian base-p digits)."""
        if self.kind == "cyclic":
            return index
        digits = []
        x = index
        for _ in range(self.dim):
            digits.append(x % self.p)
            x //= self.p
        return np.array(digits[::-1], dtype=np.int64)

    def encode(self, u: Element) -> int:
        if self.kind == "cyclic":
            return int(u) % self.order
        out = 0
        for d in np.asarray(u):
            out = out * self.p + int(d) % self.p
        return out

    def elements(self) -> np.ndarray:
        """All elements; a (order, dim) digit matrix for "modp" kind."""
        if self.kind == "cyclic":
            return np.arange(self.order)
        cols = list(itertools.product(range(self.p), repeat=self.dim))
        return np.array(cols, dtype=np.int64)

    def __repr__(self) -> str:
        if self.kind == "cyclic":
            return f"NilpotentAlgebra(cyclic, p={self.p}, r={self.r})"
        return f"NilpotentAlgebra(modp, p={self.p}, dim={self.dim})"


# ---------------------------------------------------------------------------
# construction and validation


def _row_space_basis(rows: np.ndarray, p: int) -> np.ndarray:
    """Reduced row basis of the span of ``rows`` over Z/p."""
    m = rows % p
    basis: list[np.ndarray] = []
    pivots: list[int] = []
    for row in m:
        row = row.copy()
        for b, piv in zip(basis, pivots):
            if row[piv]:
                row = (row - row[piv] * b) % p
        nz = np.nonzero(row)[0]
        if nz.size:
            piv = int(nz[0])
            row = (row * pow(int(row[piv]), -1, p)) % p
            basis.append(row)
            pivots.append(piv)
    if not basis:
        return np.zeros((0, rows.shape[1]), dtype=np.int64)
    return np.array(basis, dtype=np.int64)


def power_ideal_dims(algebra: NilpotentAlgebra) -> list[int]:
    """Dimensions of the descending product ideals, ending in 0.

    For the cyclic kind the "dimension" of an ideal of size p^k is k.
    Raises NotNilpotent if the chain stabilizes above zero.
    """
    if algebra._dims is not None:
        return algebra._dims
    if algebra.kind == "cyclic":
        dims = [3]
        level = 0  # ideal is p^level * (Z/p^3)
        while dims[-1] > 0:
            level = min(level + algebra.r, 3)
            nxt = 3 - level
            if nxt == dims[-1]:
                raise NotNilpotent(dims + [nxt])
            dims.append(nxt)
    else:
        consts = algebra.consts
        p = algebra.p
        basis = np.eye(algebra.dim, dtype=np.int64)
        dims = [algebra.dim]
        while dims[-1] > 0:
            # next ideal is spanned by products e_i . b over all basis rows b
            prods = np.einsum("ijl,bj->ibl", consts, basis).reshape(-1, algebra.dim)
            basis = _row_space_basis(prods, p)
            nxt = basis.shape[0]
            if nxt == dims[-1]:
                raise NotNilpotent(dims + [nxt])
            dims.append(nxt)
    algebra._dims = dims
    return dims


def cubes_vanish(algebra: NilpotentAlgebra) -> bool:
    """Whether every product of three elements is zero."""
    dims = power_ideal_dims(algebra)
    return len(dims) <= 3 or dims[2] == 0


def make_algebra(
    p: int,
    dim: int,
    products: dict[tuple[int, int], Sequence[int]],
    validate: bool = True,
) -> NilpotentAlgebra:
    """Build a vector algebra over Z/p from sparse structure constants.

    ``products[(i, j)]`` is the coefficient vector of (basis i) . (basis j);
    omitted pairs multiply to zero.  Validation checks associativity on all
    basis triples (NotAssociativeError) and nilpotency of the power-ideal
    chain (NotNilpotent); skip it only for constructions whose failure modes
    you want to observe downstream.
    """
    if not _is_prime(p):
        raise BadPrime(p)
    if dim < 1:
        raise InvalidTableError(f"algebra dimension must be positive, got {dim}")
    consts = np.zeros((dim, dim, dim), dtype=np.int64)
    for (i, j), vec in products.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise InvalidTableError(f"structure constant index ({i}, {j}) out of range")
        arr = np.asarray(vec, dtype=np.int64)
        if arr.shape != (dim,):
            raise InvalidTableError(
                f"structure constant for ({i}, {j}) must have length {dim}"
            )
        consts[i, j] = arr % p
    algebra = NilpotentAlgebra("modp", p, dim, consts=consts)
    if validate:
        left = np.einsum("ijm,mkl->ijkl", consts, consts) % p
        right = np.einsum("jkm,iml->ijkl", consts, consts) % p
        if not np.array_equal(left, right):
            bad = np.argwhere((left != right).any(axis=3))
            i, j, k = (int(v) for v in bad[0])
            raise NotAssociativeError((i, j, k), context="structure constants")
        power_ideal_dims(algebra)
    return algebra


def cyclic_ring(p: int, r: int, validate: bool = True) -> NilpotentAlgebra:
    """The ring Z/p^3 with product x . y = p^r x y.

    r = 0 gives the ordinary product, which is not nilpotent; validation
    rejects it via NotNilpotent.  With validate=False the object is built
    anyway and the failure surfaces later as QuasiInverseMissing.
    """
    if not _is_prime(p):
        raise BadPrime(p)
    if p**3 > MAX_ORDER:
        raise InvalidTableError(f"p^3 = {p**3} exceeds the cap of {MAX_ORDER}")
    if r < 0:
        raise UnsupportedParameter(f"product scale exponent must be >= 0, got {r}")
    algebra = NilpotentAlgebra("cyclic", p, 3, r=r)
    if validate:
        power_ideal_dims(algebra)
    return algebra


# ---------------------------------------------------------------------------
# circle structure


def quasi_inverse(algebra: NilpotentAlgebra, u: Element, cap: Optional[int] = None) -> Element:
    """The circle-inverse -u + u^2 - u^3 + ... of an element.

    The series must terminate within ``cap`` terms (default: dimension + 2);
    QuasiInverseMissing otherwise — which is how non-nilpotent products
    built with validate=False fail.
    """
    limit = cap if cap is not None else algebra.dim + 2
    acc = algebra.neg(u)
    power = np.asarray(u) if algebra.kind == "modp" else u
    sign = 1  # sign of the *next* term: (-1)^k for k = 2 is +1
    for _ in range(limit):
        power = algebra.multiply(power, u)
        if algebra.is_zero(power):
            return acc
        acc = algebra.add(acc, power if sign > 0 else algebra.neg(power))
        sign = -sign
    if algebra.kind == "cyclic":
        raise QuasiInverseMissing((int(u),))
    raise QuasiInverseMissing(tuple(int(x) for x in np.asarray(u)))


def _check_table_cap(algebra: NilpotentAlgebra) -> None:
    if algebra.order > MAX_ORDER:
        raise InvalidTableError(
            f"algebra has {algebra.order} elements, above the table cap of {MAX_ORDER}"
        )


def additive_group(algebra: NilpotentAlgebra) -> FiniteGroup:
    """The underlying addition as a table group."""
    _check_table_cap(algebra)
    if algebra.kind == "cyclic":
        idx = np.arange(algebra.order)
        return make_group((idx[:, None] + idx[None, :]) % algebra.order)
    digits = algebra.elements()
    powers = algebra.p ** np.arange(algebra.dim - 1, -1, -1)
    sums = (digits[:, None, :] + digits[None, :, :]) % algebra.p
    return make_group(sums @ powers)


def circle_group(algebra: NilpotentAlgebra) -> FiniteGroup:
    """The circle operation a o b = a + b + a.b as a table group.

    Every element must have a terminating series inverse (checked first, so
    a non-nilpotent product raises QuasiInverseMissing rather than a bare
    table failure).
    """
    _check_table_cap(algebra)
    for index in range(algebra.order):
        u = algebra.decode(index)
        v = quasi_inverse(algebra, u)
        if not algebra.is_zero(algebra.circle(u, v)):
            raise AssertionError(f"series inverse of element {index} does not cancel")
    if algebra.kind == "cyclic":
        idx = np.arange(algebra.order)
        scale = algebra.p**algebra.r
        table = (idx[:, None] + idx[None, :] + scale * idx[:, None] * idx[None, :]) % algebra.order
        return make_group(table)
    digits = algebra.elements()
    powers = algebra.p ** np.arange(algebra.dim - 1, -1, -1)
    half = np.einsum("xi,ijl->xjl", digits, algebra.consts)
    prods = np.einsum("xjl,yj->xyl", half, digits)
    table = (digits[:, None, :] + digits[None, :, :] + prods) % algebra.p
    return make_group(table @ powers)


def to_brace(algebra: NilpotentAlgebra, check: str = "direct") -> SkewBrace:
    """The skew brace (addition, circle) of a nilpotent ring."""
    return brace_from_groups(additive_group(algebra), circle_group(algebra), check=check)


# ---------------------------------------------------------------------------
# catalog


def catalog(
    name: str, p: int, m: Optional[int] = None, r: Optional[int] = None
) -> NilpotentAlgebra:
    """Named example algebras.

    degraaf_A340    dimension 3, only nonzero basis product e2.e1 = e0
    sixdim_wedge    dimension 6 with e0.e1 = e3, e1.e2 = e4, e2.e0 = e5
    truncated_poly  polynomials x Z/p[x] mod x^(m+1)  (requires m)
    cyclic          Z/p^3 with product scaled by p^r  (requires r)

    Primes outside each entry's supported range raise UnsupportedParameter,
    unknown names raise UnknownName.
    """
    if name not in CATALOG_NAMES:
        raise UnknownName(name, CATALOG_NAMES)
    allowed = _CATALOG_PRIMES[name]
    if p not in allowed:
        raise UnsupportedParameter(
            f"catalog entry {name!r} supports p in {allowed}, got {p}"
        )
    if name == "degraaf_A340":
        e0 = [1, 0, 0]
        return make_algebra(p, 3, {(2, 1): e0})
    if name == "sixdim_wedge":
        def unit(k: int) -> list[int]:
            vec = [0] * 6
            vec[k] = 1
            return vec

        return make_algebra(p, 6, {(0, 1): unit(3), (1, 2): unit(4), (2, 0): unit(5)})
    if name == "truncated_poly":
        if m is None:
            raise UnsupportedParameter("truncated_poly needs the degree parameter m")
        if m < 1:
            raise UnsupportedParameter(f"truncated_poly degree m = {m} is out of range")
        products = {}
        for i in range(m):
            for j in range(m):
                if i + j + 1 < m:
                    vec = [0] * m
                    vec[i + j + 1] = 1
                    products[(i, j)] = vec
        return make_algebra(p, m, products)
    if r is None:
        raise UnsupportedParameter("cyclic needs the scale parameter r")
    return cyclic_ring(p, r)

"""Permutations of {0, ..., n-1} as tuples, plus permutation groups.

A permutation ``p`` maps ``i`` to ``p[i]``.  ``compose(p, q)`` is function
composition: apply ``q`` first, then ``p``.  Cycle notation is 1-based for
display, matching the way permutations are usually written by hand.
"""
from __future__ import annotations

import itertools
from math import lcm
from typing import Iterable, Iterator, Optional, Sequence

__all__ = [
    "Perm",
    "compose",
    "invert",
    "identity_perm",
    "perm_order",
    "is_fixed_point_free",
    "all_perms",
    "cycle_string",
    "parse_cycles",
    "PermutationGroup",
]

Perm = tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    """Function composition p∘q: the map x -> p(q(x))."""
    return tuple(p[q[i]] for i in range(len(p)))


def invert(p: Sequence[int]) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def perm_order(p: Sequence[int]) -> int:
    """Multiplicative order: the lcm of the cycle lengths."""
    seen = [False] * len(p)
    order = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = p[i]
            length += 1
        order = lcm(order, length)
    return order


def is_fixed_point_free(p: Sequence[int]) -> bool:
    """True when p moves every point (the identity does not qualify)."""
    return all(p[i] != i for i in range(len(p)))


def all_perms(n: int) -> list[Perm]:
    """All permutations of {0, ..., n-1} in lexicographic order."""
    return [tuple(p) for p in itertools.permutations(range(n))]


def _cycles(p: Sequence[int]) -> list[list[int]]:
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p[i]
        out.append(cyc)
    return out


def cycle_string(p: Sequence[int]) -> str:
    """1-based disjoint-cycle notation; the identity prints as ``()``.

    Points are concatenated for degree <= 9 and space-separated above that.
    """
    cycles = _cycles(p)
    if not cycles:
        return "()"
    sep = "" if len(p) <= 9 else " "
    return "".join("(" + sep.join(str(i + 1) for i in cyc) + ")" for cyc in cycles)


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse 1-based cycle notation like ``(1 2 3)(4 5)`` or ``(123)``.

    Unbracketed whitespace and commas are ignored.  ``()`` and ``e`` both
    denote the identity.  Points without separators are read digit by digit,
    which is only unambiguous for degree <= 9; larger degrees must separate
    points with spaces or commas.
    """
    text = text.strip()
    if text in ("", "e", "()"):
        return identity_perm(degree)
    out = list(range(degree))
    for chunk in text.replace(")", ")\x00").split("\x00"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise ValueError(f"malformed cycle {chunk!r}")
        body = chunk[1:-1].replace(",", " ")
        if " " in body.strip() or degree > 9:
            points = [int(tok) for tok in body.split()]
        else:
            points = [int(ch) for ch in body.strip()]
        if not points:
            continue
        for v in points:
            if not 1 <= v <= degree:
                raise ValueError(f"point {v} outside 1..{degree}")
        if len(set(points)) != len(points):
            raise ValueError(f"repeated point in cycle {chunk!r}")
        for a, b in zip(points, points[1:] + points[:1]):
            out[a - 1] = b - 1
    return tuple(out)


class PermutationGroup:
    """A set of permutations of fixed degree, closed under composition.

    Closure is the caller's contract and is *not* verified on construction
    (automorphism groups can run to thousands of elements); use
    :meth:`verify_closure` in tests or for small groups.
    """

    __slots__ = ("degree", "elements", "_index")

    def __init__(self, degree: int, elements: Iterable[Sequence[int]]) -> None:
        elems = sorted({tuple(p) for p in elements})
        for p in elems:
            if len(p) != degree or sorted(p) != list(range(degree)):
                raise ValueError(f"{p} is not a permutation of degree {degree}")
        if identity_perm(degree) not in elems:
            raise ValueError("permutation set does not contain the identity")
        self.degree = degree
        self.elements: tuple[Perm, ...] = tuple(elems)
        self._index = {p: i for i, p in enumerate(self.elements)}

    @classmethod
    def from_generators(cls, degree: int, generators: Iterable[Sequence[int]]) -> "PermutationGroup":
        gens = [tuple(g) for g in generators]
        seen = {identity_perm(degree)}
        frontier = list(seen)
        while frontier:
            nxt = []
            for p in frontier:
                for g in gens:
                    q = compose(p, g)
                    if q not in seen:
                        seen.add(q)
                        nxt.append(q)
            frontier = nxt
        return cls(degree, seen)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements)

    def __contains__(self, p: object) -> bool:
        return isinstance(p, tuple) and p in self._index

    def index(self, p: Sequence[int]) -> int:
        return self._index[tuple(p)]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PermutationGroup)
            and self.degree == other.degree
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.elements))

    def __repr__(self) -> str:
        return f"PermutationGroup(degree={self.degree}, order={self.order})"

    def verify_closure(self) -> None:
        """Raise ValueError on the first product that escapes the set."""
        for p in self.elements:
            if invert(p) not in self._index:
                raise ValueError(f"inverse of {p} missing from the set")
            for q in self.elements:
                if compose(p, q) not in self._index:
                    raise ValueError(f"product of {p} and {q} escapes the set")

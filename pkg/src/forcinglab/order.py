"""Finite forcing notions: quasi-orders, dense sets, filters and generics.

Subsets of a :class:`Quasiorder` are handled internally as bitmasks over the
element indices (bit ``i`` stands for ``elements[i]``). The public functions
accept and return ordinary collections of condition ids.

The set of generic filters of a finite quasi-order is small and explicit:
every generic filter is the upward closure of a class of ≤-minimal
elements, and each such closure is generic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .config import DEFAULT_CAPS, Caps
from .errors import CapExceededError, DuplicateIdError, UnknownIdError

__all__ = [
    "Quasiorder",
    "Filter",
    "build_quasiorder",
    "is_dense",
    "is_filter",
    "minimal_classes",
    "generic_filters",
    "meets_every_dense",
    "meets_every_dense_bruteforce",
    "dense_subsets",
    "generic_filters_bruteforce",
]


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Quasiorder:
    """A finite quasi-order; ``leq(p, q)`` means p is stronger than or equal to q.

    Build instances with :func:`build_quasiorder`, which takes the
    reflexive-transitive closure of a generator relation.
    """

    elements: tuple[str, ...]
    # down[i]: bitmask of j with elements[j] <= elements[i]
    down: tuple[int, ...] = field(repr=False)
    generators: tuple[tuple[str, str], ...] = field(default=(), compare=False, repr=False)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @cached_property
    def index(self) -> dict[str, int]:
        return {p: i for i, p in enumerate(self.elements)}

    @cached_property
    def up(self) -> tuple[int, ...]:
        n = len(self.elements)
        return tuple(
            sum(1 << j for j in range(n) if self.down[j] >> i & 1) for i in range(n)
        )

    @property
    def full(self) -> int:
        return (1 << len(self.elements)) - 1

    def idx(self, p: str) -> int:
        try:
            return self.index[p]
        except KeyError:
            raise UnknownIdError(f"unknown condition id {p!r}") from None

    def leq(self, p: str, q: str) -> bool:
        return bool(self.down[self.idx(q)] >> self.idx(p) & 1)

    def equivalent(self, p: str, q: str) -> bool:
        return self.leq(p, q) and self.leq(q, p)

    def mask(self, ids: Iterable[str]) -> int:
        out = 0
        for p in ids:
            out |= 1 << self.idx(p)
        return out

    def ids(self, mask: int) -> frozenset[str]:
        return frozenset(self.elements[i] for i in _bits(mask))

    def below(self, p: str) -> frozenset[str]:
        """The cone ``{q : q <= p}``."""
        return self.ids(self.down[self.idx(p)])

    def above(self, p: str) -> frozenset[str]:
        return self.ids(self.up[self.idx(p)])

    def upward_closure(self, ids: Iterable[str]) -> frozenset[str]:
        m = 0
        for i in _bits(self.mask(ids)):
            m |= self.up[i]
        return self.ids(m)

    @cached_property
    def minimal_masks(self) -> tuple[int, ...]:
        """Bitmasks of the ≤-minimal equivalence classes, in element order."""
        out = []
        seen = 0
        for i in range(len(self.elements)):
            if seen >> i & 1:
                continue
            d = self.down[i]
            # minimal iff everything below i is also above i
            if d & ~self.up[i] == 0:
                out.append(d)
                seen |= d
        return tuple(out)

    def relation_matrix(self) -> np.ndarray:
        n = len(self.elements)
        m = np.zeros((n, n), dtype=bool)
        for q in range(n):
            for p in _bits(self.down[q]):
                m[p, q] = True
        return m


@dataclass(frozen=True)
class Filter:
    """A filter on a quasi-order, stored as a frozenset of condition ids."""

    members: frozenset[str]

    def __contains__(self, p):
        return p in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def __lt__(self, other):
        return sorted(self.members) < sorted(other.members)

    def __repr__(self):
        return "Filter({" + ",".join(sorted(self.members)) + "})"


def build_quasiorder(
    elements: Sequence[str],
    generators: Iterable[tuple[str, str]] = (),
    caps: Caps = DEFAULT_CAPS,
) -> Quasiorder:
    """Reflexive-transitive closure of ``generators`` (pairs ``(p, q)`` meaning p <= q)."""
    elements = tuple(elements)
    if not elements:
        raise ValueError("a forcing notion needs at least one condition")
    if len(elements) > caps.max_conditions:
        raise CapExceededError(
            f"{len(elements)} conditions exceed cap {caps.max_conditions}"
        )
    index = {}
    for i, p in enumerate(elements):
        if p in index:
            raise DuplicateIdError(f"duplicate condition id {p!r}")
        index[p] = i
    generators = tuple((str(p), str(q)) for p, q in generators)
    n = len(elements)
    rel = np.eye(n, dtype=bool)
    for p, q in generators:
        for x in (p, q):
            if x not in index:
                raise UnknownIdError(f"unknown condition id {x!r} in order generator")
        rel[index[p], index[q]] = True
    # Warshall
    for k in range(n):
        rel |= np.outer(rel[:, k], rel[k, :])
    down = tuple(int(sum(1 << int(p) for p in np.flatnonzero(rel[:, q]))) for q in range(n))
    return Quasiorder(elements, down, generators)


def is_dense(q: Quasiorder, D: Iterable[str]) -> bool:
    """Every condition has a condition of ``D`` below it."""
    m = q.mask(D)
    return all(d & m for d in q.down)


def _is_filter_mask(q: Quasiorder, m: int) -> bool:
    if m == 0:
        return False
    members = list(_bits(m))
    for i in members:
        if q.up[i] & ~m:
            return False
    for i, j in itertools.combinations(members, 2):
        if not q.down[i] & q.down[j] & m:
            return False
    return True


def is_filter(q: Quasiorder, members: Iterable[str]) -> bool:
    """Nonempty, upward closed, and directed."""
    return _is_filter_mask(q, q.mask(members))


def minimal_classes(q: Quasiorder) -> list[frozenset[str]]:
    return [q.ids(m) for m in q.minimal_masks]


def _generic_masks(q: Quasiorder) -> list[int]:
    out = set()
    for cls in q.minimal_masks:
        i = next(_bits(cls))
        out.add(q.up[i])
    return sorted(out, key=lambda m: sorted(q.elements[i] for i in _bits(m)))


def generic_filters(q: Quasiorder) -> list[Filter]:
    """All filters meeting every dense subset, canonically ordered."""
    return [Filter(q.ids(m)) for m in _generic_masks(q)]


def meets_every_dense(q: Quasiorder, E: Iterable[str] | int) -> bool:
    """Cone criterion: ``E`` meets every dense set iff it contains a full cone.

    Any cone contains a minimal class, so it is enough to look for a
    minimal class inside ``E``.
    """
    m = E if isinstance(E, int) else q.mask(E)
    return any(cls & ~m == 0 for cls in q.minimal_masks)


def _dense_masks(q: Quasiorder) -> list[int]:
    return [m for m in range(1 << len(q)) if all(d & m for d in q.down)]


def dense_subsets(q: Quasiorder) -> list[frozenset[str]]:
    """Explicit enumeration of all dense subsets; exponential, for checking only."""
    if len(q) > 12:
        raise CapExceededError("explicit dense-set enumeration is limited to 12 conditions")
    return [q.ids(m) for m in _dense_masks(q)]


def meets_every_dense_bruteforce(q: Quasiorder, E: Iterable[str] | int) -> bool:
    m = E if isinstance(E, int) else q.mask(E)
    if len(q) > 12:
        raise CapExceededError("explicit dense-set enumeration is limited to 12 conditions")
    return all(D & m for D in _dense_masks(q))


def generic_filters_bruteforce(q: Quasiorder) -> list[Filter]:
    """Generic filters by exhaustive search over all subsets of ``q``."""
    if len(q) > 12:
        raise CapExceededError("brute-force generic search is limited to 12 conditions")
    dense = _dense_masks(q)
    found = [
        m
        for m in range(1, 1 << len(q))
        if _is_filter_mask(q, m) and all(D & m for D in dense)
    ]
    return sorted(Filter(q.ids(m)) for m in found)

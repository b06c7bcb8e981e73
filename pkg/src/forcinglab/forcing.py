"""The forcing relation for atomic membership formulas.

``p ⊩ s ∈ t`` is decided semantically: it holds iff ``s[G] ∈ t[G]`` for
every generic ``G`` containing ``p``. Over a finite quasi-order there are
finitely many generics, so this is a finite check. The usual recursive
clauses are kept as :func:`forces_membership_syntactic`, which exists only
to cross-check the semantic relation.

Answers are memoized per quasi-order in a :class:`ForcingContext`; results
are computed as bitmasks over condition indices.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .hf import HfSet, is_transitive
from .names import PName, interpret
from .order import Quasiorder, _bits, _generic_masks, generic_filters

__all__ = [
    "ForcingContext",
    "context",
    "forces_membership",
    "forces_nonmembership",
    "decides",
    "is_d_complete",
    "forces_transitive",
    "forces_membership_syntactic",
    "forces_equality_syntactic",
]


class ForcingContext:
    """Memo tables for forcing questions over one quasi-order."""

    def __init__(self, q: Quasiorder):
        self.q = q
        self.generics = generic_filters(q)
        masks = _generic_masks(q)
        # gens_at[p]: bitmask over generic indices of the generics containing p
        self.gens_at = tuple(
            sum(1 << g for g, m in enumerate(masks) if m >> p & 1) for p in range(len(q))
        )
        self._values: dict[PName, tuple[HfSet, ...]] = {}
        self._member: dict[tuple[PName, PName], int] = {}
        self._syn_in: dict[tuple[PName, PName], int] = {}
        self._syn_eq: dict[tuple[PName, PName], int] = {}

    def values(self, s: PName) -> tuple[HfSet, ...]:
        """``s[G]`` for each generic ``G``, in generic order."""
        out = self._values.get(s)
        if out is None:
            out = self._values[s] = tuple(interpret(s, G) for G in self.generics)
        return out

    def _forced(self, truth: int) -> int:
        # p forces a statement iff every generic through p makes it true
        out = 0
        for p, gens in enumerate(self.gens_at):
            if gens & ~truth == 0:
                out |= 1 << p
        return out

    def member_mask(self, s: PName, t: PName) -> int:
        """Bitmask of the conditions forcing ``s ∈ t``."""
        key = (s, t)
        out = self._member.get(key)
        if out is None:
            vs, vt = self.values(s), self.values(t)
            truth = sum(1 << g for g in range(len(vs)) if vs[g] in vt[g])
            out = self._member[key] = self._forced(truth)
        return out

    def nonmember_mask(self, s: PName, t: PName) -> int:
        vs, vt = self.values(s), self.values(t)
        truth = sum(1 << g for g in range(len(vs)) if vs[g] not in vt[g])
        return self._forced(truth)

    def decides_mask(self, s: PName, t: PName) -> int:
        return self.member_mask(s, t) | self.nonmember_mask(s, t)

    def complete_mask(self, d: Iterable[PName], t: PName) -> int:
        """Bitmask of the ``d``-complete conditions (with respect to ``t``)."""
        d = list(d)
        out = self.q.full
        for s in d:
            out &= self.member_mask(s, t)
        for s in d:
            for s2 in d:
                out &= self.decides_mask(s, s2)
        return out

    def forces_transitive(self, t: PName) -> bool:
        return all(is_transitive(v) for v in self.values(t))

    # Recursive clauses, used only as an independent check.

    def _dense_below(self, target: int) -> int:
        down = self.q.down
        out = 0
        for p in range(len(down)):
            if all(down[r] & target for r in _bits(down[p])):
                out |= 1 << p
        return out

    def syn_eq_mask(self, s: PName, u: PName) -> int:
        key = (s, u)
        out = self._syn_eq.get(key)
        if out is None:
            down = self.q.down
            out = 0
            for p in range(len(down)):
                ok = all(
                    down[p] & down[self.q.index[r]] & ~self.syn_in_mask(v, b) == 0
                    for a, b in ((s, u), (u, s))
                    for v, r in a.entries
                )
                if ok:
                    out |= 1 << p
            self._syn_eq[key] = out
        return out

    def syn_in_mask(self, s: PName, t: PName) -> int:
        key = (s, t)
        out = self._syn_in.get(key)
        if out is None:
            witnesses = 0
            for u, r in t.entries:
                witnesses |= self.q.down[self.q.index[r]] & self.syn_eq_mask(s, u)
            out = self._syn_in[key] = self._dense_below(witnesses)
        return out


@lru_cache(maxsize=256)
def context(q: Quasiorder) -> ForcingContext:
    return ForcingContext(q)


def _bit(q: Quasiorder, p: str) -> int:
    return 1 << q.idx(p)


def forces_membership(q: Quasiorder, p: str, s: PName, t: PName) -> bool:
    return bool(context(q).member_mask(s, t) & _bit(q, p))


def forces_nonmembership(q: Quasiorder, p: str, s: PName, t: PName) -> bool:
    return bool(context(q).nonmember_mask(s, t) & _bit(q, p))


def decides(q: Quasiorder, p: str, s: PName, s2: PName) -> bool:
    return bool(context(q).decides_mask(s, s2) & _bit(q, p))


def is_d_complete(q: Quasiorder, p: str, d: Iterable[PName], t: PName) -> bool:
    """``p`` forces ``s ∈ t`` for all ``s`` in ``d`` and decides ``s ∈ s'`` within ``d``."""
    return bool(context(q).complete_mask(d, t) & _bit(q, p))


def forces_transitive(q: Quasiorder, t: PName) -> bool:
    """Every generic interpretation of ``t`` is a transitive set."""
    return context(q).forces_transitive(t)


def forces_membership_syntactic(q: Quasiorder, p: str, s: PName, t: PName) -> bool:
    return bool(context(q).syn_in_mask(s, t) & _bit(q, p))


def forces_equality_syntactic(q: Quasiorder, p: str, s: PName, u: PName) -> bool:
    return bool(context(q).syn_eq_mask(s, u) & _bit(q, p))

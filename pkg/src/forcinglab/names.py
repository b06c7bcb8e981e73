"""Ramified P-names and their interpretation by filters.

A name is a finite set of ``(child, condition)`` pairs, where every child is
itself a name. Names compare structurally: two names with the same canonical
entry set are the same name, whatever label they were given.
"""

from __future__ import annotations

from typing import Container, Iterable, Mapping

from .hf import HfSet
from .order import Quasiorder
from .errors import UnknownIdError

__all__ = [
    "PName",
    "ZERO",
    "name",
    "potential_elements",
    "name_rank",
    "interpret",
    "validate_name",
    "conditions_mentioned",
    "format_name",
]


class PName:
    """Immutable canonical P-name.

    ``label`` is cosmetic: it is used for printing and ignored by equality.
    """

    __slots__ = ("entries", "rank", "key", "label", "_hash")

    def __init__(self, entries: Iterable[tuple[PName, str]] = (), label: str | None = None):
        uniq = {}
        for child, cond in entries:
            if not isinstance(child, PName):
                raise TypeError(f"name children must be PName, got {type(child).__name__}")
            uniq[(child.sort_key, str(cond))] = (child, str(cond))
        ordered = tuple(uniq[k] for k in sorted(uniq))
        object.__setattr__(self, "entries", ordered)
        object.__setattr__(self, "rank", 1 + max(c.rank for c, _ in ordered) if ordered else 0)
        object.__setattr__(self, "key", tuple((c.sort_key, p) for c, p in ordered))
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "_hash", hash(self.key))

    def __setattr__(self, name, value):
        raise AttributeError("PName is immutable")

    @property
    def sort_key(self):
        """Canonical order: name rank first, then structure."""
        return (self.rank, self.key)

    def __eq__(self, other):
        if not isinstance(other, PName):
            return NotImplemented
        return self._hash == other._hash and self.key == other.key

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self):
        return f"PName({format_name(self)})"

    def __str__(self):
        return format_name(self)

    def relabel(self, label: str) -> PName:
        return PName(self.entries, label=label)


ZERO = PName(label="zero")


def name(*entries: tuple[PName, str], label: str | None = None) -> PName:
    """Shorthand: ``name((ZERO, "a"), (s0, "e"), label="t")``."""
    return PName(entries, label=label)


def format_name(s: PName, labels: Mapping[PName, str] | None = None) -> str:
    """Print ``s`` using labels for children where known."""

    def show(n, top):
        if not top:
            if labels is not None and n in labels:
                return labels[n]
            if n.label is not None:
                return n.label
        return "{" + "; ".join(f"{show(c, False)}@{p}" for c, p in n.entries) + "}"

    return show(s, True)


def potential_elements(t: PName) -> list[PName]:
    """``pe t``: every name occurring hereditarily inside ``t``, ``t`` excluded.

    Ordered by (name rank, canonical structure).
    """
    seen = {}
    todo = [c for c, _ in t.entries]
    while todo:
        s = todo.pop()
        if s not in seen:
            seen[s] = s
            todo.extend(c for c, _ in s.entries)
    return sorted(seen)


def name_rank(s: PName) -> int:
    return s.rank


def interpret(s: PName, G: Container[str]) -> HfSet:
    """``s[G] = { child[G] : (child, p) in s, p in G }``."""
    memo: dict[PName, HfSet] = {}

    def val(n):
        out = memo.get(n)
        if out is None:
            out = memo[n] = HfSet(val(c) for c, p in n.entries if p in G)
        return out

    return val(s)


def conditions_mentioned(s: PName) -> frozenset[str]:
    out = set()
    for n in [s, *potential_elements(s)]:
        out.update(p for _, p in n.entries)
    return frozenset(out)


def validate_name(s: PName, q: Quasiorder) -> None:
    """Raise :class:`UnknownIdError` if ``s`` mentions a condition not in ``q``."""

    def walk(n, path):
        for c, p in n.entries:
            if p not in q.index:
                raise UnknownIdError(
                    f"unknown condition id {p!r} at {'/'.join(path) or '<root>'}"
                )
            walk(c, path + [f"{format_name(c)}@{p}"])

    walk(s, [])

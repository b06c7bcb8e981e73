"""Hereditarily finite sets in canonical form.

An :class:`HfSet` stores its elements sorted by Ackermann code with duplicates
removed, so structural equality is extensional equality and the code itself
is a perfect hash. Braces literals such as ``"{{},{{}}}"`` are the textual
form used everywhere (parsing, printing, the spec files, the CLI).
"""

from __future__ import annotations

from typing import Iterable

from .config import DEFAULT_CAPS, Caps
from .errors import CapExceededError, HfOverflowError, ParseError

__all__ = [
    "HfSet",
    "EMPTY",
    "parse_hf",
    "format_hf",
    "ackermann_code",
    "from_code",
    "is_transitive",
    "rank",
    "transitive_closure",
    "size",
    "ordinal",
    "hf_universe",
    "enumerate_transitive_sets",
]


class HfSet:
    """Immutable hereditarily finite set.

    Construct from any iterable of HfSets; the result is canonical.

    >>> HfSet([EMPTY, EMPTY]) == HfSet([EMPTY])
    True
    """

    __slots__ = ("children", "code", "rank")

    def __init__(self, elements: Iterable[HfSet] = (), *, max_bits: int | None = None):
        limit = DEFAULT_CAPS.hf_code_bits if max_bits is None else max_bits
        uniq = {}
        for el in elements:
            if not isinstance(el, HfSet):
                raise TypeError(f"HfSet elements must be HfSet, got {type(el).__name__}")
            uniq[el.code] = el
        children = tuple(uniq[c] for c in sorted(uniq))
        code = 0
        for c in children:
            if c.code >= limit:
                raise HfOverflowError(
                    f"Ackermann code needs more than {limit} bits; instance too large"
                )
            code |= 1 << c.code
        object.__setattr__(self, "children", children)
        object.__setattr__(self, "code", code)
        object.__setattr__(self, "rank", 1 + max(c.rank for c in children) if children else 0)

    def __setattr__(self, name, value):
        raise AttributeError("HfSet is immutable")

    def __eq__(self, other):
        if not isinstance(other, HfSet):
            return NotImplemented
        return self.code == other.code

    def __hash__(self):
        return hash(self.code)

    def __lt__(self, other):
        if not isinstance(other, HfSet):
            return NotImplemented
        return self.code < other.code

    def __le__(self, other):
        if not isinstance(other, HfSet):
            return NotImplemented
        return self.code <= other.code

    def __len__(self):
        return len(self.children)

    def __iter__(self):
        return iter(self.children)

    def __contains__(self, item):
        if not isinstance(item, HfSet):
            return False
        return item.code < self.code.bit_length() and bool(self.code >> item.code & 1)

    def __bool__(self):
        return bool(self.children)

    def __repr__(self):
        return f"HfSet({format_hf(self)})"

    def __str__(self):
        return format_hf(self)

    def issubset(self, other: HfSet) -> bool:
        return self.code & other.code == self.code

    def union(self, other: HfSet) -> HfSet:
        return HfSet(self.children + other.children)

    def adjoin(self, element: HfSet) -> HfSet:
        """Return ``self ∪ {element}``."""
        return HfSet(self.children + (element,))


EMPTY = HfSet()


def format_hf(x: HfSet) -> str:
    return "{" + ",".join(format_hf(c) for c in x.children) + "}"


def parse_hf(text: str) -> HfSet:
    """Parse a braces literal: ``set := "{" (set ("," set)*)? "}"``.

    Whitespace is ignored. Raises :class:`ParseError` with the offending
    position on bad input.
    """
    # Iterative parser; deep nesting must not hit the recursion limit.
    stack: list[list[HfSet]] = []
    result = None
    expect_element = True  # after "{" or ",": a set (or "}" right after "{")
    after_open = False
    for pos, ch in enumerate(text):
        if ch.isspace():
            continue
        if result is not None:
            raise ParseError(f"unexpected {ch!r} after end of set", position=pos)
        if ch == "{":
            if not expect_element:
                raise ParseError("expected ',' or '}' before '{'", position=pos)
            stack.append([])
            expect_element = True
            after_open = True
        elif ch == "}":
            if not stack:
                raise ParseError("unbalanced '}'", position=pos)
            if expect_element and not after_open:
                raise ParseError("expected a set after ','", position=pos)
            done = HfSet(stack.pop())
            if stack:
                stack[-1].append(done)
                expect_element = False
            else:
                result = done
            after_open = False
        elif ch == ",":
            if expect_element or not stack:
                raise ParseError("unexpected ','", position=pos)
            expect_element = True
            after_open = False
        else:
            raise ParseError(f"unexpected character {ch!r}", position=pos)
    if stack:
        raise ParseError("unbalanced '{': missing '}'", position=len(text))
    if result is None:
        raise ParseError("empty input", position=len(text))
    return result


def ackermann_code(x: HfSet) -> int:
    """Sum of ``2**code(y)`` over the elements ``y`` of ``x``."""
    return x.code


def from_code(code: int, *, max_bits: int | None = None) -> HfSet:
    """Inverse of :func:`ackermann_code`."""
    if code < 0:
        raise ValueError("Ackermann codes are non-negative")
    memo: dict[int, HfSet] = {}

    def build(n):
        if n not in memo:
            memo[n] = HfSet(
                (build(i) for i in range(n.bit_length()) if n >> i & 1), max_bits=max_bits
            )
        return memo[n]

    return build(code)


def rank(x: HfSet) -> int:
    return x.rank


def is_transitive(x: HfSet) -> bool:
    return all(y.issubset(x) for y in x.children)


def transitive_closure(x: HfSet) -> HfSet:
    """The set of all hereditary elements of ``x`` (``x`` itself excluded)."""
    seen: dict[int, HfSet] = {}
    todo = list(x.children)
    while todo:
        y = todo.pop()
        if y.code not in seen:
            seen[y.code] = y
            todo.extend(y.children)
    return HfSet(seen.values())


def size(x: HfSet) -> int:
    """Cardinality of the transitive closure, not counting ``x`` itself."""
    return len(transitive_closure(x))


def ordinal(n: int) -> HfSet:
    """The von Neumann ordinal ``n``."""
    out = EMPTY
    for _ in range(n):
        out = out.adjoin(out)
    return out


def hf_universe(max_rank: int) -> list[HfSet]:
    """``V_max_rank``: every HfSet of rank < ``max_rank``, sorted by code.

    ``|V_n|`` is a tower of twos, so only ``max_rank <= 4`` is accepted.
    """
    if max_rank > 4:
        raise CapExceededError("hf_universe is limited to max_rank <= 4")
    level: list[HfSet] = []
    for _ in range(max_rank):
        n = len(level)
        level = [HfSet(level[i] for i in range(n) if mask >> i & 1) for mask in range(1 << n)]
        level.sort()
    return level


def enumerate_transitive_sets(max_rank: int, max_size: int, caps: Caps = DEFAULT_CAPS) -> list[HfSet]:
    """All transitive sets of rank ``<= max_rank`` with ``size(X) <= max_size``.

    Grows sets one element at a time: every finite transitive set is reached
    by adjoining, in rank order, elements that are already subsets of the
    current set.
    """
    if max_rank > caps.max_rank:
        raise CapExceededError(f"max_rank {max_rank} exceeds cap {caps.max_rank}")
    if max_size > caps.max_size:
        raise CapExceededError(f"max_size {max_size} exceeds cap {caps.max_size}")
    if max_rank < 0 or max_size < 0:
        return []
    found = {EMPTY.code: EMPTY}
    frontier = [EMPTY]
    while frontier:
        nxt = []
        for x in frontier:
            if len(x) >= max_size:
                continue
            elems = x.children
            for mask in range(1 << len(elems)):
                y = HfSet(e for i, e in enumerate(elems) if mask >> i & 1)
                if y in x or y.rank + 1 > max_rank:
                    continue
                z = x.adjoin(y)
                if z.code not in found:
                    found[z.code] = z
                    nxt.append(z)
        frontier = nxt
    return [found[c] for c in sorted(found)]

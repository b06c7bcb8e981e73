"""Test instances: hand-built fixtures and exhaustive small corpora.

:func:`all_quasiorders` lists every quasi-order with at most ``n`` elements
up to isomorphism (1, 3, 9, 33, 139 of them for n = 1..5).
:func:`sample_names` draws forced-transitive names of rank <= 2 with at
most three potential elements, deterministically from a seed.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache

from .forcing import context
from .hf import EMPTY, HfSet
from .names import ZERO, PName, name, potential_elements
from .order import Quasiorder, build_quasiorder

__all__ = [
    "Instance",
    "one_point",
    "cohen2",
    "equivalent_bottoms",
    "degenerate",
    "fixtures",
    "all_quasiorders",
    "sample_names",
    "corpus",
]


@dataclass(frozen=True)
class Instance:
    label: str
    q: Quasiorder
    t: PName
    names: tuple[PName, ...] = ()
    X: HfSet | None = None


def one_point() -> Instance:
    q = build_quasiorder(["e"])
    return Instance("one-point", q, PName(label="t"), (ZERO,))


def _cohen2_order() -> Quasiorder:
    return build_quasiorder(
        ["e", "a", "b", "aa", "ab", "ba", "bb"],
        [("aa", "a"), ("ab", "a"), ("ba", "b"), ("bb", "b"), ("a", "e"), ("b", "e")],
    )


def cohen2() -> Instance:
    """Binary tree of height 2; ``t`` is ``{0, 1}`` below ``a`` and ``{0}`` below ``b``."""
    s0 = name((ZERO, "a"), label="s0")
    t = name((ZERO, "e"), (s0, "e"), label="t")
    return Instance("cohen2", _cohen2_order(), t, (ZERO, s0, t))


def equivalent_bottoms() -> Instance:
    q = build_quasiorder(["e", "p", "q"], [("p", "q"), ("q", "p"), ("p", "e")])
    s = name((ZERO, "p"), label="s")
    t = name((ZERO, "e"), (s, "q"), label="t")
    return Instance("equivalent-bottoms", q, t, (ZERO, s, t))


def degenerate() -> Instance:
    """cohen2 with ``t = {(zero, e)}`` and ``X = ∅``: the readings disagree here."""
    t = name((ZERO, "e"), label="t")
    return Instance("degenerate", _cohen2_order(), t, (ZERO, t), EMPTY)


def fixtures() -> list[Instance]:
    return [one_point(), cohen2(), equivalent_bottoms(), degenerate()]


def _closure(n, pairs):
    rel = [[i == j for j in range(n)] for i in range(n)]
    for i, j in pairs:
        rel[i][j] = True
    for k in range(n):
        for i in range(n):
            if rel[i][k]:
                for j in range(n):
                    if rel[k][j]:
                        rel[i][j] = True
    return rel


def _canonical(rel):
    """Lexicographically least relation matrix over invariant-respecting relabelings."""
    n = len(rel)
    inv = [
        (sum(rel[j][i] for j in range(n)), sum(rel[i][j] for j in range(n))) for i in range(n)
    ]
    blocks = [
        [i for i in range(n) if inv[i] == v] for v in sorted(set(inv))
    ]
    best = None
    for parts in itertools.product(*(itertools.permutations(b) for b in blocks)):
        perm = [i for part in parts for i in part]
        key = tuple(rel[perm[i]][perm[j]] for i in range(n) for j in range(n))
        if best is None or key < best:
            best = key
    return best


@lru_cache(maxsize=None)
def _quasiorder_keys(n: int) -> tuple:
    # partial orders on k classes with a natural labeling (i <= j only if i < j),
    # each class blown up to a block of equivalent elements
    found = set()
    for k in range(1, n + 1):
        upper = [(i, j) for i in range(k) for j in range(i + 1, k)]
        posets = []
        for bits in range(1 << len(upper)):
            chosen = [upper[b] for b in range(len(upper)) if bits >> b & 1]
            rel = _closure(k, chosen)
            if sum(map(sum, rel)) - k == len(chosen):
                posets.append(rel)
        for sizes in itertools.product(range(1, n + 1), repeat=k):
            if sum(sizes) != n:
                continue
            owner = [c for c, sz in enumerate(sizes) for _ in range(sz)]
            for prel in posets:
                rel = [[prel[owner[i]][owner[j]] for j in range(n)] for i in range(n)]
                found.add(_canonical(rel))
    return tuple(sorted(found))


def all_quasiorders(max_n: int = 5, min_n: int = 1) -> list[Quasiorder]:
    """Every quasi-order with ``min_n..max_n`` elements, one per isomorphism type."""
    out = []
    for n in range(min_n, max_n + 1):
        ids = [f"p{i}" for i in range(n)]
        for key in _quasiorder_keys(n):
            pairs = [
                (ids[i], ids[j])
                for i in range(n)
                for j in range(n)
                if i != j and key[i * n + j]
            ]
            out.append(build_quasiorder(ids, pairs))
    return out


def _random_name(rng: random.Random, conds: list[str]) -> PName:
    kids = []
    for i in range(rng.randint(1, 2)):
        entries = [(ZERO, rng.choice(conds)) for _ in range(rng.randint(1, 2))]
        kids.append(name(*entries, label=f"s{i}"))
    entries = []
    if rng.random() < 0.85:
        entries.append((ZERO, rng.choice(conds)))
    for kid in kids:
        for _ in range(rng.randint(1, 2)):
            entries.append((kid, rng.choice(conds)))
    return name(*entries, label="t")


def sample_names(q: Quasiorder, count: int = 3, seed: int = 0, attempts: int = 60) -> list[PName]:
    """Forced-transitive names, rank <= 2, ``|pe t| <= 3``.

    Always starts with the empty name and ``{(zero, p)}`` for the first
    condition ``p``; the rest are random draws, deduplicated.
    """
    ctx = context(q)
    conds = list(q.elements)
    picked = [PName(label="t"), name((ZERO, conds[0]), label="t")]
    rng = random.Random(seed)
    for _ in range(attempts):
        if len(picked) >= count + 2:
            break
        t = _random_name(rng, conds)
        if t in picked or t.rank > 2 or len(potential_elements(t)) > 3:
            continue
        if ctx.forces_transitive(t):
            picked.append(t)
    return picked


def corpus(max_n: int = 5, names_per_order: int = 3, seed: int = 2024) -> list[Instance]:
    """Fixtures plus every quasi-order up to ``max_n`` with sampled names."""
    out = list(fixtures())
    for i, q in enumerate(all_quasiorders(max_n)):
        for j, t in enumerate(sample_names(q, names_per_order, seed=seed + i)):
            out.append(Instance(f"qo{len(q)}-{i}/t{j}", q, t))
    return out

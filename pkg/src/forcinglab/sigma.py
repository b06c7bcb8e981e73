"""Superconditions and the decreasing Σ-iteration.

For a transitive set ``X`` and a name ``t`` the engine enumerates the
superconditions ``<p, a>`` (a condition plus a finite assignment of elements
of ``X`` to potential elements of ``t``), cuts them down to the consistent
level ``Σ_0`` and then repeatedly removes every supercondition that cannot
be extended in the required ways inside the current level. The iteration
stops at the first repeated level; that fixpoint is nonempty exactly when
``X = t[G]`` for some generic ``G``.

Two readings of the extension requirement are available:

``separated`` (default)
    one witness for "meets every dense set", one witness per name ``s``
    (``s`` assigned, or forced out of ``t``), one witness per element ``x``
    of ``X`` (``x`` in the range).
``coupled``
    one witness for each triple (dense set, name, element) at once. When
    ``X`` or ``pe t`` is empty the triple quantifier is vacuous and nothing
    is ever removed, so this reading can report a nonempty fixpoint for an
    ``X`` that no generic produces.

"Meets every dense set" is evaluated with the cone criterion; pass
``dense="explicit"`` to enumerate dense sets instead (small posets only).

Internally a level is a list indexed by assignment; entry ``i`` is the
bitmask of conditions ``p`` with ``<p, assignments[i]>`` in the level.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Callable, Iterable, Mapping

from .config import DEFAULT_CAPS, Caps
from .errors import (
    CapExceededError,
    EmptyFixpointError,
    FixpointViolation,
    NotForcedTransitiveError,
    NotTransitiveError,
)
from .forcing import context
from .hf import HfSet, is_transitive
from .names import PName, interpret, potential_elements
from .order import Filter, Quasiorder, _bits, _dense_masks, generic_filters

__all__ = [
    "SEPARATED",
    "COUPLED",
    "VARIANTS",
    "Supercondition",
    "SigmaTrace",
    "Verdict",
    "SurveyRow",
    "GenericBuild",
    "ProbeReport",
    "SigmaEngine",
    "engine",
    "superconditions",
    "sc_leq",
    "sigma_level0",
    "sigma_step",
    "sigma_fixpoint",
    "sigma_levels",
    "check_generic_generated",
    "lambda_star",
    "classify_by_bound",
    "build_generic",
    "sigma_hat",
    "probe_open_question",
]

SEPARATED = "separated"
COUPLED = "coupled"
VARIANTS = (SEPARATED, COUPLED)


@dataclass(frozen=True)
class Supercondition:
    """A condition together with a finite assignment ``name -> element of X``.

    ``assign`` is a tuple of ``(name, value)`` pairs sorted by name.
    """

    cond: str
    assign: tuple[tuple[PName, HfSet], ...] = ()

    @classmethod
    def make(cls, cond: str, assignment: Mapping[PName, HfSet] | None = None) -> Supercondition:
        items = sorted((assignment or {}).items(), key=lambda kv: kv[0].sort_key)
        return cls(cond, tuple(items))

    @property
    def assignment(self) -> dict[PName, HfSet]:
        return dict(self.assign)

    @property
    def domain(self) -> frozenset[PName]:
        return frozenset(s for s, _ in self.assign)

    @property
    def range(self) -> frozenset[HfSet]:
        return frozenset(x for _, x in self.assign)

    def __str__(self):
        body = ", ".join(f"{s.label or s}↦{x}" for s, x in self.assign)
        return f"<{self.cond}, {{{body}}}>"


def sc_leq(q: Quasiorder, a: Supercondition, b: Supercondition) -> bool:
    """``a`` is stronger than ``b``: ``a.cond <= b.cond`` and ``a`` extends ``b``."""
    if not q.leq(a.cond, b.cond):
        return False
    amap = a.assignment
    return all(amap.get(s) == x for s, x in b.assign)


class SigmaEngine:
    """Precomputed tables for one ``(poset, X, t)`` instance."""

    def __init__(self, q: Quasiorder, X: HfSet, t: PName, caps: Caps = DEFAULT_CAPS):
        if not is_transitive(X):
            raise NotTransitiveError(f"X = {X} is not transitive")
        ctx = context(q)
        if not ctx.forces_transitive(t):
            raise NotForcedTransitiveError("the name t is not forced to be transitive")
        self.q, self.X, self.t, self.caps = q, X, t, caps
        self.pe = potential_elements(t)
        self.xs = X.children
        if len(self.pe) > caps.max_potential_elements:
            raise CapExceededError(
                f"|pe t| = {len(self.pe)} exceeds cap {caps.max_potential_elements}"
            )
        if len(self.xs) > caps.max_x_elements:
            raise CapExceededError(f"|X| = {len(self.xs)} exceeds cap {caps.max_x_elements}")
        k, m = len(self.pe), len(self.xs)
        self.k, self.m = k, m
        self.pe_index = {s: i for i, s in enumerate(self.pe)}
        self.x_index = {x: i for i, x in enumerate(self.xs)}

        in_mask = [[ctx.member_mask(a, b) for b in self.pe] for a in self.pe]
        dec = [[ctx.decides_mask(a, b) for b in self.pe] for a in self.pe]
        in_t = [ctx.member_mask(s, t) for s in self.pe]
        self.forced_out = self._forced_out_masks()
        xin = [[self.xs[u] in self.xs[v] for v in range(m)] for u in range(m)]

        # Enumerate assignments name by name; d-completeness only shrinks as
        # the domain grows, so a branch dies as soon as no condition is left.
        full = q.full
        assigns: list[tuple[int, ...]] = []
        complete: list[int] = []
        level0: list[int] = []

        def extend(i, a, comp, cons):
            if i == k:
                assigns.append(tuple(a))
                complete.append(comp)
                level0.append(cons)
                return
            a.append(-1)
            extend(i + 1, a, comp, cons)
            a.pop()
            dom = [j for j in range(i) if a[j] >= 0]
            comp_i = comp & in_t[i] & dec[i][i]
            for j in dom:
                comp_i &= dec[i][j] & dec[j][i]
            if not comp_i:
                return
            for v in range(m):
                c = cons & comp_i & (in_mask[i][i] if xin[v][v] else ~in_mask[i][i])
                for j in dom:
                    w = a[j]
                    c &= in_mask[i][j] if xin[v][w] else ~in_mask[i][j]
                    c &= in_mask[j][i] if xin[w][v] else ~in_mask[j][i]
                a.append(v)
                extend(i + 1, a, comp_i, c & full)
                a.pop()

        extend(0, [], full, full)
        self.assigns = assigns
        self.complete = complete
        self.level0 = level0
        self.a_index = {a: i for i, a in enumerate(assigns)}
        self.dom_mask = [sum(1 << i for i, v in enumerate(a) if v >= 0) for a in assigns]
        self.ran_mask = [sum(1 << v for v in set(a) if v >= 0) for a in assigns]
        self._supersets: dict[int, list[int]] = {}
        self._dense = None
        self._fixpoints: dict[tuple[str, str], tuple[list[list[int]], int]] = {}

    def _forced_out_masks(self) -> list[int]:
        """Per potential element ``s``: conditions forcing ``s ∉ t``."""
        ctx = context(self.q)
        return [ctx.nonmember_mask(s, self.t) for s in self.pe]

    def supersets(self, ai: int) -> list[int]:
        out = self._supersets.get(ai)
        if out is None:
            a = self.assigns[ai]
            choices = [range(-1, self.m) if v < 0 else (v,) for v in a]
            idx = self.a_index
            out = [idx[b] for b in itertools.product(*choices) if b in idx]
            self._supersets[ai] = out
        return out

    # conversion

    def to_sc(self, p: int, ai: int) -> Supercondition:
        a = self.assigns[ai]
        return Supercondition(
            self.q.elements[p],
            tuple((self.pe[i], self.xs[v]) for i, v in enumerate(a) if v >= 0),
        )

    def from_sc(self, sc: Supercondition) -> tuple[int, int] | None:
        """``(cond index, assignment index)``, or None if ``sc`` is not in dpa(X, t)."""
        a = [-1] * self.k
        for s, x in sc.assign:
            if s not in self.pe_index or x not in self.x_index:
                return None
            a[self.pe_index[s]] = self.x_index[x]
        ai = self.a_index.get(tuple(a))
        p = self.q.idx(sc.cond)
        if ai is None or not self.complete[ai] >> p & 1:
            return None
        return p, ai

    def to_set(self, level: list[int]) -> frozenset[Supercondition]:
        return frozenset(self.to_sc(p, ai) for ai, pm in enumerate(level) for p in _bits(pm))

    def from_set(self, scs: Iterable[Supercondition]) -> list[int]:
        level = [0] * len(self.assigns)
        for sc in scs:
            pa = self.from_sc(sc)
            if pa is None:
                raise ValueError(f"{sc} is not a supercondition for this instance")
            level[pa[1]] |= 1 << pa[0]
        return level

    def sort_key(self, p: int, ai: int):
        return (p, self.assigns[ai])

    # the iteration

    def _meets_dense(self, dense: str) -> Callable[[int], bool]:
        if dense == "cone":
            mins = self.q.minimal_masks
            return lambda E: any(c & ~E == 0 for c in mins)
        if dense == "explicit":
            if self._dense is None:
                if len(self.q) > 12:
                    raise CapExceededError("explicit dense-set evaluation needs <= 12 conditions")
                self._dense = _dense_masks(self.q)
            ds = self._dense
            return lambda E: all(D & E for D in ds)
        raise ValueError(f"unknown dense-set evaluation {dense!r}")

    def step(self, level: list[int], variant: str = SEPARATED, dense: str = "cone") -> list[int]:
        if variant not in VARIANTS:
            raise ValueError(f"unknown step variant {variant!r}")
        meets = self._meets_dense(dense)
        down = self.q.down
        k, m = self.k, self.m
        all_s, all_x = (1 << k) - 1, (1 << m) - 1
        out_t = self.forced_out
        dom_mask, ran_mask = self.dom_mask, self.ran_mask
        new = [0] * len(level)
        for ai, pm in enumerate(level):
            if not pm:
                continue
            sups = [(b, level[b]) for b in self.supersets(ai) if level[b]]
            keep = 0
            for p in _bits(pm):
                dp = down[p]
                ext = [(b, lm & dp) for b, lm in sups if lm & dp]
                if variant == SEPARATED:
                    E = ran = names = 0
                    for b, c in ext:
                        E |= c
                        ran |= ran_mask[b]
                        names |= dom_mask[b]
                        for s in range(k):
                            if c & out_t[s]:
                                names |= 1 << s
                    ok = meets(E) and ran == all_x and names == all_s
                else:
                    ok = True
                    for s in range(k):
                        for x in range(m):
                            E = 0
                            for b, c in ext:
                                if ran_mask[b] >> x & 1:
                                    E |= c if dom_mask[b] >> s & 1 else c & out_t[s]
                            if not meets(E):
                                ok = False
                                break
                        if not ok:
                            break
                if ok:
                    keep |= 1 << p
            new[ai] = keep
        return new

    def iterate(self, variant: str = SEPARATED, dense: str = "cone", max_steps: int | None = None):
        """Levels ``Σ_0, Σ_1, ...`` until the first repeat (or ``max_steps`` steps).

        Returns ``(levels, lam)`` where ``lam`` is the stabilization index,
        or None if ``max_steps`` ran out first.
        """
        key = (variant, dense)
        if key in self._fixpoints:
            levels, lam = self._fixpoints[key]
            if max_steps is None or max_steps >= lam + 1:
                n = len(levels) if max_steps is None else min(len(levels), max_steps + 1)
                return levels[:n], lam
            return levels[: max_steps + 1], None
        levels = [list(self.level0)]
        while True:
            if max_steps is not None and len(levels) > max_steps:
                return levels, None
            nxt = self.step(levels[-1], variant, dense)
            levels.append(nxt)
            if nxt == levels[-2]:
                lam = len(levels) - 2
                self._fixpoints[key] = (levels, lam)
                return levels, lam

    def dpa_size(self) -> int:
        return sum(bin(c).count("1") for c in self.complete)


@lru_cache(maxsize=512)
def engine(q: Quasiorder, X: HfSet, t: PName, caps: Caps = DEFAULT_CAPS) -> SigmaEngine:
    """Cached :class:`SigmaEngine` for an instance."""
    return SigmaEngine(q, X, t, caps)


@dataclass(frozen=True)
class SigmaTrace:
    """The levels ``Σ_0 ⊇ Σ_1 ⊇ ...`` of one iteration.

    ``levels`` runs up to ``lam + 1``, so its last two entries are equal.
    """

    lam: int
    variant: str
    _engine: SigmaEngine = field(repr=False, compare=False)
    _raw: tuple = field(repr=False, compare=False)

    @cached_property
    def levels(self) -> tuple[frozenset[Supercondition], ...]:
        return tuple(self._engine.to_set(lv) for lv in self._raw)

    @cached_property
    def fixpoint(self) -> frozenset[Supercondition]:
        return self._engine.to_set(self._raw[self.lam])

    @property
    def level_sizes(self) -> list[int]:
        return [sum(bin(c).count("1") for c in lv) for lv in self._raw]

    @property
    def nonempty(self) -> bool:
        return any(self._raw[self.lam])

    def least_member(self) -> Supercondition | None:
        eng, fix = self._engine, self._raw[self.lam]
        best = min(
            ((p, ai) for ai, pm in enumerate(fix) for p in _bits(pm)),
            key=lambda pa: eng.sort_key(*pa),
            default=None,
        )
        return None if best is None else eng.to_sc(*best)


def superconditions(q: Quasiorder, X: HfSet, t: PName, caps: Caps = DEFAULT_CAPS) -> frozenset[Supercondition]:
    """All of dpa(X, t)."""
    eng = engine(q, X, t, caps)
    return eng.to_set(eng.complete)


def sigma_level0(q: Quasiorder, X: HfSet, t: PName, caps: Caps = DEFAULT_CAPS) -> frozenset[Supercondition]:
    eng = engine(q, X, t, caps)
    return eng.to_set(eng.level0)


def sigma_step(
    q: Quasiorder,
    level: Iterable[Supercondition],
    X: HfSet,
    t: PName,
    variant: str = SEPARATED,
    dense: str = "cone",
    caps: Caps = DEFAULT_CAPS,
) -> frozenset[Supercondition]:
    eng = engine(q, X, t, caps)
    return eng.to_set(eng.step(eng.from_set(level), variant, dense))


def sigma_fixpoint(
    q: Quasiorder,
    X: HfSet,
    t: PName,
    variant: str = SEPARATED,
    dense: str = "cone",
    caps: Caps = DEFAULT_CAPS,
) -> SigmaTrace:
    eng = engine(q, X, t, caps)
    levels, lam = eng.iterate(variant, dense)
    return SigmaTrace(lam, variant, eng, tuple(levels))


def sigma_levels(
    q: Quasiorder,
    X: HfSet,
    t: PName,
    max_steps: int,
    variant: str = SEPARATED,
    caps: Caps = DEFAULT_CAPS,
) -> list[frozenset[Supercondition]]:
    """``Σ_0 .. Σ_n`` with ``n <= max_steps``; stops early at a repeat."""
    eng = engine(q, X, t, caps)
    levels, _ = eng.iterate(variant, max_steps=max_steps)
    return [eng.to_set(lv) for lv in levels]


@dataclass(frozen=True)
class Verdict:
    generic_generated: bool
    lam: int
    witness: Supercondition | None = None
    oracle_agreement: bool | None = None


def check_generic_generated(
    q: Quasiorder,
    X: HfSet,
    t: PName,
    variant: str = SEPARATED,
    with_oracle: bool = False,
    caps: Caps = DEFAULT_CAPS,
) -> Verdict:
    """Decide whether ``X = t[G]`` for some generic ``G`` via the fixpoint."""
    trace = sigma_fixpoint(q, X, t, variant, caps=caps)
    yes = trace.nonempty
    agreement = None
    if with_oracle:
        from .oracle import generic_sets

        agreement = (X in generic_sets(q, t).values) == yes
    return Verdict(yes, trace.lam, trace.least_member() if yes else None, agreement)


def lambda_star(q: Quasiorder, t: PName, variant: str = SEPARATED, caps: Caps = DEFAULT_CAPS) -> int:
    """Least strict upper bound of ``λ(t[G], t)`` over all generics ``G``."""
    if not context(q).forces_transitive(t):
        raise NotForcedTransitiveError("the name t is not forced to be transitive")
    values = {interpret(t, G) for G in generic_filters(q)}
    return 1 + max(sigma_fixpoint(q, X, t, variant, caps=caps).lam for X in values)


@dataclass(frozen=True)
class SurveyRow:
    X: HfSet
    generic_generated: bool
    levels_computed: int


def classify_by_bound(
    q: Quasiorder,
    t: PName,
    max_rank: int,
    max_size: int,
    variant: str = SEPARATED,
    caps: Caps = DEFAULT_CAPS,
) -> list[SurveyRow]:
    """Classify bounded transitive sets using only ``Σ_0 .. Σ_{λ*+1}``.

    ``X`` is generic-generated iff ``Σ_{λ*} = Σ_{λ*+1} ≠ ∅``.
    """
    from .hf import enumerate_transitive_sets

    bound = lambda_star(q, t, variant, caps)
    rows = []
    for X in enumerate_transitive_sets(max_rank, max_size, caps):
        eng = SigmaEngine(q, X, t, caps)  # fresh: no fixpoint cache to lean on
        levels, _ = eng.iterate(variant, max_steps=bound + 1)
        computed = len(levels)
        if computed < bound + 2:
            # stabilized early; the remaining levels repeat the last one
            levels = levels + [levels[-1]] * (bound + 2 - len(levels))
        yes = levels[bound] == levels[bound + 1] and any(levels[bound])
        rows.append(SurveyRow(X, yes, computed))
    return rows


@dataclass(frozen=True)
class GenericBuild:
    """Result of the fusion construction: a generic filter and the union assignment."""

    filter: Filter
    final: Supercondition
    assignment: dict = field(hash=False)
    steps: tuple[tuple[str, Supercondition], ...] = ()
    value: HfSet | None = None


def build_generic(
    q: Quasiorder,
    start: Supercondition,
    X: HfSet,
    t: PName,
    variant: str = SEPARATED,
    caps: Caps = DEFAULT_CAPS,
) -> GenericBuild:
    """Extend ``start`` inside the fixpoint until it pins down a generic.

    Requirements are handled in a fixed order: each ``x`` in ``X`` (by code)
    enters the range, each ``s`` in ``pe t`` is assigned or forced out of
    ``t``, then the condition descends to a minimal class. Every step takes
    the canonically least extension in the fixpoint.
    """
    eng = engine(q, X, t, caps)
    levels, lam = eng.iterate(variant)
    fix = levels[lam]
    here = eng.from_sc(start)
    if here is None or not fix[here[1]] >> here[0] & 1:
        raise EmptyFixpointError(f"start {start} is not in the fixpoint")
    down = q.down
    minimal = 0
    for cls in q.minimal_masks:
        minimal |= cls

    def advance(cur, ok, what):
        p, ai = cur
        cands = [
            (r, b)
            for b in eng.supersets(ai)
            for r in _bits(fix[b] & down[p])
            if ok(r, b)
        ]
        if not cands:
            raise FixpointViolation(f"no extension of {eng.to_sc(p, ai)} for {what}")
        return min(cands, key=lambda rb: eng.sort_key(*rb))

    steps = []
    cur = here
    for xi, x in enumerate(eng.xs):
        cur = advance(cur, lambda r, b: eng.ran_mask[b] >> xi & 1, f"x = {x}")
        steps.append((f"range contains {x}", eng.to_sc(*cur)))
    for si, s in enumerate(eng.pe):
        cur = advance(
            cur,
            lambda r, b: eng.dom_mask[b] >> si & 1 or eng.forced_out[si] >> r & 1,
            f"name {s}",
        )
        steps.append((f"decide {s.label or s}", eng.to_sc(*cur)))
    cur = advance(cur, lambda r, b: minimal >> r & 1, "descent to a minimal condition")
    steps.append(("descend to a minimal class", eng.to_sc(*cur)))

    final = eng.to_sc(*cur)
    G = Filter(q.above(final.cond))
    value = interpret(t, G)
    assignment = final.assignment
    if value != X or set(assignment.values()) != set(X.children) or start.cond not in G:
        raise FixpointViolation(f"fusion from {start} produced t[G] = {value}, expected {X}")
    return GenericBuild(G, final, assignment, tuple(steps), value)


def sigma_hat(
    q: Quasiorder, X: HfSet, t: PName, variant: str = SEPARATED, caps: Caps = DEFAULT_CAPS
) -> frozenset[str]:
    """Conditions occurring in some fixpoint member."""
    eng = engine(q, X, t, caps)
    levels, lam = eng.iterate(variant)
    mask = 0
    for pm in levels[lam]:
        mask |= pm
    return q.ids(mask)


@dataclass(frozen=True)
class ProbeReport:
    X: HfSet
    sigma_hat: frozenset[str]
    candidates: tuple[tuple[Filter, HfSet, bool], ...]

    @property
    def counterexamples(self) -> list[Filter]:
        return [G for G, _, ok in self.candidates if not ok]

    @property
    def summary(self) -> str:
        bad = self.counterexamples
        if not bad:
            return "no counterexample found"
        return f"counterexample: G = {bad[0]} gives t[G] ≠ X"


def probe_open_question(
    q: Quasiorder, X: HfSet, t: PName, variant: str = SEPARATED, caps: Caps = DEFAULT_CAPS
) -> ProbeReport:
    """For every generic ``G`` inside Σ̂(X, t), record whether ``t[G] = X``.

    Purely observational; nothing here is asserted.
    """
    hat = sigma_hat(q, X, t, variant, caps)
    if not hat:
        raise EmptyFixpointError("the fixpoint is empty; nothing to probe")
    rows = []
    for G in generic_filters(q):
        if G.members <= hat:
            v = interpret(t, G)
            rows.append((G, v, v == X))
    return ProbeReport(X, hat, tuple(rows))

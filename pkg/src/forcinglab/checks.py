"""Property checks over one instance.

Each check returns a :class:`CheckResult`. They work on the public objects
(superconditions, filters, HF sets) rather than engine internals, so they
can catch engine bugs instead of repeating them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

from .forcing import context, forces_membership
from .hf import HfSet, enumerate_transitive_sets
from .names import PName, interpret, potential_elements
from .order import (
    Quasiorder,
    _bits,
    generic_filters,
    generic_filters_bruteforce,
    meets_every_dense,
    meets_every_dense_bruteforce,
)
from .sigma import (
    COUPLED,
    SEPARATED,
    build_generic,
    classify_by_bound,
    engine,
    lambda_star,
    probe_open_question,
    sc_leq,
    sigma_fixpoint,
)
from .oracle import check_sf, check_sgG, generic_sets

__all__ = [
    "CheckResult",
    "check_antitone",
    "check_extension_property",
    "check_fusion",
    "check_lambda_bound",
    "check_survey",
    "check_forcing_bridge",
    "check_cone_criterion",
    "check_cone_in_step",
    "check_generics_exact",
    "verify_instance",
]


@dataclass
class CheckResult:
    name: str
    ok: bool
    checked: int = 0
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.ok

    def fail(self, item):
        self.ok = False
        self.failures.append(item)


def check_antitone(q: Quasiorder, X: HfSet, t: PName, variant: str = SEPARATED) -> CheckResult:
    """Each level is contained in the previous one; the last two coincide."""
    res = CheckResult("antitone levels", True)
    levels = sigma_fixpoint(q, X, t, variant).levels
    for g in range(len(levels) - 1):
        res.checked += 1
        if not levels[g + 1] <= levels[g]:
            res.fail((X, g))
    if levels[-1] != levels[-2]:
        res.fail((X, "last two levels differ"))
    return res


def check_extension_property(
    q: Quasiorder, X: HfSet, t: PName, variant: str = SEPARATED, explicit: bool = False
) -> CheckResult:
    """Every fixpoint member has the required extensions inside the fixpoint."""
    res = CheckResult("fixpoint extension property", True)
    meets = meets_every_dense_bruteforce if explicit else meets_every_dense
    fix = sigma_fixpoint(q, X, t, variant).fixpoint
    pe = potential_elements(t)
    out_of_t = {s: q.ids(context(q).nonmember_mask(s, t)) for s in pe}
    for sc in fix:
        res.checked += 1
        exts = [e for e in fix if sc_leq(q, e, sc)]

        def covers(e, s):
            return s in e.domain or e.cond in out_of_t[s]

        if variant == COUPLED:
            ok = all(
                meets(q, {e.cond for e in exts if x in e.range and covers(e, s)})
                for s in pe
                for x in X
            )
        else:
            ok = (
                meets(q, {e.cond for e in exts})
                and all(any(x in e.range for e in exts) for x in X)
                and all(any(covers(e, s) for e in exts) for s in pe)
            )
        if not ok:
            res.fail(sc)
    return res


def check_fusion(q: Quasiorder, X: HfSet, t: PName, variant: str = SEPARATED) -> CheckResult:
    """The fusion construction succeeds from every fixpoint member."""
    res = CheckResult("generic construction", True)
    for sc in sorted(sigma_fixpoint(q, X, t, variant).fixpoint, key=str):
        res.checked += 1
        try:
            out = build_generic(q, sc, X, t, variant)
        except Exception as exc:  # report, don't abort the sweep
            res.fail((sc, repr(exc)))
            continue
        G = out.filter
        if sc.cond not in G or interpret(t, G) != X or G not in generic_filters(q):
            res.fail((sc, G))
    return res


def check_lambda_bound(q: Quasiorder, t: PName, variant: str = SEPARATED) -> CheckResult:
    res = CheckResult("uniform bound on stabilization", True)
    bound = lambda_star(q, t, variant)
    for G in generic_filters(q):
        res.checked += 1
        X = interpret(t, G)
        if not sigma_fixpoint(q, X, t, variant).lam < bound:
            res.fail((G, X))
    return res


def check_survey(
    q: Quasiorder, t: PName, max_rank: int = 3, max_size: int = 5, variant: str = SEPARATED
) -> CheckResult:
    """Truncated classification agrees with the full fixpoint and with the oracle."""
    res = CheckResult("bounded classification", True)
    bound = lambda_star(q, t, variant)
    values = generic_sets(q, t).values
    for row in classify_by_bound(q, t, max_rank, max_size, variant):
        res.checked += 1
        full = sigma_fixpoint(q, row.X, t, variant).nonempty
        if row.generic_generated != full or row.levels_computed > bound + 2:
            res.fail(row)
        if variant == SEPARATED and row.generic_generated != (row.X in values):
            res.fail(row)
    return res


def check_forcing_bridge(q: Quasiorder, names: Iterable[PName]) -> CheckResult:
    """Semantic forcing of ``s ∈ u`` iff the recursive clauses hold densely below."""
    res = CheckResult("semantic/syntactic forcing bridge", True)
    ctx = context(q)
    names = list(names)
    for s, u in itertools.product(names, repeat=2):
        syn = ctx.syn_in_mask(s, u)
        for p in q.elements:
            res.checked += 1
            below = q.down[q.idx(p)]
            dense_below = all(q.down[r] & syn for r in _bits(below))
            if forces_membership(q, p, s, u) != dense_below:
                res.fail((p, s, u))
    return res


def check_cone_criterion(q: Quasiorder) -> CheckResult:
    """Cone test equals explicit dense-set enumeration, on every subset."""
    res = CheckResult("cone criterion", True)
    for E in range(1 << len(q)):
        res.checked += 1
        if meets_every_dense(q, E) != meets_every_dense_bruteforce(q, E):
            res.fail(q.ids(E))
    return res


def check_cone_in_step(q: Quasiorder, X: HfSet, t: PName, variant: str = SEPARATED) -> CheckResult:
    """The iteration gives the same levels with either dense-set evaluation."""
    res = CheckResult("cone criterion inside the step", True)
    eng = engine(q, X, t)
    level = list(eng.level0)
    while True:
        res.checked += 1
        a = eng.step(level, variant, "cone")
        b = eng.step(level, variant, "explicit")
        if a != b:
            res.fail((X, res.checked))
            break
        if a == level:
            break
        level = a
    return res


def check_generics_exact(q: Quasiorder) -> CheckResult:
    res = CheckResult("generic filters exact", True, 1)
    if generic_filters(q) != generic_filters_bruteforce(q):
        res.fail(q)
    return res


def verify_instance(
    q: Quasiorder,
    t: PName,
    X: HfSet | None = None,
    variant: str = SEPARATED,
    max_rank: int = 3,
    max_size: int = 5,
) -> list[CheckResult]:
    """Run every property check on ``(q, t)``; ``X`` defaults to every surveyed set."""
    Xs = [X] if X is not None else enumerate_transitive_sets(max_rank, max_size)
    results = []

    corr = CheckResult("fixpoint nonempty iff some generic gives X", True)
    anti = CheckResult("antitone levels", True)
    ext = CheckResult("fixpoint extension property", True)
    fus = CheckResult("generic construction", True)
    for Y in Xs:
        corr.checked += 1
        if not check_sf(q, t, Y, variant):
            corr.fail(Y)
        for agg, part in (
            (anti, check_antitone(q, Y, t, variant)),
            (ext, check_extension_property(q, Y, t, variant)),
            (fus, check_fusion(q, Y, t, variant)),
        ):
            agg.checked += part.checked
            if not part.ok:
                agg.ok = False
                agg.failures.extend(part.failures)
    results += [corr, anti, ext, fus]

    sg = check_sgG(q, t, variant)
    results.append(CheckResult("G-compatible superconditions survive", sg.ok, sg.checked, sg.violations))
    results.append(check_lambda_bound(q, t, variant))
    if X is None:
        results.append(check_survey(q, t, max_rank, max_size, variant))
    results.append(check_forcing_bridge(q, [t, *potential_elements(t)]))
    if len(q) <= 10:
        results.append(check_generics_exact(q))
    probes = CheckResult("open-question probe runs", True)
    for Y in Xs:
        if sigma_fixpoint(q, Y, t, variant).nonempty:
            probes.checked += 1
            probe_open_question(q, Y, t, variant)
    results.append(probes)
    return results

"""Brute-force ground truth.

Everything here is computed from the generic filters and name
interpretation alone. The Σ engine is consulted only for the answer being
checked, never for intermediate results.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .hf import HfSet, is_transitive
from .names import PName, interpret, potential_elements
from .order import Filter, Quasiorder, generic_filters
from .errors import NotForcedTransitiveError, NotTransitiveError

__all__ = ["GenericCatalog", "PropertyReport", "generic_sets", "check_sf", "check_sgG"]


@dataclass(frozen=True)
class GenericCatalog:
    entries: tuple[tuple[Filter, HfSet], ...]
    values: frozenset[HfSet]

    def sorted_values(self) -> list[HfSet]:
        return sorted(self.values)


@dataclass
class PropertyReport:
    ok: bool
    checked: int = 0
    violations: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def generic_sets(q: Quasiorder, t: PName) -> GenericCatalog:
    """``t[G]`` for every generic ``G``, and the set of distinct values."""
    entries = tuple((G, interpret(t, G)) for G in generic_filters(q))
    if not all(is_transitive(v) for _, v in entries):
        raise NotForcedTransitiveError("the name t is not forced to be transitive")
    return GenericCatalog(entries, frozenset(v for _, v in entries))


def check_sf(q: Quasiorder, t: PName, X: HfSet, variant: str = "separated") -> bool:
    """The fixpoint is nonempty exactly when some generic gives ``t[G] = X``."""
    from .sigma import sigma_fixpoint

    if not is_transitive(X):
        raise NotTransitiveError(f"X = {X} is not transitive")
    expected = X in generic_sets(q, t).values
    return expected == sigma_fixpoint(q, X, t, variant).nonempty


def check_sgG(q: Quasiorder, t: PName, variant: str = "separated") -> PropertyReport:
    """Every G-compatible supercondition with condition in ``G`` lies in Σ(t[G], t).

    Violations are recorded as ``(G, supercondition)`` pairs.
    """
    from .sigma import Supercondition, sigma_fixpoint

    catalog = generic_sets(q, t)
    generics = [G for G, _ in catalog.entries]
    pe = potential_elements(t)
    # values[s][g] = s[G_g], computed directly
    values = {s: [interpret(s, G) for G in generics] for s in pe + [t]}

    def forced(p, pred):
        return all(pred(g) for g, G in enumerate(generics) if p in G)

    def complete(p, dom):
        for s in dom:
            if not forced(p, lambda g: values[s][g] in values[t][g]):
                return False
        for s, s2 in itertools.product(dom, repeat=2):
            yes = forced(p, lambda g: values[s][g] in values[s2][g])
            no = forced(p, lambda g: values[s][g] not in values[s2][g])
            if not (yes or no):
                return False
        return True

    report = PropertyReport(True)
    for g, (G, X) in enumerate(catalog.entries):
        fix = sigma_fixpoint(q, X, t, variant).fixpoint
        usable = [s for s in pe if values[s][g] in X]
        for r in range(len(usable) + 1):
            for dom in itertools.combinations(usable, r):
                a = {s: values[s][g] for s in dom}
                for p in sorted(G.members):
                    if not complete(p, dom):
                        continue
                    sc = Supercondition.make(p, a)
                    report.checked += 1
                    if sc not in fix:
                        report.ok = False
                        report.violations.append((G, sc))
    return report

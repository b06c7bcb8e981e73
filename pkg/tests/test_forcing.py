import itertools


from forcinglab.corpus import all_quasiorders, sample_names
from forcinglab.forcing import (
    context,
    decides,
    forces_equality_syntactic,
    forces_membership,
    forces_membership_syntactic,
    forces_nonmembership,
    forces_transitive,
    is_d_complete,
)
from forcinglab.names import PName, interpret, name, potential_elements
from forcinglab.order import generic_filters


def brute_forces(q, p, pred):
    return all(pred(G) for G in generic_filters(q) if p in G)


class TestExamples:
    def test_membership(self, cohen2):
        q = cohen2.q
        zero, s0, t = cohen2.names
        assert forces_membership(q, "e", zero, t)
        assert forces_membership(q, "e", s0, t)
        assert not forces_membership(q, "b", zero, s0)
        assert forces_nonmembership(q, "b", zero, s0)

    def test_nonmembership(self, cohen2):
        q = cohen2.q
        zero, s0, t = cohen2.names
        assert all(forces_nonmembership(q, p, zero, zero) for p in q.elements)
        assert not forces_nonmembership(q, "a", zero, s0)
        assert forces_membership(q, "a", zero, s0)
        assert not forces_nonmembership(q, "e", zero, s0)
        assert not forces_membership(q, "e", zero, s0)

    def test_decides(self, cohen2):
        q = cohen2.q
        zero, s0, t = cohen2.names
        assert not decides(q, "e", zero, s0)
        assert decides(q, "a", zero, s0)
        assert all(decides(q, p, zero, zero) for p in q.elements)

    def test_d_complete(self, cohen2):
        q = cohen2.q
        zero, s0, t = cohen2.names
        assert all(is_d_complete(q, p, [], t) for p in q.elements)
        assert not is_d_complete(q, "e", [zero, s0], t)
        assert is_d_complete(q, "b", [zero, s0], t)

    def test_forces_transitive(self, cohen2):
        q = cohen2.q
        zero, s0, t = cohen2.names
        assert forces_transitive(q, PName())
        assert forces_transitive(q, t)
        assert not forces_transitive(q, name((s0, "e")))

    def test_syntactic(self, cohen2):
        q = cohen2.q
        zero, s0, t = cohen2.names
        assert not any(forces_membership_syntactic(q, p, zero, zero) for p in q.elements)
        assert forces_membership_syntactic(q, "a", zero, s0)
        assert not forces_membership_syntactic(q, "e", zero, s0)
        assert forces_equality_syntactic(q, "e", zero, zero)


def instances(max_n=4, per=3):
    for i, q in enumerate(all_quasiorders(max_n)):
        for t in sample_names(q, per, seed=100 + i):
            yield q, t


class TestProperties:
    def test_semantic_matches_definition(self):
        for q, t in instances(3):
            names = [t, *potential_elements(t)]
            for s, u in itertools.product(names, repeat=2):
                for p in q.elements:
                    expect = brute_forces(q, p, lambda G: interpret(s, G) in interpret(u, G))
                    assert forces_membership(q, p, s, u) == expect

    def test_persistence(self):
        for q, t in instances(4):
            names = [t, *potential_elements(t)]
            for s, u in itertools.product(names, repeat=2):
                for p, r in itertools.product(q.elements, repeat=2):
                    if q.leq(r, p):
                        if forces_membership(q, p, s, u):
                            assert forces_membership(q, r, s, u)
                        if forces_nonmembership(q, p, s, u):
                            assert forces_nonmembership(q, r, s, u)

    def test_minimal_conditions_decide_everything(self):
        for q, t in instances(4):
            names = [t, *potential_elements(t)]
            minimal = set().union(*(q.ids(m) for m in q.minimal_masks))
            for s, u in itertools.product(names, repeat=2):
                assert all(decides(q, p, s, u) for p in minimal)

    def test_bridge(self):
        for q, t in instances(5, 2):
            names = [t, *potential_elements(t)]
            for s, u in itertools.product(names, repeat=2):
                for p in q.elements:
                    below = q.below(p)
                    syn = {r for r in below if forces_membership_syntactic(q, r, s, u)}
                    dense = all(q.below(r) & syn for r in below)
                    assert forces_membership(q, p, s, u) == dense

    def test_memo_is_transparent(self, cohen2):
        q = cohen2.q
        zero, s0, t = cohen2.names
        fresh = type(context(q))(q)
        for s, u in itertools.product(cohen2.names, repeat=2):
            assert fresh.member_mask(s, u) == context(q).member_mask(s, u)

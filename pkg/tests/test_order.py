import pytest

from forcinglab.corpus import all_quasiorders
from forcinglab.errors import CapExceededError, DuplicateIdError, UnknownIdError
from forcinglab.order import (
    Filter,
    build_quasiorder,
    generic_filters,
    generic_filters_bruteforce,
    is_dense,
    is_filter,
    meets_every_dense,
    meets_every_dense_bruteforce,
    minimal_classes,
)
from forcinglab.config import Caps


def up(q, p):
    return Filter(q.above(p))


class TestBuild:
    def test_one_point(self):
        q = build_quasiorder(["e"])
        assert q.leq("e", "e")
        assert len(q) == 1

    def test_cohen2_closure(self, cohen2):
        q = cohen2.q
        assert q.leq("aa", "e") and q.leq("bb", "e") and q.leq("ab", "a")
        assert not q.leq("aa", "b") and not q.leq("e", "a") and not q.leq("a", "b")
        assert q.above("aa") == {"aa", "a", "e"}
        assert q.below("e") == set(q.elements)

    def test_cycle_gives_equivalence(self):
        q = build_quasiorder(["p", "q"], [("p", "q"), ("q", "p")])
        assert q.leq("p", "q") and q.leq("q", "p") and q.equivalent("p", "q")

    def test_reflexive_generator_is_harmless(self):
        q = build_quasiorder(["a", "b"], [("a", "a")])
        assert q == build_quasiorder(["a", "b"])

    def test_errors(self):
        with pytest.raises(UnknownIdError):
            build_quasiorder(["a"], [("a", "z")])
        with pytest.raises(DuplicateIdError):
            build_quasiorder(["a", "a"])
        with pytest.raises(CapExceededError):
            build_quasiorder([str(i) for i in range(5)], caps=Caps(max_conditions=4))

    def test_relation_matrix_is_a_quasi_order(self, small_orders):
        for q in small_orders:
            m = q.relation_matrix()
            assert m.diagonal().all()
            assert ((m.astype(int) @ m.astype(int) > 0) <= m).all()


class TestDense:
    def test_everything_is_dense(self, cohen2):
        assert is_dense(cohen2.q, cohen2.q.elements)

    def test_leaves(self, cohen2):
        assert is_dense(cohen2.q, ["aa", "ab", "ba", "bb"])

    def test_not_dense(self, cohen2):
        assert not is_dense(cohen2.q, ["a"])


class TestMinimalAndGeneric:
    def test_one_point(self, one_point):
        assert minimal_classes(one_point.q) == [{"e"}]
        assert generic_filters(one_point.q) == [Filter(frozenset({"e"}))]

    def test_cohen2(self, cohen2):
        q = cohen2.q
        assert minimal_classes(q) == [{"aa"}, {"ab"}, {"ba"}, {"bb"}]
        expected = generic_filters_bruteforce(q)  # all 2^7 subsets
        assert expected == [up(q, "aa"), up(q, "ab"), up(q, "ba"), up(q, "bb")]
        assert generic_filters(q) == expected

    def test_equivalent_bottoms(self, eq_bottoms):
        q = eq_bottoms.q
        assert minimal_classes(q) == [{"p", "q"}]
        expected = generic_filters_bruteforce(q)
        assert expected == [Filter(frozenset({"p", "q", "e"}))]
        assert generic_filters(q) == expected

    def test_exact_on_all_small_orders(self, small_orders):
        assert len(small_orders) == 185
        for q in small_orders:
            assert generic_filters(q) == generic_filters_bruteforce(q), q

    def test_generics_are_filters_with_one_minimal_class(self, small_orders):
        for q in small_orders:
            classes = minimal_classes(q)
            gens = generic_filters(q)
            assert len(gens) == len(classes)
            for G in gens:
                assert is_filter(q, G.members)
                assert sum(1 for c in classes if c <= G.members) == 1

    def test_is_filter(self, cohen2):
        q = cohen2.q
        assert is_filter(q, {"a", "e"})
        assert not is_filter(q, {"a"})  # not upward closed
        assert not is_filter(q, {"a", "b", "e"})  # a, b have no common lower bound
        assert not is_filter(q, set())


class TestConeCriterion:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_matches_enumeration(self, n):
        for q in all_quasiorders(n, min_n=n):
            for E in range(1 << n):
                assert meets_every_dense(q, E) == meets_every_dense_bruteforce(q, E)

    def test_ids_interface(self, cohen2):
        q = cohen2.q
        assert meets_every_dense(q, {"aa", "a"})
        assert not meets_every_dense(q, {"a", "b", "e"})
        assert meets_every_dense_bruteforce(q, {"aa"})

    def test_filter_meets_dense_iff_contains_cone(self):
        # a set meets every dense set iff it includes a full cone
        for q in all_quasiorders(4):
            for E in range(1 << len(q)):
                has_cone = any(d & ~E == 0 for d in q.down)
                assert meets_every_dense_bruteforce(q, E) == has_cone

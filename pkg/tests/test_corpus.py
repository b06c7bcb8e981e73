import pytest

from forcinglab.corpus import all_quasiorders, corpus, fixtures, sample_names
from forcinglab.forcing import forces_transitive
from forcinglab.names import potential_elements


@pytest.mark.parametrize("n,count", [(1, 1), (2, 3), (3, 9), (4, 33), (5, 139)])
def test_quasiorder_counts(n, count):
    assert len(all_quasiorders(n, min_n=n)) == count


def test_pairwise_non_isomorphic_small():
    import itertools

    for n in (2, 3):
        seen = set()
        for q in all_quasiorders(n, min_n=n):
            m = q.relation_matrix()
            key = min(
                tuple(m[p][:, p].flatten()) for p in map(list, itertools.permutations(range(n)))
            )
            assert key not in seen
            seen.add(key)


def test_sampled_names_meet_bounds():
    for i, q in enumerate(all_quasiorders(4)):
        names = sample_names(q, 3, seed=i)
        assert len(names) == len(set(names))
        for t in names:
            assert t.rank <= 2 and len(potential_elements(t)) <= 3
            assert forces_transitive(q, t)


def test_corpus_is_deterministic_and_large():
    a, b = corpus(), corpus()
    assert [(i.label, i.t) for i in a] == [(i.label, i.t) for i in b]
    assert len(a) >= 200
    assert [i.label for i in a[:4]] == [f.label for f in fixtures()]

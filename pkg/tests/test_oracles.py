import math

from qhook.forests import h_tree, star_tree
from qhook.oracles import (
    SUITES,
    bw_sweep,
    chain_suite,
    cumulant_suite,
    forest_suite,
    labeling_suite,
    partitions,
    pp_suite,
    ssyt_suite,
    syt_suite,
)


def test_partition_generator_counts():
    assert [sum(1 for _ in partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_small_suites_pass():
    for res in (syt_suite(5), ssyt_suite(4, 3), pp_suite(8), forest_suite(5), cumulant_suite(4), chain_suite(5)):
        assert res.passed, res.failures
        assert res.cases > 0


def test_labeling_suite_small():
    res = labeling_suite(5)
    assert res.passed
    forests_per_size = [1, 2, 4, 9, 20]
    assert res.cases == sum(f * math.factorial(n) for n, f in enumerate(forests_per_size, 1))
    # some irregular labelings satisfy the inv identity anyway; they are notes, not failures
    assert res.to_json()["passed"]


def test_bw_sweep_flags_nothing_on_natural_labelings():
    for tree in (h_tree(6, 4), star_tree(5)):
        cases, fails, _ = bw_sweep(tree, [tuple(range(tree.n, 0, -1))])
        assert cases == 1 and not fails


def test_registry_names():
    assert set(SUITES) == {"syt", "ssyt", "pp", "forest", "cumulants", "chain", "labelings"}

import random

import pytest

from conftest import path_graph, star_graph
from rbsep.errors import NotATree, WrongClassSize, XIsLeaf
from rbsep.exact import maxsep_exact
from rbsep.generators import gen_random_tree, gen_spider
from rbsep.graphs import Coloring, Graph, verify_rb_separating, verify_separating
from rbsep.trees import (
    ns3_vertices,
    parity_sets,
    single_red_sep,
    tree_all_pairs_construct,
    tree_profile,
    tree_rb_construct,
)


def test_tree_profile_examples():
    p6 = tree_profile(path_graph(6))
    assert p6.leaves == (0, 5)
    assert p6.supports == (1, 4)
    assert p6.s_class(1) == (1, 4)
    assert p6.s_plus == ()

    star = tree_profile(star_graph(5))
    assert star.leaf_count == 4
    assert star.supports == (0,)
    assert star.s_class(4) == (0,)

    spider2 = tree_profile(gen_spider(2)[0])
    assert spider2.support_count == 2
    assert spider2.leaf_count == 2


def test_tree_profile_rejects_non_trees():
    with pytest.raises(NotATree):
        tree_profile(Graph.from_edges(3, [(0, 1)]))  # disconnected
    with pytest.raises(NotATree):
        tree_profile(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))  # cycle


def test_single_red_sep_examples():
    p5 = path_graph(5)
    s = single_red_sep(p5, Coloring.from_red(5, [2]))
    assert s == (1, 3)  # two neighbors of the internal red vertex
    p3 = path_graph(3)
    assert single_red_sep(p3, Coloring.from_red(3, [0])) == (0, 2)
    with pytest.raises(WrongClassSize):
        single_red_sep(p5, Coloring.from_red(5, [0, 1]))


def test_single_red_sep_random():
    rng = random.Random(0)
    for _ in range(200):
        n = rng.randint(3, 30)
        t = gen_random_tree(n, rng.randrange(1 << 30))
        v = rng.randrange(n)
        c = Coloring(n, 1 << v)
        if rng.random() < 0.5:
            c = c.swapped()
        s = single_red_sep(t, c)
        assert len(s) <= 2
        assert verify_rb_separating(t, c, s) is None


def test_parity_sets_p6():
    c1, c2 = parity_sets(path_graph(6), 2)
    assert verify_separating(path_graph(6), c1) is None
    assert verify_separating(path_graph(6), c2) is None


def test_parity_sets_rejects_leaf_root():
    with pytest.raises(XIsLeaf):
        parity_sets(path_graph(6), 0)


def test_parity_sets_random_sweep():
    rng = random.Random(1)
    for _ in range(120):
        n = rng.randint(5, 60)
        t = gen_random_tree(n, rng.randrange(1 << 30))
        leaves = set(tree_profile(t).leaves)
        for x in range(t.n):
            if x in leaves:
                continue
            c1, c2 = parity_sets(t, x)
            assert verify_separating(t, c1) is None
            assert verify_separating(t, c2) is None


def test_tree_rb_construct_p8_tightness():
    p8 = path_graph(8)
    worst = maxsep_exact(p8).worst_coloring
    s = tree_rb_construct(p8, worst)
    assert verify_rb_separating(p8, worst, s) is None
    assert len(s) <= (8 + 2) / 2
    assert maxsep_exact(p8).value == 5  # the (n + s)/2 bound is tight on P8


def test_tree_rb_construct_monochromatic():
    t = gen_random_tree(9, 3)
    s = tree_rb_construct(t, Coloring(9, 0))
    prof = tree_profile(t)
    assert 2 * len(s) <= t.n + prof.support_count
    assert verify_rb_separating(t, Coloring(9, 0), s) is None


def test_tree_rb_construct_random_with_accounting():
    rng = random.Random(2)
    for _ in range(150):
        n = rng.randint(5, 24)
        t = gen_random_tree(n, rng.randrange(1 << 30))
        prof = tree_profile(t)
        ns3 = ns3_vertices(t, prof)
        l1 = prof.l_class(1, t)
        lp = prof.l_plus(t)
        sp = prof.s_plus
        for _ in range(4):
            c = Coloring(n, rng.randrange(1 << n))
            s = tree_rb_construct(t, c)
            assert verify_rb_separating(t, c, s) is None
            chain = (
                (n - prof.leaf_count - len(sp) - len(ns3)) / 2
                + len(l1)
                + (len(lp) + len(ns3)) / 2
                + len(sp)
            )
            assert len(s) <= chain + 1e-9
            assert 2 * len(s) <= n + prof.support_count


def test_tree_rb_construct_stars():
    rng = random.Random(5)
    for n in (5, 7, 10):
        star = star_graph(n)
        for _ in range(12):
            c = Coloring(n, rng.randrange(1 << n))
            s = tree_rb_construct(star, c)
            assert verify_rb_separating(star, c, s) is None
            assert 2 * len(s) <= n + 1


def test_tree_all_pairs_construct_examples():
    for n, expected in ((5, 3), (6, 4)):
        s = tree_all_pairs_construct(path_graph(n))
        assert len(s) == expected
        assert verify_separating(path_graph(n), s) is None
    spider = gen_spider(2)[0]
    s = tree_all_pairs_construct(spider)
    assert len(s) == 9  # n - s = 11 - 2
    assert verify_separating(spider, s) is None


def test_tree_all_pairs_construct_random():
    rng = random.Random(6)
    for _ in range(120):
        n = rng.randint(5, 60)
        t = gen_random_tree(n, rng.randrange(1 << 30))
        prof = tree_profile(t)
        s = tree_all_pairs_construct(t)
        assert len(s) == n - prof.support_count
        assert verify_separating(t, s) is None


def test_maxsep_within_tree_bounds():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(5, 12)
        t = gen_random_tree(n, rng.randrange(1 << 30))
        prof = tree_profile(t)
        value = maxsep_exact(t).value
        assert value <= min(n - prof.support_count, (n + prof.support_count) / 2)
        assert value <= 2 * n / 3

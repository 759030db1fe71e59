import random

import pytest

from conftest import (
    brute_maxsep,
    brute_min_dom,
    brute_min_rb_sep,
    brute_min_sep,
    complete_bipartite,
    cycle_graph,
    path_graph,
)
from rbsep.errors import CapExceeded, Infeasible, NotTwinFree, Unseparable
from rbsep.exact import (
    bondy_remove,
    gamma_exact,
    maxsep_exact,
    sep_exact,
    sep_exact_allow_twins,
    sep_rb_exact,
)
from rbsep.generators import gen_half_graph_complement, gen_random_tree, gen_random_twin_free
from rbsep.graphs import (
    Coloring,
    Graph,
    closed_neighborhood,
    verify_rb_separating,
    verify_separating,
)


def test_sep_rb_exact_p6_single_separator_coloring():
    p6 = path_graph(6)
    # red class = N[1]: a single vertex then distinguishes red from blue
    rep = sep_rb_exact(p6, Coloring.from_string("RRRBBB"))
    assert rep.optimum == 1
    assert verify_rb_separating(p6, Coloring.from_string("RRRBBB"), rep.witness) is None


def test_sep_rb_exact_monochromatic():
    g = cycle_graph(5)
    rep = sep_rb_exact(g, Coloring(5, 0))
    assert rep.optimum == 0 and rep.witness == ()


def test_sep_rb_exact_k55_near_balanced():
    g = complete_bipartite(5, 5)
    c = Coloring.from_red(10, [0, 1, 2, 5, 6, 7])  # 3 red + 2 blue per part
    rep = sep_rb_exact(g, c)
    assert rep.optimum == 4  # (n - t) / 2


def test_sep_rb_exact_unseparable():
    k2 = Graph.from_edges(2, [(0, 1)])
    with pytest.raises(Unseparable) as exc:
        sep_rb_exact(k2, Coloring.from_string("RB"))
    assert exc.value.pair == (0, 1)


def test_sep_rb_exact_budget_decision_form():
    p6 = path_graph(6)
    worst = maxsep_exact(p6).worst_coloring
    assert sep_rb_exact(p6, worst, budget=3).optimum == 3
    with pytest.raises(Infeasible):
        sep_rb_exact(p6, worst, budget=2)


def test_sep_exact_values():
    rep = sep_exact(path_graph(5))
    assert rep.optimum == 3
    assert verify_separating(path_graph(5), rep.witness) is None
    # complement half-graph k=2 is P4: sep = n - 1 = 3
    g, _ = gen_half_graph_complement(2)
    assert sep_exact(g).optimum == 3


def test_sep_exact_requires_twin_free():
    k2 = Graph.from_edges(2, [(0, 1)])
    with pytest.raises(NotTwinFree):
        sep_exact(k2)
    # the twins-allowed variant simply exempts the twin pair
    assert sep_exact_allow_twins(k2).optimum == 0


def test_sep_allow_twins_complete_multipartite():
    g = complete_bipartite(5, 5)
    assert sep_exact_allow_twins(g).optimum == 8  # n - t
    assert sep_exact(g).optimum == 8  # K_{5,5} is closed-twin-free anyway


def test_gamma_exact_values():
    assert gamma_exact(path_graph(3)).optimum == 1
    assert gamma_exact(path_graph(6)).optimum == 2
    assert gamma_exact(complete_bipartite(5, 5)).optimum == 2


def test_gamma_matches_brute_force():
    rng = random.Random(4)
    for _ in range(25):
        n = rng.randint(1, 7)
        g = Graph.from_edges(
            n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
        )
        assert gamma_exact(g).optimum == brute_min_dom(g)


def test_maxsep_exact_p6():
    rep = maxsep_exact(path_graph(6))
    assert rep.value == 3
    assert rep.per_coloring_count == 32
    assert sep_rb_exact(path_graph(6), rep.worst_coloring).optimum == 3


def test_maxsep_matches_double_brute_force():
    rng = random.Random(9)
    done = 0
    while done < 12:
        n = rng.randint(2, 5)
        try:
            g = gen_random_twin_free(n, 0.5, rng.randrange(1 << 30), max_tries=20)
        except Exception:
            continue
        assert maxsep_exact(g).value == brute_maxsep(g)
        done += 1


def test_maxsep_cap():
    with pytest.raises(CapExceeded):
        maxsep_exact(path_graph(16), n_cap=14)


def test_maxsep_requires_twin_free():
    with pytest.raises(NotTwinFree):
        maxsep_exact(Graph.from_edges(2, [(0, 1)]))


def test_sep_rb_swap_symmetry():
    rng = random.Random(13)
    for _ in range(20):
        n = rng.randint(2, 7)
        try:
            g = gen_random_twin_free(n, 0.45, rng.randrange(1 << 30), max_tries=20)
        except Exception:
            continue
        c = Coloring(n, rng.randrange(1 << n))
        assert sep_rb_exact(g, c).optimum == sep_rb_exact(g, c.swapped()).optimum


def test_witness_minimality_small():
    # no witness of size optimum - 1 exists (checked by the brute oracle)
    rng = random.Random(21)
    for _ in range(15):
        n = rng.randint(3, 7)
        try:
            g = gen_random_twin_free(n, 0.4, rng.randrange(1 << 30), max_tries=20)
        except Exception:
            continue
        c = Coloring(n, rng.randrange(1 << n))
        rep = sep_rb_exact(g, c)
        brute_opt, _ = brute_min_rb_sep(g, c)
        assert rep.optimum == brute_opt
        assert verify_rb_separating(g, c, rep.witness) is None


def test_sep_exact_matches_brute():
    rng = random.Random(31)
    done = 0
    while done < 10:
        n = rng.randint(2, 6)
        try:
            g = gen_random_twin_free(n, 0.5, rng.randrange(1 << 30), max_tries=20)
        except Exception:
            continue
        assert sep_exact(g).optimum == brute_min_sep(g)[0]
        done += 1


def test_bondy_remove_examples():
    assert bondy_remove([[0], [0, 1]]) == 0
    p4 = path_graph(4)
    fam = [closed_neighborhood(p4, v) for v in range(4)]
    x = bondy_remove(fam)
    traces = [frozenset(s) - {x} for s in fam]
    assert len(set(traces)) == 4
    g, _ = gen_half_graph_complement(2)
    x = bondy_remove([closed_neighborhood(g, v) for v in range(g.n)])
    assert verify_separating(g, [v for v in range(g.n) if v != x]) is None


def test_bondy_remove_try_all_oracle():
    # independent oracle: try every element, recheck trace distinctness
    rng = random.Random(17)
    for _ in range(20):
        n = rng.randint(2, 9)
        t = gen_random_tree(n, rng.randrange(1 << 30))
        if not twin_free(t):
            continue
        fam = [closed_neighborhood(t, v) for v in range(n)]
        x = bondy_remove(fam)
        valid = {
            y
            for y in range(n)
            if len({frozenset(s) - {y} for s in fam}) == n
        }
        assert x in valid
        assert x == min(valid)


def twin_free(g: Graph) -> bool:
    from rbsep.graphs import twin_classes

    return twin_classes(g).is_twin_free


def test_bondy_rejects_duplicates():
    from rbsep.errors import NoDistinctFamily

    with pytest.raises(NoDistinctFamily):
        bondy_remove([[0], [0]])


def test_report_fields():
    rep = sep_rb_exact(path_graph(4), Coloring.from_string("RBBB"))
    assert rep.method == "branch-and-bound"
    assert rep.nodes_explored > 0
    assert rep.elapsed_ms >= 0.0
    assert rep.witness == tuple(sorted(rep.witness))

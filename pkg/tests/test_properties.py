import itertools
import random

from ncmac.chromatic import DyckGraph, asc, cm_product
from ncmac.hecke import HeckeElem, trace_elem
from ncmac.perms import packed_words, permutations
from ncmac.wqsym import coarsenings


def dyck_graphs(n):
    """All graphs with nondecreasing h satisfying i <= h_i <= n."""
    def rec(prefix):
        i = len(prefix)
        if i == n:
            yield DyckGraph(tuple(prefix))
            return
        lo = max(i + 1, prefix[-1] if prefix else 1)
        for h in range(lo, n + 1):
            yield from rec(prefix + [h])
    yield from rec([])


def restricted(u, positions):
    return tuple(u[p - 1] for p in sorted(positions))


def test_ascent_additivity_exhaustive_small():
    for n in (3, 4):
        graphs = list(dyck_graphs(n))
        for u in packed_words(n):
            for v in coarsenings(u):
                for G in graphs:
                    total = asc(G.edges(), v)
                    for i in set(v):
                        pos = [p for p in range(1, n + 1) if v[p - 1] == i]
                        total += asc(G.induced(pos).edges(),
                                     restricted(u, pos))
                    assert total == asc(G.edges(), u)


def test_ascent_additivity_random_n6():
    rng = random.Random(1729)
    words = list(packed_words(6))
    graphs = list(dyck_graphs(6))
    for _ in range(200):
        u = rng.choice(words)
        v = rng.choice(coarsenings(u))
        G = rng.choice(graphs)
        total = asc(G.edges(), v)
        for i in set(v):
            pos = [p for p in range(1, 7) if v[p - 1] == i]
            total += asc(G.induced(pos).edges(), restricted(u, pos))
        assert total == asc(G.edges(), u)


def test_trace_cyclicity_random():
    rng = random.Random(9241)
    perms5 = list(permutations(5))
    for _ in range(30):
        a = HeckeElem(5, {rng.choice(perms5): rng.randint(1, 4)
                          for _ in range(3)})
        b = HeckeElem(5, {rng.choice(perms5): rng.randint(1, 4)
                          for _ in range(3)})
        assert trace_elem(a * b) == trace_elem(b * a)


def test_cm_product_dual_paths_small():
    # cm_product internally asserts that its two computation paths agree
    for n in (3, 4, 5):
        for G in dyck_graphs(n):
            cm_product(G)

import math
import random

from genset_lab.chain import schreier_sims
from genset_lab.perm import Permutation


def _sn_gens(n):
    return [
        Permutation.parse("(1 2)", n),
        Permutation.from_cycles([tuple(range(n))], n),
    ]


def test_symmetric_orders():
    for n in range(2, 9):
        ch = schreier_sims(_sn_gens(n), n)
        assert ch.order() == math.factorial(n)


def test_contains_and_sift():
    ch = schreier_sims(_sn_gens(5), 5)
    assert ch.contains(Permutation.parse("(1 2 3 4 5)", 5))
    even_only = schreier_sims([Permutation.parse("(1 2 3)", 5),
                               Permutation.parse("(3 4 5)", 5)], 5)
    assert even_only.order() == 60
    assert not even_only.contains(Permutation.parse("(1 2)", 5))


def test_stabilizer_orders():
    ch = schreier_sims(_sn_gens(6), 6, base_prefix=(0, 1, 2, 3, 4, 5))
    # stabilizer of the first k points of S6 has order (6-k)!
    for k in range(7):
        assert ch.stabilizer_order(k) == math.factorial(6 - k)


def test_stabilizer_generators():
    ch = schreier_sims(_sn_gens(5), 5, base_prefix=(0,))
    gens = ch.stabilizer_generators(1)
    sub = schreier_sims(gens, 5)
    assert sub.order() == 24
    assert all(g(0) == 0 for g in gens)


def test_random_subgroup_membership():
    rng = random.Random(7)
    gens = [Permutation.parse("(1 2 3 4 5 6 7)", 7),
            Permutation.parse("(2 3)(4 7)", 7)]
    ch = schreier_sims(gens, 7)
    # PSL(3,2) on 7 points
    assert ch.order() == 168
    elems = [Permutation.identity(7)]
    for _ in range(200):
        g = rng.choice(elems) * rng.choice(gens)
        elems.append(g)
        assert ch.contains(g)


def test_trivial_group():
    ch = schreier_sims([], 4)
    assert ch.order() == 1
    assert ch.contains(Permutation.identity(4))
    assert not ch.contains(Permutation.parse("(1 2)", 4))

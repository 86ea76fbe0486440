import random

import pytest

from classalg.groups import load_group
from classalg.partitions import class_size, enumerate_types
from classalg.wreath import (
    ResourceCapError,
    WreathContext,
    canonical_representative,
    enumerate_class,
    enumerate_group,
    permutation_cycles,
    type_of,
    wreath_identity,
    wreath_inv,
    wreath_mul,
    wreath_order,
)


def random_element(group, n, rng):
    g = tuple(rng.randrange(group.order) for _ in range(n))
    sigma = list(range(n))
    rng.shuffle(sigma)
    from classalg.wreath import WreathElement

    return WreathElement(g, tuple(sigma))


def test_group_laws():
    rng = random.Random(7)
    for name, n in (("cyclic2", 3), ("sym3", 2), ("cyclic4", 3)):
        g = load_group(name)
        e = wreath_identity(g, n)
        for _ in range(40):
            x = random_element(g, n, rng)
            y = random_element(g, n, rng)
            z = random_element(g, n, rng)
            assert wreath_mul(g, x, e) == x
            assert wreath_mul(g, e, x) == x
            assert wreath_mul(g, x, wreath_inv(g, x)) == e
            assert wreath_mul(g, wreath_mul(g, x, y), z) == wreath_mul(
                g, x, wreath_mul(g, y, z)
            )


def test_type_is_conjugation_invariant():
    rng = random.Random(11)
    g = load_group("sym3")
    n = 3
    for _ in range(60):
        x = random_element(g, n, rng)
        a = random_element(g, n, rng)
        conj = wreath_mul(g, wreath_mul(g, a, x), wreath_inv(g, a))
        assert type_of(g, conj) == type_of(g, x)


def test_enumeration_matches_order():
    for name, n in (("cyclic2", 3), ("sym3", 2)):
        g = load_group(name)
        elems = list(enumerate_group(g, n))
        assert len(elems) == wreath_order(g, n)
        assert len(set(elems)) == len(elems)


def test_class_sizes_by_enumeration():
    # formula-based class sizes agree with brute-force counting
    for name, n in (("cyclic2", 3), ("cyclic3", 2), ("sym3", 2)):
        g = load_group(name)
        counts = {}
        for x in enumerate_group(g, n):
            rho = type_of(g, x)
            counts[rho] = counts.get(rho, 0) + 1
        for rho in enumerate_types(g, n):
            assert counts[rho] == class_size(rho, g, n)


def test_canonical_representative_types():
    for name in ("cyclic2", "sym3"):
        g = load_group(name)
        for n in range(1, 4):
            for rho in enumerate_types(g, n):
                x = canonical_representative(g, rho, n)
                assert type_of(g, x) == rho


def test_enumerate_class_agrees():
    g = load_group("cyclic2")
    for rho in enumerate_types(g, 3):
        members = list(enumerate_class(g, rho, 3))
        assert len(members) == class_size(rho, g, 3)
        assert all(type_of(g, x) == rho for x in members)


def test_structure_constants_row_sums():
    # sum_t N[r][s][t] |C_t| = |C_r| |C_s|
    g = load_group("cyclic2")
    ctx = WreathContext.get(g, 3)
    table = ctx.structure_constants()
    sizes = ctx.class_sizes()
    k = len(ctx.types)
    for r in range(k):
        for s in range(k):
            total = sum(table[r][s][t] * sizes[t] for t in range(k))
            assert total == sizes[r] * sizes[s]


def test_cycle_structure():
    cycles = permutation_cycles((1, 2, 0, 4, 3, 5))
    assert cycles == ((0, 1, 2), (3, 4), (5,))


def test_resource_cap():
    g = load_group("sym3")
    with pytest.raises(ResourceCapError):
        list(enumerate_group(g, 4, cap=100))


def test_num_classes_z2_level2():
    g = load_group("cyclic2")
    assert len(enumerate_types(g, 2)) == 5

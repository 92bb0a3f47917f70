import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sftkit import (
    CANTOR,
    Free,
    Grid,
    InputError,
    LocalMap,
    PatternPresentation,
    ResourceLimitError,
    SftPresentation,
    SoficPresentation,
    apply_local_map,
    disjoint_union,
    full_shift,
    product,
    project_local_map,
)
from sftkit.decision import count_locally_admissible, locally_admissible_patterns
from sftkit.limits import Limits

from oracles import brute_admissible, random_presentation

Z1, Z2, F2 = Grid(1), Grid(2), Free(2)
P = PatternPresentation.of
HARD = SftPresentation(Z2, (0, 1), (P({"": 1, "a": 1}), P({"": 1, "b": 1})))


def test_pairing_band_exhaustive():
    seen = set()
    for m in range(512):
        for n in range(512):
            z = CANTOR.pair(m, n)
            assert CANTOR.unpair(z) == (m, n)
            seen.add(z)
    assert len(seen) == 512 * 512


@given(st.integers(0, 2**16), st.integers(0, 2**16))
def test_pairing_laws(m, n):
    z = CANTOR.pair(m, n)
    assert CANTOR.first(z) == m and CANTOR.second(z) == n


@given(st.integers(0, 10**40), st.integers(0, 10**40))
def test_pairing_large(m, n):
    assert CANTOR.unpair(CANTOR.pair(m, n)) == (m, n)


def test_pairing_is_onto_an_initial_segment():
    assert sorted(CANTOR.pair(m, n) for m in range(40) for n in range(40 - m)) == list(range(40 * 41 // 2))


def test_product_of_full_shifts():
    z = product(full_shift(Z2, (0, 1)), full_shift(Z2, (0, 1)))
    assert len(z.alphabet) == 4 and z.forbidden == ()


def test_product_lift_count():
    pa = SftPresentation(Z2, (0, 1), (P({"": 1, "a": 0}),))
    z = product(pa, full_shift(Z2, (0, 1, 2)))
    assert len(z.alphabet) == 6
    assert len(z.forbidden) == 9
    for q in z.forbidden:
        assert q.words == ("", "a")
        assert [CANTOR.first(v) for v in q.values] == [1, 0]


def paired_set(pats_a, pats_b):
    return {tuple(CANTOR.pair(a, b) for a, b in zip(x, y)) for x in pats_a for y in pats_b}


def small_pairs(seed, count, max_product):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a = random_presentation(rng, Z2, 3, 3, 2)
        b = random_presentation(rng, Z2, 3, 3, 2)
        if len(a.alphabet) * len(b.alphabet) <= max_product:
            out.append((a, b))
    return out


@pytest.mark.parametrize("a, b", small_pairs(5, 12, 6))
def test_product_patterns_brute_force_radius_1(a, b):
    cells = Z2.ball(1)
    z = product(a, b)
    assert set(brute_admissible(z, cells)) == paired_set(brute_admissible(a, cells), brute_admissible(b, cells))


@pytest.mark.parametrize("a, b", small_pairs(6, 6, 2))
def test_product_patterns_brute_force_radius_2(a, b):
    cells = Z2.ball(2)
    z = product(a, b)
    assert set(brute_admissible(z, cells)) == paired_set(brute_admissible(a, cells), brute_admissible(b, cells))


@pytest.mark.parametrize("a, b", small_pairs(7, 10, 6))
def test_product_symmetry_and_emptiness(a, b):
    for r in (0, 1):
        ab = len(locally_admissible_patterns(product(a, b), r))
        ba = len(locally_admissible_patterns(product(b, a), r))
        na = len(locally_admissible_patterns(a, r))
        nb = len(locally_admissible_patterns(b, r))
        assert ab == ba == na * nb
        assert (ab == 0) == (na == 0 or nb == 0)


def test_product_caps_and_group_mismatch():
    with pytest.raises(InputError, match="group mismatch"):
        product(full_shift(Z2, (0,)), full_shift(F2, (0,)))
    with pytest.raises(ResourceLimitError):
        product(HARD, full_shift(Z2, range(10)), limits=Limits(max_forbidden=150))
    with pytest.raises(ResourceLimitError):
        product(full_shift(Z2, range(10)), full_shift(Z2, range(10)), limits=Limits(max_alphabet=50))


def test_union_of_singletons_has_two_configurations():
    u = disjoint_union(full_shift(Z2, (0,)), full_shift(Z2, (0,)))
    assert u.alphabet == (0, 1)
    for r in (1, 2):
        pats = locally_admissible_patterns(u, r)
        assert sorted(set(p.values) for p in pats) == [{0}, {1}]


def test_union_of_full_shifts_radius_1():
    f = full_shift(Z2, (0, 1))
    u = disjoint_union(f, f)
    assert u.alphabet == (0, 1, 2, 3)
    assert all(len(p.entries) == 2 for p in u.forbidden)
    pats = brute_admissible(u, Z2.ball(1))
    assert len(pats) == 2 * 2**5
    assert all(set(p) <= {0, 1} or set(p) <= {2, 3} for p in pats)


def test_union_with_empty():
    x = HARD
    empty = SftPresentation(Z2, (0, 1), (P({"": 0}), P({"": 1})))
    u = disjoint_union(x, empty)
    assert [p.values for p in locally_admissible_patterns(u, 1)] == [p.values for p in locally_admissible_patterns(x, 1)]


@pytest.mark.parametrize("ctx", [Z2, F2], ids=str)
def test_union_counts_and_mixing(ctx):
    rng = random.Random(13)
    for _ in range(15):
        a = random_presentation(rng, ctx, 3, 3, 2)
        b = random_presentation(rng, ctx, 3, 3, 2)
        u = disjoint_union(a, b)
        offset = max(a.alphabet) + 1
        for r in (0, 1, 2):
            assert count_locally_admissible(u, r) == count_locally_admissible(a, r) + count_locally_admissible(b, r)
        for r in (0, 1, 2):
            if len(u.alphabet) ** len(ctx.ball(r)) > 10**6:
                continue
            pu = locally_admissible_patterns(u, r)
            assert len(pu) == len(locally_admissible_patterns(a, r)) + len(locally_admissible_patterns(b, r))
            for p in pu:
                assert all(v < offset for v in p.values) or all(v >= offset for v in p.values)


def xor_map():
    return LocalMap.from_function((0, 1), ("", "a"), (0, 1), lambda k: k[0] ^ k[1])


def test_project_identity_and_constant():
    z = product(full_shift(Z2, (0, 1)), full_shift(Z2, (0, 1, 2)))
    ident = LocalMap.from_function((0, 1), ("",), (0, 1), lambda k: k[0])
    mu = project_local_map(z, CANTOR, 1, ident)
    assert all(out == CANTOR.first(inp[0]) for inp, out in mu.table)
    const = LocalMap.from_function((0, 1, 2), ("", "b"), (4,), lambda k: 4)
    for comp in (2,):
        assert {out for _, out in project_local_map(z, CANTOR, comp, const).table} == {4}
    with pytest.raises(InputError, match="component 2"):
        project_local_map(z, CANTOR, 2, ident)


def test_project_xor_pointwise():
    base = product(full_shift(Z1, (0, 1)), full_shift(Z1, (0, 1)))
    sp = SoficPresentation(base, project_local_map(base, CANTOR, 1, xor_map()))
    rng = random.Random(17)
    for _ in range(200):
        x = [rng.randrange(2) for _ in range(10)]
        y = [rng.randrange(2) for _ in range(10)]
        config = {(i,): CANTOR.pair(a, b) for i, (a, b) in enumerate(zip(x, y))}
        for i in range(9):
            assert apply_local_map(sp, config, (i,)) == x[i] ^ x[i + 1]

import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from modlat import gf
from modlat.subspace import DimensionMismatch, Subspace, map_cokernel, map_kernel


def rand_subspace(rng, p, d, inside=None):
    container = inside if inside is not None else Subspace.full(p, d)
    k = rng.randint(0, container.rank)
    if k == 0:
        return Subspace.zero(p, d)
    coeffs = np.array([[rng.randrange(p) for _ in range(container.rank)] for _ in range(k)])
    return Subspace(p, d, (coeffs @ container.basis) % p)


def enum_vectors(s):
    return {tuple(int(x) for x in v) for v in s.vectors()}


def test_join_complementary_axes():
    a = Subspace.span(2, [[1, 0]])
    b = Subspace.span(2, [[0, 1]])
    assert a.join(b) == Subspace.full(2, 2)


def test_join_idempotent():
    a = Subspace.span(5, [[1, 2, 3], [0, 1, 4]])
    assert a.join(a) == a


def test_meet_with_full_space():
    a = Subspace.span(3, [[1, 1, 0]])
    assert a.meet(Subspace.full(3, 3)) == a


def test_meet_coordinate_subspaces():
    a = Subspace.span(2, [[1, 0, 0], [0, 1, 0]])
    b = Subspace.span(2, [[0, 1, 0], [0, 0, 1]])
    assert a.meet(b) == Subspace.span(2, [[0, 1, 0]])


def test_compare_basics():
    full = Subspace.full(3, 2)
    a = Subspace.span(3, [[1, 2]])
    assert a.compare(full) == "less"
    assert a.compare(a) == "equal"
    assert full.compare(a) == "greater"


def test_compare_matches_enumeration():
    rng = random.Random(7)
    for p in (2, 3):
        for _ in range(150):
            d = rng.randint(1, 4)
            a, b = rand_subspace(rng, p, d), rand_subspace(rng, p, d)
            va, vb = enum_vectors(a), enum_vectors(b)
            want = ("equal" if va == vb else "less" if va < vb
                    else "greater" if vb < va else "incomparable")
            assert a.compare(b) == want


def test_meet_join_against_enumeration_oracle():
    rng = random.Random(11)
    for p in (2, 3):
        for _ in range(200):
            d = rng.randint(1, 4)
            a, b = rand_subspace(rng, p, d), rand_subspace(rng, p, d)
            va, vb = enum_vectors(a), enum_vectors(b)
            assert enum_vectors(a.meet(b)) == va & vb
            assert a.join(b) == Subspace(p, d, list(va | vb))


def test_mismatch_errors():
    a = Subspace.full(2, 2)
    with pytest.raises(DimensionMismatch):
        a.join(Subspace.full(2, 3))
    with pytest.raises(DimensionMismatch):
        a.meet(Subspace.full(3, 2))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), st.sampled_from([2, 3, 5]), st.integers(1, 5))
def test_modular_and_permutation_laws(seed, p, d):
    rng = random.Random(seed)
    b = rand_subspace(rng, p, d)
    a = rand_subspace(rng, p, d, inside=b)
    c = rand_subspace(rng, p, d)
    assert b.meet(a.join(c)) == a.join(b.meet(c))
    cc = rand_subspace(rng, p, d)
    aa = rand_subspace(rng, p, d, inside=cc)
    dd = rand_subspace(rng, p, d)
    assert aa.meet(b.join(cc.meet(dd))) == aa.meet(cc.meet(b).join(dd))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), st.sampled_from([2, 3, 5]), st.integers(1, 6))
def test_dimension_formula_and_canonicality(seed, p, d):
    rng = random.Random(seed)
    a, b = rand_subspace(rng, p, d), rand_subspace(rng, p, d)
    j, m = a.join(b), a.meet(b)
    assert j.rank + m.rank == a.rank + b.rank
    assert Subspace(p, d, j.basis) == j
    assert Subspace(p, d, m.basis) == m


def test_map_kernel_trivia():
    assert map_kernel(gf.eye(3), 2).is_zero()
    assert map_kernel(gf.zeros(3, 2), 2) == Subspace.full(2, 3)
    rng = random.Random(3)
    for _ in range(50):
        p = rng.choice((2, 5))
        dom, cod = rng.randint(1, 5), rng.randint(1, 5)
        m = np.array([[rng.randrange(p) for _ in range(cod)] for _ in range(dom)])
        assert map_kernel(m, p).rank == dom - gf.rank(m, p)


def test_map_kernel_with_restriction():
    # restriction to a line inside the kernel of the projection to coord 0
    m = np.array([[1], [0], [0]])
    s = Subspace.span(2, [[0, 1, 1], [1, 0, 0]])
    ker = map_kernel(m, 2, domain_restriction=s)
    assert ker == Subspace.span(2, [[0, 1, 1]])


def test_map_cokernel_laws():
    q, proj = map_cokernel(gf.eye(2), 5)
    assert q == 0
    q, proj = map_cokernel(gf.zeros(1, 2), 2)
    assert q == 2 and (proj == gf.eye(2)).all()
    rng = random.Random(4)
    for _ in range(60):
        p = rng.choice((2, 3, 5))
        dom, cod = rng.randint(1, 5), rng.randint(1, 5)
        m = np.array([[rng.randrange(p) for _ in range(cod)] for _ in range(dom)])
        q, proj = map_cokernel(m, p)
        assert q + gf.rank(m, p) == cod
        assert not np.any((m @ proj) % p)
        assert gf.rank(proj, p) == q

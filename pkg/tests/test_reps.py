import numpy as np
import pytest

from modlat import golden, reps
from modlat.reps import (coxeter_minus, coxeter_plus, coxeter_plus_mat,
                         injective, phi_push, projective, random_rep, rep_bank,
                         to_subspace)
from modlat.terms import D222, D4, parse


def test_projective_dim_vectors():
    for v, rows in golden.PREPROJ_DIMS.items():
        assert projective(D222, v, 5).dim_vector() == rows[0]


def test_preprojective_table_both_columns():
    for v, rows in golden.PREPROJ_DIMS.items():
        m = projective(D222, v, 5)
        m1 = coxeter_minus(m)
        m2 = coxeter_minus(m1)
        assert m1.dim_vector() == rows[1], v
        assert m2.dim_vector() == rows[2], v


def test_phi_plus_kills_projectives_both_forms():
    for v in reps.E6_QUIVER.vertices:
        m = projective(D222, v, 5)
        assert coxeter_plus_mat(m).is_zero()
        assert coxeter_plus(to_subspace(m)).rep.ambient == 0
    for v in reps.D4_QUIVER.vertices:
        assert coxeter_plus_mat(projective(D4, v, 3)).is_zero()


def test_phi_minus_kills_injectives():
    for kind in (D222, D4):
        for v in reps.QUIVERS[kind].vertices:
            assert coxeter_minus(injective(kind, v, 5)).is_zero()


def test_plus_minus_roundtrip():
    for v in reps.E6_QUIVER.vertices:
        m = projective(D222, v, 5)
        back = coxeter_plus_mat(coxeter_minus(m))
        assert back.dim_vector() == m.dim_vector()


def test_coxeter_plus_rank_nullity():
    for seed in range(25):
        rho = random_rep(seed, 3, 6, D222)
        step = coxeter_plus(rho)
        ys = [rho.spaces[f"y{i}"] for i in (1, 2, 3)]
        total = ys[0].join(ys[1]).join(ys[2])
        assert step.rep.ambient == sum(y.rank for y in ys) - total.rank


def test_phi_push_published_identities(pool_d222):
    for rho in pool_d222[:12]:
        ev = rho.evaluator()
        for i in (1, 2, 3):
            j, k = [x for x in (1, 2, 3) if x != i]
            assert phi_push(i, rho, parse(f"x{i}", D222)).is_zero()
            assert phi_push(i, rho, parse("I", D222)) == \
                ev(parse(f"y{i}*(y{j}+y{k})", D222))
            assert phi_push(i, rho, parse(f"y{j}*y{k}", D222)) == \
                ev(parse(f"y{i}*(x{j}+x{k})", D222))


def test_phi_sum_vanishes():
    for seed in range(10):
        for kind in (D222, D4):
            rho = random_rep(seed, 5, 5, kind)
            step = coxeter_plus(rho)
            total = sum(step.phi_mats) % rho.p
            assert not np.any(total)


def test_rep_bank_generation_zero_and_keys(bank):
    gen0 = [m for m in bank if m.generation == 0]
    assert len(gen0) == 14  # 7 projectives + 7 injectives
    keys = [(m.dim_vector(), m.generation) for m in bank]
    assert len(set(keys)) == len(keys)
    # depth-2 members include both preprojective table columns
    dims = {m.dim_vector() for m in bank if m.side == "proj"}
    for rows in golden.PREPROJ_DIMS.values():
        assert rows[1] in dims and rows[2] in dims


def test_bank_monomorphisms(bank):
    for member in bank:
        if member.ambient == 0:
            continue
        for (src, tgt), m in zip(member.mat.quiver.arrows, member.mat.mats):
            if m.shape[0]:
                from modlat import gf
                assert gf.rank(m, member.mat.p) == m.shape[0]


def test_random_rep_determinism_and_chains():
    for seed in range(200):
        r1 = random_rep(seed, 5, 4, D222)
        r2 = random_rep(seed, 5, 4, D222)
        assert r1.spaces == r2.spaces and r1.ambient == r2.ambient
        for i in (1, 2, 3):
            assert r1.spaces[f"y{i}"].contains(r1.spaces[f"x{i}"])


def test_random_rep_coverage():
    zero_seen = full_seen = False
    for seed in range(400):
        r = random_rep(seed, 2, 3, D222)
        if r.spaces["x1"].is_zero():
            zero_seen = True
        if r.spaces["y1"].is_full():
            full_seen = True
    assert zero_seen and full_seen


def test_subspace_and_matrix_coxeter_agree_on_preprojectives(bank):
    for member in bank:
        if member.side != "proj" or member.ambient == 0:
            continue
        mat_dims = coxeter_plus_mat(member.mat).dim_vector()
        assert coxeter_plus(member.sub).rep.dim_vector() == mat_dims


def test_d4_bank():
    b = rep_bank(3, 5, D4)
    gen0 = [m for m in b if m.generation == 0]
    assert len(gen0) == 10  # 5 projectives + 5 injectives
    keys = [(m.dim_vector(), m.generation) for m in b]
    assert len(set(keys)) == len(keys)


def test_phi_push_rejects_mismatched_kind():
    from modlat.terms import TermError
    rho = random_rep(3, 5, 3, D222)
    with pytest.raises(TermError):
        phi_push(1, rho, parse("e1", D4))


def test_theorem_holds_beyond_the_table_bound(pool_d222):
    # one spot class of length 9: the growth property extends past length 8
    from modlat import elements as el, seqs
    c = seqs.normalize("121212121", D222)
    zt = el.element("e", c, D222)
    tgt = seqs.phi_prepend(2, c.realize(), D222)
    zti = el.element("e", tgt, D222)
    for rho in pool_d222[:6]:
        assert phi_push(2, rho, zt) == rho.evaluate(zti)

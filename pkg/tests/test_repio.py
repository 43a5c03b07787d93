import pytest

from modlat import repio, reps
from modlat.repio import RepIOError, dumps, loads
from modlat.terms import D222, D4


def test_subspace_roundtrip_bit_exact(tmp_path):
    for kind in (D222, D4):
        for seed in range(10):
            rho = reps.random_rep(seed, 5, 5, kind)
            text = dumps(rho)
            assert dumps(loads(text)) == text
            path = tmp_path / f"{kind}_{seed}.rep"
            repio.store(rho, path)
            assert dumps(repio.load(path)) == text


def test_matrix_roundtrip_bit_exact():
    m = reps.coxeter_minus(reps.projective(D222, "y2", 5))
    text = dumps(m)
    back = loads(text)
    assert dumps(back) == text
    assert back.dim_vector() == m.dim_vector()


def test_version_check():
    with pytest.raises(RepIOError):
        loads("format_version 2\nprime 5\nlattice d222\nform subspace\nambient 1\n")


def test_corrupted_prime():
    with pytest.raises(RepIOError) as exc:
        loads("format_version 1\nprime 6\nlattice d222\nform subspace\nambient 1\n")
    assert "prime" in str(exc.value)


def test_kind_mismatch():
    text = dumps(reps.random_rep(1, 5, 3, D4))
    with pytest.raises(RepIOError) as exc:
        loads(text, expect_kind=D222)
    assert "mismatch" in str(exc.value)


def test_parse_error_has_line_number():
    text = "format_version 1\nprime 5\nlattice d222\nform subspace\nambient 2\nspace y1 1\n1 oops\n"
    with pytest.raises(RepIOError) as exc:
        loads(text)
    assert "line" in str(exc.value)

import pytest

from modlat import elements as el
from modlat import reps, seqs
from modlat.elements import ElementError, atomic, cumulative, element, gp_tilde
from modlat.terms import D222, D4, TOP, meet, parse, render


def test_atomic_published_examples():
    assert render(atomic("a", 1, 1, 2)) == "x1+y2"
    assert atomic("a", 0, 1, 2) is TOP
    assert parse("y1 + x2*(y3 + x1*(y2+x3))", D222) is atomic("A", 3, 1, 2)
    assert parse("e1 + e2*(e3+e4)", D4) is atomic("a", 2, 1, 2, D4)
    assert parse("x1 + y2*(x2 + y3(x3 + y1))".replace("y3(", "y3*("), D222) \
        is atomic("a", 3, 1, 2)


def test_atomic_errors():
    with pytest.raises(ElementError):
        atomic("a", -1, 1, 2)
    with pytest.raises(ElementError):
        atomic("a", 1, 1, 1)
    with pytest.raises(ElementError):
        atomic("A", 1, 1, 2, D4)
    with pytest.raises(ElementError):
        atomic("a", 1, 1, 4, D222)


def test_d222_elements_published_examples():
    assert render(element("e", "21", D222)) == "y2*(x1+y3)"
    assert render(element("f", "321", D222)) == "x3*(x2+y1)"
    assert render(element("g0", "1", D222)) == "y1*(y2+y3)"
    assert render(element("e", "1", D222)) == "y1"
    assert render(element("f", "1", D222)) == "x1"
    # e_12 arises from e_21 by swapping arms 1 and 2
    assert render(element("e", "12", D222)) == "y1*(x2+y3)"
    assert element("f", "21", D222) is parse("y2*y3", D222)


def test_d222_g_examples_semantically(pool_d222):
    g210 = element("g0", "21", D222)
    want = parse("y2*(x1+y3)*(x2+x3+y1)", D222)
    for rho in pool_d222[:15]:
        assert rho.evaluate(g210) == rho.evaluate(want)
    g3210 = element("g0", "321", D222)
    want = parse("y3*(y1+x2)*(y2+x3)*(x1+y2+y1*y3)", D222)
    for rho in pool_d222[:15]:
        assert rho.evaluate(g3210) == rho.evaluate(want)


def test_d4_elements_published_examples():
    assert render(element("e", "21", D4)) == "e2*(e3+e4)"
    assert render(element("e", "321", D4)) == "e3*(e1+e2)*(e1+e4)"
    assert render(element("f0", "1", D4)) == "e1*(e2+e3+e4)"
    e2141 = element("e", "2341", D4)
    assert e2141 is parse("e2*(e4+e1*(e2+e3))*(e3+e4)", D4)


def test_d4_f0_published_equalities(pool_d4):
    # the worked example for 321 = 341
    f3210 = element("f0", "321", D4)
    want = parse("e3*(e1+e2)*(e1+e4)*(e1+(e3+e2)*(e4+e2)*(e3+e4))", D4)
    for rho in pool_d4:
        assert rho.evaluate(f3210) == rho.evaluate(want)
    f210 = element("f0", "21", D4)
    want = parse("e2*(e3+e4)*(e4+e3*(e1+e2)+e1)", D4)
    for rho in pool_d4:
        assert rho.evaluate(f210) == rho.evaluate(want)


def test_element_form_validity_errors():
    with pytest.raises(ElementError):
        el.admissible_d222("g0", "1", form="a")     # alternate forms only for f/e
    with pytest.raises(ElementError):
        el.admissible_d222("e", "1", form="a")      # k = 0 has no alternate form
    with pytest.raises(ElementError):
        element("nope", "1", D222)


def test_two_forms_sample(pool_d222):
    for word in ("2121", "12121", "132121", "212121"):
        c = seqs.normalize(word, D222)
        t_table = el.admissible_d222("e", c)
        for form in ("a", "A"):
            t_alt = el.admissible_d222("e", c, form=form)
            for rho in pool_d222[:10]:
                assert rho.evaluate(t_table) == rho.evaluate(t_alt)


def test_gp_tilde_published_examples():
    assert render(gp_tilde("e~", "21")) == "e2*(e3+e4)"
    assert gp_tilde("e~", "121") is parse("e1*(e3*(e1+e2) + e4*(e1+e2))", D4)
    with pytest.raises(ElementError):
        gp_tilde("e~", "1" + "21" * 5)  # over the size bound


def test_gp_tilde_f_matches_table_on_random_reps():
    pool = [reps.random_rep(s, p, 6, D4) for s in range(25) for p in (2, 5)]
    t1 = element("f0", "21", D4)
    t2 = gp_tilde("f0~", "21")
    assert all(r.evaluate(t1) == r.evaluate(t2) for r in pool)


def test_cumulative_published_examples(pool_d222):
    assert render(cumulative("x", 1, 1)) == "x1"
    assert render(cumulative("y", 1, 2)) == "y2"
    assert cumulative("x0", 1) is TOP
    assert cumulative("x", 2, 1) is parse("y2*y3", D222)
    want = parse("(y1+y2)*(y1+y3)*(y2+y3)", D222)
    got = cumulative("x0", 2)
    for rho in pool_d222[:15]:
        assert rho.evaluate(got) == rho.evaluate(want)
    want = parse("(x2+x3)*(y1+x2)*(y1+x3)", D222)
    got = cumulative("x", 3, 1)
    for rho in pool_d222[:15]:
        assert rho.evaluate(got) == rho.evaluate(want)
    with pytest.raises(ElementError):
        cumulative("x", 1, None)
    with pytest.raises(ElementError):
        cumulative("x0", 0)


def test_cumulative_chain(pool_d222):
    for n in (1, 2, 3, 4):
        for t in (1, 2, 3):
            xt, yt, x0 = cumulative("x", n, t), cumulative("y", n, t), cumulative("x0", n)
            for rho in pool_d222[:10]:
                ev = rho.evaluator()
                assert ev(yt).contains(ev(xt))
                assert ev(x0).contains(ev(yt))


def test_atomic_monotonicity(pool_d222, pool_d4):
    for n in range(1, 9):
        lo, hi = atomic("a", n, 1, 2), atomic("a", n - 1, 1, 2)
        lo2, hi2 = atomic("A", n, 2, 3), atomic("A", n - 1, 2, 3)
        for rho in pool_d222[:8]:
            ev = rho.evaluator()
            assert ev(hi).contains(ev(lo))
            assert ev(hi2).contains(ev(lo2))
    for n in range(1, 9):
        lo, hi = atomic("a", n, 1, 2, D4), atomic("a", n - 1, 1, 2, D4)
        for rho in pool_d4[:8]:
            ev = rho.evaluator()
            assert ev(hi).contains(ev(lo))


def test_admissible_inclusions(pool_d222):
    for length in range(1, 6):
        for c in seqs.enumerate_classes(length, D222):
            f_t, e_t, g_t = (element(z, c, D222) for z in ("f", "e", "g0"))
            for rho in pool_d222[:6]:
                ev = rho.evaluator()
                assert ev(e_t).contains(ev(f_t))
                assert ev(e_t).contains(ev(g_t))


def test_strengthening_rows_sample(pool_d222):
    for k, p in ((0, 0), (1, 0), (0, 1)):
        for row_id, a1, a0, z in el.strengthening_rows(k, p):
            if z is None:
                continue
            e_a1 = element("e", seqs.normalize(a1, D222), D222)
            g_a0 = element("g0", seqs.normalize(a0, D222), D222)
            rhs = meet(g_a0, z)
            for rho in pool_d222[:8]:
                assert rho.evaluate(e_a1) == rho.evaluate(rhs), (row_id, k, p)


def test_s_form_rows_sample(pool_d222):
    for k, p in ((0, 0), (1, 0), (1, 1)):
        for row_id, a0, g1, g2 in el.s_form_rows(k, p):
            g_table = element("g0", seqs.normalize(a0, D222), D222)
            for rho in pool_d222[:8]:
                v1, v2, v3 = rho.evaluate(g1), rho.evaluate(g2), rho.evaluate(g_table)
                assert v1 == v2 == v3, (row_id, k, p)


def test_s_form_builder_all_start_letters(pool_d222):
    for word in ("1", "21", "12", "321", "2121", "32121"):
        c = seqs.normalize(word, D222)
        s_t = el.admissible_d222("g0", c, form="S")
        g_t = el.admissible_d222("g0", c)
        for rho in pool_d222[:8]:
            assert rho.evaluate(s_t) == rho.evaluate(g_t), word

import random

import pytest

from ncmac.hecke import (HeckeElem, NotNonsingular, abreu_nigro_theta,
                         admissible_edges, dyck_graph_of, hessenberg_function,
                         interval_sum, is_codominant, lascoux_element,
                         lascoux_word, normalized_trace_schur, relation_triple,
                         sigma_mu, theta_to_sym, trace_elem, trace_sym,
                         upsilon, v_mu, yb_census, yb_element, yb_macdonald)
from ncmac.macdonald import H_sym, tildeH_sym
from ncmac.perms import (apply_s, identity, inverse, partitions, permutations,
                         reduced_word)
from ncmac.rings import LaurentPoly, RatFunc, q_int
from ncmac.symfunc import SymFunc, sym_gen

Q = LaurentPoly.gen(("q",), "q")


def all_reduced_words(w):
    if w == identity(len(w)):
        yield []
        return
    for i in range(1, len(w)):
        if w[i - 1] > w[i]:
            for rest in all_reduced_words(apply_s(w, i)):
                yield rest + [i]


def test_quadratic_relation():
    for i in (1, 2):
        t = HeckeElem.one(3).times_gen(i)
        assert t * t == t.scale(Q - 1) + HeckeElem.one(3).scale(Q)


def test_product_is_word_independent():
    for w in permutations(4):
        elems = set()
        for word in all_reduced_words(w):
            cur = HeckeElem.one(4)
            for i in word:
                cur = cur.times_gen(i)
            elems.add(str(cur))
        assert len(elems) == 1
        assert HeckeElem.T(w) == HeckeElem(4, {w: 1})


def test_lascoux_equals_interval_sum():
    for n in (3, 4, 5):
        for w in permutations(n):
            if not is_codominant(w):
                continue
            assert lascoux_element(w) == interval_sum(w)


def test_lascoux_second_case():
    # nonsingular but with the dominant tail on the inverse side
    w = (2, 4, 1, 3)
    assert lascoux_element(w) == interval_sum(w)


def test_lascoux_word_golden():
    assert lascoux_word((3, 2, 4, 1)) == [1, 2, 1, 3]
    assert lascoux_word((3, 4, 2, 6, 5, 1)) == [1, 2, 1, 3, 2, 4, 5, 4]
    assert lascoux_word((3, 2, 4, 6, 5, 1)) == [1, 2, 1, 3, 4, 5, 4]
    assert lascoux_word((4, 3, 2, 6, 5, 1)) == [1, 2, 1, 3, 2, 1, 4, 5, 4]


def test_singular_permutations_raise():
    for w in [(3, 4, 1, 2), (4, 2, 3, 1)]:
        with pytest.raises(NotNonsingular):
            lascoux_element(w)


def test_trace_T3241_theta_golden():
    texpr = trace_elem(HeckeElem.T((3, 2, 4, 1)))
    want = {(3, 1): Q, (4,): Q - 1}
    assert {k: v * LaurentPoly.const(("q",), 1)
            for k, v in texpr.items()} == \
        {k: v * LaurentPoly.const(("q",), 1) for k, v in want.items()}


def test_trace_c3241_theta_golden():
    texpr = trace_elem(interval_sum((3, 2, 4, 1)))
    want = {(1, 1, 1, 1): 1, (2, 1, 1): Q + 3, (2, 2): 1,
            (3, 1): 2 * Q + 2, (4,): Q + 1}
    assert {k: v * LaurentPoly.const(("q",), 1)
            for k, v in texpr.items()} == \
        {k: v * LaurentPoly.const(("q",), 1) for k, v in want.items()}


def test_trace_c3241_h_basis_golden():
    f = trace_sym(interval_sum((3, 2, 4, 1))).to_basis("h")
    want = (sym_gen("h", 3, 1).scale(Q ** 3 + 2 * Q ** 2 + Q)
            + sym_gen("h", 4).scale(Q ** 4 + 2 * Q ** 3 + 2 * Q ** 2
                                    + 2 * Q + 1))
    assert f == want.to_basis("h")


def test_upsilon_traces():
    for n in range(2, 7):
        tr = trace_sym(upsilon(n)).to_basis("h")
        assert tr == sym_gen("h", n).scale(q_int(n)).to_basis("h")


def test_scaled_upsilon_matches():
    for n in (3, 4, 5):
        fact = LaurentPoly.const(("q",), 1)
        for k in range(1, n):
            fact = fact * q_int(k)
        tr = trace_sym(upsilon(n, scaled=True)).to_basis("h")
        assert tr == sym_gen("h", n).scale(q_int(n) * fact).to_basis("h")


def test_trace_is_cyclic():
    rng = random.Random(20260826)
    perms4 = list(permutations(4))
    for _ in range(50):
        a = HeckeElem(4, {rng.choice(perms4): rng.randint(1, 3)
                          for _ in range(2)})
        b = HeckeElem(4, {rng.choice(perms4): rng.randint(1, 3)
                          for _ in range(2)})
        assert trace_elem(a * b) == trace_elem(b * a)


def test_trace_triangle_n4():
    from ncmac.chromatic import omega_X_sym
    for w in permutations(4):
        if not is_codominant(w):
            continue
        tr = trace_sym(lascoux_element(w)).to_basis("s")
        chrom = omega_X_sym(dyck_graph_of(w), var="q").to_basis("s")
        an = theta_to_sym(abreu_nigro_theta(w)).to_basis("s")
        assert tr == chrom == an


def test_hessenberg_function():
    assert hessenberg_function((3, 2, 4, 1)) == (3, 3, 4, 4)


def test_admissible_edges_and_relation():
    sigma = (3, 2, 1)
    assert admissible_edges(sigma) == [(1, 3)]
    s0, s1, s2 = relation_triple(sigma, (1, 3))
    assert (s0, s1, s2) == ((3, 2, 1), (2, 3, 1), (1, 3, 2))
    c0, c1, c2 = (interval_sum(w) for w in (s0, s1, s2))
    lhs = interval_sum((1, 3, 2)) * c1
    assert lhs == c0 + c2.scale(Q)


def test_yb_element_is_word_independent():
    u = tuple(LaurentPoly.gen(("z1", "z2", "z3", "z4"), "z%d" % i)
              for i in range(1, 5))
    for w in permutations(4):
        ref = yb_element(w, u)
        for word in all_reduced_words(w):
            assert yb_element(w, u, word=word) == ref


def test_trace_y21_golden():
    # tr Y_21(z1, z2) = (z2/z1 - 1) theta_2 + (q - 1) theta_11, and in the
    # Schur basis z1 tr = (q z2 - z1) s_2 + (q z1 - z2) s_11
    V = ("q", "z1", "z2")
    q, z1, z2 = (LaurentPoly.gen(V, v) for v in V)
    tex = trace_elem(yb_element((2, 1), (z1, z2)))
    want = {(2,): z2 * z1 ** -1 - 1, (1, 1): q - 1}
    assert {k: v * LaurentPoly.const(V, 1) for k, v in tex.items()} == want
    f = theta_to_sym(tex).to_basis("s")
    assert f.coefficient((2,)) * z1 == q * z2 - z1
    assert f.coefficient((1, 1)) * z1 == q * z1 - z2


def test_trace_y231_golden():
    # (q - 1) tr Y_231(1, t1, t2) equals the multi-t column Macdonald
    # polynomial H_111 evaluated at (q-1)X
    V = ("q", "t1", "t2")
    q, t1, t2 = (LaurentPoly.gen(V, v) for v in V)
    one = LaurentPoly.const(V, 1)
    tex = trace_elem(yb_element((2, 3, 1), (one, t1, t2)))
    want = {(3,): (t2 - 1) * (t1 - 1), (2, 1): (q - 1) * (t1 + t2 - 2),
            (1, 1, 1): (q - 1) ** 2}
    assert {k: v * one for k, v in tex.items()} == want
    lhs = theta_to_sym(tex).scale(q - 1)
    rhs = H_sym((1, 1, 1), multi_t=True).plethysm_scale(
        lambda k: q ** k - 1)
    assert lhs.to_basis("s") == rhs.to_basis("s")


def test_column_yb_identity():
    # (q - 1) tr Y_{23...n1}(1, t1, ..., t_{n-1}) = H_{1^n}((q-1)X)
    for n in (2, 3, 4, 5):
        V = ("q",) + tuple("t%d" % i for i in range(1, n))
        q = LaurentPoly.gen(V, "q")
        u = (LaurentPoly.const(V, 1),) + tuple(LaurentPoly.gen(V, v)
                                               for v in V[1:])
        sigma = tuple(range(2, n + 1)) + (1,)
        lhs = theta_to_sym(trace_elem(yb_element(sigma, u))).scale(q - 1)
        rhs = H_sym((1,) * n, multi_t=True).plethysm_scale(
            lambda k: q ** k - 1)
        assert lhs.to_basis("s") == rhs.to_basis("s")


def test_sigma_mu_golden():
    assert sigma_mu((2, 1, 1)) == (4, 2, 1, 3)
    assert sigma_mu((3, 2)) == (5, 4, 3, 2, 1)
    assert sigma_mu((2, 2, 2)) == (6, 5, 2, 1, 4, 3)


def test_v_mu_golden():
    V = ("q", "t1", "t2")
    q, t1, t2 = (LaurentPoly.gen(V, v) for v in V)
    one = LaurentPoly.const(V, 1)
    got = tuple(m * one for m in v_mu((2, 1, 1), multi_t=True))
    assert got == (one, q, t2 * t1 ** -1, t2)
    W = ("q", "t")
    qs, t = (LaurentPoly.gen(W, v) for v in W)
    ones = LaurentPoly.const(W, 1)
    got = tuple(m * ones for m in v_mu((3, 2)))
    assert got == (ones, qs, qs ** 2, t, qs * t)


def test_yb_macdonald_single_t():
    for mu in [(2,), (1, 1), (2, 1), (1, 1, 1), (2, 2), (2, 1, 1)]:
        f = yb_macdonald(mu).to_basis("s")
        assert f == tildeH_sym(mu, multi_t=False).to_basis("s")


def test_yb_macdonald_multi_t():
    for mu in [(2, 1), (2, 2), (2, 1, 1), (3, 2)]:
        f = yb_macdonald(mu, multi_t=True).to_basis("s")
        assert f == tildeH_sym(mu, multi_t=True).to_basis("s")


def test_yb_macdonald_unsupported_shape():
    with pytest.raises(ValueError):
        yb_macdonald((3, 2, 1), multi_t=True)


def test_census_small():
    found3 = {mu: yb_census(mu) for mu in partitions(3)}
    assert sigma_mu((2, 1)) in found3[(2, 1)]
    assert sigma_mu((1, 1, 1)) in found3[(1, 1, 1)]
    counts4 = {mu: len(yb_census(mu)) for mu in partitions(4)}
    assert counts4 == {(4,): 7, (3, 1): 4, (2, 2): 3, (2, 1, 1): 2,
                       (1, 1, 1, 1): 2}

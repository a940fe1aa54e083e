from fractions import Fraction

from hypothesis import given, settings, strategies as st

from ncmac.perms import partitions
from ncmac.rings import LaurentPoly
from ncmac.symfunc import BASES, SymFunc, sym_gen, theta, theta_partition


def all_partitions(max_n):
    out = []
    for n in range(1, max_n + 1):
        out.extend(partitions(n))
    return out


PARTS6 = all_partitions(6)

sym_elems = st.dictionaries(st.sampled_from(PARTS6),
                            st.integers(-5, 5).filter(bool),
                            min_size=1, max_size=4)


@given(st.sampled_from(BASES), sym_elems)
@settings(max_examples=80, deadline=None)
def test_basis_round_trips(basis, coeffs):
    f = SymFunc(basis, coeffs)
    for other in BASES:
        assert f.to_basis(other).to_basis(basis) == f


@given(st.sampled_from(BASES), sym_elems)
@settings(max_examples=60, deadline=None)
def test_omega_is_an_involution(basis, coeffs):
    f = SymFunc(basis, coeffs)
    assert f.omega().omega() == f


def test_omega_swaps_e_and_h():
    for lam in PARTS6:
        assert SymFunc.term("e", lam).omega() == SymFunc.term("h", lam)


def test_schur_pieri_spot():
    s1 = sym_gen("s", 1)
    assert s1 * s1 == sym_gen("s", 2) + sym_gen("s", 1, 1)
    s21 = sym_gen("s", 2, 1)
    assert s1 * s21 == (sym_gen("s", 3, 1) + sym_gen("s", 2, 2)
                        + sym_gen("s", 2, 1, 1))


def test_theta_small():
    # Theta_r = h_r((q-1)X)/(q-1), expanded over the p basis
    q = LaurentPoly.gen(("q",), "q")
    t1 = theta(1).to_basis("p")
    assert t1 == sym_gen("p", 1).to_basis("p")
    t2 = theta(2).to_basis("p")
    want = (sym_gen("p", 2).scale((q + 1) * Fraction(1, 2))
            + sym_gen("p", 1, 1).scale((q - 1) * Fraction(1, 2)))
    assert t2 == want.to_basis("p")


def test_theta_partition_is_multiplicative():
    a = theta_partition((2, 1))
    b = theta(2) * theta(1)
    assert a.to_basis("p") == b.to_basis("p")


def test_plethysm_scale():
    # p_k -> c_k p_k
    q = LaurentPoly.gen(("q",), "q")
    f = sym_gen("p", 2, 1)
    g = f.plethysm_scale(lambda k: q ** k)
    assert g == sym_gen("p", 2, 1).scale(q ** 3)

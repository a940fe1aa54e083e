from hypothesis import given, settings, strategies as st

from ncmac.perms import packed_words, permutations
from ncmac.rings import LaurentPoly
from ncmac.wqsym import (QS, WQ, blocks_of, coarsenings, fundamental_image,
                         refinements, word_of_blocks)


def test_blocks_round_trip():
    for w in packed_words(4):
        assert word_of_blocks(blocks_of(w), len(w)) == w


def test_coarsenings_contain_word_and_constant():
    for w in packed_words(4):
        cs = set(coarsenings(w))
        assert w in cs
        assert (1,) * len(w) in cs


def test_coarsening_counts_match_block_merges():
    # coarsening merges adjacent blocks of values: 2^(k-1) results
    for w in packed_words(4):
        assert len(set(coarsenings(w))) == 2 ** (max(w) - 1)


words4 = st.sampled_from(list(packed_words(4)))


@given(st.dictionaries(words4, st.integers(-4, 4).filter(bool),
                       min_size=1, max_size=4))
@settings(max_examples=50, deadline=None)
def test_wq_omega_is_an_involution(coeffs):
    f = WQ(coeffs)
    assert f.omega().omega() == f


def test_phi_round_trip():
    for sigma in permutations(4):
        f = WQ.from_phi({sigma: 1})
        assert f.to_phi() == {sigma: 1}


def test_phi_commutative_image_is_fundamental():
    for sigma in permutations(3):
        qs = fundamental_image({sigma: 1})
        assert qs == WQ.from_phi({sigma: 1}).commutative_image()


def test_refinements():
    assert set(refinements((2, 1))) == {(2, 1), (1, 1, 1)}
    assert (1, 2) in set(refinements((3,)))


def test_symmetric_detection():
    m = QS.monomial
    f = m((2, 1)) + m((1, 2))
    assert f.is_symmetric()
    assert not m((2, 1)).is_symmetric()
    assert f.to_sym().to_basis("m").coefficient((2, 1)) == 1

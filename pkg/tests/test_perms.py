from ncmac.perms import (apply_s, bruhat_lower, compose, conjugate,
                         cycle_type, identity, inverse, lehmer_code,
                         min_word, n_stat, packed_words, partitions,
                         permutations, reduced_word, sort_partition)


def test_identity_and_apply():
    assert identity(4) == (1, 2, 3, 4)
    assert apply_s((1, 2, 3), 1) == (2, 1, 3)


def test_lehmer_code():
    assert lehmer_code((3, 2, 4, 1)) == (2, 1, 1, 0)
    assert lehmer_code(identity(5)) == (0,) * 5


def test_reduced_word_round_trip():
    for w in permutations(5):
        cur = identity(5)
        for i in reduced_word(w):
            cur = apply_s(cur, i)
        assert cur == w
        assert len(reduced_word(w)) == sum(lehmer_code(w))


def test_inverse_and_compose():
    for w in permutations(4):
        assert compose(w, inverse(w)) == identity(4)
        assert compose(inverse(w), w) == identity(4)


def test_bruhat_lower_counts():
    assert len(bruhat_lower((3, 2, 1))) == 6
    assert len(bruhat_lower((1, 2, 3))) == 1
    # the interval below 3241 from the worked trace example has 12 elements
    assert len(bruhat_lower((3, 2, 4, 1))) == 12


def test_cycle_type():
    assert cycle_type((2, 1, 3)) == (2, 1)
    assert cycle_type((2, 3, 1)) == (3,)
    assert sort_partition((1, 3, 2)) == (3, 2, 1)


def test_partitions_counts():
    assert [len(list(partitions(n))) for n in range(1, 9)] == \
        [1, 2, 3, 5, 7, 11, 15, 22]


def test_conjugate_and_n_stat():
    assert conjugate((3, 2)) == (2, 2, 1)
    assert conjugate(conjugate((4, 2, 1))) == (4, 2, 1)
    assert n_stat((3, 2, 1)) == 0 * 3 + 1 * 2 + 2 * 1


def test_min_word_is_packed():
    for w in permutations(4):
        u = min_word(w)
        assert sorted(set(u)) == list(range(1, max(u) + 1))


def test_packed_words_count():
    # ordered set partitions: Fubini numbers
    assert len(list(packed_words(3))) == 13
    assert len(list(packed_words(4))) == 75

import pytest

from partalg import young
from partalg.scalars import rank_of_raw
from partalg.young import (
    Box,
    addable_boxes,
    conjugate,
    is_p_regular,
    partitions_upto,
    removable_boxes,
    specht_data,
    standard_tableaux,
    syt_count,
)


def test_addable_removable_examples():
    assert [(b.row, b.col, b.content) for b in addable_boxes(())] == [(1, 1, 0)]
    assert [(b.row, b.col, b.content) for b in removable_boxes((3, 1))] == [
        (1, 3, 2),
        (2, 1, -1),
    ]
    assert [(b.row, b.col, b.content) for b in addable_boxes((2, 2))] == [
        (1, 3, 2),
        (3, 1, -2),
    ]


def test_add_remove_roundtrip():
    for lam in partitions_upto(5):
        for b in addable_boxes(lam):
            bigger = young.add_box(lam, b)
            assert young.remove_box(bigger, b) == lam
        for b in removable_boxes(lam):
            smaller = young.remove_box(lam, b)
            assert young.add_box(smaller, b) == lam


def test_syt_count_examples():
    assert syt_count((4,)) == 1
    assert syt_count((2, 1)) == 2
    assert syt_count((3, 2)) == 5  # hook formula vs explicit enumeration below


def test_syt_count_matches_enumeration():
    for lam in partitions_upto(6):
        assert len(standard_tableaux(lam)) == syt_count(lam)


def test_conjugate():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    for lam in partitions_upto(6):
        assert conjugate(conjugate(lam)) == lam


def test_p_regularity():
    assert not is_p_regular((1, 1, 1), 3)
    assert is_p_regular((2, 1), 2)
    for lam in partitions_upto(6):
        assert is_p_regular(lam, 0)
    assert not is_p_regular((2, 2), 2)
    assert is_p_regular((2, 2), 3)


def test_specht_sign_and_trivial():
    triv = specht_data((3,))
    assert triv.dim == 1
    assert all(m == ((1,),) for m in triv.action)
    assert triv.form == ((1,),)
    sign = specht_data((1, 1))
    assert sign.action == (((-1,),),)


def test_specht_involutions_and_braid():
    for lam in partitions_upto(5):
        data = specht_data(lam)
        n = young.size(lam)
        dim = data.dim
        eye = tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim))

        def mul(a, b):
            return tuple(
                tuple(sum(a[i][t] * b[t][j] for t in range(dim)) for j in range(dim))
                for i in range(dim)
            )

        for m in data.action:
            assert mul(m, m) == eye
        for i in range(n - 1):
            for j in range(n - 1):
                a, b = data.action[i], data.action[j]
                if abs(i - j) >= 2:
                    assert mul(a, b) == mul(b, a)
                elif abs(i - j) == 1:
                    assert mul(a, mul(b, a)) == mul(b, mul(a, b))


def test_specht_form_symmetric_invariant():
    for lam in partitions_upto(5):
        data = specht_data(lam)
        dim = data.dim
        form = data.form
        assert all(form[i][j] == form[j][i] for i in range(dim) for j in range(dim))
        for m in data.action:
            # m^T . form . m == form
            lhs = [
                [
                    sum(m[a][i] * form[a][b] * m[b][j] for a in range(dim) for b in range(dim))
                    for j in range(dim)
                ]
                for i in range(dim)
            ]
            assert lhs == [list(r) for r in form]


def test_specht_form_rank_char_zero():
    for lam in partitions_upto(5):
        data = specht_data(lam)
        assert rank_of_raw(0, [list(r) for r in data.form]) == data.dim


def test_specht_form_rank_large_p():
    for lam in partitions_upto(5):
        n = young.size(lam)
        data = specht_data(lam)
        for p in (7, 11):
            if p > n:
                assert rank_of_raw(p, [list(r) for r in data.form]) == data.dim


def test_specht_21_form_ranks():
    data = specht_data((2, 1))
    raw = [list(r) for r in data.form]
    assert rank_of_raw(0, raw) == 2
    assert rank_of_raw(3, raw) == 1


def test_specht_size_bound():
    with pytest.raises(ValueError):
        specht_data((7,))


def test_permutation_matrix_homomorphism():
    data = specht_data((2, 2, 1))
    import random

    rng = random.Random(3)
    n = 5

    def mul(a, b):
        dim = len(a)
        return tuple(
            tuple(sum(a[i][t] * b[t][j] for t in range(dim)) for j in range(dim))
            for i in range(dim)
        )

    def compose(f, g):
        # (f o g)(i) = f(g(i)), one-line 1-based
        return tuple(f[g[i] - 1] for i in range(n))

    for _ in range(15):
        f = list(range(1, n + 1))
        g = list(range(1, n + 1))
        rng.shuffle(f)
        rng.shuffle(g)
        lhs = data.permutation_matrix(tuple(compose(tuple(f), tuple(g))))
        rhs = mul(data.permutation_matrix(tuple(f)), data.permutation_matrix(tuple(g)))
        assert lhs == rhs

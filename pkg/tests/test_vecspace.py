from collections import Counter
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nzgraph import CapExceededError, SpaceParams, class_of, enumerate_vertices, twin_key
from nzgraph.vecspace import label_for, label_from_digits

from conftest import naive_vectors


def test_order_n3_q2():
    assert len(enumerate_vertices(SpaceParams(3, 2))) == 7


def test_single_vertex():
    (v,) = enumerate_vertices(SpaceParams(1, 2))
    assert v.support == 1 and v.weight == 1


def test_weight_two_count_n2_q3():
    labels = enumerate_vertices(SpaceParams(2, 3))
    assert len(labels) == 8
    expected = sum(1 for d in naive_vectors(2, 3) if all(d))
    assert expected == 4
    assert sum(1 for v in labels if v.weight == 2) == expected


def test_class_of():
    b1b2 = label_from_digits((1, 1, 0), 2)
    assert class_of(b1b2) == 2
    assert class_of(label_from_digits((1, 0, 0), 2)) == 1
    labels = enumerate_vertices(SpaceParams(4, 2))
    assert Counter(map(class_of, labels))[2] == 6


def test_twin_key():
    a = label_from_digits((1, 2), 3)
    b = label_from_digits((2, 1), 3)
    assert twin_key(a) == twin_key(b) == 0b11
    assert twin_key(label_from_digits((1, 0), 3)) != twin_key(label_from_digits((0, 1), 3))
    assert len({twin_key(v) for v in enumerate_vertices(SpaceParams(2, 3))}) == 3


def test_label_text_puts_first_coordinate_left():
    assert label_from_digits((1, 1, 0), 2).text(2) == "110"
    assert label_for(1, 3, 2).text(2) == "100"


def test_cap():
    with pytest.raises(CapExceededError):
        SpaceParams(17, 2)
    assert SpaceParams(17, 2, vertex_cap=2**17).order == 2**17 - 1


@pytest.mark.parametrize("n,q", [(0, 2), (1, 1), (2, 0)])
def test_invalid_params(n, q):
    with pytest.raises(ValueError):
        SpaceParams(n, q)


small = st.tuples(st.integers(1, 5), st.integers(2, 5)).filter(lambda t: t[1] ** t[0] <= 2000)


@settings(max_examples=60, deadline=None)
@given(small)
def test_label_invariants(nq):
    n, q = nq
    labels = enumerate_vertices(SpaceParams(n, q))
    assert [v.index for v in labels] == list(range(1, q**n))
    for v in labels:
        assert sum(d * q**i for i, d in enumerate(v.digits)) == v.index
        assert all(bool(v.support >> i & 1) == (d != 0) for i, d in enumerate(v.digits))
        assert v.weight == bin(v.support).count("1") >= 1
    sizes = Counter(v.weight for v in labels)
    assert all(sizes[i] == comb(n, i) * (q - 1) ** i for i in range(1, n + 1))
    assert sum(sizes.values()) == q**n - 1
    groups = Counter(twin_key(v) for v in labels)
    assert len(groups) == 2**n - 1
    assert all(c == (q - 1) ** bin(m).count("1") for m, c in groups.items())
    assert labels == enumerate_vertices(SpaceParams(n, q))

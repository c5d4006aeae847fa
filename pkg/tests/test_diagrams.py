import itertools
import random

import pytest

from partalg.diagrams import (
    AlgebraElement,
    Diagram,
    all_diagrams,
    bell_number,
    concatenate,
    format_diagram,
    generator_a,
    generator_aa,
    generator_e,
    generator_s,
    identity_diagram,
    parse_diagram,
    set_partitions,
    stirling2,
)
from partalg.scalars import field

D0 = field(0, 7)  # a generic rational parameter


def test_propagating_number_examples():
    for r in range(1, 5):
        assert identity_diagram(r).propagating_number() == r
    intro = parse_diagram("{1,3,4,3',5'},{2,6'},{4'},{5,6,1',2'}")
    assert intro.degree == 6
    assert intro.propagating_number() == 3
    for r in range(2, 5):
        for i in range(1, r + 1):
            assert generator_a(i, r).propagating_number() == r - 1


def test_concatenate_involution_and_ai():
    for r in (2, 3, 4):
        for i in range(1, r):
            s = generator_s(i, r)
            assert concatenate(s, s) == (identity_diagram(r), 0)
        for i in range(1, r + 1):
            a = generator_a(i, r)
            assert concatenate(a, a) == (a, 1)


def test_figure1_concatenation():
    a = parse_diagram("{1,3,5,1'},{2},{4,6},{2',4'},{3'},{5'},{6'}")
    b = parse_diagram("{1,2'},{2},{3,1',3'},{4,6},{5},{4'},{5',6'}")
    result, exponent = concatenate(a, b)
    assert exponent == 2
    assert result == parse_diagram("{1,3,5,2'},{2},{4,6},{1',3'},{4'},{5',6'}")


def test_generator_pictures():
    assert generator_s(1, 2) == parse_diagram("{1,2'},{2,1'}")
    assert generator_a(1, 2) == parse_diagram("{1},{1'},{2,2'}")
    assert generator_e(1, 3) == parse_diagram("{1,2,1',2'},{3,3'}")
    assert generator_aa(1, 2) == parse_diagram("{1,2,1',2'}")
    assert generator_e(3, 3) == identity_diagram(3)


def test_multiply_unit_and_squares():
    r = 3
    one = AlgebraElement.from_diagram(identity_diagram(r), D0)
    x = AlgebraElement.from_diagram(generator_a(2, r), D0) + AlgebraElement.from_diagram(
        generator_s(1, r), D0
    ).scale(field(0, "2/3"))
    assert one.multiply(x) == x
    assert x.multiply(one) == x
    ai = AlgebraElement.from_diagram(generator_a(2, r), D0)
    assert ai.multiply(ai) == ai.scale(D0)
    for l in range(1, r + 1):
        el = AlgebraElement.from_diagram(generator_e(l, r), D0)
        assert el.multiply(el) == el


def test_e0_idempotent():
    e0 = AlgebraElement.e_zero(3, D0)
    assert e0.multiply(e0) == e0
    with pytest.raises(ZeroDivisionError):
        AlgebraElement.e_zero(3, field(0, 0))


def test_flip():
    for r in (2, 3):
        assert identity_diagram(r).flip() == identity_diagram(r)
        for i in range(1, r):
            assert generator_s(i, r).flip() == generator_s(i, r)
    d = parse_diagram("{1,2'},{2},{1'}")
    assert d.flip() == parse_diagram("{1',2},{2'},{1}")


def test_parse_format_roundtrip():
    text = "{1,3,4,3',5'},{2,6'},{4'},{5,6,1',2'}"
    d = parse_diagram(text)
    assert parse_diagram(format_diagram(d)) == d
    assert parse_diagram("{1,1'},{2,2'}") == identity_diagram(2)
    with pytest.raises(ValueError):
        parse_diagram("{1,1'}", degree=2)  # uncovered points
    with pytest.raises(ValueError):
        parse_diagram("{1,1'},{1,2,2'}")  # repeated point


def test_algebra_json_roundtrip():
    x = AlgebraElement.from_diagram(generator_s(1, 3), D0) + AlgebraElement.from_diagram(
        generator_a(2, 3), D0
    ).scale(field(0, "-5/2"))
    assert AlgebraElement.from_json(x.to_json()) == x
    y = AlgebraElement.from_diagram(generator_a(1, 2), field(5, 3))
    assert AlgebraElement.from_json(y.to_json()) == y


def random_diagram(rng, r):
    pts = [k for k in range(1, r + 1)] + [-k for k in range(1, r + 1)]
    rng.shuffle(pts)
    nblocks = rng.randint(1, 2 * r)
    blocks = [[] for _ in range(nblocks)]
    for p in pts:
        blocks[rng.randrange(nblocks)].append(p)
    blocks = [tuple(b) for b in blocks if b]
    return Diagram.from_blocks(r, blocks)


def test_concatenation_associative_randomized():
    rng = random.Random(7)
    for r in (2, 3, 4):
        for _ in range(40):
            x, y, z = (
                AlgebraElement.from_diagram(random_diagram(rng, r), D0) for _ in range(3)
            )
            assert x.multiply(y).multiply(z) == x.multiply(y.multiply(z))


def test_flip_antiinvolution_randomized():
    rng = random.Random(8)
    for r in (2, 3, 4):
        for _ in range(60):
            a, b = random_diagram(rng, r), random_diagram(rng, r)
            ab, e1 = concatenate(a, b)
            ba, e2 = concatenate(b.flip(), a.flip())
            assert ab.flip() == ba
            assert e1 == e2


def test_propagating_bound_randomized():
    rng = random.Random(9)
    for r in (2, 3, 4):
        for _ in range(60):
            a, b = random_diagram(rng, r), random_diagram(rng, r)
            ab, _ = concatenate(a, b)
            assert ab.propagating_number() <= min(
                a.propagating_number(), b.propagating_number()
            )


def test_half_flag_closure():
    delta = field(0, 2)
    r = 3
    half_diagrams = [d for d in all_diagrams(r) if d.top_bottom_joined(r)]
    rng = random.Random(10)
    for _ in range(30):
        x = AlgebraElement.from_diagram(rng.choice(half_diagrams), delta, half=True)
        y = AlgebraElement.from_diagram(rng.choice(half_diagrams), delta, half=True)
        prod = x.multiply(y)
        assert prod.half
        assert all(d.top_bottom_joined(r) for d in prod.terms)
    with pytest.raises(ValueError):
        AlgebraElement.from_diagram(generator_s(2, 3), delta, half=True)


def test_diagram_count_is_bell():
    for r in (1, 2, 3, 4):
        assert len(set(all_diagrams(r))) == bell_number(2 * r)
    assert bell_number(8) == 4140


def test_set_partition_and_stirling_counts():
    for n in range(7):
        parts = list(set_partitions(range(n)))
        assert len(parts) == bell_number(n)
        for k in range(n + 2):
            assert sum(1 for p in parts if len(p) == k) == stirling2(n, k)

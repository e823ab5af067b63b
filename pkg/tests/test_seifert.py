import random
from fractions import Fraction
from math import prod

import pytest

from conftest import random_rational, random_seifert_k3
from seifcert.errors import DomainError
from seifcert.seifert import (
    SeifertData,
    bad_vertex_count,
    euler_number,
    format_seifert,
    h1_order,
    normalize,
    parse_seifert,
    plumbing_tree,
    reverse_orientation,
    torus_surgery_seifert,
)

F = Fraction


def test_normalize_examples():
    M = normalize(-1, [F(5, 12), F(1, 3), F(1, 3)])
    assert (M.e0, M.r) == (-1, (F(5, 12), F(1, 3), F(1, 3)))
    M = normalize(0, [F(-1, 4), F(1, 5), F(1, 9)])
    assert (M.e0, M.r) == (-1, (F(3, 4), F(1, 5), F(1, 9)))
    M = normalize(2, [F(1), F(1, 2)])
    assert (M.e0, M.r) == (3, (F(1, 2),))


def test_parse_format_roundtrip():
    for text in ("-1;3/4,1/5,1/9", "-2;", "0;1/2"):
        assert format_seifert(parse_seifert(text)) == text
    assert format_seifert(parse_seifert("0;-1/4,1/5,1/9")) == "-1;3/4,1/5,1/9"


def test_euler_number_examples():
    assert euler_number(parse_seifert("-1;5/12,1/3,1/3")) == F(1, 12)
    assert euler_number(parse_seifert("-1;3/4,1/5,1/9")) == F(11, 180)
    assert euler_number(parse_seifert("0;")) == 0


def test_reverse_orientation():
    M = parse_seifert("-1;5/12,1/3,1/3")
    assert format_seifert(reverse_orientation(M)) == "-2;2/3,2/3,7/12"
    assert format_seifert(reverse_orientation(parse_seifert("-1;3/4,1/5,1/9"))) == "-2;8/9,4/5,1/4"
    rng = random.Random(11)
    for _ in range(100):
        M = random_seifert_k3(rng)
        assert reverse_orientation(reverse_orientation(M)) == M
        assert euler_number(reverse_orientation(M)) == -euler_number(M)


def test_h1_order_examples():
    assert h1_order(parse_seifert("-1;5/12,1/3,1/3")) == 9
    assert h1_order(parse_seifert("-1;3/4,1/5,1/9")) == 11
    assert h1_order(parse_seifert("-1;1/2")) == 1
    with pytest.raises(DomainError):
        h1_order(parse_seifert("0;"))


def test_plumbing_tree_examples():
    T = plumbing_tree(parse_seifert("-1;1/2,1/2,1/2"))
    assert T.weights == (-1, -2, -2, -2)
    assert [list(map(T.weights.__getitem__, leg)) for leg in T.legs()] == [[-2]] * 3
    T = plumbing_tree(parse_seifert("-1;3/4,1/5,1/9"))
    assert T.weights == (-1, -2, -2, -2, -5, -9)
    assert [[T.weights[v] for v in leg] for leg in T.legs()] == [[-2, -2, -2], [-5], [-9]]
    T = plumbing_tree(parse_seifert("-2;"))
    assert T.weights == (-2,) and T.parent == (-1,)


def test_plumbing_tree_invariants():
    rng = random.Random(23)
    for _ in range(60):
        M = random_seifert_k3(rng, max_den=9)
        T = plumbing_tree(M)
        for leg in T.legs():
            assert all(T.weights[v] <= -2 for v in leg)
        assert abs(T.intersection_matrix().det()) == h1_order(M)


def test_bad_vertex_count():
    assert bad_vertex_count(plumbing_tree(parse_seifert("-11;"))) == 0
    T = plumbing_tree(parse_seifert("-1;1/2,1/2,1/2"))
    assert bad_vertex_count(T) == 1  # the center: -1 > -3
    T = plumbing_tree(parse_seifert("-3;1/2,1/2,1/2"))
    assert bad_vertex_count(T) == 0


def test_torus_surgery_examples():
    assert format_seifert(torus_surgery_seifert(4, 5, 11)) == "-1;3/4,1/5,1/9"
    assert format_seifert(torus_surgery_seifert(3, 4, 5)) == "-1;2/3,1/4,1/7"
    assert torus_surgery_seifert(2, 3, 7).k <= 2
    assert torus_surgery_seifert(2, 3, 5).k <= 2
    with pytest.raises(DomainError):
        torus_surgery_seifert(4, 6, 11)
    with pytest.raises(DomainError):
        torus_surgery_seifert(2, 3, 0)
    with pytest.raises(DomainError):
        torus_surgery_seifert(2, 3, 6)  # reducible


def test_torus_surgery_h1():
    rng = random.Random(3)
    for _ in range(40):
        p = rng.randint(2, 7)
        q = rng.randint(p + 1, p + 9)
        if __import__("math").gcd(p, q) != 1:
            continue
        n = rng.choice([x for x in range(-30, 31) if x not in (0, p * q)])
        M = torus_surgery_seifert(p, q, n)
        assert h1_order(M) == abs(n)


def test_h1_additivity():
    # with e0 = -1 and e(M) > 0: |H1(M(0; r))| = |H1(M)| + prod q_i
    rng = random.Random(8)
    found = 0
    while found < 30:
        r = sorted((random_rational(rng) for _ in range(3)), reverse=True)
        M = SeifertData(-1, tuple(r))
        if euler_number(M) <= 0:
            continue
        found += 1
        Mprime = SeifertData(0, tuple(r))
        assert h1_order(Mprime) == h1_order(M) + prod(x.denominator for x in r)

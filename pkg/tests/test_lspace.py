import random
from fractions import Fraction

import pytest

from conftest import random_seifert_k3
from seifcert.errors import DomainError
from seifcert.lspace import (
    RealizabilityWitness,
    has_positive_transverse_contact,
    has_transverse_foliation,
    is_lspace,
    realizability_witness,
)
from seifcert.seifert import parse_seifert, reverse_orientation

F = Fraction


def test_witness_examples():
    assert realizability_witness((F(5, 12), F(1, 3), F(1, 3))) == RealizabilityWitness(2, 1)
    assert realizability_witness((F(3, 4), F(1, 5), F(1, 9))) is None
    assert realizability_witness((F(1, 2), F(1, 3), F(1, 7))) == RealizabilityWitness(5, 3)


def test_witness_domain():
    with pytest.raises(DomainError):
        realizability_witness((F(1, 2), F(1, 3)))
    with pytest.raises(DomainError):
        realizability_witness((F(3, 2), F(1, 3), F(1, 4)))


def test_witness_replays_and_restatement():
    # the two printed forms of the inequalities agree on found witnesses
    rng = random.Random(77)
    for _ in range(200):
        M = random_seifert_k3(rng)
        w = realizability_witness(M.r)
        if w is None:
            continue
        assert w.satisfies(M.r)
        m, a = w.m, w.a
        assert m * M.r[0] < a < m * (1 - M.r[1])
        assert all(m * x < 1 for x in M.r[2:])


def test_transverse_contact_examples():
    assert has_positive_transverse_contact(parse_seifert("-2;2/3,1/2,1/7"))
    assert has_positive_transverse_contact(parse_seifert("-1;5/12,1/3,1/3"))
    assert not has_positive_transverse_contact(parse_seifert("0;1/2,1/3,1/7"))
    # lens-space clause: e < 0
    assert has_positive_transverse_contact(parse_seifert("-1;1/2"))
    assert not has_positive_transverse_contact(parse_seifert("0;1/2"))


def test_transverse_foliation_examples():
    assert has_transverse_foliation(parse_seifert("-1;1/2,1/3,1/7"))
    assert not has_transverse_foliation(parse_seifert("-1;3/4,1/5,1/9"))
    assert has_transverse_foliation(parse_seifert("-2;1/2,1/2,1/2,1/2"))
    with pytest.raises(DomainError):
        has_transverse_foliation(parse_seifert("-1;1/2,1/3"))


def test_is_lspace_named_cases():
    assert not is_lspace(parse_seifert("-1;5/12,1/3,1/3")).is_lspace
    assert is_lspace(parse_seifert("-1;3/4,1/5,1/9")).is_lspace
    assert is_lspace(parse_seifert("-1;1/2,1/3,1/5")).is_lspace
    assert not is_lspace(parse_seifert("-1;1/2,1/3,1/7")).is_lspace
    assert is_lspace(parse_seifert("0;1/2")).reason == "lens-space"
    with pytest.raises(DomainError):
        is_lspace(parse_seifert("0;"))


def test_lspace_properties_random():
    rng = random.Random(2718)
    for _ in range(150):
        M = random_seifert_k3(rng)
        v = is_lspace(M)
        assert v.is_lspace == is_lspace(reverse_orientation(M)).is_lspace
        assert v.is_lspace == (not has_transverse_foliation(M))
        if M.e0 >= 0 or M.e0 <= -M.k:
            assert v.is_lspace
        if v.witness_plus is not None:
            assert v.witness_plus.satisfies(M.r)
        if v.witness_minus is not None:
            assert v.witness_minus.satisfies(reverse_orientation(M).r)

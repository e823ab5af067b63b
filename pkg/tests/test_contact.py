import itertools
import random
from fractions import Fraction

import pytest

from conftest import random_rational
from seifcert.contact import (
    ContactDiagram,
    classify,
    conjugate_candidate,
    d3,
    ding_geiges_chain,
    enumerate_candidates,
    identify_spinc,
    tightness_certificate,
)
from seifcert.errors import DomainError
from seifcert.exact import IntMatrix
from seifcert.floer import form_data, manifold_d_table
from seifcert.seifert import (
    SeifertData,
    euler_number,
    h1_order,
    parse_seifert,
    torus_surgery_seifert,
)

F = Fraction


def test_ding_geiges_chain_examples():
    assert ding_geiges_chain(F(-4, 3)) == [(-2, 0), (-2, 0), (-2, 0)]
    assert ding_geiges_chain(F(-5)) == [(-5, 3)]
    assert ding_geiges_chain(F(-2)) == [(-2, 0)]
    assert ding_geiges_chain(F(-7, 3)) == [(-3, 1), (-2, 0), (-2, 0)]
    with pytest.raises(DomainError):
        ding_geiges_chain(F(-1))
    with pytest.raises(DomainError):
        ding_geiges_chain(F(1, 2))


def test_candidate_counts():
    # count = product over slots of (s_j + 1); each head carries |a_0 + 1|
    # slots for the smooth slope -1 - 1/r
    assert len(enumerate_candidates(parse_seifert("-1;1/2,1/2,1/2"))) == 8
    assert len(enumerate_candidates(parse_seifert("-1;3/4,1/5,1/9"))) == 90
    with pytest.raises(DomainError):
        enumerate_candidates(parse_seifert("-2;1/2,1/2,1/2"))


def test_candidate_presentation_soundness():
    rng = random.Random(31)
    manifolds = [parse_seifert("-1;1/2,1/2,1/2"), parse_seifert("-1;2/3,1/4,1/7")]
    while len(manifolds) < 8:
        r = tuple(sorted((random_rational(rng, 7) for _ in range(3)), reverse=True))
        M = SeifertData(-1, r)
        if euler_number(M) != 0:
            manifolds.append(M)
    for M in manifolds:
        cands = enumerate_candidates(M)
        h1 = h1_order(M)
        for cand in cands[:20]:
            assert abs(cand.linking.det()) == h1
            assert cand.q == 2


def test_component_invariants():
    for cand in enumerate_candidates(parse_seifert("-1;3/4,1/5,1/9"))[:10]:
        for comp in cand.components:
            assert comp.tb == -1 - comp.positives - comp.negatives
            assert comp.rot == comp.positives - comp.negatives
            assert comp.smooth_framing == comp.tb + comp.contact_coefficient


def test_d3_empty_diagram():
    assert d3(ContactDiagram((), IntMatrix([]))) == 0


def test_d3_closed_form_values():
    # the (p, p+1) critical surgeries carry a candidate with the closed-form d3
    expectations = {
        3: F(-1),
        4: F(-25, 22),
        5: F(-3, 2),
    }
    for p, expected in expectations.items():
        M = torus_surgery_seifert(p, p + 1, p * p - p - 1)
        values = {d3(c) for c in enumerate_candidates(M)}
        assert expected in values


def test_conjugation_covariance():
    M = parse_seifert("-1;2/3,1/4,1/7")
    cands = {c.candidate_key: c for c in enumerate_candidates(M)}
    table = manifold_d_table(M)
    for key, cand in itertools.islice(cands.items(), 12):
        twin = cands[conjugate_candidate(cand)]
        assert d3(cand) == d3(twin)
        fd = form_data(table.table.tree.intersection_matrix())
        orbit = identify_spinc(cand, M, table)
        twin_orbit = identify_spinc(twin, M, table)
        assert {fd.conjugate_label(t) for t in orbit} == twin_orbit
        r1 = tightness_certificate(M, cand, table)
        r2 = tightness_certificate(M, twin, table)
        assert r1.verdict == r2.verdict


def test_identify_spinc_s3():
    # an S^3 presentation: the orbit is the unique label
    M = parse_seifert("-1;2/3,1/2")
    assert euler_number(M) > 0 and h1_order(M) == 1
    table = manifold_d_table(M)
    for cand in enumerate_candidates(M):
        orbit = identify_spinc(cand, M, table)
        assert len(orbit) == 1
        assert table.d(next(iter(orbit))) == 0


def test_zero_rot_class_gives_self_conjugate_orbit():
    # rot covector in the image of the linking matrix: single spin label (odd h1)
    M = parse_seifert("-1;2/3,1/4,1/7")
    table = manifold_d_table(M)
    fd_tree = form_data(table.table.tree.intersection_matrix())
    found = 0
    for cand in enumerate_candidates(M):
        fx = form_data(cand.linking)
        if all(v == 0 for v in fx.coker_class(cand.rot_vector)):
            found += 1
            orbit = identify_spinc(cand, M, table)
            assert len(orbit) == 1
            assert fd_tree.is_self_conjugate(next(iter(orbit)))
    assert found > 0


def test_d3_matches_plumbing_d_on_definite_chains():
    # contact (-1)-surgeries along a negative definite chain are Stein
    # fillable, so d3 equals the correction term at the rotation label
    from seifcert.contact import LegendrianUnknotComponent
    from seifcert.floer import d_invariants
    from seifcert.seifert import PlumbingTree

    for weights in [(-2,), (-5,), (-2, -2), (-3, -2), (-4, -3)]:
        n = len(weights)
        Q = IntMatrix(
            [
                [weights[i] if i == j else (1 if abs(i - j) == 1 else 0) for j in range(n)]
                for i in range(n)
            ]
        )
        tree = PlumbingTree(weights, (-1,) + tuple(range(n - 1)))
        values = d_invariants(tree).values
        fd = form_data(Q)
        slots = [abs(w + 2) for w in weights]
        for rots in itertools.product(*(range(-s, s + 1, 2) for s in slots)):
            comps = tuple(
                LegendrianUnknotComponent(
                    w + 1, r, -1, (abs(w + 2) + r) // 2, (abs(w + 2) - r) // 2
                )
                for w, r in zip(weights, rots)
            )
            diagram = ContactDiagram(comps, Q, (tuple(range(n)),), rots)
            assert d3(diagram) == values[fd.label_of(rots)]


def test_certificate_verdicts():
    M = torus_surgery_seifert(4, 5, 11)
    table = manifold_d_table(M)
    reports = [tightness_certificate(M, c, table) for c in enumerate_candidates(M)]
    nonzero = [r for r in reports if r.verdict == "Nonzero"]
    assert nonzero and all(r.d3 == F(-25, 22) for r in nonzero)
    assert not any(r.orbit_has_self_conjugate for r in nonzero)
    table_values = set(table.d_values().values())
    for r in reports:
        if r.verdict == "Nonzero":
            assert r.d3 in table_values
        assert r.spinc_orbit  # never empty when applicable


def test_certificate_not_applicable():
    M = parse_seifert("-1;1/4,1/4,1/4")  # e = -1/4 < 0
    assert euler_number(M) < 0
    cand = enumerate_candidates(M)[0]
    report = tightness_certificate(M, cand, manifold_d_table(M))
    assert report.verdict == "NotApplicable"


def test_classify_reports():
    rep = classify(parse_seifert("-1;3/4,1/5,1/9"))
    assert rep.lspace.is_lspace
    assert rep.exists_nonzero
    assert not rep.nonzero_with_self_conjugate_orbit
    assert rep.zero_twisting_forced
    assert rep.all_contact_structures_planar
    assert rep.all_conjugate_pairs

    rep = classify(parse_seifert("-1;5/12,1/3,1/3"))
    assert not rep.lspace.is_lspace
    assert rep.certificates  # certificates computed even off the L-space locus

    rep = classify(parse_seifert("0;1/2,1/3,1/7"))
    assert rep.lspace.is_lspace and rep.all_contact_structures_planar
    assert not rep.certificates and rep.note

    with pytest.raises(DomainError):
        classify(parse_seifert("-1;1/2,1/2"))

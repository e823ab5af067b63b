"""The candidate family of zero-twisting contact structures on
M(-1; r_1, ..., r_k), their homotopy invariants, and the tightness
certificate d3 = d.

The base diagram has two contact (+1)-surgery unknots (tb = -1, rot = 0)
and, for each multiplier r_i, a chain of contact (-1)-surgery unknots
realizing the rational surgery.  The two (+1)-curves and all chain heads
are pairwise push-offs of one tb = -1 unknot, hence link each other -1;
the smooth framing of the r_i curve is tb + contact coefficient
= -1 - 1/r_i, and the chain carries the negative continued fraction of
that smooth slope (consecutive components Hopf-linked).  A component with
framing a carries |a + 2| stabilization slots; one candidate per choice
of stabilization signs.

The homotopy invariant of a candidate is

    d3 = (c^2 - 3 sigma(X) - 2 b2(X)) / 4 + q,

with c the rotation covector, X the surgery 4-manifold and q the number
of (+1)-components; the empty diagram gets 0, anchoring the convention
to the standard tight 3-sphere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InternalCheckError
from .exact import IntMatrix, neg_cf, quad_value, signature
from .floer import (
    ManifoldDTable,
    apply_isomorphism,
    form_data,
    form_isomorphisms,
    linking_form,
    manifold_d_table,
)
from .lspace import LSpaceVerdict, is_lspace
from .seifert import SeifertData, euler_number, h1_order


@dataclass(frozen=True)
class LegendrianUnknotComponent:
    tb: int
    rot: int
    contact_coefficient: int  # +1 or -1
    positives: int
    negatives: int

    def __post_init__(self):
        if self.contact_coefficient not in (1, -1):
            raise DomainError("contact coefficient must be +1 or -1")
        if self.tb != -1 - self.positives - self.negatives:
            raise DomainError("tb inconsistent with stabilization counts")
        if self.rot != self.positives - self.negatives:
            raise DomainError("rot inconsistent with stabilization counts")

    @property
    def smooth_framing(self) -> int:
        return self.tb + self.contact_coefficient


@dataclass(frozen=True)
class ContactDiagram:
    components: tuple[LegendrianUnknotComponent, ...]
    linking: IntMatrix
    chains: tuple[tuple[int, ...], ...] = ()  # component indices per chain
    candidate_key: tuple[int, ...] = ()  # rot per component, canonical id

    def __post_init__(self):
        n = len(self.components)
        if self.linking.nrows != n:
            raise DomainError("linking matrix size mismatch")
        if n and not self.linking.is_symmetric():
            raise DomainError("linking matrix must be symmetric")
        for i, comp in enumerate(self.components):
            if self.linking[i][i] != comp.smooth_framing:
                raise DomainError("linking diagonal must carry the smooth framings")

    @property
    def q(self) -> int:
        return sum(1 for c in self.components if c.contact_coefficient == 1)

    @property
    def rot_vector(self) -> tuple[int, ...]:
        return tuple(c.rot for c in self.components)


def d3(diagram: ContactDiagram) -> Fraction:
    """Homotopy invariant of the induced plane field; 0 for the empty
    diagram (standard tight S^3)."""
    n = len(diagram.components)
    if n == 0:
        return Fraction(0)
    Q = diagram.linking
    if Q.det() == 0:
        raise DomainError("singular linking matrix: not a rational homology sphere")
    c_sq = quad_value(Q, diagram.rot_vector)
    return (c_sq - 3 * signature(Q) - 2 * n) / 4 + diagram.q


def ding_geiges_chain(slope: Fraction) -> list[tuple[int, int]]:
    """Chain of contact (-1)-surgery unknots realizing a rational surgery
    of the given smooth slope < -1 on a tb = -1 unknot.

    Returns ``[(a_j, s_j)]``: component j has smooth framing a_j, so
    tb = a_j + 1 and s_j = |a_j + 2| stabilization slots.  Consecutive
    components link once, and the head links its parent curve.
    """
    slope = Fraction(slope)
    if slope >= -1:
        raise DomainError(f"chain expansion requires slope < -1, got {slope}")
    return [(a, abs(a + 2)) for a in neg_cf(slope)]


@dataclass(frozen=True)
class _Skeleton:
    """Everything about the family except the stabilization signs."""

    manifold: SeifertData
    framings: tuple[int, ...]
    linking: IntMatrix
    chains: tuple[tuple[int, ...], ...]
    slots: tuple[int, ...]  # per component


def _build_skeleton(M: SeifertData) -> _Skeleton:
    if M.e0 != -1:
        raise DomainError("the candidate family is defined for e0 = -1")
    if M.k < 1:
        raise DomainError("need at least one multiplier")
    framings = [0, 0]
    slots = [0, 0]
    chains = []
    for x in M.r:
        chain = ding_geiges_chain(-1 - 1 / x)
        idx = []
        for a, s in chain:
            framings.append(a)
            slots.append(s)
            idx.append(len(framings) - 1)
        chains.append(tuple(idx))
    n = len(framings)
    lk = [[0] * n for _ in range(n)]
    for i in range(n):
        lk[i][i] = framings[i]
    hubs = [0, 1] + [chain[0] for chain in chains]  # push-offs of one unknot
    for i, j in itertools.combinations(hubs, 2):
        lk[i][j] = lk[j][i] = -1
    for chain in chains:
        for a, b in zip(chain, chain[1:]):
            lk[a][b] = lk[b][a] = 1
    skel = _Skeleton(M, tuple(framings), IntMatrix(lk), tuple(chains), tuple(slots))
    if abs(skel.linking.det()) != h1_order(M):
        raise InternalCheckError(f"candidate presentation determinant mismatch for {M}")
    return skel


def _assemble(skel: _Skeleton, rots: tuple[int, ...]) -> ContactDiagram:
    comps = []
    for i, (a, s, rho) in enumerate(zip(skel.framings, skel.slots, rots)):
        coeff = 1 if i < 2 else -1
        pos = (s + rho) // 2
        comps.append(
            LegendrianUnknotComponent(
                tb=a + 1 if i >= 2 else -1,
                rot=rho,
                contact_coefficient=coeff,
                positives=pos,
                negatives=s - pos,
            )
        )
    return ContactDiagram(tuple(comps), skel.linking, skel.chains, rots)


def enumerate_candidates(M: SeifertData) -> list[ContactDiagram]:
    """One diagram per assignment of stabilization signs.

    A component with s slots contributes the s+1 rotation numbers
    -s, -s+2, ..., s; the total count is the product of (s_j + 1).
    Candidates come in conjugate pairs (global sign flip).
    """
    skel = _build_skeleton(M)
    choices = [range(-s, s + 1, 2) for s in skel.slots]
    return [_assemble(skel, rots) for rots in itertools.product(*choices)]


def conjugate_candidate(diagram: ContactDiagram) -> tuple[int, ...]:
    """Key of the candidate with every stabilization sign reversed."""
    return tuple(-r for r in diagram.candidate_key)


# -- spin-c identification and the certificate -----------------------------


def identify_spinc(
    diagram: ContactDiagram, M: SeifertData, table: ManifoldDTable
) -> frozenset:
    """Labels of the plumbing table that can carry the diagram's spin-c
    structure.

    The class of the rotation covector in the cokernel of the diagram's
    linking matrix is transported through every linking-form isomorphism
    onto the plumbing side (with the pairing negated when the plumbing
    bounds the reverse orientation); a table label survives when its
    Chern class is hit.  The orbit provably contains the structure
    induced by the contact structure.
    """
    if table.manifold != M:
        raise DomainError("d-table was computed for a different manifold")
    fx = form_data(diagram.linking)
    fw = form_data(table.table.tree.intersection_matrix())
    form_x = linking_form(diagram.linking)
    form_w = linking_form(table.table.tree.intersection_matrix())
    # table.sign = -1 means the tree bounds -M, whose pairing is the negative
    source = form_x if table.sign == 1 else form_x.negated()
    isos = form_isomorphisms(source, form_w)
    if not isos:
        raise InternalCheckError(
            "no linking-form isomorphism between presentations of the same manifold"
        )
    gamma = fx.coker_class(diagram.rot_vector)
    targets = {apply_isomorphism(iso, gamma, form_w) for iso in isos}
    orbit = frozenset(
        label for label in table.labels() if fw.label_c1(label) in targets
    )
    if not orbit:
        raise InternalCheckError("spin-c identification produced an empty orbit")
    return orbit


@dataclass(frozen=True)
class CertificateReport:
    candidate_key: tuple[int, ...]
    d3: Fraction
    spinc_orbit: frozenset
    d_values_on_orbit: frozenset
    verdict: str  # Nonzero | Inconclusive | Ambiguous | NotApplicable
    conjugate_key: tuple[int, ...] = ()
    orbit_has_self_conjugate: bool = False


def tightness_certificate(
    M: SeifertData, diagram: ContactDiagram, table: ManifoldDTable
) -> CertificateReport:
    """Nonvanishing certificate for the contact invariant of a candidate.

    Requires e(M) > 0; then the invariant is nonzero whenever
    d3 = d(M, t) for the induced spin-c structure t.  Since t is only
    known up to the identification orbit, the verdict is Nonzero exactly
    when every orbit label matches; disagreement across the orbit is
    reported as Ambiguous rather than guessed.
    """
    value = d3(diagram)
    conj = conjugate_candidate(diagram)
    if euler_number(M) <= 0:
        return CertificateReport(diagram.candidate_key, value, frozenset(), frozenset(), "NotApplicable", conj)
    orbit = identify_spinc(diagram, M, table)
    matches = [table.d(t) == value for t in orbit]
    if all(matches):
        verdict = "Nonzero"
    elif not any(matches):
        verdict = "Inconclusive"
    else:
        verdict = "Ambiguous"
    fw = form_data(table.table.tree.intersection_matrix())
    return CertificateReport(
        diagram.candidate_key,
        value,
        orbit,
        frozenset(table.d(t) for t in orbit),
        verdict,
        conj,
        any(fw.is_self_conjugate(t) for t in orbit),
    )


# -- the end-to-end report --------------------------------------------------


@dataclass(frozen=True)
class ClassifyReport:
    manifold: SeifertData
    lspace: LSpaceVerdict
    zero_twisting_forced: bool
    all_contact_structures_planar: bool
    zero_twisting_tight_planar: bool
    certificates: tuple[CertificateReport, ...]
    exists_nonzero: bool
    all_conjugate_pairs: bool
    nonzero_with_self_conjugate_orbit: bool
    note: str = ""


def classify(M: SeifertData, max_candidates: int | None = None) -> ClassifyReport:
    """Full report for a three-multiplier Seifert space.

    L-space status first; an L-space forces every tight structure to have
    zero maximal twisting, so for e0 = -1 the enumerated family is
    exhaustive and each candidate gets a certificate.  Planarity flags:
    zero-twisting tight structures are always planar here, and on an
    L-space with e0 >= -1 every contact structure is.
    """
    if M.k != 3:
        raise DomainError("classification report is defined for exactly 3 multipliers")
    if euler_number(M) == 0:
        raise DomainError("e(M) = 0: not a rational homology sphere")
    verdict = is_lspace(M)
    planar_all = verdict.is_lspace and M.e0 >= -1
    certificates: list[CertificateReport] = []
    note = ""
    if M.e0 == -1:
        candidates = enumerate_candidates(M)
        if max_candidates is not None and len(candidates) > max_candidates:
            note = f"candidate list truncated to {max_candidates} of {len(candidates)}"
            candidates = candidates[:max_candidates]
        if euler_number(M) > 0:
            table = manifold_d_table(M)
            certificates = [tightness_certificate(M, d, table) for d in candidates]
        else:
            certificates = [
                CertificateReport(
                    d.candidate_key, d3(d), frozenset(), frozenset(),
                    "NotApplicable", conjugate_candidate(d),
                )
                for d in candidates
            ]
    else:
        note = (
            "candidate enumeration needs e0 = -1; "
            "reverse the orientation if e0(-M) = -1, otherwise only flags apply"
        )
    keys = {c.candidate_key for c in certificates}
    return ClassifyReport(
        manifold=M,
        lspace=verdict,
        zero_twisting_forced=verdict.is_lspace,
        all_contact_structures_planar=planar_all,
        zero_twisting_tight_planar=True,
        certificates=tuple(certificates),
        exists_nonzero=any(c.verdict == "Nonzero" for c in certificates),
        all_conjugate_pairs=all(c.conjugate_key in keys for c in certificates),
        nonzero_with_self_conjugate_orbit=any(
            c.verdict == "Nonzero" and c.orbit_has_self_conjugate for c in certificates
        ),
        note=note,
    )

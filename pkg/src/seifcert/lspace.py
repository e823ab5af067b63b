"""Decision procedures for transverse contact structures, transverse
foliations, and the L-space property of small Seifert fibered spaces.

Everything reduces to one arithmetic predicate on the multiplier tuple
``Gamma = (r_1 >= ... >= r_k)``: realizability, the existence of coprime
integers ``m > a > 0`` with

    r_1 < a/m,   r_2 < (m - a)/m,   r_i < 1/m  for i >= 3,

all inequalities strict.  The bound ``m < 1/r_3`` makes the search finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, gcd

from .errors import DomainError, InternalCheckError
from .seifert import SeifertData, euler_number, reverse_orientation


@dataclass(frozen=True)
class RealizabilityWitness:
    m: int
    a: int

    def satisfies(self, gamma) -> bool:
        """Replay the defining strict inequalities."""
        m, a = self.m, self.a
        if not (m > a > 0) or gcd(m, a) != 1:
            return False
        g = list(gamma)
        if g[0] >= Fraction(a, m) or g[1] >= Fraction(m - a, m):
            return False
        return all(x < Fraction(1, m) for x in g[2:])


@dataclass(frozen=True)
class LSpaceVerdict:
    is_lspace: bool
    reason: str  # e0-shortcut | lens-space | transverse-both-sides |
    #              no-transverse-on-plus-side | no-transverse-on-minus-side
    witness_plus: RealizabilityWitness | None = None
    witness_minus: RealizabilityWitness | None = None


def realizability_witness(gamma) -> RealizabilityWitness | None:
    """Lexicographically least witness ``(m, a)``, or None.

    Complete search: the i >= 3 constraints force ``m < 1/r_3``, and for
    each m every admissible a lies strictly between ``m*r_1`` and
    ``m*(1 - r_2)``.
    """
    g = [Fraction(x) for x in gamma]
    if len(g) < 3:
        raise DomainError("realizability search needs at least three multipliers")
    if any(not (0 < x < 1) for x in g):
        raise DomainError("multipliers must lie strictly in (0,1)")
    if g != sorted(g, reverse=True):
        raise DomainError("multipliers must be sorted non-increasingly")
    bound = 1 / g[2]
    m_max = int(bound) - 1 if bound.denominator == 1 else ceil(bound) - 1
    for m in range(2, m_max + 1):
        for a in range(1, m):
            if gcd(m, a) != 1:
                continue
            if g[0] < Fraction(a, m) and g[1] < Fraction(m - a, m):
                w = RealizabilityWitness(m, a)
                if not w.satisfies(g):
                    raise InternalCheckError("witness failed its own replay")
                return w
    return None


def has_positive_transverse_contact(M: SeifertData) -> bool:
    """Existence of a positive contact structure transverse to the fibers.

    True exactly when one of: k <= 2 and e(M) < 0; e0 <= -2; or e0 = -1
    with realizable multipliers.  For k <= 2 the realizability clause
    degenerates to e(M) < 0 (the i >= 3 constraints are vacuous and
    fractions are dense), so it is folded into the first clause.
    """
    if M.k <= 2:
        return euler_number(M) < 0 or M.e0 <= -2
    if M.e0 <= -2:
        return True
    return M.e0 == -1 and realizability_witness(M.r) is not None


def has_transverse_foliation(M: SeifertData) -> bool:
    """Existence of a smooth foliation transverse to the Seifert fibration.

    Supported only for k >= 3; the k <= 2 (lens space) cases are refused
    rather than guessed, since the realizability clause loses its finite
    search bound there.
    """
    if M.k <= 2:
        raise DomainError("transverse-foliation test unsupported for k <= 2")
    if -M.k + 2 <= M.e0 <= -2:
        return True
    if M.e0 == -1 and realizability_witness(M.r) is not None:
        return True
    if M.e0 == -M.k + 1:
        return realizability_witness(reverse_orientation(M).r) is not None
    return False


def is_lspace(M: SeifertData) -> LSpaceVerdict:
    """L-space decision for a Seifert fibered rational homology sphere.

    Lens spaces (k <= 2) are L-spaces outright.  Otherwise M is an
    L-space if and only if at least one of M, -M carries no positive
    transverse contact structure.  The shortcut for ``e0 >= 0`` or
    ``e0 <= -k`` must agree with the general criterion and is re-checked.
    """
    if euler_number(M) == 0:
        raise DomainError("e(M) = 0: not a rational homology sphere")
    if M.k <= 2:
        return LSpaceVerdict(True, "lens-space")

    Mrev = reverse_orientation(M)
    wit_plus = (
        realizability_witness(M.r) if M.e0 == -1 else None
    )
    wit_minus = (
        realizability_witness(Mrev.r) if Mrev.e0 == -1 else None
    )
    plus_side = has_positive_transverse_contact(M)
    minus_side = has_positive_transverse_contact(Mrev)
    lspace = not (plus_side and minus_side)

    if (M.e0 >= 0 or M.e0 <= -M.k) and not lspace:
        raise InternalCheckError(f"e0 shortcut disagrees with criterion on {M}")

    if not lspace:
        return LSpaceVerdict(False, "transverse-both-sides", wit_plus, wit_minus)
    if M.e0 >= 0 or M.e0 <= -M.k:
        reason = "e0-shortcut"
    elif not plus_side:
        reason = "no-transverse-on-plus-side"
    else:
        reason = "no-transverse-on-minus-side"
    return LSpaceVerdict(True, reason, wit_plus, wit_minus)

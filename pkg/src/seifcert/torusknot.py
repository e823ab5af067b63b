"""Alexander polynomials of torus knots and closed-form correction terms.

The symmetrized Alexander polynomial of T(p,q) is

    (1 - t^{pq}) (1 - t) / ((1 - t^p)(1 - t^q)) * t^{-(p-1)(q-1)/2},

computed here by exact polynomial division.  Its torsion coefficients
feed the surgery formula for the critical coefficient pq - p - q, giving
a route to d-invariants that is independent of any plumbing calculation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError, InternalCheckError


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divexact(num, den):
    """Exact division of integer polynomials (ascending coefficients)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        coef, rem = divmod(num[k + len(den) - 1], lead)
        if rem:
            raise InternalCheckError("polynomial division left a remainder")
        out[k] = coef
        if coef:
            for j, y in enumerate(den):
                num[k + j] -= coef * y
    if any(num):
        raise InternalCheckError("polynomial division left a remainder")
    return out


@dataclass(frozen=True)
class AlexanderData:
    """Symmetrized coefficients: Delta(t) = a[0] + sum a[i] (t^i + t^-i)."""

    p: int
    q: int
    a: tuple[int, ...]  # a[0..n], n = (p-1)(q-1)/2

    @property
    def n(self) -> int:
        return len(self.a) - 1

    def at_one(self) -> int:
        return self.a[0] + 2 * sum(self.a[1:])


def alexander_torus(p: int, q: int) -> AlexanderData:
    if not (2 <= p < q):
        raise DomainError("need 2 <= p < q")
    if gcd(p, q) != 1:
        raise DomainError(f"({p},{q}) not coprime")
    cyc = lambda m: [1] * m  # (1 - t^m) / (1 - t)
    # (1-t^{pq})(1-t)/((1-t^p)(1-t^q)) = (1+...+t^{pq-1}) / ((1+...+t^{p-1})(1+...+t^{q-1}))
    poly = _poly_divexact(_poly_divexact(cyc(p * q), cyc(p)), cyc(q))
    n = (p - 1) * (q - 1) // 2
    if len(poly) != 2 * n + 1:
        raise InternalCheckError("Alexander polynomial has unexpected degree")
    if poly != poly[::-1]:
        raise InternalCheckError("Alexander polynomial is not symmetric")
    data = AlexanderData(p, q, tuple(poly[n:]))
    if data.at_one() != 1:
        raise InternalCheckError("Alexander normalization Delta(1) = 1 failed")
    return data


def torsion_coefficient(p: int, q: int, j: int) -> int:
    """j-th torsion coefficient: sum_i i * a_{i+|j|}; zero for |j| >= n."""
    data = alexander_torus(p, q)
    j = abs(j)
    return sum(i * data.a[i + j] for i in range(1, data.n - j + 1))


def torsion_coefficients(p: int, q: int) -> list[int]:
    """The sequence r_0, r_1, ..., r_n (identically zero beyond)."""
    data = alexander_torus(p, q)
    return [
        sum(i * data.a[i + j] for i in range(1, data.n - j + 1))
        for j in range(data.n + 1)
    ]


def d_lens_n1(n: int, k: int) -> Fraction:
    """Correction term of the lens space L(n,1): ((n-2j)^2 - n)/(4n) with
    j the residue of k."""
    if n < 1:
        raise DomainError("need n >= 1")
    j = k % n
    return Fraction((n - 2 * j) ** 2 - n, 4 * n)


def d_critical_surgery(p: int, k: int, q: int | None = None) -> Fraction:
    """d-invariant of the critical (pq-p-q)-surgery on T(p,q) at label k.

    Defaults to q = p + 1.  Valid for |k| <= (pq - p - q)/2; outside that
    window the surgery formula is not asserted and the input is refused.
    """
    if q is None:
        q = p + 1
    n = p * q - p - q
    if abs(k) > Fraction(n, 2):
        raise DomainError(f"label {k} outside |k| <= {n}/2")
    return d_lens_n1(n, k) - 2 * torsion_coefficient(p, q, k)


def spin_d(p: int) -> Fraction:
    """d of the critical surgery on T(p,p+1) at the spin structure:
    -(3p+2)/4 for even p and -(p+1)/4 for odd p."""
    if p < 2:
        raise DomainError("need p >= 2")
    value = Fraction(-(3 * p + 2), 4) if p % 2 == 0 else Fraction(-(p + 1), 4)
    if value != d_critical_surgery(p, 0):
        raise InternalCheckError("spin-structure d disagrees with the surgery formula")
    return value


def critical_d_multiset(p: int, q: int | None = None) -> list[Fraction]:
    """All d-invariants of the critical surgery, over the n residues
    |k| <= (n-1)/2 (n = pq - p - q is odd)."""
    if q is None:
        q = p + 1
    n = p * q - p - q
    if n % 2 == 0:
        raise InternalCheckError("critical surgery coefficient should be odd")
    half = (n - 1) // 2
    return sorted(d_critical_surgery(p, k, q) for k in range(-half, half + 1))

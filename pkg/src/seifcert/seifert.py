"""Seifert invariants of small fibered rational homology spheres.

A manifold is encoded as ``M(e0; r_1, ..., r_k)`` with ``e0`` an integer
and the multipliers ``r_i`` rationals in the open interval (0, 1), sorted
non-increasingly.  The corresponding surgery picture is a central unknot
with framing ``e0`` and one meridional unknot with framing ``-1/r_i`` per
multiplier.  Textual form: ``"e0;r1,r2,...,rk"`` with rationals as "p/q".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd, prod

from .errors import DomainError, InternalCheckError, ParseError
from .exact import IntMatrix, Rational, neg_cf, parse_rational


@dataclass(frozen=True)
class SeifertData:
    """Normalized invariants ``(e0; r_1 >= ... >= r_k)`` with r_i in (0,1)."""

    e0: int
    r: tuple[Fraction, ...]

    def __post_init__(self):
        for x in self.r:
            if not (0 < x < 1):
                raise DomainError(f"multiplier {x} outside (0,1); normalize first")
        if list(self.r) != sorted(self.r, reverse=True):
            raise DomainError("multipliers must be sorted non-increasingly")

    @property
    def k(self) -> int:
        return len(self.r)

    def __str__(self) -> str:
        return format_seifert(self)


def parse_seifert(text: str) -> SeifertData:
    """Parse ``"e0;r1,r2,...,rk"``; slopes are normalized into (0,1)."""
    s = text.strip()
    if ";" not in s:
        raise ParseError(f"expected 'e0;r1,...,rk', got {text!r}")
    head, _, tail = s.partition(";")
    try:
        e0 = int(head.strip())
    except ValueError as exc:
        raise ParseError(f"bad central coefficient in {text!r}") from exc
    slopes = [parse_rational(tok) for tok in tail.split(",") if tok.strip()]
    return normalize(e0, slopes)


def format_seifert(M: SeifertData) -> str:
    return f"{M.e0};" + ",".join(str(x) for x in M.r)


def normalize(e0_raw: int, slopes) -> SeifertData:
    """Reduce arbitrary fractional data to the normal form.

    Each slope is split as ``n + f`` with ``f`` in [0,1); the integer part
    moves into the central coefficient and integral slopes are dropped.
    """
    e0 = int(e0_raw)
    fracs: list[Fraction] = []
    for s in slopes:
        s = Fraction(s)
        n = floor(s)
        e0 += n
        f = s - n
        if f != 0:
            fracs.append(f)
    fracs.sort(reverse=True)
    return SeifertData(e0, tuple(fracs))


def euler_number(M: SeifertData) -> Fraction:
    return Fraction(M.e0) + sum(M.r, Fraction(0))


def reverse_orientation(M: SeifertData) -> SeifertData:
    """``-M(e0; r_i) = M(-e0-k; 1-r_i)``, renormalized."""
    return normalize(-M.e0 - M.k, [1 - x for x in M.r])


def h1_order(M: SeifertData) -> int:
    """Order of the first homology: ``(prod q_i) * |e(M)|``."""
    e = euler_number(M)
    if e == 0:
        raise DomainError("e(M) = 0: not a rational homology sphere")
    order = prod(x.denominator for x in M.r) * abs(e)
    if order.denominator != 1:
        raise InternalCheckError(f"h1_order came out non-integral for {M}")
    return int(order)


@dataclass(frozen=True)
class PlumbingTree:
    """Star-shaped weighted tree: center first, then legs, center to leaf.

    ``parent[v]`` is the tree parent (-1 for the center); leg weights are
    all <= -2 while the center carries the central surgery coefficient.
    """

    weights: tuple[int, ...]
    parent: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.weights)

    def degree(self, v: int) -> int:
        childs = sum(1 for p in self.parent if p == v)
        return childs + (0 if self.parent[v] == -1 else 1)

    def legs(self) -> list[list[int]]:
        """Vertex indices of each leg, ordered from the center outward."""
        out: list[list[int]] = []
        for v in range(1, self.n):
            if self.parent[v] == 0:
                leg = [v]
                while True:
                    child = next(
                        (w for w in range(1, self.n) if self.parent[w] == leg[-1]), None
                    )
                    if child is None:
                        break
                    leg.append(child)
                out.append(leg)
        return out

    def intersection_matrix(self) -> IntMatrix:
        n = self.n
        q = [[0] * n for _ in range(n)]
        for v in range(n):
            q[v][v] = self.weights[v]
            p = self.parent[v]
            if p >= 0:
                q[v][p] = q[p][v] = 1
        return IntMatrix(q)


def plumbing_tree(M: SeifertData) -> PlumbingTree:
    """Integer surgery presentation along a star-shaped tree.

    The center gets weight ``e0``; leg ``i`` carries the coefficients of
    the negative continued fraction of ``-1/r_i``, read from the center.
    """
    weights = [M.e0]
    parent = [-1]
    for x in M.r:
        prev = 0
        for a in neg_cf(-1 / x):
            weights.append(a)
            parent.append(prev)
            prev = len(weights) - 1
    tree = PlumbingTree(tuple(weights), tuple(parent))
    if euler_number(M) != 0:
        if abs(tree.intersection_matrix().det()) != h1_order(M):
            raise InternalCheckError(f"plumbing determinant mismatch for {M}")
    return tree


def bad_vertex_count(T: PlumbingTree) -> int:
    """Vertices whose weight exceeds the negative of their degree."""
    return sum(1 for v in range(T.n) if T.weights[v] > -T.degree(v))


def torus_surgery_seifert(p: int, q: int, n: int) -> SeifertData:
    """Seifert data of ``n``-surgery on the positive (p, q) torus knot.

    The fibration has exceptional multiplicities among {p, q, |pq - n|}:
    the residues at p and q are ``-q^{-1} mod p`` and ``-p^{-1} mod q``,
    the Euler number is ``n / (p q (pq - n))``, and the third multiplier
    is pinned by integrality of the central coefficient.  Correctness is
    enforced by postcondition checks rather than trusted: the homology
    order must equal |n|, surgeries ``pq +- 1`` must yield at most two
    multipliers, and the critical surgery ``pq - p - q`` must show
    multiplicities {p, q, p+q}.
    """
    if p < 2 or q <= p:
        raise DomainError("need 2 <= p < q")
    if gcd(p, q) != 1:
        raise DomainError(f"({p},{q}) not coprime")
    if n == 0:
        raise DomainError("n = 0 is not a rational homology sphere surgery")
    sigma = p * q - n
    if sigma == 0:
        raise DomainError(
            f"n = pq = {n}: reducible surgery, not Seifert fibered over the sphere"
        )
    slopes = [
        Fraction((-pow(q, -1, p)) % p, p),
        Fraction((-pow(p, -1, q)) % q, q),
    ]
    e = Fraction(n, p * q * sigma)
    # third multiplier c/|sigma| with c in [0,|sigma|) forced by integrality
    f = e - slopes[0] - slopes[1]
    c_num = f * abs(sigma)
    if c_num.denominator != 1:
        raise InternalCheckError("third multiplier is not pinned by integrality")
    c = int(c_num) % abs(sigma)
    slopes.append(Fraction(c, abs(sigma)))
    e0 = f - slopes[2]
    if e0.denominator != 1:
        raise InternalCheckError("central coefficient came out non-integral")
    M = normalize(int(e0), slopes)

    if euler_number(M) != e:
        raise InternalCheckError("euler number mismatch in torus_surgery_seifert")
    if h1_order(M) != abs(n):
        raise InternalCheckError(f"homology order {h1_order(M)} != |n| = {abs(n)}")
    if n in (p * q + 1, p * q - 1) and M.k > 2:
        raise InternalCheckError(f"surgery {n} on T({p},{q}) should be a lens space")
    if n == p * q - p - q:
        denoms = sorted(x.denominator for x in M.r)
        if denoms != sorted((p, q, p + q)):
            raise InternalCheckError(
                f"critical surgery multiplicities {denoms} != {sorted((p, q, p + q))}"
            )
    return M

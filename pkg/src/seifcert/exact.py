"""Exact rational arithmetic and integer matrix algebra.

Rational numbers are ``fractions.Fraction`` throughout: arbitrary
precision, gcd-reduced, positive denominator, no floating point anywhere.
The textual form is ``"p/q"`` for non-integers and ``"n"`` for integers,
with no interior whitespace.

Integer matrices are immutable and exact.  The module provides the pieces
every other module leans on: negative continued fractions, Smith normal
form with unimodular transforms, exact determinants and inverses,
signatures and definiteness tests of symmetric forms, and evaluation of
``K^T Q^{-1} K``.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor

from .errors import DomainError, InternalCheckError, ParseError

Rational = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"n"`` (ASCII, no interior whitespace)."""
    s = text.strip()
    if not s:
        raise ParseError("empty rational literal")
    try:
        if "/" in s:
            num, den = s.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational literal {text!r}") from exc


def format_rational(x: Fraction | int) -> str:
    """Inverse of :func:`parse_rational`; integers print without a slash."""
    return str(Fraction(x))


def neg_cf(x: Fraction | int) -> list[int]:
    """Negative continued fraction expansion of ``x < -1``.

    Returns the unique ``[a_0, ..., a_m]`` with every ``a_j <= -2`` and

        x = a_0 - 1/(a_1 - 1/(... - 1/a_m)).

    The recursion is ``a = floor(x)``, ``x <- 1/(a - x)``; for non-integral
    ``x < -1`` the floor keeps every coefficient at most -2 and the
    remainder in the same domain, which gives both existence and
    uniqueness of the all-terms-<=-2 form.
    """
    x = Fraction(x)
    if x >= -1:
        raise DomainError(f"neg_cf requires x < -1, got {x}")
    coeffs: list[int] = []
    while True:
        a = floor(x)
        if x == a:
            coeffs.append(a)
            break
        coeffs.append(a)
        x = 1 / (a - x)  # a - x in (-1, 0), so x stays < -1
    if any(a > -2 for a in coeffs):
        raise InternalCheckError(f"neg_cf produced a coefficient > -2: {coeffs}")
    return coeffs


def eval_cf(coeffs) -> Fraction:
    """Evaluate ``a_0 - 1/(a_1 - 1/(... - 1/a_m))`` exactly."""
    if not coeffs:
        raise DomainError("eval_cf requires a nonempty coefficient list")
    value = Fraction(coeffs[-1])
    for a in reversed(coeffs[:-1]):
        if value == 0:
            raise DomainError(f"eval_cf hit an intermediate zero in {list(coeffs)}")
        value = a - 1 / value
    return value


def _nearest_quotient(x: int, y: int) -> int:
    """Quotient minimizing |x - q*y| (ties toward floor); y != 0."""
    q, r = divmod(x, y)
    if 2 * abs(r) > abs(y):
        q += 1
    return q


class IntMatrix:
    """Immutable integer matrix with exact linear algebra."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(int(e) for e in row) for row in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise DomainError("ragged rows in IntMatrix")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries) -> "IntMatrix":
        entries = list(entries)
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, i):
        return self.rows[i]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.rows]})"

    def is_symmetric(self) -> bool:
        n = self.nrows
        return self.ncols == n and all(
            self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i)
        )

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.rows)) if self.rows else IntMatrix([])

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise DomainError("dimension mismatch in matrix product")
        bt = list(zip(*other.rows)) if other.rows else []
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self.rows]
        )

    def apply(self, vec) -> tuple[int, ...]:
        vec = list(vec)
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.rows)

    def det(self) -> int:
        """Exact determinant via fraction-free (Bareiss) elimination."""
        n = self.nrows
        if self.ncols != n:
            raise DomainError("determinant of a non-square matrix")
        if n == 0:
            return 1
        a = [list(row) for row in self.rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        """Exact inverse as a tuple of tuples of Fractions."""
        n = self.nrows
        if self.ncols != n:
            raise DomainError("inverse of a non-square matrix")
        a = [[Fraction(e) for e in row] for row in self.rows]
        inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
            if piv is None:
                raise DomainError("matrix is singular")
            a[col], a[piv] = a[piv], a[col]
            inv[col], inv[piv] = inv[piv], inv[col]
            p = a[col][col]
            a[col] = [e / p for e in a[col]]
            inv[col] = [e / p for e in inv[col]]
            for r in range(n):
                if r != col and a[r][col] != 0:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                    inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
        return tuple(tuple(row) for row in inv)


def smith_form(A: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form: returns unimodular ``U, V`` and diagonal ``D``
    with ``U * A * V = D``, nonnegative diagonal, and ``d_1 | d_2 | ...``.

    Pivots are chosen with minimal absolute value to control entry growth.
    """
    n, m = A.nrows, A.ncols
    a = [list(row) for row in A.rows]
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    v = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for row in a:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    t = 0
    while t < min(n, m):
        # minimal-absolute-value nonzero pivot in the trailing block
        best = None
        for i in range(t, n):
            for j in range(t, m):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            # clear column t, restarting if a remainder beats the pivot
            dirty = False
            for i in range(t + 1, n):
                if a[i][t] != 0:
                    q = _nearest_quotient(a[i][t], a[t][t])
                    add_row(i, t, q)
                    if a[i][t] != 0:
                        swap_rows(i, t)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, m):
                if a[t][j] != 0:
                    q = _nearest_quotient(a[t][j], a[t][t])
                    add_col(j, t, q)
                    if a[t][j] != 0:
                        swap_cols(j, t)
                        dirty = True
                        break
            if dirty:
                continue
            if any(a[i][t] for i in range(t + 1, n)):
                continue
            # divisibility chain: pull in any entry the pivot misses
            offender = next(
                (
                    i
                    for i in range(t + 1, n)
                    for j in range(t + 1, m)
                    if a[i][j] % a[t][t] != 0
                ),
                None,
            )
            if offender is None:
                break
            add_row(t, offender, -1)
        t += 1

    for i in range(min(n, m)):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]

    U, D, V = IntMatrix(u), IntMatrix(a), IntMatrix(v)
    if U.mul(A).mul(V) != D:
        raise InternalCheckError("smith_form: U*A*V != D")
    if abs(U.det()) != 1 or abs(V.det()) != 1:
        raise InternalCheckError("smith_form: transform not unimodular")
    diag = [D[i][i] for i in range(min(n, m))]
    for x, y in zip(diag, diag[1:]):
        if x and y % x != 0:
            raise InternalCheckError("smith_form: divisibility chain broken")
    return U, D, V


def solve_linear(Q: IntMatrix, rhs) -> tuple[Fraction, ...]:
    """Solve ``Q x = rhs`` exactly; raises :class:`DomainError` if singular."""
    n = Q.nrows
    if Q.ncols != n:
        raise DomainError("solve_linear needs a square matrix")
    rhs = [Fraction(e) for e in rhs]
    if len(rhs) != n:
        raise DomainError("right-hand side length mismatch")
    a = [[Fraction(e) for e in row] + [rhs[i]] for i, row in enumerate(Q.rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise DomainError("singular matrix in solve_linear")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [e / p for e in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(a[i][n] for i in range(n))


def quad_value(Q: IntMatrix, K) -> Fraction:
    """``K^T Q^{-1} K`` for an invertible symmetric ``Q``, exactly."""
    K = [int(e) for e in K]
    if Q.nrows == 0:
        if K:
            raise DomainError("covector length mismatch")
        return Fraction(0)
    x = solve_linear(Q, K)
    return sum((Fraction(k) * xi for k, xi in zip(K, x)), Fraction(0))


def signature(Q: IntMatrix) -> int:
    """Signature of a nondegenerate symmetric integer matrix.

    Diagonalizes by exact congruence (simultaneous row/column operations
    over the rationals) and counts diagonal signs.
    """
    n = Q.nrows
    if not Q.is_symmetric():
        raise DomainError("signature requires a symmetric matrix")
    a = [[Fraction(e) for e in row] for row in Q.rows]
    sig = 0
    for t in range(n):
        if a[t][t] == 0:
            j = next((k for k in range(t + 1, n) if a[k][k] != 0), None)
            if j is not None:
                a[t], a[j] = a[j], a[t]
                for row in a:
                    row[t], row[j] = row[j], row[t]
            else:
                pair = next(
                    ((i, j) for i in range(t, n) for j in range(t, n) if a[i][j] != 0),
                    None,
                )
                if pair is None:
                    raise DomainError("signature of a degenerate form")
                i, j = pair
                # a[i][j] != 0 with zero diagonal: (e_i + e_j) has square 2a[i][j]
                a[i] = [x + y for x, y in zip(a[i], a[j])]
                for row in a:
                    row[i] = row[i] + row[j]
                if i != t:
                    a[t], a[i] = a[i], a[t]
                    for row in a:
                        row[t], row[i] = row[i], row[t]
        p = a[t][t]
        sig += 1 if p > 0 else -1
        for i in range(t + 1, n):
            if a[i][t] != 0:
                f = a[i][t] / p
                a[i] = [x - f * y for x, y in zip(a[i], a[t])]
                for row in a:
                    row[i] = row[i] - f * row[t]
    return sig


def is_negative_definite(Q: IntMatrix) -> bool:
    """Leading principal minors alternate: ``(-1)^k det(Q_k) > 0`` for all k."""
    n = Q.nrows
    if Q.ncols != n:
        raise DomainError("definiteness of a non-square matrix")
    if not Q.is_symmetric():
        return False
    a = [[Fraction(e) for e in row] for row in Q.rows]
    minor = Fraction(1)
    for t in range(n):
        if a[t][t] == 0:
            return False
        minor *= a[t][t]
        if minor * (-1) ** (t + 1) <= 0:
            return False
        for i in range(t + 1, n):
            if a[i][t] != 0:
                f = a[i][t] / a[t][t]
                a[i] = [x - f * y for x, y in zip(a[i], a[t])]
    return True

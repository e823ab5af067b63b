"""Correction terms of plumbed 3-manifolds and spin-c bookkeeping.

For a negative definite star-shaped tree with intersection form Q on n
vertices, the correction term of the boundary at the spin-c structure
labelled by a characteristic covector class [K] is

    d = max { (K'^T Q^{-1} K' + n) / 4 : K' characteristic, K' ~ K },

the maximum taken over the finite set of covectors satisfying the local
inequalities ``weight_v <= K'_v <= -weight_v`` (any global maximizer does,
since the move K' -> K' +- 2*Q*e_v changes the square by 4(|K'_v| + w_v)).

Spin-c structures are encoded through the Smith normal form U*Q*V = D:
the label of a characteristic K is the tuple ``(U*K) mod 2*d_i``, which
identifies K up to 2*Q*Z^n exactly; conjugation negates labels, and the
first Chern class is the reduction mod d_i.

The maximization itself is carried out exactly as a minimum of the
integer quadratic ``z^T (-Q) z - K0 . z`` over a finite coset box, by
dynamic programming along the legs of the tree.  A direct box-enumeration
variant is kept as an independent oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor, gcd, isqrt, lcm, prod

from .errors import DomainError, InternalCheckError
from .exact import IntMatrix, is_negative_definite, quad_value, smith_form
from .seifert import (
    PlumbingTree,
    SeifertData,
    bad_vertex_count,
    euler_number,
    h1_order,
    plumbing_tree,
    reverse_orientation,
)

Label = tuple[int, ...]


class FormData:
    """Smith form, exact inverse, and label machinery for an invertible
    symmetric integer matrix.  Built once per matrix and shared."""

    def __init__(self, Q: IntMatrix):
        if not Q.is_symmetric():
            raise DomainError("form data requires a symmetric matrix")
        self.Q = Q
        self.n = Q.nrows
        self.det = Q.det()
        if self.det == 0:
            raise DomainError("singular intersection form")
        self.U, self.D, self.V = smith_form(Q)
        self.diag = tuple(self.D[i][i] for i in range(self.n))
        if prod(self.diag) != abs(self.det):
            raise InternalCheckError("Smith diagonal does not match determinant")
        self.Uinv = IntMatrix(_fraction_rows_to_int(self.U.inverse()))
        self.inv = Q.inverse()
        self.char_base = tuple(Q[i][i] for i in range(self.n))

    # -- labels ---------------------------------------------------------

    def label_of(self, K) -> Label:
        K = [int(e) for e in K]
        for v, k in enumerate(K):
            if (k - self.char_base[v]) % 2:
                raise DomainError(f"covector {K} is not characteristic")
        y = self.U.apply(K)
        return tuple(yi % (2 * d) for yi, d in zip(y, self.diag))

    def labels(self) -> list[Label]:
        um = self.U.apply(self.char_base)
        out = []
        for x in itertools.product(*(range(d) for d in self.diag)):
            out.append(
                tuple((um[i] + 2 * x[i]) % (2 * self.diag[i]) for i in range(self.n))
            )
        return out

    def representative(self, label: Label) -> tuple[int, ...]:
        """A characteristic covector in the class of ``label``."""
        um = self.U.apply(self.char_base)
        x = []
        for i in range(self.n):
            delta = (label[i] - um[i]) % (2 * self.diag[i])
            if delta % 2:
                raise DomainError(f"label {label} has impossible parity")
            x.append(delta // 2)
        shift = self.Uinv.apply(x)
        K = tuple(self.char_base[i] + 2 * shift[i] for i in range(self.n))
        if self.label_of(K) != tuple(label):
            raise InternalCheckError("representative does not reproduce its label")
        return K

    def conjugate_label(self, label: Label) -> Label:
        return tuple((-yi) % (2 * d) for yi, d in zip(label, self.diag))

    def is_self_conjugate(self, label: Label) -> bool:
        return self.conjugate_label(label) == tuple(label)

    def label_c1(self, label: Label) -> tuple[int, ...]:
        """Chern class of the label in the cokernel (nontrivial coordinates)."""
        return tuple(
            label[i] % self.diag[i] for i in range(self.n) if self.diag[i] > 1
        )

    def coker_class(self, vec) -> tuple[int, ...]:
        y = self.U.apply([int(e) for e in vec])
        return tuple(y[i] % self.diag[i] for i in range(self.n) if self.diag[i] > 1)


def _fraction_rows_to_int(rows):
    out = []
    for row in rows:
        r = []
        for e in row:
            if e.denominator != 1:
                raise InternalCheckError("expected an integer matrix inverse")
            r.append(e.numerator)
        out.append(r)
    return out


@lru_cache(maxsize=None)
def form_data(Q: IntMatrix) -> FormData:
    return FormData(Q)


def spinc_labels(Q: IntMatrix) -> list[Label]:
    """All |det Q| spin-c labels of the boundary, canonically encoded."""
    fd = form_data(Q)
    labels = fd.labels()
    if len(set(labels)) != abs(fd.det):
        raise InternalCheckError("label enumeration missed or repeated a class")
    if any(fd.conjugate_label(l) not in set(labels) for l in labels):
        raise InternalCheckError("labels not closed under conjugation")
    return labels


def conjugate(Q: IntMatrix, label: Label) -> Label:
    return form_data(Q).conjugate_label(label)


# -- d-invariant tables ---------------------------------------------------


@dataclass(frozen=True)
class DTable:
    """Correction terms of the boundary of a plumbing tree.

    ``values[label]`` is d of the tree's own oriented boundary; the
    ``orientation`` tag says how that boundary relates to the manifold a
    caller asked about ("boundary" for the raw tree)."""

    values: dict
    tree: PlumbingTree
    orientation: str = "boundary"

    def conjugate_label(self, label: Label) -> Label:
        if self.tree.n == 0:
            return tuple(label)
        return form_data(self.tree.intersection_matrix()).conjugate_label(label)

    def self_conjugate_labels(self) -> list[Label]:
        return [l for l in self.values if self.conjugate_label(l) == l]


def _box_radii(fd: FormData, weights) -> list[int]:
    # |z_v| <= ((-Q)^{-1} |w|)_v for any optimum reached from an in-box K0
    radii = []
    for v in range(fd.n):
        bound = -sum(fd.inv[v][u] * abs(weights[u]) for u in range(fd.n))
        if bound < 0:
            raise InternalCheckError("negative coset radius; form not definite?")
        radii.append(max(1, floor(bound)))
    return radii


def _reduce_to_box(fd: FormData, weights, K):
    """Translate K by 2*Q*Z^n into the box |K_v| <= |w_v| (same class,
    never decreasing the square)."""
    n = fd.n
    K = [int(e) for e in K]
    target = [sum(fd.inv[i][j] * K[j] for j in range(n)) / 2 for i in range(n)]
    z = [round(t) for t in target]
    Q = fd.Q
    K = [K[u] - 2 * sum(Q[u][v] * z[v] for v in range(n)) for u in range(n)]
    steps = 0
    while True:
        v = next((v for v in range(n) if abs(K[v]) > abs(weights[v])), None)
        if v is None:
            return K
        # K + sign(K_v) * 2*Q*e_v pulls K_v toward the box and raises K^2
        eps = 1 if K[v] > 0 else -1
        for u in range(n):
            K[u] += eps * 2 * Q[u][v]
        steps += 1
        if steps > 10**6:
            raise InternalCheckError("box reduction failed to terminate")


def _coset_minimum(tree: PlumbingTree, K0, radii) -> int:
    """Exact min of z^T(-Q)z - K0.z over the integer box |z_v| <= radii[v]."""
    alpha = [-w for w in tree.weights]

    def leg_profile(leg):
        vals = None
        r_child = 0
        for v in reversed(leg):
            r, a, k = radii[v], alpha[v], K0[v]
            nxt = []
            for z in range(-r, r + 1):
                cost = a * z * z - k * z
                if vals is not None:
                    cost += min(
                        vals[i] - 2 * z * (i - r_child) for i in range(len(vals))
                    )
                nxt.append(cost)
            vals, r_child = nxt, r
        return vals, r_child

    profiles = [leg_profile(leg) for leg in tree.legs()]
    r0, a0, k0 = radii[0], alpha[0], K0[0]
    best = None
    for z in range(-r0, r0 + 1):
        total = a0 * z * z - k0 * z
        for vals, r in profiles:
            total += min(vals[i] - 2 * z * (i - r) for i in range(len(vals)))
        if best is None or total < best:
            best = total
    return best


def d_invariants(tree: PlumbingTree) -> DTable:
    """Correction terms of the boundary of a negative definite tree.

    Valid for at most one bad vertex; with two or more the characteristic
    maximum is not known to compute d, so the call is refused.
    """
    if tree.n == 0:
        return DTable({(): Fraction(0)}, tree)
    Q = tree.intersection_matrix()
    if not is_negative_definite(Q):
        raise DomainError("intersection form is not negative definite")
    if bad_vertex_count(tree) > 1:
        raise DomainError("two or more bad vertices: outside the validity domain")
    fd = form_data(Q)
    radii = _box_radii(fd, tree.weights)
    values: dict[Label, Fraction] = {}
    for label in fd.labels():
        K0 = _reduce_to_box(fd, tree.weights, fd.representative(label))
        k0_sq = quad_value(Q, K0)
        qmin = _coset_minimum(tree, K0, radii)
        values[label] = (k0_sq - 4 * qmin + tree.n) / 4
    table = DTable(values, tree)
    _check_table(fd, table)
    return table


def d_invariants_bruteforce(tree: PlumbingTree, box_scale: int = 1) -> DTable:
    """Oracle variant: enumerate the (optionally inflated) covector box.

    ``box_scale`` must be odd so the parity of the box endpoints matches
    the characteristic condition.
    """
    if box_scale % 2 == 0 or box_scale < 1:
        raise DomainError("box_scale must be an odd positive integer")
    if tree.n == 0:
        return DTable({(): Fraction(0)}, tree)
    Q = tree.intersection_matrix()
    if not is_negative_definite(Q):
        raise DomainError("intersection form is not negative definite")
    fd = form_data(Q)
    n = tree.n
    det = fd.det
    adj = [[fd.inv[i][j] * det for j in range(n)] for i in range(n)]
    adj = _fraction_rows_to_int(adj)
    axes = [range(w * box_scale, -w * box_scale + 1, 2) for w in tree.weights]
    best_num: dict[Label, int] = {}
    maximize = det > 0
    for K in itertools.product(*axes):
        num = sum(K[i] * sum(adj[i][j] * K[j] for j in range(n)) for i in range(n))
        label = fd.label_of(K)
        cur = best_num.get(label)
        if cur is None or (num > cur if maximize else num < cur):
            best_num[label] = num
    values = {
        label: (Fraction(num, det) + n) / 4 for label, num in best_num.items()
    }
    table = DTable(values, tree)
    _check_table(fd, table)
    return table


def _check_table(fd: FormData, table: DTable):
    if len(table.values) != abs(fd.det):
        raise InternalCheckError("d-table size differs from |det Q|")
    for label, val in table.values.items():
        if table.values[fd.conjugate_label(label)] != val:
            raise InternalCheckError("d-table breaks conjugation symmetry")


@dataclass(frozen=True)
class ManifoldDTable:
    """d-invariants of a Seifert manifold, routed through whichever of
    +-M carries the negative definite plumbing.

    ``sign`` is +1 when the tree's boundary is M itself and -1 when it is
    the reverse; ``d(label)`` always returns the value for M."""

    manifold: SeifertData
    table: DTable
    sign: int

    def d(self, label: Label) -> Fraction:
        return self.sign * self.table.values[label]

    def labels(self):
        return list(self.table.values)

    def d_values(self) -> dict:
        return {l: self.sign * v for l, v in self.table.values.items()}


def manifold_d_table(M: SeifertData) -> ManifoldDTable:
    """d-invariants of M, computed from the definite side and negated if
    the tree bounds -M (d changes sign under orientation reversal)."""
    e = euler_number(M)
    if e == 0:
        raise DomainError("e(M) = 0: not a rational homology sphere")
    if e < 0:
        tree = plumbing_tree(M)
        sign = 1
    else:
        tree = plumbing_tree(reverse_orientation(M))
        sign = -1
    table = d_invariants(tree)
    if len(table.values) != h1_order(M):
        raise InternalCheckError("d-table size differs from |H1|")
    return ManifoldDTable(M, table, sign)


# -- linking forms --------------------------------------------------------


@dataclass(frozen=True)
class LinkingForm:
    """Finite cyclic decomposition of coker(Q) with the pairing
    ``-Q^{-1} mod Z`` written on the Smith generators."""

    orders: tuple[int, ...]
    pairing: tuple[tuple[Fraction, ...], ...]

    @property
    def size(self) -> int:
        return prod(self.orders) if self.orders else 1

    def negated(self) -> "LinkingForm":
        return LinkingForm(
            self.orders,
            tuple(tuple((-x) % 1 for x in row) for row in self.pairing),
        )

    def elements(self):
        return itertools.product(*(range(d) for d in self.orders))

    def element_order(self, el) -> int:
        if not self.orders:
            return 1
        return lcm(*(d // gcd(x, d) for x, d in zip(el, self.orders)))

    def pair(self, a, b) -> Fraction:
        total = Fraction(0)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        total += x * y * self.pairing[i][j]
        return total % 1


def linking_form(Q: IntMatrix) -> LinkingForm:
    fd = form_data(Q)
    idx = [i for i in range(fd.n) if fd.diag[i] > 1]
    cols = [[fd.Uinv[s][i] for s in range(fd.n)] for i in idx]
    lam = []
    for ci in cols:
        row = []
        for cj in cols:
            val = -sum(
                ci[s] * fd.inv[s][t] * cj[t] for s in range(fd.n) for t in range(fd.n)
            )
            row.append(val % 1)
        lam.append(tuple(row))
    form = LinkingForm(tuple(fd.diag[i] for i in idx), tuple(lam))
    for i, d in enumerate(form.orders):
        # d * generator dies in the cokernel, so d * lambda(g_i, -) must be integral
        if any((d * form.pairing[i][j]) % 1 != 0 for j in range(len(form.orders))):
            raise InternalCheckError("linking form pairing not defined mod 1")
    return form


def form_isomorphisms(F1: LinkingForm, F2: LinkingForm):
    """All group isomorphisms coker1 -> coker2 preserving the pairing.

    Backtracks over generator images; the search space is all of G2 per
    generator, so the size guard keeps this a desk-scale operation.
    """
    if F1.size != F2.size:
        return []
    if F1.size > 10**4:
        raise DomainError("linking form too large for the isomorphism search")
    if F1.orders != F2.orders:
        # Smith chains are canonical, so unequal chains mean non-isomorphic groups
        return []
    if not F1.orders:
        return [()]
    elements = list(F2.elements())
    orders2 = {el: F2.element_order(el) for el in elements}
    k = len(F1.orders)
    gens1 = [tuple(int(i == j) for j in range(k)) for i in range(k)]
    isos = []

    def extend(images):
        i = len(images)
        if i == k:
            if _generates_all(images, F2):
                isos.append(tuple(images))
            return
        want_order = F1.orders[i]
        for h in elements:
            if orders2[h] != want_order:
                continue
            if F2.pair(h, h) != F1.pair(gens1[i], gens1[i]):
                continue
            if any(
                F2.pair(h, images[j]) != F1.pair(gens1[i], gens1[j]) for j in range(i)
            ):
                continue
            extend(images + [h])

    extend([])
    return isos


def _generates_all(images, F2: LinkingForm) -> bool:
    seen = {tuple([0] * len(F2.orders))}
    frontier = list(seen)
    while frontier:
        nxt = []
        for el in frontier:
            for g in images:
                s = tuple((a + b) % d for a, b, d in zip(el, g, F2.orders))
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    return len(seen) == F2.size


def apply_isomorphism(iso, element, F2: LinkingForm):
    k = len(F2.orders)
    out = [0] * k
    for coeff, img in zip(element, iso):
        for t in range(k):
            out[t] = (out[t] + coeff * img[t]) % F2.orders[t]
    return tuple(out)


# -- diagonal lattice embeddings ------------------------------------------


def embeds_in_diagonal(Q: IntMatrix, N: int) -> bool:
    """Does the lattice (Z^n, Q) embed in the negative diagonal of rank N?

    Searches for integer vectors with prescribed pairwise dot products
    (with respect to the standard positive form, after negating Q) by
    backtracking; fresh coordinates are used in canonical nonincreasing
    blocks, which quotients out the signed-permutation symmetry.
    """
    n = Q.nrows
    if not is_negative_definite(Q):
        raise DomainError("embedding test requires a negative definite form")
    if N < n:
        raise DomainError("rank bound below the rank of the form")
    order = _placement_order(Q)
    T = [[-Q[order[i]][order[j]] for j in range(n)] for i in range(n)]
    vectors: list[list[int]] = []
    supports: list[int] = []

    def place(i, used):
        if i == n:
            return True
        for vec, new_used in _vector_candidates(T, vectors, supports, i, used, N):
            vectors.append(vec)
            supports.append(new_used)
            if place(i + 1, new_used):
                return True
            vectors.pop()
            supports.pop()
        return False

    return place(0, 0)


def _placement_order(Q: IntMatrix) -> list[int]:
    n = Q.nrows
    adj = [
        [j for j in range(n) if j != i and Q[i][j] != 0] for i in range(n)
    ]
    remaining = set(range(n))
    order = []
    while remaining:
        if order:
            key = lambda v: (sum(1 for u in adj[v] if u not in remaining), len(adj[v]))
        else:
            key = lambda v: (len(adj[v]), -Q[v][v])
        v = max(sorted(remaining), key=key)
        order.append(v)
        remaining.remove(v)
    return order


def _square_partitions(s: int, max_len: int, max_val: int):
    """Nonincreasing positive integer tuples whose squares sum to s."""
    if s == 0:
        yield ()
        return
    if max_len == 0:
        return
    top = min(max_val, isqrt(s))
    for v in range(top, 0, -1):
        for rest in _square_partitions(s - v * v, max_len - 1, v):
            yield (v,) + rest


def _vector_candidates(T, vectors, supports, i, used, N):
    norm = T[i][i]
    targets = [T[j][i] for j in range(i)]
    suffix_sq = []
    for vec in vectors:
        acc = [0] * (used + 1)
        for t in range(used - 1, -1, -1):
            acc[t] = acc[t + 1] + vec[t] * vec[t]
        suffix_sq.append(acc)
    x = [0] * used
    dots = [0] * i

    def rec(t, rem):
        for j in range(i):
            if supports[j] == t and dots[j] != targets[j]:
                return
        if t == used:
            for part in _square_partitions(rem, N - used, isqrt(rem)) if rem else [()]:
                vec = x[:] + list(part) + [0] * (N - used - len(part))
                yield vec, used + len(part)
            return
        live = [j for j in range(i) if supports[j] > t]
        for j in live:
            gap = targets[j] - dots[j]
            if gap * gap > rem * suffix_sq[j][t]:
                return
        top = isqrt(rem)
        for val in range(-top, top + 1):
            x[t] = val
            if val:
                for j in live:
                    dots[j] += val * vectors[j][t]
            yield from rec(t + 1, rem - val * val)
            if val:
                for j in live:
                    dots[j] -= val * vectors[j][t]
        x[t] = 0

    yield from rec(0, norm)

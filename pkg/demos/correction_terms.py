"""Correction terms from plumbings, against two closed forms.

First the lens spaces L(n,1), whose d-invariants have a classical
formula; then the critical torus-knot surgeries, where the same numbers
arrive independently through Alexander-polynomial torsion coefficients.
"""

from seifcert import (
    d_invariants,
    d_lens_n1,
    format_seifert,
    manifold_d_table,
    plumbing_tree,
    reverse_orientation,
    torus_surgery_seifert,
)
from seifcert.floer import form_data
from seifcert.seifert import PlumbingTree
from seifcert.torusknot import critical_d_multiset, spin_d

if __name__ == "__main__":
    print("lens spaces: boundary of a single -n vertex, negated table")
    for n in (5, 11):
        tree = PlumbingTree((-n,), (-1,))
        table = d_invariants(tree)
        fd = form_data(tree.intersection_matrix())
        row = [str(-table.values[fd.label_of((n - 2 * j,))]) for j in range(n)]
        print(f"  n={n}: {' '.join(row)}")
        print(f"  closed form: {' '.join(str(d_lens_n1(n, j)) for j in range(n))}")
    print()

    for p in (3, 4, 5):
        n = p * p - p - 1
        M = torus_surgery_seifert(p, p + 1, n)
        print(f"p={p}: {n}-surgery on T({p},{p+1}) is {format_seifert(M)}")
        tree = plumbing_tree(reverse_orientation(M))
        print(f"  reverse-orientation plumbing has {tree.n} vertices, "
              f"weights {tree.weights}")
        table = manifold_d_table(M)
        plumbing_values = sorted(table.d_values().values())
        torsion_values = critical_d_multiset(p)
        print(f"  plumbing route: {' '.join(map(str, plumbing_values))}")
        print(f"  torsion route:  {' '.join(map(str, torsion_values))}")
        assert plumbing_values == torsion_values
        print(f"  spin value: {spin_d(p)}")
        print()

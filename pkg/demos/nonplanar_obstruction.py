"""Diagonal-lattice embeddings as a planarity obstruction.

Chains of -2 vertices embed into the standard negative diagonal lattice
(differences of basis vectors), but the plumbing lattice of the Poincare
sphere does not, for any rank up to 16.  Non-embeddability obstructs
planar open books for the filled contact structures.
"""

from seifcert import IntMatrix, embeds_in_diagonal, parse_seifert, plumbing_tree


def chain(length):
    return IntMatrix(
        [
            [-2 if i == j else (1 if abs(i - j) == 1 else 0) for j in range(length)]
            for i in range(length)
        ]
    )


if __name__ == "__main__":
    for L in (1, 2, 5, 7):
        print(f"chain of {L} vertices of weight -2 embeds in rank {L+1}: "
              f"{embeds_in_diagonal(chain(L), L + 1)}")

    tree = plumbing_tree(parse_seifert("-2;1/2,2/3,4/5"))
    print(f"\nPoincare sphere plumbing: weights {tree.weights}")
    Q = tree.intersection_matrix()
    for N in (8, 12, 16):
        print(f"  embeds in diagonal rank {N}: {embeds_in_diagonal(Q, N)}")
    print("  (so its Stein fillable contact structure is not planar)")

import random
from fractions import Fraction

from seifcert.exact import is_negative_definite
from seifcert.seifert import PlumbingTree, SeifertData, euler_number, normalize


def random_rational(rng: random.Random, max_den: int = 12) -> Fraction:
    den = rng.randint(2, max_den)
    num = rng.randint(1, den - 1)
    return Fraction(num, den)


def random_seifert_k3(rng: random.Random, max_den: int = 12) -> SeifertData:
    """Random normalized k=3 data with e(M) != 0."""
    while True:
        M = normalize(
            rng.randint(-5, 3), [random_rational(rng, max_den) for _ in range(3)]
        )
        if M.k == 3 and euler_number(M) != 0:
            return M


def random_negdef_star(rng: random.Random, max_vertices: int = 7,
                       max_weight: int = 3, box_budget: int = 60000) -> PlumbingTree:
    """Random negative definite star-shaped tree with a bounded 3x box."""
    while True:
        n = rng.randint(1, max_vertices)
        weights = tuple(-rng.randint(1, max_weight) for _ in range(n))
        parent = [-1]
        for i in range(1, n):
            parent.append(0 if rng.random() < 0.5 else i - 1)
        # keep legs as simple paths: vertices attach to the center or the
        # previous vertex, never branching mid-leg
        tree = PlumbingTree(weights, tuple(parent))
        box = 1
        for w in weights:
            box *= 3 * abs(w) + 1
        if box > box_budget:
            continue
        if is_negative_definite(tree.intersection_matrix()):
            return tree

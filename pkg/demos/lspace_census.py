"""Walk through the L-space decision procedure on a small census.

For each manifold M(e0; r1, r2, r3) we report the Euler number, the
homology order, the transverse-contact test on both orientations, and
the resulting L-space verdict, then confirm the verdict against the
transverse-foliation criterion (the two are equivalent).
"""

from fractions import Fraction

from seifcert import (
    euler_number,
    format_seifert,
    h1_order,
    has_positive_transverse_contact,
    has_transverse_foliation,
    is_lspace,
    normalize,
    parse_seifert,
    reverse_orientation,
)

NAMED = [
    ("-1;5/12,1/3,1/3", "smallest known non-L-space of this shape"),
    ("-1;1/2,1/3,1/5", "Poincare sphere (this orientation bounds positively)"),
    ("-1;1/2,1/3,1/7", "carries a transverse foliation"),
    ("-1;3/4,1/5,1/9", "the 11-surgery on the (4,5) torus knot"),
    ("-2;1/2,1/2,1/2", "e0 <= -k shortcut"),
    ("1;1/2,1/3,1/7", "e0 >= 0 shortcut"),
]


def describe(text, note=""):
    M = parse_seifert(text)
    v = is_lspace(M)
    Mrev = reverse_orientation(M)
    print(f"M = {format_seifert(M)}   {note}")
    print(f"  e(M) = {euler_number(M)},  |H1| = {h1_order(M)}")
    print(f"  transverse contact on +M: {has_positive_transverse_contact(M)}, "
          f"on -M: {has_positive_transverse_contact(Mrev)}")
    print(f"  L-space: {v.is_lspace}  ({v.reason})")
    if v.witness_plus:
        print(f"  realizability witness (m,a) = ({v.witness_plus.m},{v.witness_plus.a})")
    folia = has_transverse_foliation(M)
    print(f"  transverse foliation: {folia}  (always the negation of the verdict)")
    assert folia == (not v.is_lspace)
    print()


if __name__ == "__main__":
    for text, note in NAMED:
        describe(text, note)

    print("small sweep over denominators <= 4:")
    seen = set()
    for e0 in (-2, -1, 0):
        for a in (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(1, 4)):
            for b in (Fraction(1, 2), Fraction(1, 3)):
                M = normalize(e0, [a, b, Fraction(1, 2)])
                if M.k != 3 or euler_number(M) == 0 or M in seen:
                    continue
                seen.add(M)
                v = is_lspace(M)
                print(f"  {format_seifert(M):>22}   L-space: {v.is_lspace}")

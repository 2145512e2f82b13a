"""Frozen expected values shared across the suite.

Everything here was fixed ahead of the implementation; the families are
written out as comprehensions only to avoid 71 literal lines.
"""


def _certs_ktypes():
    out = {(0, 0, 0, 0, 0, 0, 0), (0, 2, 0, 0, 0, 0, 0)}
    for m in range(-3, 4):
        out.add((0, 1, 0, 0, 0, 0, 3 * m))
    for m in range(-1, 2):
        out.add((0, 0, 0, 1, 0, 0, 3 * m))
    for m in range(-2, 3):
        out.add((1, 0, 0, 0, 0, 1, 3 * m))
    for m in range(1, 5):
        out.add((0, 0, 0, 0, 0, 0, 3 * m))
        out.add((0, 0, 0, 0, 0, 0, -3 * m))
    for m in range(2, 4):
        out.add((0, 0, 0, 0, 0, 3, 3 * m))
        out.add((3, 0, 0, 0, 0, 0, -3 * m))
    for m in range(-4, 3):
        out.add((0, 0, 0, 0, 0, 1, 3 * m + 1))
        out.add((1, 0, 0, 0, 0, 0, -3 * m - 1))
    for m in range(-2, 4):
        out.add((0, 0, 0, 0, 0, 2, 3 * m - 1))
        out.add((2, 0, 0, 0, 0, 0, -3 * m + 1))
    for m in range(-2, 3):
        out.add((0, 0, 0, 0, 1, 0, 3 * m - 1))
        out.add((0, 0, 1, 0, 0, 0, -3 * m + 1))
    for m in range(-1, 2):
        out.add((0, 1, 0, 0, 0, 1, 3 * m + 1))
        out.add((1, 1, 0, 0, 0, 0, -3 * m - 1))
    return frozenset(out)


# the 71 high-gap u-small K-types (spin norm beats lambda norm by >= 94)
CERTS_KTYPES = _certs_ktypes()

# window characters with every coordinate 0 or 1 that pass the
# admissibility screen and carry a fully supported involution
PHI_COEFF_ONE = frozenset([
    (0, 0, 1, 1, 1, 1, 1), (0, 1, 1, 0, 1, 1, 1), (0, 1, 1, 1, 0, 1, 1),
    (0, 1, 1, 1, 1, 0, 1), (0, 1, 1, 1, 1, 1, 0), (0, 1, 1, 1, 1, 1, 1),
    (1, 0, 0, 1, 1, 1, 1), (1, 0, 1, 1, 0, 1, 0), (1, 0, 1, 1, 0, 1, 1),
    (1, 0, 1, 1, 1, 0, 1), (1, 0, 1, 1, 1, 1, 0), (1, 0, 1, 1, 1, 1, 1),
    (1, 1, 0, 1, 0, 1, 1), (1, 1, 0, 1, 1, 0, 1), (1, 1, 0, 1, 1, 1, 0),
    (1, 1, 0, 1, 1, 1, 1), (1, 1, 1, 0, 1, 0, 1), (1, 1, 1, 0, 1, 1, 0),
    (1, 1, 1, 0, 1, 1, 1), (1, 1, 1, 1, 0, 1, 0), (1, 1, 1, 1, 0, 1, 1),
    (1, 1, 1, 1, 1, 0, 1), (1, 1, 1, 1, 1, 1, 0),
])

# the twelve Dirac-cohomology weights of the smaller scalar-type module
# at the window character [1,1,1,0,1,1,1]
HD_TWELVE = frozenset([
    (1, 0, 0, 0, 0, 0, 11), (0, 0, 0, 0, 0, 1, -11),
    (2, 0, 0, 0, 0, 0, 1), (0, 0, 0, 0, 0, 2, -1),
    (0, 0, 0, 0, 1, 0, 5), (0, 0, 1, 0, 0, 0, -5),
    (0, 0, 0, 0, 0, 0, 15), (0, 0, 0, 0, 0, 0, -15),
    (0, 1, 0, 0, 0, 0, 9), (0, 1, 0, 0, 0, 0, -9),
    (1, 0, 0, 0, 0, 1, 3), (1, 0, 0, 0, 0, 1, -3),
])

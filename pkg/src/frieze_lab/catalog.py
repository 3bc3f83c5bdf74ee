"""Named quivers used throughout the tests and the command line.

Every acyclic entry is oriented so that each arrow i -> j has i > j; the
admissible sink order is then simply 1, 2, ..., n.
"""

from __future__ import annotations

from .quiver import Quiver


def a21() -> Quiver:
    return Quiver.from_arrows(3, [(2, 1), (3, 2), (3, 1)])


def a22() -> Quiver:
    return Quiver.from_arrows(4, [(2, 1), (4, 2), (4, 3), (3, 1)])


def d_tilde(n: int) -> Quiver:
    """Affine D with n >= 5 vertices; 1, 2 hang off 3 and n-1, n hang off n-2."""
    if n < 5:
        raise ValueError("D~ needs at least 5 vertices")
    arrows = [(3, 1), (3, 2)]
    arrows += [(k + 1, k) for k in range(3, n - 2)]
    arrows += [(n, n - 2), (n - 1, n - 2)]
    return Quiver.from_arrows(n, arrows)


def e6() -> Quiver:
    return Quiver.from_arrows(7, [(2, 1), (7, 2), (7, 6), (7, 4), (6, 5), (4, 3)])


def e7() -> Quiver:
    return Quiver.from_arrows(8, [(2, 1), (3, 2), (8, 3), (8, 6), (8, 7), (6, 5), (5, 4)])


def e8() -> Quiver:
    return Quiver.from_arrows(
        9, [(2, 1), (3, 2), (4, 3), (5, 4), (9, 5), (9, 8), (9, 6), (8, 7)]
    )


def markov() -> Quiver:
    return Quiver([[0, 2, -2], [-2, 0, 2], [2, -2, 0]])


def markov_cover() -> Quiver:
    """Six-vertex quiver folding onto the Markov quiver under (1 4)(2 5)(3 6)."""
    return Quiver.from_arrows(
        6,
        [(1, 2), (1, 5), (2, 3), (2, 6), (6, 1), (6, 4),
         (3, 1), (3, 4), (5, 6), (5, 3), (4, 5), (4, 2)],
    )


MARKOV_COVER_GREEN_SEQUENCE = (1, 3, 2, 4, 6, 5, 1, 6, 4, 3, 2, 5)


def star() -> Quiver:
    """Four arrows 2, 3, 4, 5 -> 1 (affine D with four leaves)."""
    return Quiver.from_arrows(5, [(2, 1), (3, 1), (4, 1), (5, 1)])


def kronecker() -> Quiver:
    return Quiver([[0, -2], [2, 0]])


CATALOG = {
    "A21": a21,
    "A22": a22,
    "D5": lambda: d_tilde(5),
    "D6": lambda: d_tilde(6),
    "D7": lambda: d_tilde(7),
    "E6": e6,
    "E7": e7,
    "E8": e8,
    "markov": markov,
    "markov_cover": markov_cover,
    "star": star,
    "kronecker": kronecker,
}


def by_name(name: str) -> Quiver:
    if name in CATALOG:
        return CATALOG[name]()
    if name.startswith("D") and name[1:].isdigit():
        return d_tilde(int(name[1:]))
    raise KeyError(name)

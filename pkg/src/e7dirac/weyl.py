"""Weyl-group algorithms: dominant representatives, the 56 chambers, and
the dimension formula for K-types.

Weyl words are tuples of simple-reflection indices (1..7 for the full
group, 1..6 for K).  A word (l1, ..., lk) acts by applying the reflection
at alpha_l1 first: apply_word(word, v) = s_lk(... s_l1(v) ...).  Inverting
a word is reversing it.

The 56 chambers are the positive systems of g containing the fixed
positive system of k.  They are found by a breadth-first search that
crosses only noncompact simple walls; crossing a compact wall would leave
the K-dominant world.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .structure import (
    RANK,
    Vec,
    add,
    build_root_datum,
    from_ambient,
    inner,
    is_k_type,
    norm_sq,
    pair_coroot,
    reflect,
    sub,
    to_ambient,
)

WeylWord = tuple[int, ...]


def apply_word(word: WeylWord, v: Vec) -> Vec:
    d = build_root_datum()
    for letter in word:
        v = reflect(v, d.simple_roots[letter - 1])
    return v


def invert_word(word: WeylWord) -> WeylWord:
    return tuple(reversed(word))


def dominant_rep(v: Vec, group: str) -> tuple[Vec, WeylWord]:
    """Dominant representative of v under W(g) ("G") or W(k) ("K").

    Repeatedly reflects at the lowest-index simple root pairing negatively;
    the returned word applied to v (first letter first) gives the dominant
    vector.  For "K" only the six compact simple roots are used, so the
    zeta-component is untouched.
    """
    d = build_root_datum()
    if group == "G":
        simples = d.simple_roots
    elif group == "K":
        simples = d.compact_simple
    else:
        raise ValueError(f"unknown group {group!r}")
    word: list[int] = []
    while True:
        for i, a in enumerate(simples):
            if inner(v, a) < 0:
                v = reflect(v, a)
                word.append(i + 1)
                break
        else:
            return v, tuple(word)


@dataclass(frozen=True)
class Chamber:
    index: int
    word: WeylWord  # w with w(rho) = rho_j
    rho_j: Vec
    rho_n_j: Vec
    simples: tuple[Vec, ...]  # w(alpha_1..alpha_7), the simple roots of the system
    weights: tuple[Vec, ...]  # w(zeta_1..zeta_7), its fundamental weights


@lru_cache(maxsize=1)
def enumerate_chambers() -> tuple[Chamber, ...]:
    d = build_root_datum()
    chambers: list[Chamber] = []
    seen: dict[Vec, int] = {}

    def push(word: WeylWord, rho_j: Vec, simples: tuple[Vec, ...], weights: tuple[Vec, ...]):
        seen[rho_j] = len(chambers)
        chambers.append(
            Chamber(
                index=len(chambers),
                word=word,
                rho_j=rho_j,
                rho_n_j=sub(rho_j, d.rho_c),
                simples=simples,
                weights=weights,
            )
        )

    push((), d.rho, d.simple_roots, d.fundamental_weights)
    cursor = 0
    while cursor < len(chambers):
        ch = chambers[cursor]
        cursor += 1
        for i in range(1, RANK + 1):
            wall = ch.simples[i - 1]
            if inner(wall, d.zeta) == 0:
                continue  # compact wall: crossing would break the k-positive system
            # Crossing the wall w(alpha_i) realizes w' = w s_i, and
            # w'(rho) = w(rho - alpha_i) = rho_j - wall.
            rho_new = sub(ch.rho_j, wall)
            if rho_new in seen:
                continue
            refl = lambda u: sub(u, _scale_pair(u, wall))
            word_new = (i,) + ch.word
            simples_new = tuple(refl(u) for u in ch.simples)
            weights_new = tuple(refl(u) for u in ch.weights)
            push(word_new, rho_new, simples_new, weights_new)
    if len(chambers) != 56:
        raise RuntimeError(f"chamber search found {len(chambers)} positive systems, wanted 56")
    return tuple(chambers)


def _scale_pair(u: Vec, root: Vec) -> Vec:
    c = pair_coroot(u, root)
    return tuple(c * x for x in root)


def weyl_dim_k(coords) -> int:
    """Dimension of the K-type [a..f, g] by the Weyl dimension formula.

    The central coordinate g only twists the character, so the dimension is
    a product over the 36 compact positive roots for the e6 part.
    """
    d = build_root_datum()
    mu = to_ambient("varpi", tuple(coords[:6]) + (0,))
    shifted = add(mu, d.rho_c)
    num = Fraction(1)
    for a in d.compact_positive:
        num *= Fraction(inner(shifted, a), 1) / inner(d.rho_c, a)
    assert num.denominator == 1 and num > 0, f"BUG: non-integral dimension {num} for {coords}"
    return int(num)


def spin_module_dimension_check() -> bool:
    """Sum of dim E_{rho_n^(j)} over the 56 chambers against 2^27 = dim of
    the spinor module for the 54-dimensional space p."""
    total = 0
    reps = set()
    for ch in enumerate_chambers():
        coords = from_ambient("varpi", ch.rho_n_j)
        int_coords = tuple(int(c) for c in coords)
        if tuple(map(Fraction, int_coords)) != tuple(coords) or not is_k_type(int_coords):
            raise RuntimeError(f"rho_n^({ch.index}) is not a K-type: {coords}")
        reps.add(int_coords)
        total += weyl_dim_k(int_coords)
    # The decomposition is stated multiplicity-free; coinciding summands
    # would silently break that, so detect rather than assume.
    if len(reps) != 56:
        raise RuntimeError(f"only {len(reps)} distinct rho_n^(j) among the 56 chambers")
    return total == 2**27


def rho_n_coincidence_report() -> dict[tuple[int, ...], int]:
    """Multiplicity of each rho_n^(j) value across chambers (all 1 expected)."""
    counts: dict[tuple[int, ...], int] = {}
    for ch in enumerate_chambers():
        key = tuple(int(c) for c in from_ambient("varpi", ch.rho_n_j))
        counts[key] = counts.get(key, 0) + 1
    return counts

"""The three metrics on K-types: lambda norm (nearest point in a chamber
cone), spin norm (minimum over chambers of a shifted dominant
representative), and membership in the u-small convex hull.  Also the
Dirac inequality classifier and the integer height used by atlas.

The public functions work on exact ambient vectors.  The module-level
tables cache integer pairing data per chamber so that the census-sized
loops (tens of thousands of K-types against all 56 chambers) run on
machine integers; tests pin the fast paths to the straightforward
definitions.

A K-type is passed as its 7 coordinates [a..f, g] (see structure).
An infinitesimal character is 7 rationals in the fundamental-weight basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .simplex import lp_feasible
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
    scale,
    sub,
    to_ambient,
)
from .weyl import Chamber, dominant_rep, enumerate_chambers

# ---------------------------------------------------------------------------
# cached integer tables


def _int(x: Fraction, what: str) -> int:
    assert x.denominator == 1, f"BUG: {what} = {x} is not an integer"
    return int(x)


@dataclass(frozen=True)
class _Tables:
    chambers: tuple[Chamber, ...]
    cartan6: tuple[tuple[int, ...], ...]  # pairings of the compact simple roots
    # per chamber j:
    rho_n_zeta: tuple[tuple[int, ...], ...]  # pair(rho_n_j, alpha_k), k = 1..7
    # Sum of the noncompact positive roots of each chamber (twice rho_n_j),
    # same basis.  These generate the orbit hull behind the u-small test.
    # Each is K-dominant (every compact simple root is positive in every
    # chamber's system, so rho_j pairs >= 1 with its coroot), which the
    # membership LP relies on; asserted when the tables are built.
    usmall_vertex_zeta: tuple[tuple[int, ...], ...]
    norm12_rho_n: tuple[int, ...]  # 12*|rho_n_j|^2
    w12: tuple[tuple[int, ...], ...]  # 12*(varpi_i, rho_n_j), i = 1..6
    z4: tuple[int, ...]  # 4*(zeta, rho_n_j)
    # lambda tables: 3*pair(mu, w_j alpha_i) = sum a_k tp[j][i][k] + g*pz[j][i]
    tp: tuple[tuple[tuple[int, ...], ...], ...]
    pz: tuple[tuple[int, ...], ...]
    rc3: tuple[tuple[int, ...], ...]  # 3*pair(2 rho_c, w_j alpha_i)
    rc12: tuple[int, ...]  # 12*(varpi_i, rho_c)
    gram12: tuple[tuple[int, ...], ...]  # 12*(varpi_i, varpi_k)
    weight_gram: tuple[tuple[Fraction, ...], ...]  # (zeta_i, zeta_k)
    gamma_zeta: tuple[tuple[int, ...], ...]  # compact simples in the zeta basis


@lru_cache(maxsize=1)
def _tables() -> _Tables:
    d = build_root_datum()
    chs = enumerate_chambers()
    cartan6 = tuple(
        tuple(_int(pair_coroot(a, b), "cartan") for b in d.compact_simple)
        for a in d.compact_simple
    )
    rho_n_zeta = []
    usmall_vertex_zeta = []
    norm12 = []
    w12 = []
    z4 = []
    tp = []
    pz = []
    rc3 = []
    two_rho_c = scale(2, d.rho_c)
    for ch in chs:
        r = ch.rho_n_j
        rho_n_zeta.append(tuple(_int(pair_coroot(r, a), "rho_n pairing") for a in d.simple_roots))
        row = tuple(2 * _int(pair_coroot(r, a), "hull vertex") for a in d.simple_roots)
        assert all(x >= 0 for x in row[:6]), f"BUG: rho_n_j not K-dominant: {r}"
        usmall_vertex_zeta.append(row)
        norm12.append(_int(12 * norm_sq(r), "12|rho_n|^2"))
        w12.append(tuple(_int(12 * inner(w, r), "12(varpi,rho_n)") for w in d.varpi))
        z4.append(_int(4 * inner(d.zeta, r), "4(zeta,rho_n)"))
        tp.append(
            tuple(
                tuple(_int(3 * inner(w, a), "3(varpi,root)") for w in d.varpi)
                for a in ch.simples
            )
        )
        pz.append(tuple(_int(inner(d.zeta, a), "(zeta,root)") for a in ch.simples))
        rc3.append(tuple(_int(3 * inner(two_rho_c, a), "3(2rho_c,root)") for a in ch.simples))
    rc12 = tuple(_int(12 * inner(w, d.rho_c), "12(varpi,rho_c)") for w in d.varpi)
    gram12 = tuple(
        tuple(_int(12 * inner(a, b), "12 varpi gram") for b in d.varpi) for a in d.varpi
    )
    weight_gram = tuple(
        tuple(inner(a, b) for b in d.fundamental_weights) for a in d.fundamental_weights
    )
    gamma_zeta = tuple(
        tuple(_int(pair_coroot(g, a), "gamma coords") for a in d.simple_roots)
        for g in d.compact_simple
    )
    return _Tables(
        chambers=chs,
        cartan6=cartan6,
        rho_n_zeta=tuple(rho_n_zeta),
        usmall_vertex_zeta=tuple(usmall_vertex_zeta),
        norm12_rho_n=tuple(norm12),
        w12=tuple(w12),
        z4=tuple(z4),
        tp=tuple(tp),
        pz=tuple(pz),
        rc3=tuple(rc3),
        rc12=rc12,
        gram12=gram12,
        weight_gram=weight_gram,
        gamma_zeta=gamma_zeta,
    )


def ktype_ambient(coords) -> Vec:
    return to_ambient("varpi", coords)


def infchar_ambient(coords) -> Vec:
    return to_ambient("zeta", coords)


def ktype_zeta_coords(coords) -> list[int]:
    """Coordinates of the K-type in the fundamental-weight basis (integers)."""
    a, b, c, dd, e, f, g = (int(v) for v in coords)
    top = g - (2 * a + 3 * b + 4 * c + 6 * dd + 5 * e + 4 * f)
    assert top % 3 == 0, f"BUG: {coords} fails the lattice condition"
    return [a, b, c, dd, e, f, top // 3]


def norm12_ktype(coords) -> int:
    """12 * |mu|^2 from the coordinates, exact."""
    t = _tables()
    a = [int(v) for v in coords[:6]]
    g = int(coords[6])
    total = 2 * g * g
    for i in range(6):
        if a[i]:
            row = t.gram12[i]
            total += a[i] * sum(row[k] * a[k] for k in range(6))
    return total


# ---------------------------------------------------------------------------
# cone projection


@lru_cache(maxsize=None)
def _gram_inverse(subset: tuple[int, ...]) -> tuple[tuple[Fraction, ...], ...]:
    """Inverse of the fundamental-weight Gram matrix on a generator subset."""
    g = _tables().weight_gram
    k = len(subset)
    aug = [
        [g[subset[i]][subset[j]] for j in range(k)]
        + [Fraction(1) if j == i else Fraction(0) for j in range(k)]
        for i in range(k)
    ]
    for col in range(k):
        p = next(r for r in range(col, k) if aug[r][col] != 0)
        aug[col], aug[p] = aug[p], aug[col]
        pivot = aug[col][col]
        aug[col] = [x / pivot for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[k:]) for row in aug)


_SUBSETS = [
    s
    for size in range(7, -1, -1)
    for s in combinations(range(7), size)
]


def cone_project(eta: Vec, chamber: Chamber) -> Vec:
    """Nearest point of the chamber's closed dominant cone, exactly.

    The cone is spanned by the chamber's seven fundamental weights.  Each
    of the 128 generator subsets proposes the face containing the answer:
    solve the Gram system there, then accept iff the coefficients are
    nonnegative and the residual pairs nonpositively with every generator.
    """
    gens = chamber.weights
    rhs = [inner(eta, g) for g in gens]
    zero = tuple(Fraction(0) for _ in range(8))
    for subset in _SUBSETS:
        inv = _gram_inverse(subset)
        coeff = [
            sum(inv[i][j] * rhs[subset[j]] for j in range(len(subset)))
            for i in range(len(subset))
        ]
        if any(c < 0 for c in coeff):
            continue
        point = zero
        for c, gi in zip(coeff, subset):
            point = add(point, scale(c, gens[gi]))
        if all(rhs[k] - inner(point, gens[k]) <= 0 for k in range(7)):
            return point
    raise RuntimeError("BUG: no KKT subset accepted; the cone is simplicial so one must")


# ---------------------------------------------------------------------------
# lambda


@dataclass(frozen=True)
class LambdaDatum:
    lambda_a: Vec
    lambda_norm_sq: Fraction
    witness_chamber: int


def _allowable_chambers(coords) -> list[int]:
    """Chambers whose positive system makes mu + 2 rho_c dominant."""
    t = _tables()
    a = [int(v) for v in coords[:6]]
    g = int(coords[6])
    out = []
    for j in range(56):
        tpj, pzj, rcj = t.tp[j], t.pz[j], t.rc3[j]
        ok = True
        for i in range(RANK):
            row = tpj[i]
            val = sum(row[k] * a[k] for k in range(6)) + g * pzj[i] + rcj[i]
            if val < 0:
                ok = False
                break
        if ok:
            out.append(j)
    return out


def _project_in_chamber(coords, j: int) -> Vec:
    d = build_root_datum()
    ch = _tables().chambers[j]
    eta = sub(add(ktype_ambient(coords), scale(2, d.rho_c)), ch.rho_j)
    return cone_project(eta, ch)


def lambda_datum(mu) -> LambdaDatum:
    """Projection datum for the K-type, witnessed by the first chamber where
    mu + 2 rho_c is dominant; equality across all such chambers is asserted."""
    allow = _allowable_chambers(mu)
    if not allow:
        raise RuntimeError(f"BUG: no chamber makes {mu} + 2rho_c dominant")
    first = _project_in_chamber(mu, allow[0])
    for j in allow[1:]:
        other = _project_in_chamber(mu, j)
        assert other == first, (
            f"BUG: projection of {mu} differs between chambers {allow[0]} and {j}"
        )
    return LambdaDatum(
        lambda_a=first,
        lambda_norm_sq=norm_sq(first),
        witness_chamber=allow[0],
    )


def lambda_norm_sq_fast(mu) -> Fraction:
    """Same value as lambda_datum(mu).lambda_norm_sq via the first allowable
    chamber only (the equality across chambers is a tested invariant)."""
    allow = _allowable_chambers(mu)
    return norm_sq(_project_in_chamber(mu, allow[0]))


# ---------------------------------------------------------------------------
# spin


@dataclass(frozen=True)
class SpinDatum:
    spin_norm_sq: Fraction
    achieving_chambers: frozenset[int]
    prv_weights: dict  # chamber -> K-type coordinates of {mu - rho_n_j}


def spin_sq12(coords) -> int:
    """12 * spin_norm_sq as a machine integer; the census-loop kernel."""
    t = _tables()
    a = [int(v) for v in coords[:6]]
    g = int(coords[6])
    m12 = norm12_ktype(coords)
    cartan = t.cartan6
    best = None
    for j in range(56):
        rn = t.rho_n_zeta[j]
        p = [a[i] - rn[i] for i in range(6)]
        # walk to the K-dominant representative on pairing coordinates
        while True:
            for i in range(6):
                if p[i] < 0:
                    pi = p[i]
                    row = cartan[i]
                    for k in range(6):
                        if row[k]:
                            p[k] -= pi * row[k]
                    break
            else:
                break
        w12j = t.w12[j]
        dot12 = g * t.z4[j]
        for i in range(6):
            if a[i]:
                dot12 += a[i] * w12j[i]
        x12 = m12 - 2 * dot12 + t.norm12_rho_n[j]
        s12 = x12 + 2 * sum(p[i] * t.rc12[i] for i in range(6)) + 936
        if best is None or s12 < best:
            best = s12
    return best


def spin_datum(mu) -> SpinDatum:
    """Exact minimum over the 56 chambers of |{mu - rho_n_j} + rho_c|^2,
    with the achieving chambers and their dominant weights."""
    d = build_root_datum()
    t = _tables()
    v = ktype_ambient(mu)
    best = None
    per_chamber: list[tuple[int, Fraction, tuple[int, ...]]] = []
    for ch in t.chambers:
        x = sub(v, ch.rho_n_j)
        dom, _ = dominant_rep(x, "K")
        val = norm_sq(add(dom, d.rho_c))
        coords = tuple(int(c) for c in from_ambient("varpi", dom))
        per_chamber.append((ch.index, val, coords))
        if best is None or val < best:
            best = val
    achieving = frozenset(j for j, val, _ in per_chamber if val == best)
    prv = {j: coords for j, val, coords in per_chamber if val == best}
    return SpinDatum(spin_norm_sq=best, achieving_chambers=achieving, prv_weights=prv)


# ---------------------------------------------------------------------------
# u-small hull


def _usmall_rows_rhs(coords):
    t = _tables()
    mu_z = ktype_zeta_coords(coords)
    rows = []
    for k in range(RANK):
        rows.append(
            [t.usmall_vertex_zeta[j][k] for j in range(56)]
            + [-t.gamma_zeta[i][k] for i in range(6)]
        )
    rows.append([1] * 56 + [0] * 6)
    rhs = mu_z + [1]
    return rows, rhs


def is_usmall(mu) -> bool:
    """Whether the K-type lies in the hull of the W(k)-orbits of the 56
    sums of noncompact positive roots (one per chamber, twice rho_n_j).
    For a K-dominant point this is equivalent to being dominated by a
    convex combination of the generating points (themselves K-dominant):
    feasibility of sum t_j v_j - mu = sum s_i gamma_i with t a probability
    vector and s nonnegative.  (One direction: each orbit point is dominated
    by its K-dominant representative, so any hull point is dominated by such
    a combination.  The other: a dominant point dominated by a hull point
    lies in the hull of that point's orbit.)
    """
    rows, rhs = _usmall_rows_rhs(mu)
    return lp_feasible(rows, rhs)


# ---------------------------------------------------------------------------
# Dirac inequality and height


def dirac_inequality_holds(lam, mu) -> str:
    """Compare |Lambda|^2 with the spin norm of mu: 'strict' when the spin
    side is strictly bigger, 'equality' exactly at equality (the candidate
    condition for a spin LKT contributing to Dirac cohomology), else
    'violated'."""
    lam_sq = norm_sq(infchar_ambient(lam))
    spin_sq = Fraction(spin_sq12(mu), 12)
    if lam_sq < spin_sq:
        return "strict"
    if lam_sq == spin_sq:
        return "equality"
    return "violated"


def atlas_height(mu) -> int:
    """Sum of the coroot pairings of lambda_a over the witness chamber's
    positive system; equals (lambda_a, 2 rho_j), always an integer."""
    allow = _allowable_chambers(mu)
    if not allow:
        raise RuntimeError(f"BUG: no allowable chamber for {mu}")
    j = allow[0]
    ch = _tables().chambers[j]
    lam = _project_in_chamber(mu, j)
    h = inner(lam, scale(2, ch.rho_j))
    if h.denominator != 1 or h < 0:
        raise RuntimeError(f"BUG: height of {mu} came out {h}")
    return int(h)


# ---------------------------------------------------------------------------
# bounded enumeration by height


def enumerate_by_height(cap: int) -> dict[tuple[int, ...], int]:
    """All K-types with atlas height <= cap, mapped to their heights.

    Scans each chamber's dominant cone: a K-type with height <= cap has, in
    any chamber where mu + 2 rho_c is dominant, coordinates y_i =
    pair(mu + 2 rho_c, w alpha_i) >= 0 with sum d_i y_i <= cap + |2 rho|^2,
    because projection only raises the pairing sum.  The scan is complete;
    each candidate is then validated and measured exactly.
    """
    d = build_root_datum()
    t = _tables()
    two_rho_norm = _int(2 * norm_sq(d.rho), "2|rho|^2")  # = 399
    budget_cap = cap + two_rho_norm
    out: dict[tuple[int, ...], int] = {}
    for ch in t.chambers:
        dvals = [_int(inner(z, scale(2, ch.rho_j)), "weight height step") for z in ch.weights]
        # mu coordinates from y: a_k = sum y_i p6[i][k] - 2, g = sum y_i pz2[i]
        p6 = [
            [_int(pair_coroot(z, gmm), "weight/coroot") for gmm in d.compact_simple]
            for z in ch.weights
        ]
        pz2 = [_int(2 * inner(z, d.zeta), "2(weight,zeta)") for z in ch.weights]
        y = [0] * RANK
        acc_a = [-2] * 6  # running a_k including the -2 rho_c shift
        acc_g = 0

        def descend(i: int, budget: int):
            nonlocal acc_a, acc_g
            if i == RANK:
                if all(v >= 0 for v in acc_a):
                    mu = tuple(acc_a) + (acc_g,)
                    if mu not in out:
                        assert is_k_type(mu), f"BUG: scan produced non-K-type {mu}"
                        if all(yv >= 1 for yv in y):
                            h = budget_cap - budget - two_rho_norm
                        else:
                            h = atlas_height(mu)
                        if h <= cap:
                            out[mu] = h
                return
            step = dvals[i]
            row = p6[i]
            zstep = pz2[i]
            count = 0
            while count * step <= budget:
                y[i] = count
                descend(i + 1, budget - count * step)
                for k in range(6):
                    acc_a[k] += row[k]
                acc_g += zstep
                count += 1
            y[i] = 0
            for k in range(6):
                acc_a[k] -= count * row[k]
            acc_g -= count * zstep

        descend(0, budget_cap)
    return out

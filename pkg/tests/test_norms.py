import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from e7dirac.norms import (
    atlas_height,
    cone_project,
    dirac_inequality_holds,
    enumerate_by_height,
    is_usmall,
    ktype_ambient,
    ktype_zeta_coords,
    lambda_datum,
    lambda_norm_sq_fast,
    norm12_ktype,
    spin_datum,
    spin_sq12,
)
from e7dirac.structure import (
    add,
    build_root_datum,
    contragredient,
    from_ambient,
    inner,
    is_k_type,
    neg,
    norm_sq,
    scale,
    sub,
    to_ambient,
    vec,
)
from e7dirac.weyl import dominant_rep, enumerate_chambers

TRIVIAL = (0, 0, 0, 0, 0, 0, 0)


def random_ktype(rng, span=4, gspan=5):
    a = [rng.randint(0, span) for _ in range(6)]
    base = 2 * a[0] + 3 * a[1] + 4 * a[2] + 6 * a[3] + 5 * a[4] + 4 * a[5]
    g = base + 3 * rng.randint(-gspan, gspan)
    return tuple(a) + (g,)


ktype_strategy = st.builds(
    lambda a, k: tuple(a)
    + (2 * a[0] + 3 * a[1] + 4 * a[2] + 6 * a[3] + 5 * a[4] + 4 * a[5] + 3 * k,),
    st.tuples(*[st.integers(0, 3)] * 6),
    st.integers(-5, 5),
)


@pytest.fixture(scope="module")
def datum():
    return build_root_datum()


@pytest.fixture(scope="module")
def chambers():
    return enumerate_chambers()


# ---- cone projection ----


def test_project_fixes_cone_points(chambers):
    rng = random.Random(3)
    for ch in (chambers[0], chambers[17], chambers[55]):
        for _ in range(5):
            pt = tuple(Fraction(0) for _ in range(8))
            for w in ch.weights:
                pt = add(pt, scale(rng.randint(0, 4), w))
            assert cone_project(pt, ch) == pt


def test_project_polar_cone_to_zero(chambers):
    ch = chambers[0]
    eta = neg(add(ch.weights[0], ch.weights[4]))
    assert cone_project(eta, ch) == tuple(Fraction(0) for _ in range(8))


def test_project_is_nearest_point(chambers):
    # the defining property, checked against random cone points
    rng = random.Random(11)
    ch = chambers[9]
    for _ in range(20):
        eta = vec(*[Fraction(rng.randint(-12, 12), rng.choice([1, 2])) for _ in range(8)])
        # keep eta in the 7-dim span: project out the complement direction
        comp = vec(0, 0, 0, 0, 0, 0, 1, 1)
        eta = sub(eta, scale(inner(eta, comp) / inner(comp, comp), comp))
        p = cone_project(eta, ch)
        base = norm_sq(sub(eta, p))
        for _ in range(25):
            c = tuple(Fraction(0) for _ in range(8))
            for w in ch.weights:
                c = add(c, scale(Fraction(rng.randint(0, 6), 2), w))
            assert norm_sq(sub(eta, c)) >= base, "BUG: projection is not the nearest point"


def test_project_idempotent_and_contractive(chambers):
    rng = random.Random(19)
    ch = chambers[31]
    comp = vec(0, 0, 0, 0, 0, 0, 1, 1)
    pairs = []
    for _ in range(100):
        eta = vec(*[rng.randint(-9, 9) for _ in range(8)])
        eta = sub(eta, scale(inner(eta, comp) / inner(comp, comp), comp))
        pairs.append(eta)
    projected = [cone_project(e, ch) for e in pairs]
    for e, p in zip(pairs, projected):
        assert cone_project(p, ch) == p, "BUG: projection must be idempotent"
    for i in range(0, 100, 2):
        e1, e2 = pairs[i], pairs[i + 1]
        p1, p2 = projected[i], projected[i + 1]
        assert norm_sq(sub(p1, p2)) <= norm_sq(sub(e1, e2)), (
            "BUG: projection must not expand distances"
        )


# ---- lambda ----


def test_lambda_trivial_frozen():
    ld = lambda_datum(TRIVIAL)
    assert ld.lambda_norm_sq == 14
    assert ld.lambda_a == vec(
        Fraction(1, 2), Fraction(1, 2), Fraction(3, 2), Fraction(3, 2),
        Fraction(3, 2), Fraction(-3, 2), Fraction(-3, 2), Fraction(3, 2),
    )


def test_lambda_highest_pplus_root_frozen():
    ld = lambda_datum((1, 0, 0, 0, 0, 0, 2))
    assert ld.lambda_norm_sq == 21
    assert ld.lambda_a == vec(
        Fraction(1, 2), Fraction(1, 2), Fraction(3, 2), Fraction(3, 2),
        2, -2, -2, 2,
    )


def test_lambda_in_witness_cone(chambers):
    rng = random.Random(23)
    for _ in range(25):
        mu = random_ktype(rng)
        ld = lambda_datum(mu)
        ch = chambers[ld.witness_chamber]
        assert all(inner(ld.lambda_a, a) >= 0 for a in ch.simples)
        assert ld.lambda_norm_sq == norm_sq(ld.lambda_a)


def test_lambda_fast_agrees():
    rng = random.Random(29)
    for _ in range(30):
        mu = random_ktype(rng)
        assert lambda_norm_sq_fast(mu) == lambda_datum(mu).lambda_norm_sq


# ---- spin ----


def test_spin_frozen_values():
    assert spin_datum(TRIVIAL).spin_norm_sq == Fraction(399, 2)
    assert spin_datum((0, 0, 0, 0, 0, 0, -12)).spin_norm_sq == Fraction(231, 2)
    assert spin_datum((0, 0, 0, 0, 0, 0, -24)).spin_norm_sq == Fraction(159, 2)


def test_spin_trivial_all_chambers_achieve(datum):
    sd = spin_datum(TRIVIAL)
    assert sd.achieving_chambers == frozenset(range(56))
    # each PRV weight shifted by rho_c lies in the rho orbit
    for j, coords in sd.prv_weights.items():
        v = add(ktype_ambient(coords), datum.rho_c)
        dom, _ = dominant_rep(v, "G")
        assert dom == datum.rho, f"BUG: chamber {j} PRV weight leaves the rho orbit"


def test_spin_kernel_agrees_with_definition():
    rng = random.Random(31)
    for _ in range(40):
        mu = random_ktype(rng)
        assert Fraction(spin_sq12(mu), 12) == spin_datum(mu).spin_norm_sq


def test_spin_prv_weights_are_k_types():
    rng = random.Random(37)
    for _ in range(10):
        mu = random_ktype(rng)
        sd = spin_datum(mu)
        for coords in sd.prv_weights.values():
            assert is_k_type(coords)


# ---- u-small ----


def test_usmall_examples():
    assert is_usmall(TRIVIAL)
    assert is_usmall((0, 2, 0, 0, 0, 0, 0))
    assert is_usmall((0, 0, 0, 0, 0, 0, 54)), "BUG: a hull vertex is in the hull"
    assert is_usmall((0, 0, 0, 0, 0, 0, 27))
    assert not is_usmall((0, 0, 0, 0, 0, 0, 57))
    assert not is_usmall((13, 0, 0, 0, 0, 0, -1))


def test_usmall_ball_bound(datum):
    # hull vertices have norm^2 <= 486, so nothing outside that ball is inside
    rng = random.Random(41)
    seen_inside = 0
    for _ in range(60):
        mu = random_ktype(rng, span=3, gspan=8)
        if Fraction(norm12_ktype(mu), 12) > 486:
            assert not is_usmall(mu), f"BUG: {mu} outside the vertex ball but in the hull"
        else:
            seen_inside += 1
    assert seen_inside, "sample never landed in the ball; widen the generator"


# ---- Dirac inequality ----


def test_dirac_inequality_examples():
    assert dirac_inequality_holds((1, 1, 1, 0, 1, 1, 1), (0, 0, 0, 0, 0, 0, -12)) == "equality"
    assert dirac_inequality_holds((1, 0, 1, 1, 0, 1, 0), (0, 0, 0, 0, 0, 0, -24)) == "strict"
    assert dirac_inequality_holds((1, 1, 1, 1, 1, 1, 1), TRIVIAL) == "equality"


def test_dirac_inequality_violated_case():
    # rho against a K-type of tiny spin norm
    assert dirac_inequality_holds((1, 1, 1, 1, 1, 1, 1), (0, 0, 0, 0, 0, 0, -24)) == "violated"


# ---- heights ----


def test_height_frozen_values():
    assert atlas_height(TRIVIAL) == 100
    assert atlas_height((1, 0, 0, 0, 0, 0, 2)) == 126
    assert atlas_height((0, 0, 0, 0, 0, 0, 27)) == 188


def test_height_enumeration_small_cap():
    table = enumerate_by_height(120)
    assert table[TRIVIAL] == 100
    assert (1, 0, 0, 0, 0, 0, 2) not in table
    assert min(table.values()) == 100
    for mu, h in table.items():
        assert is_k_type(mu)
        assert atlas_height(mu) == h, f"BUG: cached height wrong for {mu}"


def test_height_enumeration_nested_caps():
    small = enumerate_by_height(110)
    bigger = enumerate_by_height(130)
    assert set(small) <= set(bigger)
    for mu, h in small.items():
        assert bigger[mu] == h


# ---- cross-cutting symmetry ----


@settings(max_examples=40, deadline=None)
@given(ktype_strategy)
def test_contragredient_invariance(mu):
    dual = contragredient(mu)
    assert spin_sq12(mu) == spin_sq12(dual)
    assert lambda_norm_sq_fast(mu) == lambda_norm_sq_fast(dual)
    assert is_usmall(mu) == is_usmall(dual)


def test_zeta_coords_roundtrip(datum):
    rng = random.Random(43)
    for _ in range(25):
        mu = random_ktype(rng)
        z = ktype_zeta_coords(mu)
        assert to_ambient("zeta", z) == ktype_ambient(mu)

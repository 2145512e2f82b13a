import itertools
import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from e7dirac.simplex import lp_feasible, lp_feasible_witness


def solve_square(cols, rhs):
    """Unique solution of the column system, or None if singular/inconsistent."""
    m, k = len(rhs), len(cols)
    aug = [[Fraction(cols[j][i]) for j in range(k)] + [Fraction(rhs[i])] for i in range(m)]
    row = 0
    pivots = []
    for col in range(k):
        p = next((r for r in range(row, m) if aug[r][col] != 0), None)
        if p is None:
            return None
        aug[row], aug[p] = aug[p], aug[row]
        pivots.append(col)
        for r in range(m):
            if r != row and aug[r][col] != 0:
                f = aug[r][col] / aug[row][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[row])]
        row += 1
    for r in range(row, m):
        if aug[r][k] != 0:
            return None
    return [aug[i][k] / aug[i][pivots[i]] for i in range(k)]


def feasible_bruteforce(rows, rhs):
    """Feasibility by basic-solution enumeration: any nonempty {x>=0: Ax=b}
    contains a solution supported on independent columns."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    if all(b == 0 for b in rhs):
        return True
    for k in range(1, m + 1):
        for subset in itertools.combinations(range(n), k):
            cols = [[rows[i][j] for i in range(m)] for j in subset]
            x = solve_square(cols, rhs)
            if x is not None and all(v >= 0 for v in x):
                return True
    return False


def check_witness(rows, rhs, x):
    assert all(v >= 0 for v in x), f"BUG: negative witness entry in {x}"
    for row, b in zip(rows, rhs):
        assert sum(Fraction(a) * v for a, v in zip(row, x)) == b


def test_single_equation_feasible():
    x = lp_feasible_witness([[1, 1]], [1])
    check_witness([[1, 1]], [1], x)


def test_negative_rhs_feasible():
    rows, rhs = [[1, -1]], [-1]
    x = lp_feasible_witness(rows, rhs)
    check_witness(rows, rhs, x)


def test_single_equation_infeasible():
    assert not lp_feasible([[1]], [-1])
    assert not lp_feasible([[0]], [1])


def test_two_by_two():
    rows = [[2, 3], [1, 1]]
    assert lp_feasible(rows, [7, 3])
    assert not lp_feasible([[1, 1], [1, 1]], [10, 3])


def test_equality_forcing_negative_coordinate():
    # x - y = 1 and x + y = 0 forces y = -1/2
    assert not lp_feasible([[1, -1], [1, 1]], [1, 0])


def test_zero_system():
    assert lp_feasible([], [])
    assert lp_feasible([[0, 0]], [0])


def test_redundant_rows():
    rows = [[1, 2, 1], [2, 4, 2], [0, 1, 1]]
    rhs = [4, 8, 1]
    x = lp_feasible_witness(rows, rhs)
    check_witness(rows, rhs, x)


def test_convex_combination_membership():
    # b inside the simplex spanned by columns iff feasible with sum-to-one row
    cols = [[0, 0], [3, 0], [0, 3]]
    rows = [
        [c[0] for c in cols],
        [c[1] for c in cols],
        [1, 1, 1],
    ]
    assert lp_feasible(rows, [1, 1, 1])
    assert not lp_feasible(rows, [3, 3, 1])
    assert lp_feasible(rows, [3, 0, 1])
    assert not lp_feasible(rows, [3, 1, 1])


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_random_nonnegative_combinations_are_feasible(data):
    m = data.draw(st.integers(1, 4))
    n = data.draw(st.integers(1, 6))
    rows = [
        [data.draw(st.integers(-5, 5)) for _ in range(n)] for _ in range(m)
    ]
    x0 = [data.draw(st.integers(0, 4)) for _ in range(n)]
    rhs = [sum(a * v for a, v in zip(row, x0)) for row in rows]
    x = lp_feasible_witness(rows, rhs)
    assert x is not None, f"BUG: constructed-feasible system reported infeasible {rows} {rhs}"
    check_witness(rows, rhs, x)


def test_random_systems_witness_consistency():
    rng = random.Random(13)
    feasible_seen = infeasible_seen = 0
    for _ in range(200):
        m, n = rng.randint(1, 3), rng.randint(1, 5)
        rows = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(m)]
        rhs = [rng.randint(-6, 6) for _ in range(m)]
        x = lp_feasible_witness(rows, rhs)
        if x is None:
            infeasible_seen += 1
        else:
            feasible_seen += 1
            check_witness(rows, rhs, x)
    assert feasible_seen and infeasible_seen, "BUG: sample should exercise both outcomes"


def test_against_basic_solution_enumeration():
    rng = random.Random(4242)
    disagreements = []
    for _ in range(150):
        m, n = rng.randint(1, 3), rng.randint(1, 4)
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)]
        rhs = [rng.randint(-5, 5) for _ in range(m)]
        got = lp_feasible(rows, rhs)
        want = feasible_bruteforce(rows, rhs)
        if got != want:
            disagreements.append((rows, rhs, got, want))
    assert not disagreements, f"BUG: simplex disagrees with enumeration: {disagreements[:3]}"

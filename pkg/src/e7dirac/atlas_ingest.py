"""Fixture-backed KGB data: parsing, consistency checks, and the census of
infinitesimal characters seen by the fully supported involutions.

Everything that an external computation exported (involution matrices,
parameters, branching lists, row tables, string counts) enters through
line-oriented fixture files and is validated here; everything derivable from
the root datum is recomputed on the spot.  Fixture grammar, one record per
line, '#' starts a comment, fields separated by '|':

    kgb:          <id> | <support: comma list or "full"> | <7 rows of 7 ints, ';' between rows>
    params:       <x> | <lambda: 7 ints> | <nu: 7 rationals> | <flags: comma list of unitary,fs>
    branching:    <mult> | <ktype: 7 ints> | <height>
    table:        <table-id> | <x> | <x' or "-"> | <lambda> | <nu> | <spin lkts, ';' separated> | <unipotent: 0/1>
    dirac_counts: <S: comma list of indices or "empty"> | <N(S)>

Involution matrices act on the 7 coordinate entries of a weight written in
the zeta basis (pairings with the simple coroots); they are exact integer
matrices and must be involutive and orthogonal for the invariant form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from multiprocessing import Pool

from .screening import hp_admissible
from .structure import (
    RANK,
    add,
    build_root_datum,
    from_ambient,
    inner,
    is_k_type,
    norm_sq,
    to_ambient,
)
from .norms import infchar_ambient, spin_datum
from .weyl import dominant_rep

NU_BOUND = 94                   # strict bound on |nu|^2 for the census
OLD_NU_BOUND = Fraction(399, 2)  # |rho|^2, the classical comparison bound

FULL_SUPPORT = frozenset(range(RANK))


@dataclass(frozen=True)
class KgbRecord:
    id: int
    support: frozenset
    theta: tuple  # 7 rows of 7 ints, acting on zeta-basis coordinates


@dataclass(frozen=True)
class AtlasParameter:
    x: int
    lam: tuple
    nu: tuple
    unitary: bool
    fully_supported: bool


@dataclass(frozen=True)
class BranchRow:
    mult: int
    ktype: tuple
    height: int


@dataclass(frozen=True)
class TableRow:
    table_id: str
    x: int
    x_prime: int | None
    lam: tuple
    nu: tuple
    spin_lkts: tuple
    lkt_flags: tuple
    unipotent: bool

    @property
    def inf_char(self) -> tuple:
        return tuple(int(c) for c in self.table_id)

    def row_count(self) -> int:
        """Representations covered by this line (two when x' is present)."""
        return 2 if self.x_prime is not None else 1


class FixtureError(ValueError):
    pass


def _err(line_no: int, msg: str) -> FixtureError:
    return FixtureError(f"line {line_no}: {msg}")


def _fields(line: str):
    return [f.strip() for f in line.split("|")]


def _ints(text: str, line_no: int, n: int, what: str) -> tuple:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != n:
        raise _err(line_no, f"{what}: expected {n} entries, got {len(parts)}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise _err(line_no, f"{what}: non-integer entry in {text!r}") from None


def _rationals(text: str, line_no: int, what: str) -> tuple:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != RANK:
        raise _err(line_no, f"{what}: expected {RANK} entries, got {len(parts)}")
    try:
        return tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise _err(line_no, f"{what}: bad rational in {text!r}") from None


_GRAM2 = None


def _zeta_gram2():
    """Twice the Gram matrix of the fundamental weights; integral for E7."""
    global _GRAM2
    if _GRAM2 is None:
        d = build_root_datum()
        w = d.fundamental_weights
        rows = []
        for i in range(RANK):
            row = []
            for j in range(RANK):
                q = 2 * inner(w[i], w[j])
                if q.denominator != 1:
                    raise AssertionError("doubled Gram matrix is not integral")
                row.append(int(q))
            rows.append(tuple(row))
        _GRAM2 = tuple(rows)
    return _GRAM2


def _matmul(a, b):
    return tuple(tuple(sum(a[i][j] * b[j][k] for j in range(RANK))
                       for k in range(RANK)) for i in range(RANK))


def apply_theta(theta, coords) -> tuple:
    """Image of a zeta-basis coordinate vector under an involution matrix."""
    return tuple(sum(theta[i][j] * coords[j] for j in range(RANK)) for i in range(RANK))


def _check_involution(theta, ident: int, line_no: int) -> None:
    ident_mat = tuple(tuple(1 if i == k else 0 for k in range(RANK)) for i in range(RANK))
    if _matmul(theta, theta) != ident_mat:
        raise _err(line_no, f"kgb {ident}: matrix is not an involution")
    g2 = _zeta_gram2()
    # theta^T (2G) theta = 2G, i.e. the involution is orthogonal for B
    tt = tuple(tuple(theta[j][i] for j in range(RANK)) for i in range(RANK))
    if _matmul(_matmul(tt, g2), theta) != g2:
        raise _err(line_no, f"kgb {ident}: matrix does not preserve the form")


def _iter_lines(stream):
    if isinstance(stream, str):
        lines = stream.splitlines()
    else:
        lines = stream
    for no, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _parse_support(text: str, line_no: int) -> frozenset:
    if text == "full":
        return FULL_SUPPORT
    if text == "empty":
        return frozenset()
    idx = _ints(text, line_no, len([p for p in text.split(",")]), "support")
    bad = [i for i in idx if not 0 <= i < RANK]
    if bad:
        raise _err(line_no, f"support index out of range: {bad[0]}")
    if len(set(idx)) != len(idx):
        raise _err(line_no, "support: repeated index")
    return frozenset(idx)


def parse_fixture(kind: str, stream):
    """Parse one fixture stream.  Returns a dict for 'kgb' (id -> record) and
    'dirac_counts' (subset -> count), a list of records otherwise."""
    if kind == "kgb":
        return _parse_kgb(stream)
    if kind == "params":
        return _parse_params(stream)
    if kind == "branching":
        return _parse_branching(stream)
    if kind == "table":
        return _parse_table(stream)
    if kind == "dirac_counts":
        return _parse_dirac_counts(stream)
    raise ValueError(f"unknown fixture kind: {kind!r}")


def _parse_kgb(stream):
    out = {}
    for no, line in _iter_lines(stream):
        f = _fields(line)
        if len(f) != 3:
            raise _err(no, f"kgb: expected 3 fields, got {len(f)}")
        try:
            ident = int(f[0])
        except ValueError:
            raise _err(no, f"kgb: bad id {f[0]!r}") from None
        if ident < 0:
            raise _err(no, f"kgb: negative id {ident}")
        if ident in out:
            raise _err(no, f"kgb: duplicate id {ident}")
        support = _parse_support(f[1], no)
        rows = [r.strip() for r in f[2].split(";")]
        if len(rows) != RANK:
            raise _err(no, f"kgb {ident}: expected {RANK} matrix rows, got {len(rows)}")
        theta = tuple(_ints(r, no, RANK, f"kgb {ident} matrix row") for r in rows)
        _check_involution(theta, ident, no)
        out[ident] = KgbRecord(id=ident, support=support, theta=theta)
    return out


def _parse_params(stream):
    out = []
    for no, line in _iter_lines(stream):
        f = _fields(line)
        if len(f) != 4:
            raise _err(no, f"params: expected 4 fields, got {len(f)}")
        try:
            x = int(f[0])
        except ValueError:
            raise _err(no, f"params: bad KGB id {f[0]!r}") from None
        lam = _ints(f[1], no, RANK, "lambda")
        nu = _rationals(f[2], no, "nu")
        flags = set()
        if f[3]:
            for flag in (p.strip() for p in f[3].split(",")):
                if flag not in ("unitary", "fs"):
                    raise _err(no, f"params: unknown flag {flag!r}")
                flags.add(flag)
        out.append(AtlasParameter(x=x, lam=lam, nu=nu,
                                  unitary="unitary" in flags,
                                  fully_supported="fs" in flags))
    return out


def _parse_branching(stream):
    out = []
    for no, line in _iter_lines(stream):
        f = _fields(line)
        if len(f) != 3:
            raise _err(no, f"branching: expected 3 fields, got {len(f)}")
        try:
            mult = int(f[0])
            height = int(f[2])
        except ValueError:
            raise _err(no, "branching: bad integer field") from None
        if mult < 1:
            raise _err(no, f"branching: multiplicity {mult} < 1")
        if height < 0:
            raise _err(no, f"branching: negative height {height}")
        ktype = _ints(f[1], no, RANK, "ktype")
        if not is_k_type(ktype):
            raise _err(no, f"branching: {ktype} is not a K-type weight")
        out.append(BranchRow(mult=mult, ktype=ktype, height=height))
    return out


def _parse_table(stream):
    out = []
    seen = set()
    for no, line in _iter_lines(stream):
        f = _fields(line)
        if len(f) != 7:
            raise _err(no, f"table: expected 7 fields, got {len(f)}")
        table_id = f[0]
        if len(table_id) != RANK or not table_id.isdigit():
            raise _err(no, f"table: id {table_id!r} is not {RANK} digits")
        try:
            x = int(f[1])
        except ValueError:
            raise _err(no, f"table: bad KGB id {f[1]!r}") from None
        x_prime = None
        if f[2] != "-":
            try:
                x_prime = int(f[2])
            except ValueError:
                raise _err(no, f"table: bad x' field {f[2]!r}") from None
        if (table_id, x) in seen:
            raise _err(no, f"table: duplicate row {table_id}/{x}")
        seen.add((table_id, x))
        lam = _ints(f[3], no, RANK, "lambda")
        nu = _rationals(f[4], no, "nu")
        spins = []
        flags = []
        for part in (p.strip() for p in f[5].split(";")):
            if not part:
                raise _err(no, "table: empty spin entry")
            lkt = part.startswith("LKT:")
            if lkt:
                part = part[4:].strip()
            spins.append(_ints(part, no, RANK, "spin lkt"))
            flags.append(lkt)
        if not spins:
            raise _err(no, "table: no spin lkts")
        if f[6] not in ("0", "1"):
            raise _err(no, f"table: unipotent flag must be 0 or 1, got {f[6]!r}")
        out.append(TableRow(table_id=table_id, x=x, x_prime=x_prime, lam=lam,
                            nu=nu, spin_lkts=tuple(spins),
                            lkt_flags=tuple(flags), unipotent=f[6] == "1"))
    return out


def _parse_dirac_counts(stream):
    out = {}
    for no, line in _iter_lines(stream):
        f = _fields(line)
        if len(f) != 2:
            raise _err(no, f"dirac_counts: expected 2 fields, got {len(f)}")
        subset = _parse_support(f[0], no)
        if subset == FULL_SUPPORT:
            raise _err(no, "dirac_counts: the full index set is not a proper subset")
        if subset in out:
            raise _err(no, f"dirac_counts: duplicate subset {sorted(subset)}")
        try:
            count = int(f[1])
        except ValueError:
            raise _err(no, f"dirac_counts: bad count {f[1]!r}") from None
        if count < 0:
            raise _err(no, f"dirac_counts: negative count {count}")
        out[subset] = count
    return out


# ---------------------------------------------------------------------------
# parameter arithmetic


def nu_from_involution(inf_char, rec: KgbRecord) -> tuple:
    """(Lambda - theta Lambda)/2 in zeta-basis coordinates."""
    img = apply_theta(rec.theta, inf_char)
    return tuple(Fraction(a - b, 2) for a, b in zip(inf_char, img))


def norm_sq_nu(nu) -> Fraction:
    return norm_sq(to_ambient("zeta", nu))


def infinitesimal_char(p: AtlasParameter, rec: KgbRecord) -> tuple:
    """(1 + theta)/2 applied to lambda, plus nu."""
    if rec.id != p.x:
        raise ValueError(f"parameter has x={p.x} but involution record is {rec.id}")
    img = apply_theta(rec.theta, p.lam)
    return tuple(Fraction(a + b, 2) + n for a, b, n in zip(p.lam, img, p.nu))


# ---------------------------------------------------------------------------
# census of infinitesimal characters


def _split_part_forms(rec: KgbRecord):
    """Coefficient rows of the linear forms <Lambda, beta_vee> for the positive
    roots beta negated by the involution.

    The (-1)-eigenspace of every shipped involution is spanned by pairwise
    orthogonal roots, so |nu|^2 = (1/2) * sum_j <Lambda, beta_j_vee>^2 and the
    census condition |nu|^2 < 94 becomes sum_j <Lambda, beta_j_vee>^2 <= 187
    over integer vectors.  Anything else is rejected.
    """
    d = build_root_datum()
    neg = []
    for beta in d.positive_roots:
        coords = tuple(int(c) for c in from_ambient("zeta", beta))
        if apply_theta(rec.theta, coords) == tuple(-c for c in coords):
            neg.append(beta)
    dim_minus = (RANK - sum(rec.theta[i][i] for i in range(RANK))) // 2
    if len(neg) != dim_minus:
        raise ValueError(
            f"kgb {rec.id}: split part of dimension {dim_minus} is spanned by "
            f"{len(neg)} roots; census needs a root-spanned split part")
    for i in range(len(neg)):
        for j in range(i + 1, len(neg)):
            if inner(neg[i], neg[j]) != 0:
                raise ValueError(f"kgb {rec.id}: negated roots are not orthogonal")
    return [tuple(int(inner(b, w)) for w in d.fundamental_weights) for b in neg]


_FORM_BOUND = 2 * NU_BOUND - 1  # sum of squared pairings is an integer < 2*94


def _enum_involution(forms, coord_cap: int):
    """All nonnegative integer coordinate vectors whose squared pairings with
    the split-part roots sum to at most the bound.  Monotone depth-first scan;
    a coordinate reaching the cap without tripping the bound is an error."""
    r = len(forms)
    cols = [tuple(forms[j][i] for j in range(r)) for i in range(RANK)]
    for i, col in enumerate(cols):
        if not any(col):
            raise ValueError(
                f"coordinate {i} is unconstrained; enumeration would not terminate")
    out = []
    c = [0] * RANK

    def rec(i, ms):
        if i == RANK:
            out.append(tuple(c))
            return
        col = cols[i]
        ci = 0
        cur = ms
        while sum(m * m for m in cur) <= _FORM_BOUND:
            if ci > coord_cap:
                raise ValueError(
                    f"coordinate cap {coord_cap} is active; raise it to certify "
                    "completeness")
            c[i] = ci
            rec(i + 1, cur)
            ci += 1
            cur = tuple(m + col[j] for j, m in enumerate(cur))
        c[i] = 0

    rec(0, (0,) * r)
    return out


def _phi_worker(args):
    forms_list, coord_cap = args
    found = set()
    for forms in forms_list:
        found.update(_enum_involution(forms, coord_cap))
    return found


def enumerate_phi(kgb, coord_cap: int = 64, jobs: int = 1):
    """Census of the integral infinitesimal characters admitted by the fully
    supported involutions: admissible coordinates, smallest coordinate zero,
    and |nu|^2 < 94 for at least one fully supported record.

    Returns (sorted tuple of coordinate vectors, partition dict keyed by the
    largest coordinate).
    """
    records = kgb.values() if isinstance(kgb, dict) else list(kgb)
    fs = [r for r in records if r.support == FULL_SUPPORT]
    if not fs:
        raise ValueError("no fully supported involution records in fixture")
    seen = set()
    forms_list = []
    for r in fs:
        if r.theta in seen:
            continue
        seen.add(r.theta)
        forms_list.append(_split_part_forms(r))
    if jobs > 1:
        chunks = [forms_list[i::jobs] for i in range(jobs)]
        with Pool(jobs) as pool:
            parts = pool.map(_phi_worker, [(ch, coord_cap) for ch in chunks])
        union = set().union(*parts)
    else:
        union = _phi_worker((forms_list, coord_cap))
    chars = sorted(c for c in union if min(c) == 0 and hp_admissible(c))
    partition = {}
    for c in chars:
        partition.setdefault(max(c), []).append(c)
    partition = {k: tuple(v) for k, v in sorted(partition.items())}
    return tuple(chars), partition


# ---------------------------------------------------------------------------
# counting helpers


def hj_filter(params, kgb=None):
    """(total, fully supported, |nu|^2 <= 399/2, |nu|^2 < 94), the last two
    among the fully supported parameters.  When the involution record of a
    fully supported parameter is available its support must agree."""
    by_id = {}
    if kgb:
        by_id = kgb if isinstance(kgb, dict) else {r.id: r for r in kgb}
    total = len(params)
    fs = old = new = 0
    for p in params:
        rec = by_id.get(p.x)
        if rec is not None and p.fully_supported != (rec.support == FULL_SUPPORT):
            raise ValueError(f"parameter x={p.x}: fs flag contradicts kgb support")
        if not p.fully_supported:
            continue
        fs += 1
        q = norm_sq_nu(p.nu)
        if q <= OLD_NU_BOUND:
            old += 1
        if q < NU_BOUND:
            new += 1
    return total, fs, old, new


@dataclass(frozen=True)
class TableRowReport:
    table_id: str
    x: int
    checks: tuple  # (name, ok, detail)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)


def verify_table_row(row: TableRow) -> TableRowReport:
    """Recompute everything about a table row that does not need external
    data: spin LKTs are genuine K-types, each attains the squared norm of the
    infinitesimal character, each has a dominance witness conjugate to it, and
    the character itself is dominant and admissible."""
    d = build_root_datum()
    lam_amb = infchar_ambient(row.inf_char)
    target = norm_sq(lam_amb)
    dom_char = tuple(dominant_rep(lam_amb, "G")[0])

    checks = []
    bad = [m for m in row.spin_lkts if not is_k_type(m)]
    checks.append(("ktype-integrality", not bad,
                   f"non-integral entries: {bad}" if bad else ""))
    if bad:
        return TableRowReport(table_id=row.table_id, x=row.x, checks=tuple(checks))

    norm_bad = []
    witness_bad = []
    for mu in row.spin_lkts:
        sd = spin_datum(mu)
        if sd.spin_norm_sq != target:
            norm_bad.append((mu, sd.spin_norm_sq))
            continue
        hit = False
        for j, pw in sd.prv_weights.items():
            wit = add(to_ambient("varpi", pw), d.rho_c)
            if tuple(dominant_rep(wit, "G")[0]) == dom_char:
                hit = True
                break
        if not hit:
            witness_bad.append(mu)
    checks.append(("spin-norm", not norm_bad,
                   f"wrong spin norms: {norm_bad}" if norm_bad else ""))
    checks.append(("dominance-witness", not witness_bad,
                   f"no conjugate witness: {witness_bad}" if witness_bad else ""))
    ok4 = all(c >= 0 for c in row.inf_char) and hp_admissible(row.inf_char)
    checks.append(("inf-char", ok4, "" if ok4 else f"{row.inf_char} fails"))
    return TableRowReport(table_id=row.table_id, x=row.x, checks=tuple(checks))


def count_strings(counts):
    """Aggregate N(S) over proper support subsets into the by-size totals.

    Requires a count for every proper subset of {0..6}; returns the map, the
    seven by-size sums, and their total."""
    missing = []
    for size in range(RANK):
        for combo in combinations(range(RANK), size):
            if frozenset(combo) not in counts:
                missing.append(combo)
    if missing:
        raise ValueError(f"dirac_counts: missing subset {list(missing[0])}")
    sums = [0] * RANK
    for s, n in counts.items():
        sums[len(s)] += n
    return dict(counts), tuple(sums), sum(sums)

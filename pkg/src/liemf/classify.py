"""Brute-force multiplicity verdicts and their independent cross-checks.

The pipeline for one compact-group type tau:

  1. expand the full weight multiset of tau over the K root datum,
  2. push every weight through the family's torus map, splitting the
     multiset into finite-label sectors,
  3. greedily decompose each sector over the M root datum,
  4. tau is multiplicity-free precisely when every (sector, constituent)
     pair occurs exactly once.

Everything is exact integer arithmetic; any inconsistency raises instead
of degrading.  Two independent routes guard the pipeline: classical
branching combinatorics (see branching.py) recompute restrictions for
the families built from gl and so, and a signed Weyl-sum (Kostant-style)
multiplicity formula recomputes any witness of a multiplicity.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .branching import gl_branch_levi, lr_restrict
from .characters import (
    TorusMap,
    decompose_character,
    irreducible_character,
    restrict_character,
)
from .pairs import HermitianPair
from .weights import DEFAULT_DIM_CAP, RootDatum, ShapeError


def _unit(dim, i, value=1):
    row = [0] * dim
    row[i] = value
    return tuple(row)


# -- the main pipeline ---------------------------------------------------------


def restricted_constituents(pair, d, cap=DEFAULT_DIM_CAP):
    """Decompose tau restricted to M: dict (sector, weight) -> multiplicity.

    Also returns the dimension of tau.  Sector keys are finite-label
    tuples, weights are doubled highest weights over the M datum.
    """
    datum = pair.k_datum()
    char = irreducible_character(datum, d, cap=cap)
    m_datum, tmap, labels = pair.m_model()
    sectors = restrict_character(char, tmap, labels)
    out = {}
    for sec in sorted(sectors):
        dec = decompose_character(m_datum, sectors[sec], cap=cap)
        for w, m in dec.items():
            out[(sec, w)] = m
    return out, char.dim


@dataclass
class MFResult:
    tag: str
    weight: tuple
    dim: int
    multiplicity_free: bool
    witness: tuple = None
    constituents: dict = field(default_factory=dict)


def mf_check(pair, d, cap=DEFAULT_DIM_CAP):
    """Brute-force verdict for one K-type, with a witness when it fails.

    The witness is (sector, constituent, multiplicity) for the first
    repeated constituent in sorted order.
    """
    d = tuple(d)
    if not pair.k_rep_valid(d):
        raise ShapeError("%r is not a valid weight for %s" % (d, pair.tag))
    cons, dim = restricted_constituents(pair, d, cap=cap)
    witness = None
    for key in sorted(cons):
        if cons[key] >= 2:
            witness = (key[0], key[1], cons[key])
            break
    return MFResult(pair.tag, d, dim, witness is None, witness, cons)


# -- range classification -------------------------------------------------------


@dataclass
class ClassifyReport:
    tag: str
    bound: int
    cap: int
    records: list = field(default_factory=list)
    disagreements: list = field(default_factory=list)
    skipped: list = field(default_factory=list)

    @property
    def checked(self):
        return len(self.records)

    @property
    def agree(self):
        return not self.disagreements


def _mf_worker(args):
    tag, d, cap = args
    pair = HermitianPair.from_tag(tag)
    res = mf_check(pair, d, cap=cap)
    return d, res.multiplicity_free, res.witness, res.dim


def classify_range(pair, bound, cap=DEFAULT_DIM_CAP, jobs=1):
    """Compare brute-force and closed-form verdicts over all candidates.

    Candidates whose dimension exceeds cap are reported in skipped
    rather than silently dropped.  records hold one dict per checked
    weight; disagreements lists the weights where the two verdicts
    differ.
    """
    datum = pair.k_datum()
    todo, skipped = [], []
    for d in pair.enumerate_reps(bound):
        dim = datum.weyl_dim(d)
        if cap is not None and dim > cap:
            skipped.append({"weight": d, "dim": dim})
        else:
            todo.append((d, dim))
    report = ClassifyReport(pair.tag, bound, cap)
    report.skipped = skipped
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(
                _mf_worker, [(pair.tag, d, cap) for d, _ in todo]))
    else:
        results = [_mf_worker((pair.tag, d, cap)) for d, _ in todo]
    for d, brute, witness, dim in results:
        closed = pair.closed_form_verdict(d)
        rec = {"weight": d, "dim": dim, "brute": brute, "closed": closed,
               "witness": witness}
        report.records.append(rec)
        if brute != closed:
            report.disagreements.append(rec)
    return report


# -- signed Weyl-sum multiplicity (independent of the greedy decomposition) -----


_WEYL_CACHE = {}


def _weyl_elements(datum):
    """All Weyl group elements of a datum as (matrix, sign) pairs."""
    hit = _WEYL_CACHE.get(datum)
    if hit is not None:
        return hit
    dim = datum.dim
    reflections = []
    for a in datum.simple:
        ipaa = datum.ip(a, a)
        rows = []
        for i in range(dim):
            row = []
            for j in range(dim):
                val = Fraction(int(i == j)) - Fraction(2 * datum.scales[j] * a[j], ipaa) * a[i]
                row.append(val)
            rows.append(tuple(row))
        reflections.append(tuple(rows))
    ident = tuple(tuple(Fraction(int(i == j)) for j in range(dim))
                  for i in range(dim))
    elements = {ident: 1}
    frontier = [ident]
    while frontier:
        nxt = []
        for mat in frontier:
            sign = elements[mat]
            for refl in reflections:
                prod = tuple(
                    tuple(sum(refl[i][k] * mat[k][j] for k in range(dim))
                          for j in range(dim))
                    for i in range(dim))
                if prod not in elements:
                    elements[prod] = -sign
                    nxt.append(prod)
        frontier = nxt
    out = tuple(elements.items())
    _WEYL_CACHE[datum] = out
    return out


def _apply_matrix(mat, vec):
    out = []
    for row in mat:
        v = sum(c * x for c, x in zip(row, vec))
        if v.denominator != 1:
            raise ShapeError("Weyl image %r is not integral" % (v,))
        out.append(int(v))
    return tuple(out)


def kostant_multiplicity(m_datum, terms, eta):
    """Multiplicity of the irreducible eta inside a weight multiset.

    Signed sum over the Weyl group: sum_w det(w) N(w(eta + rho) - rho),
    where N is the weight count of the multiset.  Independent of the
    greedy decomposition, so it serves as a second opinion on any
    claimed multiplicity.
    """
    rho = m_datum.rho
    target = tuple(x + r for x, r in zip(eta, rho))
    total = 0
    for mat, sign in _weyl_elements(m_datum):
        img = _apply_matrix(mat, target)
        v = tuple(x - r for x, r in zip(img, rho))
        total += sign * terms.get(v, 0)
    return total


def witness_multiplicity(pair, d, sector, eta, cap=DEFAULT_DIM_CAP):
    """Recompute one constituent's multiplicity by the signed Weyl sum."""
    datum = pair.k_datum()
    char = irreducible_character(datum, d, cap=cap)
    m_datum, tmap, labels = pair.m_model()
    sectors = restrict_character(char, tmap, labels)
    terms = sectors.get(tuple(sector), {})
    return kostant_multiplicity(m_datum, terms, tuple(eta))


# -- branching-rule cross-checks --------------------------------------------------


def gl_levi_via_characters(mu, r, b, cap=DEFAULT_DIM_CAP):
    """gl(r+b) -> gl(1)^r x gl(b) through the character engine.

    Returns the same {((z_1..z_r), w): mult} shape as gl_branch_levi, so
    the two independent routes can be compared directly.
    """
    n = r + b
    datum = RootDatum.gl(n)
    char = irreducible_character(datum, tuple(mu), cap=cap)
    m_datum = RootDatum((("gl", b),) if b else (), torus=r)
    rows = [_unit(n, r + j) for j in range(b)]
    rows += [_unit(n, i) for i in range(r)]
    sectors = restrict_character(char, TorusMap(rows, dim_in=n), ())
    dec = decompose_character(m_datum, sectors[()], cap=cap)
    return {(w[b:], w[:b]): m for w, m in dec.items()}


def so_step2_via_characters(kind, k, mu, cap=DEFAULT_DIM_CAP):
    """so(m) -> so(m-2) through the character engine: {eta: mult}.

    kind is the ambient type: "B" for so(2k+1) (target so(2k-1)) or "D"
    for so(2k) (target so(2k-2)); the subalgebra drops the first
    coordinate pair.
    """
    datum = RootDatum(((kind, k),))
    m_datum = RootDatum(((kind, k - 1),))
    char = irreducible_character(datum, tuple(mu), cap=cap)
    rows = [_unit(k, j) for j in range(1, k)]
    sectors = restrict_character(char, TorusMap(rows, dim_in=k), ())
    return decompose_character(m_datum, sectors[()], cap=cap)


def cross_validate(pair, d, cap=DEFAULT_DIM_CAP):
    """Recompute a restriction by classical branching and compare.

    Supported families: A (Levi chains on both slices), C and Cmp
    (torus weights against label sector totals), D (iterated
    Littlewood-Richardson extraction of rank-two blocks).  Returns a
    dict with an "agree" flag and the two computations.
    """
    d = tuple(d)
    if not pair.k_rep_valid(d):
        raise ShapeError("%r is not a valid weight for %s" % (d, pair.tag))
    fam = pair.family
    if fam == "A":
        return _cross_validate_a(pair, d, cap)
    if fam in ("C", "Cmp"):
        return _cross_validate_c(pair, d, cap)
    if fam == "D":
        return _cross_validate_d(pair, d, cap)
    raise ShapeError("no independent branching oracle for family %s" % fam)


def _cross_validate_a(pair, d, cap):
    r, b = pair.r, pair.b
    p = r + b
    mu, nu = d[:p], d[p:]
    branch = {}
    for (zs, w), m1 in gl_branch_levi(mu, r, b).items():
        for (ys, _), m2 in gl_branch_levi(nu, r, 0).items():
            key = w + tuple(z + y for z, y in zip(zs, ys))
            branch[key] = branch.get(key, 0) + m1 * m2
    cons, _ = restricted_constituents(pair, d, cap=cap)
    direct = {w: m for (_, w), m in cons.items()}
    return {"agree": branch == direct, "branch": branch, "character": direct}


def _cross_validate_c(pair, d, cap):
    n = pair.n
    _, _, labels = pair.m_model()
    branch = {}
    for (zs, _), m in gl_branch_levi(d, n, 0).items():
        sec = tuple(lbl.value(zs) for lbl in labels)
        branch[sec] = branch.get(sec, 0) + m
    cons, _ = restricted_constituents(pair, d, cap=cap)
    direct = {}
    for (sec, _), m in cons.items():
        direct[sec] = direct.get(sec, 0) + m
    return {"agree": branch == direct, "branch": branch, "character": direct}


def _cross_validate_d(pair, d, cap):
    n = pair.n
    r = n // 2
    shift = d[-1] // 2
    part = tuple(x // 2 - shift for x in d)
    states = {((), part): 1}
    for j in range(r):
        rem = n - 2 * (j + 1)
        nxt = {}
        for (acc, cur), m in states.items():
            for (alpha, beta), c in lr_restrict(cur, 2, rem).items():
                key = (acc + (2 * (alpha[0] - alpha[1]),), beta)
                nxt[key] = nxt.get(key, 0) + m * c
        states = nxt
    branch = {}
    for (acc, tail), m in states.items():
        key = acc + ((2 * (tail[0] + shift),) if n % 2 else ())
        branch[key] = branch.get(key, 0) + m
    cons, _ = restricted_constituents(pair, d, cap=cap)
    direct = {w: m for (_, w), m in cons.items()}
    return {"agree": branch == direct, "branch": branch, "character": direct}

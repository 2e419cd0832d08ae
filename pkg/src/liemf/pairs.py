"""Catalog of the irreducible Hermitian families and their M-models.

Each family pins down, on doubled coordinates:

  * the compact-factor root datum K (simple slices plus central torus),
  * the reductive part of the boundary stabilizer M, as a target root
    datum together with the torus map and finite labels that realize the
    restriction of K-weights,
  * which K-weights are valid (lattice and cover conditions),
  * a canonical representative modulo one-dimensional character twists,
  * the closed-form list of multiplicity-free representations that the
    brute-force pipeline is checked against,
  * restricted root data: rank, root multiplicities, and the half-sum
    rho_a used for spherical-parameter bookkeeping.

Families (parameters follow the tag syntax used by the CLI):

  A:r=R,b=B   su(R+B, R), K ~ gl(R+B) + gl(R) with a central relation
  C:N         sp(N, R), K ~ u(N)
  Cmp:N       the metaplectic double cover of sp(N, R)
  D:N         so*(2N), K ~ u(N)
  BD:N        so(N, 2), K ~ so(N) + so(2)
  BDspin:N    the spin double cover of so(N, 2)
  E6          the rank-2 exceptional Hermitian pair, K ~ so(10) + R
  E7          the rank-3 exceptional Hermitian pair, K ~ e6 + R
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .characters import LabelFn, TorusMap
from .weights import E6_FUNDAMENTAL, RootDatum, ShapeError

FAMILIES = ("A", "C", "Cmp", "D", "BD", "BDspin", "E6", "E7")

# D5 fundamental weights, doubled, orthogonal coordinates.
_D5_FUNDAMENTAL = (
    (2, 0, 0, 0, 0),
    (2, 2, 0, 0, 0),
    (2, 2, 2, 0, 0),
    (1, 1, 1, 1, -1),
    (1, 1, 1, 1, 1),
)


def _unit(dim, i, value=1):
    row = [0] * dim
    row[i] = value
    return tuple(row)


def _all_zero(v):
    return all(x == 0 for x in v)


def _is_one_gap(v):
    """Nonzero with entries taking exactly the two values {a, 0}, a > 0."""
    vals = set(v)
    return len(vals) == 2 and 0 in vals and max(vals) > 0


def _is_cartan_interval(v):
    """Zero, (m,0,..), (m,..,m,0), or (1,..,1,0,..,0) in doubled units."""
    if _all_zero(v):
        return True
    if not _is_one_gap(v):
        return False
    a = max(v)
    j = sum(1 for x in v if x == a)
    return j == 1 or j == len(v) - 1 or a == 2


def _is_single_row_or_column(v):
    """Zero, (m,0,..,0), or (m,..,m,0) in doubled units."""
    if _all_zero(v):
        return True
    if not _is_one_gap(v):
        return False
    a = max(v)
    j = sum(1 for x in v if x == a)
    return j == 1 or j == len(v) - 1


def _is_near_scalar(v):
    """(a, .., a, +-a) with a >= 0, in doubled units."""
    if len(v) == 1:
        return True
    a = v[0]
    return a >= 0 and all(x == a for x in v[1:-1]) and abs(v[-1]) == a


def _bounded_partitions(length, total):
    """Non-increasing nonnegative integer tuples with sum <= total."""
    if length == 0:
        yield ()
        return

    def rec(prefix, rest, hi):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        for v in range(min(rest, hi), -1, -1):
            yield from rec(prefix + [v], rest - v, v)

    yield from rec([], total, total)


@dataclass(frozen=True)
class HermitianPair:
    """One irreducible Hermitian family member, identified by its tag."""

    family: str
    r: int = 0
    b: int = 0
    n: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ShapeError("unknown family %r" % (self.family,))
        if self.family == "A":
            if self.r < 1 or self.b < 0:
                raise ShapeError("family A needs r >= 1 and b >= 0")
        elif self.family in ("C", "Cmp"):
            if self.n < 1:
                raise ShapeError("family %s needs n >= 1" % self.family)
        elif self.family == "D":
            if self.n < 2:
                raise ShapeError("family D needs n >= 2")
        elif self.family in ("BD", "BDspin"):
            if self.n < 4:
                raise ShapeError("family %s needs n >= 4" % self.family)

    # -- identification -----------------------------------------------------

    @property
    def tag(self):
        if self.family == "A":
            return "A:r=%d,b=%d" % (self.r, self.b)
        if self.family in ("C", "Cmp", "D", "BD", "BDspin"):
            return "%s:%d" % (self.family, self.n)
        return self.family

    @staticmethod
    def from_tag(text):
        name, _, rest = str(text).partition(":")
        name = name.strip()
        if name == "A":
            params = {}
            for piece in rest.split(","):
                key, _, val = piece.partition("=")
                params[key.strip()] = int(val)
            extra = set(params) - {"r", "b"}
            if extra:
                raise ShapeError("unknown family A parameters %r" % (sorted(extra),))
            return HermitianPair("A", r=params.get("r", 0), b=params.get("b", 0))
        if name in ("C", "Cmp", "D", "BD", "BDspin"):
            return HermitianPair(name, n=int(rest))
        if name in ("E6", "E7"):
            if rest:
                raise ShapeError("family %s takes no parameters" % name)
            return HermitianPair(name)
        raise ShapeError("unknown pair tag %r" % (text,))

    # -- root data ------------------------------------------------------------

    def k_datum(self):
        fam = self.family
        if fam == "A":
            return RootDatum((("gl", self.r + self.b), ("gl", self.r)))
        if fam in ("C", "Cmp", "D"):
            return RootDatum((("gl", self.n),))
        if fam in ("BD", "BDspin"):
            kind = "B" if self.n % 2 else "D"
            return RootDatum(((kind, self.n // 2),), torus=1)
        if fam == "E6":
            return RootDatum((("D", 5),), torus=1)
        return RootDatum((("E6", 6),), torus=1)

    def m_model(self):
        """(m_datum, torus_map, labels) realizing restriction to M."""
        fam = self.family
        if fam == "A":
            p, q = self.r + self.b, self.r
            dim = p + q
            m_datum = RootDatum((("gl", self.b),) if self.b else (), torus=self.r)
            rows = [_unit(dim, self.r + j) for j in range(self.b)]
            for i in range(self.r):
                row = [0] * dim
                row[i] = 1
                row[p + i] = 1
                rows.append(tuple(row))
            return m_datum, TorusMap(rows, dim_in=dim), ()
        if fam in ("C", "Cmp"):
            n = self.n
            m_datum = RootDatum(())
            tmap = TorusMap([], dim_in=n)
            if fam == "C":
                labels = tuple(LabelFn(_unit(n, i), 2, divisor=2) for i in range(n))
            else:
                labels = tuple(LabelFn(_unit(n, i), 4, divisor=1) for i in range(n))
            return m_datum, tmap, labels
        if fam == "D":
            n = self.n
            r = n // 2
            m_datum = RootDatum((("C", 1),) * r, torus=n % 2)
            rows = []
            for j in range(r):
                row = [0] * n
                row[2 * j] = 1
                row[2 * j + 1] = -1
                rows.append(tuple(row))
            if n % 2:
                rows.append(_unit(n, n - 1))
            return m_datum, TorusMap(rows, dim_in=n), ()
        if fam in ("BD", "BDspin"):
            k = self.n // 2
            mkind = "B" if (self.n - 2) % 2 else "D"
            m_datum = RootDatum(((mkind, k - 1),))
            rows = [_unit(k + 1, j) for j in range(1, k)]
            tmap = TorusMap(rows, dim_in=k + 1)
            if fam == "BD":
                coeffs = [0] * (k + 1)
                coeffs[0] = 1
                coeffs[k] = 1
                labels = (LabelFn(coeffs, 2, divisor=2),)
            else:
                labels = (LabelFn(_unit(k + 1, 0), 4, divisor=1),)
            return m_datum, tmap, labels
        if fam == "E6":
            m_datum = RootDatum((("gl", 4),), torus=1)
            rows = [_unit(6, i) for i in (1, 2, 3, 4, 5)]
            return m_datum, TorusMap(rows, dim_in=6), ()
        m_datum = RootDatum((("D", 4),))
        rows = [_unit(7, i) for i in range(4)]
        return m_datum, TorusMap(rows, dim_in=7), ()

    # -- lattice validity and canonical forms ----------------------------------

    def k_rep_valid(self, d):
        """Whether a doubled weight is a weight of the compact group at hand."""
        datum = self.k_datum()
        if len(d) != datum.dim or not all(isinstance(x, int) for x in d):
            return False
        fam = self.family
        if fam == "A":
            return all(x % 2 == 0 for x in d)
        if fam == "C":
            return all(x % 2 == 0 for x in d)
        if fam == "Cmp":
            return len({x % 2 for x in d}) == 1
        if fam == "D":
            return all(x % 2 == 0 for x in d)
        if fam == "BD":
            return all(x % 2 == 0 for x in d)
        if fam == "BDspin":
            mu, dnu = d[:-1], d[-1]
            parities = {x % 2 for x in mu}
            if len(parities) != 1 or dnu % 2:
                return False
            return (dnu // 2) % 2 == parities.pop()
        if fam == "E6":
            mu, dch = d[:5], d[5]
            if len({x % 2 for x in mu}) != 1 or dch % 2:
                return False
            return (sum(mu) - dch // 2) % 4 == 0
        if d[6] % 2:
            return False
        try:
            datum.validate_weight(d)
        except ShapeError:
            return False
        return True

    def canonical_rep(self, d):
        """Normalize modulo one-dimensional character twists of K."""
        fam = self.family
        if fam == "A":
            p = self.r + self.b
            mu, nu = d[:p], d[p:]
            mu = tuple(x - mu[-1] for x in mu)
            nu = tuple(x - nu[-1] for x in nu)
            return mu + nu
        if fam in ("C", "Cmp", "D"):
            return tuple(x - d[-1] for x in d)
        if fam == "BD":
            return d[:-1] + (0,)
        if fam == "BDspin":
            return d[:-1] + (2 * (d[0] % 2),)
        if fam == "E6":
            return d[:5] + (2 * (sum(d[:5]) % 4),)
        return d[:6] + (0,)

    def canonical_constituent(self, w):
        """Normalize one M-constituent modulo the relations inside M."""
        if self.family == "A":
            if self.b:
                shift = w[self.b - 1]
                head = tuple(x - shift for x in w[:self.b])
                tail = tuple(x - 2 * shift for x in w[self.b:])
                return head + tail
            shift = w[-1] - (w[-1] % 4)
            return tuple(x - shift for x in w)
        return tuple(w)

    # -- the closed-form classification ----------------------------------------

    def closed_form_verdict(self, d):
        """Whether the canonical class of d is in the closed-form list."""
        c = self.canonical_rep(d)
        fam = self.family
        if fam == "A":
            p = self.r + self.b
            mu, nu = c[:p], c[p:]
            if self.r == 1:
                return True
            if self.r == 2:
                if _all_zero(mu):
                    return True
                return _all_zero(nu) and _is_one_gap(mu)
            return ((_all_zero(mu) and _is_cartan_interval(nu))
                    or (_all_zero(nu) and _is_cartan_interval(mu)))
        if fam in ("C", "Cmp"):
            return all(x in (0, 2) for x in c)
        if fam == "D":
            if self.n <= 3:
                return True
            return _is_single_row_or_column(c)
        if fam == "BD":
            mu = c[:-1]
            if self.n % 2:
                return _all_zero(mu)
            return _is_near_scalar(mu)
        if fam == "BDspin":
            mu = c[:-1]
            if self.n % 2:
                return _all_zero(mu) or all(x == 1 for x in mu)
            return _is_near_scalar(mu)
        if fam == "E6":
            mu = c[:5]
            return mu in ((0, 0, 0, 0, 0), (1, 1, 1, 1, 1), (1, 1, 1, 1, -1))
        return _all_zero(c[:6])

    # -- candidate enumeration ---------------------------------------------------

    def enumerate_reps(self, bound):
        """All valid canonical dominant weights within the size bound.

        Classical families bound the L1 norm of each simple slice in
        doubled coordinates; the two exceptional families bound the sum
        of the fundamental-weight coefficients.
        """
        fam = self.family
        out = set()
        if fam == "A":
            p, q = self.r + self.b, self.r
            for mu in _bounded_partitions(p - 1, bound // 2):
                for nu in _bounded_partitions(q - 1, bound // 2):
                    d = tuple(2 * x for x in mu) + (0,)
                    d += tuple(2 * x for x in nu) + (0,)
                    out.add(d)
        elif fam in ("C", "Cmp", "D"):
            for mu in _bounded_partitions(self.n - 1, bound // 2):
                out.add(tuple(2 * x for x in mu) + (0,))
        elif fam in ("BD", "BDspin"):
            k = self.n // 2
            parities = (0,) if fam == "BD" else (0, 1)
            for par in parities:
                budget = (bound - k * par) // 2
                if budget < 0:
                    continue
                for mu in _bounded_partitions(k, budget):
                    d = tuple(2 * x + par for x in mu)
                    tail = (2 * par,)
                    out.add(d + tail)
                    if self.n % 2 == 0 and d[-1] > 0:
                        out.add(d[:-1] + (-d[-1],) + tail)
        elif fam == "E6":
            for coeffs in itertools.product(range(bound + 1), repeat=5):
                if sum(coeffs) > bound:
                    continue
                mu = [0] * 5
                for c, w in zip(coeffs, _D5_FUNDAMENTAL):
                    for i, x in enumerate(w):
                        mu[i] += c * x
                mu = tuple(mu)
                out.add(mu + (2 * (sum(mu) % 4),))
        else:
            for coeffs in itertools.product(range(bound + 1), repeat=6):
                if sum(coeffs) > bound:
                    continue
                mu = [0] * 6
                for c, w in zip(coeffs, E6_FUNDAMENTAL):
                    for i, x in enumerate(w):
                        mu[i] += c * x
                out.add(tuple(mu) + (0,))
        reps = sorted(out)
        for d in reps:
            if not self.k_rep_valid(d):
                raise ShapeError("enumerated invalid weight %r" % (d,))
        return reps

    # -- restricted root data ------------------------------------------------------

    def restricted_rank(self):
        fam = self.family
        if fam == "A":
            return self.r
        if fam in ("C", "Cmp"):
            return self.n
        if fam == "D":
            return self.n // 2
        if fam in ("BD", "BDspin"):
            return 2
        return 2 if fam == "E6" else 3

    def restricted_mults(self):
        """(a, b): a = mult(e_i +- e_j), b = mult(e_i); mult(2 e_i) is 1."""
        fam = self.family
        if fam == "A":
            return (2, 2 * self.b)
        if fam in ("C", "Cmp"):
            return (1, 0)
        if fam == "D":
            return (4, 4 if self.n % 2 else 0)
        if fam in ("BD", "BDspin"):
            return (self.n - 2, 0)
        return (6, 8) if fam == "E6" else (8, 0)

    def restricted_type(self):
        return "BC" if self.restricted_mults()[1] > 0 else "C"

    def dim_p(self):
        """Complex dimension of p = p+ (+) p-."""
        fam = self.family
        if fam == "A":
            return 2 * self.r * (self.r + self.b)
        if fam in ("C", "Cmp"):
            return self.n * (self.n + 1)
        if fam == "D":
            return self.n * (self.n - 1)
        if fam in ("BD", "BDspin"):
            return 2 * self.n
        return 32 if fam == "E6" else 54

    def restricted_positive_roots(self):
        """[(root vector, multiplicity)] over the restricted rank, plain units."""
        r = self.restricted_rank()
        a, b = self.restricted_mults()
        roots = []
        for i in range(r):
            for j in range(i + 1, r):
                v = [0] * r
                v[i], v[j] = 1, -1
                roots.append((tuple(v), a))
                v = [0] * r
                v[i], v[j] = 1, 1
                roots.append((tuple(v), a))
        for i in range(r):
            if b:
                roots.append((_unit(r, i), b))
            roots.append((_unit(r, i, 2), 1))
        return roots

    def rho_a(self):
        """Half-sum of positive restricted roots with multiplicity.

        Coordinate k (1-indexed) is a (r - k) + b / 2 + 1 for mults (a, b);
        returned as exact Fractions in plain units.
        """
        r = self.restricted_rank()
        a, b = self.restricted_mults()
        return tuple(Fraction(a * (r - k)) + Fraction(b, 2) + 1
                     for k in range(1, r + 1))

"""Exact root-datum and weight arithmetic on doubled coordinates.

Every weight is a plain tuple of ints in which entry k stores twice the
usual orthogonal coordinate, so half-integer spin weights stay exact and
hashable.  A RootDatum is a list of simple factors laid out on contiguous
coordinate slices, optionally followed by central torus coordinates.

Factor kinds:

  gl(n)  type A_{n-1} plus its one-dimensional center, on n coordinates,
         positive roots e_i - e_j (i < j)
  B_k    so(2k+1) on k coordinates, roots e_i +- e_j, e_i
  C_k    sp(k) on k coordinates, roots e_i +- e_j, 2 e_i
         (C_1 doubles as an su(2) block on a single coordinate)
  D_k    so(2k) on k coordinates, roots e_i +- e_j
  E6     the rank-6 exceptional algebra on six coordinates (x1..x5, t).
         Roots are the 40 vectors x_j +- x_i (5 >= j > i >= 1, t = 0)
         together with the 32 spinor-like vectors (+-1/2, ..., +-1/2, t)
         where t = +-3/2 and the number of minus signs among the x part
         is even for t = 3/2.  The invariant form gives the t coordinate
         weight 1/3, which makes every root have squared length 2; with
         that convention the whole weight lattice has integer doubled
         coordinates even though the usual 8-coordinate realization of
         the fundamental weights involves thirds.

All inner products run through integer "ip units": ip(a, b) multiplies
coordinate products by per-coordinate integer scales (3 for ordinary
coordinates, 1 for the E6 t coordinate), so a squared-length-2 root has
ip(a, a) == 24 in doubled coordinates.  Every formula used here (Cartan
pairings, Freudenthal's recursion, the Weyl dimension formula) is a ratio
of such products, so the overall normalization drops out.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

Weight = tuple

DEFAULT_DIM_CAP = 200_000


class ShapeError(ValueError):
    """Weight length or lattice parity does not match the datum."""


class NotACharacterError(ValueError):
    """A weight multiset is not a nonnegative sum of irreducible characters."""


class EmbeddingError(ValueError):
    """A torus map or finite label produced a non-integral value."""


class ResourceCapError(RuntimeError):
    """A representation exceeded the configured dimension cap."""

    def __init__(self, dim, cap):
        super().__init__("representation dimension %s exceeds cap %s" % (dim, cap))
        self.dim = dim
        self.cap = cap


def _embed(vec, offset, dim):
    out = [0] * dim
    for i, v in enumerate(vec):
        out[offset + i] = v
    return tuple(out)


def _factor_positive_roots(kind, size):
    """Positive roots of one factor in doubled local coordinates."""
    roots = []
    if kind == "gl":
        for i in range(size):
            for j in range(i + 1, size):
                v = [0] * size
                v[i], v[j] = 2, -2
                roots.append(tuple(v))
    elif kind in ("B", "C", "D"):
        for i in range(size):
            for j in range(i + 1, size):
                v = [0] * size
                v[i], v[j] = 2, -2
                roots.append(tuple(v))
                v = [0] * size
                v[i], v[j] = 2, 2
                roots.append(tuple(v))
        if kind == "B":
            for i in range(size):
                v = [0] * size
                v[i] = 2
                roots.append(tuple(v))
        elif kind == "C":
            for i in range(size):
                v = [0] * size
                v[i] = 4
                roots.append(tuple(v))
    elif kind == "E6":
        # x_j - x_i and x_j + x_i for j > i over the first five coordinates
        for j in range(1, 5):
            for i in range(j):
                v = [0] * 6
                v[j], v[i] = 2, -2
                roots.append(tuple(v))
                v = [0] * 6
                v[j], v[i] = 2, 2
                roots.append(tuple(v))
        # spinor-like roots with t = 3/2 and an even number of minus signs
        for signs in itertools.product((1, -1), repeat=5):
            if signs.count(-1) % 2 == 0:
                roots.append(tuple(signs) + (3,))
    else:
        raise ShapeError("unknown factor kind %r" % (kind,))
    return tuple(roots)


def _factor_simple_roots(kind, size):
    simples = []
    if kind == "gl":
        for i in range(size - 1):
            v = [0] * size
            v[i], v[i + 1] = 2, -2
            simples.append(tuple(v))
    elif kind in ("B", "C", "D"):
        for i in range(size - 1):
            v = [0] * size
            v[i], v[i + 1] = 2, -2
            simples.append(tuple(v))
        if kind == "B":
            v = [0] * size
            v[size - 1] = 2
            simples.append(tuple(v))
        elif kind == "C":
            v = [0] * size
            v[size - 1] = 4
            simples.append(tuple(v))
        elif kind == "D" and size >= 2:
            v = [0] * size
            v[size - 2], v[size - 1] = 2, 2
            simples.append(tuple(v))
    elif kind == "E6":
        simples = [
            (1, -1, -1, -1, -1, 3),
            (2, 2, 0, 0, 0, 0),
            (-2, 2, 0, 0, 0, 0),
            (0, -2, 2, 0, 0, 0),
            (0, 0, -2, 2, 0, 0),
            (0, 0, 0, -2, 2, 0),
        ]
    return tuple(simples)


# Fundamental weights of the E6 datum, doubled, in (x1..x5, t) coordinates.
E6_FUNDAMENTAL = (
    (0, 0, 0, 0, 0, 4),
    (1, 1, 1, 1, 1, 3),
    (-1, 1, 1, 1, 1, 5),
    (0, 0, 2, 2, 2, 6),
    (0, 0, 0, 2, 2, 4),
    (0, 0, 0, 0, 2, 2),
)


class RootDatum:
    """A product of simple factors plus central torus coordinates."""

    __slots__ = (
        "factors", "torus", "dim", "layout", "scales",
        "positive", "simple", "rho", "_cartan_inv", "_hash",
    )

    def __init__(self, factors=(), torus=0):
        factors = tuple((str(k), int(s)) for (k, s) in factors)
        for kind, size in factors:
            if kind not in ("gl", "B", "C", "D", "E6"):
                raise ShapeError("unknown factor kind %r" % (kind,))
            if kind == "E6" and size != 6:
                raise ShapeError("the E6 factor occupies exactly 6 coordinates")
            if size < 1:
                raise ShapeError("factor size must be positive")
        self.factors = factors
        self.torus = int(torus)
        layout = []
        off = 0
        for kind, size in factors:
            layout.append((kind, size, off))
            off += size
        self.layout = tuple(layout)
        self.dim = off + self.torus
        scales = [3] * self.dim
        for kind, size, off in self.layout:
            if kind == "E6":
                scales[off + 5] = 1
        self.scales = tuple(scales)
        pos = []
        simp = []
        for kind, size, off in self.layout:
            for r in _factor_positive_roots(kind, size):
                pos.append(_embed(r, off, self.dim))
            for r in _factor_simple_roots(kind, size):
                simp.append(_embed(r, off, self.dim))
        self.positive = tuple(pos)
        self.simple = tuple(simp)
        rho = [0] * self.dim
        for r in pos:
            for i, v in enumerate(r):
                rho[i] += v
        if any(v % 2 for v in rho):
            raise ShapeError("half-sum of positive roots is not integral")
        self.rho = tuple(v // 2 for v in rho)
        self._cartan_inv = None
        self._hash = hash((self.factors, self.torus))

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, RootDatum)
                and self.factors == other.factors and self.torus == other.torus)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "RootDatum(%r, torus=%d)" % (self.factors, self.torus)

    # -- constructors -----------------------------------------------------

    @staticmethod
    def gl(n):
        return RootDatum((("gl", n),))

    @staticmethod
    def so(n):
        if n % 2:
            return RootDatum((("B", n // 2),))
        return RootDatum((("D", n // 2),))

    @staticmethod
    def sp(n):
        return RootDatum((("C", n),))

    @staticmethod
    def e6():
        return RootDatum((("E6", 6),))

    # -- basic linear algebra ----------------------------------------------

    def ip(self, a, b):
        """Scaled inner product of two doubled vectors (integer units)."""
        s = 0
        for sc, x, y in zip(self.scales, a, b):
            s += sc * x * y
        return s

    def pairing(self, d, root):
        """Cartan integer <d, root^vee> for a doubled weight d."""
        num = 2 * self.ip(d, root)
        den = self.ip(root, root)
        q, r = divmod(num, den)
        if r:
            raise ShapeError("weight %r is not integral against root %r" % (d, root))
        return q

    def reflect(self, d, root):
        c = self.pairing(d, root)
        if c == 0:
            return d
        return tuple(x - c * r for x, r in zip(d, root))

    def validate_weight(self, d):
        if len(d) != self.dim:
            raise ShapeError("weight length %d, datum dimension %d" % (len(d), self.dim))
        if not all(isinstance(x, int) for x in d):
            raise ShapeError("doubled coordinates must be ints: %r" % (d,))
        for kind, size, off in self.layout:
            sl = d[off:off + size]
            if kind in ("gl", "B", "D"):
                if len({x % 2 for x in sl}) > 1:
                    raise ShapeError("mixed parity in %s factor: %r" % (kind, sl))
            elif kind == "C":
                if any(x % 2 for x in sl):
                    raise ShapeError("sp weights must be integral: %r" % (sl,))
            elif kind == "E6":
                for root in _factor_simple_roots("E6", 6):
                    self.pairing(d, _embed(root, off, self.dim))
        return True

    def is_dominant(self, d):
        return all(self.pairing(d, a) >= 0 for a in self.simple)

    def dominant_rep(self, d):
        """The dominant Weyl-chamber representative of d."""
        cur = d
        moved = True
        while moved:
            moved = False
            for a in self.simple:
                c = self.pairing(cur, a)
                if c < 0:
                    cur = tuple(x - c * r for x, r in zip(cur, a))
                    moved = True
        return cur

    def weyl_orbit(self, d):
        """The full Weyl orbit of a doubled weight, as a sorted list."""
        seen = {d}
        frontier = [d]
        while frontier:
            nxt = []
            for w in frontier:
                for a in self.simple:
                    v = self.reflect(w, a)
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
            frontier = nxt
        return sorted(seen)

    # -- root cone ----------------------------------------------------------

    def _cartan_inverse(self):
        if self._cartan_inv is not None:
            return self._cartan_inv
        n = len(self.simple)
        a = [[Fraction(self.pairing(self.simple[j], self.simple[i]))
              for j in range(n)] for i in range(n)]
        inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if a[r][col] != 0)
            a[col], a[piv] = a[piv], a[col]
            inv[col], inv[piv] = inv[piv], inv[col]
            pv = a[col][col]
            a[col] = [x / pv for x in a[col]]
            inv[col] = [x / pv for x in inv[col]]
            for r in range(n):
                if r != col and a[r][col] != 0:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                    inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
        self._cartan_inv = inv
        return inv

    def root_cone_coeffs(self, diff):
        """Coefficients of diff over the simple roots, or None.

        Returns the tuple of nonnegative rational c_i with
        diff = sum c_i alpha_i when it exists (torus components of diff
        must vanish), else None.
        """
        n = len(self.simple)
        pair = [Fraction(self.pairing(diff, a)) for a in self.simple]
        inv = self._cartan_inverse()
        coeffs = [sum(inv[i][j] * pair[j] for j in range(n)) for i in range(n)]
        if any(c < 0 for c in coeffs):
            return None
        recon = [Fraction(0)] * self.dim
        for c, a in zip(coeffs, self.simple):
            for i, v in enumerate(a):
                recon[i] += c * v
        if any(recon[i] != diff[i] for i in range(self.dim)):
            return None
        return tuple(coeffs)

    # -- dimensions and multiplicities --------------------------------------

    def weyl_dim(self, lam):
        """Dimension of the irreducible with highest weight lam (doubled)."""
        self.validate_weight(lam)
        if not self.is_dominant(lam):
            raise ShapeError("weight %r is not dominant" % (lam,))
        lr = tuple(x + r for x, r in zip(lam, self.rho))
        out = Fraction(1)
        for a in self.positive:
            out *= Fraction(self.ip(lr, a), self.ip(self.rho, a))
        if out.denominator != 1:
            raise ShapeError("Weyl dimension was not an integer")
        return int(out)


_CHARACTER_CACHE = {}


def _single_factor_multiplicities(datum, lam):
    """Freudenthal recursion for a datum with one factor and no torus."""
    # All weights of the irreducible, found by walking simple-root strings
    # down from the highest weight inside the saturated weight set.
    weights = {lam}
    frontier = [lam]
    memo_dom = {}

    def domrep(w):
        r = memo_dom.get(w)
        if r is None:
            r = datum.dominant_rep(w)
            memo_dom[w] = r
        return r

    member = {}

    def is_weight(w):
        dr = domrep(w)
        hit = member.get(dr)
        if hit is None:
            diff = tuple(a - b for a, b in zip(lam, dr))
            hit = datum.root_cone_coeffs(diff) is not None
            member[dr] = hit
        return hit

    while frontier:
        nxt = []
        for w in frontier:
            for a in datum.simple:
                v = tuple(x - y for x, y in zip(w, a))
                if v not in weights and is_weight(v):
                    weights.add(v)
                    nxt.append(v)
        frontier = nxt

    dominants = [w for w in weights if datum.is_dominant(w)]
    dominants.sort(key=lambda w: (-datum.ip(w, datum.rho), w))
    lam_rho = tuple(x + r for x, r in zip(lam, datum.rho))
    norm_top = datum.ip(lam_rho, lam_rho)
    mult = {lam: 1}
    for mu in dominants:
        if mu == lam:
            continue
        mu_rho = tuple(x + r for x, r in zip(mu, datum.rho))
        den = norm_top - datum.ip(mu_rho, mu_rho)
        num = 0
        for a in datum.positive:
            k = 1
            while True:
                u = tuple(x + k * v for x, v in zip(mu, a))
                if u not in weights:
                    break
                m = mult.get(domrep(u), 0)
                if m:
                    num += m * datum.ip(u, a)
                k += 1
        num *= 2
        q, r = divmod(num, den)
        if r:
            raise ShapeError("Freudenthal division was not exact at %r" % (mu,))
        mult[mu] = q

    full = {}
    for mu, m in mult.items():
        for w in datum.weyl_orbit(mu):
            full[w] = m
    return full


_SUBDATUM_CACHE = {}


def _subdatum(kind, size):
    key = (kind, size)
    d = _SUBDATUM_CACHE.get(key)
    if d is None:
        d = RootDatum(((kind, size),))
        _SUBDATUM_CACHE[key] = d
    return d


def weight_multiplicities(datum, lam, cap=DEFAULT_DIM_CAP):
    """Full weight multiset of the irreducible with highest weight lam.

    Returns a dict mapping doubled weights to positive multiplicities whose
    total equals the Weyl dimension.  Raises ResourceCapError if that
    dimension exceeds cap.
    """
    datum.validate_weight(lam)
    if not datum.is_dominant(lam):
        raise ShapeError("weight %r is not dominant" % (lam,))
    dim = datum.weyl_dim(lam)
    if cap is not None and dim > cap:
        raise ResourceCapError(dim, cap)
    key = (datum, lam)
    hit = _CHARACTER_CACHE.get(key)
    if hit is not None:
        return dict(hit)

    pieces = []
    for kind, size, off in datum.layout:
        sub = _subdatum(kind, size)
        sl = lam[off:off + size]
        ckey = (sub, sl)
        part = _CHARACTER_CACHE.get(ckey)
        if part is None:
            part = _single_factor_multiplicities(sub, sl)
            _CHARACTER_CACHE[ckey] = part
        pieces.append(part)
    tail = lam[datum.dim - datum.torus:] if datum.torus else ()

    full = {(): 1}
    for part in pieces:
        nxt = {}
        for head, m in full.items():
            for w, mw in part.items():
                nxt[head + w] = m * mw
        full = nxt
    if tail:
        full = {w + tail: m for w, m in full.items()}

    total = sum(full.values())
    if total != dim:
        raise ShapeError(
            "character total %d disagrees with Weyl dimension %d" % (total, dim))
    _CHARACTER_CACHE[key] = full
    return dict(full)


def weight_str(d):
    """Render a doubled weight as comma-separated halves, e.g. '1,1/2,-3/2'."""
    parts = []
    for x in d:
        if x % 2 == 0:
            parts.append(str(x // 2))
        else:
            parts.append("%d/2" % x)
    return ",".join(parts)


def parse_weight(text, halved=False):
    """Parse '2,1,0' or '1/2,-1/2' into a doubled weight tuple."""
    entries = []
    for tok in str(text).split(","):
        tok = tok.strip()
        if not tok:
            raise ShapeError("empty weight entry in %r" % (text,))
        if "/" in tok:
            num, den = tok.split("/")
            num, den = int(num), int(den)
            if den == 2:
                entries.append(num)
            elif den == 1:
                entries.append(2 * num)
            else:
                raise ShapeError("weight entries must be half-integers: %r" % (tok,))
        else:
            v = int(tok)
            entries.append(v if halved else 2 * v)
    return tuple(entries)

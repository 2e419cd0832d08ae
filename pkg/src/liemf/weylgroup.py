"""The hyperoctahedral group acting on restricted weights.

Restricted root systems of the pairs handled here are all of type C or
BC, so the little Weyl group is the full signed-permutation group of the
restricted rank r.  Entries of the vectors being acted on may be ints,
Fractions, or symbolic strings; negation of a string toggles a leading
minus sign, so orbits of symbolic continuous parameters stay readable.
"""

from __future__ import annotations

import itertools

from .weights import ShapeError


def _negate(x):
    if isinstance(x, str):
        if not x:
            raise ShapeError("empty symbolic entry")
        return x[1:] if x.startswith("-") else "-" + x
    return -x


class SignedPermutation:
    """w(e_j) = signs[perm[j]] * e_{perm[j]} on r coordinates."""

    __slots__ = ("perm", "signs", "inv")

    def __init__(self, perm, signs):
        perm = tuple(perm)
        signs = tuple(signs)
        r = len(perm)
        if sorted(perm) != list(range(r)) or len(signs) != r:
            raise ShapeError("bad signed permutation (%r, %r)" % (perm, signs))
        if any(s not in (1, -1) for s in signs):
            raise ShapeError("signs must be +-1: %r" % (signs,))
        self.perm = perm
        self.signs = signs
        inv = [0] * r
        for j, i in enumerate(perm):
            inv[i] = j
        self.inv = tuple(inv)

    @property
    def rank(self):
        return len(self.perm)

    def act(self, nu):
        """Apply to a vector: out[i] = signs[i] * nu[inv[i]]."""
        if len(nu) != self.rank:
            raise ShapeError("vector length %d, rank %d" % (len(nu), self.rank))
        out = []
        for i in range(self.rank):
            v = nu[self.inv[i]]
            out.append(v if self.signs[i] == 1 else _negate(v))
        return tuple(out)

    def act_permute_only(self, eps):
        """Apply only the permutation part: out[i] = eps[inv[i]].

        Used for finite labels attached to the coordinates, which signed
        reflections permute without negating.
        """
        if len(eps) != self.rank:
            raise ShapeError("vector length %d, rank %d" % (len(eps), self.rank))
        return tuple(eps[self.inv[i]] for i in range(self.rank))

    def compose(self, other):
        """self after other: (self.compose(other)).act(v) == self.act(other.act(v))."""
        if self.rank != other.rank:
            raise ShapeError("rank mismatch")
        perm = tuple(self.perm[other.perm[j]] for j in range(self.rank))
        signs = tuple(self.signs[i] * other.signs[self.inv[i]]
                      for i in range(self.rank))
        return SignedPermutation(perm, signs)

    def __eq__(self, other):
        return (isinstance(other, SignedPermutation)
                and self.perm == other.perm and self.signs == other.signs)

    def __hash__(self):
        return hash((self.perm, self.signs))

    def __repr__(self):
        return "SignedPermutation(%r, %r)" % (self.perm, self.signs)

    @staticmethod
    def identity(r):
        return SignedPermutation(tuple(range(r)), (1,) * r)


def generators(r):
    """Coxeter-style generators: adjacent swaps plus the last sign flip."""
    gens = []
    for i in range(r - 1):
        perm = list(range(r))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        gens.append(SignedPermutation(perm, (1,) * r))
    if r >= 1:
        signs = [1] * r
        signs[r - 1] = -1
        gens.append(SignedPermutation(tuple(range(r)), signs))
    return gens


def generate_weyl(r):
    """All 2^r * r! signed permutations of rank r."""
    out = []
    for perm in itertools.permutations(range(r)):
        for signs in itertools.product((1, -1), repeat=r):
            out.append(SignedPermutation(perm, signs))
    return out


def orbit(nu, r=None, permute_only=False):
    """The signed-permutation orbit of a vector, sorted deterministically.

    With permute_only the signs are ignored (the action on coordinate
    labels).  Entries may be numbers or symbolic strings.
    """
    nu = tuple(nu)
    if r is None:
        r = len(nu)
    if len(nu) != r:
        raise ShapeError("vector length %d, rank %d" % (len(nu), r))
    gens = generators(r)
    seen = {nu}
    frontier = [nu]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = g.act_permute_only(v) if permute_only else g.act(v)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return sorted(seen, key=lambda t: tuple(map(str, t)))

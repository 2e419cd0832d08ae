"""Formal characters: restriction along torus maps and exact decomposition.

A FormalCharacter is a finite multiset of doubled weights for some
RootDatum.  Restriction pushes the weights through an integer-matrix
torus map (plus optional finite component-group labels), and
decomposition greedily peels highest weights off a multiset, certifying
along the way that the multiset really is a nonnegative integral
combination of irreducible characters.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .weights import (
    DEFAULT_DIM_CAP,
    EmbeddingError,
    NotACharacterError,
    RootDatum,
    ShapeError,
    weight_multiplicities,
)


@dataclass
class FormalCharacter:
    """A weight multiset: terms maps doubled weights to multiplicities."""

    datum: RootDatum
    terms: dict = field(default_factory=dict)

    @property
    def dim(self):
        return sum(self.terms.values())

    def __eq__(self, other):
        return (isinstance(other, FormalCharacter)
                and self.datum == other.datum and self.terms == other.terms)


def irreducible_character(datum, lam, cap=DEFAULT_DIM_CAP):
    """The formal character of the irreducible with highest weight lam."""
    return FormalCharacter(datum, weight_multiplicities(datum, lam, cap=cap))


def tensor_character(a, b):
    """Pointwise product of two characters over the same datum."""
    if a.datum != b.datum:
        raise ShapeError("tensor factors live on different data")
    out = {}
    for w1, m1 in a.terms.items():
        for w2, m2 in b.terms.items():
            w = tuple(x + y for x, y in zip(w1, w2))
            out[w] = out.get(w, 0) + m1 * m2
    return FormalCharacter(a.datum, out)


def add_character(a, b):
    if a.datum != b.datum:
        raise ShapeError("summands live on different data")
    out = dict(a.terms)
    for w, m in b.terms.items():
        out[w] = out.get(w, 0) + m
    return FormalCharacter(a.datum, out)


def twist_character(a, shift):
    """Translate every weight by a fixed doubled vector (a character twist)."""
    if len(shift) != a.datum.dim:
        raise ShapeError("twist length %d, datum dimension %d"
                         % (len(shift), a.datum.dim))
    return FormalCharacter(
        a.datum, {tuple(x + s for x, s in zip(w, shift)): m
                  for w, m in a.terms.items()})


class TorusMap:
    """Integer-matrix map between doubled coordinate spaces.

    rows is a sequence of integer vectors of length dim_in; the image of a
    doubled weight d has k-th coordinate (rows[k] . d) / denom, and every
    such value must come out an integer or the weight does not land in the
    target lattice (EmbeddingError).
    """

    __slots__ = ("rows", "denom", "dim_in", "dim_out")

    def __init__(self, rows, denom=1, dim_in=None):
        self.rows = tuple(tuple(int(x) for x in r) for r in rows)
        self.denom = int(denom)
        if self.denom <= 0:
            raise ShapeError("torus map denominator must be positive")
        if self.rows:
            widths = {len(r) for r in self.rows}
            if len(widths) != 1:
                raise ShapeError("torus map rows have mixed lengths")
            self.dim_in = widths.pop()
            if dim_in is not None and dim_in != self.dim_in:
                raise ShapeError("torus map width disagrees with dim_in")
        else:
            if dim_in is None:
                raise ShapeError("empty torus map needs an explicit dim_in")
            self.dim_in = int(dim_in)
        self.dim_out = len(self.rows)

    def apply(self, d):
        if len(d) != self.dim_in:
            raise ShapeError("weight length %d, map width %d" % (len(d), self.dim_in))
        out = []
        for row in self.rows:
            s = sum(r * x for r, x in zip(row, d))
            q, rem = divmod(s, self.denom)
            if rem:
                raise EmbeddingError(
                    "weight %r maps outside the target lattice" % (d,))
            out.append(q)
        return tuple(out)


class LabelFn:
    """Finite component-group label of a doubled weight.

    value(d) = ((coeffs . d) / divisor) mod modulus, with the division
    required to be exact.  divisor 2 converts doubled coordinates back to
    plain ones before reducing.
    """

    __slots__ = ("coeffs", "modulus", "divisor")

    def __init__(self, coeffs, modulus, divisor=1):
        self.coeffs = tuple(int(x) for x in coeffs)
        self.modulus = int(modulus)
        self.divisor = int(divisor)
        if self.modulus <= 1:
            raise ShapeError("label modulus must be at least 2")
        if self.divisor not in (1, 2):
            raise ShapeError("label divisor must be 1 or 2")

    def value(self, d):
        s = sum(c * x for c, x in zip(self.coeffs, d))
        q, rem = divmod(s, self.divisor)
        if rem:
            raise EmbeddingError("label value of %r is not integral" % (d,))
        return q % self.modulus


def restrict_character(char, tmap, labels=()):
    """Push a character through a torus map, split by finite labels.

    Returns a dict mapping label tuples (possibly the empty tuple) to
    weight multisets over the target coordinates.
    """
    sectors = {}
    for w, m in char.terms.items():
        sec = tuple(lbl.value(w) for lbl in labels)
        img = tmap.apply(w)
        bucket = sectors.setdefault(sec, {})
        bucket[img] = bucket.get(img, 0) + m
    return sectors


def decompose_character(datum, terms, cap=DEFAULT_DIM_CAP):
    """Write a weight multiset as a sum of irreducibles.

    Greedy peeling: repeatedly take the maximal remaining weight under
    (rho-pairing, lexicographic) order; it must be dominant and appear with
    positive multiplicity, and subtracting that many copies of its
    irreducible character must never drive any multiplicity negative.
    Returns a dict mapping dominant doubled weights to multiplicities.
    """
    work = {}
    for w, m in terms.items():
        if m < 0:
            raise NotACharacterError("negative input multiplicity at %r" % (w,))
        if m:
            work[tuple(w)] = m
    out = {}
    rho = datum.rho

    def rank(d):
        return (datum.ip(d, rho), d)

    while work:
        top = max(work, key=rank)
        if not datum.is_dominant(top):
            raise NotACharacterError(
                "maximal weight %r is not dominant" % (top,))
        mult = work[top]
        out[top] = out.get(top, 0) + mult
        for u, mu in weight_multiplicities(datum, top, cap=cap).items():
            have = work.get(u, 0) - mult * mu
            if have < 0:
                raise NotACharacterError(
                    "multiset is short %d copies of weight %r" % (-have, u))
            if have:
                work[u] = have
            else:
                work.pop(u, None)
    return out

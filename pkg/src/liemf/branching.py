"""Classical branching rules used as independent cross-checks.

The interlacing-style rules work on doubled coordinates (see weights.py),
so half-integer weights branch exactly: an interlacing range steps by 2 in
doubled units, which preserves the uniform-parity invariant of gl/so
weights.  The Littlewood-Richardson routine works on plain nonnegative
integer partitions; callers shift and halve as needed.
"""

from __future__ import annotations

import itertools

from .weights import ShapeError


def _check_nonincreasing(mu):
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise ShapeError("weight %r is not non-increasing" % (mu,))


def _check_uniform_parity(mu):
    if len({x % 2 for x in mu}) > 1:
        raise ShapeError("weight %r mixes parities" % (mu,))


def gl_interlace_step(mu):
    """gl(n) -> gl(n-1) + charge, for doubled dominant mu.

    Yields (nu, z) pairs where nu runs over the doubled weights
    interlacing mu (mu_i >= nu_i >= mu_{i+1}, same parity as mu) and
    z = sum(mu) - sum(nu) is the doubled charge of the split-off gl(1).
    Each pair occurs exactly once.
    """
    n = len(mu)
    if n == 0:
        raise ShapeError("cannot split a gl(1) factor off gl(0)")
    _check_nonincreasing(mu)
    _check_uniform_parity(mu)
    total = sum(mu)
    ranges = [range(mu[i + 1], mu[i] + 1, 2) for i in range(n - 1)]
    for nu in itertools.product(*ranges):
        yield nu, total - sum(nu)


def gl_branch_levi(mu, r, b):
    """gl(r+b) -> gl(1)^r x gl(b) branching multiplicities.

    The gl(1) charges are split off one coordinate at a time, in
    coordinate order, leaving the gl(b) block on the trailing b
    coordinates.  Returns a dict mapping ((z_1..z_r), w) to the number of
    interlacing chains that produce it; z_i and w are doubled.
    """
    if len(mu) != r + b:
        raise ShapeError("weight length %d, expected %d" % (len(mu), r + b))
    states = {((), tuple(mu)): 1}
    for _ in range(r):
        nxt = {}
        for (zs, cur), m in states.items():
            for nu, z in gl_interlace_step(cur):
                key = (zs + (z,), nu)
                nxt[key] = nxt.get(key, 0) + m
        states = nxt
    return states


def so_branch_step_btod(mu):
    """so(2k+1) -> so(2k) branching: doubled mu to the list of xi.

    Interlacing mu_1 >= xi_1 >= mu_2 >= ... >= mu_k >= |xi_k| with xi of
    the same parity as mu; multiplicity free.
    """
    k = len(mu)
    if k == 0:
        raise ShapeError("so(1) has no so(0) step")
    _check_nonincreasing(mu)
    _check_uniform_parity(mu)
    if mu[-1] < 0:
        raise ShapeError("so(odd) weights are nonnegative: %r" % (mu,))
    ranges = [range(mu[i + 1], mu[i] + 1, 2) for i in range(k - 1)]
    ranges.append(range(-mu[k - 1], mu[k - 1] + 1, 2))
    return [xi for xi in itertools.product(*ranges)]


def so_branch_step_dtob(xi):
    """so(2k) -> so(2k-1) branching: doubled xi to the list of eta.

    Interlacing xi_1 >= eta_1 >= xi_2 >= ... >= eta_{k-1} >= |xi_k|;
    multiplicity free.  For k = 1 the target is so(1) and the single
    constituent is the empty weight.
    """
    k = len(xi)
    if k == 0:
        raise ShapeError("so(0) has no so(-1) step")
    _check_nonincreasing(xi[:-1] + (abs(xi[-1]),))
    _check_uniform_parity(xi)
    if k == 1:
        return [()]
    lo_last = abs(xi[k - 1])
    ranges = [range(xi[i + 1], xi[i] + 1, 2) for i in range(k - 2)]
    ranges.append(range(lo_last, xi[k - 2] + 1, 2))
    return [eta for eta in itertools.product(*ranges)]


def so_two_step(mu, ambient_odd):
    """so(m) -> so(m-2) composite multiplicities, charge forgotten.

    ambient_odd selects whether mu lives on so(2k+1) (True) or so(2k).
    Returns a dict mapping doubled target weights to multiplicities.
    """
    first = so_branch_step_btod(mu) if ambient_odd else so_branch_step_dtob(mu)
    out = {}
    for xi in first:
        second = so_branch_step_dtob(xi) if ambient_odd else so_branch_step_btod(xi)
        for eta in second:
            out[eta] = out.get(eta, 0) + 1
    return out


def _lr_fillings(mu, alpha, q):
    """Count LR fillings of the skew shape mu/alpha with entries 1..q.

    Cells are visited in reverse reading order (each row right to left,
    rows top to bottom).  Rows weakly increase, columns strictly
    increase, and every prefix of the reverse reading word contains at
    least as many t as t+1.  Yields the content vector of each filling.
    """
    rows = len(mu)
    cells = []
    for i in range(rows):
        for j in range(mu[i] - 1, alpha[i] - 1, -1):
            cells.append((i, j))
    entry = {}
    counts = [0] * (q + 1)

    def place(idx):
        if idx == len(cells):
            yield tuple(counts[1:])
            return
        i, j = cells[idx]
        above = entry.get((i - 1, j), 0)
        right = entry.get((i, j + 1), q)
        for t in range(above + 1, right + 1):
            if t > 1 and counts[t] + 1 > counts[t - 1]:
                continue
            entry[(i, j)] = t
            counts[t] += 1
            yield from place(idx + 1)
            counts[t] -= 1
            del entry[(i, j)]

    yield from place(0)


def lr_restrict(mu, p, q):
    """gl(p+q) -> gl(p) x gl(q) branching of a plain partition mu.

    mu is a nonnegative non-increasing integer tuple with at most p + q
    parts.  Returns a dict mapping (alpha, beta) to the
    Littlewood-Richardson coefficient, with alpha padded to length p and
    beta to length q.
    """
    mu = tuple(mu)
    if any(x < 0 for x in mu):
        raise ShapeError("lr_restrict needs a nonnegative partition: %r" % (mu,))
    _check_nonincreasing(mu)
    if len(mu) > p + q:
        raise ShapeError("partition %r has more than %d parts" % (mu, p + q))
    mu = mu + (0,) * (p + q - len(mu))
    out = {}
    alpha_ranges = [range(0, mu[i] + 1) if i < p else range(0, 1)
                    for i in range(len(mu))]
    for alpha in itertools.product(*alpha_ranges):
        if any(alpha[i] < alpha[i + 1] for i in range(len(alpha) - 1)):
            continue
        for content in _lr_fillings(mu, alpha, q):
            beta = content + (0,) * (q - len(content))
            key = (alpha[:p], beta)
            out[key] = out.get(key, 0) + 1
    return out


def compositions(total, parts):
    """All ordered tuples of nonnegative ints of given length summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def su2_blocks_symmetric(m, r):
    """S^m(C^{2r}) under r commuting su(2) blocks.

    Returns a dict mapping (m_1..m_r) to 1, one entry per composition of
    m: the symmetric power splits multiplicity-freely into outer products
    of the su(2) strings S^{m_j}(C^2).  Parts are plain nonnegative ints.
    """
    return {c: 1 for c in compositions(m, r)}


def one_gap_weights(length, amax):
    """Weights (a^j, 0^(length-j)) with 1 <= a <= amax, 1 <= j <= length.

    Plain integer entries; used to sweep the two-valued highest weights
    that appear in rank-two closed forms.
    """
    out = []
    for a in range(1, amax + 1):
        for j in range(1, length + 1):
            out.append((a,) * j + (0,) * (length - j))
    return out

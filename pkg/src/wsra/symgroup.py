"""Exact combinatorics and representations of the symmetric group.

Partitions are weakly decreasing tuples of positive integers.  Irreducible
representations are realized in Young's seminormal form, whose matrices are
exact rationals, so scalarity and central-element checks below are exact.

Standard tableaux are enumerated in last-letter order: tableaux are grouped
by the corner holding the largest letter, corners taken bottom row first,
and each group is ordered recursively the same way.  For shape (2,1) this
puts [[1,2],[3]] before [[1,3],[2]], so the first adjacent transposition
acts as diag(1, -1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

import numpy as np

from .linalg import RAT, exact_scalar, rat_eye, rat_zeros

Partition = tuple  # weakly decreasing tuple of positive ints


def check_partition(mu) -> tuple:
    mu = tuple(int(p) for p in mu)
    if any(p <= 0 for p in mu):
        raise ValueError(f"partition parts must be positive: {mu}")
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {mu}")
    return mu


def parse_partition(text: str) -> tuple:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    try:
        mu = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"cannot parse partition from {text!r}")
    return check_partition(mu)


def partitions_of(n: int) -> list[tuple]:
    """All partitions of n in decreasing lexicographic order."""
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(maxpart, remaining), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


def corners(mu) -> list[tuple[int, int]]:
    """Removable cells as 1-based (row, col), top row first."""
    mu = check_partition(mu)
    if not mu:
        raise ValueError("empty partition has no corners")
    out = []
    for i, p in enumerate(mu):
        if i == len(mu) - 1 or mu[i + 1] < p:
            out.append((i + 1, p))
    return out


def contents(mu) -> tuple[int, list[int]]:
    """(sum of col-row over all cells, content of each corner)."""
    mu = check_partition(mu)
    total = sum(j - i for i, p in enumerate(mu) for j in range(p))
    corner_contents = [c - r for r, c in corners(mu)]
    return total, corner_contents


def conjugate(mu) -> tuple:
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p > j) for j in range(mu[0]))


def hook_dim(mu) -> int:
    """Dimension of the irreducible labelled by mu (hook length formula)."""
    mu = check_partition(mu)
    n = sum(mu)
    conj = conjugate(mu)
    prod = 1
    for i, p in enumerate(mu):
        for j in range(p):
            prod *= (p - j) + (conj[j] - i) - 1
    dim, rem = divmod(factorial(n), prod)
    assert rem == 0
    return dim


def rectangle_dims(mu):
    """(height, width) when mu is a rectangle, else None."""
    mu = check_partition(mu)
    if mu and all(p == mu[0] for p in mu):
        return len(mu), mu[0]
    return None


def branch_restrict(mu) -> list[tuple]:
    """Partitions obtained by removing one corner, in corner order."""
    mu = check_partition(mu)
    out = []
    for r, _ in corners(mu):
        nu = list(mu)
        nu[r - 1] -= 1
        out.append(tuple(p for p in nu if p > 0))
    return out


# ---------------------------------------------------------------------------
# standard tableaux and the seminormal form


@lru_cache(maxsize=None)
def standard_tableaux(mu) -> tuple:
    """All standard tableaux of shape mu in last-letter order.

    A tableau is a tuple of row tuples holding the letters 1..n.
    """
    n = sum(mu)
    if n == 0:
        return ((),)
    out = []
    for r, _ in sorted(corners(mu), key=lambda rc: -rc[0]):
        nu = list(mu)
        nu[r - 1] -= 1
        smaller = tuple(p for p in nu if p > 0)
        for t in standard_tableaux(smaller):
            rows = [list(row) for row in t]
            while len(rows) < r:
                rows.append([])
            rows[r - 1].append(n)
            out.append(tuple(tuple(row) for row in rows))
    return tuple(out)


def _locate(tab, letter):
    for i, row in enumerate(tab):
        for j, x in enumerate(row):
            if x == letter:
                return i, j
    raise ValueError(f"letter {letter} not in tableau")


def _swap_letters(tab, a, b):
    return tuple(
        tuple(b if x == a else a if x == b else x for x in row) for row in tab
    )


@dataclass
class SeminormalRep:
    """Young's seminormal model: exact rational generator matrices.

    gens[k-1] is the image of the adjacent transposition swapping letters
    k, k+1; the basis is standard_tableaux(partition).
    """

    partition: tuple
    dim: int
    gens: list
    _transpositions: dict = field(default_factory=dict, repr=False)


@lru_cache(maxsize=None)
def seminormal_rep(mu) -> SeminormalRep:
    mu = check_partition(mu)
    n = sum(mu)
    tabs = standard_tableaux(mu)
    index = {t: i for i, t in enumerate(tabs)}
    dim = len(tabs)
    gens = []
    for k in range(1, n):
        m = rat_zeros(dim, dim)
        for t, it in index.items():
            r1, c1 = _locate(t, k)
            r2, c2 = _locate(t, k + 1)
            d = (c2 - r2) - (c1 - r1)  # axial distance, never 0
            m[it, it] = RAT(1, d)
            if abs(d) > 1:
                other = index[_swap_letters(t, k, k + 1)]
                m[other, it] = RAT(1) if d > 0 else RAT(1) - RAT(1, d * d)
        gens.append(m)
    return SeminormalRep(partition=mu, dim=dim, gens=gens)


def perm_word(perm) -> list[int]:
    """Adjacent-transposition word: perm = s_{w[0]} s_{w[1]} ... applied
    right to left, letters 1-based."""
    p = list(perm)
    swaps = []
    while True:
        i = next((i for i in range(len(p) - 1) if p[i] > p[i + 1]), None)
        if i is None:
            break
        p[i], p[i + 1] = p[i + 1], p[i]
        swaps.append(i + 1)
    swaps.reverse()
    return swaps


def perm_matrix(rep: SeminormalRep, perm) -> np.ndarray:
    """Exact image of a permutation (tuple of 0-based images)."""
    m = rat_eye(rep.dim)
    for k in perm_word(perm):
        m = np.dot(m, rep.gens[k - 1])
    return m


def transposition_matrix(rep: SeminormalRep, i: int, j: int) -> np.ndarray:
    """Exact image of the transposition (i j), 1-based letters, i < j."""
    if not 1 <= i < j <= sum(rep.partition):
        raise ValueError(f"bad transposition ({i} {j})")
    if j == i + 1:
        return rep.gens[i - 1]
    key = (i, j)
    if key not in rep._transpositions:
        g = rep.gens[j - 2]
        inner = transposition_matrix(rep, i, j - 1)
        rep._transpositions[key] = np.dot(np.dot(g, inner), g)
    return rep._transpositions[key]


def star_transposition_sum(rep: SeminormalRep) -> np.ndarray:
    """Exact matrix of s_12 + s_13 + ... + s_1n."""
    n = sum(rep.partition)
    total = rat_zeros(rep.dim, rep.dim)
    for j in range(2, n + 1):
        total = total + transposition_matrix(rep, 1, j)
    return total


def transposition_sum(rep: SeminormalRep) -> np.ndarray:
    """Exact matrix of the sum of all transpositions (a central element)."""
    n = sum(rep.partition)
    total = rat_zeros(rep.dim, rep.dim)
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            total = total + transposition_matrix(rep, i, j)
    return total


@dataclass(frozen=True)
class ScalarCheck:
    """Outcome of an exact scalarity test."""

    is_scalar: bool
    value: object = None  # RAT when scalar
    witness: tuple = None  # (i, j, entry) violating scalarity


def star_sum_check(mu) -> ScalarCheck:
    """Exact scalarity of s_12 + ... + s_1n on the irreducible mu.

    Scalar exactly when mu is a rectangle; the scalar is width - height
    (the content of the unique corner).
    """
    mu = check_partition(mu)
    if sum(mu) < 2:
        raise ValueError("need at least two letters")
    value, witness = exact_scalar(star_transposition_sum(seminormal_rep(mu)))
    if value is None:
        return ScalarCheck(False, witness=witness)
    return ScalarCheck(True, value=value)


# ---------------------------------------------------------------------------
# characters


def cycle_type(perm) -> tuple:
    """Cycle type of a permutation given as a tuple of 0-based images."""
    seen = [False] * len(perm)
    parts = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        parts.append(length)
    return tuple(sorted(parts, reverse=True))


def class_size(t) -> int:
    """Size of the conjugacy class with cycle type t."""
    n = sum(t)
    z = 1
    for part in set(t):
        m = t.count(part)
        z *= part**m * factorial(m)
    return factorial(n) // z


def _beta_numbers(mu):
    L = len(mu)
    return tuple(mu[i] + (L - 1 - i) for i in range(L))


def _partition_from_betas(betas):
    betas = sorted(betas, reverse=True)
    L = len(betas)
    return tuple(p for p in (betas[i] - (L - 1 - i) for i in range(L)) if p > 0)


@lru_cache(maxsize=None)
def _mn(mu, t) -> int:
    if not t:
        return 1
    r = t[0]
    rest = t[1:]
    betas = _beta_numbers(mu)
    beta_set = set(betas)
    total = 0
    for b in betas:
        lower = b - r
        if lower < 0 or lower in beta_set:
            continue
        height = sum(1 for x in betas if lower < x < b)
        nu = _partition_from_betas([x if x != b else lower for x in betas])
        total += (-1) ** height * _mn(nu, rest)
    return total


def mn_character(mu, t) -> int:
    """Exact character value by the Murnaghan-Nakayama rule."""
    mu = check_partition(mu)
    t = check_partition(t)
    if sum(mu) != sum(t):
        raise ValueError("partition and cycle type must have the same size")
    return _mn(mu, tuple(sorted(t, reverse=True)))


def reflection_multiplicity(mu) -> int:
    """Multiplicity of mu inside (reflection rep) tensor mu.

    Computed as an exact character inner product; equals corners(mu) - 1.
    The reflection character at cycle type t is (#fixed points) - 1.
    """
    mu = check_partition(mu)
    n = sum(mu)
    if n < 2:
        raise ValueError("need at least two letters")
    total = 0
    for t in partitions_of(n):
        fix = sum(1 for part in t if part == 1)
        chi = mn_character(mu, t)
        total += class_size(t) * (fix - 1) * chi * chi
    q, rem = divmod(total, factorial(n))
    assert rem == 0, "character inner product must be an integer"
    return q

"""Finite subgroups of SL(2, C) as explicit 2x2 matrix groups.

Cyclic and binary dihedral groups are built with known normal forms; the
multiplication table is exact (index arithmetic) and the stored matrices,
conjugacy classes and character tables are validated numerically by
``validate``.  Deformation parameters are class functions on the nontrivial
classes, held as plain dicts ``{class_index: complex}``.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field

import numpy as np

from .linalg import max_abs

MATCH_TOL = 1e-8  # matrix matching threshold, far above roundoff at order <= 48


@dataclass
class GammaData:
    """A finite subgroup of SL(2, C) with class and character data.

    char_table is indexed [class][irrep]; class 0 is the identity class.
    """

    label: str
    order: int
    elements: list
    mult: np.ndarray
    inv: list
    class_of: list
    class_reps: list
    class_sizes: list
    char_table: np.ndarray
    identity_class: int
    generators: list
    cyclic_order: int | None = None

    @property
    def num_classes(self) -> int:
        return len(self.class_reps)

    def nonidentity_classes(self) -> list[int]:
        return [k for k in range(self.num_classes) if k != self.identity_class]

    def class_elements(self, k: int) -> list[int]:
        return [e for e in range(self.order) if self.class_of[e] == k]


def element_index(gamma: GammaData, matrix) -> int:
    """Index of the stored element nearest to ``matrix`` (within MATCH_TOL)."""
    for i, e in enumerate(gamma.elements):
        if max_abs(e - matrix) <= MATCH_TOL:
            return i
    raise ValueError("matrix does not match any stored group element")


def _classes_from_mult(order, mult, inv):
    class_of = [-1] * order
    reps = []
    for e in range(order):
        if class_of[e] >= 0:
            continue
        k = len(reps)
        reps.append(e)
        orbit = {mult[h, mult[e, inv[h]]] for h in range(order)}
        for x in orbit:
            class_of[x] = k
    sizes = [class_of.count(k) for k in range(len(reps))]
    return class_of, reps, sizes


def make_cyclic(ell: int) -> GammaData:
    """Cyclic group generated by diag(eps, 1/eps), eps = exp(2 pi i / ell)."""
    if ell < 1:
        raise ValueError("cyclic order must be >= 1")
    eps = cmath.exp(2j * cmath.pi / ell)
    elements = [
        np.array([[eps**j, 0], [0, eps ** (-j)]], dtype=complex) for j in range(ell)
    ]
    mult = np.array([[(i + j) % ell for j in range(ell)] for i in range(ell)])
    inv = [(-i) % ell for i in range(ell)]
    class_of = list(range(ell))
    char_table = np.array(
        [[eps ** (a * b) for a in range(ell)] for b in range(ell)], dtype=complex
    )
    return GammaData(
        label=f"cyclic:{ell}",
        order=ell,
        elements=elements,
        mult=mult,
        inv=inv,
        class_of=class_of,
        class_reps=list(range(ell)),
        class_sizes=[1] * ell,
        char_table=char_table,
        identity_class=0,
        generators=[1] if ell > 1 else [],
        cyclic_order=ell,
    )


def make_binary_dihedral(n: int) -> GammaData:
    """Binary dihedral group of order 4n.

    Generated by a = diag(eta, 1/eta) with eta = exp(pi i / n) and
    b = [[0, 1], [-1, 0]]; elements are stored as a^k b^s with
    index = k + 2n*s.  Irreducibles: four 1-dimensional characters plus
    two-dimensional ones rho_j(a) = diag(eta^j, eta^-j), rho_j(b) off
    diagonal, for j = 1..n-1.
    """
    if n < 2:
        raise ValueError("binary dihedral parameter must be >= 2")
    eta = cmath.exp(1j * cmath.pi / n)
    a = np.array([[eta, 0], [0, 1 / eta]], dtype=complex)
    b = np.array([[0, 1], [-1, 0]], dtype=complex)
    order = 4 * n
    elements = []
    for s in (0, 1):
        for k in range(2 * n):
            m = np.linalg.matrix_power(a, k)
            elements.append(m @ b if s else m)

    def idx(k, s):
        return (k % (2 * n)) + 2 * n * (s % 2)

    mult = np.zeros((order, order), dtype=int)
    for k1 in range(2 * n):
        for s1 in (0, 1):
            for k2 in range(2 * n):
                for s2 in (0, 1):
                    if s1 == 0:
                        r = idx(k1 + k2, s2)
                    elif s2 == 0:
                        # b a^k = a^-k b
                        r = idx(k1 - k2, 1)
                    else:
                        # b b = a^n
                        r = idx(k1 - k2 + n, 0)
                    mult[idx(k1, s1), idx(k2, s2)] = r
    inv = [0] * order
    for e in range(order):
        inv[e] = int(np.where(mult[e] == 0)[0][0])
    class_of, reps, sizes = _classes_from_mult(order, mult, inv)

    def norm_form(e):
        return e % (2 * n), e // (2 * n)

    # one-dimensional characters (alpha on a, beta on b)
    if n % 2 == 0:
        one_dims = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
    else:
        one_dims = [(1, 1), (1, -1), (-1, 1j), (-1, -1j)]
    num_classes = len(reps)
    char_table = np.zeros((num_classes, num_classes), dtype=complex)
    for cidx, rep in enumerate(reps):
        k, s = norm_form(rep)
        for t, (alpha, beta) in enumerate(one_dims):
            char_table[cidx, t] = alpha**k * beta**s
        for j in range(1, n):
            char_table[cidx, 4 + j - 1] = (
                0.0 if s else eta ** (j * k) + eta ** (-j * k)
            )
    assert num_classes == n + 3
    return GammaData(
        label=f"binary_dihedral:{n}",
        order=order,
        elements=elements,
        mult=mult,
        inv=inv,
        class_of=class_of,
        class_reps=reps,
        class_sizes=sizes,
        char_table=char_table,
        identity_class=class_of[0],
        generators=[1, 2 * n],
        cyclic_order=None,
    )


def make_group(spec: str) -> GammaData:
    """Parse a group spec string: "cyclic:L" or "binary_dihedral:N"."""
    kind, _, arg = spec.partition(":")
    if not arg:
        raise ValueError(f"group spec needs a parameter: {spec!r}")
    try:
        m = int(arg)
    except ValueError:
        raise ValueError(f"bad group parameter in {spec!r}")
    if kind == "cyclic":
        return make_cyclic(m)
    if kind == "binary_dihedral":
        return make_binary_dihedral(m)
    raise ValueError(f"unknown group kind {kind!r}")


def validate(gamma: GammaData) -> dict:
    """Numerical consistency report: residuals should all be tiny.

    Covers determinant 1, closure against the exact mult table, class
    constancy under conjugation, character orthogonality, and (for
    nontrivial groups) vanishing of the element sum, which is equivalent
    to the absence of nonzero invariant vectors in C^2.
    """
    g = gamma
    det = max(abs(np.linalg.det(e) - 1) for e in g.elements)
    closure = 0.0
    for i in range(g.order):
        for j in range(g.order):
            closure = max(
                closure, max_abs(g.elements[i] @ g.elements[j] - g.elements[g.mult[i, j]])
            )
    conj = 0.0
    for e in range(g.order):
        for h in range(g.order):
            c = g.mult[h, g.mult[e, g.inv[h]]]
            if g.class_of[c] != g.class_of[e]:
                conj = max(conj, 1.0)
    sizes = np.array(g.class_sizes, dtype=float)
    gram = (g.char_table.conj().T * sizes) @ g.char_table / g.order
    orth = max_abs(gram - np.eye(g.num_classes))
    elem_sum = max_abs(sum(g.elements)) if g.order > 1 else None
    return {
        "determinant": det,
        "closure": closure,
        "class_consistency": conj,
        "char_orthogonality": float(orth),
        "element_sum": elem_sum,
    }


# ---------------------------------------------------------------------------
# class functions


def check_class_function(gamma: GammaData, c: dict) -> list[str]:
    """Violations of the class-function contract; empty list when valid.

    The domain is the set of nontrivial conjugacy classes: exactly one
    value per such class, nothing on the identity class.
    """
    violations = []
    if gamma.identity_class in c:
        violations.append(f"value assigned to identity class {gamma.identity_class}")
    for k in gamma.nonidentity_classes():
        if k not in c:
            violations.append(f"missing value for class {k}")
    for k in c:
        if not 0 <= int(k) < gamma.num_classes:
            violations.append(f"unknown class {k}")
    return violations


def central_character(gamma: GammaData, c: dict, irrep: int) -> complex:
    """Scalar by which 1 + sum_{g != 1} c_g g acts on an irreducible."""
    if not 0 <= irrep < gamma.num_classes:
        raise ValueError(f"irrep index {irrep} out of range")
    dim = gamma.char_table[gamma.identity_class, irrep]
    total = 1.0 + 0j
    for k in gamma.nonidentity_classes():
        total += gamma.class_sizes[k] * c[k] * gamma.char_table[k, irrep] / dim
    return total

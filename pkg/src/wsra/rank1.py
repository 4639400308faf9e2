"""Finite-dimensional modules over the rank-1 algebra.

The rank-1 algebra is the smash product of a finite subgroup of SL(2, C)
with the free algebra on x, y, subject to xy - yx = 1 + sum_{g != 1} c_g g.
For cyclic groups, ``segment_rep`` builds the standard weight-segment
modules; any group is supported through explicitly supplied matrices,
validated by the exact relation checker ``relation_residuals``.

Conventions: the group generator diag(eps, 1/eps) conjugates x to eps*x and
y to (1/eps)*y; x is an unnormalized raising shift, all module freedom sits
in the lowering coefficients.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field

import numpy as np

from .gamma import GammaData, check_class_function, make_cyclic
from .linalg import commutant_dimension, max_abs


class Infeasible(Exception):
    """A requested module does not exist; ``reason`` names the obstruction."""

    def __init__(self, reason: str, detail=None):
        super().__init__(reason)
        self.reason = reason
        self.detail = detail


@dataclass
class RepY:
    """A module over the rank-1 algebra, given by explicit matrices."""

    gamma: GammaData
    dim: int
    group_action: list  # one matrix per group element, same indexing as gamma
    x_mat: np.ndarray
    y_mat: np.ndarray
    c: dict  # class function defining the algebra
    character: list = field(default=None)  # trace per conjugacy class

    def __post_init__(self):
        if self.character is None:
            self.character = rep_character(self)


def rep_character(y: RepY) -> list:
    """Trace of the group action at each class representative."""
    return [complex(np.trace(y.group_action[r])) for r in y.gamma.class_reps]


def central_element_action(y: RepY) -> np.ndarray:
    """Matrix of 1 + sum_{g != 1} c_g g on the module."""
    out = np.eye(y.dim, dtype=complex)
    for k in y.gamma.nonidentity_classes():
        out = out + y.c[k] * sum(y.group_action[e] for e in y.gamma.class_elements(k))
    return out


def segment_weights(ell: int, a: int, b: int, c: dict) -> list[complex]:
    """Values of the central element on the weight characters a..b."""
    eps = cmath.exp(2j * cmath.pi / ell)
    out = []
    for i in range(a, b + 1):
        lam = 1.0 + 0j
        for j in range(1, ell):
            lam += c[j] * eps ** (i * j)
        out.append(lam)
    return out


def segment_rep(ell: int, a: int, b: int, c: dict, check: bool = True,
                tol: float = 1e-10) -> RepY:
    """Weight-segment module of the rank-1 algebra over a cyclic group.

    Basis v_a..v_b with g v_i = eps^i v_i, x v_i = v_{i+1} (zero past the
    top), y v_i = mu_i v_{i-1} with mu_a = 0 and mu_{i+1} = mu_i - lambda_i.
    Exists iff the lambda_i sum to zero; irreducible iff no strict partial
    sum vanishes.  With check=False the matrices are built regardless,
    which is useful for validating the feasibility criterion against the
    relation checker.
    """
    gamma = make_cyclic(ell)
    bad = check_class_function(gamma, c)
    if bad:
        raise ValueError("; ".join(bad))
    if not 0 <= b - a < ell:
        raise ValueError(f"segment [{a}, {b}] must have length 1..{ell}")
    lams = segment_weights(ell, a, b, c)
    partial = np.cumsum(lams)
    if check:
        if abs(partial[-1]) > tol:
            raise Infeasible(
                "sum of central-element weights is nonzero",
                detail=complex(partial[-1]),
            )
        for i, s in enumerate(partial[:-1]):
            if abs(s) <= tol:
                raise Infeasible(
                    "reducible: vanishing partial sum",
                    detail={"index": a + i, "value": complex(s)},
                )
    dim = b - a + 1
    eps = cmath.exp(2j * cmath.pi / ell)
    group_action = [
        np.diag([eps ** (i * j) for i in range(a, b + 1)]).astype(complex)
        for j in range(ell)
    ]
    x_mat = np.zeros((dim, dim), dtype=complex)
    y_mat = np.zeros((dim, dim), dtype=complex)
    for i in range(dim - 1):
        x_mat[i + 1, i] = 1.0
        y_mat[i, i + 1] = -partial[i]  # mu_{a+i+1}
    return RepY(gamma=gamma, dim=dim, group_action=group_action,
                x_mat=x_mat, y_mat=y_mat, c=dict(c))


def explicit_rep(gamma: GammaData, group_action, x_mat, y_mat, c: dict) -> RepY:
    """Wrap externally supplied matrices; validate with relation_residuals."""
    bad = check_class_function(gamma, c)
    if bad:
        raise ValueError("; ".join(bad))
    group_action = [np.asarray(m, dtype=complex) for m in group_action]
    if len(group_action) != gamma.order:
        raise ValueError("need one matrix per group element")
    return RepY(gamma=gamma, dim=group_action[0].shape[0],
                group_action=group_action,
                x_mat=np.asarray(x_mat, dtype=complex),
                y_mat=np.asarray(y_mat, dtype=complex), c=dict(c))


def relation_residuals(y: RepY) -> dict:
    """Max-norm residuals of the defining relations.

    commutator: [x, y] minus the central-element action;
    equivariance: g u g^-1 = (g acting on u in C^2) for u = x, y;
    group: the stored action is a homomorphism.
    """
    g = y.gamma
    comm = max_abs(y.x_mat @ y.y_mat - y.y_mat @ y.x_mat - central_element_action(y))
    equi = 0.0
    for e in range(g.order):
        rho = y.group_action[e]
        rho_inv = y.group_action[g.inv[e]]
        m2 = g.elements[e]
        x_target = m2[0, 0] * y.x_mat + m2[1, 0] * y.y_mat
        y_target = m2[0, 1] * y.x_mat + m2[1, 1] * y.y_mat
        equi = max(equi, max_abs(rho @ y.x_mat @ rho_inv - x_target))
        equi = max(equi, max_abs(rho @ y.y_mat @ rho_inv - y_target))
    group = 0.0
    for i in range(g.order):
        for j in range(g.order):
            group = max(group, max_abs(
                y.group_action[i] @ y.group_action[j] - y.group_action[g.mult[i, j]]))
    return {
        "commutator": comm,
        "equivariance": equi,
        "group": group,
        "max": max(comm, equi, group),
    }


def module_commutant_dim(y: RepY) -> int:
    """Commutant dimension of {group action, x, y}; 1 certifies irreducibility."""
    mats = [y.group_action[e] for e in y.gamma.generators] or [y.group_action[0]]
    return commutant_dimension(mats + [y.x_mat, y.y_mat])


def one_dim_characters(gamma: GammaData, c: dict, tol: float = 1e-10) -> list[int]:
    """Indices of 1-dim characters chi with 1 + sum c_g chi(g) = 0.

    These are the characters along which the zero module (x = y = 0)
    satisfies the rank-1 commutator relation.
    """
    out = []
    for t in range(gamma.num_classes):
        if abs(gamma.char_table[gamma.identity_class, t] - 1) > tol:
            continue
        total = 1.0 + 0j
        for k in gamma.nonidentity_classes():
            total += gamma.class_sizes[k] * c[k] * gamma.char_table[k, t]
        if abs(total) <= tol:
            out.append(t)
    return out

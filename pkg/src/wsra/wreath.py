"""The wreath product of a symmetric group with a finite SL(2, C) subgroup,
its symplectic reflections, the reflection-form pairing on generators, and
tensor modules with their exact relation checker.

Conventions fixed here and used everywhere:

* V = C^{2N} with basis x_1, y_1, ..., x_N, y_N (x_i at index 2i, y_i at
  2i+1) and symplectic form omega(x_i, y_j) = delta_ij.
* A wreath element (sigma, gamma_tuple) acts on V by first applying the
  per-factor group matrices and then moving factor i to factor sigma(i).
  Products follow this action, so s_12 g_1 s_12 = g_2.
* The algebra normalization parameter t is fixed at 1 (rescaling reduces
  the general case to this one).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from math import factorial

import numpy as np

from .gamma import GammaData
from .linalg import commutant_dimension, max_abs, nullspace_basis, to_complex
from .rank1 import RepY
from .symgroup import (
    SeminormalRep,
    check_partition,
    cycle_type,
    hook_dim,
    mn_character,
    perm_matrix,
    seminormal_rep,
)

GROUP_ORDER_GUARD = 20000  # largest wreath group we enumerate exhaustively


@dataclass(frozen=True)
class WreathElement:
    """(permutation, tuple of group-element indices); perm maps i -> perm[i]."""

    perm: tuple
    tup: tuple


def identity_element(N: int) -> WreathElement:
    return WreathElement(tuple(range(N)), (0,) * N)


def wreath_mul(gamma: GammaData, a: WreathElement, b: WreathElement) -> WreathElement:
    perm = tuple(a.perm[b.perm[i]] for i in range(len(a.perm)))
    tup = tuple(
        int(gamma.mult[a.tup[b.perm[i]], b.tup[i]]) for i in range(len(a.perm))
    )
    return WreathElement(perm, tup)


def wreath_inv(gamma: GammaData, a: WreathElement) -> WreathElement:
    n = len(a.perm)
    pinv = [0] * n
    for i in range(n):
        pinv[a.perm[i]] = i
    tup = tuple(int(gamma.inv[a.tup[pinv[i]]]) for i in range(n))
    return WreathElement(tuple(pinv), tup)


def transposition_element(N: int, i: int, j: int, gamma_idx: int = 0,
                          gamma: GammaData = None) -> WreathElement:
    """The element swapping factors i, j (0-based) decorated with g at i
    and g^-1 at j."""
    perm = list(range(N))
    perm[i], perm[j] = perm[j], perm[i]
    tup = [0] * N
    tup[i] = gamma_idx
    tup[j] = int(gamma.inv[gamma_idx]) if gamma is not None else 0
    if gamma_idx != 0 and gamma is None:
        raise ValueError("gamma data required for a nontrivial decoration")
    return WreathElement(tuple(perm), tuple(tup))


def factor_element(N: int, i: int, gamma_idx: int) -> WreathElement:
    tup = [0] * N
    tup[i] = gamma_idx
    return WreathElement(tuple(range(N)), tuple(tup))


def act_V(gamma: GammaData, N: int, e: WreathElement) -> np.ndarray:
    """Action on V = C^{2N} in the interleaved basis."""
    out = np.zeros((2 * N, 2 * N), dtype=complex)
    for j in range(N):
        i = e.perm[j]
        out[2 * i : 2 * i + 2, 2 * j : 2 * j + 2] = gamma.elements[e.tup[j]]
    return out


def omega_V(N: int) -> np.ndarray:
    block = np.array([[0, 1], [-1, 0]], dtype=complex)
    out = np.zeros((2 * N, 2 * N), dtype=complex)
    for i in range(N):
        out[2 * i : 2 * i + 2, 2 * i : 2 * i + 2] = block
    return out


# ---------------------------------------------------------------------------
# symplectic reflections and the reflection forms


@dataclass(frozen=True)
class Reflection:
    element: WreathElement
    kind: str  # "S" (decorated transposition) or "Gamma" (one-factor element)
    class_id: int
    gamma_class: int | None = None


def symplectic_reflections(N: int, gamma: GammaData):
    """All elements with rank(Id - action on V) = 2, by exhaustive scan.

    Returns (reflections, summary).  Decorated transpositions form a single
    conjugacy class (class_id 0 when N >= 2); one-factor elements form one
    class per nontrivial class of the base group.
    """
    size = factorial(N) * gamma.order**N
    if size > GROUP_ORDER_GUARD:
        raise ValueError(f"wreath group too large to enumerate ({size})")
    eye = np.eye(2 * N)
    refls = []
    for perm in permutations(range(N)):
        for tup in product(range(gamma.order), repeat=N):
            e = WreathElement(perm, tup)
            a = eye - act_V(gamma, N, e)
            s = np.linalg.svd(a, compute_uv=False)
            rank = int(np.sum(s > 1e-10 * max(s[0], 1e-300)))
            if rank != 2:
                continue
            if perm != tuple(range(N)):
                refls.append(Reflection(e, "S", 0))
            else:
                i = next(f for f in range(N) if tup[f] != 0)
                k = gamma.class_of[tup[i]]
                # class ids: 0 is reserved for decorated transpositions and
                # coincides with the identity class, which never appears here
                refls.append(Reflection(e, "Gamma", k, gamma_class=k))
    counts = {"S": sum(1 for r in refls if r.kind == "S"),
              "Gamma": sum(1 for r in refls if r.kind == "Gamma")}
    classes = {}
    for r in refls:
        key = ("S", 0) if r.kind == "S" else ("Gamma", r.gamma_class)
        classes[key] = classes.get(key, 0) + 1
    summary = {"counts": counts, "classes": classes, "total": len(refls)}
    return refls, summary


def reflection_form(gamma: GammaData, N: int, e: WreathElement) -> np.ndarray:
    """Gram matrix of the bilinear form attached to a symplectic reflection.

    The form agrees with the symplectic form on the image of (Id - s) and
    has the kernel of (Id - s) as radical: omega_s(u, v) = omega(Pu, Pv)
    with P the projection onto the image along the kernel.
    """
    a = np.eye(2 * N) - act_V(gamma, N, e)
    u, s, _ = np.linalg.svd(a)
    rank = int(np.sum(s > 1e-10 * max(s[0], 1e-300)))
    if rank != 2:
        raise ValueError(f"not a symplectic reflection (rank {rank})")
    img = u[:, :2]
    ker = np.array(nullspace_basis(a)).T
    basis = np.hstack([img, ker]) if ker.size else img
    proj = img @ np.linalg.inv(basis)[:2, :]
    return proj.T @ omega_V(N) @ proj


@dataclass
class ParamPoint:
    """Algebra parameters: k on decorated transpositions, a class function c
    on nontrivial classes of the base group; t is fixed at 1."""

    k: complex
    c: dict


def param_coords(gamma: GammaData) -> list:
    """Coordinate order for parameter vectors: k, then class values."""
    return ["k"] + sorted(gamma.nonidentity_classes())


def point_to_vector(gamma: GammaData, p: ParamPoint) -> np.ndarray:
    return np.array([p.k] + [p.c[k] for k in sorted(gamma.nonidentity_classes())],
                    dtype=complex)


def vector_to_point(gamma: GammaData, v) -> ParamPoint:
    keys = sorted(gamma.nonidentity_classes())
    return ParamPoint(k=complex(v[0]), c={k: complex(v[1 + i]) for i, k in enumerate(keys)})


def param_step(p: ParamPoint, d: ParamPoint, h: float) -> ParamPoint:
    return ParamPoint(k=p.k + h * d.k,
                      c={k: p.c[k] + h * d.c[k] for k in p.c})


def commutator_pairing(gamma: GammaData, N: int, p: ParamPoint, u: int, v: int,
                       reflections=None, forms=None) -> dict:
    """Group-algebra element prescribed for the commutator [u, v] of two
    basis vectors of V: omega(u, v) on the identity plus the weighted
    reflection-form values on every symplectic reflection.

    Returns a dict WreathElement -> coefficient.  ``forms`` may be supplied
    to reuse (or, in tests, tamper with) the precomputed Gram matrices.
    """
    if reflections is None:
        reflections, _ = symplectic_reflections(N, gamma)
    if forms is None:
        forms = [reflection_form(gamma, N, r.element) for r in reflections]
    out = {identity_element(N): complex(omega_V(N)[u, v])}
    for r, form in zip(reflections, forms):
        w = form[u, v]
        if abs(w) < 1e-14:
            continue
        f = p.k if r.kind == "S" else p.c[r.gamma_class]
        coeff = f * w
        out[r.element] = out.get(r.element, 0.0) + coeff
    return out


def _omega_L():
    return np.array([[0, 1], [-1, 0]], dtype=complex)


def generator_relation_rhs(gamma: GammaData, N: int, p: ParamPoint, u: int, v: int) -> dict:
    """The commutator [u, v] as dictated by the explicit generator relations.

    Same-factor pairs (x_i, y_i) get the identity plus k/2 times every
    decorated transposition touching i plus the class-function part on
    factor i; distinct factors get -k/2 times the symplectically weighted
    decorated transpositions.
    """
    i, ui = divmod(u, 2)
    j, vj = divmod(v, 2)
    out = {}
    if i == j:
        if ui == vj:
            return out
        sign = 1.0 if (ui, vj) == (0, 1) else -1.0
        out[identity_element(N)] = sign
        for jj in range(N):
            if jj == i:
                continue
            for gidx in range(gamma.order):
                e = transposition_element(N, i, jj, gidx, gamma)
                out[e] = out.get(e, 0.0) + sign * p.k / 2.0
        for k in gamma.nonidentity_classes():
            for gidx in gamma.class_elements(k):
                e = factor_element(N, i, gidx)
                out[e] = out.get(e, 0.0) + sign * p.c[k]
    else:
        omega_l = _omega_L()
        for gidx in range(gamma.order):
            w = (gamma.elements[gidx][:, ui]) @ omega_l[:, vj]
            if abs(w) < 1e-14:
                continue
            e = transposition_element(N, i, j, gidx, gamma)
            out[e] = out.get(e, 0.0) - p.k / 2.0 * w
    return {k: v for k, v in out.items() if abs(v) > 0}


@dataclass
class PresentationReport:
    ok: bool
    max_mismatch: float
    mismatches: list


def presentation_check(N: int, gamma: GammaData, p: ParamPoint, tol: float = 1e-10,
                       reflections=None, forms=None) -> PresentationReport:
    """Verify the reflection-form pairing equals the generator relations,
    coefficient by coefficient, for every ordered pair of basis vectors."""
    if reflections is None:
        reflections, _ = symplectic_reflections(N, gamma)
    if forms is None:
        forms = [reflection_form(gamma, N, r.element) for r in reflections]
    mismatches = []
    worst = 0.0
    for u in range(2 * N):
        for v in range(2 * N):
            lhs = commutator_pairing(gamma, N, p, u, v, reflections, forms)
            rhs = generator_relation_rhs(gamma, N, p, u, v)
            for e in set(lhs) | set(rhs):
                diff = abs(lhs.get(e, 0.0) - rhs.get(e, 0.0))
                worst = max(worst, diff)
                if diff > tol:
                    mismatches.append({"u": u, "v": v, "element": e, "difference": diff})
    return PresentationReport(ok=not mismatches, max_mismatch=worst, mismatches=mismatches)


# ---------------------------------------------------------------------------
# tensor modules


@dataclass
class WreathRep:
    """The module W tensor Y^(tensor N) with its defining matrices.

    xy holds the 2N operator images of the V basis in the interleaved
    order x_1, y_1, ..., x_N, y_N.  gens pairs each group generator with
    its matrix.  params is the point where the module satisfies the
    relations on the nose (k = 0, the class function of Y).
    """

    W: tuple
    Y: RepY
    N: int
    gamma: GammaData
    dimM: int
    sn: SeminormalRep
    gens: list  # [(WreathElement, matrix)]
    xy: np.ndarray  # (2N, dimM, dimM)
    params: ParamPoint
    _tables: dict = field(default=None, repr=False)

    def x_mat(self, i: int) -> np.ndarray:
        return self.xy[2 * i]

    def y_mat(self, i: int) -> np.ndarray:
        return self.xy[2 * i + 1]


def _multi_index_code(idx, d):
    code = 0
    for a in idx:
        code = code * d + a
    return code


def _yn_matrix(Y: RepY, N: int, e: WreathElement) -> np.ndarray:
    """Action of a wreath element on the N-fold tensor power of Y."""
    d = Y.dim
    mats = [Y.group_action[e.tup[f]] for f in range(N)]
    diag = mats[0]
    for m in mats[1:]:
        diag = np.kron(diag, m)
    if e.perm == tuple(range(N)):
        return diag
    size = d**N
    perm_mat = np.zeros((size, size))
    for idx in product(range(d), repeat=N):
        target = [0] * N
        for f in range(N):
            target[e.perm[f]] = idx[f]
        perm_mat[_multi_index_code(target, d), _multi_index_code(idx, d)] = 1.0
    return perm_mat @ diag


def element_matrix(R: WreathRep, e: WreathElement) -> np.ndarray:
    """Action of a wreath element on the full module."""
    w = to_complex(perm_matrix(R.sn, e.perm))
    return np.kron(w, _yn_matrix(R.Y, R.N, e))


def build_module(W, Y: RepY, N: int) -> WreathRep:
    """Assemble the module W tensor Y^(tensor N) at k = 0.

    Adjacent transpositions act by the seminormal matrix tensored with the
    factor swap; the base group acts factorwise; x_i, y_i act by the
    rank-1 matrices in factor i.
    """
    W = check_partition(W)
    if sum(W) != N:
        raise ValueError(f"partition {W} does not have size {N}")
    sn = seminormal_rep(W)
    dW, dY = sn.dim, Y.dim
    dimM = dW * dY**N
    gamma = Y.gamma
    R = WreathRep(W=W, Y=Y, N=N, gamma=gamma, dimM=dimM, sn=sn, gens=[],
                  xy=np.zeros((2 * N, dimM, dimM), dtype=complex),
                  params=ParamPoint(k=0.0, c=dict(Y.c)))
    for i in range(N - 1):
        perm = list(range(N))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        e = WreathElement(tuple(perm), (0,) * N)
        R.gens.append((e, element_matrix(R, e)))
    for gidx in gamma.generators:
        e = factor_element(N, 0, gidx)
        R.gens.append((e, element_matrix(R, e)))
    eyeW = np.eye(dW)
    for i in range(N):
        for local, slot in ((Y.x_mat, 2 * i), (Y.y_mat, 2 * i + 1)):
            mats = [np.eye(dY, dtype=complex)] * N
            mats[i] = local
            op = mats[0]
            for m in mats[1:]:
                op = np.kron(op, m)
            R.xy[slot] = np.kron(eyeW, op)
    return R


def relation_tables(R: WreathRep) -> dict:
    """Constant matrices entering the defining relations, cached on R.

    s_sums[i]: sum over partners j and group elements of the decorated
    transposition action; class_sums[i][k]: sum of the factor-i action
    over class k; cross[(i, j, ui, vj)]: symplectically weighted sums for
    the distinct-factor relations, i < j.
    """
    if R._tables is not None:
        return R._tables
    gamma, N = R.gamma, R.N
    omega_l = _omega_L()
    elem_cache = {}

    def decorated(i, j, gidx):
        key = (i, j, gidx)
        if key not in elem_cache:
            e = transposition_element(N, i, j, gidx, gamma)
            elem_cache[key] = element_matrix(R, e)
        return elem_cache[key]

    s_sums = []
    for i in range(N):
        total = np.zeros((R.dimM, R.dimM), dtype=complex)
        for j in range(N):
            if j == i:
                continue
            # summing over the whole group makes the decoration side irrelevant
            a, b = min(i, j), max(i, j)
            for gidx in range(gamma.order):
                total += decorated(a, b, gidx)
        s_sums.append(total)
    class_sums = []
    for i in range(N):
        per_class = {}
        for k in gamma.nonidentity_classes():
            per_class[k] = sum(
                element_matrix(R, factor_element(N, i, gidx))
                for gidx in gamma.class_elements(k)
            )
        class_sums.append(per_class)
    cross = {}
    for i in range(N):
        for j in range(i + 1, N):
            for ui in range(2):
                for vj in range(2):
                    total = np.zeros((R.dimM, R.dimM), dtype=complex)
                    for gidx in range(gamma.order):
                        w = (gamma.elements[gidx][:, ui]) @ omega_l[:, vj]
                        if abs(w) > 1e-14:
                            total += w * decorated(i, j, gidx)
                    cross[(i, j, ui, vj)] = total
    R._tables = {"s_sums": s_sums, "class_sums": class_sums, "cross": cross}
    return R._tables


def diagonal_rhs(R: WreathRep, p: ParamPoint, i: int) -> np.ndarray:
    """Right-hand side of the same-factor commutator relation for factor i."""
    t = relation_tables(R)
    out = np.eye(R.dimM, dtype=complex) + (p.k / 2.0) * t["s_sums"][i]
    for k, mat in t["class_sums"][i].items():
        out = out + p.c[k] * mat
    return out


def wreath_residuals(R: WreathRep, p: ParamPoint = None) -> dict:
    """Max-norm residuals of every defining relation at parameters p.

    diagonal: [x_i, y_i] against its right-hand side, one value per i;
    cross: [u_i, v_j] for i < j and u, v in {x, y};
    equivariance: generators conjugate the 2N operators like V;
    group: the generator matrices multiply like the group elements;
    commutant_dim: dimension of the commutant of everything (1 means
    irreducible).  Residuals are raw max-norms, so for the zero module
    the diagonal residual equals the absolute trace-hyperplane value.
    """
    if p is None:
        p = R.params
    t = relation_tables(R)
    diag = []
    for i in range(R.N):
        xi, yi = R.x_mat(i), R.y_mat(i)
        diag.append(max_abs(xi @ yi - yi @ xi - diagonal_rhs(R, p, i)))
    cross = {}
    for (i, j, ui, vj), mat in t["cross"].items():
        a = R.xy[2 * i + ui]
        b = R.xy[2 * j + vj]
        cross[(i, j, ui, vj)] = max_abs(a @ b - b @ a + (p.k / 2.0) * mat)
    equi = 0.0
    for e, mat in R.gens:
        vg = act_V(R.gamma, R.N, e)
        for u in range(2 * R.N):
            target = sum(vg[w, u] * R.xy[w] for w in range(2 * R.N))
            equi = max(equi, max_abs(mat @ R.xy[u] - target @ mat))
    group = 0.0
    for e1, m1 in R.gens:
        for e2, m2 in R.gens:
            prod = wreath_mul(R.gamma, e1, e2)
            group = max(group, max_abs(m1 @ m2 - element_matrix(R, prod)))
    all_mats = [m for _, m in R.gens] + list(R.xy)
    report = {
        "diagonal": diag,
        "cross": cross,
        "equivariance": equi,
        "group": group,
        "commutant_dim": commutant_dimension(all_mats),
    }
    report["max"] = max(max(diag), max(cross.values(), default=0.0), equi, group)
    return report


def endomorphism_dim(R: WreathRep) -> int:
    """dim End(M) as a module over the wreath group, by character averaging.

    Traces are evaluated with the cycle formula: a wreath element's trace
    on the tensor power is the product over permutation cycles of the
    trace of the cycle product in Y; the symmetric-group factor uses the
    exact character.
    """
    gamma, N = R.gamma, R.N
    size = factorial(N) * gamma.order**N
    if size > GROUP_ORDER_GUARD:
        raise ValueError(f"wreath group too large ({size})")
    trY = [complex(np.trace(m)) for m in R.Y.group_action]
    total = 0.0
    for perm in permutations(range(N)):
        chi_w = mn_character(R.W, cycle_type(perm))
        cycles = []
        seen = [False] * N
        for s in range(N):
            if seen[s]:
                continue
            cyc = [s]
            seen[s] = True
            nxt = perm[s]
            while nxt != s:
                cyc.append(nxt)
                seen[nxt] = True
                nxt = perm[nxt]
            cycles.append(cyc)
        for tup in product(range(gamma.order), repeat=N):
            tr = complex(chi_w)
            for cyc in cycles:
                idx = tup[cyc[0]]
                for f in cyc[1:]:
                    idx = int(gamma.mult[tup[f], idx])
                tr *= trY[idx]
            total += abs(tr) ** 2
    value = total / size
    nearest = round(value)
    if abs(value - nearest) > 1e-6:
        raise ValueError(f"endomorphism dimension not integer-like: {value}")
    return int(nearest)


def zero_module(gamma: GammaData, char_index: int, c: dict) -> RepY:
    """The 1-dimensional module on a linear character with x = y = 0.

    Valid as a rank-1 module exactly when 1 + sum c_g chi(g) = 0; callers
    may build it off that locus to probe residuals.
    """
    chi = gamma.char_table[:, char_index]
    if abs(chi[gamma.identity_class] - 1) > 1e-10:
        raise ValueError("character is not 1-dimensional")
    action = [np.array([[chi[gamma.class_of[e]]]], dtype=complex)
              for e in range(gamma.order)]
    zero = np.zeros((1, 1), dtype=complex)
    return RepY(gamma=gamma, dim=1, group_action=action, x_mat=zero,
                y_mat=zero, c=dict(c))

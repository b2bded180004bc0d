"""Coherent configurations of a quasi-symmetric design.

The nine relations on the ordered set V + B (points first, then blocks), the
exhaustive axiom check with the full intersection-number table, the
matrix-unit basis of the second irreducible block of the adjacency algebra,
and the symmetric idempotent projector E whose entries form the exact Gram
table of the Euclidean embedding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .designs import (
    DesignParameters,
    IncidenceDesign,
    derive_parameters,
    intersection_numbers,
)
from .exactnum import QuadExt, _sf_product, sqrt_adjoin


class StructureError(ValueError):
    """The input lacks the structure this construction needs."""


class DegenerateRepresentationError(ValueError):
    """A representation coefficient hits a vanishing denominator."""


class InternalConsistencyError(AssertionError):
    """An exact identity that must hold failed; indicates a bug upstream."""


RELATION_NAMES = ("R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9")
TRANSPOSE_PAIRS = {1: 1, 2: 2, 3: 3, 4: 4, 5: 5, 6: 8, 7: 9, 8: 6, 9: 7}

GRAM_CLASS_OF_RELATION = {
    1: "V_diag", 2: "B_diag", 3: "V_off", 4: "B_alpha", 5: "B_beta",
    6: "VB_in", 7: "VB_out", 8: "VB_in", 9: "VB_out",
}


@dataclass(frozen=True)
class CoherentConfig:
    """Nine 0/1 relation matrices over V + B plus the derived parameters."""

    design: IncidenceDesign
    params: DesignParameters
    alpha: int
    beta: int
    relations: tuple  # nine int8 arrays, index i <-> R_{i+1}

    @property
    def m(self) -> int:
        return self.design.m

    @property
    def n_blocks(self) -> int:
        return self.design.block_count

    @property
    def size(self) -> int:
        return self.m + self.n_blocks

    def relation_index_matrix(self) -> np.ndarray:
        """N x N matrix whose entries are the relation numbers 1..9."""
        out = np.zeros((self.size, self.size), dtype=np.int8)
        for i, mat in enumerate(self.relations):
            out += (i + 1) * mat
        return out


def from_design(d: IncidenceDesign) -> CoherentConfig:
    """Build the nine relations; R4 holds the larger intersection number."""
    profile = intersection_numbers(d)
    if not profile.quasi_symmetric:
        raise StructureError(
            f"design is not quasi-symmetric: intersection values {profile.values}")
    alpha, beta = profile.alpha, profile.beta
    assert alpha is not None and beta is not None
    params = derive_parameters(d.m, d.block_size, alpha, beta)
    m, n = d.m, d.block_count
    big = m + n
    inc = np.zeros((m, n), dtype=np.int8)
    for j, block in enumerate(d.blocks):
        inc[list(block), j] = 1
    inter = inc.T.astype(np.int32) @ inc.astype(np.int32)
    offdiag = ~np.eye(n, dtype=bool)
    mats = []
    for i in range(9):
        mats.append(np.zeros((big, big), dtype=np.int8))
    mats[0][:m, :m] = np.eye(m, dtype=np.int8)
    mats[1][m:, m:] = np.eye(n, dtype=np.int8)
    mats[2][:m, :m] = 1 - np.eye(m, dtype=np.int8)
    mats[3][m:, m:] = ((inter == alpha) & offdiag).astype(np.int8)
    mats[4][m:, m:] = ((inter == beta) & offdiag).astype(np.int8)
    mats[5][:m, m:] = inc
    mats[6][:m, m:] = 1 - inc
    mats[7][m:, :m] = inc.T
    mats[8][m:, :m] = (1 - inc).T
    return CoherentConfig(d, params, alpha, beta, tuple(mats))


# ----- axiom verification -------------------------------------------------


@dataclass
class AxiomReport:
    ok: bool
    p: Optional[np.ndarray]        # p[i-1, j-1, k-1] = p_{ij}^k
    violation: Optional[str] = None

    def p_constant(self, i: int, j: int, k: int) -> int:
        """Intersection number p_{ij}^k with 1-based relation labels."""
        assert self.p is not None
        return int(self.p[i - 1, j - 1, k - 1])


def verify_axioms(cc: CoherentConfig) -> AxiomReport:
    """Exhaustively check the coherent-configuration axioms.

    (1) the relations partition all ordered pairs, (2) each relation's
    transpose is again a relation, (3) the diagonal is a union of relations,
    (4) |{w : (u,w) in R_i, (w,v) in R_j}| is constant over (u,v) in R_k.
    Returns the full table of constants, or the first violation found.
    """
    mats = [m.astype(np.int32) for m in cc.relations]
    total = sum(mats)
    if not (total == 1).all():
        return AxiomReport(False, None, "relations do not partition the pair set")
    for i, expect in TRANSPOSE_PAIRS.items():
        if not (cc.relations[i - 1].T == cc.relations[expect - 1]).all():
            return AxiomReport(False, None, f"transpose of R{i} is not R{expect}")
    diag = cc.relations[0] + cc.relations[1]
    if not (np.diag(np.diag(diag)) == diag).all() or not (np.diag(diag) == 1).all():
        return AxiomReport(False, None, "R1 + R2 is not the diagonal")
    supports = [m.astype(bool) for m in cc.relations]
    p = np.zeros((9, 9, 9), dtype=np.int32)
    for i in range(9):
        for j in range(9):
            prod = mats[i] @ mats[j]
            for k in range(9):
                values = prod[supports[k]]
                if values.size == 0:
                    continue
                first = values[0]
                if not (values == first).all():
                    bad = np.argwhere((prod != first) & supports[k])[0]
                    return AxiomReport(
                        False, None,
                        f"p_{i+1}{j+1}^{k+1} not constant: pair {tuple(bad)} gives "
                        f"{prod[tuple(bad)]}, expected {first}")
                p[i, j, k] = first
    return AxiomReport(True, p)


# ----- the idempotent basis and the projector ------------------------------


@dataclass(frozen=True)
class IdempotentCoefficients:
    """Coefficient vectors (over A1..A9) of the second-block matrix units."""

    alpha1: QuadExt
    alpha2: QuadExt
    beta1: QuadExt
    beta2: QuadExt
    eps11: tuple
    eps12: tuple
    eps21: tuple
    eps22: tuple

    def all_vectors(self) -> tuple:
        return (self.eps11, self.eps12, self.eps21, self.eps22)


def idempotent_basis(p: DesignParameters) -> IdempotentCoefficients:
    """Exact coefficients of eps_11, eps_12, eps_21, eps_22 over A1..A9.

    alpha1 = sqrt(S T), alpha2 = (k - N)/P * alpha1, beta1 = -beta2 =
    sqrt(T - Lambda); raises when P = 0, n (r - s) = 0 or the 2x2
    determinant alpha1 beta2 - alpha2 beta1 vanishes.
    """
    if p.P == 0:
        raise DegenerateRepresentationError("P = 0 leaves alpha2 undefined")
    st = Fraction(p.S) * p.T
    tl = p.T - p.Lambda
    if st < 0 or tl < 0:
        raise DegenerateRepresentationError(
            f"negative radicand: S*T = {st}, T - Lambda = {tl}")
    alpha1 = sqrt_adjoin(st)
    alpha2 = (p.k - p.N) / p.P * alpha1
    beta1 = sqrt_adjoin(tl)
    beta2 = -beta1
    disc = alpha1 * beta2 - alpha2 * beta1
    nrs = p.n * (p.r - p.s)
    if disc.is_zero() or nrs == 0:
        raise DegenerateRepresentationError(
            f"degenerate representation: disc = {disc}, n(r - s) = {nrs}")
    zero = QuadExt(0)
    m = p.m
    eps11 = [zero] * 9
    eps11[0] = QuadExt(Fraction(m - 1, m))
    eps11[2] = QuadExt(Fraction(-1, m))
    eps12 = [zero] * 9
    eps12[5] = alpha2 / disc
    eps12[6] = -alpha1 / disc
    eps21 = [zero] * 9
    eps21[7] = alpha2 / disc
    eps21[8] = -alpha1 / disc
    eps22 = [zero] * 9
    eps22[1] = QuadExt(-((p.n - p.k - 1) * p.s + p.k * p.s + p.k) / nrs)
    eps22[3] = QuadExt((p.n - p.k + p.s) / nrs)
    eps22[4] = QuadExt((p.s - p.k) / nrs)
    return IdempotentCoefficients(
        alpha1, alpha2, beta1, beta2,
        tuple(eps11), tuple(eps12), tuple(eps21), tuple(eps22))


def algebra_product(p_table: np.ndarray, u, v) -> tuple:
    """Product of two adjacency-algebra elements given by coefficient vectors.

    (sum_i u_i A_i)(sum_j v_j A_j) = sum_k (sum_{ij} u_i v_j p_ij^k) A_k.
    """
    out = [QuadExt(0)] * 9
    for i in range(9):
        if u[i].is_zero():
            continue
        for j in range(9):
            if v[j].is_zero():
                continue
            uv = u[i] * v[j]
            for k in range(9):
                c = int(p_table[i, j, k])
                if c:
                    out[k] = out[k] + uv * c
    return tuple(out)


def verify_epsilon_identities(p_table: np.ndarray, idem: IdempotentCoefficients) -> None:
    """Check eps_ij eps_kl = delta_jk eps_il exactly in the algebra."""
    eps = {
        (1, 1): idem.eps11, (1, 2): idem.eps12,
        (2, 1): idem.eps21, (2, 2): idem.eps22,
    }
    for (i, j), u in eps.items():
        for (k, l), v in eps.items():
            prod = algebra_product(p_table, u, v)
            expect = eps[(i, l)] if j == k else (QuadExt(0),) * 9
            if tuple(prod) != tuple(expect):
                raise InternalConsistencyError(
                    f"eps_{i}{j} eps_{k}{l} != delta * eps_{i}{l}")


@dataclass(frozen=True)
class GramTable:
    """The seven exact Gram classes of the projector embedding."""

    params: DesignParameters
    classes: dict  # class name -> QuadExt

    def __getitem__(self, key: str) -> QuadExt:
        return self.classes[key]

    def as_strings(self) -> dict:
        return {k: str(v) for k, v in self.classes.items()}


@dataclass
class ProjectorResult:
    cc: CoherentConfig
    idem: IdempotentCoefficients
    coefficients: tuple        # E as a coefficient vector over A1..A9
    gram: GramTable
    matrix: Optional[list]     # dense QuadExt rows when assembled


# 45 points and 45 + 36 = 81-sized complements stay comfortably below this
FULL_MATRIX_LIMIT = 128


def projector_and_gram(cc: CoherentConfig, full_matrix_check: Optional[bool] = None) -> ProjectorResult:
    """Assemble E = (eps11 + eps12 + eps21 + eps22)/2 and verify it exactly.

    Checks E = E^T, E^2 = E, trace(E) = m - 1, that E annihilates both fiber
    indicator vectors, and that every entry agrees with its pair-class value.
    The multiplication check runs entrywise on the dense matrix for small
    configurations and through the verified intersection-number table above
    the size limit.
    """
    report = verify_axioms(cc)
    if not report.ok:
        raise StructureError(f"axioms fail: {report.violation}")
    idem = idempotent_basis(cc.params)
    verify_epsilon_identities(report.p, idem)
    half = Fraction(1, 2)
    coeffs = tuple(
        (a + b + c + d) * half
        for a, b, c, d in zip(idem.eps11, idem.eps12, idem.eps21, idem.eps22)
    )
    # symmetry and trace at the coefficient level
    if coeffs[5] != coeffs[7] or coeffs[6] != coeffs[8]:
        raise InternalConsistencyError("E is not symmetric")
    trace = coeffs[0] * cc.m + coeffs[1] * cc.n_blocks
    if trace != QuadExt(cc.m - 1):
        raise InternalConsistencyError(f"trace(E) = {trace} != m - 1")
    # idempotency in the algebra (valid for any size; the p table is verified)
    square = algebra_product(report.p, coeffs, coeffs)
    if tuple(square) != tuple(coeffs):
        raise InternalConsistencyError("E^2 != E in the adjacency algebra")
    # fiber annihilation: row sums against both indicator vectors
    p = cc.params
    v_sums = (
        coeffs[0] + (cc.m - 1) * coeffs[2],          # row in V, columns in V
        p.S * coeffs[7] + (cc.m - p.S) * coeffs[8],  # row in B, columns in V
    )
    b_sums = (
        p.T * coeffs[5] + (p.n - p.T) * coeffs[6],             # row in V, columns in B
        coeffs[1] + p.k * coeffs[3] + (p.n - p.k - 1) * coeffs[4],  # row in B
    )
    for value in (*v_sums, *b_sums):
        if not QuadExt(value).is_zero():
            raise InternalConsistencyError("E does not annihilate a fiber indicator")
    gram = GramTable(cc.params, {
        name: coeffs[rel - 1] for rel, name in GRAM_CLASS_OF_RELATION.items()
        if rel not in (8, 9)
    })
    matrix = None
    if full_matrix_check is None:
        full_matrix_check = cc.size <= FULL_MATRIX_LIMIT
    if full_matrix_check:
        matrix = assemble_matrix(cc, coeffs)
        _dense_checks(cc, matrix, gram)
    return ProjectorResult(cc, idem, coeffs, gram, matrix)


def assemble_matrix(cc: CoherentConfig, coeffs) -> list:
    ridx = cc.relation_index_matrix()
    return [[coeffs[ridx[a, b] - 1] for b in range(cc.size)] for a in range(cc.size)]


def _dense_checks(cc: CoherentConfig, e: list, gram: GramTable) -> None:
    size = cc.size
    ridx = cc.relation_index_matrix()
    # E^T = E and class agreement, entry by entry
    for a in range(size):
        row = e[a]
        for b in range(size):
            if row[b] != e[b][a]:
                raise InternalConsistencyError(f"E[{a}][{b}] != E[{b}][{a}]")
            if row[b] != gram.classes[GRAM_CLASS_OF_RELATION[int(ridx[a, b])]]:
                raise InternalConsistencyError(f"entry ({a},{b}) is off its class value")
    # E^2 = E with raw term accumulation (fractions only, no object churn)
    cols = [[e[t][b] for t in range(size)] for b in range(size)]
    for a in range(size):
        row = e[a]
        for b in range(size):
            col = cols[b]
            acc: dict = {}
            for t in range(size):
                for r1, c1 in row[t].terms:
                    for r2, c2 in col[t].terms:
                        g, d = _sf_product(r1, r2)
                        acc[d] = acc.get(d, Fraction(0)) + c1 * c2 * g
            if QuadExt(acc) != row[b]:
                raise InternalConsistencyError(f"(E^2)[{a}][{b}] != E[{a}][{b}]")
    trace = QuadExt(0)
    for a in range(size):
        trace = trace + e[a][a]
    if trace != QuadExt(cc.m - 1):
        raise InternalConsistencyError("dense trace differs from m - 1")

"""Invariants and semi-invariants of the coadjoint action on S(L).

The generator attached to basis vector v_i is the linear vector field

    v~_i = sum_j sum_k C_ij^k x_k d/dx_j

and p is invariant when every v~_i annihilates it.  The fields preserve
degree, so all searches run one homogeneous degree at a time.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import (
    DimensionError,
    Polynomial,
    bareiss_rank,
    charpoly,
    kernel_sparse,
    monomials_of_degree,
    rank,
    rational_roots,
    rref_sparse,
)
from .liealg import (
    KernelFault,
    StructureConstants,
    SubSpace,
    adjoint_matrix,
    bracket,
    derived_algebra,
    is_nilpotent_matrix,
    is_nilpotent_subalgebra,
    radical,
)

SEED = 1729
POINT_RANGE = 100
RANK_POINTS = 3
INDEPENDENCE_RETRIES = 3


class PreconditionError(ValueError):
    pass


def random_points(rng: random.Random, n: int) -> Iterable[tuple]:
    """Endless stream of points with coordinates in {-100..100} minus 0."""
    choices = [v for v in range(-POINT_RANGE, POINT_RANGE + 1) if v]
    while True:
        yield tuple(Fraction(rng.choice(choices)) for _ in range(n))


@dataclass(frozen=True)
class GeneratorField:
    """v~_i stored as matrix[j][k] = C_ij^k."""

    index: int
    matrix: tuple

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def on_coordinate(self, j: int) -> Polynomial:
        """Image of x_j: the linear form sum_k C_ij^k x_k."""
        return Polynomial.linear(self.matrix[j])

    def __call__(self, p: Polynomial) -> Polynomial:
        return apply(self, p)

    def format(self, labels: Sequence[str] | None = None) -> str:
        n = self.dim
        if labels is None:
            labels = [f"x{k + 1}" for k in range(n)]
        parts = []
        for j in range(n):
            coef = self.on_coordinate(j)
            if coef:
                parts.append(f"({coef.format(labels)})*d/d{labels[j]}")
        return " + ".join(parts) if parts else "0"


def _field_matrix(C: StructureConstants, v: Sequence) -> tuple:
    # row j = coordinates of [v, e_j]
    return tuple(bracket(C, v, C.basis_vector(j)) for j in range(C.dim))


def generators(C: StructureConstants) -> list[GeneratorField]:
    return [GeneratorField(i, tuple(C.table[i])) for i in range(C.dim)]


def generator_for(C: StructureConstants, v: Sequence) -> GeneratorField:
    """Field of an arbitrary element v, i.e. sum_i v_i * v~_i."""
    return GeneratorField(-1, _field_matrix(C, v))


def apply(g: GeneratorField, p: Polynomial) -> Polynomial:
    n = g.dim
    if p.n != n:
        raise DimensionError(f"polynomial in {p.n} variables, field in {n}")
    out: dict = {}
    for mono, c in p.items():
        for j, e in enumerate(mono):
            if not e:
                continue
            row = g.matrix[j]
            for k, a in enumerate(row):
                if not a:
                    continue
                m = list(mono)
                m[j] -= 1
                m[k] += 1
                m = tuple(m)
                s = out.get(m, 0) + c * e * a
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
    return Polynomial(n, out)


class _Graded:
    """Homogeneous component of degree d with sparse operator matrices."""

    def __init__(self, n: int, d: int):
        self.n = n
        self.d = d
        self.monos = monomials_of_degree(n, d)
        self.index = {m: k for k, m in enumerate(self.monos)}

    def columns(self, matrix: Sequence[Sequence[Fraction]]) -> list[dict]:
        """Image of each basis monomial, as {row index: coefficient}."""
        cols = []
        for mono in self.monos:
            col: dict = {}
            for j, e in enumerate(mono):
                if not e:
                    continue
                for k, a in enumerate(matrix[j]):
                    if not a:
                        continue
                    m = list(mono)
                    m[j] -= 1
                    m[k] += 1
                    r = self.index[tuple(m)]
                    s = col.get(r, 0) + e * a
                    if s:
                        col[r] = s
                    else:
                        col.pop(r, None)
            cols.append(col)
        return cols

    @staticmethod
    def rows(cols: list[dict]) -> list[dict]:
        rows: dict = {}
        for c, col in enumerate(cols):
            for r, v in col.items():
                rows.setdefault(r, {})[c] = v
        return [rows[r] for r in sorted(rows)]

    @staticmethod
    def apply_cols(cols: list[dict], vec: dict) -> dict:
        out: dict = {}
        for c, v in vec.items():
            for r, a in cols[c].items():
                s = out.get(r, 0) + v * a
                if s:
                    out[r] = s
                else:
                    out.pop(r, None)
        return out

    def poly(self, vec: dict) -> Polynomial:
        return Polynomial(self.n, {self.monos[c]: v for c, v in vec.items()})


# ---------------------------------------------------------------------------
# counting
# ---------------------------------------------------------------------------


def commutator_matrix(C: StructureConstants) -> list[list[Polynomial]]:
    """A(x) with A_ij = sum_k C_ij^k x_k."""
    n = C.dim
    return [[Polynomial.linear(C.table[i][j]) for j in range(n)] for i in range(n)]


def generic_rank(C: StructureConstants) -> int:
    """Rank of A(x) over Q(x), cross-checked by evaluation at seeded points."""
    A = commutator_matrix(C)
    symbolic = bareiss_rank(A, divide=lambda a, b: a.exact_div(b), is_zero=lambda p: p.is_zero())
    rng = random.Random(SEED)
    pts = random_points(rng, C.dim)
    observed = 0
    for _ in range(RANK_POINTS):
        pt = next(pts)
        observed = max(observed, rank([[a.eval(pt) for a in row] for row in A]))
    if observed != symbolic:
        raise KernelFault(f"symbolic rank {symbolic} disagrees with evaluated rank {observed}")
    return symbolic


def invariant_count(C: StructureConstants) -> int:
    """Number of functionally independent invariants, n - rank A(x)."""
    return C.dim - generic_rank(C)


# ---------------------------------------------------------------------------
# polynomial invariants
# ---------------------------------------------------------------------------


def jacobian_rank(polys: Sequence[Polynomial], point: Sequence) -> int:
    if not polys:
        return 0
    n = polys[0].n
    return rank([[p.diff(j).eval(point) for j in range(n)] for p in polys])


@dataclass(frozen=True)
class InvariantSet:
    polys: tuple
    point: tuple
    jacobian_rank: int
    count: int
    max_degree: int
    kernel_dims: tuple = ()  # kernel dimension per degree 1..max_degree actually searched

    @property
    def complete(self) -> bool:
        return len(self.polys) == self.count


def homogeneous_invariants(C: StructureConstants, d: int) -> list[Polynomial]:
    """Basis of the degree-d invariants, leading coefficient 1, grlex-sorted."""
    G = _Graded(C.dim, d)
    rows = []
    for g in generators(C):
        rows.extend(G.rows(G.columns(g.matrix)))
    return [G.poly(v) for v in kernel_sparse(rows, len(G.monos))]


def polynomial_invariants(C: StructureConstants, max_degree: int, count: int | None = None) -> InvariantSet:
    """Functionally independent polynomial invariants up to ``max_degree``.

    Candidates are taken degree by degree and kept when they raise the rank
    of the Jacobian at a seeded rational point (with a few retries at fresh
    points).  The search stops early once ``count`` invariants are found.
    """
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    if count is None:
        count = invariant_count(C)
    rng = random.Random(SEED)
    pts = random_points(rng, C.dim)
    point = next(pts)
    kept: list[Polynomial] = []
    dims = []
    for d in range(1, max_degree + 1):
        if len(kept) >= count:
            break
        cands = homogeneous_invariants(C, d)
        dims.append(len(cands))
        for p in cands:
            if len(kept) >= count:
                break
            if jacobian_rank(kept + [p], point) == len(kept) + 1:
                kept.append(p)
                continue
            for _ in range(INDEPENDENCE_RETRIES):
                fresh = next(pts)
                if jacobian_rank(kept + [p], fresh) == len(kept) + 1:
                    point = fresh
                    kept.append(p)
                    break
    for p in kept:
        for g in generators(C):
            if apply(g, p):
                raise KernelFault(f"solver returned a non-invariant: {p}")
    jr = jacobian_rank(kept, point)
    if jr != len(kept):
        raise KernelFault("independence certificate does not hold at the recorded point")
    return InvariantSet(tuple(kept), tuple(point), jr, count, max_degree, tuple(dims))


# ---------------------------------------------------------------------------
# semi-invariants
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Weight:
    components: tuple  # lambda(v_i) for each basis vector

    def __call__(self, v: Sequence) -> Fraction:
        return sum((a * b for a, b in zip(self.components, v)), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self.components)

    def vanishes_on(self, S: SubSpace) -> bool:
        return all(self(b) == 0 for b in S.basis)


@dataclass(frozen=True)
class SemiInvariant:
    poly: Polynomial
    weight: Weight

    def holds(self, C: StructureConstants) -> bool:
        return all(apply(g, self.poly) == self.poly.scale(lam) for g, lam in zip(generators(C), self.weight.components))


@dataclass
class SemiInvariantResult:
    items: list = field(default_factory=list)
    # per degree: number of eigenvalues (with multiplicity) that are not rational
    skipped: dict = field(default_factory=dict)

    def __iter__(self):
        return iter(self.items)

    def __len__(self):
        return len(self.items)


def _restrict(cols: list[dict], basis: list[dict]) -> list[list[Fraction]]:
    """Matrix of an operator on span(basis); basis must be in RREF."""
    pivots = [min(b) for b in basis]
    m = len(basis)
    M = [[Fraction(0)] * m for _ in range(m)]
    for s, b in enumerate(basis):
        img = _Graded.apply_cols(cols, b)
        rest = dict(img)
        for r, (p, bv) in enumerate(zip(pivots, basis)):
            c = rest.get(p)
            if not c:
                continue
            M[r][s] = c
            for k, v in bv.items():
                nv = rest.get(k, 0) - c * v
                if nv:
                    rest[k] = nv
                else:
                    rest.pop(k, None)
        if rest:
            raise KernelFault("operator does not preserve the subspace")
    return M


def _combine(coefs: Sequence[Fraction], basis: list[dict]) -> dict:
    out: dict = {}
    for a, b in zip(coefs, basis):
        if not a:
            continue
        for k, v in b.items():
            s = out.get(k, 0) + a * v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def homogeneous_semi_invariants(C: StructureConstants, d: int, derived: SubSpace | None = None) -> tuple[list[SemiInvariant], int]:
    n = C.dim
    G = _Graded(n, d)
    W = derived if derived is not None else derived_algebra(C)
    rows = []
    for w in W.basis:
        rows.extend(G.rows(G.columns(_field_matrix(C, w))))
    space = kernel_sparse(rows, len(G.monos))
    comp = W.complement_indices()
    skipped = 0
    pieces = [(space, {})] if space else []
    for c in comp:
        cols = G.columns(C.table[c])
        nxt = []
        for basis, mu in pieces:
            M = _restrict(cols, basis)
            cp = charpoly(M)
            roots = rational_roots(cp)
            skipped += len(cp) - 1 - len(roots)
            for lam in sorted(set(roots)):
                shifted = [[M[i][j] - (lam if i == j else 0) for j in range(len(M))] for i in range(len(M))]
                ker = kernel_sparse([{j: v for j, v in enumerate(r) if v} for r in shifted], len(M))
                vecs = [_combine([k.get(j, Fraction(0)) for j in range(len(M))], basis) for k in ker]
                eig = list(rref_sparse(vecs).values())
                nxt.append((eig, {**mu, c: lam}))
        pieces = nxt
    out = []
    for basis, mu in pieces:
        lam = [Fraction(0)] * n
        for c in comp:
            lam[c] = mu[c]
        for w in W.basis:
            p = next(j for j, x in enumerate(w) if x)
            lam[p] = -sum((w[c] * mu[c] for c in comp), Fraction(0))
        weight = Weight(tuple(lam))
        for b in basis:
            out.append(SemiInvariant(G.poly(b), weight))
    out.sort(key=lambda s: G.index[s.poly.leading_term()[0]])
    return out, skipped


def semi_invariants(C: StructureConstants, max_degree: int) -> SemiInvariantResult:
    """Homogeneous semi-invariants with rational weights, degrees 1..max_degree.

    Each joint eigenspace is reported through its echelon basis, one
    (polynomial, weight) pair per basis vector.
    """
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    W = derived_algebra(C)
    result = SemiInvariantResult()
    for d in range(1, max_degree + 1):
        items, skipped = homogeneous_semi_invariants(C, d, W)
        result.items.extend(items)
        if skipped:
            result.skipped[d] = skipped
    return result


def quotient_invariant_check(C: StructureConstants, p1: Polynomial, p2: Polynomial) -> bool:
    """True iff p1/p2 is annihilated by every generator (quotient rule numerator vanishes)."""
    if p2.is_zero():
        raise ZeroDivisionError("denominator polynomial is zero")
    if p1.n != C.dim or p2.n != C.dim:
        raise DimensionError("polynomials must live in dim(L) variables")
    return all(apply(g, p1) * p2 == p1 * apply(g, p2) for g in generators(C))


# ---------------------------------------------------------------------------
# zero-weight certificate
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ZeroWeightCertificate:
    ok: bool
    reasons: tuple  # per basis direction: tuple of reason strings
    nilpotent_radical_vectors: tuple
    uncovered: tuple = ()  # directions outside [L,L] + R, only when not ok

    def as_dict(self, labels: Sequence[str]) -> dict:
        return {
            "ok": self.ok,
            "reasons": {labels[i]: list(r) for i, r in enumerate(self.reasons)},
            "uncovered": [labels[i] for i in self.uncovered],
        }


def zero_weight_certificate(C: StructureConstants) -> ZeroWeightCertificate:
    """Show that every weight of S(L) vanishes when the radical is nilpotent.

    A weight kills [L, L] and kills every x with ad x nilpotent, so it is
    zero as soon as [L, L] together with the radical spans L.
    """
    R = radical(C)
    if not is_nilpotent_subalgebra(C, R):
        raise PreconditionError("radical is not nilpotent")
    D = derived_algebra(C)
    for r in R.basis:
        if not is_nilpotent_matrix(adjoint_matrix(C, r)):
            raise KernelFault("radical element with non-nilpotent adjoint")
    total = D + R
    reasons = []
    uncovered = []
    for i in range(C.dim):
        e = C.basis_vector(i)
        why = []
        if D.contains(e):
            why.append("derived")
        if R.contains(e):
            why.append("nilpotent-radical")
        if not why:
            if total.contains(e):
                why.append("derived+radical")
            else:
                uncovered.append(i)
        reasons.append(tuple(why))
    return ZeroWeightCertificate(not uncovered, tuple(reasons), R.basis, tuple(uncovered))

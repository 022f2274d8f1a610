"""Structure theory of a Lie algebra given by structure constants over Q.

Vectors are tuples of Fractions in the coordinates of the chosen basis.
Indices are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .exact import (
    DimensionError,
    Matrix,
    identity,
    matmul,
    nullspace,
    rank,
    rref,
    solve_in_basis,
    to_rational,
    trace,
)

Vector = tuple


class KernelFault(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class StructureConstants:
    """C_ij^k with [v_i, v_j] = sum_k C_ij^k v_k, stored for i < j only."""

    dim: int
    labels: tuple
    constants: Mapping  # (i, j, k) -> Fraction, i < j

    def __post_init__(self):
        clean = {}
        for (i, j, k), c in dict(self.constants).items():
            for idx in (i, j, k):
                if not 0 <= idx < self.dim:
                    raise IndexError(f"index {idx} out of range for dimension {self.dim}")
            if i == j:
                raise ValueError(f"diagonal bracket [{i},{i}] is forced to zero")
            c = to_rational(c)
            if i > j:
                i, j, c = j, i, -c
            if c:
                clean[(i, j, k)] = clean.get((i, j, k), Fraction(0)) + c
        object.__setattr__(self, "constants", {key: v for key, v in sorted(clean.items()) if v})
        labels = tuple(self.labels) if self.labels else tuple(f"e{k + 1}" for k in range(self.dim))
        if len(labels) != self.dim:
            raise ValueError("number of labels must equal the dimension")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_brackets(cls, dim: int, brackets: Mapping, labels: Sequence[str] = ()) -> "StructureConstants":
        """Build from ``{(i, j): {k: c}}``; either order of (i, j) is accepted."""
        consts = {}
        for (i, j), coeffs in brackets.items():
            for k, c in coeffs.items():
                consts[(i, j, k)] = c
        return cls(dim, tuple(labels), consts)

    def __hash__(self):
        return hash((self.dim, self.labels, tuple(self.constants.items())))

    @cached_property
    def table(self) -> list:
        """Dense table: table[i][j] is the tuple of coordinates of [v_i, v_j]."""
        n = self.dim
        t = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for (i, j, k), c in self.constants.items():
            t[i][j][k] += c
            t[j][i][k] -= c
        return [[tuple(t[i][j]) for j in range(n)] for i in range(n)]

    def c(self, i: int, j: int, k: int) -> Fraction:
        return self.table[i][j][k]

    def basis_vector(self, i: int) -> Vector:
        return tuple(Fraction(int(k == i)) for k in range(self.dim))


@dataclass(frozen=True)
class JacobiViolation:
    triple: tuple  # (i, j, l), 0-based, i < j < l
    cyclic_sum: Vector

    def __str__(self):
        i, j, l = self.triple
        return f"Jacobi identity fails for ({i + 1}, {j + 1}, {l + 1}): cyclic sum {list(map(str, self.cyclic_sum))}"


def _vec(v: Iterable, n: int) -> Vector:
    v = tuple(to_rational(x) for x in v)
    if len(v) != n:
        raise DimensionError(f"vector has length {len(v)}, expected {n}")
    return v


def bracket(C: StructureConstants, u: Sequence, v: Sequence) -> Vector:
    n = C.dim
    u, v = _vec(u, n), _vec(v, n)
    out = [Fraction(0)] * n
    for i, a in enumerate(u):
        if not a:
            continue
        row = C.table[i]
        for j, b in enumerate(v):
            if not b or i == j:
                continue
            ab = a * b
            for k, c in enumerate(row[j]):
                if c:
                    out[k] += ab * c
    return tuple(out)


def validate(C: StructureConstants) -> JacobiViolation | None:
    """Check the Jacobi identity on all basis triples; None means valid."""
    n = C.dim
    e = [C.basis_vector(i) for i in range(n)]
    for i, j, l in combinations(range(n), 3):
        s = [
            a + b + c
            for a, b, c in zip(
                bracket(C, bracket(C, e[i], e[j]), e[l]),
                bracket(C, bracket(C, e[j], e[l]), e[i]),
                bracket(C, bracket(C, e[l], e[i]), e[j]),
            )
        ]
        if any(s):
            return JacobiViolation((i, j, l), tuple(s))
    return None


@dataclass(frozen=True)
class SubSpace:
    """Subspace of Q^n with an RREF basis, so equality is structural."""

    n: int
    basis: tuple = ()

    @classmethod
    def span(cls, n: int, vectors: Iterable[Sequence]) -> "SubSpace":
        vecs = [_vec(v, n) for v in vectors]
        if not vecs:
            return cls(n, ())
        return cls(n, tuple(tuple(r) for r in rref(vecs, n)))

    @classmethod
    def whole(cls, n: int) -> "SubSpace":
        return cls(n, tuple(tuple(r) for r in identity(n)))

    @classmethod
    def zero(cls, n: int) -> "SubSpace":
        return cls(n, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def contains(self, v: Sequence) -> bool:
        return solve_in_basis(self.basis, _vec(v, self.n)) is not None

    def coordinates(self, v: Sequence) -> list[Fraction] | None:
        return solve_in_basis(self.basis, _vec(v, self.n))

    def issubspace(self, other: "SubSpace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def __add__(self, other: "SubSpace") -> "SubSpace":
        return SubSpace.span(self.n, list(self.basis) + list(other.basis))

    def intersection(self, other: "SubSpace") -> "SubSpace":
        if not self.basis or not other.basis:
            return SubSpace.zero(self.n)
        # a.x = b.y  ->  kernel of [A^T | -B^T]
        cols = list(self.basis) + [tuple(-x for x in b) for b in other.basis]
        rows = [[col[r] for col in cols] for r in range(self.n)]
        ker = nullspace(rows, len(cols))
        vecs = []
        for k in ker:
            vecs.append(tuple(sum((k[a] * self.basis[a][r] for a in range(self.dim)), Fraction(0)) for r in range(self.n)))
        return SubSpace.span(self.n, vecs)

    def complement_indices(self) -> list[int]:
        """Non-pivot coordinates; their unit vectors span a complement."""
        pivots = {next(j for j, x in enumerate(b) if x) for b in self.basis}
        return [j for j in range(self.n) if j not in pivots]


def bracket_subspaces(C: StructureConstants, U: SubSpace, V: SubSpace) -> SubSpace:
    return SubSpace.span(C.dim, [bracket(C, u, v) for u in U.basis for v in V.basis])


def derived_algebra(C: StructureConstants) -> SubSpace:
    L = SubSpace.whole(C.dim)
    return bracket_subspaces(C, L, L)


def series(C: StructureConstants, kind: str = "derived", start: SubSpace | None = None) -> list[SubSpace]:
    """Derived or lower central series, ending at the first repeated dimension.

    ``start`` restricts to a subalgebra (e.g. the radical); the default is L.
    The returned chain includes the stable term once.
    """
    top = start if start is not None else SubSpace.whole(C.dim)
    chain = [top]
    while True:
        prev = chain[-1]
        if kind == "derived":
            nxt = bracket_subspaces(C, prev, prev)
        elif kind == "lower_central":
            nxt = bracket_subspaces(C, top, prev)
        else:
            raise ValueError(f"unknown series kind {kind!r}")
        if nxt.dim == prev.dim:
            return chain
        chain.append(nxt)


def adjoint_matrix(C: StructureConstants, v: Sequence) -> Matrix:
    """Matrix of u -> [v, u]; column j is [v, e_j]."""
    n = C.dim
    v = _vec(v, n)
    cols = [bracket(C, v, C.basis_vector(j)) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def is_nilpotent_matrix(M: Matrix) -> bool:
    n = len(M)
    if any(len(r) != n for r in M):
        raise DimensionError("matrix is not square")
    if n == 0:
        return True
    P = [list(r) for r in M]
    # M nilpotent iff M^n = 0; square up to the next power of two >= n
    k = 1
    while k < n:
        P = matmul(P, P)
        k *= 2
    return not any(any(r) for r in P)


def killing_form(C: StructureConstants) -> Matrix:
    n = C.dim
    ads = [adjoint_matrix(C, C.basis_vector(i)) for i in range(n)]
    K = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            K[i][j] = K[j][i] = trace(matmul(ads[i], ads[j]))
    return K


def _killing_pairing(K: Matrix, u: Sequence, v: Sequence) -> Fraction:
    n = len(K)
    return sum((u[i] * K[i][j] * v[j] for i in range(n) for j in range(n) if u[i] and v[j]), Fraction(0))


def is_subalgebra(C: StructureConstants, S: SubSpace) -> bool:
    return bracket_subspaces(C, S, S).issubspace(S)


def is_ideal(C: StructureConstants, I: SubSpace) -> bool:
    return bracket_subspaces(C, SubSpace.whole(C.dim), I).issubspace(I)


def restricted_killing_form(C: StructureConstants, S: SubSpace) -> Matrix:
    """Killing form of the subalgebra S as a Lie algebra in its own right."""
    m = S.dim
    ads = []
    for a in S.basis:
        cols = []
        for b in S.basis:
            coords = S.coordinates(bracket(C, a, b))
            if coords is None:
                raise ValueError("subspace is not closed under the bracket")
            cols.append(coords)
        ads.append([[cols[j][i] for j in range(m)] for i in range(m)])
    return [[trace(matmul(ads[i], ads[j])) for j in range(m)] for i in range(m)]


def quotient_killing_form(C: StructureConstants, I: SubSpace) -> Matrix:
    """Killing form of L/I, using unit vectors on non-pivot coordinates as a basis."""
    comp = I.complement_indices()
    full = SubSpace.span(C.dim, list(I.basis) + [C.basis_vector(j) for j in comp])
    if full.dim != C.dim:
        raise KernelFault("complement construction failed")

    def project(v):
        # coordinates along the complement after discarding the I component
        rest = list(v)
        for b in I.basis:
            p = next(j for j, x in enumerate(b) if x)
            c = rest[p]
            if c:
                rest = [r - c * x for r, x in zip(rest, b)]
        return [rest[j] for j in comp]

    m = len(comp)
    ads = []
    for a in comp:
        cols = [project(bracket(C, C.basis_vector(a), C.basis_vector(b))) for b in comp]
        ads.append([[cols[j][i] for j in range(m)] for i in range(m)])
    return [[trace(matmul(ads[i], ads[j])) for j in range(m)] for i in range(m)]


def radical(C: StructureConstants) -> SubSpace:
    """Radical as the Killing-orthogonal complement of [L, L].

    The result is checked to be a solvable ideal with semisimple quotient;
    a failed check raises :class:`KernelFault`.
    """
    n = C.dim
    K = killing_form(C)
    D = derived_algebra(C)
    rows = [[sum((w[i] * K[i][j] for i in range(n)), Fraction(0)) for j in range(n)] for w in D.basis]
    R = SubSpace.span(n, nullspace(rows, n)) if rows else SubSpace.whole(n)
    if not is_ideal(C, R):
        raise KernelFault("computed radical is not an ideal")
    if series(C, "derived", R)[-1].dim != 0:
        raise KernelFault("computed radical is not solvable")
    Q = quotient_killing_form(C, R)
    if Q and rank(Q) != len(Q):
        raise KernelFault("quotient by the computed radical is not semisimple")
    return R


def is_nilpotent_subalgebra(C: StructureConstants, S: SubSpace) -> bool:
    return series(C, "lower_central", S)[-1].dim == 0


def is_abelian_subalgebra(C: StructureConstants, S: SubSpace) -> bool:
    return bracket_subspaces(C, S, S).dim == 0


@dataclass(frozen=True)
class LeviDecomposition:
    levi: SubSpace
    radical: SubSpace


class LeviRejected(ValueError):
    """A proposed Levi factor fails one of the defining conditions."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


def verify_levi(C: StructureConstants, S_basis: Sequence[Sequence]) -> LeviDecomposition:
    """Accept ``span(S_basis)`` as a Levi factor or raise :class:`LeviRejected`."""
    n = C.dim
    vecs = [_vec(v, n) for v in S_basis]
    S = SubSpace.span(n, vecs)
    if S.dim != len(vecs):
        raise LeviRejected("Levi basis vectors are linearly dependent")
    if not is_subalgebra(C, S):
        raise LeviRejected("span of the Levi basis is not a subalgebra")
    KS = restricted_killing_form(C, S)
    if KS and rank(KS) != len(KS):
        raise LeviRejected("Killing form of the Levi subalgebra is degenerate")
    R = radical(C)
    if (S + R).dim != S.dim + R.dim:
        raise LeviRejected("Levi subalgebra meets the radical nontrivially")
    if S.dim + R.dim != n:
        raise LeviRejected(f"dimensions do not add up: {S.dim} + {R.dim} != {n}")
    return LeviDecomposition(S, R)


def fixed_subspace(D: LeviDecomposition, C: StructureConstants) -> SubSpace:
    """Vectors of the radical killed by every element of the Levi factor."""
    n = C.dim
    R = D.radical
    if R.dim == 0:
        return SubSpace.zero(n)
    rows = []
    for s in D.levi.basis:
        images = [bracket(C, s, r) for r in R.basis]
        for k in range(n):
            rows.append([img[k] for img in images])
    if not rows:
        return R
    ker = nullspace(rows, R.dim)
    return SubSpace.span(n, [tuple(sum((c * r[k] for c, r in zip(coef, R.basis)), Fraction(0)) for k in range(n)) for coef in ker])


@dataclass(frozen=True)
class TheoremACheck:
    is_perfect: bool
    contained: bool
    agree: bool
    direct_sum: bool
    dim_radical: int
    dim_fixed: int
    dim_levi_radical: int

    def as_dict(self) -> dict:
        return {
            "is_perfect": self.is_perfect,
            "contained": self.contained,
            "agree": self.agree,
            "direct_sum": self.direct_sum,
            "dim_radical": self.dim_radical,
            "dim_fixed": self.dim_fixed,
            "dim_levi_radical": self.dim_levi_radical,
        }


def is_perfect(C: StructureConstants) -> bool:
    return derived_algebra(C).dim == C.dim


def theorem_a_check(D: LeviDecomposition, C: StructureConstants) -> TheoremACheck:
    """Perfectness versus containment of the fixed radical vectors in [R, R].

    Also reports whether R splits as the direct sum of its fixed subspace and
    [S, R].
    """
    R = D.radical
    RS = fixed_subspace(D, C)
    SR = bracket_subspaces(C, D.levi, R)
    RR = bracket_subspaces(C, R, R)
    perfect = is_perfect(C)
    contained = RS.issubspace(RR)
    direct = R.dim == RS.dim + SR.dim and (RS + SR).dim == R.dim and (RS + SR).issubspace(R)
    return TheoremACheck(perfect, contained, perfect == contained, direct, R.dim, RS.dim, SR.dim)


@dataclass(frozen=True)
class StructureReport:
    is_solvable: bool
    is_nilpotent: bool
    radical: SubSpace
    radical_is_nilpotent: bool
    radical_is_abelian: bool
    is_perfect: bool
    is_semisimple: bool
    derived_series_dims: tuple
    lower_central_series_dims: tuple
    levi: LeviDecomposition | None = field(default=None)

    def as_dict(self) -> dict:
        return {
            "is_solvable": self.is_solvable,
            "is_nilpotent": self.is_nilpotent,
            "is_perfect": self.is_perfect,
            "is_semisimple": self.is_semisimple,
            "radical_dim": self.radical.dim,
            "radical_basis": [[str(x) for x in b] for b in self.radical.basis],
            "radical_is_nilpotent": self.radical_is_nilpotent,
            "radical_is_abelian": self.radical_is_abelian,
            "derived_series_dims": list(self.derived_series_dims),
            "lower_central_series_dims": list(self.lower_central_series_dims),
            "levi_dim": None if self.levi is None else self.levi.levi.dim,
        }


def structure_report(C: StructureConstants, S_basis: Sequence[Sequence] | None = None) -> StructureReport:
    derived = series(C, "derived")
    lower = series(C, "lower_central")
    R = radical(C)
    levi = verify_levi(C, S_basis) if S_basis is not None else None
    return StructureReport(
        is_solvable=derived[-1].dim == 0,
        is_nilpotent=lower[-1].dim == 0,
        radical=R,
        radical_is_nilpotent=is_nilpotent_subalgebra(C, R),
        radical_is_abelian=is_abelian_subalgebra(C, R),
        is_perfect=is_perfect(C),
        is_semisimple=R.dim == 0,
        derived_series_dims=tuple(s.dim for s in derived),
        lower_central_series_dims=tuple(s.dim for s in lower),
        levi=levi,
    )

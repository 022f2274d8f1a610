"""Exact arithmetic over the rationals.

Rationals are :class:`fractions.Fraction`.  Polynomials are sparse maps from
exponent tuples to coefficients; matrices are plain lists of rows.  Every
function here is pure.

Coordinate indices are 0-based throughout the Python API.
"""

from __future__ import annotations

import heapq
import math
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence

Rational = Fraction
Monomial = tuple  # tuple[int, ...] of exponents
Matrix = list  # list[list[Fraction]]


class DimensionError(ValueError):
    """Operands live in spaces of different dimension."""


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-3/4"`` to a Fraction.

    Floats are rejected: nothing in this package is allowed to be inexact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def grlex_key(mono: Monomial) -> tuple:
    """Sort key for graded lexicographic order with x1 > x2 > ... > xn."""
    return (sum(mono), mono)


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    """All exponent tuples of length ``n`` and total degree ``d``, grlex-descending."""
    out: list[Monomial] = []

    def rec(prefix: list[int], left: int, slots: int) -> None:
        if slots == 1:
            out.append(tuple(prefix + [left]))
            return
        for e in range(left, -1, -1):
            rec(prefix + [e], left - e, slots - 1)

    if n == 0:
        return [()] if d == 0 else []
    rec([], d, n)
    return out


class Polynomial:
    """Element of Q[x_1, ..., x_n], stored sparsely.

    Instances are immutable.  ``terms`` never contains zero coefficients and
    iteration runs in descending graded-lex order.
    """

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Monomial, object] | None = None):
        self.n = n
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                mono = tuple(mono)
                if len(mono) != n:
                    raise DimensionError(f"monomial {mono} does not have length {n}")
                if any(e < 0 for e in mono):
                    raise ValueError(f"negative exponent in {mono}")
                c = to_rational(c)
                if c:
                    clean[mono] = clean.get(mono, Fraction(0)) + c
            clean = {m: c for m, c in clean.items() if c}
        self._terms = dict(sorted(clean.items(), key=lambda t: grlex_key(t[0]), reverse=True))
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "Polynomial":
        # trusted path: terms already clean
        p = cls.__new__(cls)
        p.n = n
        p._terms = dict(sorted(terms.items(), key=lambda t: grlex_key(t[0]), reverse=True))
        p._hash = None
        return p

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, c) -> "Polynomial":
        return cls(n, {(0,) * n: c})

    @classmethod
    def var(cls, n: int, j: int) -> "Polynomial":
        if not 0 <= j < n:
            raise IndexError(f"coordinate index {j} out of range for n={n}")
        mono = [0] * n
        mono[j] = 1
        return cls._raw(n, {tuple(mono): Fraction(1)})

    @classmethod
    def linear(cls, coeffs: Sequence) -> "Polynomial":
        """The linear form sum_k coeffs[k] * x_k."""
        n = len(coeffs)
        terms = {}
        for k, c in enumerate(coeffs):
            mono = [0] * n
            mono[k] = 1
            terms[tuple(mono)] = c
        return cls(n, terms)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def coeff(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def leading_term(self) -> tuple[Monomial, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return next(iter(self._terms.items()))

    def monic(self) -> "Polynomial":
        """Scale so the grlex-leading coefficient is 1."""
        if not self._terms:
            return self
        return self.scale(1 / self.leading_term()[1])

    def _check(self, other: "Polynomial") -> None:
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.n != self.n:
            raise DimensionError(f"dimension mismatch: {self.n} vs {other.n}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.n, to_rational(other))

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(to_rational(other))
        self._check(other)
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._raw(self.n, out)

    def __rmul__(self, other) -> "Polynomial":
        return self.scale(to_rational(other))

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = to_rational(c)
        if not c:
            return Polynomial.zero(self.n)
        return Polynomial._raw(self.n, {m: v * c for m, v in self._terms.items()})

    def diff(self, j: int) -> "Polynomial":
        """Partial derivative with respect to x_j (0-based)."""
        if not 0 <= j < self.n:
            raise IndexError(f"coordinate index {j} out of range for n={self.n}")
        out = {}
        for m, c in self._terms.items():
            e = m[j]
            if e:
                out[m[:j] + (e - 1,) + m[j + 1:]] = c * e
        return Polynomial._raw(self.n, out)

    def __call__(self, point: Sequence) -> Fraction:
        return self.eval(point)

    def eval(self, point: Sequence) -> Fraction:
        if len(point) != self.n:
            raise DimensionError(f"point has length {len(point)}, expected {self.n}")
        pt = [to_rational(v) for v in point]
        total = Fraction(0)
        for m, c in self._terms.items():
            v = c
            for x, e in zip(pt, m):
                if e:
                    v *= x**e
            total += v
        return total

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        """Quotient of an exact division; raises ArithmeticError on a remainder."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lm, lc = divisor.leading_term()
        rest = self
        quotient: dict = {}
        while rest._terms:
            m, c = rest.leading_term()
            q = tuple(a - b for a, b in zip(m, lm))
            if any(e < 0 for e in q):
                raise ArithmeticError("division is not exact")
            qc = c / lc
            quotient[q] = qc
            rest = rest - Polynomial._raw(self.n, {q: qc}) * divisor
        return Polynomial._raw(self.n, quotient)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.n, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def format(self, labels: Sequence[str] | None = None) -> str:
        """Human-readable form, e.g. ``x1*x2 + 1/4*x3^2``."""
        if labels is None:
            labels = [f"x{k + 1}" for k in range(self.n)]
        if not self._terms:
            return "0"
        parts = []
        for m, c in self._terms.items():
            factors = []
            for lab, e in zip(labels, m):
                if e == 1:
                    factors.append(lab)
                elif e > 1:
                    factors.append(f"{lab}^{e}")
            body = "*".join(factors)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not body:
                term = str(a)
            elif a == 1:
                term = body
            else:
                term = f"{a}*{body}"
            parts.append((sign, term))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, term in parts[1:]:
            s += f" {sign} {term}"
        return s

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Polynomial({self.n}, {self.format()!r})"


def poly_arith(a: Polynomial, b: Polynomial | None, op: str, c=None) -> Polynomial:
    """Dispatch helper: ``op`` is one of add, sub, mul, scale."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(c)
    raise ValueError(f"unknown op {op!r}")


def poly_diff(p: Polynomial, j: int) -> Polynomial:
    return p.diff(j)


def poly_eval(p: Polynomial, point: Sequence) -> Fraction:
    return p.eval(point)


# ---------------------------------------------------------------------------
# matrices over Q
# ---------------------------------------------------------------------------


def as_matrix(rows: Iterable[Iterable]) -> Matrix:
    m = [[to_rational(v) for v in row] for row in rows]
    if m and len({len(r) for r in m}) != 1:
        raise ValueError("matrix rows have unequal length")
    return m


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> Matrix:
    return [[Fraction(0)] * c for _ in range(r)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise DimensionError("inner dimensions differ")
    bt = list(zip(*b)) if b else []
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def bareiss_rank(
    rows: Sequence[Sequence],
    divide: Callable = None,
    is_zero: Callable = None,
) -> int:
    """Rank by fraction-free (Bareiss) elimination with full pivoting.

    Works over any integral domain whose elements support ``*`` and ``-``;
    ``divide(a, b)`` must return the exact quotient.  Rational input is
    scaled row-wise to integers first.
    """
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    if divide is None:
        m = [_clear_denominators(r) for r in m]
        divide = lambda a, b: a // b  # noqa: E731
    if is_zero is None:
        is_zero = lambda v: not v  # noqa: E731
    nr, nc = len(m), len(m[0])
    prev = None
    k = 0
    while k < min(nr, nc):
        piv = next(((i, j) for i in range(k, nr) for j in range(k, nc) if not is_zero(m[i][j])), None)
        if piv is None:
            break
        i, j = piv
        m[k], m[i] = m[i], m[k]
        if j != k:
            for row in m:
                row[k], row[j] = row[j], row[k]
        p = m[k][k]
        for i in range(k + 1, nr):
            for j in range(k + 1, nc):
                v = p * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = v if prev is None else divide(v, prev)
            m[i][k] = m[i][k] * 0
        prev = p
        k += 1
    return k


def bareiss_det(rows: Sequence[Sequence], divide: Callable, one, zero):
    """Determinant of a square matrix over an integral domain (fraction-free)."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return zero
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def _clear_denominators(row: Sequence) -> list[int]:
    row = [to_rational(v) for v in row]
    lcm = 1
    for v in row:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    return [int(v * lcm) for v in row]


def rank(rows: Sequence[Sequence]) -> int:
    """Exact rank of a rational matrix."""
    return bareiss_rank(rows)


def _echelon_sparse(rows: Iterable[Mapping[int, Fraction]]) -> dict[int, dict[int, Fraction]]:
    """Incremental row echelon form on sparse rows.

    Returns pivot column -> row (leading entry 1 at the pivot, not yet
    back-reduced).
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    for raw in rows:
        row = {c: v for c, v in raw.items() if v}
        if not row:
            continue
        heap = list(row)
        heapq.heapify(heap)
        seen = set()
        lead = None
        while heap:
            c = heapq.heappop(heap)
            if c in seen or c not in row:
                continue
            seen.add(c)
            prow = pivots.get(c)
            if prow is None:
                lead = c
                break
            f = row[c]
            for pc, pv in prow.items():
                nv = row.get(pc, 0) - f * pv
                if nv:
                    if pc not in row:
                        heapq.heappush(heap, pc)
                    row[pc] = nv
                else:
                    row.pop(pc, None)
        if lead is None:
            continue
        # lead is the smallest remaining column only if everything smaller got eliminated
        lead = min(row)
        inv = 1 / row[lead]
        pivots[lead] = {c: v * inv for c, v in row.items()}
    return pivots


def _back_reduce(pivots: dict[int, dict[int, Fraction]]) -> dict[int, dict[int, Fraction]]:
    order = sorted(pivots, reverse=True)
    reduced: dict[int, dict[int, Fraction]] = {}
    for p in order:
        row = dict(pivots[p])
        for q in sorted(c for c in row if c != p and c in reduced):
            f = row.get(q)
            if not f:
                continue
            for c, v in reduced[q].items():
                nv = row.get(c, 0) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        reduced[p] = row
    return dict(sorted(reduced.items()))


def rref_sparse(rows: Iterable[Mapping[int, Fraction]]) -> dict[int, dict[int, Fraction]]:
    """Reduced row echelon form of sparse rows, keyed and sorted by pivot column."""
    return _back_reduce(_echelon_sparse(rows))


def _dense_to_sparse(rows: Iterable[Sequence]) -> list[dict[int, Fraction]]:
    return [{j: to_rational(v) for j, v in enumerate(r) if v} for r in rows]


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Nonzero rows of the reduced row echelon form."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    red = rref_sparse(_dense_to_sparse(rows))
    return [[r.get(j, Fraction(0)) for j in range(ncols)] for r in red.values()]


def kernel_sparse(rows: Iterable[Mapping[int, Fraction]], ncols: int) -> list[dict[int, Fraction]]:
    """Right kernel of a sparse matrix, as an echelonized basis with leading ones."""
    red = rref_sparse(rows)
    free = [c for c in range(ncols) if c not in red]
    raw = []
    for f in free:
        v = {f: Fraction(1)}
        for p, row in red.items():
            x = row.get(f)
            if x:
                v[p] = -x
        raw.append(v)
    return list(rref_sparse(raw).values())


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Basis of the right kernel in reduced echelon form.

    Each basis vector has first nonzero entry 1; vectors are ordered by pivot.
    ``ncols`` is needed only when ``rows`` is empty.
    """
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for a matrix with no rows")
        ncols = len(rows[0])
    basis = kernel_sparse(_dense_to_sparse(rows), ncols)
    return [[v.get(j, Fraction(0)) for j in range(ncols)] for v in basis]


def solve_in_basis(basis_rref: Sequence[Sequence[Fraction]], v: Sequence) -> list[Fraction] | None:
    """Coordinates of ``v`` in an RREF basis, or None if ``v`` is outside the span."""
    coords = []
    rest = [to_rational(x) for x in v]
    for b in basis_rref:
        p = next(j for j, x in enumerate(b) if x)
        c = rest[p]
        coords.append(c)
        if c:
            rest = [r - c * x for r, x in zip(rest, b)]
    if any(rest):
        return None
    return coords


def charpoly(a: Matrix) -> list[Fraction]:
    """Characteristic polynomial det(tI - A), coefficients highest degree first.

    Hessenberg reduction followed by the usual recurrence; O(n^3) field ops.
    """
    n = len(a)
    h = [[to_rational(v) for v in row] for row in a]
    for m in range(1, n - 1):
        i = next((i for i in range(m, n) if h[i][m - 1]), None)
        if i is None:
            continue
        if i != m:
            h[i], h[m] = h[m], h[i]
            for row in h:
                row[i], row[m] = row[m], row[i]
        t = h[m][m - 1]
        for i in range(m + 1, n):
            u = h[i][m - 1] / t
            if not u:
                continue
            for j in range(n):
                h[i][j] -= u * h[m][j]
            for row in h:
                row[m] += u * row[i]
    # p_k as ascending coefficient lists
    polys: list[list[Fraction]] = [[Fraction(1)]]
    for m in range(1, n + 1):
        prev = polys[m - 1]
        cur = [Fraction(0)] + prev  # t * p_{m-1}
        hm = h[m - 1][m - 1]
        for k, c in enumerate(prev):
            cur[k] -= hm * c
        t = Fraction(1)
        for i in range(1, m):
            t *= h[m - i][m - i - 1]
            coef = t * h[m - i - 1][m - 1]
            if coef:
                for k, c in enumerate(polys[m - i - 1]):
                    cur[k] -= coef * c
        polys.append(cur)
    return list(reversed(polys[n]))


def _divisors(k: int) -> list[int]:
    k = abs(k)
    small, large = [], []
    d = 1
    while d * d <= k:
        if k % d == 0:
            small.append(d)
            if d * d != k:
                large.append(k // d)
        d += 1
    return small + large[::-1]


def _horner(coeffs: Sequence[Fraction], t: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * t + c
    return acc


def _deflate(coeffs: list[Fraction], r: Fraction) -> list[Fraction]:
    out = [coeffs[0]]
    for c in coeffs[1:-1]:
        out.append(c + out[-1] * r)
    return out


def rational_roots(coeffs: Sequence) -> list[Fraction]:
    """All rational roots, with multiplicity, of a univariate polynomial.

    ``coeffs`` lists coefficients from the highest degree down.  Roots come
    back sorted ascending.
    """
    cs = [to_rational(c) for c in coeffs]
    while cs and not cs[0]:
        cs.pop(0)
    if not cs:
        raise ValueError("the zero polynomial has no well-defined roots")
    roots: list[Fraction] = []
    while len(cs) > 1 and not cs[-1]:
        roots.append(Fraction(0))
        cs.pop()
    if len(cs) == 1:
        return sorted(roots)
    ints = _clear_denominators(cs)
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    ints = [v // g for v in ints]
    candidates = set()
    for p in _divisors(ints[-1]):
        for q in _divisors(ints[0]):
            candidates.add(Fraction(p, q))
            candidates.add(Fraction(-p, q))
    work = [Fraction(v) for v in ints]
    for r in sorted(candidates):
        while len(work) > 1 and _horner(work, r) == 0:
            roots.append(r)
            work = _deflate(work, r)
    return sorted(roots)

"""Independent sympy-based oracles; nothing here touches liecas internals."""

import itertools
from fractions import Fraction

import sympy as sp


def _sym(C):
    xs = sp.symbols(f"x1:{C.dim + 1}")
    n = C.dim
    c = [[[sp.Rational(C.c(i, j, k).numerator, C.c(i, j, k).denominator) for k in range(n)] for j in range(n)] for i in range(n)]
    return xs, c


def minor_rank(C):
    """Generic rank of A(x) as the size of the largest nonvanishing minor."""
    xs, c = _sym(C)
    n = C.dim
    A = sp.Matrix(n, n, lambda i, j: sum(c[i][j][k] * xs[k] for k in range(n)))
    for k in range(n, 0, -1):
        for rows in itertools.combinations(range(n), k):
            for cols in itertools.combinations(range(n), k):
                if sp.expand(A.extract(list(rows), list(cols)).det()) != 0:
                    return k
    return 0


def kernel_dim(C, d):
    """Dimension of degree-d invariants by dense enumeration of the linear system."""
    xs, c = _sym(C)
    n = C.dim
    exps = [e for e in itertools.product(range(d + 1), repeat=n) if sum(e) == d]
    a = sp.symbols(f"a0:{len(exps)}")
    p = sum(ak * sp.Mul(*[x**k for x, k in zip(xs, e)]) for ak, e in zip(a, exps))
    eqs = []
    for i in range(n):
        vp = sp.expand(sum(c[i][j][k] * xs[k] * sp.diff(p, xs[j]) for j in range(n) for k in range(n)))
        if vp != 0:
            eqs.extend(sp.Poly(vp, *xs).coeffs())
    if not eqs:
        return len(exps)
    M, _ = sp.linear_eq_to_matrix(eqs, a)
    return len(exps) - M.rank()


def to_sympy(p, xs):
    return sum(sp.Rational(cf.numerator, cf.denominator) * sp.Mul(*[x**k for x, k in zip(xs, m)]) for m, cf in p.items())

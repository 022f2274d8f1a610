"""PBW normal form in U(L), symmetrization S(L) -> U(L), centrality tests.

A PBW monomial is an exponent tuple read as x_1^a_1 ... x_n^a_n in basis
order.  Products are straightened with x_j x_i = x_i x_j + [x_j, x_i] for
j > i.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Mapping, Sequence

from .exact import DimensionError, Polynomial, grlex_key, to_rational
from .liealg import StructureConstants


class PBWElement:
    """Finite linear combination of ordered PBW monomials."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping | None = None):
        self.n = n
        clean: dict = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != n:
                raise DimensionError(f"PBW monomial {mono} does not have length {n}")
            c = to_rational(c)
            if c:
                clean[mono] = clean.get(mono, Fraction(0)) + c
        self._terms = dict(
            sorted(((m, c) for m, c in clean.items() if c), key=lambda t: grlex_key(t[0]), reverse=True)
        )

    @classmethod
    def zero(cls, n: int) -> "PBWElement":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "PBWElement":
        return cls(n, {(0,) * n: 1})

    @classmethod
    def gen(cls, n: int, i: int) -> "PBWElement":
        mono = [0] * n
        mono[i] = 1
        return cls(n, {tuple(mono): 1})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def symbol(self) -> Polynomial:
        """Top-degree part, read as a commutative polynomial."""
        d = self.degree()
        return Polynomial(self.n, {m: c for m, c in self._terms.items() if sum(m) == d})

    def __add__(self, other: "PBWElement") -> "PBWElement":
        if other.n != self.n:
            raise DimensionError("dimension mismatch")
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return PBWElement(self.n, out)

    def __neg__(self) -> "PBWElement":
        return PBWElement(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "PBWElement") -> "PBWElement":
        return self + (-other)

    def scale(self, c) -> "PBWElement":
        c = to_rational(c)
        return PBWElement(self.n, {m: v * c for m, v in self._terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, PBWElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def format(self, labels: Sequence[str] | None = None) -> str:
        # same printing convention as commutative polynomials, factors in basis order
        return Polynomial(self.n, self._terms).format(labels)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"PBWElement({self.n}, {self.format()!r})"


class EnvelopingAlgebra:
    """U(L) for a fixed set of structure constants, with a product cache."""

    def __init__(self, C: StructureConstants):
        self.C = C
        self.n = C.dim
        self._cache: dict = {}

    def gen(self, i: int) -> PBWElement:
        return PBWElement.gen(self.n, i)

    def _mono_times_gen(self, mono: tuple, i: int) -> dict:
        """Normal form of (PBW monomial) * x_i as a term dict."""
        key = (mono, i)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        top = max((k for k, e in enumerate(mono) if e), default=-1)
        if top <= i:
            m = list(mono)
            m[i] += 1
            result = {tuple(m): Fraction(1)}
        else:
            # mono = rest * x_top,  x_top x_i = x_i x_top + [x_top, x_i]
            rest = list(mono)
            rest[top] -= 1
            rest = tuple(rest)
            result: dict = {}
            for m, c in self._mono_times_gen(rest, i).items():
                for m2, c2 in self._mono_times_gen(m, top).items():
                    result[m2] = result.get(m2, 0) + c * c2
            for k, ck in enumerate(self.C.table[top][i]):
                if not ck:
                    continue
                for m2, c2 in self._mono_times_gen(rest, k).items():
                    result[m2] = result.get(m2, 0) + ck * c2
            result = {m: c for m, c in result.items() if c}
        self._cache[key] = result
        return result

    def _times_word(self, terms: dict, word: Sequence[int]) -> dict:
        for i in word:
            nxt: dict = {}
            for m, c in terms.items():
                for m2, c2 in self._mono_times_gen(m, i).items():
                    nxt[m2] = nxt.get(m2, 0) + c * c2
            terms = {m: c for m, c in nxt.items() if c}
        return terms

    def mul(self, a: PBWElement, b: PBWElement) -> PBWElement:
        if a.n != self.n or b.n != self.n:
            raise DimensionError("dimension mismatch")
        out: dict = {}
        for mb, cb in b.items():
            word = [k for k, e in enumerate(mb) for _ in range(e)]
            for m, c in self._times_word(dict(a.terms), word).items():
                out[m] = out.get(m, 0) + c * cb
        return PBWElement(self.n, out)

    def word(self, word: Sequence[int]) -> PBWElement:
        """Normal form of the product x_{w0} x_{w1} ... in the given order."""
        return PBWElement(self.n, self._times_word({(0,) * self.n: Fraction(1)}, word))

    def commutator(self, a: PBWElement, b: PBWElement) -> PBWElement:
        return self.mul(a, b) - self.mul(b, a)

    def symmetrize(self, p: Polynomial) -> PBWElement:
        """Average over all orderings of each monomial's factors."""
        if p.n != self.n:
            raise DimensionError("dimension mismatch")
        out = PBWElement.zero(self.n)
        for mono, c in p.items():
            letters = [k for k, e in enumerate(mono) for _ in range(e)]
            k = len(letters)
            orders = Counter(permutations(letters))
            acc = PBWElement.zero(self.n)
            for w, mult in sorted(orders.items()):
                acc = acc + self.word(w).scale(mult)
            out = out + acc.scale(c / factorial(k))
        return out

    def is_central(self, u: PBWElement) -> "CentralityResult":
        for i in range(self.n):
            comm = self.commutator(self.gen(i), u)
            if comm:
                return CentralityResult(False, i, comm)
        return CentralityResult(True)


@dataclass(frozen=True)
class CentralityResult:
    central: bool
    witness_index: int | None = None
    witness: PBWElement | None = None

    def __bool__(self):
        return self.central


def pbw_mul(C: StructureConstants, a: PBWElement, b: PBWElement) -> PBWElement:
    return EnvelopingAlgebra(C).mul(a, b)


def symmetrize(C: StructureConstants, p: Polynomial) -> PBWElement:
    return EnvelopingAlgebra(C).symmetrize(p)


def is_central(C: StructureConstants, u: PBWElement) -> CentralityResult:
    """Checks [x_i, u] = 0 for every basis generator; the witness is the first failure."""
    return EnvelopingAlgebra(C).is_central(u)

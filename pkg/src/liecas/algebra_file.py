"""JSON algebra files.

Layout (indices are 1-based, rationals are strings)::

    {
      "name": "aff1",
      "dim": 2,
      "basis": ["e1", "e2"],
      "brackets": [{"i": 1, "j": 2, "coeffs": {"2": "1"}}],
      "levi": [],
      "expected": {"invariant_count": 0, "radical_nilpotent": false, "perfect": false}
    }

Only ``dim`` and ``brackets`` are required.  Each bracket entry lists
[e_i, e_j] for i < j.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .liealg import StructureConstants

RATIONAL_RE = re.compile(r"-?[0-9]+(/[0-9]+)?")
TOP_KEYS = {"name", "dim", "basis", "brackets", "levi", "expected"}
EXPECTED_KEYS = {"invariant_count": int, "radical_nilpotent": bool, "perfect": bool}


class AlgebraFileError(ValueError):
    """Malformed algebra file; ``where`` names the offending line or field."""

    def __init__(self, message: str, where: str = ""):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


def parse_rational(text, where: str) -> Fraction:
    if not isinstance(text, str):
        raise AlgebraFileError(f"expected a rational string, got {json.dumps(text)}", where)
    if not RATIONAL_RE.fullmatch(text):
        raise AlgebraFileError(f"bad rational {text!r} (expected -?digits(/digits)?)", where)
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise AlgebraFileError(f"zero denominator in {text!r}", where)
    return Fraction(int(num), int(den) if den else 1)


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass
class AlgebraFile:
    name: str
    dim: int
    basis: list
    brackets: list  # [(i, j, {k: Fraction})], 1-based, i < j
    levi: list | None = None  # list of vectors (Fractions) or None
    expected: dict = field(default_factory=dict)

    def structure_constants(self) -> StructureConstants:
        consts = {}
        for i, j, coeffs in self.brackets:
            for k, c in coeffs.items():
                consts[(i - 1, j - 1, k - 1)] = c
        return StructureConstants(self.dim, tuple(self.basis), consts)

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "dim": self.dim,
            "basis": list(self.basis),
            "brackets": [
                {"i": i, "j": j, "coeffs": {str(k): format_rational(c) for k, c in sorted(coeffs.items())}}
                for i, j, coeffs in self.brackets
            ],
        }
        if self.levi is not None:
            d["levi"] = [[format_rational(x) for x in v] for v in self.levi]
        if self.expected:
            d["expected"] = dict(self.expected)
        return d

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _int(value, where: str, lo: int, hi: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise AlgebraFileError(f"expected an integer, got {json.dumps(value)}", where)
    if not lo <= value <= hi:
        raise AlgebraFileError(f"index {value} out of range {lo}..{hi}", where)
    return value


def from_dict(data, default_name: str = "algebra") -> AlgebraFile:
    if not isinstance(data, dict):
        raise AlgebraFileError("top level must be a JSON object")
    unknown = set(data) - TOP_KEYS
    if unknown:
        raise AlgebraFileError(f"unknown field(s) {sorted(unknown)}")
    if "dim" not in data:
        raise AlgebraFileError("missing required field", "dim")
    if "brackets" not in data:
        raise AlgebraFileError("missing required field", "brackets")
    n = data["dim"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise AlgebraFileError("dim must be a positive integer", "dim")

    name = data.get("name", default_name)
    if not isinstance(name, str):
        raise AlgebraFileError("name must be a string", "name")

    basis = data.get("basis", [f"e{k + 1}" for k in range(n)])
    if not isinstance(basis, list) or len(basis) != n or not all(isinstance(b, str) and b for b in basis):
        raise AlgebraFileError(f"basis must be a list of {n} nonempty strings", "basis")
    if len(set(basis)) != n:
        raise AlgebraFileError("basis labels must be distinct", "basis")

    if not isinstance(data["brackets"], list):
        raise AlgebraFileError("brackets must be a list", "brackets")
    brackets = []
    seen = set()
    for idx, entry in enumerate(data["brackets"]):
        where = f"brackets[{idx}]"
        if not isinstance(entry, dict) or set(entry) != {"i", "j", "coeffs"}:
            raise AlgebraFileError('each bracket needs exactly the keys "i", "j", "coeffs"', where)
        i = _int(entry["i"], f"{where}.i", 1, n)
        j = _int(entry["j"], f"{where}.j", 1, n)
        if i == j:
            raise AlgebraFileError("diagonal bracket forbidden (antisymmetry forces [v,v] = 0)", where)
        if i > j:
            raise AlgebraFileError(f"brackets must have i < j, got i={i}, j={j}", where)
        if (i, j) in seen:
            raise AlgebraFileError(f"duplicate bracket ({i}, {j})", where)
        seen.add((i, j))
        raw = entry["coeffs"]
        if not isinstance(raw, dict):
            raise AlgebraFileError("coeffs must be an object", f"{where}.coeffs")
        coeffs = {}
        for key, val in raw.items():
            kw = f"{where}.coeffs[{key!r}]"
            if not re.fullmatch(r"[0-9]+", key):
                raise AlgebraFileError(f"coefficient key {key!r} is not an index", kw)
            k = _int(int(key), kw, 1, n)
            if k in coeffs:
                raise AlgebraFileError(f"duplicate coefficient index {k}", kw)
            coeffs[k] = parse_rational(val, kw)
        brackets.append((i, j, coeffs))

    levi = None
    if "levi" in data:
        raw = data["levi"]
        if not isinstance(raw, list):
            raise AlgebraFileError("levi must be a list of vectors", "levi")
        levi = []
        for a, vec in enumerate(raw):
            if not isinstance(vec, list) or len(vec) != n:
                raise AlgebraFileError(f"levi vector must have {n} entries", f"levi[{a}]")
            levi.append([parse_rational(x, f"levi[{a}][{b}]") for b, x in enumerate(vec)])

    expected = {}
    if "expected" in data:
        raw = data["expected"]
        if not isinstance(raw, dict):
            raise AlgebraFileError("expected must be an object", "expected")
        for key, val in raw.items():
            typ = EXPECTED_KEYS.get(key)
            if typ is None:
                raise AlgebraFileError(f"unknown expectation {key!r}", "expected")
            if typ is int and (isinstance(val, bool) or not isinstance(val, int)):
                raise AlgebraFileError("must be an integer", f"expected.{key}")
            if typ is bool and not isinstance(val, bool):
                raise AlgebraFileError("must be true or false", f"expected.{key}")
            expected[key] = val

    return AlgebraFile(name, n, list(basis), brackets, levi, expected)


def loads(text: str, default_name: str = "algebra") -> AlgebraFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFileError(f"malformed JSON: {exc.msg}", f"line {exc.lineno}, column {exc.colno}") from exc
    return from_dict(data, default_name)


def parse(path) -> AlgebraFile:
    path = Path(path)
    return loads(path.read_text(encoding="utf-8"), path.stem)

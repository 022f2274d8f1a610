"""Report assembly shared by the CLI commands."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra_file import AlgebraFile, format_rational
from .enveloping import EnvelopingAlgebra
from .invariants import (
    invariant_count,
    polynomial_invariants,
    semi_invariants,
    zero_weight_certificate,
)
from .liealg import LeviRejected, derived_algebra, structure_report, theorem_a_check, validate


def _q(x) -> str:
    return format_rational(x)


def _vec(v) -> list:
    return [_q(x) for x in v]


def analyze(af: AlgebraFile) -> dict:
    C = af.structure_constants()
    rep = structure_report(C, af.levi)
    out = {"name": af.name, "dim": af.dim, "basis": list(C.labels), **rep.as_dict()}
    if rep.levi is not None:
        out["theorem_a"] = theorem_a_check(rep.levi, C).as_dict()
    return out


def invariants_report(af: AlgebraFile, max_degree: int) -> dict:
    C = af.structure_constants()
    count = invariant_count(C)
    inv = polynomial_invariants(C, max_degree, count)
    return {
        "name": af.name,
        "count": count,
        "max_degree": max_degree,
        "invariants": [p.format(C.labels) for p in inv.polys],
        "complete": inv.complete,
        "certificate": {"point": _vec(inv.point), "jacobian_rank": inv.jacobian_rank},
    }


def semi_report(af: AlgebraFile, max_degree: int) -> dict:
    C = af.structure_constants()
    res = semi_invariants(C, max_degree)
    return {
        "name": af.name,
        "max_degree": max_degree,
        "semi_invariants": [
            {"poly": s.poly.format(C.labels), "degree": s.poly.degree(), "weight": _vec(s.weight.components)}
            for s in res
        ],
        "skipped_irrational": {str(d): k for d, k in sorted(res.skipped.items())},
    }


def casimir_report(af: AlgebraFile, max_degree: int) -> dict:
    C = af.structure_constants()
    count = invariant_count(C)
    inv = polynomial_invariants(C, max_degree, count)
    U = EnvelopingAlgebra(C)
    items = []
    for p in inv.polys:
        cas = U.symmetrize(p)
        cert = U.is_central(cas)
        entry = {"invariant": p.format(C.labels), "casimir": cas.format(C.labels), "central": cert.central}
        if not cert.central:
            entry["witness"] = {"generator": C.labels[cert.witness_index], "commutator": cert.witness.format(C.labels)}
        items.append(entry)
    return {"name": af.name, "count": count, "max_degree": max_degree, "complete": inv.complete, "casimirs": items}


@dataclass
class CheckResult:
    name: str
    checks: list = field(default_factory=list)  # (label, passed, detail)

    def add(self, label: str, passed: bool, detail: str = "") -> None:
        self.checks.append((label, bool(passed), detail))

    @property
    def passed(self) -> bool:
        return all(p for _, p, _ in self.checks)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checks": [{"check": c, "passed": p, "detail": d} for c, p, d in self.checks],
        }


def check(af: AlgebraFile, max_degree: int = 4) -> CheckResult:
    """Run every applicable property check on one algebra."""
    C = af.structure_constants()
    res = CheckResult(af.name)
    bad = validate(C)
    res.add("jacobi", bad is None, "" if bad is None else str(bad))
    if bad is not None:
        return res

    try:
        rep = structure_report(C, af.levi)
    except LeviRejected as exc:
        res.add("levi", False, exc.reason)
        rep = structure_report(C)
    else:
        if rep.levi is not None:
            res.add("levi", True, f"dim S = {rep.levi.levi.dim}, dim R = {rep.levi.radical.dim}")

    if rep.levi is not None:
        ta = theorem_a_check(rep.levi, C)
        res.add(
            "perfect_iff_fixed_in_RR",
            ta.agree,
            f"perfect={ta.is_perfect} contained={ta.contained}",
        )
        res.add(
            "radical_splitting",
            ta.direct_sum,
            f"{ta.dim_radical} = {ta.dim_fixed} + {ta.dim_levi_radical}",
        )

    count = invariant_count(C)
    exp = af.expected
    if "invariant_count" in exp:
        res.add("expected_invariant_count", count == exp["invariant_count"], f"got {count}, expected {exp['invariant_count']}")
    if "radical_nilpotent" in exp:
        res.add(
            "expected_radical_nilpotent",
            rep.radical_is_nilpotent == exp["radical_nilpotent"],
            f"got {rep.radical_is_nilpotent}",
        )
    if "perfect" in exp:
        res.add("expected_perfect", rep.is_perfect == exp["perfect"], f"got {rep.is_perfect}")

    inv = polynomial_invariants(C, max_degree, count)
    semi = semi_invariants(C, max_degree)
    D = derived_algebra(C)
    res.add(
        "weights_vanish_on_derived",
        all(s.weight.vanishes_on(D) for s in semi),
        f"{len(semi)} semi-invariants up to degree {max_degree}",
    )
    res.add("semi_invariants_verified", all(s.holds(C) for s in semi))

    if rep.radical_is_nilpotent:
        cert = zero_weight_certificate(C)
        res.add(
            "zero_weight_certificate",
            cert.ok,
            "" if cert.ok else "uncovered: " + ", ".join(C.labels[i] for i in cert.uncovered),
        )
        nonzero = [s for s in semi if not s.weight.is_zero()]
        res.add("all_weights_zero", not nonzero, f"{len(nonzero)} nonzero weights")
        res.add(
            "fundamental_set_polynomial",
            inv.complete,
            f"found {len(inv.polys)} of {count} up to degree {max_degree}",
        )

    U = EnvelopingAlgebra(C)
    failures = []
    for p in inv.polys:
        cert = U.is_central(U.symmetrize(p))
        if not cert:
            failures.append(p.format(C.labels))
    res.add("casimir_centrality", not failures, f"{len(inv.polys)} symmetrized invariants" if not failures else "; ".join(failures))
    return res

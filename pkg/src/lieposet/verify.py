"""Run the structural checks on one poset and collect a machine-readable report."""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from math import comb

from .algebra import ADJOINT, ADJOINT_ON_IDEAL, TRIVIAL, LiePosetAlgebra
from .complex import cohomology, complex_for, phi_matrix, rho, sigma
from .deform import h2_decomposition
from .linalg import rank
from .nerve import build_nerve, simplicial_coboundary, simplicial_cohomology

# full complexes beyond this dimension are only computed up to DEFAULT_CAP
FULL_LIMIT = 12
DEFAULT_CAP = 4


@dataclass
class CheckResult:
    name: str
    statement: str
    passed: bool
    lhs: object
    rhs: object
    seconds: float = 0.0

    def to_json(self, timings: bool = False) -> dict:
        out = {
            "name": self.name,
            "statement": self.statement,
            "status": "pass" if self.passed else "fail",
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
        }
        if timings:
            out["seconds"] = round(self.seconds, 3)
        return out


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in sorted(x.items())}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass
class VerificationReport:
    poset: str
    field: str
    checks: list[CheckResult] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self, timings: bool = False) -> dict:
        return {
            "poset": self.poset,
            "field": self.field,
            "ok": self.ok,
            "checks": [c.to_json(timings) for c in self.checks],
        }

    def format_table(self, timings: bool = False) -> str:
        lines = [f"poset {self.poset} over {self.field}"]
        width = max((len(c.name) for c in self.checks), default=4)
        for c in self.checks:
            tail = f"  ({c.seconds:.2f}s)" if timings else ""
            lines.append(f"{'PASS' if c.passed else 'FAIL'}  {c.name:<{width}}  {c.statement}{tail}")
            if not c.passed:
                lines.append(f"      lhs={_jsonable(c.lhs)} rhs={_jsonable(c.rhs)}")
        lines.append("all checks passed" if self.ok else "some checks FAILED")
        return "\n".join(lines)


def _run(report, name, statement, fn):
    t0 = time.perf_counter()
    passed, lhs, rhs = fn()
    report.checks.append(CheckResult(name, statement, bool(passed), lhs, rhs, time.perf_counter() - t0))


def full_degrees(algebra: LiePosetAlgebra, max_degree=None) -> range:
    top = algebra.dim
    if max_degree is None:
        max_degree = top if algebra.dim <= FULL_LIMIT else DEFAULT_CAP
    return range(0, min(max_degree, top) + 1)


def verify_algebra(algebra: LiePosetAlgebra, max_degree=None, poset_name: str = "") -> VerificationReport:
    field = algebra.field
    N, nh = algebra.N, algebra.n_h
    report = VerificationReport(poset_name or f"N={N}", str(field))
    degs = full_degrees(algebra, max_degree)
    all_degs = range(0, algebra.dim + 1)
    nerve_cx = build_nerve(algebra.poset, True)
    nerve = simplicial_cohomology(nerve_cx, field, representatives=False)
    nd = nerve.dims()

    cache = {}

    def dims(kind, wz, degrees):
        key = (kind, wz, tuple(degrees))
        if key not in cache:
            cache[key] = cohomology(complex_for(algebra, kind, wz), degrees).dims()
        return cache[key]

    def trivial():
        lhs = dims(TRIVIAL, False, degs)
        return lhs == {n: comb(nh, n) for n in degs}, lhs, {n: comb(nh, n) for n in degs}

    def adjoint():
        lhs = dims(ADJOINT, False, degs)
        rhs = {n: sum(comb(nh, r) * nd.get(n - r, 0) for r in range(0, min(n, nh) + 1)) for n in degs}
        return lhs == rhs, lhs, rhs

    def viviani(kind):
        def check():
            a, b = dims(kind, False, degs), dims(kind, True, all_degs)
            b = {n: b[n] for n in degs}
            return a == b, a, b
        return check

    def euler(kind):
        def check():
            d = dims(kind, True, all_degs)
            chi = sum((-1) ** n * v for n, v in d.items())
            return chi == 0, chi, 0
        return check

    def ideal_nerve():
        kd = cohomology(complex_for(algebra, ADJOINT_ON_IDEAL, True)).dims()
        rhs = {m: nd.get(m, 0) for m in kd}
        return kd == rhs, kd, rhs

    def center():
        c = algebra.center().dim
        return c == nd.get(0, 0), c, nd.get(0, 0)

    def phi_chain():
        bad = []
        kcx = complex_for(algebra, ADJOINT_ON_IDEAL, True)
        top = nerve_cx.max_dim
        for n in range(0, top):
            left = kcx.coboundary_matrix(n) @ phi_matrix(algebra, nerve_cx, n)
            right = phi_matrix(algebra, nerve_cx, n + 1) @ simplicial_coboundary(nerve_cx, n, field)
            if left != right:
                bad.append(n)
        return not bad, bad, []

    def phi_bijective():
        kcx = complex_for(algebra, ADJOINT_ON_IDEAL, True)
        lhs, rhs = {}, {}
        for n in range(0, kcx.top_degree + 1):
            ns = len(nerve_cx.simplices(n))
            r = rank(phi_matrix(algebra, nerve_cx, n)) if ns else 0
            lhs[n] = (ns, kcx.dim(n), r)
            # degree 0 loses exactly the constants, which are coboundaries of the (-1)-simplex
            rhs[n] = (ns, ns - 1, ns - 1) if n == 0 else (ns, ns, ns)
        return lhs == rhs, lhs, rhs

    def sigma_rho():
        kcx = complex_for(algebra, ADJOINT_ON_IDEAL, True)
        failures = 0
        tried = 0
        for m in range(0, min(2, kcx.top_degree) + 1):
            for key in kcx.basis(m)[:12]:
                G = kcx.cochain(m, {key: 1})
                for r in range(0, min(2, nh) + 1):
                    for I in list(combinations(algebra.h_indices, r))[:4]:
                        tried += 1
                        out = sigma(rho(I, G), r)
                        ok = all(
                            (v.coeffs == G.coeffs) if J == I else v.is_zero() for J, v in out.items()
                        )
                        failures += not ok
        return failures == 0, failures, 0

    def dd_zero():
        bad = []
        for kind in (TRIVIAL, ADJOINT):
            cx = complex_for(algebra, kind, True)
            for n in range(0, cx.top_degree - 1):
                if not (cx.coboundary_matrix(n + 1) @ cx.coboundary_matrix(n)).is_zero():
                    bad.append((kind, n))
        return not bad, bad, []

    def h2():
        H = h2_decomposition(algebra, representatives=False)
        return H.consistent, list(H.dims), H.dim_h2

    _run(report, "trivial-coefficients", "dim H^n(g,k) = C(N-1,n)", trivial)
    _run(report, "adjoint-factorization", "dim H^n(g,g) = sum_r C(N-1,r) dim H^{n-r}(nerve+)", adjoint)
    _run(report, "ideal-nerve", "dim H^m(k,g)_0 = dim H^m(nerve+)", ideal_nerve)
    _run(report, "viviani-trivial", "H^n(g,k) = H^n of the weight-zero subcomplex", viviani(TRIVIAL))
    _run(report, "viviani-adjoint", "H^n(g,g) = H^n of the weight-zero subcomplex", viviani(ADJOINT))
    _run(report, "euler-trivial", "sum (-1)^n dim H^n(g,k) = 0", euler(TRIVIAL))
    _run(report, "euler-adjoint", "sum (-1)^n dim H^n(g,g) = 0", euler(ADJOINT))
    _run(report, "center-nerve", "dim center = dim H^0(nerve+)", center)
    _run(report, "phi-chain-map", "delta Phi = Phi delta", phi_chain)
    _run(report, "phi-bijective", "Phi is onto C^n(k,g)_0, injective for n >= 1", phi_bijective)
    _run(report, "sigma-rho", "sigma(rho(I, G)) = (I, G)", sigma_rho)
    _run(report, "delta-squared", "delta o delta = 0", dd_zero)
    _run(report, "h2-decomposition", "dim H^2 = (2,0) + (1,1) + (0,2) parts", h2)
    return report

"""Infinitesimal deformations of Lie poset algebras and explicit families.

A deformed bracket stores every structure constant as a polynomial in t
(coefficient list, lowest power first). Jacobi is certified coefficient by
coefficient, so a pass holds for every value of t at once.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from math import comb

from .algebra import ADJOINT, E, LiePosetAlgebra
from .complex import (
    Cochain,
    bigraded_decompose,
    cohomology,
    complex_for,
    phi,
    reduce_class,
    rho,
    weight_zero_part,
)
from .fields import require_characteristic
from .nerve import SimplicialCochain, apply_coboundary, build_nerve, simplicial_cohomology


class DeformError(ValueError):
    pass


class NotCentral(DeformError):
    pass


class NotACocycle(DeformError):
    pass


class NotACocycleAtOrderOne(DeformError):
    pass


TYPE_OF_R = {2: "20", 1: "11", 0: "02"}


# -- polynomials in t ---------------------------------------------------------


def _trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def poly_add(a: list, b: list, field) -> list:
    n = max(len(a), len(b))
    return _trim([field.reduce((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) for i in range(n)])


def poly_mul(a: list, b: list, field) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([field.reduce(v) for v in out])


def poly_eval(a: list, t, field):
    acc = 0
    for c in reversed(a):
        acc = acc * t + c
    return field.reduce(acc)


# -- deformed brackets ------------------------------------------------------


class DeformedBracket:
    """Bracket table ``table[a][b] = {z: [c0, c1, ...]}`` over the base basis."""

    def __init__(self, algebra: LiePosetAlgebra, label: str = "base"):
        self.algebra = algebra
        self.field = algebra.field
        self.label = label
        self.table = [
            {b: {z: [self.field.reduce(c)] for z, c in out.items()} for b, out in row.items()}
            for row in algebra.table
        ]

    def set_bracket(self, a: int, b: int, value: dict) -> None:
        """Set [a, b]* = value ({z: poly}); [b, a]* follows by antisymmetry."""
        if a == b:
            raise DeformError("cannot set [x, x]")
        red = self.field.reduce
        val = {z: _trim([red(c) for c in p]) for z, p in value.items()}
        val = {z: p for z, p in val.items() if p}
        neg = {z: [red(-c) for c in p] for z, p in val.items()}
        for x, y, v in ((a, b, val), (b, a, neg)):
            if v:
                self.table[x][y] = v
            else:
                self.table[x].pop(y, None)

    def bracket_basis(self, a: int, b: int) -> dict:
        return self.table[a].get(b, {})

    def bracket(self, x: dict, y: dict) -> dict:
        """Bracket of elements with polynomial coefficients ({pos: poly})."""
        acc: dict = {}
        for a, pa in x.items():
            row = self.table[a]
            for b, pb in y.items():
                out = row.get(b)
                if not out:
                    continue
                pab = poly_mul(pa, pb, self.field)
                for z, c in out.items():
                    acc[z] = poly_add(acc.get(z, []), poly_mul(pab, c, self.field), self.field)
        return {z: p for z, p in acc.items() if p}

    @property
    def degree(self) -> int:
        return max((len(p) - 1 for row in self.table for out in row.values() for p in out.values()), default=0)

    def coefficient(self, k: int) -> dict:
        """The t^k part as {(a, b): {z: c}} over pairs a < b."""
        out = {}
        for a, row in enumerate(self.table):
            for b, val in row.items():
                if a < b:
                    part = {z: p[k] for z, p in val.items() if k < len(p) and p[k]}
                    if part:
                        out[(a, b)] = part
        return out

    def specialize(self, t) -> dict:
        """Plain table {(a, b): {z: value}} at t (pairs a < b, nonzero only)."""
        t = self.field.reduce(t)
        out = {}
        for a, row in enumerate(self.table):
            for b, val in row.items():
                if a < b:
                    v = {z: poly_eval(p, t, self.field) for z, p in val.items()}
                    v = {z: c for z, c in v.items() if c}
                    if v:
                        out[(a, b)] = v
        return out

    def is_antisymmetric(self) -> bool:
        red = self.field.reduce
        for a, row in enumerate(self.table):
            for b, val in row.items():
                back = self.table[b].get(a, {})
                if {z: [red(-c) for c in p] for z, p in val.items()} != back:
                    return False
        return True

    def __eq__(self, other):
        if not isinstance(other, DeformedBracket):
            return NotImplemented
        return self.algebra is other.algebra and self.table == other.table

    def to_json(self) -> dict:
        alg = self.algebra
        rows = []
        for a, row in enumerate(self.table):
            for b in sorted(row):
                if a > b:
                    continue
                rows.append({
                    "x": str(alg.basis[a]),
                    "y": str(alg.basis[b]),
                    "value": {
                        str(alg.basis[z]): [self.field.format(c) for c in p] for z, p in sorted(row[b].items())
                    },
                })
        return {
            "family": self.label,
            "field": str(self.field),
            "basis": [str(b) for b in alg.basis],
            "brackets": rows,
        }


def plain_table_json(d: DeformedBracket, t) -> dict:
    alg = d.algebra
    spec = d.specialize(t)
    return {
        "family": d.label,
        "field": str(d.field),
        "t": d.field.format(d.field.reduce(t)),
        "basis": [str(b) for b in alg.basis],
        "brackets": [
            {
                "x": str(alg.basis[a]),
                "y": str(alg.basis[b]),
                "value": {str(alg.basis[z]): d.field.format(c) for z, c in sorted(v.items())},
            }
            for (a, b), v in sorted(spec.items())
        ],
    }


@dataclass
class JacobiCertificate:
    verdict: bool
    triples_checked: int
    witness: tuple | None = None  # (x, y, z) labels
    t_power: int | None = None

    def __bool__(self):
        return self.verdict

    def to_json(self) -> dict:
        return {
            "verdict": "pass" if self.verdict else "fail",
            "triples_checked": self.triples_checked,
            "witness": list(self.witness) if self.witness else None,
            "t_power": self.t_power,
        }


def jacobi_check(d: DeformedBracket) -> JacobiCertificate:
    """Expand [x,[y,z]*]* + cyclic over all basis triples as polynomials in t."""
    alg = d.algebra
    count = 0
    for a, b, c in combinations(range(alg.dim), 3):
        count += 1
        x, y, z = {a: [1]}, {b: [1]}, {c: [1]}
        acc: dict = {}
        for p, q, r in ((x, y, z), (y, z, x), (z, x, y)):
            for k, poly in d.bracket(p, d.bracket(q, r)).items():
                acc[k] = poly_add(acc.get(k, []), poly, d.field)
        for k in sorted(acc):
            if acc[k]:
                power = next(i for i, v in enumerate(acc[k]) if v)
                labels = (str(alg.basis[a]), str(alg.basis[b]), str(alg.basis[c]))
                return JacobiCertificate(False, count, labels, power)
    return JacobiCertificate(True, count)


def specialized_jacobi_ok(d: DeformedBracket, t) -> bool:
    """Pointwise Jacobi on the specialised table."""
    from .algebra import jacobi_failures

    spec = d.specialize(t)
    table = [dict() for _ in range(d.algebra.dim)]
    for (a, b), v in spec.items():
        table[a][b] = v
        table[b][a] = {z: -c for z, c in v.items()}

    def br(x, y):
        acc: dict = {}
        for a, xa in x.items():
            for b, yb in y.items():
                for z, c in table[a].get(b, {}).items():
                    acc[z] = acc.get(z, 0) + c * xa * yb
        return {z: d.field.reduce(v) for z, v in acc.items() if d.field.reduce(v)}

    return not jacobi_failures(d.algebra.dim, br, d.field, limit=1)


# -- the three families -------------------------------------------------------


def _eta_position(algebra: LiePosetAlgebra, i) -> int:
    if isinstance(i, int):
        pos = i - 1
        if not 0 <= pos < algebra.n_h:
            raise DeformError(f"eta{i} is not in h")
        return pos
    return algebra.element({i: 1}).popitem()[0]


def deform_20(algebra: LiePosetAlgebra, pair, c: dict) -> DeformedBracket:
    """[eta_i, eta_j]* = t c, everything else unchanged.

    ``pair`` holds 1-based eta indices; ``c`` is an element given in eta
    coordinates ({eta position: value}) or any spec accepted by ``element``.
    """
    i, j = pair
    if i == j:
        raise DeformError("need two distinct eta indices")
    a, b = _eta_position(algebra, i), _eta_position(algebra, j)
    c = algebra.element(c)
    if any(not algebra.basis[k].is_eta for k in c):
        raise NotCentral("central elements lie in h")
    for k in algebra.k_indices:
        if algebra.bracket(c, {k: 1}):
            raise NotCentral(f"{algebra.format_element(c)} does not commute with {algebra.basis[k]}")
    d = DeformedBracket(algebra, f"20:eta{a + 1},eta{b + 1}")
    d.set_bracket(a, b, {z: [0, v] for z, v in c.items()})
    return d


def deform_11(algebra: LiePosetAlgebra, xi: dict, f: SimplicialCochain) -> DeformedBracket:
    """[h, e_ij]* = [h, e_ij] + t <xi, h> f(i, j) e_ij.

    ``xi`` maps eta positions (0-based) to the coordinates of xi in the dual basis.
    """
    if f.dim != 1:
        raise DeformError("deform_11 takes a simplicial 1-cochain")
    cx = build_nerve(algebra.poset, augmented=False)
    _check_cocycle(cx, f)
    d = DeformedBracket(algebra, "11")
    red = algebra.field.reduce
    for s, v in f.values.items():
        e = algebra.index[E(*s)]
        for k in algebra.h_indices:
            x = red(xi.get(k, 0) * v)
            if not x:
                continue
            base = algebra.table[k].get(e, {}).get(e, 0)
            d.set_bracket(k, e, {e: [base, x]})
    return d


def deform_02(algebra: LiePosetAlgebra, f: SimplicialCochain) -> DeformedBracket:
    """[e_ij, e_jk]* = (1 + t f_ijk) e_ik."""
    if f.dim != 2:
        raise DeformError("deform_02 takes a simplicial 2-cochain")
    cx = build_nerve(algebra.poset, augmented=False)
    _check_cocycle(cx, f)
    d = DeformedBracket(algebra, "02")
    idx = algebra.index
    for (i, j, k), v in f.values.items():
        d.set_bracket(idx[E(i, j)], idx[E(j, k)], {idx[E(i, k)]: [1, v]})
    return d


def _check_cocycle(cx, f: SimplicialCochain) -> None:
    for s in f.values:
        if s not in cx.index(f.dim):
            raise DeformError(f"{s} is not a simplex of the nerve")
    if f.dim < cx.max_dim and apply_coboundary(cx, f).values:
        raise NotACocycle(f"the {f.dim}-cochain is not a cocycle")


# -- infinitesimals ---------------------------------------------------------


@dataclass
class InfinitesimalClass:
    cochain: Cochain  # the t-linear coefficient as a 2-cochain of C(g, g)
    reduced: Cochain  # canonical representative modulo coboundaries (weight zero)
    types: tuple  # subset of ("20", "11", "02"), ordered
    components: dict = dc_field(default_factory=dict)  # type -> reduced component

    @property
    def is_zero(self) -> bool:
        return self.reduced.is_zero()

    def to_json(self) -> dict:
        return {
            "zero": self.is_zero,
            "types": list(self.types),
            "representative": self.reduced.describe(),
        }


def infinitesimal_cochain(d: DeformedBracket) -> Cochain:
    cx = complex_for(d.algebra, ADJOINT, False)
    coeffs = {}
    for (a, b), val in d.coefficient(1).items():
        for z, c in val.items():
            coeffs[((a, b), z)] = c
    return Cochain(cx, 2, coeffs)


def infinitesimal_of(d: DeformedBracket) -> InfinitesimalClass:
    mu = infinitesimal_cochain(d)
    if not mu.complex.delta(mu).is_zero():
        raise NotACocycleAtOrderOne("the t-linear term is not a 2-cocycle")
    alg = d.algebra
    wz = complex_for(alg, ADJOINT, True)
    # the other weight components are coboundaries, so drop them
    mu0 = Cochain(wz, 2, weight_zero_part(mu).coeffs)
    red = reduce_class(mu0)
    comps = {TYPE_OF_R[r]: c for r, c in bigraded_decompose(red).items() if not c.is_zero()}
    types = tuple(t for t in ("20", "11", "02") if t in comps)
    return InfinitesimalClass(mu, red, types, comps)


# -- H^2 decomposition --------------------------------------------------------


@dataclass
class H2Decomposition:
    dim_20: int
    dim_11: int
    dim_02: int
    dim_h2: int  # computed independently from the CE complex
    representatives: dict  # type -> list of 2-cocycles in C(g, g)_0

    @property
    def dims(self) -> tuple[int, int, int]:
        return self.dim_20, self.dim_11, self.dim_02

    @property
    def consistent(self) -> bool:
        return sum(self.dims) == self.dim_h2


def h2_decomposition(algebra: LiePosetAlgebra, representatives: bool = True) -> H2Decomposition:
    require_characteristic(algebra.field, algebra.N)
    nerve = simplicial_cohomology(build_nerve(algebra.poset, True), algebra.field, representatives)
    nh = algebra.n_h
    h0, h1, h2 = nerve.dim(0), nerve.dim(1), nerve.dim(2)
    dims = (comb(nh, 2) * h0, nh * h1, h2)
    reps: dict = {"20": [], "11": [], "02": []}
    if representatives:
        for r, m, key in ((2, 0, "20"), (1, 1, "11"), (0, 2, "02")):
            for row in nerve.rows:
                if row.degree != m:
                    continue
                for f in row.representatives:
                    G = phi(algebra, f)
                    for I in combinations(algebra.h_indices, r):
                        reps[key].append(rho(I, G))
    wz = complex_for(algebra, ADJOINT, True)
    dim_h2 = cohomology(wz, [2]).dim(2)
    return H2Decomposition(*dims, dim_h2, reps)


def deformation_from_class(algebra: LiePosetAlgebra, kind: str, **kw) -> DeformedBracket:
    """Build a family of the requested type from default nerve data."""
    nerve = simplicial_cohomology(build_nerve(algebra.poset, True), algebra.field)
    if kind == "20":
        centre = algebra.center_elements()
        if not centre or algebra.n_h < 2:
            raise DeformError("no (2,0) infinitesimals: the center or h is too small")
        pair = kw.get("pair") or (1, 2)
        c = kw.get("central") or centre[0]
        return deform_20(algebra, pair, c)
    if kind == "11":
        f = kw.get("cochain")
        if f is None:
            reps = _reps(nerve, 1)
            if not reps:
                raise DeformError("H^1 of the nerve vanishes")
            f = reps[0]
        xi = kw.get("xi") or {0: 1}
        return deform_11(algebra, xi, f)
    if kind == "02":
        f = kw.get("cochain")
        if f is None:
            reps = _reps(nerve, 2)
            if not reps:
                raise DeformError("H^2 of the nerve vanishes")
            f = reps[0]
        return deform_02(algebra, f)
    raise DeformError(f"unknown deformation type {kind!r}")


def _reps(nerve, m: int) -> list:
    for row in nerve.rows:
        if row.degree == m:
            return row.representatives
    return []

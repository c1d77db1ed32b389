"""Lie poset algebras g(P) = h + k inside sl(N).

Basis: eta_1..eta_{N-1} (eta_i = e_ii - e_{i+1,i+1}) followed by the e_ij
with i < j in P, lexicographically. Elements are sparse ``dict`` maps from
basis position to raw field values. Structure constants and weights are
integers; they are reduced into the field only where compared or stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .fields import QQ, FieldCtx, require_characteristic
from .linalg import SparseMatrix, Subspace, kernel_basis
from .poset import Poset


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class BasisIndex:
    kind: int  # 0 for eta, 1 for e_ij
    i: int
    j: int = 0

    @property
    def is_eta(self) -> bool:
        return self.kind == 0

    def __str__(self):
        if self.kind == 0:
            return f"eta{self.i}"
        if self.i < 10 and self.j < 10:
            return f"e{self.i}{self.j}"
        return f"e{self.i},{self.j}"

    __repr__ = __str__


def Eta(i: int) -> BasisIndex:
    return BasisIndex(0, i)


def E(i: int, j: int) -> BasisIndex:
    return BasisIndex(1, i, j)


def parse_label(text: str) -> BasisIndex:
    text = text.strip()
    if text.startswith("eta"):
        return Eta(int(text[3:]))
    if text.startswith("e"):
        body = text[1:]
        if "," in body:
            i, j = body.split(",")
        elif len(body) == 2:
            i, j = body
        else:
            raise AlgebraError(f"ambiguous label {text!r}; write e<i>,<j>")
        return E(int(i), int(j))
    raise AlgebraError(f"bad basis label {text!r}")


def root_weight(i: int, j: int, n: int) -> tuple[int, ...]:
    """Values of w_ij on eta_1..eta_{n-1}: [eta_k, e_ij] = w_ij(eta_k) e_ij."""
    return tuple(
        (k == i) - (k + 1 == i) - (k == j) + (k + 1 == j) for k in range(1, n)
    )


class LiePosetAlgebra:
    def __init__(self, poset: Poset, field: FieldCtx = QQ, check: bool = True):
        require_characteristic(field, poset.n)
        self.poset = poset
        self.field = field
        self.N = N = poset.n
        self.basis: list[BasisIndex] = [Eta(i) for i in range(1, N)]
        self.basis += [E(i, j) for i, j in poset.relations]
        self.index = {b: k for k, b in enumerate(self.basis)}
        self.n_h = N - 1
        self.dim = len(self.basis)
        self.h_indices = list(range(self.n_h))
        self.k_indices = list(range(self.n_h, self.dim))
        zero = (0,) * (N - 1)
        self.weights: list[tuple[int, ...]] = [
            zero if b.is_eta else root_weight(b.i, b.j, N) for b in self.basis
        ]
        self._modules: dict = {}
        self._build_table()
        if check:
            self.check_structure()

    def _build_table(self):
        """table[a][b] = [a, b] as {index: int coefficient}; antisymmetric."""
        table = [dict() for _ in range(self.dim)]
        idx = self.index
        for a in self.h_indices:
            for b in self.k_indices:
                w = self.weights[b][a]
                if w:
                    table[a][b] = {b: w}
                    table[b][a] = {b: -w}
        for a, ba in enumerate(self.basis):
            if ba.is_eta:
                continue
            for b, bb in enumerate(self.basis):
                if bb.is_eta or a == b:
                    continue
                if ba.j == bb.i:
                    table[a][b] = {idx[E(ba.i, bb.j)]: 1}
                elif bb.j == ba.i:
                    table[a][b] = {idx[E(bb.i, ba.j)]: -1}
        self.table = table
        producers = [[] for _ in range(self.dim)]
        for a in range(self.dim):
            for b, out in table[a].items():
                if a < b:
                    for z, c in out.items():
                        producers[z].append((a, b, c))
        self.producers = producers

    # -- elements ----------------------------------------------------------

    def element(self, spec) -> dict:
        """Element from {label or BasisIndex or position: coefficient}."""
        out = {}
        for key, v in spec.items():
            if isinstance(key, str):
                key = parse_label(key)
            if isinstance(key, BasisIndex):
                if key not in self.index:
                    raise AlgebraError(f"{key} is not in g(P)")
                key = self.index[key]
            v = self.field.reduce(v)
            if v:
                out[key] = self.field.reduce(out.get(key, 0) + v)
        return {k: v for k, v in out.items() if v}

    def basis_bracket(self, a: int, b: int) -> dict:
        return self.table[a].get(b, {})

    def bracket(self, x: dict, y: dict) -> dict:
        red = self.field.reduce
        acc: dict = {}
        for a, xa in x.items():
            row = self.table[a]
            for b, yb in y.items():
                out = row.get(b)
                if out:
                    for z, c in out.items():
                        acc[z] = acc.get(z, 0) + c * xa * yb
        return {z: red(v) for z, v in acc.items() if red(v)}

    def format_element(self, x: dict) -> str:
        if not x:
            return "0"
        parts = []
        for k in sorted(x):
            parts.append(f"{self.field.format(x[k])}*{self.basis[k]}")
        return " + ".join(parts)

    # -- weights -----------------------------------------------------------

    def weight_of(self, b) -> tuple[int, ...]:
        if isinstance(b, BasisIndex):
            b = self.index[b]
        return self.weights[b]

    def weight_key(self, w) -> tuple[int, ...]:
        """Field reduction of an integer weight vector."""
        p = self.field.p
        return tuple(x % p for x in w) if p else tuple(w)

    def is_weight_zero(self, w) -> bool:
        p = self.field.p
        return all(x % p == 0 for x in w) if p else not any(w)

    def evaluate_weight(self, w, h: dict):
        """w(h) for h in h given in eta coordinates."""
        return self.field.reduce(sum(w[k] * c for k, c in h.items()))

    # -- structure ---------------------------------------------------------

    def center(self) -> Subspace:
        """Center as a subspace of h in eta coordinates."""
        rows = [dict((k, w) for k, w in enumerate(self.weights[b]) if w) for b in self.k_indices]
        return kernel_basis(SparseMatrix(len(rows), self.n_h, self.field, rows))

    def center_elements(self) -> list[dict]:
        return [dict(v) for v in self.center().basis]

    def check_structure(self) -> None:
        for a in range(self.dim):
            for b in range(self.dim):
                x = self.table[a].get(b, {})
                y = self.table[b].get(a, {})
                if {k: -v for k, v in x.items()} != y:
                    raise AlgebraError(f"antisymmetry fails on {self.basis[a]}, {self.basis[b]}")
        for a in self.h_indices:
            for b in range(self.dim):
                out = self.table[a].get(b, {})
                if set(out) - {b}:
                    raise AlgebraError(f"ad {self.basis[a]} is not diagonal on {self.basis[b]}")
        bad = jacobi_failures(self.dim, self.bracket, self.field, limit=1)
        if bad:
            a, b, c = bad[0]
            raise AlgebraError(f"Jacobi fails on {self.basis[a]}, {self.basis[b]}, {self.basis[c]}")

    def __repr__(self):
        return f"LiePosetAlgebra(dim={self.dim}, N={self.N}, {self.field})"

    def module(self, kind: str) -> "GModule":
        if kind not in self._modules:
            self._modules[kind] = module_create(self, kind)
        return self._modules[kind]


def jacobi_failures(dim: int, bracket, field: FieldCtx, limit: int | None = None):
    out = []
    for a, b, c in combinations(range(dim), 3):
        x, y, z = {a: 1}, {b: 1}, {c: 1}
        s: dict = {}
        for term in (bracket(x, bracket(y, z)), bracket(y, bracket(z, x)), bracket(z, bracket(x, y))):
            for k, v in term.items():
                s[k] = s.get(k, 0) + v
        if any(field.reduce(v) for v in s.values()):
            out.append((a, b, c))
            if limit and len(out) >= limit:
                break
    return out


def build_algebra(poset: Poset, field: FieldCtx = QQ) -> LiePosetAlgebra:
    return LiePosetAlgebra(poset, field)


TRIVIAL = "trivial"
ADJOINT = "adjoint"
ADJOINT_ON_IDEAL = "adjoint-ideal"


@dataclass
class GModule:
    algebra: LiePosetAlgebra
    kind: str
    dim: int
    acting: list[int]  # algebra basis positions that act
    weights: list[tuple[int, ...]]

    def action(self, x: int, m: int) -> dict:
        """[x, m] for basis x of the acting algebra and module basis m (integers)."""
        if self.kind == TRIVIAL:
            return {}
        return self.algebra.table[x].get(m, {})

    @cached_property
    def by_weight(self) -> dict:
        out: dict = {}
        for m, w in enumerate(self.weights):
            out.setdefault(self.algebra.weight_key(w), []).append(m)
        return out

    def label(self, m: int) -> str:
        return "1" if self.kind == TRIVIAL else str(self.algebra.basis[m])


def module_create(algebra: LiePosetAlgebra, kind: str) -> GModule:
    kind = {"Trivial": TRIVIAL, "Adjoint": ADJOINT, "AdjointRestrictedToIdeal": ADJOINT_ON_IDEAL}.get(kind, kind)
    if kind == TRIVIAL:
        return GModule(algebra, kind, 1, list(range(algebra.dim)), [(0,) * algebra.n_h])
    if kind == ADJOINT:
        return GModule(algebra, kind, algebra.dim, list(range(algebra.dim)), list(algebra.weights))
    if kind == ADJOINT_ON_IDEAL:
        return GModule(algebra, kind, algebra.dim, list(algebra.k_indices), list(algebra.weights))
    raise AlgebraError(f"unknown module kind {kind!r}")


# -- weight uniqueness over sl(N) ------------------------------------------


def positive_roots(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def _composes(subset, i, j) -> bool:
    """Can the e_ab in subset be ordered as a path i -> ... -> j?"""
    out = {}
    for a, b in subset:
        if a in out:
            return False
        out[a] = b
    cur, used = i, 0
    while cur in out:
        cur = out[cur]
        used += 1
    return cur == j and used == len(subset)


def weight_uniqueness_counterexamples(n: int, p: int, max_size: int | None = None):
    """Exhaustive search for failures of the weight-sum statements in sl(n) mod p.

    (i) a nonempty sum of distinct positive-root weights never reduces to 0;
    (ii) such a sum equals w_ij only when the roots compose into a path i -> j.
    Returns (failures_i, failures_ii).
    """
    roots = positive_roots(n)
    weights = {r: root_weight(*r, n) for r in roots}
    top = len(roots) if max_size is None else min(max_size, len(roots))
    fail_i, fail_ii = [], []
    reduced = {r: tuple(x % p for x in weights[r]) for r in roots}
    for size in range(1, top + 1):
        for subset in combinations(roots, size):
            total = [0] * (n - 1)
            for r in subset:
                for k, x in enumerate(weights[r]):
                    total[k] += x
            key = tuple(x % p for x in total)
            if not any(key):
                fail_i.append(subset)
            for i, j in roots:
                equal = key == reduced[(i, j)]
                if equal != _composes(subset, i, j):
                    fail_ii.append((subset, (i, j)))
    return fail_i, fail_ii

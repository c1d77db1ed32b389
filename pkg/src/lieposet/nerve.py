"""Nerve of a poset, its augmentation, and simplicial cohomology."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .fields import QQ, FieldCtx, require_characteristic
from .linalg import (
    SparseMatrix,
    Subspace,
    image,
    kernel_basis,
    quotient_representatives,
    rank,
)
from .poset import Poset


@dataclass(frozen=True)
class SimplicialComplex:
    poset: Poset
    augmented: bool
    simplices_by_dim: dict  # dim -> list of tuples, lexicographic

    @property
    def min_dim(self) -> int:
        return -1 if self.augmented else 0

    @property
    def max_dim(self) -> int:
        return max(self.simplices_by_dim)

    def simplices(self, m: int) -> list[tuple[int, ...]]:
        return self.simplices_by_dim.get(m, [])

    def index(self, m: int) -> dict:
        return {s: k for k, s in enumerate(self.simplices(m))}

    def counts(self) -> dict[int, int]:
        return {m: len(s) for m, s in sorted(self.simplices_by_dim.items())}


@dataclass
class SimplicialCochain:
    dim: int
    values: dict  # simplex tuple -> raw scalar
    field: FieldCtx = QQ

    def __post_init__(self):
        red = self.field.reduce
        for s in self.values:
            if len(s) != self.dim + 1:
                raise ValueError(f"simplex {s} does not have dimension {self.dim}")
        self.values = {s: red(v) for s, v in self.values.items() if red(v) != 0}

    def to_vector(self, cx: SimplicialComplex) -> dict:
        idx = cx.index(self.dim)
        return {idx[s]: v for s, v in self.values.items()}

    @classmethod
    def from_vector(cls, cx: SimplicialComplex, dim: int, vec: dict, field=QQ):
        simp = cx.simplices(dim)
        return cls(dim, {simp[k]: v for k, v in vec.items()}, field)


def build_nerve(poset: Poset, augmented: bool = True) -> SimplicialComplex:
    by_dim = {}
    if augmented:
        by_dim[-1] = [()]
    by_dim[0] = [(i,) for i in range(1, poset.n + 1)]
    k = 2
    while True:
        ch = poset.chains(k)
        if not ch:
            break
        by_dim[k - 1] = ch
        k += 1
    return SimplicialComplex(poset, augmented, by_dim)


def simplicial_coboundary(cx: SimplicialComplex, m: int, field: FieldCtx = QQ) -> SparseMatrix:
    """Matrix of delta: C^m -> C^{m+1}; (df)(s) = sum_r (-1)^r f(s minus vertex r)."""
    if m < cx.min_dim:
        raise ValueError(f"degree {m} below {cx.min_dim}")
    src = cx.index(m)
    tgt = cx.simplices(m + 1)
    rows = []
    for s in tgt:
        row = {}
        for r in range(len(s)):
            face = s[:r] + s[r + 1:]
            c = src[face]
            row[c] = row.get(c, 0) + (-1 if r % 2 else 1)
        rows.append(row)
    return SparseMatrix(len(tgt), len(src), field, rows)


def apply_coboundary(cx: SimplicialComplex, f: SimplicialCochain) -> SimplicialCochain:
    d = simplicial_coboundary(cx, f.dim, f.field)
    vec = d.apply(f.to_vector(cx))
    return SimplicialCochain.from_vector(cx, f.dim + 1, vec, f.field)


@dataclass
class DegreeRow:
    degree: int
    n_simplices: int
    dim_ker: int
    dim_im: int  # rank of the incoming coboundary
    dim_h: int
    representatives: list = dc_field(default_factory=list)


@dataclass
class NerveCohomology:
    complex: SimplicialComplex
    field: FieldCtx
    rows: list[DegreeRow]

    def dims(self) -> dict[int, int]:
        return {r.degree: r.dim_h for r in self.rows}

    def dim(self, m: int) -> int:
        return self.dims().get(m, 0)

    def euler_characteristic(self) -> int:
        return sum((-r.dim_h if r.degree % 2 else r.dim_h) for r in self.rows)


def simplicial_cohomology(
    cx: SimplicialComplex, field: FieldCtx = QQ, representatives: bool = True
) -> NerveCohomology:
    if cx.augmented:
        require_characteristic(field, cx.poset.n)
    lo, hi = cx.min_dim, cx.max_dim
    deltas = {m: simplicial_coboundary(cx, m, field) for m in range(lo, hi + 1)}
    rows = []
    for m in range(lo, hi + 1):
        d_out = deltas[m]
        d_in = deltas.get(m - 1)
        ncells = len(cx.simplices(m))
        if representatives:
            ker = kernel_basis(d_out)
            im = image(d_in) if d_in is not None else Subspace(ncells, [], field)
            reps = quotient_representatives(ker, im)
            dim_ker, dim_im = ker.dim, im.dim
        else:
            dim_ker = ncells - rank(d_out)
            dim_im = rank(d_in) if d_in is not None else 0
            reps = []
        rows.append(
            DegreeRow(
                m,
                ncells,
                dim_ker,
                dim_im,
                dim_ker - dim_im,
                [SimplicialCochain.from_vector(cx, m, v, field) for v in reps],
            )
        )
    return NerveCohomology(cx, field, rows)

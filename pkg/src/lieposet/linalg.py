"""Exact sparse matrices, canonical subspaces, rank/kernel/quotient.

Vectors are plain ``dict[int, value]`` with no stored zeros. All rank work is
first split along the connected components of the row/column incidence
graph; coboundary matrices of graded complexes are block diagonal, so this
alone shrinks the eliminations by orders of magnitude.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from typing import Iterable

from . import _elim
from .fields import QQ, FieldCtx, parse_field

try:
    if os.environ.get("LIEPOSET_PURE_PYTHON"):
        raise ImportError("pure-Python kernels requested")
    from . import _fpkernel
except ImportError:
    _fpkernel = None

BACKEND = "cython" if _fpkernel is not None else "python"


class ImageNotContained(ArithmeticError):
    """The denominator image is not inside the numerator (so delta o delta != 0)."""


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _fpkernel is not None else [])


@contextmanager
def use_backend(name: str):
    """Temporarily force the F_p kernel ("python" or "cython")."""
    global BACKEND
    if name not in available_backends():
        raise ValueError(f"backend {name!r} not available")
    old, BACKEND = BACKEND, name
    try:
        yield
    finally:
        BACKEND = old


def _rank_rows(rows: list[dict], ncols: int, p: int) -> int:
    if p and BACKEND == "cython" and _fpkernel.fits(len(rows), ncols, p):
        return _fpkernel.rank_mod_p(rows, ncols, p)
    return _elim.markowitz_rank(rows, ncols, p)


def _rref_rows(rows: list[dict], ncols: int, p: int):
    if p and BACKEND == "cython" and _fpkernel.fits(len(rows), ncols, p):
        return _fpkernel.rref_mod_p(rows, ncols, p)
    return _elim.echelon(rows, ncols, p, reduced=True)


def _components(rows: list[dict], ncols: int):
    """Split rows into independent blocks; yields (local rows, local ncols)."""
    parent = list(range(ncols))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for r in rows:
        it = iter(r)
        first = next(it, None)
        if first is None:
            continue
        a = find(first)
        for c in it:
            b = find(c)
            if a != b:
                parent[b] = a
    groups: dict[int, list[dict]] = {}
    for r in rows:
        if r:
            groups.setdefault(find(next(iter(r))), []).append(r)
    for block in groups.values():
        cols = sorted({c for r in block for c in r})
        local = {c: k for k, c in enumerate(cols)}
        yield [{local[c]: v for c, v in r.items()} for r in block], len(cols)


class SparseMatrix:
    """Immutable sparse matrix stored as a list of row dicts."""

    __slots__ = ("nrows", "ncols", "field", "rows")

    def __init__(self, nrows: int, ncols: int, field: FieldCtx = QQ, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        self.field = field
        if rows is None:
            rows = [{} for _ in range(nrows)]
        red = field.reduce
        self.rows = [{c: red(v) for c, v in r.items() if red(v) != 0} for r in rows]
        if len(self.rows) != nrows:
            raise ValueError("row count mismatch")

    @classmethod
    def from_entries(cls, nrows, ncols, field, entries) -> "SparseMatrix":
        rows = [{} for _ in range(nrows)]
        items = entries.items() if isinstance(entries, dict) else (((r, c), v) for r, c, v in entries)
        for (r, c), v in items:
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise IndexError((r, c))
            rows[r][c] = rows[r].get(c, 0) + v
        return cls(nrows, ncols, field, rows)

    @classmethod
    def from_columns(cls, nrows, ncols, field, columns: list[dict]) -> "SparseMatrix":
        rows = [{} for _ in range(nrows)]
        for c, col in enumerate(columns):
            for r, v in col.items():
                rows[r][c] = v
        return cls(nrows, ncols, field, rows)

    @classmethod
    def from_dense(cls, data, field=QQ) -> "SparseMatrix":
        data = [list(r) for r in data]
        ncols = len(data[0]) if data else 0
        return cls(len(data), ncols, field, [{c: v for c, v in enumerate(r) if v} for r in data])

    @classmethod
    def identity(cls, n, field=QQ):
        return cls(n, n, field, [{i: 1} for i in range(n)])

    @classmethod
    def zeros(cls, nrows, ncols, field=QQ):
        return cls(nrows, ncols, field)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def entries(self) -> dict:
        return {(i, c): v for i, r in enumerate(self.rows) for c, v in r.items()}

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def columns(self) -> list[dict]:
        cols = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for c, v in r.items():
                cols[c][i] = v
        return cols

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.ncols, self.nrows, self.field, self.columns())

    def apply(self, v: dict) -> dict:
        red = self.field.reduce
        out = {}
        for i, r in enumerate(self.rows):
            s = 0
            for c, x in r.items():
                y = v.get(c)
                if y:
                    s += x * y
            s = red(s)
            if s:
                out[i] = s
        return out

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows or self.field != other.field:
            raise ValueError("incompatible matrices")
        rows = []
        for r in self.rows:
            acc: dict = {}
            for k, x in r.items():
                for c, y in other.rows[k].items():
                    acc[c] = acc.get(c, 0) + x * y
            rows.append(acc)
        return SparseMatrix(self.nrows, other.ncols, self.field, rows)

    def is_zero(self) -> bool:
        return not any(self.rows)

    def permuted(self, row_perm, col_perm) -> "SparseMatrix":
        """Row i moves to row_perm[i], column c to col_perm[c]."""
        rows = [{} for _ in range(self.nrows)]
        for i, r in enumerate(self.rows):
            rows[row_perm[i]] = {col_perm[c]: v for c, v in r.items()}
        return SparseMatrix(self.nrows, self.ncols, self.field, rows)

    def to_dense(self) -> list[list]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for i, r in enumerate(self.rows):
            for c, v in r.items():
                out[i][c] = v
        return out

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.field == other.field and self.rows == other.rows

    def __repr__(self):
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()}, {self.field})"

    def dump(self) -> str:
        lines = [f"{self.nrows} {self.ncols} {self.field}"]
        for (i, c), v in sorted(self.entries().items()):
            lines.append(f"{i} {c} {self.field.format(v)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def load(cls, text: str) -> "SparseMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        nrows, ncols, fspec = lines[0].split()
        field = parse_field(fspec)
        triples = []
        for ln in lines[1:]:
            i, c, v = ln.split()
            triples.append((int(i), int(c), field.parse(v)))
        return cls.from_entries(int(nrows), int(ncols), field, triples)


class Subspace:
    """Subspace of k^n held by its reduced row echelon basis.

    Two subspaces are equal iff their bases are equal as data.
    """

    __slots__ = ("ambient_dim", "field", "pivots", "basis")

    def __init__(self, ambient_dim: int, vectors: Iterable[dict] = (), field: FieldCtx = QQ):
        self.ambient_dim = ambient_dim
        self.field = field
        vecs = [{c: field.reduce(x) for c, x in v.items()} for v in vectors]
        pivots, basis = _rref_rows(vecs, ambient_dim, field.p)
        self.pivots = tuple(pivots)
        self.basis = tuple(basis)

    @classmethod
    def _from_rref(cls, ambient_dim, field, pivots, basis):
        s = cls.__new__(cls)
        s.ambient_dim, s.field = ambient_dim, field
        s.pivots, s.basis = tuple(pivots), tuple(basis)
        return s

    @classmethod
    def full(cls, n, field=QQ):
        return cls._from_rref(n, field, range(n), [{i: 1} for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def reduce(self, v: dict) -> dict:
        """Canonical representative of v modulo this subspace."""
        p = self.field.p
        v = {c: self.field.reduce(x) for c, x in v.items()}
        v = {c: x for c, x in v.items() if x}
        for pc, row in zip(self.pivots, self.basis):
            f = v.get(pc)
            if f:
                _elim._sub_scaled(v, f, row, p)
        return v

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def __contains__(self, v):
        return self.contains(v)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim, self.field, self.basis) == (other.ambient_dim, other.field, other.basis)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def rank(m: SparseMatrix) -> int:
    p = m.field.p
    return sum(_rank_rows(rows, ncols, p) for rows, ncols in _components(m.rows, m.ncols))


def image(m: SparseMatrix) -> Subspace:
    """Column space of m as a subspace of k^{rows}."""
    return Subspace(m.nrows, [c for c in m.columns() if c], m.field)


def kernel_basis(m: SparseMatrix) -> Subspace:
    pivots, rref = _rref_rows([r for r in m.rows if r], m.ncols, m.field.p)
    pivset = set(pivots)
    neg = (lambda x: (-x) % m.field.p) if m.field.p else (lambda x: -x)
    by_col: dict[int, dict] = {}
    for pc, row in zip(pivots, rref):
        for c, x in row.items():
            if c != pc:
                by_col.setdefault(c, {})[pc] = neg(x)
    vectors = []
    for f in range(m.ncols):
        if f in pivset:
            continue
        v = dict(by_col.get(f, {}))
        v[f] = 1
        vectors.append(v)
    return Subspace(m.ncols, vectors, m.field)


def quotient_dim(numerator: Subspace, denominator: SparseMatrix) -> int:
    """dim(numerator / image(denominator)), checking the containment."""
    if denominator.nrows != numerator.ambient_dim:
        raise ValueError("dimension mismatch")
    for c, col in enumerate(denominator.columns()):
        if col and numerator.reduce(col):
            raise ImageNotContained(f"column {c} of the denominator leaves the numerator")
    return numerator.dim - rank(denominator)


def reduce_mod_image(v: dict, m: SparseMatrix, img: Subspace | None = None) -> dict:
    """Canonical coset representative of v modulo the column space of m."""
    if img is None:
        img = image(m)
    return img.reduce(v)


def to_dense(v: dict, n: int) -> list:
    out = [0] * n
    for c, x in v.items():
        out[c] = x
    return out


def quotient_representatives(numerator: Subspace, denominator: Subspace) -> list[dict]:
    """Canonical vectors spanning a complement of denominator inside numerator."""
    field = denominator.field
    pivots, basis = list(denominator.pivots), list(denominator.basis)
    reps = []
    for v in numerator.basis:
        acc = Subspace._from_rref(denominator.ambient_dim, field, pivots, basis)
        r = acc.reduce(v)
        if r:
            reps.append(r)
            grown = Subspace(denominator.ambient_dim, basis + [r], field)
            pivots, basis = list(grown.pivots), list(grown.basis)
    return reps

"""Chevalley-Eilenberg cochain complexes C*(g, M) and C*(k, M).

A basis cochain is a key ``(args, m)``: ``args`` a strictly increasing tuple
of algebra basis positions and ``m`` a module basis position. It takes value
``m`` on ``args`` (in that order), extends alternatingly, and vanishes on
every other increasing tuple. A :class:`Cochain` is a sparse combination of
keys. Every sign in this module comes from :func:`normalize`.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from math import comb

from .algebra import ADJOINT, ADJOINT_ON_IDEAL, TRIVIAL, GModule, LiePosetAlgebra
from .fields import FieldCtx
from .linalg import SparseMatrix, Subspace, image, kernel_basis, quotient_representatives, rank


class ComplexError(ValueError):
    pass


class NotHomogeneous(ComplexError):
    pass


class IncompatiblePairing(ComplexError):
    pass


class DimensionMismatch(ComplexError):
    pass


def normalize(args) -> tuple[int, tuple]:
    """Sort ``args``; return (sign of the sorting permutation, sorted tuple).

    Sign 0 if an argument repeats.
    """
    args = list(args)
    sign = 1
    # insertion sort; argument lists are short
    for i in range(1, len(args)):
        x = args[i]
        j = i - 1
        while j >= 0 and args[j] > x:
            args[j + 1] = args[j]
            j -= 1
            sign = -sign
        if j >= 0 and args[j] == x:
            return 0, ()
        args[j + 1] = x
    return sign, tuple(args)


class Cochain:
    """Sparse cochain: ``coeffs`` maps (args, m) keys to raw field values."""

    __slots__ = ("complex", "degree", "coeffs")

    def __init__(self, cx: "CochainComplex", degree: int, coeffs=None):
        self.complex = cx
        self.degree = degree
        red = cx.field.reduce
        out = {}
        for key, v in (coeffs or {}).items():
            if len(key[0]) != degree:
                raise ComplexError(f"key {key} does not have degree {degree}")
            v = red(v)
            if v:
                out[key] = v
        self.coeffs = out

    @property
    def field(self) -> FieldCtx:
        return self.complex.field

    def is_zero(self) -> bool:
        return not self.coeffs

    def _combine(self, other: "Cochain", sign: int) -> "Cochain":
        if other.degree != self.degree:
            raise ComplexError("degree mismatch")
        acc = dict(self.coeffs)
        for k, v in other.coeffs.items():
            acc[k] = acc.get(k, 0) + sign * v
        return Cochain(self.complex, self.degree, acc)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return Cochain(self.complex, self.degree, {k: -v for k, v in self.coeffs.items()})

    def scale(self, c) -> "Cochain":
        return Cochain(self.complex, self.degree, {k: c * v for k, v in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __call__(self, *args) -> dict:
        """Value on algebra basis positions (any order), as a module element."""
        sign, key = normalize(args)
        if not sign:
            return {}
        out = {}
        for (a, m), v in self.coeffs.items():
            if a == key:
                out[m] = self.field.reduce(sign * v)
        return {m: v for m, v in out.items() if v}

    def weights(self) -> set:
        return {self.complex.key_weight(k) for k in self.coeffs}

    def __repr__(self):
        return f"Cochain(deg={self.degree}, terms={len(self.coeffs)})"

    def describe(self) -> str:
        alg, mod = self.complex.algebra, self.complex.module
        parts = []
        for (args, m), v in sorted(self.coeffs.items()):
            a = ",".join(str(alg.basis[x]) for x in args)
            parts.append(f"{self.field.format(v)}*[{a}]->{mod.label(m)}")
        return " + ".join(parts) or "0"


class CochainComplex:
    """C*(acting, M), optionally restricted to its field-weight-zero part."""

    def __init__(self, algebra: LiePosetAlgebra, module: GModule, weight_zero: bool = False):
        self.algebra = algebra
        self.module = module
        self.field = algebra.field
        self.weight_zero = weight_zero
        self.acting = list(module.acting)
        self._bases: dict[int, list] = {}
        self._index: dict[int, dict] = {}
        self._deltas: dict[int, SparseMatrix] = {}
        self._nz_subsets: dict | None = None

    @property
    def acting_name(self) -> str:
        return "k" if self.module.kind == ADJOINT_ON_IDEAL else "g"

    @property
    def top_degree(self) -> int:
        return len(self.acting)

    def key_weight(self, key) -> tuple[int, ...]:
        args, m = key
        w = list(self.module.weights[m])
        for a in args:
            for k, x in enumerate(self.algebra.weights[a]):
                w[k] -= x
        return tuple(w)

    # -- bases -------------------------------------------------------------

    def _nonzero_subsets(self):
        """Subsets of the nonzero-weight acting elements, bucketed by size and weight."""
        if self._nz_subsets is None:
            alg = self.algebra
            nz = [a for a in self.acting if not alg.is_weight_zero(alg.weights[a])]
            by_size: dict[int, dict] = {0: {alg.weight_key((0,) * alg.n_h): [()]}}
            layer = [((), (0,) * alg.n_h, -1)]
            for size in range(1, len(nz) + 1):
                nxt = []
                buckets: dict = {}
                for subset, w, last in layer:
                    for pos in range(last + 1, len(nz)):
                        a = nz[pos]
                        w2 = tuple(x + y for x, y in zip(w, alg.weights[a]))
                        s2 = subset + (a,)
                        nxt.append((s2, w2, pos))
                        buckets.setdefault(alg.weight_key(w2), []).append(s2)
                by_size[size] = buckets
                layer = nxt
            self._nz_subsets = (nz, by_size)
        return self._nz_subsets

    def basis(self, n: int) -> list[tuple]:
        if n in self._bases:
            return self._bases[n]
        if n < 0 or n > self.top_degree:
            keys = []
        elif not self.weight_zero:
            keys = [(args, m) for args in combinations(self.acting, n) for m in range(self.module.dim)]
        else:
            alg = self.algebra
            nz, by_size = self._nonzero_subsets()
            zero_part = [a for a in self.acting if a not in set(nz)]
            keys = []
            for s in range(0, min(n, len(nz)) + 1):
                if n - s > len(zero_part):
                    continue
                for wkey, subsets in by_size.get(s, {}).items():
                    ms = self.module.by_weight.get(wkey, [])
                    if not ms:
                        continue
                    for zs in combinations(zero_part, n - s):
                        for sub in subsets:
                            args = tuple(sorted(zs + sub))
                            keys.extend((args, m) for m in ms)
            keys.sort()
        self._bases[n] = keys
        self._index[n] = {k: i for i, k in enumerate(keys)}
        return keys

    def index(self, n: int) -> dict:
        self.basis(n)
        return self._index[n]

    def dim(self, n: int) -> int:
        return len(self.basis(n))

    def spurious_keys(self, n: int) -> list:
        """Keys whose integer weight is nonzero but vanishes in the field."""
        if not self.field.p:
            return []
        return [
            k for k in self.basis(n)
            if any(self.key_weight(k)) and self.algebra.is_weight_zero(self.key_weight(k))
        ]

    # -- coboundary --------------------------------------------------------

    def delta_of_key(self, key) -> dict:
        """delta of one basis cochain, as {key of degree n+1: int coefficient}."""
        args, m = key
        alg, mod = self.algebra, self.module
        out: dict = {}
        argset = set(args)
        # sum_i (-1)^i [g_i, F(.. g_i omitted ..)]
        if mod.kind != TRIVIAL:
            for x in self.acting:
                if x in argset:
                    continue
                act = mod.action(x, m)
                if not act:
                    continue
                sign, t = normalize((x,) + args)
                # x sits at position i of t; moving it from the front costs (-1)^i
                for m2, c in act.items():
                    k2 = (t, m2)
                    out[k2] = out.get(k2, 0) + sign * c
        # sum_{i<j} (-1)^{i+j} F([g_i, g_j], rest)
        acting = self._acting_set
        for pz, z in enumerate(args):
            rest = args[:pz] + args[pz + 1:]
            restset = set(rest)
            for a, b, c in alg.producers[z]:
                if a in restset or b in restset or a not in acting or b not in acting:
                    continue
                sign, t = normalize((a, b) + rest)
                if not sign:
                    continue
                # sorting (a, b, rest) into t costs (-1)^{i+j-1} for a, b at
                # positions i < j of t; F(z, rest) = (-1)^pz F(args).
                coeff = -sign * c * (-1 if pz % 2 else 1)
                k2 = (t, m)
                out[k2] = out.get(k2, 0) + coeff
        return {k: v for k, v in out.items() if v}

    @property
    def _acting_set(self):
        s = getattr(self, "_acting_cache", None)
        if s is None:
            s = self._acting_cache = frozenset(self.acting)
        return s

    def coboundary_matrix(self, n: int) -> SparseMatrix:
        """Matrix of delta: C^n -> C^{n+1} on the enumerated bases."""
        if n in self._deltas:
            return self._deltas[n]
        src = self.basis(n)
        tgt_index = self.index(n + 1)
        red = self.field.reduce
        rows = [{} for _ in range(len(tgt_index))]
        for c, key in enumerate(src):
            for k2, v in self.delta_of_key(key).items():
                v = red(v)
                if not v:
                    continue
                r = tgt_index.get(k2)
                if r is None:
                    raise ComplexError(f"coboundary leaves the complex at {k2}")
                rows[r][c] = v
        mat = SparseMatrix(len(tgt_index), len(src), self.field, rows)
        self._deltas[n] = mat
        return mat

    def delta(self, F: Cochain) -> Cochain:
        acc: dict = {}
        for key, v in F.coeffs.items():
            for k2, c in self.delta_of_key(key).items():
                acc[k2] = acc.get(k2, 0) + c * v
        return Cochain(self, F.degree + 1, acc)

    # -- vectors <-> cochains ---------------------------------------------

    def to_vector(self, F: Cochain) -> dict:
        idx = self.index(F.degree)
        out = {}
        for k, v in F.coeffs.items():
            if k not in idx:
                raise ComplexError(f"{k} is not a basis key of degree {F.degree}")
            out[idx[k]] = v
        return out

    def from_vector(self, n: int, vec: dict) -> Cochain:
        keys = self.basis(n)
        return Cochain(self, n, {keys[i]: v for i, v in vec.items()})

    def cochain(self, n: int, coeffs: dict) -> Cochain:
        return Cochain(self, n, coeffs)

    def __repr__(self):
        wz = ", weight 0" if self.weight_zero else ""
        return f"C*({self.acting_name}, {self.module.kind}{wz}) over {self.field}"


def complex_for(algebra: LiePosetAlgebra, module_kind: str, weight_zero: bool = False) -> CochainComplex:
    """Cached complex per (algebra, module, filter)."""
    cache = algebra.__dict__.setdefault("_complexes", {})
    key = (module_kind, weight_zero)
    if key not in cache:
        cache[key] = CochainComplex(algebra, algebra.module(module_kind), weight_zero)
    return cache[key]


def ce_coboundary(cx: CochainComplex, n: int) -> SparseMatrix:
    return cx.coboundary_matrix(n)


# -- weights -----------------------------------------------------------------


def weight_decompose(F: Cochain) -> dict:
    """Split F into homogeneous parts keyed by integer weight."""
    parts: dict = {}
    for key, v in F.coeffs.items():
        parts.setdefault(F.complex.key_weight(key), {})[key] = v
    return {w: Cochain(F.complex, F.degree, c) for w, c in sorted(parts.items())}


def weight_zero_part(F: Cochain) -> Cochain:
    alg = F.complex.algebra
    keep = {k: v for k, v in F.coeffs.items() if alg.is_weight_zero(F.complex.key_weight(k))}
    return Cochain(F.complex, F.degree, keep)


def contract(h: dict, F: Cochain) -> Cochain:
    """iota_h F for h in h (eta positions -> coefficients): fixes the first argument."""
    if F.degree < 1:
        raise ComplexError("cannot contract a 0-cochain")
    alg = F.complex.algebra
    for k in h:
        if not alg.basis[k].is_eta:
            raise ComplexError("contraction is only defined for elements of h")
    acc: dict = {}
    for (args, m), v in F.coeffs.items():
        for pos, a in enumerate(args):
            c = h.get(a)
            if c:
                key = (args[:pos] + args[pos + 1:], m)
                acc[key] = acc.get(key, 0) + (-1 if pos % 2 else 1) * c * v
    return Cochain(F.complex, F.degree - 1, acc)


def weight_identity_check(h: dict, F: Cochain) -> bool:
    """iota_h(dF) + d(iota_h F) == w(h) F for F homogeneous of weight w."""
    ws = F.weights()
    if len(ws) > 1:
        raise NotHomogeneous(f"cochain has {len(ws)} distinct weights")
    cx = F.complex
    if F.is_zero():
        return True
    w = next(iter(ws))
    lhs = contract(h, cx.delta(F))
    if F.degree >= 1:
        lhs = lhs + cx.delta(contract(h, F))
    return lhs == F.scale(cx.algebra.evaluate_weight(w, h))


# -- cup product -------------------------------------------------------------


def cup(F: Cochain, G: Cochain) -> Cochain:
    """Shuffle product; one of the two factors must have trivial coefficients."""
    if F.complex.algebra is not G.complex.algebra:
        raise IncompatiblePairing("cochains on different algebras")
    fk, gk = F.complex.module.kind, G.complex.module.kind
    if fk == TRIVIAL:
        target_kind, from_f = gk, False
    elif gk == TRIVIAL:
        target_kind, from_f = fk, True
    else:
        raise IncompatiblePairing(f"no pairing of {fk} with {gk}")
    alg = F.complex.algebra
    wz = F.complex.weight_zero and G.complex.weight_zero
    if target_kind == ADJOINT_ON_IDEAL:
        # a k-cochain paired with a cochain on all of g lives on g
        other = F if from_f else G
        if set(other.complex.acting) != set(alg.k_indices):
            target_kind = ADJOINT
    cx = complex_for(alg, target_kind, wz)
    acc: dict = {}
    for (a, mf), x in F.coeffs.items():
        aset = set(a)
        for (b, mg), y in G.coeffs.items():
            if aset.intersection(b):
                continue
            sign, t = normalize(a + b)
            key = (t, mf if from_f else mg)
            acc[key] = acc.get(key, 0) + sign * x * y
    return Cochain(cx, F.degree + G.degree, acc)


def unit_cochain(algebra: LiePosetAlgebra, weight_zero: bool = False) -> Cochain:
    cx = complex_for(algebra, TRIVIAL, weight_zero)
    return Cochain(cx, 0, {((), 0): 1})


def eta_dual(algebra: LiePosetAlgebra, I) -> Cochain:
    """eta_I^vee as a cochain in C^r(g, k); I lists eta positions."""
    cx = complex_for(algebra, TRIVIAL, True)
    sign, t = normalize(I)
    if not sign:
        return Cochain(cx, len(I), {})
    return Cochain(cx, len(I), {(t, 0): sign})


# -- Hochschild-Serre splitting ------------------------------------------------


def sigma(F: Cochain, r: int) -> dict:
    """{I: iota_{eta_I} F} over increasing eta index sets I of size r."""
    if r > F.degree:
        raise ComplexError("r exceeds the degree")
    alg = F.complex.algebra
    out = {}
    for I in combinations(alg.h_indices, r):
        G = F
        for i in I:
            G = contract({i: 1}, G)
        out[I] = G
    return out


def rho(I, G: Cochain) -> Cochain:
    """eta_I^vee cup G: vanishes unless the leading arguments are eta_I.

    A cochain on k is first extended by zero to g.
    """
    if G.complex.module.kind == ADJOINT_ON_IDEAL:
        G = extend_from_ideal(G)
    return cup(eta_dual(G.complex.algebra, tuple(I)), G)


def bigraded_decompose(F: Cochain) -> dict:
    """{r: part of F whose keys have exactly r eta arguments}."""
    alg = F.complex.algebra
    parts: dict = {}
    for (args, m), v in F.coeffs.items():
        r = sum(1 for a in args if alg.basis[a].is_eta)
        parts.setdefault(r, {})[(args, m)] = v
    return {r: Cochain(F.complex, F.degree, c) for r, c in sorted(parts.items())}


def restrict_to_ideal(G: Cochain) -> Cochain:
    """View a cochain of C*(g, g) that vanishes on h as a cochain of C*(k, g)."""
    alg = G.complex.algebra
    if G.complex.module.kind != ADJOINT:
        raise ComplexError("restriction is defined for adjoint coefficients")
    for args, _ in G.coeffs:
        if any(alg.basis[a].is_eta for a in args):
            raise ComplexError("cochain does not vanish on h")
    return Cochain(complex_for(alg, ADJOINT_ON_IDEAL, G.complex.weight_zero), G.degree, G.coeffs)


def extend_from_ideal(G: Cochain) -> Cochain:
    """Extend a cochain of C*(k, g) by zero on h-arguments to C*(g, g)."""
    alg = G.complex.algebra
    kind = ADJOINT if G.complex.module.kind == ADJOINT_ON_IDEAL else G.complex.module.kind
    return Cochain(complex_for(alg, kind, G.complex.weight_zero), G.degree, G.coeffs)


# -- cohomology --------------------------------------------------------------


@dataclass
class CERow:
    degree: int
    dim_c: int
    rank_out: int
    rank_in: int
    dim_h: int
    representatives: list = dc_field(default_factory=list)


@dataclass
class CEResult:
    complex: CochainComplex
    rows: list[CERow]

    def dims(self) -> dict[int, int]:
        return {r.degree: r.dim_h for r in self.rows}

    def dim(self, n: int) -> int:
        return self.dims().get(n, 0)

    def euler_characteristic(self) -> int:
        return sum((-r.dim_h if r.degree % 2 else r.dim_h) for r in self.rows)


def cohomology(cx: CochainComplex, degrees=None, representatives: bool = False) -> CEResult:
    if degrees is None:
        degrees = range(0, cx.top_degree + 1)
    degrees = sorted(set(degrees))
    for n in degrees:
        if n < 0 or n > cx.top_degree:
            raise ComplexError(f"degree {n} outside [0, {cx.top_degree}]")
    ranks: dict[int, int] = {}

    def rk(n):
        if n < 0 or n >= cx.top_degree:
            return 0
        if n not in ranks:
            ranks[n] = rank(cx.coboundary_matrix(n))
        return ranks[n]

    rows = []
    for n in degrees:
        dim_c = cx.dim(n)
        r_out, r_in = rk(n), rk(n - 1)
        reps = []
        if representatives:
            reps = cohomology_representatives(cx, n)
        rows.append(CERow(n, dim_c, r_out, r_in, dim_c - r_out - r_in, reps))
    return CEResult(cx, rows)


def cohomology_representatives(cx: CochainComplex, n: int) -> list[Cochain]:
    ker = kernel_basis(cx.coboundary_matrix(n))
    if n > 0:
        im = image(cx.coboundary_matrix(n - 1))
    else:
        im = Subspace(cx.dim(n), [], cx.field)
    return [cx.from_vector(n, v) for v in quotient_representatives(ker, im)]


def is_cocycle(F: Cochain) -> bool:
    return F.complex.delta(F).is_zero()


def reduce_class(F: Cochain) -> Cochain:
    """Canonical representative of F modulo coboundaries of its complex."""
    cx = F.complex
    if F.degree == 0:
        return F
    img = _image_cache(cx, F.degree - 1)
    return cx.from_vector(F.degree, img.reduce(cx.to_vector(F)))


def _image_cache(cx: CochainComplex, n: int) -> Subspace:
    cache = cx.__dict__.setdefault("_images", {})
    if n not in cache:
        cache[n] = image(cx.coboundary_matrix(n))
    return cache[n]


# -- nerve comparison map ----------------------------------------------------


def phi(algebra: LiePosetAlgebra, f) -> Cochain:
    """Map a simplicial cochain of the augmented nerve into C^n(k, g)_0.

    Degree 0 sends f to the trace-zero diagonal f - mean(f) in eta
    coordinates; degree n >= 1 sends the chain (i0 < ... < in) to the
    cochain taking (e_{i0 i1}, ..., e_{i(n-1) in}) to f(i0..in) e_{i0 in}.
    """
    if f.dim < 0:
        raise DimensionMismatch("phi is defined in degrees >= 0")
    field = algebra.field
    if f.field != field:
        raise DimensionMismatch("field mismatch")
    cx = complex_for(algebra, ADJOINT_ON_IDEAL, True)
    idx = algebra.index
    from .algebra import E

    for s in f.values:
        if any(not algebra.poset.less(a, b) for a, b in zip(s, s[1:])) or any(
            not (1 <= v <= algebra.N) for v in s
        ):
            raise DimensionMismatch(f"{s} is not a simplex of the nerve")
    if f.dim == 0:
        N = algebra.N
        total = field.reduce(sum(f.values.get((i,), 0) for i in range(1, N + 1)))
        mean = field.div(total, N)
        coeffs = {}
        acc = 0
        for k in range(1, N):
            acc += f.values.get((k,), 0) - mean
            coeffs[((), idx[_eta(k)])] = acc
        return Cochain(cx, 0, coeffs)
    coeffs = {}
    for s, v in f.values.items():
        args = [idx[E(a, b)] for a, b in zip(s, s[1:])]
        sign, t = normalize(args)
        key = (t, idx[E(s[0], s[-1])])
        coeffs[key] = coeffs.get(key, 0) + sign * v
    return Cochain(cx, f.dim, coeffs)


def _eta(k):
    from .algebra import Eta

    return Eta(k)


def phi_matrix(algebra: LiePosetAlgebra, cx_nerve, n: int) -> SparseMatrix:
    """Matrix of phi in degree n: columns = n-simplices, rows = C^n(k, g)_0 basis."""
    from .nerve import SimplicialCochain

    target = complex_for(algebra, ADJOINT_ON_IDEAL, True)
    simp = cx_nerve.simplices(n)
    cols = []
    for s in simp:
        F = phi(algebra, SimplicialCochain(n, {s: 1}, algebra.field))
        cols.append(target.to_vector(F))
    return SparseMatrix.from_columns(target.dim(n), len(simp), algebra.field, cols)


# -- semidirect factorisation ------------------------------------------------


@dataclass
class FactorizationReport:
    module: str
    field: str
    left: dict  # n -> dim H^n(g, M)
    right: dict  # n -> sum_r C(N-1, r) dim H^{n-r}(k, M)_0
    ideal: dict  # m -> dim H^m(k, M)_0
    nerve: dict  # m -> dim H^m(Sigma+) (adjoint only)
    ok: bool


def tensor_factorization_check(algebra: LiePosetAlgebra, module_kind: str, max_degree=None) -> FactorizationReport:
    from .nerve import build_nerve, simplicial_cohomology

    full = complex_for(algebra, module_kind, False)
    top = full.top_degree if max_degree is None else min(max_degree, full.top_degree)
    left = cohomology(full, range(0, top + 1)).dims()
    ideal_kind = ADJOINT_ON_IDEAL if module_kind == ADJOINT else module_kind
    if ideal_kind == TRIVIAL:
        kcx = _trivial_on_ideal(algebra)
    else:
        kcx = complex_for(algebra, ideal_kind, True)
    kd = cohomology(kcx, range(0, min(top, kcx.top_degree) + 1)).dims()
    nh = algebra.n_h
    right = {n: sum(comb(nh, r) * kd.get(n - r, 0) for r in range(0, min(n, nh) + 1)) for n in left}
    nerve = {}
    ok = left == right
    if module_kind == ADJOINT:
        nc = simplicial_cohomology(build_nerve(algebra.poset, True), algebra.field, representatives=False)
        nerve = {m: nc.dim(m) for m in kd}
        ok = ok and all(kd[m] == nerve[m] for m in kd)
    return FactorizationReport(module_kind, str(algebra.field), left, right, kd, nerve, ok)


def _trivial_on_ideal(algebra: LiePosetAlgebra, weight_zero: bool = True) -> CochainComplex:
    """C*(k, k) with trivial coefficients."""
    cache = algebra.__dict__.setdefault("_complexes", {})
    key = ("trivial-ideal", weight_zero)
    if key not in cache:
        mod = GModule(algebra, TRIVIAL, 1, list(algebra.k_indices), [(0,) * algebra.n_h])
        cache[key] = CochainComplex(algebra, mod, weight_zero)
    return cache[key]


def complex_for_acting(algebra: LiePosetAlgebra, module_kind: str, acting: str = "g", weight_zero: bool = False):
    """C*(g, M) or C*(k, M) for M trivial or adjoint (restricted to k when acting = k)."""
    if acting not in ("g", "k"):
        raise ComplexError(f"acting algebra must be g or k, not {acting!r}")
    if module_kind not in (TRIVIAL, ADJOINT):
        raise ComplexError(f"unsupported module {module_kind!r}")
    if acting == "g":
        return complex_for(algebra, module_kind, weight_zero)
    if module_kind == TRIVIAL:
        return _trivial_on_ideal(algebra, weight_zero)
    return complex_for(algebra, ADJOINT_ON_IDEAL, weight_zero)

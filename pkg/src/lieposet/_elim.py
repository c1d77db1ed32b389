"""Pure-Python sparse elimination kernels.

Rows are ``dict[int, value]`` with no stored zeros. ``p == 0`` means the
rationals (values are ``int`` or ``Fraction``); otherwise values are ints
mod ``p``. The ``*_mod_p`` functions double as the fallback for the
compiled kernel in ``_fpkernel``.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd, lcm

from .fields import inv_mod


def _primitive(row: dict) -> dict:
    """Scale a rational row to coprime integers (fraction-free form)."""
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    if den != 1:
        row = {c: int(v * den) for c, v in row.items()}
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    return row


def markowitz_rank(rows: list[dict], ncols: int, p: int = 0) -> int:
    """Rank by right-looking elimination with Markowitz-style pivoting.

    The pivot row is a sparsest remaining row (lowest index on ties) and the
    pivot column is the one in that row with the fewest entries (lowest
    column on ties). Over Q the update is fraction-free: rows stay primitive
    integer vectors.
    """
    R: dict[int, dict] = {}
    for i, r in enumerate(rows):
        if not r:
            continue
        R[i] = _primitive(dict(r)) if p == 0 else {c: v % p for c, v in r.items() if v % p}
        if not R[i]:
            del R[i]
    C: dict[int, set] = {}
    for i, r in R.items():
        for c in r:
            C.setdefault(c, set()).add(i)
    heap = [(len(r), i) for i, r in R.items()]
    heapq.heapify(heap)
    rank = 0
    while heap:
        n, i = heapq.heappop(heap)
        r = R.get(i)
        if r is None or len(r) != n:
            continue
        pc = min(r, key=lambda c: (len(C[c]), c))
        pv = r[pc]
        rank += 1
        del R[i]
        for c in r:
            C[c].discard(i)
        targets = sorted(C.pop(pc))
        if p:
            ipv = inv_mod(pv, p)
        for j in targets:
            rj = R[j]
            a = rj[pc]
            if p:
                f = a * ipv % p
                for c, v in r.items():
                    nv = (rj.get(c, 0) - f * v) % p
                    if nv:
                        if c not in rj:
                            C[c].add(j)
                        rj[c] = nv
                    elif c in rj:
                        del rj[c]
                        if c != pc:
                            C[c].discard(j)
            else:
                new = {c: pv * v for c, v in rj.items()}
                for c, v in r.items():
                    nv = new.get(c, 0) - a * v
                    if nv:
                        new[c] = nv
                    elif c in new:
                        del new[c]
                new = _primitive(new) if new else new
                for c in rj:
                    if c not in new and c != pc:
                        C[c].discard(j)
                for c in new:
                    if c not in rj:
                        C[c].add(j)
                R[j] = rj = new
            if rj:
                heapq.heappush(heap, (len(rj), j))
            else:
                del R[j]
    return rank


def _sub_scaled(v: dict, f, w: dict, p: int) -> None:
    """v -= f * w in place."""
    if p:
        for c, x in w.items():
            nv = (v.get(c, 0) - f * x) % p
            if nv:
                v[c] = nv
            else:
                v.pop(c, None)
    else:
        for c, x in w.items():
            nv = v.get(c, 0) - f * x
            if nv:
                v[c] = nv
            else:
                v.pop(c, None)


def _normalize(v: dict, p: int) -> dict:
    lead = min(v)
    a = v[lead]
    if p:
        ia = inv_mod(a, p)
        return {c: x * ia % p for c, x in v.items()}
    if a == 1:
        return v
    out = {}
    for c, x in v.items():
        q = Fraction(x) / a
        out[c] = q.numerator if q.denominator == 1 else q
    return out


def echelon(rows: list[dict], ncols: int, p: int = 0, reduced: bool = True):
    """Row echelon form, pivot-sorted, with leading coefficients 1.

    Returns ``(pivots, rows)`` where ``rows[k]`` has leading column
    ``pivots[k]``. With ``reduced`` the result is the (unique) reduced
    row echelon form of the row space.
    """
    piv: dict[int, dict] = {}
    for r in rows:
        if p:
            v = {c: x % p for c, x in r.items() if x % p}
        else:
            v = {c: x for c, x in r.items() if x}
        while v:
            lead = min(v)
            pr = piv.get(lead)
            if pr is None:
                break
            _sub_scaled(v, v[lead], pr, p)
        if v:
            v = _normalize(v, p)
            piv[min(v)] = v
    order = sorted(piv)
    if reduced:
        for k in range(len(order) - 1, -1, -1):
            pc = order[k]
            row = piv[pc]
            for q in order[:k]:
                other = piv[q]
                f = other.get(pc)
                if f:
                    _sub_scaled(other, f, row, p)
    return order, [piv[c] for c in order]


def rank_mod_p(rows: list[dict], ncols: int, p: int) -> int:
    return markowitz_rank(rows, ncols, p)


def rref_mod_p(rows: list[dict], ncols: int, p: int):
    return echelon(rows, ncols, p, reduced=True)

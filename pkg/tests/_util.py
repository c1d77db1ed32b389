"""Shared helpers for building random test data."""

import random

from lieposet import QQ, FieldCtx, parse_field


FIELDS = [QQ, parse_field("fp:7")]


def random_scalar(rng: random.Random, field: FieldCtx):
    if field.p:
        return rng.randrange(field.p)
    from fractions import Fraction

    return field.reduce(Fraction(rng.randint(-5, 5), rng.randint(1, 3)))


def random_cochain(cx, n, rng, density=0.3, max_terms=12):
    """Sparse random cochain of degree n in the complex cx."""
    keys = cx.basis(n)
    if not keys:
        return cx.cochain(n, {})
    k = min(len(keys), max(1, int(density * len(keys))), max_terms)
    coeffs = {}
    for key in rng.sample(keys, rng.randint(1, k)):
        coeffs[key] = random_scalar(rng, cx.field) or 1
    return cx.cochain(n, coeffs)


def random_matrix(rng, nrows, ncols, field, density=0.3):
    from lieposet import SparseMatrix

    rows = []
    for _ in range(nrows):
        rows.append({c: random_scalar(rng, field) for c in range(ncols) if rng.random() < density})
    return SparseMatrix(nrows, ncols, field, rows)

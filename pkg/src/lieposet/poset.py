"""Finite posets on {1..N} compatible with the integer order."""

from __future__ import annotations

import json
import random
from functools import cached_property
from itertools import combinations
from pathlib import Path


class PosetError(ValueError):
    pass


class IncompatiblePair(PosetError):
    pass


class OutOfRange(PosetError):
    pass


class BadParam(PosetError):
    pass


def transitive_closure(n: int, pairs) -> frozenset:
    ups = {i: set() for i in range(1, n + 1)}
    for i, j in pairs:
        ups[i].add(j)
    # elements only point upward, so sweeping from the top closes everything
    for i in range(n, 0, -1):
        for j in list(ups[i]):
            ups[i] |= ups[j]
    return frozenset((i, j) for i in ups for j in ups[i])


class Poset:
    """Strict order on 1..N, always stored transitively closed."""

    def __init__(self, n: int, pairs=()):
        if n < 0:
            raise OutOfRange(f"negative size {n}")
        pairs = [tuple(p) for p in pairs]
        for i, j in pairs:
            if not (1 <= i <= n and 1 <= j <= n):
                raise OutOfRange(f"pair ({i},{j}) outside 1..{n}")
            if i >= j:
                raise IncompatiblePair(f"pair ({i},{j}) is not compatible with the linear order")
        self.n = n
        self.pairs = transitive_closure(n, pairs)

    @cached_property
    def relations(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)

    @cached_property
    def ups(self) -> dict[int, tuple[int, ...]]:
        out = {i: [] for i in range(1, self.n + 1)}
        for i, j in self.relations:
            out[i].append(j)
        return {i: tuple(v) for i, v in out.items()}

    def less(self, i: int, j: int) -> bool:
        return (i, j) in self.pairs

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges."""
        return [
            (i, j)
            for i, j in self.relations
            if not any((i, k) in self.pairs and (k, j) in self.pairs for k in range(i + 1, j))
        ]

    def chains(self, k: int) -> list[tuple[int, ...]]:
        """All k-element chains i0 < i1 < ... in lexicographic order."""
        if k < 1:
            raise BadParam("chain length must be >= 1")
        out = []

        def extend(chain):
            if len(chain) == k:
                out.append(tuple(chain))
                return
            for j in self.ups[chain[-1]]:
                chain.append(j)
                extend(chain)
                chain.pop()

        for i in range(1, self.n + 1):
            extend([i])
        return out

    def height(self) -> int:
        """Number of elements in a longest chain."""
        best = {}
        for i in range(self.n, 0, -1):
            best[i] = 1 + max((best[j] for j in self.ups[i]), default=0)
        return max(best.values(), default=0)

    def comparability_components(self) -> list[list[int]]:
        parent = list(range(self.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, j in self.relations:
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
        comps: dict[int, list[int]] = {}
        for i in range(1, self.n + 1):
            comps.setdefault(find(i), []).append(i)
        return sorted(comps.values())

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and self.pairs == other.pairs

    def __hash__(self):
        return hash((self.n, self.pairs))

    def __repr__(self):
        return f"Poset({self.n}, {self.relations})"

    def to_json(self) -> dict:
        return {"n": self.n, "relations": [list(p) for p in self.covers()]}

    @classmethod
    def from_json(cls, data: dict) -> "Poset":
        return cls(int(data["n"]), [tuple(r) for r in data.get("relations", [])])

    @classmethod
    def load(cls, path) -> "Poset":
        return cls.from_json(json.loads(Path(path).read_text()))


def poset_from_relations(n: int, pairs) -> Poset:
    return Poset(n, pairs)


def chain(n: int) -> Poset:
    if n < 1:
        raise BadParam("chain needs at least one element")
    return Poset(n, [(i, i + 1) for i in range(1, n)])


def antichain(n: int) -> Poset:
    if n < 1:
        raise BadParam("antichain needs at least one element")
    return Poset(n)


def sphere(n: int) -> Poset:
    """n-fold two-point suspension of S^0; 2n+2 elements in levels of two."""
    if n < 0:
        raise BadParam("sphere dimension must be >= 0")
    pairs = []
    for level in range(n):
        lo = (2 * level + 1, 2 * level + 2)
        hi = (2 * level + 3, 2 * level + 4)
        pairs += [(a, b) for a in lo for b in hi]
    return Poset(2 * n + 2, pairs)


FAMILIES = {"chain": chain, "antichain": antichain, "sphere": sphere}


def named_poset(family: str, param: int) -> Poset:
    try:
        make = FAMILIES[family]
    except KeyError:
        raise BadParam(f"unknown family {family!r}") from None
    return make(int(param))


def parse_family(spec: str) -> Poset:
    """``chain:3``, ``sphere:1``, ..."""
    family, _, param = spec.partition(":")
    if not param:
        raise BadParam(f"expected family:param, got {spec!r}")
    try:
        value = int(param)
    except ValueError:
        raise BadParam(f"bad parameter {param!r}") from None
    return named_poset(family, value)


def random_poset(n: int, rng: random.Random, density: float = 0.4) -> Poset:
    pairs = [(i, j) for i, j in combinations(range(1, n + 1), 2) if rng.random() < density]
    return Poset(n, pairs)

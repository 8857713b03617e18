"""Orbits of the permutation skew brace action and exact n-decomposability."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .core import Permutation, Solution, is_morphism

DEFAULT_GROUP_CAP = 10**7


class GroupCapExceeded(RuntimeError):
    pass


class UnionFind:
    def __init__(self, items: Iterable[int]):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if y < x:
            x, y = y, x
        self.parent[y] = x
        return True


@dataclass(frozen=True)
class EquivPartition:
    """A partition of {0, ..., n-1}; classes are numbered by first element."""

    class_of: tuple[int, ...]

    def __post_init__(self):
        relabel = {}
        for c in self.class_of:
            relabel.setdefault(c, len(relabel))
        object.__setattr__(self, "class_of", tuple(relabel[c] for c in self.class_of))

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "EquivPartition":
        class_of = [-1] * n
        for i, block in enumerate(blocks):
            for x in block:
                if class_of[x] != -1:
                    raise ValueError(f"element {x} appears in two blocks")
                class_of[x] = i
        if -1 in class_of:
            raise ValueError("blocks do not cover every element")
        return cls(tuple(class_of))

    @classmethod
    def from_union_find(cls, n: int, uf: UnionFind) -> "EquivPartition":
        return cls(tuple(uf.find(x) for x in range(n)))

    @classmethod
    def discrete(cls, n: int) -> "EquivPartition":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.class_of)

    @property
    def num_classes(self) -> int:
        return max(self.class_of, default=-1) + 1

    def blocks(self) -> list[tuple[int, ...]]:
        out = [[] for _ in range(self.num_classes)]
        for x, c in enumerate(self.class_of):
            out[c].append(x)
        return [tuple(b) for b in out]

    def is_discrete(self) -> bool:
        return self.num_classes == self.n

    def refines(self, other: "EquivPartition") -> bool:
        """Every class of self lies inside a class of other."""
        image = {}
        for a, b in zip(self.class_of, other.class_of):
            if image.setdefault(a, b) != b:
                return False
        return True

    def __str__(self):
        return "|".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks())


def s_group_orbits(s: Solution) -> EquivPartition:
    """Orbits of X under the group generated by all lambda_x and sigma_x."""
    uf = UnionFind(range(s.n))
    for gens in (s.lam, s.sigma_table):
        for p in gens:
            for x in range(s.n):
                uf.union(x, p[x])
    return EquivPartition.from_union_find(s.n, uf)


def respects_decomposition(s: Solution, partition: EquivPartition) -> bool:
    """r(X_i x X_j) is contained in X_j x X_i for all blocks X_i, X_j."""
    c = partition.class_of
    for x in range(s.n):
        for y in range(s.n):
            u, v = s.r(x, y)
            if c[u] != c[y] or c[v] != c[x]:
                return False
    return True


def max_decomposability(s: Solution) -> tuple[int, EquivPartition]:
    orbits = s_group_orbits(s)
    assert respects_decomposition(s, orbits), "orbit partition is not a decomposition"
    return orbits.num_classes, orbits


def is_decomposable(s: Solution) -> tuple[bool, tuple[int, ...] | None]:
    """Decomposability with an epimorphism onto the twist on {0, 1} as certificate.

    The class containing 0 maps to 0 and everything else to 1.
    """
    n_max, orbits = max_decomposability(s)
    if n_max < 2:
        return False, None
    f = tuple(0 if c == 0 else 1 for c in orbits.class_of)
    assert is_morphism(f, s, Solution.twist(2)), "certificate is not a morphism"
    return True, f


def g_group_order(s: Solution, cap: int = DEFAULT_GROUP_CAP) -> int:
    """Order of the group generated by (lambda_x, rho_x^{-1}) by breadth-first closure."""
    n = s.n
    gens = {Permutation._trusted(tuple(s.lam[x]) + tuple(n + i for i in s.rho[x].inverse()))
            for x in range(n)}
    ident = Permutation.identity(2 * n)
    seen = {ident}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for h in gens:
            gh = g * h
            if gh not in seen:
                seen.add(gh)
                if len(seen) > cap:
                    raise GroupCapExceeded(f"group has more than {cap} elements")
                queue.append(gh)
    return len(seen)

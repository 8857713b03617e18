"""Finite set-theoretic solutions of the Yang-Baxter equation.

A solution on ``X = {0, ..., n-1}`` is stored as two tables of permutations,
``lam[x] = lambda_x`` and ``rho[y] = rho_y``, so that

    r(x, y) = (lam[x][y], rho[y][x]).
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class MalformedTableError(ValueError):
    """Tables have the wrong shape or contain out-of-range entries."""


class NotASolutionError(ValueError):
    """Raised by :meth:`Solution.check` when an axiom fails."""

    def __init__(self, report):
        self.report = report
        first = report[0] if report else None
        super().__init__(f"not a bijective non-degenerate solution: {first}")


class DiagonalNotBijectiveError(ValueError):
    """The diagonal map x -> lambda_x^{-1}(x) is not a permutation."""

    def __init__(self, images):
        self.images = tuple(images)
        super().__init__(f"diagonal map is not bijective: {self.images}")


class Permutation(tuple):
    """A bijection of {0, ..., n-1} stored as its image array.

    ``p(i)`` is the image of ``i``; ``p * q`` is the composite
    ``i -> p(q(i))`` (``q`` is applied first).
    """

    __slots__ = ()

    def __new__(cls, images: Iterable[int] = ()):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        return super().__new__(cls, images)

    @classmethod
    def _trusted(cls, images) -> "Permutation":
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._trusted(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]], base: int = 0) -> "Permutation":
        """Build from cycle notation; ``base=1`` reads 1-indexed cycles."""
        images = list(range(n))
        seen = set()
        for cycle in cycles:
            cycle = [c - base for c in cycle]
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                if a in seen or not 0 <= a < n:
                    raise ValueError(f"bad cycle {cycle} for n={n}")
                seen.add(a)
                images[a] = b
        return cls(images)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation._trusted(self[i] for i in other)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(len(self))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return Permutation._trusted(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def cycles(self, singletons: bool = False) -> list[tuple[int, ...]]:
        out = []
        seen = [False] * len(self)
        for start in range(len(self)):
            if seen[start]:
                continue
            cycle = []
            i = start
            while not seen[i]:
                seen[i] = True
                cycle.append(i)
                i = self[i]
            if singletons or len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def cycle_type(self) -> list[int]:
        return sorted((len(c) for c in self.cycles(singletons=True)), reverse=True)

    def order(self) -> int:
        return math.lcm(*self.cycle_type()) if len(self) else 1

    def cycle_string(self, base: int = 0) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(i + base) for i in c) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation({list(self)})"


def _perm_or_none(row):
    try:
        return Permutation(row)
    except ValueError:
        return None


def _table(rows, n: int, name: str) -> tuple[tuple[int, ...], ...]:
    try:
        rows = [tuple(int(v) for v in row) for row in rows]
    except (TypeError, ValueError) as exc:
        raise MalformedTableError(f"{name}: entries must be integers") from exc
    if len(rows) != n:
        raise MalformedTableError(f"{name}: expected {n} rows, got {len(rows)}")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise MalformedTableError(f"{name}[{i}]: expected {n} entries, got {len(row)}")
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise MalformedTableError(f"{name}[{i}][{j}] = {v} out of range 0..{n - 1}")
    return tuple(rows)


class Solution:
    """A finite set-theoretic solution given by its lambda and rho tables.

    Construction only checks the table shapes; use :func:`validate` or
    :meth:`check` for the axioms. Instances are immutable and hashable by
    their tables (the name is not part of the identity).
    """

    def __init__(self, lam, rho, name: str | None = None):
        lam = list(lam)
        n = len(lam)
        if n < 1:
            raise MalformedTableError("a solution needs n >= 1")
        self._lam_rows = _table(lam, n, "lambda")
        self._rho_rows = _table(rho, n, "rho")
        self.n = n
        self.name = name

    @classmethod
    def from_involutive_lambda(cls, lam, name: str | None = None) -> "Solution":
        """Derive rho from ``rho_y(x) = lambda^{-1}_{lambda_x(y)}(x)``."""
        lam = _table(list(lam), len(lam), "lambda")
        inv = []
        for row in lam:
            p = _perm_or_none(row)
            if p is None:
                raise MalformedTableError(f"lambda row {list(row)} is not a permutation")
            inv.append(p.inverse())
        n = len(lam)
        rho = [[inv[lam[x][y]][x] for x in range(n)] for y in range(n)]
        return cls(lam, rho, name=name)

    @classmethod
    def twist(cls, n: int) -> "Solution":
        ident = list(range(n))
        return cls([ident] * n, [ident] * n, name=f"twist{n}")

    @classmethod
    def from_rack(cls, op, name: str | None = None) -> "Solution":
        """The solution r(x, y) = (y, x <| y) of a rack table ``op[x][y]``."""
        n = len(op)
        ident = list(range(n))
        rho = [[op[x][y] for x in range(n)] for y in range(n)]
        return cls([ident] * n, rho, name=name)

    @cached_property
    def lam(self) -> tuple[Permutation, ...]:
        """lambda_x as permutations; raises if non-degeneracy fails."""
        return tuple(Permutation(row) for row in self._lam_rows)

    @cached_property
    def rho(self) -> tuple[Permutation, ...]:
        return tuple(Permutation(row) for row in self._rho_rows)

    @cached_property
    def lam_inv(self) -> tuple[Permutation, ...]:
        return tuple(p.inverse() for p in self.lam)

    @cached_property
    def sigma_table(self) -> tuple[Permutation, ...]:
        """``sigma_table[y] = sigma_y``, the right translations of the derived rack."""
        n, L, R, Li = self.n, self._lam_rows, self._rho_rows, self.lam_inv
        return tuple(
            Permutation._trusted(L[y][R[Li[x][y]][x]] for x in range(n)) for y in range(n)
        )

    @cached_property
    def flags(self) -> "Flags":
        return classify(self)

    def r(self, x: int, y: int) -> tuple[int, int]:
        return self._lam_rows[x][y], self._rho_rows[y][x]

    def tables(self) -> tuple[tuple, tuple]:
        return self._lam_rows, self._rho_rows

    def check(self) -> "Solution":
        report = validate(self)
        if report:
            raise NotASolutionError(report)
        return self

    def relabel(self, g: Sequence[int]) -> "Solution":
        """Transport the tables along the bijection ``g``."""
        n = self.n
        ginv = [0] * n
        for i, j in enumerate(g):
            ginv[j] = i
        L, R = self._lam_rows, self._rho_rows
        lam = [[g[L[ginv[a]][ginv[b]]] for b in range(n)] for a in range(n)]
        rho = [[g[R[ginv[b]][ginv[a]]] for a in range(n)] for b in range(n)]
        return Solution(lam, rho, name=self.name)

    def __eq__(self, other):
        if not isinstance(other, Solution):
            return NotImplemented
        return self.tables() == other.tables()

    def __hash__(self):
        return hash(self.tables())

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Solution{label} n={self.n}>"

    def to_dict(self) -> dict:
        d = {"n": self.n}
        if self.name is not None:
            d["name"] = self.name
        d["lambda"] = [list(row) for row in self._lam_rows]
        d["rho"] = [list(row) for row in self._rho_rows]
        return d

    def to_json(self) -> str:
        """Canonical JSON: keys n, name, lambda, rho; one table row per line."""
        parts = [f'  "n": {self.n}']
        if self.name is not None:
            parts.append(f'  "name": {json.dumps(self.name)}')
        for key, rows in (("lambda", self._lam_rows), ("rho", self._rho_rows)):
            body = ",\n".join("    " + json.dumps(list(row)) for row in rows)
            parts.append(f'  "{key}": [\n{body}\n  ]')
        return "{\n" + ",\n".join(parts) + "\n}\n"

    @classmethod
    def from_dict(cls, data: dict) -> "Solution":
        if not isinstance(data, dict):
            raise MalformedTableError("solution file must hold a JSON object")
        for key in ("n", "lambda"):
            if key not in data:
                raise MalformedTableError(f"missing field {key!r}")
        n = data["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise MalformedTableError(f"field 'n' must be a positive integer, got {n!r}")
        lam = data["lambda"]
        if not isinstance(lam, list) or len(lam) != n:
            raise MalformedTableError(f"field 'lambda' must be a list of {n} rows")
        name = data.get("name")
        if data.get("involutive") is True and "rho" not in data:
            return cls.from_involutive_lambda(lam, name=name)
        if "rho" not in data:
            raise MalformedTableError("missing field 'rho' (or set \"involutive\": true)")
        rho = data["rho"]
        if not isinstance(rho, list) or len(rho) != n:
            raise MalformedTableError(f"field 'rho' must be a list of {n} rows")
        return cls(lam, rho, name=name)


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: tuple
    detail: str = ""

    def __str__(self):
        return f"{self.kind} at {self.witness}" + (f": {self.detail}" if self.detail else "")


def validate(s: Solution) -> list[Violation]:
    """List every failed axiom of a bijective non-degenerate solution.

    An empty list means ``s`` is valid. The braid relation is checked on all
    n^3 triples directly.
    """
    n = s.n
    L, R = s.tables()
    report = []
    for x in range(n):
        if _perm_or_none(L[x]) is None:
            report.append(Violation("lambda_not_bijective", (x,), f"lambda_{x} = {list(L[x])}"))
    for y in range(n):
        if _perm_or_none(R[y]) is None:
            report.append(Violation("rho_not_bijective", (y,), f"rho_{y} = {list(R[y])}"))

    seen = {}
    for x in range(n):
        for y in range(n):
            img = (L[x][y], R[y][x])
            if img in seen:
                report.append(Violation("r_not_bijective", (seen[img], (x, y)), f"both map to {img}"))
            else:
                seen[img] = (x, y)

    def r12(t):
        a, b, c = t
        return L[a][b], R[b][a], c

    def r23(t):
        a, b, c = t
        return a, L[b][c], R[c][b]

    for t in itertools.product(range(n), repeat=3):
        left = r12(r23(r12(t)))
        right = r23(r12(r23(t)))
        if left != right:
            report.append(Violation("braid", t, f"{left} != {right}"))
    return report


def is_solution(s: Solution) -> bool:
    return not validate(s)


def _check_index(s: Solution, y: int) -> None:
    if not 0 <= y < s.n:
        raise IndexError(f"index {y} out of range for n={s.n}")


def sigma(s: Solution, y: int) -> Permutation:
    """sigma_y(x) = x <| y = lambda_y(rho_{lambda_x^{-1}(y)}(x))."""
    _check_index(s, y)
    return s.sigma_table[y]


def sigma_prime(s: Solution, y: int) -> Permutation:
    """x -> lambda_y^{-1}(rho_{lambda_x^{-1}(y)}(x)).

    Note sigma_y = lambda_y**2 * sigma'_y, not lambda_y * sigma'_y.
    """
    _check_index(s, y)
    return s.lam_inv[y] * s.lam_inv[y] * s.sigma_table[y]


class Rack:
    def __init__(self, op):
        n = len(op)
        self.op = _table(op, n, "op")
        self.n = n

    def __call__(self, x: int, y: int) -> int:
        return self.op[x][y]

    def violations(self) -> list[tuple]:
        n, op = self.n, self.op
        bad = []
        for y in range(n):
            if _perm_or_none([op[x][y] for x in range(n)]) is None:
                bad.append(("translation_not_bijective", (y,)))
        for x, y, z in itertools.product(range(n), repeat=3):
            if op[op[x][y]][z] != op[op[x][z]][op[y][z]]:
                bad.append(("self_distributivity", (x, y, z)))
        return bad

    def is_rack(self) -> bool:
        return not self.violations()

    def is_quandle(self) -> bool:
        return all(self.op[x][x] == x for x in range(self.n))

    def __eq__(self, other):
        return isinstance(other, Rack) and self.op == other.op

    def __hash__(self):
        return hash(self.op)


def derived_rack(s: Solution) -> Rack:
    n = s.n
    sig = s.sigma_table
    rack = Rack([[sig[y][x] for y in range(n)] for x in range(n)])
    assert rack.is_rack(), "derived rack fails the rack axioms"
    return rack


def derived_solution(s: Solution) -> Solution:
    """The solution r(x, y) = (y, x <| y) of the derived rack."""
    n = s.n
    ident = list(range(n))
    return Solution([ident] * n, [list(p) for p in s.sigma_table], name=s.name and f"{s.name}/derived")


@dataclass(frozen=True)
class Flags:
    involutive: bool
    square_free: bool
    biquandle: bool
    derived_is_quandle: bool


def classify(s: Solution) -> Flags:
    n = s.n
    involutive = all(s.r(*s.r(x, y)) == (x, y) for x in range(n) for y in range(n))
    square_free = all(s.r(x, x) == (x, x) for x in range(n))
    quandle = all(s.sigma_table[x][x] == x for x in range(n))
    return Flags(involutive, square_free, quandle, quandle)


def diagonal_images(s: Solution) -> tuple[int, ...]:
    return tuple(s.lam_inv[x][x] for x in range(s.n))


def diagonal_map(s: Solution) -> Permutation:
    """q(x) = lambda_x^{-1}(x); raises if it is not a permutation."""
    images = diagonal_images(s)
    q = _perm_or_none(images)
    if q is None:
        raise DiagonalNotBijectiveError(images)
    return q


def is_morphism(f: Sequence[int], s: Solution, t: Solution) -> bool:
    """Whether (f x f) r_s = r_t (f x f) pointwise."""
    if len(f) != s.n:
        raise ValueError(f"map has {len(f)} entries, source has n={s.n}")
    for v in f:
        if not 0 <= v < t.n:
            raise ValueError(f"map value {v} out of range for target n={t.n}")
    for x in range(s.n):
        for y in range(s.n):
            u, v = s.r(x, y)
            if (f[u], f[v]) != t.r(f[x], f[y]):
                return False
    return True

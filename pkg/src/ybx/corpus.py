"""Published example solutions and exhaustive enumeration of small solutions."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterator

from .core import Solution, validate

MAX_ENUMERATION_SIZE = 4
SLOW_ENUMERATION_SIZE = 4
MAX_ISO_SIZE = 6

# Labelled (not up to isomorphism) counts of bijective non-degenerate
# solutions, produced by the unpruned product search and frozen here.
SOLUTION_COUNTS = {1: 1, 2: 4, 3: 66}

FIXTURE_NAMES = (
    "twist2",
    "split3",
    "dihedral3",
    "cycle3",
    "s3_transpositions",
    "invol6",
)


@dataclass(frozen=True)
class Fixture:
    name: str
    solution: Solution
    # invariant name -> (value, provenance tag)
    expected: dict = field(default_factory=dict)


def load_solution(path) -> Solution:
    with open(path, encoding="utf-8") as fh:
        return Solution.from_dict(json.load(fh))


def fixture_solution(name: str) -> Solution:
    text = resources.files("ybx").joinpath("fixtures", f"{name}.json").read_text(encoding="utf-8")
    return Solution.from_dict(json.loads(text))


EXPECTED = {
    "twist2": {
        "valid": (True, "TRIVIAL"),
        "dehornoy_class": (1, "TRIVIAL"),
        "decomposable": (True, "TRIVIAL"),
        "simple": (True, "TRIVIAL"),
    },
    "split3": {
        "valid": (True, "PUBLISHED"),
        "biquandle": (True, "DERIVED"),
        "square_free": (True, "DERIVED"),
        "involutive": (False, "DERIVED"),
        "n_max": (2, "PUBLISHED"),
        "orbits": ("{0,1}|{2}", "PUBLISHED"),
        "inj_kernel": ("{0,1}|{2}", "PUBLISHED"),
        "injective": (False, "PUBLISHED"),
        "bq_kernel": ("{0}|{1}|{2}", "DERIVED"),
        "retract_size": (2, "DERIVED"),
        "simple": (False, "PUBLISHED"),
    },
    "dihedral3": {
        "valid": (True, "PUBLISHED"),
        "dehornoy_class": (2, "DERIVED"),
        "n_max": (1, "PUBLISHED"),
        "injective": (True, "PUBLISHED"),
        "inj_kernel": ("{0}|{1}|{2}", "PUBLISHED"),
        "multipermutation_level": (None, "DERIVED"),
        "simple": (True, "DERIVED"),
    },
    "cycle3": {
        "valid": (True, "PUBLISHED"),
        "inj_size": (1, "PUBLISHED"),
        "bq_size": (1, "DERIVED"),
        "g_group_order": (3, "DERIVED"),
    },
    "s3_transpositions": {
        "valid": (True, "PUBLISHED"),
        "square_free": (True, "PUBLISHED"),
        "n_max": (1, "PUBLISHED"),
        "g_group_order": (6, "PUBLISHED"),
        "A_nilpotent": (False, "PUBLISHED"),
    },
    "invol6": {
        "valid": (True, "PUBLISHED"),
        "involutive": (True, "PUBLISHED"),
        "biquandle": (True, "PUBLISHED"),
        "dehornoy_class": (3, "PUBLISHED"),
        "diagonal": ("(0 2 1)(3 5 4)", "DERIVED"),
        "q_partition": ([3, 3], "DERIVED"),
        "multipermutation_level": (3, "DERIVED"),
        "A_nilpotent": (True, "DERIVED"),
    },
}


def fixture(name: str) -> Fixture:
    return Fixture(name, fixture_solution(name), dict(EXPECTED.get(name, {})))


def fixtures() -> list[Fixture]:
    return [fixture(name) for name in FIXTURE_NAMES]


def _lambda_candidates(n, lam, lam_index):
    """For each (x, y), the t with lambda_x lambda_y = lambda_{lambda_x(y)} lambda_t."""
    cand = [[None] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            u = lam[x][y]
            lu = lam[u]
            # lambda_t = lambda_u^{-1} lambda_x lambda_y
            target = [0] * n
            prod = [lam[x][lam[y][i]] for i in range(n)]
            for i in range(n):
                target[lu[i]] = i
            want = tuple(target[prod[i]] for i in range(n))
            ts = lam_index.get(want)
            if not ts:
                return None
            cand[x][y] = ts
    return cand


def _partial_braid_ok(n, lam, rho):
    """Check every triple whose evaluation only touches assigned rho rows."""
    for a, b, c in itertools.product(range(n), repeat=3):
        # left: r12 r23 r12
        if rho[b] is None:
            continue
        a1, b1 = lam[a][b], rho[b][a]
        if rho[c] is None:
            continue
        b2, c2 = lam[b1][c], rho[c][b1]
        if rho[b2] is None:
            continue
        left = (lam[a1][b2], rho[b2][a1], c2)
        # right: r23 r12 r23
        b1, c1 = lam[b][c], rho[c][b]
        if rho[b1] is None:
            continue
        a2, b2 = lam[a][b1], rho[b1][a]
        if rho[c1] is None:
            continue
        right = (a2, lam[b2][c1], rho[c1][b2])
        if left != right:
            return False
    return True


def enumerate_solutions(n: int, slow: bool = False) -> Iterator[Solution]:
    """Yield every solution on {0, ..., n-1} in lexicographic (lambda, rho) order.

    Lambda tables are filtered by the first component braid equation, then
    rho rows are assigned depth-first with pruning on completed triples.
    """
    if n < 1 or n > MAX_ENUMERATION_SIZE:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUMERATION_SIZE}")
    if n >= SLOW_ENUMERATION_SIZE and not slow:
        raise ValueError(f"n={n} enumeration is slow; pass slow=True")
    perms = list(itertools.permutations(range(n)))
    for lam in itertools.product(perms, repeat=n):
        lam_index = {}
        for t, p in enumerate(lam):
            lam_index.setdefault(p, []).append(t)
        cand = _lambda_candidates(n, lam, lam_index)
        if cand is None:
            continue
        row_options = []
        for y in range(n):
            allowed = [set(cand[x][y]) for x in range(n)]
            row_options.append([p for p in perms if all(p[x] in allowed[x] for x in range(n))])
        if not all(row_options):
            continue
        rho = [None] * n

        def extend(y):
            if y == n:
                s = Solution(lam, rho)
                if not validate(s):
                    yield s
                return
            for p in row_options[y]:
                rho[y] = p
                if _partial_braid_ok(n, lam, rho):
                    yield from extend(y + 1)
            rho[y] = None

        yield from extend(0)


def iso_equivalent(s: Solution, t: Solution) -> bool:
    """Whether some relabelling of s has exactly the tables of t."""
    if s.n != t.n:
        return False
    if s.n > MAX_ISO_SIZE:
        raise ValueError(f"factorial isomorphism search is limited to n <= {MAX_ISO_SIZE}")
    target = t.tables()
    return any(s.relabel(g).tables() == target for g in itertools.permutations(range(s.n)))


def iso_classes(solutions) -> list[Solution]:
    """One representative per isomorphism class, in first-seen order."""
    reps: list[Solution] = []
    for s in solutions:
        if not any(iso_equivalent(s, r) for r in reps):
            reps.append(s)
    return reps

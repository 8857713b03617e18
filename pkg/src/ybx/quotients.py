"""Quotient solutions: associated biquandle, retraction and injectivization."""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass

from .core import Solution, is_morphism, validate
from .decomposition import EquivPartition, UnionFind
from .monoid import DEFAULT_L_MAX, DEFAULT_NODE_CAP, WordEquality, equal_in_G

log = logging.getLogger(__name__)


class IllDefinedQuotientError(RuntimeError):
    def __init__(self, kernel: EquivPartition, detail: str):
        self.kernel = kernel
        super().__init__(f"kernel {kernel} does not induce a solution: {detail}")


class Status(enum.Enum):
    EXACT = "exact"
    UNKNOWN = "unknown"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class QuotientResult:
    kernel: EquivPartition
    quotient: Solution
    status: Status = Status.EXACT
    iterations: int = 1


def induced_solution(s: Solution, kernel: EquivPartition, name: str | None = None) -> Solution:
    """The solution induced on the classes of ``kernel``.

    Raises IllDefinedQuotientError when the kernel is not compatible with r
    or the induced tables fail validation.
    """
    c = kernel.class_of
    m = kernel.num_classes
    lam = [[None] * m for _ in range(m)]
    rho = [[None] * m for _ in range(m)]
    for x in range(s.n):
        for y in range(s.n):
            u, v = s.r(x, y)
            a, b = c[x], c[y]
            if lam[a][b] is None:
                lam[a][b], rho[b][a] = c[u], c[v]
            elif (lam[a][b], rho[b][a]) != (c[u], c[v]):
                raise IllDefinedQuotientError(kernel, f"r({x},{y}) is not constant on classes")
    q = Solution(lam, rho, name=name)
    report = validate(q)
    if report:
        raise IllDefinedQuotientError(kernel, str(report[0]))
    assert is_morphism(c, s, q)
    return q


def _closure(n: int, pairs) -> EquivPartition:
    uf = UnionFind(range(n))
    for x, y in pairs:
        uf.union(x, y)
    return EquivPartition.from_union_find(n, uf)


def bq_quotient(s: Solution) -> QuotientResult:
    """The associated biquandle: identify x ~ lambda_x(y) whenever rho_y(x) = y.

    The identification is repeated on the quotient until it stabilizes; the
    number of rounds that merged something is recorded in ``iterations``.
    """
    n = s.n
    kernel = EquivPartition.discrete(n)
    current = s
    rounds = 0
    while True:
        pairs = [(x, current.lam[x][y]) for x in range(current.n) for y in range(current.n)
                 if current.rho[y][x] == y]
        step = _closure(current.n, pairs)
        if step.is_discrete():
            break
        rounds += 1
        current = induced_solution(current, step)
        kernel = EquivPartition(tuple(step.class_of[k] for k in kernel.class_of))
    if rounds > 1:
        log.info("associated biquandle of %r needed %d rounds", s, rounds)
    assert current.flags.biquandle, "associated biquandle is not a biquandle"
    quotient = induced_solution(s, kernel, name=s.name and f"BQ({s.name})")
    return QuotientResult(kernel, quotient, Status.EXACT, rounds)


def retract_kernel(s: Solution) -> EquivPartition:
    keys = {}
    class_of = []
    for x in range(s.n):
        key = (s.lam[x], s.sigma_table[x])
        class_of.append(keys.setdefault(key, len(keys)))
    return EquivPartition(tuple(class_of))


def retract(s: Solution) -> QuotientResult:
    """Identify x and y when lambda_x = lambda_y and sigma_x = sigma_y."""
    kernel = retract_kernel(s)
    quotient = induced_solution(s, kernel, name=s.name and f"Ret({s.name})")
    return QuotientResult(kernel, quotient)


def multipermutation_level(s: Solution) -> int | None:
    """Number of retractions needed to reach one element, or None if never."""
    level = 0
    current = s
    while current.n > 1:
        nxt = retract(current).quotient
        if nxt.n == current.n:
            return None
        current = nxt
        level += 1
    return level


def injectivization(s: Solution, l_max: int = DEFAULT_L_MAX,
                    node_cap: int = DEFAULT_NODE_CAP) -> QuotientResult:
    """The image of X in the structure group G(X, r), with its induced solution.

    Only confirmed identifications are applied. If any pair stays undecided
    the status is UNKNOWN and the kernel is a lower bound.
    """
    n = s.n
    uf = UnionFind(range(n))
    unknown = False
    for x in range(n):
        for y in range(x + 1, n):
            if uf.find(x) == uf.find(y):
                continue
            outcome = equal_in_G(s, x, y, l_max=l_max, node_cap=node_cap)
            if outcome is WordEquality.EQUAL:
                uf.union(x, y)
            elif outcome is not WordEquality.DISTINCT:
                unknown = True
    kernel = EquivPartition.from_union_find(n, uf)
    status = Status.UNKNOWN if unknown else Status.EXACT
    quotient = induced_solution(s, kernel, name=s.name and f"Inj({s.name})")
    return QuotientResult(kernel, quotient, status)


def is_injective(s: Solution, l_max: int = DEFAULT_L_MAX,
                 node_cap: int = DEFAULT_NODE_CAP) -> bool | None:
    """True, False, or None when the decision procedure ran out of budget."""
    res = injectivization(s, l_max=l_max, node_cap=node_cap)
    if not res.kernel.is_discrete():
        return False
    return True if res.status is Status.EXACT else None

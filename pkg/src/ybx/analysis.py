"""Verdicts on decomposability and simplicity.

The orbit computation is the ground truth. The numerical criteria are
evaluated next to it and must never disagree with it; a disagreement raises
:class:`InconsistentVerdictError`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .core import DiagonalNotBijectiveError, Solution, derived_solution, diagonal_map
from .decomposition import EquivPartition, UnionFind, is_decomposable, max_decomposability
from .monoid import DEFAULT_L_MAX, DEFAULT_NODE_CAP
from .quotients import Status, induced_solution, injectivization, multipermutation_level


class InconsistentVerdictError(RuntimeError):
    pass


class Conclusion(enum.Enum):
    DECOMPOSABLE = "decomposable"
    INDECOMPOSABLE = "indecomposable"
    SIMPLE = "simple"
    NOT_SIMPLE = "not simple"
    NO_VERDICT = "no verdict"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Reason:
    criterion: str
    inputs: dict
    fired: bool
    cause: str = ""


@dataclass
class Verdict:
    conclusion: Conclusion
    reasons: list[Reason] = field(default_factory=list)
    certificates: dict = field(default_factory=dict)

    def reason(self, criterion: str) -> Reason:
        for r in self.reasons:
            if r.criterion == criterion:
                return r
        raise KeyError(criterion)


def is_A_nilpotent(s: Solution) -> bool:
    """A(X, r) is nilpotent iff the derived rack has finite multipermutation level."""
    return multipermutation_level(derived_solution(s)) is not None


def q_partition(s: Solution) -> list[int]:
    """Cycle lengths of the diagonal map, largest first."""
    return diagonal_map(s).cycle_type()


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % i for i in range(2, math.isqrt(p) + 1))


def forbidden_q_terms(n: int, partition: list[int]) -> list[tuple[int, int, int]]:
    """Terms t of the q-partition with (p-1)s < t < ps and gcd(t, p) = 1, for n = ps.

    Only n that are a product of two distinct primes are considered. Returns
    (p, s, t) triples.
    """
    hits = []
    for p in range(2, n + 1):
        if n % p or not _is_prime(p):
            continue
        s = n // p
        if s == p or not _is_prime(s):
            continue
        for t in sorted(set(partition)):
            if (p - 1) * s < t < p * s and math.gcd(t, p) == 1:
                hits.append((p, s, t))
    return hits


def indecomposability_report(s: Solution, l_max: int = DEFAULT_L_MAX,
                             node_cap: int = DEFAULT_NODE_CAP) -> Verdict:
    """Evaluate the orbit test and the numerical decomposability criteria.

    (a) orbit count; (b) square-free and A(X, r) nilpotent; (c) A(X, r)
    nilpotent and gcd(n, |q|) = 1; (d) the q-partition test for n = ps.
    Criteria (b)-(d) also need the injectivization to have at least two
    elements (otherwise G(X, r) is infinite cyclic and they do not apply).
    """
    n_max, orbits = max_decomposability(s)
    decomposable = n_max >= 2
    verdict = Verdict(Conclusion.DECOMPOSABLE if decomposable else Conclusion.INDECOMPOSABLE)
    verdict.certificates["orbits"] = orbits
    if decomposable:
        verdict.certificates["epimorphism"] = is_decomposable(s)[1]
    verdict.reasons.append(Reason("orbits", {"n_max": n_max, "orbits": str(orbits)}, True))

    nilpotent = is_A_nilpotent(s)
    square_free = s.flags.square_free
    inj = injectivization(s, l_max=l_max, node_cap=node_cap)
    inj_size = inj.quotient.n if inj.status is Status.EXACT else None
    applicable = inj_size is not None and inj_size >= 2
    if inj_size is None:
        guard = "injectivization undecided"
    elif inj_size < 2:
        guard = "injectivization is a single point (G(X, r) is infinite cyclic)"
    else:
        guard = ""
    try:
        q = diagonal_map(s)
    except DiagonalNotBijectiveError:
        q = None

    def add(name, inputs, fired, cause=""):
        verdict.reasons.append(Reason(name, inputs, fired, cause))
        if fired and not decomposable:
            raise InconsistentVerdictError(f"criterion {name} claims decomposable, orbit test disagrees")

    inputs = {"square_free": square_free, "A_nilpotent": nilpotent, "inj_size": inj_size}
    if not applicable:
        add("square_free_nilpotent", inputs, False, guard)
    elif not (square_free and nilpotent):
        add("square_free_nilpotent", inputs, False, "hypothesis not met")
    else:
        add("square_free_nilpotent", inputs, True)

    inputs = {"n": s.n, "q_order": q.order() if q else None, "A_nilpotent": nilpotent,
              "inj_size": inj_size}
    if q is None:
        add("gcd", inputs, False, "diagonal map is not bijective")
    elif not applicable:
        add("gcd", inputs, False, guard)
    elif not (nilpotent and math.gcd(s.n, q.order()) == 1):
        add("gcd", inputs, False, "hypothesis not met")
    else:
        add("gcd", inputs, True)

    partition = q.cycle_type() if q else None
    derived_mp = multipermutation_level(derived_solution(s))
    hits = forbidden_q_terms(s.n, partition) if partition else []
    inputs = {"n": s.n, "q_partition": partition, "derived_mp_level": derived_mp,
              "forbidden_terms": hits, "inj_size": inj_size}
    if q is None:
        add("q_partition", inputs, False, "diagonal map is not bijective")
    elif not applicable:
        add("q_partition", inputs, False, guard)
    elif derived_mp is None:
        add("q_partition", inputs, False, "derived solution is not multipermutation")
    elif not hits:
        add("q_partition", inputs, False, "no forbidden term")
    else:
        add("q_partition", inputs, True, "forbidden term rules out indecomposability")
    return verdict


def congruence_closure(s: Solution, pairs) -> EquivPartition:
    """The smallest solution congruence containing the given pairs."""
    n = s.n
    uf = UnionFind(range(n))
    for x, y in pairs:
        uf.union(x, y)
    L, R = s.tables()
    changed = True
    while changed:
        changed = False
        reps = [uf.find(x) for x in range(n)]
        for x in range(n):
            x0 = reps[x]
            for y in range(n):
                y0 = reps[y]
                if x == x0 and y == y0:
                    continue
                if uf.union(L[x][y], L[x0][y0]):
                    changed = True
                if uf.union(R[y][x], R[y0][x0]):
                    changed = True
    return EquivPartition.from_union_find(n, uf)


def is_simple(s: Solution) -> tuple[bool, EquivPartition | None]:
    """Simplicity via the congruences generated by single pairs.

    Returns the first proper non-trivial kernel found as a witness.
    """
    if s.n < 2:
        raise ValueError("simplicity is defined here for n >= 2")
    for x in range(s.n):
        for y in range(x + 1, s.n):
            kernel = congruence_closure(s, [(x, y)])
            if kernel.num_classes > 1:
                induced_solution(s, kernel)
                return False, kernel
    return True, None


def simplicity_verdict(s: Solution) -> Verdict:
    simple, witness = is_simple(s)
    v = Verdict(Conclusion.SIMPLE if simple else Conclusion.NOT_SIMPLE)
    v.reasons.append(Reason("principal_congruences", {"n": s.n}, True))
    if witness is not None:
        v.certificates["kernel"] = witness
    return v

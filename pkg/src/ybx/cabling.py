"""k-cabled solutions of biquandles.

The k-cabling pulls back the solution that the structure monoid induces on
the multiples kX = {kx}. With w = lambda_{kx}(y):

    lambda^(k)_x = lambda_{kx}
    rho^(k)_y(x) = lambda_{kw}^{-1}(sigma_w^k(x))
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Solution, is_morphism, validate
from .monoid import dehornoy_class, lambda_of_multiple, sigma_of_multiple


class NotABiquandleError(ValueError):
    def __init__(self, s: Solution):
        super().__init__(
            f"{s!r} is not a biquandle; cabling is defined for biquandles only "
            "(take the associated biquandle first, e.g. `ybx quotient --kind bq`)"
        )


class CablingError(RuntimeError):
    """The constructed table failed validation; this indicates a bug."""


@dataclass(frozen=True)
class CabledSolution:
    base: Solution
    k: int
    result: Solution


def cable(s: Solution, k: int, reduce: bool = False) -> CabledSolution:
    """The k-cabled solution of the biquandle ``s``.

    With ``reduce=True`` k is first replaced by its residue modulo the
    Dehornoy class d (0 read as d); the returned ``k`` is the one actually used.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    if not s.flags.biquandle:
        raise NotABiquandleError(s)
    if reduce:
        d = dehornoy_class(s)
        k = k % d or d
    n = s.n
    lam_k = [lambda_of_multiple(s, x, k) for x in range(n)]
    lam_k_inv = [p.inverse() for p in lam_k]
    sig_k = [sigma_of_multiple(s, x, k) for x in range(n)]
    rho = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            w = lam_k[x][y]
            rho[y][x] = lam_k_inv[w][sig_k[w][x]]
    name = s.name and f"{s.name}^({k})"
    result = Solution([list(p) for p in lam_k], rho, name=name)
    report = validate(result)
    if report:
        raise CablingError(f"{k}-cabling of {s!r} is not a solution: {report[0]}")
    if not result.flags.biquandle:
        raise CablingError(f"{k}-cabling of {s!r} is not a biquandle")
    return CabledSolution(s, k, result)


def cable_of_cable_check(s: Solution, k: int, k2: int) -> bool:
    """Whether cabling by k then k2 equals cabling by k * k2, table for table."""
    twice = cable(cable(s, k).result, k2).result
    return twice == cable(s, k * k2).result


def cabled_morphism_check(f: Sequence[int], s: Solution, t: Solution, k: int) -> bool:
    """Whether a morphism of biquandles stays a morphism after k-cabling both sides."""
    if not (s.flags.biquandle and t.flags.biquandle):
        raise ValueError("both solutions must be biquandles")
    if not is_morphism(f, s, t):
        raise ValueError("f is not a morphism of the given solutions")
    return is_morphism(f, cable(s, k).result, cable(t, k).result)

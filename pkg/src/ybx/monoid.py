"""Arithmetic in the structure monoid M(X, r) and the derived monoid A(X, r).

Elements of the additive monoid (M, +) = A(X, r) are written as positive
words over X. The defining relations are ``a + b = b + sigma_b(a)`` where
``sigma`` is the derived rack, so a single rewrite replaces an adjacent pair
``(a, b)`` with ``(b, sigma_b(a))``. Multiples ``kx`` are the words
``[x] * k``; in (M, o) they factor as ``x o q(x) o ... o q^{k-1}(x)``.
"""

from __future__ import annotations

import enum
from collections import Counter
from typing import Sequence

from .core import Permutation, Solution, diagonal_map
from .decomposition import UnionFind

DEFAULT_L_MAX = 3
DEFAULT_NODE_CAP = 5_000_000
DEFAULT_DEHORNOY_CAP = 10**6


class DehornoyCapExceeded(RuntimeError):
    pass


class WordEquality(enum.Enum):
    EQUAL = "equal"
    DISTINCT = "distinct"
    CAPPED = "capped"
    UNKNOWN = "unknown"

    def __str__(self):
        return self.value


def _check_positive(k: int) -> None:
    if k < 1:
        raise ValueError(f"multiple must be a positive integer, got {k}")


def lambda_of_multiple(s: Solution, x: int, k: int) -> Permutation:
    """lambda_{kx} = lambda_x * lambda_{q(x)} * ... * lambda_{q^{k-1}(x)}."""
    _check_positive(k)
    q = diagonal_map(s)
    result = s.lam[x]
    y = x
    for _ in range(k - 1):
        y = q[y]
        result = result * s.lam[y]
    return result


def sigma_of_multiple(s: Solution, x: int, k: int) -> Permutation:
    """sigma_{kx} = sigma_x^k."""
    _check_positive(k)
    return s.sigma_table[x] ** k


def dehornoy_class(s: Solution, cap: int = DEFAULT_DEHORNOY_CAP) -> int:
    """Least d >= 1 with lambda_{dx} = sigma_{dx} = id for every x."""
    q = diagonal_map(s)
    n = s.n
    lam = list(s.lam)
    sig = list(s.sigma_table)
    # per x: current lambda_{dx}, sigma_x^d and q^d(x)
    cur_lam = list(lam)
    cur_sig = list(sig)
    tip = [q[x] for x in range(n)]
    for d in range(1, cap + 1):
        if all(p.is_identity() for p in cur_lam) and all(p.is_identity() for p in cur_sig):
            return d
        for x in range(n):
            cur_lam[x] = cur_lam[x] * lam[tip[x]]
            tip[x] = q[tip[x]]
            cur_sig[x] = cur_sig[x] * sig[x]
    raise DehornoyCapExceeded(f"no Dehornoy class found below {cap}")


def _check_word(s: Solution, w: Sequence[int]) -> tuple[int, ...]:
    w = tuple(int(a) for a in w)
    for a in w:
        if not 0 <= a < s.n:
            raise ValueError(f"letter {a} out of range for n={s.n}")
    return w


def word_invariants(s: Solution, w: Sequence[int]) -> tuple:
    """Quantities that coincide for words equal in the structure group.

    These are the letter counts per derived-rack orbit (the abelianization),
    the lambda-map of the element and its sigma-map (an anti-homomorphism of
    the derived group). Differing invariants prove distinctness.
    """
    uf = UnionFind(range(s.n))
    for p in s.sigma_table:
        for x in range(s.n):
            uf.union(x, p[x])
    counts = Counter(uf.find(a) for a in w)
    lam = Permutation.identity(s.n)
    sig = Permutation.identity(s.n)
    for a in w:
        # lambda_{u + a} = lambda_u * lambda_{lambda_u^{-1}(a)}
        lam = lam * s.lam[lam.inverse()[a]]
        sig = s.sigma_table[a] * sig
    return tuple(sorted(counts.items())), lam, sig


def _neighbours(word, sig, sig_inv):
    for i in range(len(word) - 1):
        a, b = word[i], word[i + 1]
        yield word[:i] + (b, sig[b][a]) + word[i + 2:]
        yield word[:i] + (sig_inv[a][b], a) + word[i + 2:]


def _search(s: Solution, u: tuple, v: tuple, node_cap: int) -> WordEquality:
    """Bidirectional search over the rewriting classes of u and v."""
    if u == v:
        return WordEquality.EQUAL
    sig = [tuple(p) for p in s.sigma_table]
    sig_inv = [tuple(p.inverse()) for p in s.sigma_table]
    seen = [{u}, {v}]
    frontier = [[u], [v]]
    while True:
        if not frontier[0] or not frontier[1]:
            # one class is fully enumerated and does not meet the other
            return WordEquality.DISTINCT
        side = 0 if len(frontier[0]) <= len(frontier[1]) else 1
        mine, other = seen[side], seen[1 - side]
        nxt = []
        for w in frontier[side]:
            for w2 in _neighbours(w, sig, sig_inv):
                if w2 in mine:
                    continue
                if w2 in other:
                    return WordEquality.EQUAL
                mine.add(w2)
                nxt.append(w2)
                if len(seen[0]) + len(seen[1]) > node_cap:
                    return WordEquality.CAPPED
        frontier[side] = nxt


def words_equal_in_A(s: Solution, u: Sequence[int], v: Sequence[int],
                     node_cap: int = DEFAULT_NODE_CAP) -> WordEquality:
    """Decide equality of two positive words in A(X, r) by exhaustive rewriting.

    Returns DISTINCT only when it is proved: different lengths, a differing
    invariant, or a fully enumerated rewriting class.
    """
    u, v = _check_word(s, u), _check_word(s, v)
    if u == v:
        return WordEquality.EQUAL
    if len(u) != len(v):
        return WordEquality.DISTINCT
    if word_invariants(s, u) != word_invariants(s, v):
        return WordEquality.DISTINCT
    return _search(s, u, v, node_cap)


def z_word(s: Solution, d: int | None = None, order: Sequence[int] | None = None) -> tuple[int, ...]:
    """z = d x_0 + d x_1 + ... + d x_{n-1} as a word (ascending order by default)."""
    if d is None:
        d = dehornoy_class(s)
    order = range(s.n) if order is None else order
    return tuple(x for x in order for _ in range(d))


def words_equal_in_G(s: Solution, u: Sequence[int], v: Sequence[int],
                     l_max: int = DEFAULT_L_MAX, node_cap: int = DEFAULT_NODE_CAP) -> WordEquality:
    """Decide whether two positive words agree in the structure group.

    Uses the cancellative congruence: u and v agree in G(X, r) iff
    ``u + l z = v + l z`` in A(X, r) for a suitable l. Tries l = 1..l_max.
    EQUAL is always sound. DISTINCT means a group invariant differs, or every
    class up to ``l_max`` was enumerated without a match. UNKNOWN means a
    search hit ``node_cap``.
    """
    u, v = _check_word(s, u), _check_word(s, v)
    if u == v:
        return WordEquality.EQUAL
    if len(u) != len(v) or word_invariants(s, u) != word_invariants(s, v):
        return WordEquality.DISTINCT
    z = z_word(s)
    capped = False
    for N in range(1, l_max + 1):
        outcome = _search(s, u + z * N, v + z * N, node_cap)
        if outcome is WordEquality.EQUAL:
            return outcome
        if outcome is WordEquality.CAPPED:
            capped = True
    return WordEquality.UNKNOWN if capped else WordEquality.DISTINCT


def equal_in_G(s: Solution, x: int, y: int, l_max: int = DEFAULT_L_MAX,
               node_cap: int = DEFAULT_NODE_CAP) -> WordEquality:
    """Whether generators x and y have the same image in G(X, r)."""
    return words_equal_in_G(s, [x], [y], l_max=l_max, node_cap=node_cap)

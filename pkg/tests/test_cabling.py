import itertools
from math import gcd

import pytest

from conftest import small_corpus
from oracles import is_n_decomposition, orbit_sizes
from ybx.cabling import (
    NotABiquandleError,
    cable,
    cable_of_cable_check,
    cabled_morphism_check,
)
from ybx.core import Solution, diagonal_map, is_morphism
from ybx.decomposition import is_decomposable, s_group_orbits
from ybx.monoid import dehornoy_class
from ybx.quotients import retract_kernel


def _biquandles():
    return [s for s in small_corpus() if s.flags.biquandle]


def _retractable(s):
    return not retract_kernel(s).is_discrete()


def test_twist_is_fixed(twist2):
    for k in (1, 2, 5):
        assert cable(twist2, k).result == twist2


def test_invol6_two_cable_table(examples):
    s = examples["invol6"]
    got = [p.cycle_string(base=1) for p in cable(s, 2).result.lam]
    assert got == ["(1 3 2)(4 6 5)", "(1 3 2)(4 5 6)", "(1 3 2)",
                   "(4 6 5)", "(4 6 5)", "(4 6 5)"]


def test_injective_example_two_cable_is_twist(examples):
    t = cable(examples["dihedral3"], 2).result
    assert t == Solution.twist(3)


def test_non_biquandle_is_refused(examples):
    with pytest.raises(NotABiquandleError, match="quotient --kind bq"):
        cable(examples["cycle3"], 2)
    with pytest.raises(ValueError):
        cable(examples["invol6"], 0)


def test_cable_one_is_identity():
    for s in _biquandles():
        assert cable(s, 1).result == s


def test_reduce_uses_dehornoy_residue(examples):
    s = examples["invol6"]
    assert cable(s, 4).result == cable(s, 1).result == s
    assert cable(s, 3).result == cable(s, 6).result
    c = cable(s, 5, reduce=True)
    assert c.k == 2 and c.result == cable(s, 2).result
    assert cable(s, 3, reduce=True).k == 3


def test_cable_of_cable_on_invol6(examples):
    s = examples["invol6"]
    assert cable_of_cable_check(s, 1, 1)
    assert cable_of_cable_check(s, 2, 2)


def test_cable_of_cable_on_corpus():
    for s in _biquandles():
        for k, k2 in itertools.product((1, 2, 3), repeat=2):
            assert cable_of_cable_check(s, k, k2)


def test_residue_mod_dehornoy_class():
    for s in _biquandles():
        d = dehornoy_class(s)
        for k in range(1, 2 * d + 2):
            assert cable(s, k).result == cable(s, k % d or d).result
        assert all(p.is_identity() for p in cable(s, d).result.lam)


def test_diagonal_of_cable_is_power():
    for s in _biquandles():
        q = diagonal_map(s)
        for k in (1, 2, 3, 4):
            assert diagonal_map(cable(s, k).result) == q ** k


def test_diagonal_of_cable_on_invol6(examples):
    s = examples["invol6"]
    q = diagonal_map(s)
    for k in range(1, 7):
        assert diagonal_map(cable(s, k).result) == q ** k


def test_cabled_morphism_examples(examples, twist2):
    s = examples["split3"]
    assert cabled_morphism_check([0, 1, 2], s, s, 2)
    assert cabled_morphism_check([0, 0, 1], s, twist2, 2)
    with pytest.raises(ValueError):
        cabled_morphism_check([0, 1, 0], s, twist2, 2)


def test_cabled_morphisms_on_corpus():
    bq = _biquandles()
    count = 0
    for s, t in itertools.product(bq, repeat=2):
        if s.n > 3 or t.n > 2:
            continue
        for f in itertools.product(range(t.n), repeat=s.n):
            if is_morphism(f, s, t):
                count += 1
                for k in (2, 3):
                    assert cabled_morphism_check(f, s, t, k)
    assert count > 0


def test_decomposability_preserved():
    for s in _biquandles():
        if is_decomposable(s)[0]:
            for k in (1, 2, 3, 4):
                assert is_decomposable(cable(s, k).result)[0]


def test_indecomposability_preserved_for_coprime_k():
    for s in _biquandles():
        if s.n > 1 and not is_decomposable(s)[0]:
            d = dehornoy_class(s)
            for k in range(1, 7):
                if gcd(k, d) == 1:
                    assert not is_decomposable(cable(s, k).result)[0]


def _closed_subsets(s):
    for size in range(1, s.n):
        for sub in itertools.combinations(range(s.n), size):
            sub = set(sub)
            if all(set(s.r(x, y)) <= sub for x in sub for y in sub):
                yield sub


def test_subsolutions_stay_closed():
    for s in _biquandles():
        for sub in _closed_subsets(s):
            for k in (2, 3):
                c = cable(s, k).result
                assert all(set(c.r(x, y)) <= sub for x in sub for y in sub)


def test_retractability_preserved():
    for s in _biquandles():
        if s.n > 1 and _retractable(s):
            for k in (2, 3):
                assert _retractable(cable(s, k).result)


def _m_k(m, k):
    return max(e for e in range(1, m + 1) if m % e == 0 and gcd(e, k) == 1)


def _orbit_sizes(s):
    return orbit_sizes(s.n, [tuple(p) for p in s.lam] + [tuple(p) for p in s.sigma_table])


def test_orbit_divisibility_for_k_coprime_to_d(examples):
    for s in _biquandles() + [examples["invol6"]]:
        d = dehornoy_class(s)
        base = _orbit_sizes(s)
        for k in range(1, 9):
            if gcd(k, d) != 1:
                continue
            new = _orbit_sizes(cable(s, k).result)
            for x in range(s.n):
                assert new[x] % _m_k(base[x], k) == 0


def test_orbit_divisibility_fails_without_coprimality(examples):
    # S_3 quandle, d = 2: the 2-cable is the twist, so a 3-orbit splits into points
    s = examples["dihedral3"]
    assert _orbit_sizes(s) == [3, 3, 3]
    assert _orbit_sizes(cable(s, 2).result) == [1, 1, 1]
    assert _m_k(3, 2) == 3


def test_cabled_orbits_refine(examples):
    s = examples["invol6"]
    for k in (2, 3):
        c = cable(s, k).result
        assert s_group_orbits(c).refines(s_group_orbits(s))
        assert is_n_decomposition(c, s_group_orbits(c).class_of)

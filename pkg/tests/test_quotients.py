import pytest

from conftest import small_corpus
from ybx.core import Solution, classify, validate
from ybx.decomposition import EquivPartition, max_decomposability
from ybx.quotients import (
    IllDefinedQuotientError,
    Status,
    bq_quotient,
    induced_solution,
    injectivization,
    is_injective,
    multipermutation_level,
    retract,
    retract_kernel,
)


def _retract_level_oracle(s):
    """Iterate identification of equal (lambda_x, rho_x) rows on raw tables."""
    lam, rho = [list(r) for r in s.lam], [list(r) for r in s.rho]
    level = 0
    while len(lam) > 1:
        keys = {}
        cls = [keys.setdefault((tuple(lam[x]), tuple(rho[x])), len(keys)) for x in range(len(lam))]
        m = len(keys)
        if m == len(lam):
            return None
        rep = {c: cls.index(c) for c in range(m)}
        lam = [[cls[lam[rep[a]][rep[b]]] for b in range(m)] for a in range(m)]
        rho = [[cls[rho[rep[a]][rep[b]]] for b in range(m)] for a in range(m)]
        level += 1
    return level


def test_bq_fixes_biquandles():
    for s in small_corpus():
        if s.flags.biquandle:
            res = bq_quotient(s)
            assert res.kernel.is_discrete() and res.quotient == s
            assert res.iterations == 0


def test_bq_examples(examples):
    assert bq_quotient(examples["split3"]).kernel.is_discrete()
    assert bq_quotient(examples["cycle3"]).quotient.n == 1


def test_bq_output_is_biquandle():
    for s in small_corpus():
        res = bq_quotient(s)
        assert classify(res.quotient).biquandle
        assert validate(res.quotient) == []


def test_retract_examples(examples):
    assert retract(Solution.twist(3)).quotient.n == 1
    assert retract_kernel(examples["dihedral3"]).is_discrete()
    res = retract(examples["split3"])
    assert str(res.kernel) == "{0,1}|{2}" and res.quotient.n == 2


def test_retract_via_sigma_equals_retract_via_rho():
    for s in small_corpus():
        keys = {}
        rho_kernel = EquivPartition(tuple(keys.setdefault((s.lam[x], s.rho[x]), len(keys))
                                          for x in range(s.n)))
        assert retract_kernel(s) == rho_kernel


def test_multipermutation_level_examples(examples):
    assert multipermutation_level(Solution.twist(2)) == 1
    assert multipermutation_level(examples["dihedral3"]) is None
    assert multipermutation_level(examples["invol6"]) == 3


def test_multipermutation_level_matches_oracle(examples):
    for s in small_corpus() + list(examples.values()):
        assert multipermutation_level(s) == _retract_level_oracle(s)


def test_injectivization_examples(examples):
    res = injectivization(examples["dihedral3"])
    assert res.kernel.is_discrete() and res.status is Status.EXACT
    res = injectivization(examples["split3"])
    assert str(res.kernel) == "{0,1}|{2}" and res.quotient.n == 2
    assert injectivization(examples["cycle3"]).quotient.n == 1


def test_injectivization_under_tiny_budget_is_flagged(examples):
    res = injectivization(examples["cycle3"], l_max=1, node_cap=1)
    assert res.status is Status.UNKNOWN and res.kernel.is_discrete()
    assert is_injective(examples["cycle3"], l_max=1, node_cap=1) is None
    # invariants alone settle the involutive example
    assert injectivization(examples["invol6"], l_max=1, node_cap=1).status is Status.EXACT


def test_is_injective_examples(examples):
    assert is_injective(examples["split3"]) is False
    assert is_injective(examples["dihedral3"]) is True
    for s in small_corpus():
        if s.flags.involutive:
            assert is_injective(s) is True


def test_bq_kernel_refines_inj_kernel():
    for s in small_corpus():
        inj = injectivization(s)
        assert inj.status is Status.EXACT
        assert bq_quotient(s).kernel.refines(inj.kernel)


def test_decomposability_passes_to_quotients():
    for s in small_corpus():
        n_max = max_decomposability(s)[0]
        assert max_decomposability(bq_quotient(s).quotient)[0] == n_max
        inj = injectivization(s)
        if inj.status is Status.EXACT:
            assert max_decomposability(inj.quotient)[0] == n_max


def test_retract_of_injective_is_injective():
    for s in small_corpus():
        if is_injective(s):
            assert is_injective(retract(s).quotient) is True


def test_bad_kernel_is_rejected(examples):
    with pytest.raises(IllDefinedQuotientError):
        induced_solution(examples["dihedral3"], EquivPartition((0, 0, 1)))

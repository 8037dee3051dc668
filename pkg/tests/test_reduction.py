import random

import pytest

from ringgb.poly import PolyRing
from ringgb.reduction import (
    FirstReducibleStrategy,
    SeededRandomStrategy,
    StepBudget,
    StepLimitExceeded,
    apply_step,
    find_reduction,
    iter_reduction_steps,
    normal_form,
    normal_form_with_cofactors,
    reduces_to_zero,
)
from ringgb.rings import Integers, PrimeField, Rationals
from ringgb.completion import complete

QQ_X = PolyRing(Rationals(), ["x"])
QQ_XY = PolyRing(Rationals(), ["x", "y"])
ZZ_XY = PolyRing(Integers(), ["x", "y"])
GF5_XY = PolyRing(PrimeField(5), ["x", "y"])


def random_poly(rng, ring, max_terms=5, max_exp=3, bound=4):
    return ring.from_monomials(
        (rng.randint(-bound, bound), (rng.randint(0, max_exp), rng.randint(0, max_exp)))
        for _ in range(rng.randint(0, max_terms))
    )


def random_basis(rng, ring, max_size=3):
    basis = []
    while len(basis) < rng.randint(1, max_size):
        p = random_poly(rng, ring)
        if p:
            basis.append(p)
    return basis


def test_find_reduction_head_example():
    x = QQ_X.gens()[0]
    step = find_reduction(x**2, [x - 1])
    assert step.reducer == 0
    assert step.term == (2,)
    assert step.cofactor_term == (1,)
    assert step.coefficient == 1
    assert step.remainder == 0


def test_find_reduction_respects_coefficient_domain():
    x, y = ZZ_XY.gens()
    # coefficient 1 is not reducible by 2 under symmetric remainders
    assert find_reduction(x * y, [2 * x]) is None


def test_find_reduction_zero_polynomial():
    assert find_reduction(QQ_X.zero(), [QQ_X.gens()[0]]) is None


def test_apply_step_examples():
    x = QQ_X.gens()[0]
    p = x**2
    step = find_reduction(p, [x - 1])
    assert apply_step(p, step, [x - 1]) == x

    zx = ZZ_XY.gens()[0]
    p = 7 * zx
    step = find_reduction(p, [3 * zx])
    assert step.coefficient == 2
    assert apply_step(p, step, [3 * zx]) == zx

    p = 4 * zx
    step = find_reduction(p, [2 * zx])
    assert not apply_step(p, step, [2 * zx])


def test_apply_step_rejects_stale_steps():
    x = QQ_X.gens()[0]
    basis = [x - 1]
    step = find_reduction(x**2, basis)
    with pytest.raises(ValueError, match="stale"):
        apply_step(x**3, step, basis)
    with pytest.raises(ValueError, match="stale"):
        apply_step(2 * x**2, step, basis)
    with pytest.raises(ValueError, match="out of range"):
        apply_step(x**2, step, [])


def test_normal_form_examples():
    x = QQ_X.gens()[0]
    assert normal_form(x**2, [x - 1]) == QQ_X.one()

    x, y = QQ_XY.gens()
    basis = [x - y**2, y**3 - 1]
    assert not normal_form(x - y**2, basis)

    zx, zy = ZZ_XY.gens()
    p = zx * zy + zy
    assert normal_form(p, [2 * zx, 3 * zy]) == p


def test_reduces_to_zero_examples():
    x = QQ_X.gens()[0]
    assert reduces_to_zero((x - 1) * (x + 1), [x - 1])
    assert not reduces_to_zero(x, [x - 1])  # normal form is 1
    assert reduces_to_zero(QQ_X.zero(), [])


def test_normal_form_is_irreducible_and_sound():
    rng = random.Random(31)
    for ring in (QQ_XY, ZZ_XY, GF5_XY):
        for _ in range(100):
            p = random_poly(rng, ring)
            basis = random_basis(rng, ring)
            result, cofactors = normal_form_with_cofactors(p, basis)
            assert find_reduction(result, basis) is None
            recombined = result
            for cof, b in zip(cofactors, basis):
                recombined = recombined + cof * b
            assert recombined == p


def test_steps_are_sound_one_by_one():
    rng = random.Random(32)
    for _ in range(100):
        ring = rng.choice([QQ_XY, ZZ_XY, GF5_XY])
        p = random_poly(rng, ring)
        basis = random_basis(rng, ring)
        step = find_reduction(p, basis)
        if step is None:
            continue
        q = apply_step(p, step, basis)
        difference = p - q
        b = basis[step.reducer]
        assert difference == b.mul_monomial(step.coefficient, step.cofactor_term)
        assert q.coefficient(step.term) == step.remainder


def test_termination_budget_never_trips_at_desk_scale():
    rng = random.Random(33)
    for _ in range(150):
        ring = rng.choice([QQ_XY, ZZ_XY, GF5_XY])
        budget = StepBudget(10_000)
        normal_form(random_poly(rng, ring), random_basis(rng, ring), budget=budget)
        assert budget.used <= 10_000


def test_step_budget_trips_as_distinct_failure():
    x = QQ_X.gens()[0]
    with pytest.raises(StepLimitExceeded):
        normal_form(x**5, [x - 1], budget=StepBudget(2))


def test_rejects_zero_or_foreign_basis_entries():
    x = QQ_X.gens()[0]
    with pytest.raises(ValueError, match="nonzero"):
        normal_form(x, [QQ_X.zero()])
    with pytest.raises(ValueError, match="different ring"):
        normal_form(x, [ZZ_XY.gens()[0]])


def test_randomized_strategy_takes_valid_steps():
    rng = random.Random(34)
    for seed in range(20):
        ring = rng.choice([QQ_XY, ZZ_XY, GF5_XY])
        p = random_poly(rng, ring)
        basis = random_basis(rng, ring)
        strategy = SeededRandomStrategy(seed)
        step = find_reduction(p, basis, strategy)
        if step is not None:
            assert step in list(iter_reduction_steps(p, basis))
        result, cofactors = normal_form_with_cofactors(p, basis, strategy)
        assert find_reduction(result, basis) is None
        recombined = result
        for cof, b in zip(cofactors, basis):
            recombined = recombined + cof * b
        assert recombined == p


def test_default_strategy_takes_first_candidate():
    zx, zy = ZZ_XY.gens()
    p = 4 * zx * zy + 6 * zy
    basis = [2 * zx, 3 * zy]
    step = FirstReducibleStrategy().select(iter_reduction_steps(p, basis))
    assert (step.reducer, step.term) == (0, (1, 1))


def test_normal_forms_unique_on_strong_bases():
    # 200 random probes, default plus 20 seeded strategies, per ring
    rng = random.Random(35)
    ideals = {
        QQ_XY: None,
        GF5_XY: None,
        ZZ_XY: None,
    }
    for ring in ideals:
        x, y = ring.gens()
        ideals[ring] = complete([x**2 - y, x * y - 1]).basis
    for ring, basis in ideals.items():
        for _ in range(200):
            probe = random_poly(rng, ring)
            reference = normal_form(probe, basis)
            for seed in range(20):
                assert normal_form(probe, basis, SeededRandomStrategy(seed)) == reference

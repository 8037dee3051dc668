import random

import pytest

from ringgb.completion import (
    complete,
    groebner_basis,
    ideal_membership,
    interreduce,
    is_groebner_basis,
)
from ringgb.poly import PolyRing
from ringgb.reduction import SeededRandomStrategy, StepLimitExceeded, reduces_to_zero
from ringgb.rings import Integers, PrimeField, Rationals

QQ_XY = PolyRing(Rationals(), ["x", "y"])
ZZ_XY = PolyRing(Integers(), ["x", "y"])
GF5_XY = PolyRing(PrimeField(5), ["x", "y"])


def random_poly(rng, ring, max_exp=2, bound=3):
    return ring.from_monomials(
        (rng.randint(-bound, bound), (rng.randint(0, max_exp), rng.randint(0, max_exp)))
        for _ in range(4)
    )


def random_generators(rng, ring):
    gens = []
    while not gens:
        gens = [p for p in (random_poly(rng, ring) for _ in range(rng.randint(1, 3))) if p]
    return gens


def expand_certificate(trace, index):
    acc = trace.basis[index].ring.zero()
    for cofactor, gen in zip(trace.certificates[index], trace.generators):
        acc = acc + cofactor * gen
    return acc


def test_complete_field_textbook_ideal():
    x, y = QQ_XY.gens()
    trace = complete([x**2 - y, x * y - 1])
    assert x - y**2 in trace.basis
    assert y**3 - 1 in trace.basis
    for gen in trace.generators:
        assert reduces_to_zero(gen, trace.basis)
    assert interreduce(trace.basis) == [x - y**2, y**3 - 1]


def test_complete_int_monomials_needs_gcd_polynomial():
    x, y = ZZ_XY.gens()
    trace = complete([2 * x, 3 * y])
    assert set(trace.basis) == {2 * x, 3 * y, x * y}
    assert trace.added == (x * y,)


def test_complete_int_common_factor():
    x, _ = ZZ_XY.gens()
    trace = complete([4 * x, 6 * x])
    assert set(trace.basis) == {4 * x, 6 * x, 2 * x}
    assert interreduce(trace.basis) == [2 * x]


def test_complete_singleton_and_degenerate_inputs():
    x, y = QQ_XY.gens()
    p = x**2 - y
    trace = complete([p])
    assert trace.basis == (p,)
    assert trace.pairs_processed == 0
    assert complete([QQ_XY.zero()]).basis == ()
    assert complete([]).basis == ()


def test_complete_rejects_mixed_rings():
    with pytest.raises(ValueError):
        complete([QQ_XY.one(), ZZ_XY.one()])


def test_completion_certificates_expand_exactly():
    rng = random.Random(51)
    for ring in (QQ_XY, ZZ_XY, GF5_XY):
        for _ in range(10):
            trace = complete(random_generators(rng, ring))
            for index in range(len(trace.basis)):
                assert expand_certificate(trace, index) == trace.basis[index]


def test_generators_reduce_to_zero_by_final_basis():
    rng = random.Random(52)
    for ring in (QQ_XY, ZZ_XY, GF5_XY):
        for _ in range(10):
            gens = random_generators(rng, ring)
            trace = complete(gens)
            for gen in gens:
                assert reduces_to_zero(gen, trace.basis)


def test_completion_is_idempotent():
    rng = random.Random(53)
    for ring in (QQ_XY, ZZ_XY, GF5_XY):
        for _ in range(5):
            trace = complete(random_generators(rng, ring))
            again = complete(trace.basis)
            assert again.added == ()
            assert again.basis == trace.basis


def test_step_ceiling_is_a_distinct_failure():
    x, y = QQ_XY.gens()
    with pytest.raises(StepLimitExceeded):
        complete([x**2 - y, x * y - 1], max_steps=1)


def test_interreduce_examples():
    x, y = QQ_XY.gens()
    assert interreduce([x**2 - y, x * y - 1, x - y**2, y**3 - 1]) == [
        x - y**2,
        y**3 - 1,
    ]
    assert interreduce([2 * x]) == [x]
    zx, _ = ZZ_XY.gens()
    assert interreduce([-2 * zx]) == [2 * zx]
    assert interreduce([]) == []
    assert interreduce([QQ_XY.zero()]) == []
    assert interreduce([x, x]) == [x]


def test_interreduce_is_idempotent_and_certified():
    rng = random.Random(54)
    for ring in (QQ_XY, ZZ_XY, GF5_XY):
        for _ in range(8):
            reduced = interreduce(complete(random_generators(rng, ring)).basis)
            assert interreduce(reduced) == reduced
            assert is_groebner_basis(reduced)
            one = ring.coeff_ring.one()
            for p in reduced:
                # canonical heads: monic over fields, positive over zz
                assert ring.coeff_ring.canonical_unit(p.head_coeff) == one


def test_is_groebner_basis_examples():
    x, y = QQ_XY.gens()
    assert is_groebner_basis([x - y**2, y**3 - 1])
    assert not is_groebner_basis([x**2 - y, x * y - 1])
    assert is_groebner_basis([x**2 - y])
    assert is_groebner_basis([])


def test_membership_examples():
    x = PolyRing(Rationals(), ["x"]).gens()[0]
    result = ideal_membership(x**3 - 1, [x - 1])
    assert result.is_member
    assert not result.remainder

    zx, zy = ZZ_XY.gens()
    result = ideal_membership(zx + zy, [2 * zx, 3 * zy])
    assert not result.is_member
    assert result.certificate is None
    assert result.remainder == zx + zy

    result = ideal_membership(6 * zx * zy, [2 * zx, 3 * zy])
    assert result.is_member


def test_membership_certificates_expand_to_the_query():
    rng = random.Random(55)
    for ring in (QQ_XY, ZZ_XY, GF5_XY):
        for _ in range(10):
            gens = random_generators(rng, ring)
            trace = complete(gens)
            # build a guaranteed member out of random cofactors
            member = ring.zero()
            for g in gens:
                member = member + random_poly(rng, ring) * g
            result = ideal_membership(member, gens, trace=trace)
            assert result.is_member
            acc = ring.zero()
            for cofactor, g in zip(result.certificate, gens):
                acc = acc + cofactor * g
            assert acc == member


def test_membership_of_empty_ideal():
    x, _ = QQ_XY.gens()
    result = ideal_membership(x, [])
    assert not result.is_member and result.remainder == x
    result = ideal_membership(QQ_XY.zero(), [QQ_XY.zero()])
    assert result.is_member
    assert result.certificate == (QQ_XY.zero(),)


def test_groebner_basis_convenience_matches_pipeline():
    x, y = QQ_XY.gens()
    gens = [x**2 - y, x * y - 1]
    assert groebner_basis(gens) == interreduce(complete(gens).basis)


def test_seeded_strategy_completion_still_certifies():
    rng = random.Random(56)
    for ring in (QQ_XY, ZZ_XY, GF5_XY):
        gens = random_generators(rng, ring)
        trace = complete(gens, strategy=SeededRandomStrategy(3))
        assert is_groebner_basis(trace.basis)
        assert interreduce(trace.basis) == interreduce(complete(gens).basis)


def test_deglex_session_certifies_too():
    ring = PolyRing(Rationals(), ["x", "y"], "deglex")
    x, y = ring.gens()
    trace = complete([x**2 - y, x * y - 1])
    assert is_groebner_basis(trace.basis)
    for gen in trace.generators:
        assert reduces_to_zero(gen, trace.basis)

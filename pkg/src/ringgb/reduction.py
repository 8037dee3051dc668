"""Single-step polynomial reduction and normal forms against a basis.

A monomial c*t of p is reducible by a basis element b when the head
term of b divides t and the coefficient ring can split c = k*HC(b) + d
with nonzero quotient k.  The step replaces p by p - k*(t/HT(b))*b,
which rewrites the coefficient at t to d and only otherwise touches
terms below t, so repeated steps terminate for any choice of steps.
"""

from __future__ import annotations

import random
from typing import NamedTuple

from .poly import Polynomial
from .terms import term_div, term_divides, term_mul


class StepLimitExceeded(RuntimeError):
    """The configured reduction-step safety valve was hit."""


class StepBudget:
    """Counts reduction steps and raises past ``limit`` (None = unlimited)."""

    def __init__(self, limit=None):
        self.limit = limit
        self.used = 0

    def spend(self):
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise StepLimitExceeded(
                f"exceeded the configured limit of {self.limit} reduction steps"
            )


class ReductionStep(NamedTuple):
    """One admissible rewrite: subtract coefficient*cofactor_term*basis[reducer]."""

    reducer: int
    term: tuple
    cofactor_term: tuple
    coefficient: object
    remainder: object


class FirstReducibleStrategy:
    """Largest reducible monomial first, reducers tried in basis order."""

    def select(self, candidates):
        return next(candidates, None)

    def __repr__(self):
        return "FirstReducibleStrategy()"


class SeededRandomStrategy:
    """Uniform seeded choice among all valid steps; for uniqueness testing."""

    def __init__(self, seed):
        self.seed = seed
        self._rng = random.Random(seed)

    def select(self, candidates):
        steps = list(candidates)
        if not steps:
            return None
        return self._rng.choice(steps)

    def __repr__(self):
        return f"SeededRandomStrategy({self.seed})"


_DEFAULT = FirstReducibleStrategy()


def _check_inputs(p: Polynomial, basis):
    for b in basis:
        if not b:
            raise ValueError("basis polynomials must be nonzero")
        if b.ring != p.ring:
            raise ValueError("basis polynomial from a different ring")


def iter_reduction_steps(p: Polynomial, basis):
    """All valid steps, largest target monomial first, reducers in basis order."""
    ring = p.ring.coeff_ring
    heads = [b.head_monomial for b in basis]
    for c, t in p.monomials:
        for idx, (head_c, head_t) in enumerate(heads):
            if term_divides(head_t, t):
                hit = ring.reduce_step(c, head_c)
                if hit is not None:
                    yield ReductionStep(idx, t, term_div(t, head_t), hit[0], hit[1])


def find_reduction(p: Polynomial, basis, strategy=None):
    """A step chosen by ``strategy``, or None when p is in normal form."""
    _check_inputs(p, basis)
    strategy = strategy or _DEFAULT
    return strategy.select(iter_reduction_steps(p, basis))


def apply_step(p: Polynomial, step: ReductionStep, basis) -> Polynomial:
    """Apply a step produced by ``find_reduction`` on this p and basis."""
    if not 0 <= step.reducer < len(basis):
        raise ValueError(f"reducer index {step.reducer} out of range")
    b = basis[step.reducer]
    c = p.coefficient(step.term)
    expected = p.ring.coeff_ring.reduce_step(c, b.head_coeff) if c else None
    if (
        term_mul(step.cofactor_term, b.head_term) != step.term
        or expected != (step.coefficient, step.remainder)
    ):
        raise ValueError("stale reduction step for this polynomial and basis")
    return p - b.mul_monomial(step.coefficient, step.cofactor_term)


def normal_form(p: Polynomial, basis, strategy=None, budget=None) -> Polynomial:
    """Reduce p to a fixpoint irreducible with respect to ``basis``."""
    _check_inputs(p, basis)
    strategy = strategy or _DEFAULT
    q = p
    while True:
        step = strategy.select(iter_reduction_steps(q, basis))
        if step is None:
            return q
        if budget is not None:
            budget.spend()
        q = q - basis[step.reducer].mul_monomial(step.coefficient, step.cofactor_term)


def normal_form_with_cofactors(p: Polynomial, basis, strategy=None, budget=None):
    """Normal form plus cofactors: p = sum(cofactor[i]*basis[i]) + result."""
    _check_inputs(p, basis)
    strategy = strategy or _DEFAULT
    ring = p.ring.coeff_ring
    collected = [dict() for _ in basis]
    q = p
    while True:
        step = strategy.select(iter_reduction_steps(q, basis))
        if step is None:
            break
        if budget is not None:
            budget.spend()
        q = q - basis[step.reducer].mul_monomial(step.coefficient, step.cofactor_term)
        acc = collected[step.reducer]
        prev = acc.get(step.cofactor_term, ring.zero())
        acc[step.cofactor_term] = ring.add(prev, step.coefficient)
    cofactors = [
        p.ring.from_monomials((c, t) for t, c in acc.items()) for acc in collected
    ]
    return q, cofactors


def reduces_to_zero(p: Polynomial, basis) -> bool:
    """Whether p has 0 as a normal form under the default strategy."""
    return not normal_form(p, basis)

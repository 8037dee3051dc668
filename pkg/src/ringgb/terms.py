"""Exponent-vector terms and the total orders that compare them.

A term is a plain tuple of non-negative exponents, one slot per session
variable; the all-zeros tuple is the unit term.
"""

from __future__ import annotations

_ORDER_KINDS = ("lex", "deglex")


def unit_term(nvars: int) -> tuple:
    return (0,) * nvars


def term_mul(s: tuple, t: tuple) -> tuple:
    return tuple(a + b for a, b in zip(s, t))


def term_div(t: tuple, s: tuple) -> tuple:
    """t / s; raises ValueError when s does not divide t."""
    out = tuple(a - b for a, b in zip(t, s))
    if any(e < 0 for e in out):
        raise ValueError(f"{s} does not divide {t}")
    return out


def term_divides(s: tuple, t: tuple) -> bool:
    return all(a <= b for a, b in zip(s, t))


def term_lcm(s: tuple, t: tuple) -> tuple:
    return tuple(max(a, b) for a, b in zip(s, t))


def term_degree(t: tuple) -> int:
    return sum(t)


def min_terms(terms) -> list:
    """Divisibility-minimal elements of a finite term collection.

    The result is an antichain covering the input: no member divides
    another, and every input term is divisible by some member.
    """
    unique = sorted(set(terms), key=lambda t: (term_degree(t), t))
    keep = []
    for t in unique:
        if not any(term_divides(s, t) for s in keep):
            keep.append(t)
    return keep


class TermOrder:
    """Total, multiplicative, well-founded order on terms.

    ``kind`` is "lex" or "deglex".  ``precedence`` optionally permutes
    the variables: a tuple of variable indexes from most to least
    significant (default: declaration order).
    """

    def __init__(self, kind: str = "lex", precedence=None):
        if kind not in _ORDER_KINDS:
            raise ValueError(f"unknown term order {kind!r}; expected lex or deglex")
        if precedence is not None:
            precedence = tuple(precedence)
            if sorted(precedence) != list(range(len(precedence))):
                raise ValueError("precedence must be a permutation of variable indexes")
        self.kind = kind
        self.precedence = precedence

    def sort_key(self, term: tuple):
        if self.precedence is not None:
            term = tuple(term[i] for i in self.precedence)
        if self.kind == "lex":
            return term
        return (sum(term), term)

    def compare(self, t1: tuple, t2: tuple) -> int:
        """-1, 0, or 1 as t1 is below, equal to, or above t2."""
        k1, k2 = self.sort_key(t1), self.sort_key(t2)
        if k1 < k2:
            return -1
        if k1 > k2:
            return 1
        return 0

    def __eq__(self, other):
        return (
            isinstance(other, TermOrder)
            and self.kind == other.kind
            and self.precedence == other.precedence
        )

    def __hash__(self):
        return hash((self.kind, self.precedence))

    def __repr__(self):
        if self.precedence is None:
            return f"TermOrder({self.kind!r})"
        return f"TermOrder({self.kind!r}, precedence={self.precedence})"

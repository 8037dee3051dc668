"""Exact coefficient rings pluggable into the polynomial layer.

Three rings ship: prime fields GF(p), the rationals, and the integers.
Each exposes the same small contract: exact arithmetic on canonical
values, a single-step division-with-remainder reduction, a gcd-style
generator basis for finitely generated ideals together with both
change-of-basis matrices, and a generating set for the solutions of
``a1*c1 + a2*c2 = 0``.  The completion machinery is generic over this
contract, so further rings can be added without touching it.

Values are plain Python objects (ints for GF(p) and ZZ, ``Fraction``
for QQ) kept in a form unique per ring value; arithmetic never rounds.
Ring objects are stateless and hashable, safe to share across threads.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction


class RingError(ValueError):
    """An operation fell outside a ring's supported domain."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, u, v) with g = u*a + v*b and g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


class CoefficientRing:
    """Contract shared by the shipped coefficient rings.

    The binary arithmetic methods assume canonical inputs and return
    canonical outputs; ``element`` and ``from_fraction`` are the entry
    points that canonicalize foreign values.  ``reduce_step``,
    ``groebner`` and ``syzygies`` accept anything ``element`` accepts.
    """

    name = "?"
    #: True when reduction by canonical remainders gives every ring
    #: element a unique normal form.  Holds for all shipped rings.
    admits_strong_groebner = True

    def _key(self):
        return (type(self).__name__,)

    def __eq__(self, other):
        return isinstance(other, CoefficientRing) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return self.name

    # -- canonicalization ------------------------------------------------

    def element(self, value):
        """Coerce ``value`` into canonical form, or raise ``RingError``."""
        raise NotImplementedError

    def from_fraction(self, numerator: int, denominator: int):
        """Canonical value of numerator/denominator, or raise ``RingError``."""
        raise NotImplementedError

    # -- arithmetic --------------------------------------------------------

    def zero(self):
        return self.element(0)

    def one(self):
        return self.element(1)

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return a == 0

    def exact_div(self, a, b):
        """a / b when b divides a exactly; raise ``RingError`` otherwise."""
        raise NotImplementedError

    # -- printing ----------------------------------------------------------

    def is_negative(self, a) -> bool:
        """Whether ``a`` prints with a leading minus sign."""
        return False

    def magnitude(self, a):
        """The unsigned part of ``a`` used when printing."""
        return a

    def format(self, a) -> str:
        return str(a)

    # -- the reduction / basis contract -------------------------------------

    def reduce_step(self, c, b):
        """One division step of ``c`` by nonzero ``b``.

        Returns ``(k, d)`` with ``c = k*b + d``, ``k`` nonzero and ``d``
        strictly below ``c`` in the ring's well-founded order, or ``None``
        when ``c`` is already in normal form with respect to ``b``.
        """
        raise NotImplementedError

    def groebner(self, values):
        """Canonical generator basis of the ideal the values generate.

        Returns ``(basis, to_basis, from_basis)`` where ``to_basis[i]``
        expresses ``basis[i]`` as a combination of the inputs and
        ``from_basis[j]`` expresses input ``j`` over ``basis``.
        """
        raise NotImplementedError

    def syzygies(self, coefficients):
        """Generators for the solutions of ``a1*c1 + ... + aj*cj = 0``.

        The shipped rings are principal ideal domains, where the pair
        case generates the whole solution module; other arities are
        rejected with ``RingError``.
        """
        coeffs = [self.element(c) for c in coefficients]
        if any(self.is_zero(c) for c in coeffs):
            raise RingError("syzygy coefficients must be nonzero")
        if len(coeffs) != 2:
            raise RingError(
                f"{self.name} supports syzygies of pairs only, "
                f"got {len(coeffs)} coefficients"
            )
        a, b = coeffs
        common = self._lcm_pair(a, b)
        return [(self.exact_div(common, a), self.neg(self.exact_div(common, b)))]

    def _lcm_pair(self, a, b):
        raise NotImplementedError

    def canonical_unit(self, c):
        """Unit u such that u*c is the canonical associate of nonzero c."""
        raise NotImplementedError

    def _check_nonzero_list(self, values):
        vals = [self.element(v) for v in values]
        if not vals:
            raise RingError("empty generating list")
        if any(self.is_zero(v) for v in vals):
            raise RingError("zero generator is not allowed")
        return vals


class _FieldMixin:
    """Shared behaviour of GF(p) and QQ: division is always exact."""

    def exact_div(self, a, b):
        if self.is_zero(b):
            raise RingError(f"division by zero in {self.name}")
        return self._div(a, b)

    def reduce_step(self, c, b):
        c = self.element(c)
        b = self.element(b)
        if self.is_zero(b):
            raise RingError("reduction by zero")
        if self.is_zero(c):
            return None
        return self._div(c, b), self.zero()

    def groebner(self, values):
        vals = self._check_nonzero_list(values)
        row = [self.zero()] * len(vals)
        row[0] = self._div(self.one(), vals[0])
        return [self.one()], [row], [[v] for v in vals]

    def _lcm_pair(self, a, b):
        return self.one()

    def canonical_unit(self, c):
        if self.is_zero(c):
            raise RingError("zero has no canonical unit")
        return self._div(self.one(), c)


class PrimeField(_FieldMixin, CoefficientRing):
    """GF(p): residues 0..p-1 under arithmetic modulo a prime p."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise RingError(f"modulus must be a prime integer, got {p!r}")
        self.p = p
        self.name = f"gf({p})"

    def _key(self):
        return ("gf", self.p)

    def element(self, value):
        if isinstance(value, Fraction):
            return self.from_fraction(value.numerator, value.denominator)
        if isinstance(value, int):
            return value % self.p
        raise RingError(f"cannot interpret {value!r} in {self.name}")

    def from_fraction(self, numerator, denominator):
        if denominator % self.p == 0:
            raise RingError(f"division by zero in {self.name}")
        return numerator * pow(denominator, -1, self.p) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def _div(self, a, b):
        return a * pow(b, -1, self.p) % self.p


class Rationals(_FieldMixin, CoefficientRing):
    """QQ: exact fractions in lowest terms with positive denominator."""

    name = "qq"

    def element(self, value):
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise RingError(f"cannot interpret {value!r} in qq")

    def from_fraction(self, numerator, denominator):
        if denominator == 0:
            raise RingError("division by zero in qq")
        return Fraction(numerator, denominator)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def _div(self, a, b):
        return a / b

    def is_negative(self, a):
        return a < 0

    def magnitude(self, a):
        return abs(a)


class Integers(CoefficientRing):
    """ZZ with symmetric-remainder division.

    A step of c by b leaves the remainder in the half-open window
    (-|b|/2, |b|/2]; the tie at |b|/2 keeps the positive representative.
    Remainders are canonical, which is what makes normal forms over ZZ
    unique and the computed bases strong.
    """

    name = "zz"

    def element(self, value):
        if isinstance(value, bool):
            return int(value)
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise RingError(f"non-integer coefficient {value} in zz")
            return value.numerator
        raise RingError(f"cannot interpret {value!r} in zz")

    def from_fraction(self, numerator, denominator):
        if denominator == 0:
            raise RingError("division by zero in zz")
        if numerator % denominator != 0:
            raise RingError(
                f"non-integer coefficient {numerator}/{denominator} in zz"
            )
        return numerator // denominator

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def exact_div(self, a, b):
        if b == 0:
            raise RingError("division by zero in zz")
        q, r = divmod(a, b)
        if r:
            raise RingError(f"{b} does not divide {a} exactly")
        return q

    def is_negative(self, a):
        return a < 0

    def magnitude(self, a):
        return abs(a)

    def reduce_step(self, c, b):
        c = self.element(c)
        b = self.element(b)
        if b == 0:
            raise RingError("reduction by zero")
        m = abs(b)
        d = c % m
        if 2 * d > m:
            d -= m
        k = (c - d) // b
        if k == 0:
            return None
        return k, d

    def groebner(self, values):
        vals = self._check_nonzero_list(values)
        g = vals[0]
        row = [1] + [0] * (len(vals) - 1)
        for idx in range(1, len(vals)):
            g, u, v = _xgcd(g, vals[idx])
            row = [u * entry for entry in row]
            row[idx] = v
        if g < 0:
            g, row = -g, [-entry for entry in row]
        return [g], [row], [[v // g] for v in vals]

    def _lcm_pair(self, a, b):
        return abs(a * b) // math.gcd(a, b)

    def canonical_unit(self, c):
        if c == 0:
            raise RingError("zero has no canonical unit")
        return -1 if c < 0 else 1


def ring_from_string(text: str) -> CoefficientRing:
    """Ring named by a CLI selector: "gf(p)", "qq", or "zz"."""
    s = text.strip().lower()
    if s == "qq":
        return Rationals()
    if s == "zz":
        return Integers()
    m = re.fullmatch(r"gf\((\d+)\)", s)
    if m:
        return PrimeField(int(m.group(1)))
    raise RingError(f"unknown ring {text!r}; expected gf(p), qq, or zz")

"""Parameter arithmetic for K3 surfaces polarized by H + E8 + E8.

Such surfaces are classified by a triple (a, b, d) of weights (2, 3, 6) with
d != 0.  This module provides the weight normalization, the sigma/pi
invariants, the discriminant that controls when the two fiber j-invariants
coincide, and the cubic whose shifted root sets locate the six I2 fibers of
the induced fibration on the Kummer side.

The weight-3 parameter b survives normalization only up to sign; everything
exported here depends on b through b^2 except fiber_locus, which takes a
caller-chosen sign of b (the two choices swap the root triples together with
x -> -x).  Branch tracking along parameter paths is the monodromy module's
job, keeping this module exact and branch-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy

from .exact import Polynomial


class CuspError(ValueError):
    """Parameter point lies on the cusp locus d = 0."""


@dataclass(frozen=True)
class ModularParams:
    """Weighted moduli coordinates (a, b, d) of weights (2, 3, 6), d != 0."""

    a: Fraction
    b: Fraction
    d: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        object.__setattr__(self, "d", Fraction(self.d))
        if self.d == 0:
            raise CuspError("d = 0 is the cusp; no surface is attached")


@dataclass(frozen=True)
class SigmaPi:
    """The symmetric functions of the two fiber j-invariants."""

    sigma: Fraction
    pi: Fraction


def _rational_cube_root(d: Fraction) -> Fraction:
    num, exact_n = sympy.integer_nthroot(abs(d.numerator), 3)
    den, exact_d = sympy.integer_nthroot(d.denominator, 3)
    if not (exact_n and exact_d):
        raise ValueError(
            f"{d} is not the cube of a rational; exact weight normalization "
            "needs d to be a perfect cube"
        )
    root = Fraction(int(num), int(den))
    return -root if d < 0 else root


def normalize(p: ModularParams) -> tuple[Fraction, Fraction]:
    """Rescale to d = 1, returning the pair (a/d^(1/3), b^2/d).

    b^2/d is rational for every input; a/d^(1/3) is rational exactly when d
    is a perfect cube (always the case for the families in this package,
    where d is a cube by construction) and the call fails otherwise.
    """
    if p.d == 0:
        raise CuspError("cannot normalize on the cusp d = 0")
    croot = _rational_cube_root(p.d)
    return p.a / croot, p.b * p.b / p.d


def _scalar(v):
    return Fraction(v) if isinstance(v, int) else v


def sigma_pi(a, b) -> SigmaPi:
    """sigma = a^3 - b^2 + 1 and pi = a^3, for d = 1 normalized (a, b).

    Accepts Fractions for exact point evaluation, or any field element
    (rational functions included) for symbolic identity checks.
    """
    a = _scalar(a)
    b = _scalar(b)
    a3 = a * a * a
    return SigmaPi(sigma=a3 - b * b + 1, pi=a3)


def discriminant_delta(a, b):
    """(a^3 - (b-1)^2)(a^3 - (b+1)^2), the discriminant of the j quadratic.

    Vanishes exactly when the six fiber locations degenerate, equivalently
    when the two j-invariants coincide (it equals sigma^2 - 4 pi).
    """
    a = _scalar(a)
    b = _scalar(b)
    a3 = a * a * a
    return (a3 - (b - 1) * (b - 1)) * (a3 - (b + 1) * (b + 1))


def fiber_cubic(a: Fraction, b: Fraction) -> Polynomial:
    """The cubic 4x^3 - 3ax - b."""
    return Polynomial((-Fraction(b), -3 * Fraction(a), 0, 4))


def fiber_locus(a: Fraction, b: Fraction) -> tuple[Polynomial, Polynomial]:
    """The pair (P - 1, P + 1) with P = 4x^3 - 3ax - b.

    Their six roots are the base points of the I2 fibers of the induced
    fibration on the Kummer side (I1 fibers of the alternate fibration
    upstairs); the six are distinct iff a^3 != (b +- 1)^2.
    """
    p = fiber_cubic(a, b)
    return p - 1, p + 1


def _is_square(q: Fraction) -> bool:
    if q < 0:
        return False
    rn, en = sympy.integer_nthroot(q.numerator, 2)
    rd, ed = sympy.integer_nthroot(q.denominator, 2)
    return bool(en and ed)


def _sqrt_of_square(q: Fraction) -> Fraction:
    rn, _ = sympy.integer_nthroot(q.numerator, 2)
    rd, _ = sympy.integer_nthroot(q.denominator, 2)
    return Fraction(int(rn), int(rd))


@dataclass(frozen=True)
class QuadraticSurd:
    """Exact value rational_part + radical_coeff * sqrt(radicand).

    The radicand is normalized: if it is a perfect square (or the coefficient
    vanishes) the value collapses to a plain rational with radicand 0.  The
    radicand may be negative, in which case the value is complex and its
    conjugate partner is the other root of the defining quadratic.
    """

    rational_part: Fraction
    radical_coeff: Fraction
    radicand: Fraction

    @staticmethod
    def make(rational_part, radical_coeff, radicand) -> "QuadraticSurd":
        rational_part = Fraction(rational_part)
        radical_coeff = Fraction(radical_coeff)
        radicand = Fraction(radicand)
        if radical_coeff == 0 or radicand == 0:
            return QuadraticSurd(rational_part, Fraction(0), Fraction(0))
        if _is_square(radicand):
            return QuadraticSurd(
                rational_part + radical_coeff * _sqrt_of_square(radicand),
                Fraction(0),
                Fraction(0),
            )
        return QuadraticSurd(rational_part, radical_coeff, radicand)

    @property
    def is_rational(self) -> bool:
        return self.radical_coeff == 0

    def as_rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.rational_part

    def conjugate(self) -> "QuadraticSurd":
        return QuadraticSurd(self.rational_part, -self.radical_coeff, self.radicand)

    def __add__(self, other: "QuadraticSurd") -> "QuadraticSurd":
        if self.radicand != other.radicand and not (self.is_rational or other.is_rational):
            raise ValueError("cannot add surds over different radicands")
        radicand = self.radicand if not self.is_rational else other.radicand
        return QuadraticSurd.make(
            self.rational_part + other.rational_part,
            self.radical_coeff + other.radical_coeff,
            radicand,
        )

    def __mul__(self, other: "QuadraticSurd") -> "QuadraticSurd":
        if self.radicand != other.radicand and not (self.is_rational or other.is_rational):
            raise ValueError("cannot multiply surds over different radicands")
        radicand = self.radicand if not self.is_rational else other.radicand
        return QuadraticSurd.make(
            self.rational_part * other.rational_part
            + self.radical_coeff * other.radical_coeff * radicand,
            self.rational_part * other.radical_coeff
            + self.radical_coeff * other.rational_part,
            radicand,
        )

    def __complex__(self) -> complex:
        root = complex(self.radicand) ** 0.5
        return complex(self.rational_part) + complex(self.radical_coeff) * root

    def __str__(self):
        if self.is_rational:
            return str(self.rational_part)
        return f"{self.rational_part} + {self.radical_coeff}*sqrt({self.radicand})"


def j_pair(sp: SigmaPi) -> tuple[QuadraticSurd, QuadraticSurd]:
    """The two roots of j^2 - sigma j + pi = 0 as exact surds.

    Returned as (sigma +- sqrt(sigma^2 - 4 pi))/2; the pair may be equal
    (double root) or live in a quadratic extension of Q.
    """
    disc = sp.sigma * sp.sigma - 4 * sp.pi
    half = Fraction(1, 2)
    return (
        QuadraticSurd.make(sp.sigma * half, half, disc),
        QuadraticSurd.make(sp.sigma * half, -half, disc),
    )

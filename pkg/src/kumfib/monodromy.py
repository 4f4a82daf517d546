"""Numerical monodromy of the six fiber locations over the punctured modular curve.

The six base points of the I2 fibers are the roots of (P(x) - 1)(P(x) + 1)
with P = 4x^3 - 3ax - b at the d = 1 normalized parameters of the family.
Since b(lambda) carries a factor lambda^{-3/2}, the roots are tracked in the
rescaled coordinate xi = sqrt(lambda) x, where they become the roots of the
single-valued polynomial

    S(xi, lambda) = (4 xi^3 - 3 a~(lambda) xi - b~(lambda))^2 - lambda^3,

a~ = lambda + 1/144 and b~ = (3/8) lambda - 1/1728 being the weight-(2, 3)
family coefficients.  The square-root branch flip around lambda = 0 is then
absorbed by the coordinate, so every loop closes on the nose and the
matching permutation is well defined.

Conventions (frozen; the source of the reference table does not state its
own, so agreement below is asserted exactly only after a single documented
relabeling):

  * base point lambda = -257/256; principal branch of lambda^{3/2} there;
  * labels 1..3 are the roots with C = +lambda^{3/2} (the "P - 1" triple),
    labels 4..6 the others, each triple sorted by (Re, Im) of x = xi/sqrt(lambda);
  * loops are counterclockwise circles of radius half the distance to the
    nearest other puncture, reached from the base point along the real axis,
    detouring over lambda = 0 through the upper half-plane when heading to
    lambda = 1/256;
  * the loop at infinity is the inverse of the finite-loop product (zero
    last), cross-checked by direct tracking along |lambda| = 8 clockwise;
  * permutations compose right-to-left, so sigma_0 o sigma_inf o sigma_c
    is the identity.

With these conventions the tracker computes (16)(25)(34), (12), (1526)(34);
the single relabeling swapping labels 4 and 6 carries all three onto the
pinned REFERENCE_TABLE values simultaneously.

Loops are pure functions of their spec and precision, but within one process
they share the global mpmath precision context; run concurrent loops in
separate processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

import mpmath
from mpmath import mp

from .permutations import Permutation

INFINITY = "infinity"

#: Pinned reference values of the loop table (anticlockwise monodromy around
#: each puncture acting on the six labels, at base point lambda = -257/256).
#: The tracker reproduces these exactly after one documented relabeling.
REFERENCE_TABLE: dict[str, Permutation] = {
    "zero": Permutation.from_cycles(6, [(1, 4), (2, 5), (3, 6)]),
    "quarter256": Permutation.from_cycles(6, [(1, 2)]),
    "infinity": Permutation.from_cycles(6, [(1, 5, 2, 4), (3, 6)]),
}

PUNCTURES = (Fraction(0), Fraction(1, 256))

DEFAULT_BASE_POINT = Fraction(-257, 256)
DEFAULT_STEPS = 256
BIG_RADIUS = 8


class MonodromyError(RuntimeError):
    """Tracking failed in a way that invalidates the permutation."""


class RootCollisionError(MonodromyError):
    """Two tracked roots approached within the safety radius."""


class StepUnderflowError(MonodromyError):
    """Adaptive step size underflowed without meeting the movement bound."""


@dataclass(frozen=True)
class LoopSpec:
    """One puncture loop: which puncture, from where, and how finely."""

    center: Fraction | Literal["infinity"]
    base_point: Fraction = DEFAULT_BASE_POINT
    initial_steps: int = DEFAULT_STEPS
    radius: Fraction | None = None  # None: half the distance to the nearest puncture

    def resolved_radius(self) -> Fraction:
        if self.radius is not None:
            return self.radius
        if self.center == INFINITY:
            return Fraction(BIG_RADIUS)
        others = [p for p in PUNCTURES if p != self.center]
        return min(abs(p - self.center) for p in others) / 2


@dataclass(frozen=True)
class TrackedRoots:
    """The labeled base configuration of the six roots.

    xi_roots are in the tracking coordinate; x_roots = xi/sqrt(lambda) in the
    original coordinate.  Labels 1..3 carry the C = +lambda^{3/2} triple,
    4..6 the opposite one; each triple is sorted by (Re, Im) of its x-root.
    """

    lam: Fraction
    xi_roots: tuple
    x_roots: tuple
    triple_of: tuple  # entry i is 1 or 2 for label i+1


# -- the defining polynomial ----------------------------------------------------


def _family_coeffs(lam):
    a = lam + mpmath.mpf(1) / 144
    b = mpmath.mpf(3) / 8 * lam - mpmath.mpf(1) / 1728
    return a, b


def _C(xi, a, b):
    return ((4 * xi) * xi - 3 * a) * xi - b


def _S(xi, lam, a, b):
    c = _C(xi, a, b)
    return c * c - lam**3


def _S_xi(xi, lam, a, b):
    return 2 * _C(xi, a, b) * (12 * xi * xi - 3 * a)


def _S_lam(xi, lam, a, b):
    # dC/dlambda = -3 xi - 3/8
    return 2 * _C(xi, a, b) * (-3 * xi - mpmath.mpf(3) / 8) - 3 * lam * lam


_BASE_CACHE: dict[tuple[int, Fraction], TrackedRoots] = {}


def base_configuration(
    precision_bits: int = 128, base_point: Fraction = DEFAULT_BASE_POINT
) -> TrackedRoots:
    """Solve for and label the six roots at the base point (cached)."""
    key = (precision_bits, base_point)
    if key in _BASE_CACHE:
        return _BASE_CACHE[key]
    with mp.workprec(precision_bits):
        lam0 = mpmath.mpf(base_point.numerator) / base_point.denominator
        a, b = _family_coeffs(lam0)
        coeffs = [16, 0, -24 * a, -8 * b, 9 * a * a, 6 * a * b, b * b - lam0**3]
        roots = mpmath.polyroots(coeffs, maxsteps=200, extraprec=precision_bits)
        sqrt_lam = mpmath.sqrt(mpmath.mpc(lam0))
        s32 = sqrt_lam**3
        plus, minus = [], []
        for xi in roots:
            xi = mpmath.mpc(xi)
            ratio = _C(xi, a, b) / s32
            (plus if abs(ratio - 1) < abs(ratio + 1) else minus).append(xi)
        if len(plus) != 3 or len(minus) != 3:
            raise MonodromyError("triple split failed at the base point")

        def sort_key(xi):
            x = xi / sqrt_lam
            return (mpmath.re(x), mpmath.im(x))

        plus.sort(key=sort_key)
        minus.sort(key=sort_key)
        xi_roots = tuple(plus + minus)
        x_roots = tuple(xi / sqrt_lam for xi in xi_roots)
        cfg = TrackedRoots(
            lam=base_point,
            xi_roots=xi_roots,
            x_roots=x_roots,
            triple_of=(1, 1, 1, 2, 2, 2),
        )
    _BASE_CACHE[key] = cfg
    return cfg


# -- path construction --------------------------------------------------------


def _segment(z0, z1):
    z0, z1 = mpmath.mpc(z0), mpmath.mpc(z1)
    return (lambda t: z0 + (z1 - z0) * t), abs(z1 - z0)


def _arc(center, radius, th0, th1):
    center = mpmath.mpc(center)
    radius, th0, th1 = mpmath.mpf(radius), mpmath.mpf(th0), mpmath.mpf(th1)

    def path(t):
        return center + radius * mpmath.exp(1j * (th0 + (th1 - th0) * t))

    return path, radius * abs(th1 - th0)


def _loop_pieces(spec: LoopSpec):
    if spec.center != INFINITY and spec.center not in PUNCTURES:
        raise MonodromyError(
            f"loops are defined around the punctures {PUNCTURES} or infinity, "
            f"not {spec.center}"
        )
    base = mpmath.mpf(spec.base_point.numerator) / spec.base_point.denominator
    pi = mpmath.pi
    r = mpmath.mpf(spec.resolved_radius().numerator) / spec.resolved_radius().denominator
    if spec.center == INFINITY:
        out = [_segment(base, -r)]
        circle = [_arc(0, r, pi, -pi)]  # clockwise: counterclockwise around infinity
        back = [_segment(-r, base)]
        return out + circle + back
    c = mpmath.mpf(spec.center.numerator) / spec.center.denominator
    if c == 0:
        out = [_segment(base, -r)]
        circle = [_arc(0, r, pi, 3 * pi)]
        back = [_segment(-r, base)]
        return out + circle + back
    # Loop around 1/256: detour over 0 through the upper half-plane.
    d = mpmath.mpf(1) / 512
    out = [
        _segment(base, -d),
        _arc(0, d, pi, 0),
        _segment(d, c - r),
    ]
    circle = [_arc(c, r, pi, 3 * pi)]
    back = [
        _segment(c - r, d),
        _arc(0, d, 0, pi),
        _segment(-d, base),
    ]
    return out + circle + back


# -- the tracker ----------------------------------------------------------------


def _min_pairwise(roots):
    best = None
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            d = abs(roots[i] - roots[j])
            if best is None or d < best:
                best = d
    return best


def _newton(xi, lam, a, b, tol):
    for _ in range(30):
        f = _S(xi, lam, a, b)
        d = _S_xi(xi, lam, a, b)
        if d == 0:
            raise MonodromyError("vanishing derivative during correction")
        step = f / d
        xi = xi - step
        if abs(step) <= tol * (1 + abs(xi)):
            return xi
    raise MonodromyError("Newton corrector failed to converge")


def _track_pieces(pieces, roots, initial_steps, safety_radius):
    """Continue the root list along the concatenated path pieces.

    Every piece starts at initial_steps subdivisions (the maximum step size);
    steps shrink adaptively wherever the movement bound demands it and grow
    back, never beyond the maximum.
    """
    newton_tol = mpmath.mpf(2) ** (-(mp.prec - 10))
    roots = list(roots)
    for path, _length in pieces:
        nsteps = initial_steps
        max_dt = mpmath.mpf(1) / nsteps
        dt_floor = max_dt / 2**30
        step_budget = max(1024, 16 * initial_steps)
        accepted = 0
        t = mpmath.mpf(0)
        dt = max_dt
        lam = path(t)
        a, b = _family_coeffs(lam)
        prev_min = _min_pairwise(roots)
        while t < 1:
            if accepted > step_budget:
                raise RootCollisionError(
                    "step budget exhausted while separations kept shrinking; "
                    "the path runs into a root degeneracy"
                )
            step = min(dt, 1 - t)
            while True:
                t2 = t + step
                lam2 = path(t2)
                a2, b2 = _family_coeffs(lam2)
                dlam = lam2 - lam
                candidate = []
                ok = True
                for xi in roots:
                    pred = xi - _S_lam(xi, lam, a, b) / _S_xi(xi, lam, a, b) * dlam
                    try:
                        cor = _newton(pred, lam2, a2, b2, newton_tol)
                    except MonodromyError:
                        ok = False
                        break
                    if abs(cor - xi) > prev_min / 3:
                        ok = False
                        break
                    candidate.append(cor)
                if ok:
                    new_min = _min_pairwise(candidate)
                    if new_min < safety_radius:
                        raise RootCollisionError(
                            f"roots within {mpmath.nstr(new_min, 5)} near lambda = "
                            f"{mpmath.nstr(lam2, 8)}; radius too large or degenerate family"
                        )
                    roots = candidate
                    t, lam, a, b = t2, lam2, a2, b2
                    prev_min = new_min
                    dt = min(dt * 2, max_dt)
                    accepted += 1
                    break
                step = step / 2
                if step < dt_floor:
                    raise StepUnderflowError("step size underflowed during tracking")
    return roots


def _match(final, base_cfg: TrackedRoots, precision_bits: int) -> Permutation:
    closure_tol = mpmath.mpf(10) ** (-(precision_bits // 4))
    scale = max(1, max(abs(x) for x in base_cfg.xi_roots))
    images = [0] * 6
    used = set()
    for i, xi in enumerate(final):
        dists = [abs(xi - base) for base in base_cfg.xi_roots]
        j = min(range(6), key=lambda k: dists[k])
        if dists[j] > closure_tol * scale:
            raise MonodromyError(
                f"loop failed to close: residual {mpmath.nstr(dists[j], 5)}"
            )
        if j in used:
            raise MonodromyError("two roots matched the same base root")
        used.add(j)
        images[i] = j + 1
    return Permutation(images)


def track_loop(spec: LoopSpec, precision_bits: int = 128) -> Permutation:
    """The permutation of the six labels induced by one loop.

    sigma(i) = j means the root labeled i lands on the base root labeled j.
    Deterministic for a fixed spec and precision.
    """
    with mp.workprec(precision_bits):
        cfg = base_configuration(precision_bits, spec.base_point)
        # Legitimate loops here never push the six roots closer than a few
        # thousandths of the base scale; anything below this is a shrinking
        # pair headed for a degeneracy (radius too large, or a path through
        # a puncture).
        safety = mpmath.mpf("1e-4") * max(abs(x) for x in cfg.xi_roots)
        pieces = _loop_pieces(spec)
        final = _track_pieces(pieces, cfg.xi_roots, spec.initial_steps, safety)
        return _match(final, cfg, precision_bits)


@dataclass(frozen=True)
class PunctureTable:
    """Monodromy around the three punctures, composing to the identity.

    around_zero o around_infinity o around_quarter256 = id (right-to-left
    composition, quarter256 loop first).
    """

    around_zero: Permutation
    around_quarter256: Permutation
    around_infinity: Permutation

    def as_dict(self) -> dict[str, Permutation]:
        return {
            "zero": self.around_zero,
            "quarter256": self.around_quarter256,
            "infinity": self.around_infinity,
        }


def puncture_table(
    precision_bits: int = 128,
    initial_steps: int = DEFAULT_STEPS,
    check_infinity_directly: bool = True,
) -> PunctureTable:
    """Loop permutations at the default base point.

    The infinity entry is defined by the product relation (the inverse of the
    composite of the finite loops); when check_infinity_directly is set it is
    also recomputed by tracking along |lambda| = 8 and the two must agree.
    """
    spec0 = LoopSpec(center=Fraction(0), initial_steps=initial_steps)
    specc = LoopSpec(center=Fraction(1, 256), initial_steps=initial_steps)
    g0 = track_loop(spec0, precision_bits)
    gc = track_loop(specc, precision_bits)
    ginf = g0.inverse() * gc.inverse()
    if check_infinity_directly:
        direct = track_loop(
            LoopSpec(center=INFINITY, initial_steps=initial_steps), precision_bits
        )
        if direct != ginf:
            raise MonodromyError(
                f"big-circle check failed: {direct.cycle_string()} vs "
                f"{ginf.cycle_string()}"
            )
    table = PunctureTable(
        around_zero=g0, around_quarter256=gc, around_infinity=ginf
    )
    product = table.around_zero * table.around_infinity * table.around_quarter256
    if not product.is_identity:
        raise MonodromyError("puncture loops do not compose to the identity")
    return table


# -- parity classification of deck actions ----------------------------------------

BLOCK_ONE = frozenset({1, 2, 3})
BLOCK_TWO = frozenset({4, 5, 6})


@dataclass(frozen=True)
class DeckParity:
    """Outcome of the parity test for a label permutation.

    verdict is "preserves" (even, fixes each triple setwise: the deck move
    acts by automorphisms of both elliptic surfaces), "swaps" (odd, fixes
    each triple: it exchanges the two surfaces), or "not_in_H".  For
    permutations outside H, block_image records whether the triple pair is
    swapped wholesale or broken.
    """

    verdict: Literal["preserves", "swaps", "not_in_H"]
    odd: bool
    block_image: Literal["fixed", "swapped", "broken"]

    @property
    def in_H(self) -> bool:
        return self.block_image == "fixed"


def deck_parity(tau: Permutation) -> DeckParity:
    if tau.degree != 6:
        raise ValueError("parity test expects a permutation of six labels")
    image_one = frozenset(tau(i) for i in BLOCK_ONE)
    odd = tau.is_odd
    if image_one == BLOCK_ONE:
        return DeckParity(
            verdict="swaps" if odd else "preserves", odd=odd, block_image="fixed"
        )
    if image_one == BLOCK_TWO:
        return DeckParity(verdict="not_in_H", odd=odd, block_image="swapped")
    return DeckParity(verdict="not_in_H", odd=odd, block_image="broken")

"""Permutations of {1..n} with cycle-notation I/O and orbit utilities.

Composition convention used across the whole package: (p * q)(x) = p(q(x)),
i.e. the right factor acts first.  Points are 1-based everywhere in the
public interface; cycle strings look like "(1 5 2 4)(3 6)" and are
whitespace- and comma-insensitive.
"""

from __future__ import annotations

import re
from math import lcm


class PermutationError(ValueError):
    """Malformed permutation data."""


class Permutation:
    """A bijection of {1..n}, stored as the tuple of images of 1..n."""

    __slots__ = ("images",)

    def __init__(self, images):
        imgs = tuple(int(i) for i in images)
        n = len(imgs)
        if sorted(imgs) != list(range(1, n + 1)):
            raise PermutationError(f"not a bijection of 1..{n}: {imgs}")
        object.__setattr__(self, "images", imgs)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(range(1, n + 1))

    @staticmethod
    def from_cycles(n: int, cycles) -> "Permutation":
        imgs = list(range(1, n + 1))
        for cyc in cycles:
            cyc = [int(c) for c in cyc]
            if len(set(cyc)) != len(cyc):
                raise PermutationError(f"repeated point in cycle {cyc}")
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if not 1 <= a <= n:
                    raise PermutationError(f"point {a} outside 1..{n}")
                imgs[a - 1] = b
        p = Permutation(imgs)
        return p

    @staticmethod
    def from_cycle_string(n: int, text: str) -> "Permutation":
        """Parse cycle notation, e.g. "(1 5 2 4)(3 6)"; "id" or "()" is allowed."""
        s = text.strip()
        if s in ("", "id", "()", "e"):
            return Permutation.identity(n)
        if not re.fullmatch(r"(\s*\(\s*\d+(?:[\s,]+\d+)*\s*\)\s*)+", s):
            raise PermutationError(f"cannot parse cycle string {text!r}")
        cycles = []
        for body in re.findall(r"\(([^()]*)\)", s):
            cycles.append([int(tok) for tok in re.split(r"[\s,]+", body.strip()) if tok])
        return Permutation.from_cycles(n, cycles)

    # -- basic protocol ------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise PermutationError("degree mismatch in composition")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(inv)

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, start=1))

    # -- cycle structure -------------------------------------------------------

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its least point, sorted."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            j = self(start)
            while j != start:
                cyc.append(j)
                seen[j - 1] = True
                j = self(j)
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Partition of n by cycle lengths, largest first."""
        lengths = [len(c) for c in self.cycles(include_fixed=True)]
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        return lcm(*(self.cycle_type() or (1,)))

    def sign(self) -> int:
        return -1 if sum(length - 1 for length in self.cycle_type()) % 2 else 1

    @property
    def is_odd(self) -> bool:
        return self.sign() == -1

    def conjugate_by(self, rho: "Permutation") -> "Permutation":
        """rho * self * rho^{-1}."""
        return rho * self * rho.inverse()

    def cycle_string(self) -> str:
        cs = self.cycles()
        if not cs:
            return "id"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)

    def __repr__(self):
        return f"Permutation[{self.cycle_string()}]"


def compose_all(perms, degree: int) -> Permutation:
    """Compose so the first listed permutation acts first."""
    result = Permutation.identity(degree)
    for p in perms:
        result = p * result
    return result


def orbits(degree: int, generators) -> list[tuple[int, ...]]:
    """Orbits of <generators> on {1..degree}, each sorted, ordered by minimum."""
    gens = list(generators)
    seen = [False] * degree
    out = []
    for start in range(1, degree + 1):
        if seen[start - 1]:
            continue
        frontier = [start]
        seen[start - 1] = True
        orbit = [start]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = g(x)
                if not seen[y - 1]:
                    seen[y - 1] = True
                    orbit.append(y)
                    frontier.append(y)
        out.append(tuple(sorted(orbit)))
    return out


def is_transitive(degree: int, generators) -> bool:
    return len(orbits(degree, generators)) == 1


def group_closure(generators, limit: int = 100000) -> list[Permutation]:
    """All elements of the group generated by the given permutations.

    Deterministic order: breadth-first from the identity, multiplying by the
    generators in their given order.  Raises if the group exceeds limit.
    """
    gens = list(generators)
    if not gens:
        raise PermutationError("need at least one generator")
    n = gens[0].degree
    identity = Permutation.identity(n)
    elements = [identity]
    index = {identity: 0}
    frontier = [identity]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                e = g * h
                if e not in index:
                    index[e] = len(elements)
                    elements.append(e)
                    nxt.append(e)
                    if len(elements) > limit:
                        raise PermutationError("group closure exceeded limit")
        frontier = nxt
    return elements

"""Homology of the cell stabilizers of an NEC group action.

Stabilizers are trivial, finite cyclic (cone points), infinite cyclic
(cusps), a single reflection, or dihedral (corner points).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .abelian import TRIVIAL, Z, canonical_form, cyclic, elementary_2


def cyclic_homology(m, q):
    """H_q(Z_m; Z); m = None or math.inf means the infinite cyclic group."""
    if q < 0:
        raise ValueError("negative degree")
    if q == 0:
        return Z
    if m is None or m == math.inf:
        return Z if q == 1 else TRIVIAL
    return cyclic(m) if q % 2 else TRIVIAL


def cyclic_homology_mod2_rank(m, q):
    if q == 0:
        return 1
    if m is None or m == math.inf:
        return 1 if q == 1 else 0
    return 1 if m % 2 == 0 else 0


def dihedral_homology(n, q):
    """H_q(D_2n; Z) for the dihedral group of order 2n."""
    if n < 2:
        raise ValueError("dihedral parameter must be >= 2")
    if q < 0:
        raise ValueError("negative degree")
    if q == 0:
        return Z
    if n % 2:
        if q % 4 == 1:
            return elementary_2(1)
        if q % 4 == 3:
            return cyclic(2 * n)
        return TRIVIAL
    if q % 2 == 0:
        return elementary_2(q // 2)
    if q % 4 == 1:
        return elementary_2((q + 3) // 2)
    return canonical_form(0, [2] * ((q + 1) // 2) + [n])


def dihedral_homology_mod2_rank(n, q):
    """dim H_q(D_2n; Z_2)."""
    if n < 2 or q < 0:
        raise ValueError("need n >= 2 and q >= 0")
    return q + 1 if n % 2 == 0 else 1


class Stabilizer:
    """Common interface: integral and mod-2 homology, rational Euler char."""

    def homology(self, q):
        raise NotImplementedError

    def mod2_rank(self, q):
        raise NotImplementedError

    def euler(self):
        raise NotImplementedError

    def reflection_image(self, tag):
        """Coordinate in H_q(-; Z_2), q >= 1, hit by a tagged reflection."""
        raise ValueError(f"{self} contains no reflections")


@dataclass(frozen=True)
class Trivial(Stabilizer):
    def homology(self, q):
        return Z if q == 0 else TRIVIAL

    def mod2_rank(self, q):
        return 1 if q == 0 else 0

    def euler(self):
        return Fraction(1)

    def __str__(self):
        return "1"


@dataclass(frozen=True)
class Cyclic(Stabilizer):
    order: int

    def homology(self, q):
        return cyclic_homology(self.order, q)

    def mod2_rank(self, q):
        return cyclic_homology_mod2_rank(self.order, q)

    def euler(self):
        return Fraction(1, self.order)

    def __str__(self):
        return f"Z_{self.order}"


@dataclass(frozen=True)
class InfiniteCyclic(Stabilizer):
    def homology(self, q):
        return cyclic_homology(None, q)

    def mod2_rank(self, q):
        return cyclic_homology_mod2_rank(None, q)

    def euler(self):
        return Fraction(0)

    def __str__(self):
        return "Z"


@dataclass(frozen=True)
class Reflection(Stabilizer):
    def homology(self, q):
        return cyclic_homology(2, q)

    def mod2_rank(self, q):
        return 1

    def euler(self):
        return Fraction(1, 2)

    def reflection_image(self, tag):
        return 0

    def __str__(self):
        return "Z_2(refl)"


@dataclass(frozen=True)
class Dihedral(Stabilizer):
    n: int

    def homology(self, q):
        return dihedral_homology(self.n, q)

    def mod2_rank(self, q):
        return dihedral_homology_mod2_rank(self.n, q)

    def euler(self):
        return Fraction(1, 2 * self.n)

    def reflection_image(self, tag):
        # For odd n the two generating reflections are conjugate, so both
        # restrict to the single mod-2 class in each positive degree.  For
        # even n they are not, and restriction of a^q, b^q (a, b dual to
        # the two reflections in H^1) separates their images.
        return 0 if self.n % 2 else tag

    def __str__(self):
        return f"D_{2 * self.n}"

"""Finitely generated abelian groups in invariant-factor form."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from sympy import factorint

from .linalg import invariant_factors_of_diagonal


@dataclass(frozen=True)
class FinAbGroup:
    """Z^rank + Z_{d_1} + ... + Z_{d_k} with 1 < d_1 | d_2 | ... | d_k.

    Build instances through canonical_form(); the constructor only checks
    that the data already is canonical.
    """
    rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        t = tuple(self.torsion)
        object.__setattr__(self, "torsion", t)
        if self.rank < 0:
            raise ValueError("negative rank")
        if any(d < 2 for d in t) or any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"torsion {t} is not in invariant-factor form")

    def __add__(self, other):
        return direct_sum(self, other)

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        for d, e in _runs(self.torsion):
            parts.append(f"Z_{d}" if e == 1 else f"Z_{d}^{e}")
        return " + ".join(parts) if parts else "0"

    @property
    def is_trivial(self):
        return self.rank == 0 and not self.torsion

    @property
    def order(self):
        """Order of the torsion subgroup."""
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def free_part(self):
        return FinAbGroup(self.rank, ())

    def torsion_part(self):
        return FinAbGroup(0, self.torsion)

    def mod2_tensor_rank(self):
        """dim over F_2 of G (x) Z_2."""
        return self.rank + sum(1 for d in self.torsion if d % 2 == 0)

    def mod2_tor_rank(self):
        """dim over F_2 of Tor(G, Z_2)."""
        return sum(1 for d in self.torsion if d % 2 == 0)

    def primary_decomposition(self):
        """Sorted prime-power orders of the elementary divisors."""
        out = []
        for d in self.torsion:
            out.extend(p ** e for p, e in factorint(d).items())
        return sorted(out)

    def to_json(self):
        return {"rank": self.rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, data):
        return canonical_form(data["rank"], data["torsion"])


def _runs(seq):
    return list(Counter(seq).items())


TRIVIAL = FinAbGroup()
Z = FinAbGroup(1)


def canonical_form(rank, cyclic_orders=()):
    """Canonical group Z^rank + (+) Z_{o} over the given finite orders >= 1."""
    orders = list(cyclic_orders)
    if any(o < 1 for o in orders):
        raise ValueError("cyclic orders must be >= 1")
    factors = invariant_factors_of_diagonal(orders)
    return FinAbGroup(rank, tuple(d for d in factors if d > 1))


def cyclic(n):
    """Z_n, with cyclic(0) meaning Z."""
    return Z if n == 0 else canonical_form(0, [n])


def elementary_2(k):
    return FinAbGroup(0, (2,) * k)


def direct_sum(*groups):
    rank = sum(g.rank for g in groups)
    return canonical_form(rank, [d for g in groups for d in g.torsion])


def is_isomorphic(a, b):
    return a.rank == b.rank and a.torsion == b.torsion


def uct_cohomology(h_q, h_qminus1=TRIVIAL):
    """H^q from H_q and H_{q-1} by universal coefficients (Z coefficients)."""
    return FinAbGroup(h_q.rank, h_qminus1.torsion)

"""Integral homology and cohomology of NEC groups in closed form.

Three regimes, by signature:

    (a) sign +, no cusps and no period cycles   (cocompact Fuchsian)
    (b) sign +, with cusps or period cycles
    (c) sign -

Cohomology comes in two modes.  ``proof-derived`` (the default) applies the
universal coefficient theorem to the homology tables below.  ``as-printed``
evaluates the published cohomology table row by row; it differs from the
proof-derived value in degrees q = 0 mod 4, q > 0, of regimes (b) and (c)
by an extra Z_2^{C_E} (C_E = number of even corner orders).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .abelian import TRIVIAL, Z, canonical_form, direct_sum, elementary_2, uct_cohomology
from .errors import WrongSign
from .linalg import gcd_j_products
from .presentation import abelianization
from .signature import derived_counts, validate

PROOF_DERIVED = "proof-derived"
AS_PRINTED = "as-printed"
MODES = (PROOF_DERIVED, AS_PRINTED)
DEFAULT_QMAX = 12


@dataclass(frozen=True)
class TConstants:
    hhat: tuple         # gcd of j-fold products of the periods, j = 1..r-1
    t: tuple            # successive quotients hhat_j / hhat_{j-1}
    complement: object  # FinAbGroup with sum Z_t + complement = sum Z_m


def t_constants(periods):
    periods = list(periods)
    r = len(periods)
    hhat = tuple(gcd_j_products(periods, j) for j in range(1, r))
    t = tuple(h // prev for h, prev in zip(hhat, (1,) + hhat))
    if r == 0:
        return TConstants((), (), TRIVIAL)
    total = 1
    for m in periods:
        total *= m
    last = hhat[-1] if hhat else 1
    return TConstants(hhat, t, canonical_form(0, [total // last]))


def w_constants(sig):
    """Non-unit torsion invariant factors of H_1 for a non-orientable group."""
    if sig.orientable:
        raise WrongSign("w-constants are defined for sign '-' only")
    return list(abelianization(sig).torsion)


def _z2(k):
    return elementary_2(k)


def _periods(sig):
    return canonical_form(0, sig.periods)


def _corners(sig):
    return canonical_form(0, [n for c in sig.cycles for n in c])


def homology(sig, q):
    """H_q(Gamma; Z) for a validated signature."""
    if q < 0:
        raise ValueError("negative degree")
    validate(sig)
    if q == 0:
        return Z
    c = derived_counts(sig)
    if sig.case == "a":
        if q == 1:
            return canonical_form(2 * sig.genus, t_constants(sig.periods).t)
        if q == 2:
            return Z
        return _periods(sig) if q % 2 else TRIVIAL

    base = c.odd_only_cycles + c.num_empty_cycles
    ce = c.even_corners
    if q == 1:
        if sig.case == "b":
            free = 2 * sig.genus + sig.cusps + c.num_cycles + c.num_empty_cycles - 1
            return direct_sum(canonical_form(free), _z2(ce + base), _periods(sig))
        free = sig.genus + sig.cusps + c.num_cycles + c.num_empty_cycles - 1
        return canonical_form(free, w_constants(sig))
    if q % 2 == 0:
        return _z2(q // 2 * ce + base)
    if q % 4 == 3:
        return direct_sum(_z2((q - 1) // 2 * ce + base), _corners(sig), _periods(sig))
    return direct_sum(_z2((q + 1) // 2 * ce + base), _periods(sig))


def _as_printed(sig, q):
    if q == 0:
        return Z
    c = derived_counts(sig)
    if sig.case == "a":
        if q == 1:
            return canonical_form(2 * sig.genus)
        if q == 2:
            return canonical_form(1, t_constants(sig.periods).t)
        return _periods(sig) if q % 2 == 0 else TRIVIAL
    base = c.odd_only_cycles + c.num_empty_cycles
    ce = c.even_corners
    if q == 1:
        genus_part = 2 * sig.genus if sig.case == "b" else sig.genus
        return canonical_form(genus_part + sig.cusps + c.num_cycles + c.num_empty_cycles - 1)
    if q % 2 == 1:
        return _z2((q - 1) // 2 * ce + base)
    if sig.case == "c" and q == 2:
        return canonical_form(0, w_constants(sig))
    if q % 4 == 2:
        return direct_sum(_z2(q // 2 * ce + base), _periods(sig))
    return direct_sum(_z2(q // 2 * ce + base), _corners(sig), _periods(sig))


def cohomology(sig, q, mode=PROOF_DERIVED):
    """H^q(Gamma; Z) in the requested mode."""
    if q < 0:
        raise ValueError("negative degree")
    validate(sig)
    if mode == PROOF_DERIVED:
        prev = homology(sig, q - 1) if q > 0 else TRIVIAL
        return uct_cohomology(homology(sig, q), prev)
    if mode == AS_PRINTED:
        return _as_printed(sig, q)
    raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")


def modes_expected_to_differ(sig, q):
    """True where the two cohomology modes are known to disagree."""
    return (sig.case in "bc" and q > 0 and q % 4 == 0
            and derived_counts(sig).even_corners > 0)


@dataclass(frozen=True)
class GradedGroupTable:
    kind: str                 # "homology" or "cohomology"
    mode: str
    groups: dict = field(default_factory=dict)

    def __getitem__(self, q):
        return self.groups[q]

    def items(self):
        return sorted(self.groups.items())


def homology_table(sig, qmax=DEFAULT_QMAX):
    return GradedGroupTable("homology", PROOF_DERIVED,
                            {q: homology(sig, q) for q in range(qmax + 1)})


def cohomology_table(sig, qmax=DEFAULT_QMAX, mode=PROOF_DERIVED):
    return GradedGroupTable("cohomology", mode,
                            {q: cohomology(sig, q, mode) for q in range(qmax + 1)})


def unit_w_dropped(sig):
    """How many of the printed Z_{w_p} factors (r+d+k+sum s_i of them) are units."""
    if sig.orientable:
        return 0
    c = derived_counts(sig)
    printed = c.num_periods + c.num_empty_cycles + c.num_cycles + c.num_corners
    return max(printed - len(w_constants(sig)), 0)

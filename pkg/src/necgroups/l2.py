"""Rational Euler characteristic and L^2-Betti numbers of NEC groups.

Only the first L^2-Betti number can be non-zero, and it equals minus the
rational Euler characteristic, i.e. the hyperbolic measure of the signature.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotFuchsian
from .signature import hyperbolic_measure, validate


@dataclass(frozen=True)
class L2Profile:
    chi_q: Fraction
    betti: dict  # degree -> Fraction, only degrees 0..2 listed


def l2_betti(sig, p):
    if p < 0:
        raise ValueError("negative degree")
    validate(sig)
    return hyperbolic_measure(sig) if p == 1 else Fraction(0)


def rational_euler_characteristic(sig):
    return -l2_betti(sig, 1)


def l2_profile(sig):
    return L2Profile(rational_euler_characteristic(sig),
                     {p: l2_betti(sig, p) for p in range(3)})


def fuchsian_l2_betti(sig):
    """beta_1^(2) by the Fuchsian-only expression 2g - 2 + s + r - sum 1/m."""
    if not sig.is_fuchsian:
        raise NotFuchsian(f"{sig} is not Fuchsian")
    validate(sig)
    return (2 * sig.genus - 2 + sig.cusps + len(sig.periods)
            - sum(Fraction(1, m) for m in sig.periods))


def format_rational(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

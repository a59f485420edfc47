"""Cohomology rings of Fuchsian groups.

H^*(Gamma) splits as a direct sum of one unital ring and several non-unital
ideals.  For a cocompact group [g,0;m_1..m_r]:

    H^*(Sigma_g)  +  sum_j H^+(Z_{t_j})  +  sum_k R_{q_k}

and for s > 0 cusps:

    Z[x_1..x_n]/(x_i x_j)  +  sum_j H^+(Z_{m_j}),      n = 2g + s - 1

where H^+(Z_t) is the positive-degree part of H^*(Z_t) = Z[u]/(t u), |u| = 2,
and R_q = Z[x, y]/(x^3 - y^2, q x, q y) with |x| = 4, |y| = 6 (also without
its degree-0 part).  Products between different summands vanish, except
that the unit of the unital summand acts as the identity everywhere.

Elements are written as sums of terms ``[coef*]s<i>.<monomial>`` where i is
the summand index; the bare term ``1`` is the unit.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .abelian import TRIVIAL, Z, canonical_form, cyclic, direct_sum
from .cohomology import t_constants
from .errors import ElementNotInRing, NonHomogeneous, NotFuchsian
from .signature import validate

UNIT = ("1",)


@dataclass(frozen=True)
class SurfaceRing:
    """H^*(Sigma_g): basis 1, a_i, b_i (degree 1), w (degree 2)."""
    genus: int
    unital = True
    modulus = 0

    def degree(self, mono):
        return {"1": 0, "a": 1, "b": 1, "w": 2}[mono[0]]

    def basis(self, q):
        if q == 0:
            return [UNIT]
        if q == 1:
            return ([("a", i) for i in range(1, self.genus + 1)]
                    + [("b", i) for i in range(1, self.genus + 1)])
        if q == 2:
            return [("w",)]
        return []

    def group(self, q):
        return canonical_form(len(self.basis(q)))

    def multiply(self, m1, m2):
        if m1 == UNIT:
            return [(m2, 1)]
        if m2 == UNIT:
            return [(m1, 1)]
        if len(m1) == 2 and len(m2) == 2 and m1[1] == m2[1] and m1[0] != m2[0]:
            return [(("w",), 1 if m1[0] == "a" else -1)]
        return []

    def format_monomial(self, mono):
        return mono[0] if len(mono) == 1 else f"{mono[0]}{mono[1]}"

    def parse_monomial(self, text):
        if text in ("1", "w"):
            return (text,)
        m = re.fullmatch(r"([ab])(\d+)", text)
        if m and 1 <= int(m.group(2)) <= self.genus:
            return (m.group(1), int(m.group(2)))
        raise ElementNotInRing(f"{text!r} is not a basis element of {self}")

    def __str__(self):
        return f"SurfaceRing({self.genus})"


@dataclass(frozen=True)
class TruncatedDegreeOne:
    """Z[x_1..x_n]/(x_i x_j for all i, j), |x_i| = 1."""
    n: int
    unital = True
    modulus = 0

    def degree(self, mono):
        return 0 if mono == UNIT else 1

    def basis(self, q):
        if q == 0:
            return [UNIT]
        if q == 1:
            return [("x", i) for i in range(1, self.n + 1)]
        return []

    def group(self, q):
        return canonical_form(len(self.basis(q)))

    def multiply(self, m1, m2):
        if m1 == UNIT:
            return [(m2, 1)]
        if m2 == UNIT:
            return [(m1, 1)]
        return []

    def format_monomial(self, mono):
        return "1" if mono == UNIT else f"x{mono[1]}"

    def parse_monomial(self, text):
        if text == "1":
            return UNIT
        m = re.fullmatch(r"x(\d+)", text)
        if m and 1 <= int(m.group(1)) <= self.n:
            return ("x", int(m.group(1)))
        raise ElementNotInRing(f"{text!r} is not a basis element of {self}")

    def __str__(self):
        return f"TruncatedDegreeOne({self.n})"


@dataclass(frozen=True)
class _PositiveCyclic:
    """Positive-degree part of H^*(Z_t) = Z[u]/(t u), |u| = 2."""
    order: int
    unital = False

    @property
    def modulus(self):
        return self.order

    def degree(self, mono):
        return 2 * mono[1]

    def basis(self, q):
        if q > 0 and q % 2 == 0 and self.order > 1:
            return [("u", q // 2)]
        return []

    def group(self, q):
        return cyclic(self.order) if q > 0 and q % 2 == 0 else TRIVIAL

    def multiply(self, m1, m2):
        return [(("u", m1[1] + m2[1]), 1)]

    def format_monomial(self, mono):
        return "u" if mono[1] == 1 else f"u^{mono[1]}"

    def parse_monomial(self, text):
        m = re.fullmatch(r"u(?:\^(\d+))?", text)
        if m:
            p = int(m.group(1) or 1)
            if p >= 1:
                return ("u", p)
        raise ElementNotInRing(f"{text!r} is not a basis element of {self}")

    def __str__(self):
        return f"{type(self).__name__}({self.order})"


class CyclicClassRing(_PositiveCyclic):
    """The summand H^+(Z_t) contributed by a torsion factor t of H_1."""


class FullCyclicRing(_PositiveCyclic):
    """The summand H^+(Z_m) contributed by a period m of a cusped group."""


@dataclass(frozen=True)
class RRing:
    """R_q without degree 0, over the basis x^a y^b (b in {0, 1})."""
    order: int
    unital = False

    @property
    def modulus(self):
        return self.order

    def degree(self, mono):
        a, b = mono
        return 4 * a + 6 * b

    def basis(self, q):
        if q < 4 or q % 2 or self.order == 1:
            return []
        half = q // 2
        if half % 2 == 0:
            return [(half // 2, 0)]
        return [((half - 3) // 2, 1)]

    def group(self, q):
        return cyclic(self.order) if self.basis(q) else TRIVIAL

    def multiply(self, m1, m2):
        a, b = m1[0] + m2[0], m1[1] + m2[1]
        if b == 2:  # y^2 = x^3
            a, b = a + 3, 0
        return [((a, b), 1)]

    def format_monomial(self, mono):
        a, b = mono
        xs = "" if a == 0 else ("x" if a == 1 else f"x^{a}")
        return xs + ("y" if b else "")

    def parse_monomial(self, text):
        m = re.fullmatch(r"(x(?:\^(\d+))?)?(y)?", text)
        if m and (m.group(1) or m.group(3)):
            a = 0 if not m.group(1) else int(m.group(2) or 1)
            b = 1 if m.group(3) else 0
            if (a, b) != (0, 0):
                return (a, b)
        raise ElementNotInRing(f"{text!r} is not a basis element of {self}")

    def __str__(self):
        return f"RRing({self.order})"


@dataclass(frozen=True)
class RingElement:
    """Finite sum of basis monomials: ((summand index, monomial), coeff) pairs."""
    terms: tuple = ()

    @property
    def is_zero(self):
        return not self.terms


@dataclass(frozen=True)
class RingDescription:
    summands: tuple

    def __str__(self):
        return " + ".join(f"[{i}] {s}" for i, s in enumerate(self.summands))

    def to_json(self):
        return [{"index": i, "type": type(s).__name__,
                 "parameter": getattr(s, "genus", getattr(s, "n", getattr(s, "order", None)))}
                for i, s in enumerate(self.summands)]

    def unit_summand(self):
        return next(i for i, s in enumerate(self.summands) if s.unital)

    def element(self, terms):
        """Normalize {(index, mono): coeff} into a RingElement."""
        acc = {}
        for (i, mono), coeff in dict(terms).items():
            if not 0 <= i < len(self.summands):
                raise ElementNotInRing(f"no summand with index {i}")
            s = self.summands[i]
            if mono not in s.basis(s.degree(mono)):
                raise ElementNotInRing(f"{mono!r} is not a basis monomial of {s}")
            acc[(i, mono)] = acc.get((i, mono), 0) + coeff
        out = []
        for key, coeff in acc.items():
            mod = self.summands[key[0]].modulus
            if mod:
                coeff %= mod
            if coeff:
                out.append((key, coeff))
        return RingElement(tuple(sorted(out, key=_term_key)))

    def unit(self):
        return self.element({(self.unit_summand(), UNIT): 1})

    def degree(self, elem):
        """Degree of a homogeneous element; None for zero."""
        degrees = {self.summands[i].degree(m) for (i, m), _ in elem.terms}
        if len(degrees) > 1:
            raise NonHomogeneous(f"element mixes degrees {sorted(degrees)}")
        return degrees.pop() if degrees else None

    def basis(self, q):
        return [(i, m) for i, s in enumerate(self.summands) for m in s.basis(q)]

    def cup(self, a, b):
        self.degree(a)
        self.degree(b)
        u = self.unit_summand()
        out = {}
        for (i, m1), c1 in a.terms:
            for (j, m2), c2 in b.terms:
                if i == j:
                    products = [(i, m, sign) for m, sign in
                                self.summands[i].multiply(m1, m2)]
                elif i == u and m1 == UNIT:
                    products = [(j, m2, 1)]
                elif j == u and m2 == UNIT:
                    products = [(i, m1, 1)]
                else:
                    products = []
                for k, m, sign in products:
                    out[(k, m)] = out.get((k, m), 0) + sign * c1 * c2
        return self.element({key: c for key, c in out.items()
                             if self._has(key)})

    def _has(self, key):
        i, m = key
        s = self.summands[i]
        return m in s.basis(s.degree(m))

    def format_element(self, elem):
        if elem.is_zero:
            return "0"
        parts = []
        for (i, m), c in elem.terms:
            s = self.summands[i]
            body = "1" if (m == UNIT and i == self.unit_summand()) \
                else f"s{i}.{s.format_monomial(m)}"
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            parts.append((sign, body if mag == 1 else f"{mag}*{body}"))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def parse_element(self, text):
        src = text.replace(" ", "")
        if src in ("", "0"):
            return RingElement()
        terms = {}
        for m in re.finditer(r"([+-]?)([^+-]+)", src):
            sign = -1 if m.group(1) == "-" else 1
            body = m.group(2)
            coeff = 1
            cm = re.fullmatch(r"(\d+)\*(.+)", body)
            if cm:
                coeff, body = int(cm.group(1)), cm.group(2)
            if body == "1":
                key = (self.unit_summand(), UNIT)
            else:
                tm = re.fullmatch(r"s(\d+)\.(.+)", body)
                if not tm:
                    raise ElementNotInRing(f"cannot read term {body!r}")
                i = int(tm.group(1))
                if not 0 <= i < len(self.summands):
                    raise ElementNotInRing(f"no summand with index {i}")
                key = (i, self.summands[i].parse_monomial(tm.group(2)))
            terms[key] = terms.get(key, 0) + sign * coeff
        elem = self.element(terms)
        self.degree(elem)
        return elem


def _term_key(term):
    (i, mono), _ = term
    return (i, tuple(str(x) for x in mono))


def ring_structure(sig):
    validate(sig)
    if not sig.is_fuchsian:
        raise NotFuchsian(f"{sig} is not Fuchsian (needs sign + and no cycles)")
    if sig.cusps == 0:
        tc = t_constants(sig.periods)
        summands = [SurfaceRing(sig.genus)]
        summands += [CyclicClassRing(t) for t in tc.t]
        summands += [RRing(q) for q in tc.complement.torsion]
    else:
        summands = [TruncatedDegreeOne(2 * sig.genus + sig.cusps - 1)]
        summands += [FullCyclicRing(m) for m in sig.periods]
    return RingDescription(tuple(summands))


def degree_component(ring, q):
    return direct_sum(*(s.group(q) for s in ring.summands)) if ring.summands else (
        Z if q == 0 else TRIVIAL)


def cup_product(ring, a, b):
    return ring.cup(a, b)

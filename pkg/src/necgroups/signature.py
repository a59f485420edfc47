"""NEC signatures: parsing, printing, validation and derived counts.

Two textual forms are accepted::

    (g,s,+,[m_1,...,m_r],{(n_11,...,n_1s),...,()})     full NEC form
    [g,s;m_1,...,m_r]                                   Fuchsian shorthand

Whitespace is ignored.  The Fuchsian shorthand is the NEC form with sign
``+`` and no period cycles.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (BadPeriod, NonOrientableGenusZero, NotHyperbolic,
                     SignatureSyntaxError)


@dataclass(frozen=True)
class Signature:
    sign: str
    genus: int
    cusps: int
    periods: tuple = ()
    cycles: tuple = ()

    def __post_init__(self):
        if self.sign not in "+-" or len(self.sign) != 1:
            raise ValueError(f"sign must be '+' or '-', got {self.sign!r}")
        if self.genus < 0 or self.cusps < 0:
            raise ValueError("genus and cusps must be non-negative")
        object.__setattr__(self, "periods", tuple(self.periods))
        object.__setattr__(self, "cycles", tuple(tuple(c) for c in self.cycles))

    @property
    def orientable(self):
        return self.sign == "+"

    @property
    def nonempty_cycles(self):
        return tuple(c for c in self.cycles if c)

    @property
    def is_fuchsian(self):
        return self.orientable and not self.cycles

    @property
    def case(self):
        """'a' cocompact Fuchsian, 'b' other orientable, 'c' non-orientable."""
        if not self.orientable:
            return "c"
        if self.cusps == 0 and not self.cycles:
            return "a"
        return "b"

    def __str__(self):
        return format_signature(self)


@dataclass(frozen=True)
class DerivedCounts:
    num_periods: int
    num_cusps: int
    num_cycles: int          # non-empty period cycles
    num_empty_cycles: int
    even_corners: int
    odd_corners: int
    odd_only_cycles: int     # non-empty cycles whose corner orders are all odd
    num_corners: int


def derived_counts(sig):
    nonempty = sig.nonempty_cycles
    corners = [n for c in nonempty for n in c]
    even = sum(1 for n in corners if n % 2 == 0)
    return DerivedCounts(
        num_periods=len(sig.periods),
        num_cusps=sig.cusps,
        num_cycles=len(nonempty),
        num_empty_cycles=len(sig.cycles) - len(nonempty),
        even_corners=even,
        odd_corners=len(corners) - even,
        odd_only_cycles=sum(1 for c in nonempty if all(n % 2 for n in c)),
        num_corners=len(corners),
    )


def hyperbolic_measure(sig):
    """Return the (exact) hyperbolic area of the quotient orbifold over 2*pi.

    A group with this signature exists exactly when the value is positive.
    """
    c = derived_counts(sig)
    mu = Fraction(2 * sig.genus if sig.orientable else sig.genus) - 2
    mu += c.num_cusps + c.num_periods + c.num_empty_cycles + c.num_cycles
    mu += Fraction(c.num_corners, 2)
    mu -= sum(Fraction(1, m) for m in sig.periods)
    mu -= sum(Fraction(1, 2 * n) for cyc in sig.cycles for n in cyc)
    return mu


def validate(sig):
    for m in sig.periods:
        if m < 2:
            raise BadPeriod(m, "period")
    for cyc in sig.cycles:
        for n in cyc:
            if n < 2:
                raise BadPeriod(n, "cycle period")
    if not sig.orientable and sig.genus < 1:
        raise NonOrientableGenusZero()
    mu = hyperbolic_measure(sig)
    if mu <= 0:
        raise NotHyperbolic(mu)


def format_signature(sig):
    periods = ",".join(map(str, sig.periods))
    cycles = ",".join("(" + ",".join(map(str, c)) + ")" for c in sig.cycles)
    return f"({sig.genus},{sig.cusps},{sig.sign},[{periods}],{{{cycles}}})"


def format_fuchsian(sig):
    if not sig.is_fuchsian:
        raise ValueError("only Fuchsian signatures have the [g,s;...] form")
    return f"[{sig.genus},{sig.cusps};{','.join(map(str, sig.periods))}]"


class _Parser:
    def __init__(self, text):
        self.text = text
        # positions refer to the original text, so keep (char, index) pairs
        self.chars = [(ch, i) for i, ch in enumerate(text) if not ch.isspace()]
        self.i = 0

    def error(self, message):
        pos = self.chars[self.i][1] if self.i < len(self.chars) else len(self.text)
        raise SignatureSyntaxError(message, self.text, pos)

    def peek(self):
        return self.chars[self.i][0] if self.i < len(self.chars) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            self.error(f"expected {ch!r}, found {found}")
        self.i += 1

    def integer(self):
        start = self.i
        while self.peek().isdigit():
            self.i += 1
        if start == self.i:
            self.error("expected a non-negative integer")
        return int("".join(ch for ch, _ in self.chars[start:self.i]))

    def bounded(self, what):
        pos = self.chars[self.i][1] if self.i < len(self.chars) else len(self.text)
        value = self.integer()
        if value < 2:
            raise BadPeriod(value, f"{what} at position {pos}")
        return value

    def int_list(self, close, what):
        items = []
        if self.peek() == close:
            return items
        items.append(self.bounded(what))
        while self.peek() == ",":
            self.i += 1
            items.append(self.bounded(what))
        return items

    def parse(self):
        if self.peek() == "[":
            sig = self.fuchsian()
        elif self.peek() == "(":
            sig = self.nec()
        else:
            self.error("a signature starts with '(' or '['")
        if self.i != len(self.chars):
            self.error("trailing characters")
        return sig

    def fuchsian(self):
        self.expect("[")
        g = self.integer()
        self.expect(",")
        s = self.integer()
        self.expect(";")
        periods = self.int_list("]", "period")
        self.expect("]")
        return Signature("+", g, s, tuple(periods), ())

    def nec(self):
        self.expect("(")
        g = self.integer()
        self.expect(",")
        s = self.integer()
        self.expect(",")
        sign = self.peek()
        if sign not in ("+", "-"):
            self.error("sign must be '+' or '-'")
        self.i += 1
        self.expect(",")
        self.expect("[")
        periods = self.int_list("]", "period")
        self.expect("]")
        self.expect(",")
        self.expect("{")
        cycles = []
        if self.peek() != "}":
            cycles.append(self.cycle())
            while self.peek() == ",":
                self.i += 1
                cycles.append(self.cycle())
        self.expect("}")
        self.expect(")")
        return Signature(sign, g, s, tuple(periods), tuple(cycles))

    def cycle(self):
        self.expect("(")
        items = self.int_list(")", "cycle period")
        self.expect(")")
        return tuple(items)


def parse_signature(text):
    """Parse either signature form; raises SignatureSyntaxError or BadPeriod."""
    return _Parser(text).parse()

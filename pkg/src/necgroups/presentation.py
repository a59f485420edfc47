"""Standard presentations of NEC groups and their abelianizations.

Generators, for a signature (g, s, sign, [m_1..m_r], {C_1, ..., C_{k+d}}):

    x_j           elliptic generators (j <= r) and parabolic ones (r < j <= r+s)
    e_i, c_{i,l}  one connecting generator and s_i + 1 reflections per cycle
    a_t, b_t      hyperbolic generators (sign +), or glide reflections a_t (-)

Relators:

    x_j^{m_j}                      j <= r
    c_{i,l}^2                      0 <= l <= s_i
    (c_{i,l-1} c_{i,l})^{n_{i,l}}  1 <= l <= s_i
    c_{i,s_i}^-1 e_i^-1 c_{i,0} e_i
    prod x_j  prod e_i  prod [a_t, b_t]     (or prod a_t^2 when sign is -)
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .abelian import canonical_form
from .linalg import IntMatrix, snf
from .signature import validate


@dataclass(frozen=True)
class Presentation:
    generators: tuple
    relators: tuple  # each a tuple of (generator, exponent) pairs

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators",
                           tuple(tuple((g, int(e)) for g, e in w)
                                 for w in self.relators))
        known = set(self.generators)
        for w in self.relators:
            for g, _ in w:
                if g not in known:
                    raise ValueError(f"relator uses unknown generator {g!r}")

    def __str__(self):
        rels = ", ".join(_format_word(w) for w in self.relators)
        return f"< {', '.join(self.generators)} | {rels} >"

    def to_json(self):
        return {"generators": list(self.generators),
                "relators": [[[g, e] for g, e in w] for w in self.relators]}


def _format_word(word):
    if not word:
        return "1"
    return " ".join(g if e == 1 else f"{g}^{e}" for g, e in word)


def _power(word, n):
    return tuple(word) * n


def _inverse(word):
    return tuple((g, -e) for g, e in reversed(word))


def build_presentation(sig):
    validate(sig)
    gens, rels = [], []
    nx = len(sig.periods) + sig.cusps
    xs = [f"x{j}" for j in range(1, nx + 1)]
    gens += xs
    for x, m in zip(xs, sig.periods):
        rels.append(((x, m),))

    es = []
    for i, cyc in enumerate(sig.cycles, start=1):
        e = f"e{i}"
        cs = [f"c{i},{l}" for l in range(len(cyc) + 1)]
        gens.append(e)
        gens += cs
        es.append(e)
        for c in cs:
            rels.append(((c, 2),))
        for l, n in enumerate(cyc, start=1):
            rels.append(_power(((cs[l - 1], 1), (cs[l], 1)), n))
        # c_{i,s_i} = e_i^-1 c_{i,0} e_i
        rels.append(((cs[-1], -1), (e, -1), (cs[0], 1), (e, 1)))

    long_word = [(x, 1) for x in xs] + [(e, 1) for e in es]
    for t in range(1, sig.genus + 1):
        a = f"a{t}"
        gens.append(a)
        if sig.orientable:
            b = f"b{t}"
            gens.append(b)
            long_word += [(a, 1), (b, 1), (a, -1), (b, -1)]
        else:
            long_word.append((a, 2))
    rels.append(tuple(long_word))
    return Presentation(tuple(gens), tuple(rels))


def dihedral_presentation(n):
    """<r, s | r^2, s^2, (rs)^n>, the dihedral group of order 2n."""
    return Presentation(("r", "s"), (
        (("r", 2),), (("s", 2),), _power((("r", 1), ("s", 1)), n)))


def relation_matrix(p):
    """Exponent-sum matrix: one row per relator, one column per generator."""
    col = {g: j for j, g in enumerate(p.generators)}
    rows = []
    for w in p.relators:
        sums = defaultdict(int)
        for g, e in w:
            sums[g] += e
        row = [0] * len(p.generators)
        for g, e in sums.items():
            row[col[g]] = e
        rows.append(row)
    return IntMatrix.from_rows(rows, len(p.generators))


def abelianize(p):
    """Abelianization of an arbitrary finite presentation."""
    m = relation_matrix(p)
    result = snf(m)
    return canonical_form(m.cols - result.rank, result.nonunit_factors)


def abelianization(sig):
    return abelianize(build_presentation(sig))

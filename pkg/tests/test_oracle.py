import json
from fractions import Fraction

from hypothesis import given

from conftest import signatures
from necgroups.abelian import TRIVIAL, Z, canonical_form
from necgroups.cohomology import homology
from necgroups.oracle import (bottom_row_e2, build_cell_complex, e2_mod2_tally,
                              equivariant_euler, f2_row_rank, mod2_homology_rank,
                              printed_bottom_row, quotient_bottom_row, surface_symbol,
                              uct_mod2_rank)
from necgroups.signature import Signature, derived_counts, hyperbolic_measure, parse_signature
from necgroups.stabilizers import Cyclic, Dihedral, Reflection, Trivial

TRIANGLE = parse_signature("(0,0,+,[2,3,7],{})")
QUAD = parse_signature("(0,0,+,[],{(2,2,2,3)})")
GENUS2 = parse_signature("(2,0,+,[],{})")


def test_triangle_complex():
    c = build_cell_complex(TRIANGLE)
    stabs = sorted(str(v.stabilizer) for v in c.vertices)
    assert len(c.vertices) == 4
    assert sum(isinstance(v.stabilizer, Cyclic) for v in c.vertices) == 3
    # three paired edges: the symbol has six sides glued in pairs
    assert len(c.edges) == 3 and len(surface_symbol(TRIANGLE)) == 6
    assert all(isinstance(e.stabilizer, Trivial) for e in c.edges)
    assert stabs


def test_quadrilateral_complex():
    c = build_cell_complex(QUAD)
    kinds = sorted(type(v.stabilizer).__name__ for v in c.vertices)
    assert kinds == ["Dihedral"] * 4 + ["Reflection", "Trivial"]
    assert sorted(v.stabilizer.n for v in c.vertices
                  if isinstance(v.stabilizer, Dihedral)) == [2, 2, 2, 3]
    assert len(c.edges) == 6
    assert sum(isinstance(e.stabilizer, Reflection) for e in c.edges) == 5


def test_surface_complex():
    c = build_cell_complex(GENUS2)
    assert (len(c.vertices), len(c.edges)) == (1, 4)
    assert equivariant_euler(c) == -2


def test_euler_examples():
    assert equivariant_euler(build_cell_complex(TRIANGLE)) == Fraction(-1, 42)
    assert equivariant_euler(build_cell_complex(QUAD)) == Fraction(-1, 12)


def test_bottom_row_examples():
    r = bottom_row_e2(build_cell_complex(TRIANGLE))
    assert (r.e2_00, r.e2_10, r.e2_20) == (Z, TRIVIAL, Z)
    r = bottom_row_e2(build_cell_complex(QUAD))
    assert (r.e2_00, r.e2_10, r.e2_20) == (Z, TRIVIAL, TRIVIAL)
    r = bottom_row_e2(build_cell_complex(parse_signature("(2,0,-,[],{()})")))
    assert (r.e2_10, r.e2_20) == (canonical_form(2), TRIVIAL)


def test_printed_bottom_row_cases():
    # the printed non-orientable form carries a Z_2 that the bounded surface lacks
    assert printed_bottom_row(parse_signature("(2,0,-,[],{()})")).e2_10 == canonical_form(2, [2])
    assert printed_bottom_row(parse_signature("(3,0,-,[],{})")).e2_10 == canonical_form(2, [2])
    assert printed_bottom_row(parse_signature("[0,1;2,3]")).e2_10 is None


def test_f2_rank_examples():
    assert f2_row_rank(QUAD, 2) == 5
    assert f2_row_rank(parse_signature("(1,0,-,[3],{()})"), 3) == 0
    # the all-odd cycle (3,5): C_E + C_T + k - C_O = 0 + 2 + 1 - 1
    assert f2_row_rank(Signature("+", 1, 0, (), ((3, 5),)), 1) == 2


def test_mod2_rank_examples():
    assert mod2_homology_rank(QUAD, 2) == 6
    assert mod2_homology_rank(GENUS2, 1) == 4
    assert e2_mod2_tally(build_cell_complex(QUAD), 2) == (6, 0)


def test_complex_dump():
    data = build_cell_complex(QUAD).to_json()
    json.dumps(data)
    assert len(data["vertices"]) == 6


@given(signatures())
def test_euler_is_minus_measure(sig):
    assert equivariant_euler(build_cell_complex(sig)) == -hyperbolic_measure(sig)


@given(signatures())
def test_bottom_row_is_quotient_surface(sig):
    got, want = bottom_row_e2(build_cell_complex(sig)), quotient_bottom_row(sig)
    assert (got.e2_00, got.e2_10, got.e2_20) == (want.e2_00, want.e2_10, want.e2_20)


@given(signatures())
def test_f2_rank_formula(sig):
    c = derived_counts(sig)
    if c.num_cycles:
        want = c.even_corners + c.odd_corners + c.num_cycles - c.odd_only_cycles
        assert all(f2_row_rank(sig, q) == want for q in (1, 2, 3, 6))


@given(signatures())
def test_mod2_rank_vs_uct(sig):
    for q in range(1, 9):
        assert mod2_homology_rank(sig, q) == uct_mod2_rank(homology(sig, q), homology(sig, q - 1))


@given(signatures())
def test_e2_tally(sig):
    # dim E^2_{0,q} over Z_2 = q C_E + C_O + d + #even periods, for q >= 1
    c = derived_counts(sig)
    even_m = sum(1 for m in sig.periods if m % 2 == 0)
    for q in range(1, 7):
        e20, _ = e2_mod2_tally(build_cell_complex(sig), q)
        cusps = c.num_cusps if q == 1 else 0
        assert e20 == q * c.even_corners + c.odd_only_cycles + c.num_empty_cycles + even_m + cusps

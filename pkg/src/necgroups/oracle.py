"""Independent checks built from the fundamental polygon of an NEC group.

The polygon is read off the surface symbol

    xi_1 xi_1' ... xi_{r+s} xi_{r+s}'
    eps_1 gam_{1,0} ... gam_{1,s_1} eps_1'  ...  (one block per period cycle)
    alpha_1 beta_1 alpha_1' beta_1' ...      (sign +)
    alpha_1 alpha_1* ...                      (sign -)

Edges sharing a letter are glued (x with x' reversing direction, x with x*
preserving it); gam edges are mirrors and stay unglued.  Gluing the corners
with a union-find yields the orbit cells, the stabilizers come from the
corner labels, and from there everything is linear algebra:

* the weighted cell count gives the rational Euler characteristic;
* the bottom row of the equivariant spectral sequence is the cellular chain
  complex of the quotient, whose homology is computed by SNF;
* the rows q >= 1 over Z_2 only involve reflection edges, whose images in
  the vertex stabilizers' mod-2 homology are fixed by the corner tags.

Nothing here uses the closed-form homology tables.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .abelian import canonical_form
from .linalg import IntMatrix, rank_f2_bitrows, rank_mod2, snf
from .signature import validate
from .stabilizers import Cyclic, Dihedral, InfiniteCyclic, Reflection, Trivial

ORIENTABLE, NONORIENTABLE, MIRROR = "orientable", "non-orientable", "mirror"


@dataclass(frozen=True)
class Vertex:
    name: str
    stabilizer: object


@dataclass(frozen=True)
class Edge:
    name: str
    stabilizer: object
    tail: int
    head: int
    tail_tag: int | None = None  # which reflection of the endpoint group
    head_tag: int | None = None

    @property
    def is_reflection(self):
        return isinstance(self.stabilizer, Reflection)


@dataclass(frozen=True)
class CellComplex:
    vertices: tuple
    edges: tuple
    face: tuple                      # (edge index, sign) along the boundary
    rotation_vertices: tuple = ()    # cone and cusp points the face winds around
    symbol: tuple = field(default=())

    def to_json(self):
        return {
            "surface_symbol": list(self.symbol),
            "vertices": [{"name": v.name, "stabilizer": str(v.stabilizer)}
                         for v in self.vertices],
            "edges": [{"name": e.name, "stabilizer": str(e.stabilizer),
                       "tail": self.vertices[e.tail].name,
                       "head": self.vertices[e.head].name,
                       "tail_tag": e.tail_tag, "head_tag": e.head_tag}
                      for e in self.edges],
            "face": [[self.edges[i].name, s] for i, s in self.face],
        }


def surface_symbol(sig):
    """Polygon sides as (label, kind, key) triples; paired sides share key."""
    sides = []
    for j in range(1, len(sig.periods) + sig.cusps + 1):
        sides += [(f"xi{j}", ORIENTABLE, ("xi", j)), (f"xi{j}'", ORIENTABLE, ("xi", j))]
    for i, cyc in enumerate(sig.cycles, start=1):
        sides.append((f"eps{i}", ORIENTABLE, ("eps", i)))
        sides += [(f"gam{i},{l}", MIRROR, ("gam", i, l)) for l in range(len(cyc) + 1)]
        sides.append((f"eps{i}'", ORIENTABLE, ("eps", i)))
    for t in range(1, sig.genus + 1):
        if sig.orientable:
            sides += [(f"alpha{t}", ORIENTABLE, ("alpha", t)),
                      (f"beta{t}", ORIENTABLE, ("beta", t)),
                      (f"alpha{t}'", ORIENTABLE, ("alpha", t)),
                      (f"beta{t}'", ORIENTABLE, ("beta", t))]
        else:
            sides += [(f"alpha{t}", NONORIENTABLE, ("alpha", t)),
                      (f"alpha{t}*", NONORIENTABLE, ("alpha", t))]
    return sides


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        self.parent[self.find(a)] = self.find(b)


def _corner_label(sig, incoming, outgoing):
    """Name and stabilizer of the point at a corner, from its two sides."""
    k_in, k_out = incoming[2], outgoing[2]
    if k_in[0] == "xi" and k_out == k_in and not incoming[0].endswith("'"):
        j = k_in[1]
        if j <= len(sig.periods):
            return f"v{j}", Cyclic(sig.periods[j - 1])
        return f"v{j}", InfiniteCyclic()
    if k_in[0] == "gam" and k_out[0] == "gam":
        i, l = k_out[1], k_out[2]
        return f"w{i},{l}", Dihedral(sig.cycles[i - 1][l - 1])
    if k_out[0] == "gam" or k_in[0] == "gam":
        i = (k_out if k_out[0] == "gam" else k_in)[1]
        return f"w{i},0", Reflection()
    return "v0", Trivial()


def build_cell_complex(sig):
    validate(sig)
    sides = surface_symbol(sig)
    n = len(sides)
    uf = _UnionFind(n)  # polygon corner i sits between side i-1 and side i
    partners = {}
    for idx, (_, kind, key) in enumerate(sides):
        if kind != MIRROR:
            partners.setdefault(key, []).append(idx)
    for key, (a, b) in partners.items():
        if sides[a][1] == ORIENTABLE:
            uf.union(a, (b + 1) % n)
            uf.union((a + 1) % n, b)
        else:
            uf.union(a, b)
            uf.union((a + 1) % n, (b + 1) % n)

    labels = {}
    for c in range(n):
        label = _corner_label(sig, sides[c - 1], sides[c])
        root = uf.find(c)
        if labels.setdefault(root, label) != label:
            raise AssertionError(f"glued corners disagree: {labels[root]} vs {label}")

    order = sorted(labels, key=lambda root: (labels[root][0] != "v0", min(
        c for c in range(n) if uf.find(c) == root)))
    index = {root: i for i, root in enumerate(order)}
    vertices = tuple(Vertex(*labels[root]) for root in order)

    def vertex_at(corner):
        return index[uf.find(corner % n)]

    def tag(corner, side_is_incoming):
        stab = vertices[vertex_at(corner)].stabilizer
        if isinstance(stab, Dihedral):
            return 0 if side_is_incoming else 1
        if isinstance(stab, Reflection):
            return 0
        return None

    edges, edge_of_key, face = [], {}, []
    for idx, (label, kind, key) in enumerate(sides):
        if kind == MIRROR:
            edges.append(Edge(label, Reflection(), vertex_at(idx), vertex_at(idx + 1),
                              tag(idx, False), tag(idx + 1, True)))
            face.append((len(edges) - 1, 1))
        elif key not in edge_of_key:
            edges.append(Edge(label, Trivial(), vertex_at(idx), vertex_at(idx + 1)))
            edge_of_key[key] = len(edges) - 1
            face.append((len(edges) - 1, 1))
        else:
            face.append((edge_of_key[key], -1 if kind == ORIENTABLE else 1))

    rotation = tuple(i for i, v in enumerate(vertices)
                     if isinstance(v.stabilizer, (Cyclic, InfiniteCyclic)))
    return CellComplex(vertices, tuple(edges), tuple(face), rotation,
                       tuple(s[0] for s in sides))


def equivariant_euler(c):
    """Sum over orbit cells of (-1)^dim / |stabilizer| (0 for infinite ones)."""
    total = sum((v.stabilizer.euler() for v in c.vertices), Fraction(0))
    total -= sum((e.stabilizer.euler() for e in c.edges), Fraction(0))
    return total + 1


def boundary_matrices(c):
    """Integral d1 (vertices x edges) and d2 (edges x 1) of the bottom row."""
    d1 = [[0] * len(c.edges) for _ in c.vertices]
    for j, e in enumerate(c.edges):
        d1[e.head][j] += 1
        d1[e.tail][j] -= 1
    d2 = [[0] for _ in c.edges]
    for i, sign in c.face:
        d2[i][0] += sign
    return (IntMatrix.from_rows(d1, len(c.edges)), IntMatrix.from_rows(d2, 1))


@dataclass(frozen=True)
class BottomRow:
    e2_00: object
    e2_10: object
    e2_20: object


def _homology(dim, d_out, d_in):
    """H of C_dim given the ranks/SNF of the outgoing and incoming maps."""
    rank_out = snf(d_out).rank if d_out is not None else 0
    res_in = snf(d_in) if d_in is not None else None
    rank_in = res_in.rank if res_in else 0
    torsion = res_in.nonunit_factors if res_in else ()
    return canonical_form(dim - rank_out - rank_in, torsion)


def bottom_row_e2(c):
    d1, d2 = boundary_matrices(c)
    return BottomRow(_homology(len(c.vertices), None, d1),
                     _homology(len(c.edges), d1, d2),
                     _homology(1, d2, None))


def bottom_row_mod2(c):
    """dim over Z_2 of E^2_{0,0}, E^2_{1,0}, E^2_{2,0} with Z_2 coefficients."""
    d1, d2 = boundary_matrices(c)
    r1, r2 = rank_mod2(d1), rank_mod2(d2)
    return (len(c.vertices) - r1, len(c.edges) - r1 - r2, 1 - r2)


def _vertex_offsets(c, q):
    offsets, total = [], 0
    for v in c.vertices:
        offsets.append(total)
        total += v.stabilizer.mod2_rank(q)
    return offsets, total


def _reflection_columns(c, q):
    """d^1_{1,q} over Z_2 as bitmask columns, one per reflection edge."""
    offsets, _ = _vertex_offsets(c, q)
    cols = []
    for e in c.edges:
        if not e.is_reflection:
            continue
        bits = 0
        for vi, tag in ((e.tail, e.tail_tag), (e.head, e.head_tag)):
            coord = c.vertices[vi].stabilizer.reflection_image(tag)
            bits ^= 1 << (offsets[vi] + coord)
        cols.append(bits)
    return cols


def f2_differential_rank(c, q):
    if q < 1:
        raise ValueError("rows q >= 1 only")
    return rank_f2_bitrows(_reflection_columns(c, q))


def f2_row_rank(sig, q):
    return f2_differential_rank(build_cell_complex(sig), q)


def e2_mod2_tally(c, q):
    """(dim E^2_{0,q}, dim E^2_{1,q}) over Z_2, for q >= 1."""
    rank = f2_differential_rank(c, q)
    _, e1_0q = _vertex_offsets(c, q)
    e1_1q = sum(1 for e in c.edges if e.is_reflection)
    return e1_0q - rank, e1_1q - rank


def _d2_rank_mod2(c):
    """Rank of d^2: E^2_{2,0} -> E^2_{0,1} with Z_2 coefficients.

    Only relevant when the face survives mod 2, which happens exactly when
    there are no mirror edges.  The boundary loop of the face winds once
    around every cone and cusp point, so its image is the sum of the
    rotation generators of those stabilizers, taken modulo the image of
    d^1_{1,1}.
    """
    if bottom_row_mod2(c)[2] == 0:
        return 0
    offsets, _ = _vertex_offsets(c, 1)
    image = 0
    for vi in c.rotation_vertices:
        if c.vertices[vi].stabilizer.mod2_rank(1):
            image ^= 1 << offsets[vi]
    cols = _reflection_columns(c, 1)
    return rank_f2_bitrows(cols + [image]) - rank_f2_bitrows(cols)


def mod2_homology_rank_of_complex(c, q):
    if q < 1:
        raise ValueError("q >= 1 only")
    e2_0q, _ = e2_mod2_tally(c, q)
    total = e2_0q
    if q == 1:
        total += bottom_row_mod2(c)[1] - _d2_rank_mod2(c)
    else:
        total += e2_mod2_tally(c, q - 1)[1]
        if q == 2:
            total += bottom_row_mod2(c)[2] - _d2_rank_mod2(c)
    return total


def mod2_homology_rank(sig, q):
    """dim H_q(Gamma; Z_2) from the Z_2 spectral sequence of the polygon."""
    return mod2_homology_rank_of_complex(build_cell_complex(sig), q)


def quotient_bottom_row(sig):
    """Bottom row E^2 read off the topology of the quotient surface.

    E^2_{*,0} is the homology of the underlying surface of the orbifold:
    genus g, orientable or not, with one boundary circle per period cycle
    (cusps are filled in by their limit points).
    """
    holes = len(sig.cycles)
    g = sig.genus
    if holes:
        free = (2 * g if sig.orientable else g) + holes - 1
        return BottomRow(canonical_form(1), canonical_form(free), canonical_form(0))
    if sig.orientable:
        return BottomRow(canonical_form(1), canonical_form(2 * g), canonical_form(1))
    return BottomRow(canonical_form(1), canonical_form(g - 1, [2]), canonical_form(0))


def printed_bottom_row(sig):
    """The per-case closed forms stated alongside the published proofs.

    A field is None where the printed rank comes out negative (cusp-only
    genus-zero groups), i.e. where the printed form names no group.
    """
    c = len(sig.nonempty_cycles)
    d = len(sig.cycles) - c
    g = sig.genus

    def free(rank, torsion=()):
        return canonical_form(rank, list(torsion)) if rank >= 0 else None

    if sig.case == "a":
        return BottomRow(canonical_form(1), free(2 * g), canonical_form(1))
    if sig.case == "b":
        return BottomRow(canonical_form(1), free(2 * g + c + d - 1), canonical_form(0))
    return BottomRow(canonical_form(1), free(g + c + d - 1, [2]), canonical_form(0))


def uct_mod2_rank(h_q, h_qminus1):
    """dim H_q(-; Z_2) from integral homology via universal coefficients."""
    return h_q.mod2_tensor_rank() + h_qminus1.mod2_tor_rank()


__all__ = [
    "BottomRow", "CellComplex", "Edge", "Vertex", "bottom_row_e2",
    "bottom_row_mod2", "boundary_matrices", "build_cell_complex",
    "e2_mod2_tally", "equivariant_euler", "f2_row_rank",
    "f2_differential_rank", "mod2_homology_rank", "printed_bottom_row",
    "quotient_bottom_row", "surface_symbol", "uct_mod2_rank",
]

"""Region counting for arrangements of codimension-one subtori in T^d.

A subtorus is {x : a . x = c (mod 1)} for a primitive integer normal a and
a rational offset c.  The exact counter works in the closed fundamental
cube [0,1]^d:

1. lift each subtorus to the finitely many affine hyperplanes a . x = c + t
   that meet the cube;
2. enumerate the open cells the lifted hyperplanes cut the open cube into
   (sign-vector feasibility over exact rationals, one strict sign per
   lifted hyperplane, homogenized so the cube constraints become rows of
   the same "r . z >= 1" system);
3. glue cells across opposite facets: each full-dimensional cell of a
   facet's induced arrangement has one incident cube cell on each side of
   the identification, found by stepping the facet cell's witness point an
   infinitesimal along the facet normal (the step is symbolic, so this is
   exact); union-find over cube cells then counts torus regions.

A facet contained in a lifted hyperplane lies on the arrangement itself
and glues nothing.  The closed-cube lift guarantees the induced facet
arrangements on opposite facets agree, so witnesses translate across.

`count_regions_toric_grid` is an independent heuristic cross-check: it
samples a shifted uniform grid, joins axis neighbours not separated by a
subtorus, and reports the component count once two successive refinements
agree.  The shift is chosen so no sample ever lies on a subtorus.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, lcm
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .exactlin import Scalar, Vec, dot, format_rational, parse_rational, primitive_scale
from .feasibility import feasible_point

LIFT_GUARD = 24
DIMENSION_GUARD = 4
GRID_NODE_GUARD = 2 * 10 ** 7


class TooLargeError(ValueError):
    """Exact toric counting is guarded to d <= 4 and <= 24 lifted planes."""


class UnstableError(RuntimeError):
    """Grid counts at refinements R and 2R disagree; refine further."""


@dataclass(frozen=True)
class Subtorus:
    """Canonical form: primitive normal with positive leading entry, offset in [0,1).

    (a, c) and (-a, -c mod 1) describe the same subtorus and normalize to
    the same representative.
    """

    normal: Vec
    offset: Fraction

    @staticmethod
    def make(normal: Sequence[int], offset: Scalar) -> "Subtorus":
        a = primitive_scale(normal)
        c = Fraction(offset)
        lead = next(x for x in a if x)
        if lead < 0:
            a = tuple(-x for x in a)
            c = -c
        return Subtorus(a, c % 1)

    def to_json(self) -> dict:
        return {"a": [str(x) for x in self.normal],
                "c": format_rational(self.offset)}


@dataclass(frozen=True)
class ToricArrangement:
    d: int
    subtori: tuple[Subtorus, ...]

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("torus dimension must be >= 1")
        if not self.subtori:
            raise ValueError("need at least one subtorus")
        for s in self.subtori:
            if len(s.normal) != self.d:
                raise ValueError(f"normal {s.normal} has wrong length for T^{self.d}")
        if len(set(self.subtori)) != len(self.subtori):
            raise ValueError("duplicate subtorus after canonicalization")

    @property
    def n(self) -> int:
        return len(self.subtori)

    @staticmethod
    def make(d: int, subtori: Iterable[tuple[Sequence[int], Scalar]]) -> "ToricArrangement":
        return ToricArrangement(d, tuple(Subtorus.make(a, c) for a, c in subtori))

    def to_json(self) -> dict:
        return {"type": "toric", "d": self.d,
                "subtori": [s.to_json() for s in self.subtori]}

    @staticmethod
    def from_json(data: dict) -> "ToricArrangement":
        if data.get("type") != "toric":
            raise ValueError("not a toric arrangement file")
        subs = [(tuple(int(x) for x in s["a"]), parse_rational(s["c"]))
                for s in data["subtori"]]
        return ToricArrangement.make(int(data["d"]), subs)


def lift_to_cube(arr: ToricArrangement) -> list[tuple[Vec, Fraction]]:
    """All integer translates a . x = c + t meeting the closed unit cube."""
    lifted = []
    for s in arr.subtori:
        lo = sum(min(a, 0) for a in s.normal)
        hi = sum(max(a, 0) for a in s.normal)
        t = ceil(lo - s.offset)
        while s.offset + t <= hi:
            lifted.append((s.normal, s.offset + t))
            t += 1
    return lifted


# ---------------------------------------------------------------------------
# exact counter


def _enumerate_cells(dim: int, hyperplanes: Sequence[tuple[Vec, Fraction]]):
    """Open cells of (0,1)^dim cut by affine hyperplanes a . x = b.

    Yields (signs, witness): one strict sign per hyperplane (including those
    missing the cube, whose sign is constant) and an interior rational
    point.  Feasibility is homogenized over z = (x, w):  sign (a.x - b) > 0
    becomes (sign*a, -sign*b) . z >= 1, and 0 < x_i < w gives the cube rows.
    """
    cube_rows = [tuple([0] * dim + [1])]  # w >= 1 keeps the homogenization proper
    for i in range(dim):
        e = [0] * (dim + 1)
        e[i] = 1
        cube_rows.append(tuple(e))
        f = [0] * (dim + 1)
        f[i] = -1
        f[dim] = 1
        cube_rows.append(tuple(f))
    root_witness = tuple([Fraction(1)] * dim + [Fraction(2)])

    cells = []
    stack = [(0, (), tuple(cube_rows), root_witness)]
    while stack:
        depth, signs, rows, z = stack.pop()
        if depth == len(hyperplanes):
            w = z[dim]
            point = tuple(zi / w for zi in z[:dim])
            cells.append((signs, point))
            continue
        a, b = hyperplanes[depth]
        row_plus = tuple(a) + (-b,)
        val = dot(row_plus, z)
        for sign in (1, -1):
            row = row_plus if sign == 1 else tuple(-x for x in row_plus)
            v = val if sign == 1 else -val
            if v >= 1:
                child = z
            elif v > 0:
                child = tuple(zi / v for zi in z)
            else:
                child = feasible_point(rows + (row,), dim + 1)
                if child is None:
                    continue
            stack.append((depth + 1, signs + (sign,), rows + (row,), child))
    return cells


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.count = size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra
            self.count -= 1


@dataclass(frozen=True)
class TorusRegionDecomposition:
    cube_cells: int
    glued_pairs: int
    f: int


def _stepped_signs(lifted, point, axis, direction):
    """Signs at point + eps * direction * e_axis for infinitesimal eps > 0."""
    signs = []
    for a, b in lifted:
        v = dot(a, point) - b
        if v != 0:
            signs.append(1 if v > 0 else -1)
        else:
            s = a[axis] * direction
            assert s != 0, "witness lies inside a hyperplane parallel to the step"
            signs.append(1 if s > 0 else -1)
    return tuple(signs)


def torus_decomposition(arr: ToricArrangement) -> TorusRegionDecomposition:
    if arr.d > DIMENSION_GUARD:
        raise TooLargeError(f"d = {arr.d} exceeds the dimension guard")
    lifted = lift_to_cube(arr)
    if len(lifted) > LIFT_GUARD:
        raise TooLargeError(f"{len(lifted)} lifted hyperplanes exceed the guard")
    d = arr.d

    cells = _enumerate_cells(d, lifted)
    index = {signs: i for i, (signs, _) in enumerate(cells)}
    uf = _UnionFind(len(cells))
    glued = 0

    unit = [tuple(1 if j == i else 0 for j in range(d)) for i in range(d)]
    lifted_set = set(lifted)
    for axis in range(d):
        if (unit[axis], Fraction(0)) in lifted_set:
            continue  # the facet pair lies on the arrangement; nothing glues
        # induced arrangement on the facet x_axis = 0, coordinates x_j (j != axis)
        traces = []
        for a, b in lifted:
            a_rest = tuple(x for j, x in enumerate(a) if j != axis)
            traces.append((a_rest, b))
        facet_cells = _enumerate_cells(d - 1, traces)
        for _, q in facet_cells:
            p0 = list(q)
            p0.insert(axis, Fraction(0))
            p1 = list(q)
            p1.insert(axis, Fraction(1))
            low = _stepped_signs(lifted, tuple(p0), axis, +1)
            high = _stepped_signs(lifted, tuple(p1), axis, -1)
            uf.union(index[low], index[high])
            glued += 1
    return TorusRegionDecomposition(len(cells), glued, uf.count)


def count_regions_toric(arr: ToricArrangement) -> int:
    """Exact number of connected components of T^d minus the subtori."""
    return torus_decomposition(arr).f


# ---------------------------------------------------------------------------
# grid cross-check


def _grid_component_count(arr: ToricArrangement, pitch_count: int) -> int:
    d = arr.d
    big_b = 2 + sum(sum(abs(a) for a in s.normal) for s in arr.subtori)
    scale = 2 * big_b ** d  # shift s_i = 1 / (2 B^i) in pitch units
    if pitch_count ** d > GRID_NODE_GUARD:
        raise TooLargeError(f"grid of {pitch_count ** d} nodes exceeds the guard")

    # int64 safety: the largest scaled value is bounded by scale * (|a| + 1) * N
    worst = max(
        scale * pitch_count * (sum(abs(a) for a in s.normal) + 1)
        for s in arr.subtori)
    if worst >= 2 ** 62:
        raise TooLargeError("grid arithmetic would overflow int64")

    shape = (pitch_count,) * d
    node_count = pitch_count ** d
    base = np.arange(node_count, dtype=np.int64).reshape(shape)
    labels_rows = []
    labels_cols = []
    axes_coords = [np.arange(pitch_count, dtype=np.int64) for _ in range(d)]

    blocked = [np.zeros(shape, dtype=bool) for _ in range(d)]
    for s in arr.subtori:
        c_scaled = s.offset * pitch_count
        assert c_scaled.denominator == 1, "grid pitch must clear offset denominators"
        phi = sum(a * big_b ** (d - 1 - i) for i, a in enumerate(s.normal))
        const = -int(c_scaled) * scale + phi
        values = np.full(shape, const, dtype=np.int64)
        for i, a in enumerate(s.normal):
            if a:
                view = (a * scale) * axes_coords[i]
                reshape = [1] * d
                reshape[i] = pitch_count
                values = values + view.reshape(reshape)
        floors = values // (scale * pitch_count)
        for i in range(d):
            rolled = np.roll(floors, -1, axis=i)
            if s.normal[i]:
                wrap = [slice(None)] * d
                wrap[i] = pitch_count - 1
                rolled[tuple(wrap)] += s.normal[i]
            blocked[i] |= floors != rolled
    for i in range(d):
        ok = ~blocked[i]
        labels_rows.append(base[ok].astype(np.int32))
        labels_cols.append(np.roll(base, -1, axis=i)[ok].astype(np.int32))

    rows = np.concatenate(labels_rows)
    cols = np.concatenate(labels_cols)
    graph = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)),
                       shape=(node_count, node_count))
    n_components, _ = connected_components(graph, directed=False)
    return int(n_components)


def count_regions_toric_grid(arr: ToricArrangement, refinement: int = 1) -> int:
    """Heuristic component count on a shifted grid, stable across a doubling.

    The grid pitch is 1/(R*Q) with Q the lcm of all offset denominators and
    nonzero normal entries; samples are offset by 1/(2 B^i) per coordinate
    with B larger than any achievable |sum a_i s_i| denominator pattern, so
    no sample lies on a subtorus.  Raises UnstableError when counts at R
    and 2R differ.
    """
    if refinement < 1:
        raise ValueError("refinement must be >= 1")
    q = 1
    for s in arr.subtori:
        q = lcm(q, s.offset.denominator)
        for a in s.normal:
            if a:
                q = lcm(q, abs(a))
    count_r = _grid_component_count(arr, refinement * q)
    count_2r = _grid_component_count(arr, 2 * refinement * q)
    if count_r != count_2r:
        raise UnstableError(
            f"grid counts disagree: {count_r} at R={refinement}, {count_2r} at 2R")
    return count_r


# ---------------------------------------------------------------------------
# file I/O


def load_toric(path: str) -> ToricArrangement:
    with open(path) as fh:
        return ToricArrangement.from_json(json.load(fh))


def dump_toric(arr: ToricArrangement, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(arr.to_json(), fh, indent=1)
        fh.write("\n")

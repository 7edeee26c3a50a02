"""Constructive arrangement families with known region counts.

Every generator is deterministic: free parameters come from small integer
scans whose candidates are checked exactly (no point may lie on a line it
was not asked to lie on), so a successful build realizes precisely the
incidence pattern the recipe names, and the expected count attached to the
recipe is trustworthy.  Builders raise PlacementError when a requested
pattern is not realizable.

Projective families (all exact integer covectors):

* general_position: covectors on the moment curve, multiplicity m = d.
* double_pencil: a lines through one point, b through another, optionally
  sharing the connecting line; the classic low-count plane families.
* pencil_with_extras: a pencil of q lines plus up to five extra lines whose
  crossings are steered through chosen existing points ("anchors"), walking
  the low plane spectrum.
* cone: lift of a base arrangement with every hyperplane through a common
  apex, plus extra hyperplanes missing the apex.  One extra doubles the
  base count.
* two_extra_planes / three_extra_planes: a cone over a plane base plus two
  or three extra planes with controlled trace coincidences; these realize
  the odd-slope members of the low spectrum in RP^3.

Toric families: k coordinate subtori plus parallel translates (count n-k),
and coordinate subtori plus a sloped geodesic with parallels (count
2(n-d)+k), with offset side conditions checked at build time.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .exactlin import Vec, cross3, dot, primitive_normalize
from .projective import ProjArrangement, count_regions_projective, validate
from .toric import Subtorus, ToricArrangement


class PlacementError(ValueError):
    """The requested incidence pattern cannot be realized."""


class OffsetCollisionError(ValueError):
    """Two parallel subtori were given the same fractional offset."""


class TripleIntersectionError(ValueError):
    """Slope and offset choices force three subtori through a point."""


@dataclass(frozen=True)
class Recipe:
    """A named constructive family instance with its predicted count."""

    family: str
    params: tuple
    space: str  # "projective" or "toric"
    n: int
    d: int
    expected_f: int | None

    def describe(self) -> str:
        inner = ", ".join(p.describe() if isinstance(p, Recipe) else repr(p)
                          for p in self.params)
        return f"{self.family}({inner})"


# ---------------------------------------------------------------------------
# plane machinery: pencils, anchors, deterministic genericity scans

PENCIL_APEX = (0, 0, 1)


def _distinct_crossings(line: Vec, others: Sequence[Vec]) -> set[Vec]:
    points = set()
    for v in others:
        p = cross3(line, v)
        if any(p):
            points.add(primitive_normalize(p))
    return points


class _PlaneBuilder:
    """Incrementally places lines in RP^2 and tracks every crossing point."""

    def __init__(self, lines: Iterable[Vec]):
        self.lines: list[Vec] = [primitive_normalize(v) for v in lines]
        self.points: dict[Vec, set[int]] = {}
        for i, j in itertools.combinations(range(len(self.lines)), 2):
            p = cross3(self.lines[i], self.lines[j])
            if any(p):
                self.points.setdefault(primitive_normalize(p), set()).update((i, j))
        self.order: list[Vec] = sorted(self.points)

    def multiplicity(self, point: Vec) -> int:
        return len(self.points.get(point, ()))

    def double_points(self) -> list[Vec]:
        return [p for p in self.order if len(self.points[p]) == 2]

    def add_line(self, line: Vec, expected_new_points: int) -> None:
        line = primitive_normalize(line)
        if line in self.lines:
            raise PlacementError("line coincides with an existing one")
        crossings = _distinct_crossings(line, self.lines)
        if len(crossings) != expected_new_points:
            raise PlacementError(
                f"line meets the arrangement in {len(crossings)} points, "
                f"expected {expected_new_points}")
        idx = len(self.lines)
        self.lines.append(line)
        for i, v in enumerate(self.lines[:-1]):
            p = cross3(line, v)
            if any(p):
                key = primitive_normalize(p)
                if key not in self.points:
                    self.points[key] = set()
                    self.order.append(key)
                self.points[key].update((i, idx))

    def scan_line_through(self, anchors: Sequence[Vec], forbid: Sequence[Vec],
                          expected_new_points: int) -> Vec:
        """Deterministic search for a line through the anchors that meets the
        current arrangement in exactly the expected number of points and
        avoids every point in `forbid`."""
        if len(anchors) > 2:
            raise PlacementError("a line passes through at most two chosen points")
        if len(anchors) == 2:
            candidates: Iterable[Vec] = [cross3(anchors[0], anchors[1])]
        elif len(anchors) == 1:
            candidates = (cross3(anchors[0], (1, t, t * t)) for t in itertools.count(1))
        else:
            candidates = ((t * t + 1, t, 1) for t in itertools.count(1))
        for tries, cand in enumerate(candidates):
            if tries > 2000:
                break
            if not any(cand):
                continue
            line = primitive_normalize(cand)
            if line in self.lines:
                continue
            if any(dot(line, p) == 0 for p in forbid):
                continue
            crossings = _distinct_crossings(line, self.lines)
            if len(crossings) != expected_new_points:
                continue
            if not all(dot(line, a) == 0 for a in anchors):
                continue
            return line
        raise PlacementError("no admissible line found for the requested anchors")


# ---------------------------------------------------------------------------
# projective generators


def general_position(n: int, d: int) -> ProjArrangement:
    """Covectors on the moment curve: every d+1 of them are independent."""
    if n < d + 1:
        raise ValueError("need n >= d+1")
    covs = tuple(tuple(t ** k for k in range(d + 1)) for t in range(1, n + 1))
    return ProjArrangement(d, covs)


def general_position_count(n: int, d: int) -> int:
    return sum(comb(n - 1, k) for k in range(d + 1))


def double_pencil(a: int, b: int, with_common_line: bool) -> ProjArrangement:
    """a lines through one point and b through another in RP^2.

    With the connecting line shared, n = a + b - 1 and f = a * b; without
    it, n = a + b and f = a * b + a + b - 1.
    """
    if a < 2 or b < 2:
        raise PlacementError("each pencil needs at least two lines")
    lines: list[Vec] = []
    if with_common_line:
        lines.append((1, 0, 0))
        lines += [(i, 1, 0) for i in range(1, a)]
        lines += [(j, 0, 1) for j in range(1, b)]
    else:
        lines += [(i, 1, 0) for i in range(a)]
        lines += [(j, 0, 1) for j in range(b)]
    return ProjArrangement(2, tuple(lines))


def double_pencil_count(a: int, b: int, with_common_line: bool) -> int:
    return a * b if with_common_line else a * b + a + b - 1


def near_pencil(n: int) -> ProjArrangement:
    if n < 3:
        raise ValueError("need n >= 3")
    return double_pencil(2, n - 1, True)


PENCIL_ACTIONS = ("fresh", "cross1", "cross2", "stack", "stack_cross")


def pencil_extras_savings(program: Sequence[str]) -> list[int] | None:
    """Per-extra anchor savings for a placement program, None if infeasible.

    Savings of extra i (0-based) are capped at i: a point off the pencil
    apex lies on at most one pencil line, so every unit of saving consumes a
    distinct earlier extra.
    """
    savings = []
    stack_mult = 1  # lines through the stack point beyond the pencil line
    for i, action in enumerate(program):
        if action == "fresh":
            savings.append(0)
        elif action == "cross1":
            if i < 1:
                return None
            savings.append(1)
        elif action == "cross2":
            if i < 2:
                return None
            savings.append(2)
        elif action == "stack":
            if i < 1:
                return None
            savings.append(stack_mult)
            stack_mult += 1
        elif action == "stack_cross":
            # through the stack point and one simple point on a non-stacked line
            if i < 2 or stack_mult + 1 > i:
                return None
            savings.append(stack_mult + 1)
            stack_mult += 1
        else:
            raise ValueError(f"unknown action {action!r}")
        if savings[-1] > i:
            return None
    return savings


def pencil_with_extras_count(q: int, program: Sequence[str]) -> int | None:
    savings = pencil_extras_savings(program)
    if savings is None:
        return None
    f = q
    for i, s in enumerate(program):
        f += q + i - savings[i]
    return f


def pencil_with_extras(q: int, program: Sequence[str]) -> ProjArrangement:
    """Pencil of q lines plus len(program) extra lines placed per action.

    Actions: fresh (no anchors), cross1/cross2 (through one or two existing
    double points), stack (through the running stack point, the crossing of
    the first extra with the first pencil line), stack_cross (stack point
    plus one fresh double point on a line that avoids the stack).
    """
    if q < 2:
        raise ValueError("need a pencil of at least two lines")
    savings = pencil_extras_savings(program)
    if savings is None:
        raise PlacementError(f"program {program!r} is not realizable")
    builder = _PlaneBuilder((i, 1, 0) for i in range(q))
    apex = PENCIL_APEX
    stack_point: Vec | None = None
    extras_start = q
    for i, action in enumerate(program):
        expected = q + i - savings[i]
        if action == "fresh":
            line = builder.scan_line_through([], [apex], expected)
        elif action == "cross1":
            anchor = _first_simple_point(builder, forbid_lines=set())
            line = builder.scan_line_through([anchor], [apex], expected)
        elif action == "cross2":
            first = _first_simple_point(builder, forbid_lines=set())
            second = _first_simple_point(
                builder, forbid_lines=builder.points[first], avoid={first})
            line = builder.scan_line_through([first, second], [apex], expected)
        elif action == "stack":
            if stack_point is None:
                stack_point = primitive_normalize(
                    cross3(builder.lines[extras_start], builder.lines[0]))
            line = builder.scan_line_through([stack_point], [apex], expected)
        else:  # stack_cross
            if stack_point is None:
                stack_point = primitive_normalize(
                    cross3(builder.lines[extras_start], builder.lines[0]))
            other = _first_simple_point(
                builder, forbid_lines=builder.points[stack_point],
                avoid={stack_point})
            line = builder.scan_line_through([stack_point, other], [apex], expected)
        builder.add_line(line, expected)
    arr = ProjArrangement(2, tuple(builder.lines))
    if validate(arr):
        raise PlacementError("pencil-with-extras construction degenerated")
    return arr


def _first_simple_point(builder: _PlaneBuilder, forbid_lines: set[int],
                        avoid: set[Vec] = frozenset()) -> Vec:
    for p in builder.order:
        if p in avoid:
            continue
        lines = builder.points[p]
        if len(lines) == 2 and not (lines & forbid_lines):
            return p
    raise PlacementError("no admissible double point available")


def cone(base: ProjArrangement, extras: int = 1,
         placement: str = "generic",
         through_point: tuple[int, int] | None = None) -> ProjArrangement:
    """Lift of `base` through a new apex, plus `extras` hyperplanes off it.

    The first extra is the coordinate hyperplane meeting the lift in a copy
    of the base; with exactly one extra the region count doubles.  Further
    extras need a plane base (d = 2): "generic" ones avoid every base
    crossing, "through_chosen_flat" ones pass through the crossing of the
    two base lines named by `through_point`.
    """
    if extras < 1:
        raise PlacementError("a cone needs at least one hyperplane off the apex")
    covs = [u + (0,) for u in base.covectors]
    covs.append(tuple([0] * (base.d + 1)) + (1,))
    if extras > 1:
        if base.d != 2:
            raise PlacementError("multiple extras are only catalogued over plane bases")
        builder = _PlaneBuilder(base.covectors)
        anchor = None
        if placement == "through_chosen_flat":
            if through_point is None:
                raise PlacementError("through_chosen_flat needs a base line pair")
            i, j = through_point
            anchor = primitive_normalize(cross3(base.covectors[i], base.covectors[j]))
        for _ in range(extras - 1):
            n_lines = len(builder.lines)
            if anchor is None:
                expected = n_lines
                w = builder.scan_line_through([], [PENCIL_APEX], expected)
            else:
                expected = n_lines - builder.multiplicity(anchor) + 1
                w = builder.scan_line_through([anchor], [PENCIL_APEX], expected)
            builder.add_line(w, expected)
            covs.append(w + (1,))
    return ProjArrangement(base.d + 1, tuple(covs))


def cone_count(base_count: int, extras: int, base_n: int | None = None) -> int | None:
    """Predicted count for a cone with generic extras over a plane base.

    One extra doubles the base count.  With e generic extras over a plane
    base of q lines the traces stay mutually generic only up to e = 2, so
    larger cones are left to the dedicated builders.
    """
    if extras == 1:
        return 2 * base_count
    if extras == 2 and base_n is not None:
        return 3 * base_count + base_n
    return None


def two_extra_planes(base: ProjArrangement, coincidences: int = 0,
                     line_in_union: bool = False) -> ProjArrangement:
    """Cone over a plane base plus two planes meeting in a line l.

    The count is 3 * f(base) + (number of distinct base traces on l), and
    3 * f(base) when l lies inside the lifted base.  `coincidences` merges
    that many traces: small values anchor l on crossing points of the base,
    and a value matching (pencil size - 1) for a double-pencil base routes
    l through that pencil's apex, collapsing it entirely.
    """
    if base.d != 2:
        raise PlacementError("the base must be a plane arrangement")
    builder = _PlaneBuilder(base.covectors)
    n2 = base.n
    covs = [u + (0,) for u in base.covectors]
    covs.append((0, 0, 0, 1))
    if line_in_union:
        w = base.covectors[0]
        covs.append(tuple(w) + (1,))
        return ProjArrangement(3, tuple(covs))

    apexes = [p for p in builder.order if len(builder.points[p]) > 2]
    w = None
    if coincidences == 0:
        w = builder.scan_line_through([], apexes, n2)
    else:
        for anchors in _coincidence_anchor_sets(builder, apexes, coincidences):
            forbid = [p for p in apexes if p not in anchors]
            try:
                w = builder.scan_line_through(list(anchors), forbid,
                                              n2 - coincidences)
                break
            except PlacementError:
                continue
        if w is None:
            raise PlacementError(
                f"{coincidences} trace coincidences are not realizable "
                "over this base")
    covs.append(tuple(w) + (1,))
    arr = ProjArrangement(3, tuple(covs))
    if validate(arr):
        raise PlacementError("two-extra construction degenerated")
    return arr


def two_extra_planes_count(base_count: int, base_n: int,
                           coincidences: int = 0,
                           line_in_union: bool = False) -> int:
    if line_in_union:
        return 3 * base_count
    return 3 * base_count + base_n - coincidences


def _coincidence_anchor_sets(builder: _PlaneBuilder, apexes: list[Vec],
                             coincidences: int):
    """Candidate anchor tuples whose multiplicity savings sum to the target.

    A point of multiplicity mu absorbs mu - 1 trace coincidences.  Singles
    come first (double points for 1, disjoint double pairs for 2, a matching
    pencil apex otherwise), then apex+point pairs whose savings add up, so
    every decomposition of the requested count is eventually tried.
    """
    doubles = builder.double_points()
    emitted = 0
    if coincidences == 1:
        for p in doubles:
            yield (p,)
            emitted += 1
            if emitted > 80:
                return
    if coincidences == 2:
        for i, p1 in enumerate(doubles):
            for p2 in doubles[i + 1:]:
                if builder.points[p1] & builder.points[p2]:
                    continue
                yield (p1, p2)
                emitted += 1
                if emitted > 80:
                    return
            if emitted > 80:
                return
    for p in apexes:
        if len(builder.points[p]) - 1 == coincidences:
            yield (p,)
    for p1 in apexes:
        s1 = len(builder.points[p1]) - 1
        for p2 in apexes + doubles:
            if p2 == p1 or (builder.points[p1] & builder.points[p2]):
                continue
            if s1 + len(builder.points[p2]) - 1 == coincidences:
                yield (p1, p2)
                emitted += 1
                if emitted > 160:
                    return


def three_extra_planes(base: ProjArrangement, s2: int, s3: int, s23: int) -> ProjArrangement:
    """Cone over a plane base plus three planes off the apex.

    The three extra planes are the base coordinate plane and two planes
    whose base traces are the lines w2 and w3; their mutual intersection
    projects to the difference line w2 - w3.  The anchor counts (s2, s3,
    s23) say how many existing crossings each of w2, w3 and w2 - w3 must
    absorb, which walks the count 4 f(base) + 3 n + 1 downward in steps of
    one.  Built in two stages: w3 is scanned first, then w2 is solved from
    exact linear conditions, so the difference line can be anchored both on
    base crossings and on crossings of w3 itself.
    """
    if base.d != 2:
        raise PlacementError("the base must be a plane arrangement")
    if not (0 <= s2 <= 1 and 0 <= s3 <= 1 and 0 <= s23 <= 2):
        raise PlacementError("supported anchor counts: s2, s3 <= 1, s23 <= 2")
    builder = _PlaneBuilder(base.covectors)
    doubles = builder.double_points()
    apex_pts = [p for p in builder.order if len(builder.points[p]) > 2]
    base_set = set(builder.lines)
    n2 = base.n
    f_base = count_regions_projective(base)
    want2 = f_base + n2 - s2
    want3 = f_base + (n2 - s3) + (n2 + 1 - s23)

    if len(doubles) < s2 + s3 + s23:
        raise PlacementError("not enough double points in the base")
    a3 = doubles[:s3]
    w3 = builder.scan_line_through(list(a3), apex_pts, n2 - s3)

    # anchor pool for w2 and the difference line, taken off w3; anchors that
    # share a new line (the two difference anchors) must not share a base line
    pool = [p for p in doubles if p not in a3 and dot(w3, p) != 0]
    if len(pool) < s2 + (1 if s23 else 0):
        raise PlacementError("anchor pool exhausted")

    conditions: list[tuple[Vec, Fraction]] = []  # rows: w2 . row = rhs
    taken = 0
    if s2:
        conditions.append((pool[0], Fraction(0)))
        taken = 1
    z1 = None
    if s23 >= 1:
        z1 = pool[taken]
        conditions.append((z1, Fraction(dot(w3, z1))))
    if s23 == 2:
        # second difference anchor on a crossing of w3 with a base line; the
        # difference condition is then homogeneous in w2 since w3 . z2 = 0
        z2 = None
        z1_lines = builder.points[z1]
        for idx, line in enumerate(builder.lines):
            if idx in z1_lines:
                continue
            p = cross3(w3, line)
            if not any(p):
                continue
            p = primitive_normalize(p)
            if builder.multiplicity(p) == 0 and all(
                    dot(c[0], p) != 0 for c in conditions):
                z2 = p
                break
        if z2 is None:
            raise PlacementError("no admissible crossing of w3 for the second anchor")
        conditions.append((z2, Fraction(0)))

    for w2 in _affine_scan(conditions):
        if not any(w2):
            continue
        w2n = primitive_normalize(w2)
        omega = tuple(a - b for a, b in zip(w2, w3))
        if not any(omega):
            continue
        omega_n = primitive_normalize(omega)
        if len({w2n, primitive_normalize(w3), omega_n}) < 3:
            continue
        if {w2n, omega_n} & base_set or primitive_normalize(w3) == w2n:
            continue
        if any(dot(w2n, p) == 0 for p in apex_pts):
            continue
        if count_regions_projective(
                ProjArrangement(2, tuple(builder.lines) + (w2n,))) != want2:
            continue
        if count_regions_projective(
                ProjArrangement(2, tuple(builder.lines) + (primitive_normalize(w3), omega_n))) != want3:
            continue
        covs = [u + (0,) for u in builder.lines]
        covs.append((0, 0, 0, 1))
        covs.append(tuple(w2) + (1,))
        covs.append(tuple(w3) + (1,))
        arr = ProjArrangement(3, tuple(covs))
        if validate(arr):
            continue
        return arr
    raise PlacementError(f"no placement found for anchors ({s2}, {s3}, {s23})")


def three_extra_planes_count(base_count: int, base_n: int,
                             s2: int, s3: int, s23: int) -> int:
    return 4 * base_count + 3 * base_n + 1 - s2 - s3 - s23


def _affine_scan(conditions: list[tuple[Vec, Fraction]]):
    """Rational solutions w2 of the conditions, swept deterministically.

    Solves the (at most 3x3) system by elimination; remaining degrees of
    freedom are swept over an integer parameter grid.  Solutions are scaled
    to integer vectors.
    """
    from .exactlin import integerize

    free_dim = 3 - len(conditions)
    trials = 400 if free_dim > 0 else 1
    for trial in range(1, trials + 1):
        params = [Fraction(trial), Fraction(trial * trial + 1), Fraction(1 - trial)]
        rows = [[Fraction(r[0][0]), Fraction(r[0][1]), Fraction(r[0][2]), r[1]]
                for r in conditions]
        sol = _solve_with_parameters(rows, params[:max(free_dim, 0)])
        if sol is None:
            return
        yield integerize(sol)


def _solve_with_parameters(rows: list[list[Fraction]], params: list[Fraction]):
    """Solve rows * w = rhs for w in Q^3 with trailing frees set to params."""
    m = [row[:] for row in rows]
    n_vars = 3
    pivots = []
    col = 0
    r = 0
    while r < len(m) and col < n_vars:
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        m[r], m[piv] = m[piv], m[r]
        m[r] = [x / m[r][col] for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        col += 1
        r += 1
    for row in m[r:]:
        if row[-1] != 0:
            return None  # inconsistent
    free_cols = [c for c in range(n_vars) if c not in pivots]
    if len(params) < len(free_cols):
        params = list(params) + [Fraction(1)] * (len(free_cols) - len(params))
    w = [Fraction(0)] * n_vars
    for c, p in zip(free_cols, params):
        w[c] = p
    for row, pc in zip(m, pivots):
        w[pc] = row[-1] - sum(row[c] * w[c] for c in free_cols)
    return tuple(w)


# ---------------------------------------------------------------------------
# toric generators


def toric_construction_a(n: int, d: int, k: int,
                         offsets: Sequence[Fraction] | None = None) -> ToricArrangement:
    """k coordinate subtori plus n-k parallel translates: f = n - k."""
    if not 0 <= k <= d - 1:
        raise ValueError("need 0 <= k <= d-1")
    if n - k < 1:
        raise ValueError("need at least one translated subtorus")
    count = n - k
    if offsets is None:
        offsets = [Fraction(j, count + 1) for j in range(1, count + 1)]
    if len(offsets) != count:
        raise ValueError(f"need {count} offsets")
    fracs = [Fraction(c) % 1 for c in offsets]
    if len(set(fracs)) != count:
        raise OffsetCollisionError("offsets must have pairwise distinct fractional parts")
    subtori = []
    for i in range(k):
        normal = tuple(1 if j == i else 0 for j in range(d))
        subtori.append(Subtorus.make(normal, 0))
    axis = tuple(1 if j == k else 0 for j in range(d))
    for c in fracs:
        subtori.append(Subtorus.make(axis, c))
    return ToricArrangement(d, tuple(subtori))


def toric_construction_b(n: int, d: int, k: int,
                         offsets: Sequence[Fraction] | None = None) -> ToricArrangement:
    """Coordinate subtori, a slope-k geodesic, and n-d parallels: f = 2(n-d)+k.

    Requires k >= 1 when n = d (two parallel circles would remain otherwise
    and the count formula does not apply).
    """
    if d < 2:
        raise ValueError("need d >= 2")
    if k < 0:
        raise ValueError("slope must be nonnegative")
    if n < d:
        raise ValueError("need n >= d")
    if n == d and k == 0:
        raise PlacementError("n = d with slope 0 degenerates to parallel circles")
    count = n - d
    if offsets is None:
        offsets = [Fraction(2 * j - 1, 2 * count + 1) for j in range(1, count + 1)]
    if len(offsets) != count:
        raise ValueError(f"need {count} offsets")
    fracs = [Fraction(c) % 1 for c in offsets]
    if len(set(fracs)) != count:
        raise OffsetCollisionError("offsets must have pairwise distinct fractional parts")
    for c in fracs:
        if (k * c + Fraction(1, 2)).denominator == 1:
            raise TripleIntersectionError(
                f"k * {c} + 1/2 is an integer; three subtori would share a point")
    subtori = []
    for i in range(1, d):
        normal = tuple(1 if j == i else 0 for j in range(d))
        subtori.append(Subtorus.make(normal, 0))
    slope_normal = tuple([-k, 1] + [0] * (d - 2))
    subtori.append(Subtorus.make(slope_normal, Fraction(1, 2)))
    e1 = tuple([1] + [0] * (d - 1))
    for c in fracs:
        subtori.append(Subtorus.make(e1, c))
    return ToricArrangement(d, tuple(subtori))


def toric_construction_b_count(n: int, d: int, k: int) -> int:
    return 2 * (n - d) + k

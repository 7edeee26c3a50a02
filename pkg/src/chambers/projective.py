"""Hyperplane arrangements in real projective space RP^d.

An arrangement is a list of primitive integer covectors in Z^(d+1); each
covector u cuts out the hyperplane {x : u . x = 0}.  A valid arrangement has
pairwise distinct hyperplanes and no point common to all of them (the n x
(d+1) covector matrix has full rank d+1).

Region counting goes through the central lift: the covectors define a
central arrangement in R^(d+1), Zaslavsky's theorem turns the value of the
characteristic polynomial at -1 into the number of central regions, and the
antipodal identification halves it.

The intersection poset is built level by level, closing under intersection
with single hyperplanes.  A flat is identified by the canonical reduced
echelon form of the row space spanned by its incident covectors (the
orthogonal complement of the flat), so flat identity is exact.  Each new
flat's incident set is the union of (parent incident + extending hyperplane)
over every generating pair; every coatom of a flat is enumerated as a
parent, which makes the union exactly the set of hyperplanes containing the
flat and makes the recorded parents exactly the covers from below.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .exactlin import (
    Vec,
    dot,
    echelon_form,
    echelon_insert,
    kernel_basis,
    primitive_normalize,
    primitive_scale,
)


class ValidationError(ValueError):
    """An arrangement violated a structural precondition."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


class FlatTooSmallError(ValueError):
    """Restriction target must have subspace dimension at least 2."""


@dataclass(frozen=True)
class ProjArrangement:
    """n hyperplanes in RP^d, stored as primitive integer covectors.

    Covectors are reduced to primitive form but keep their input sign, so
    deliberately degenerate inputs (u and -u) stay representable for the
    oracle; `validate` reports them as duplicates.
    """

    d: int
    covectors: tuple[Vec, ...]

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("projective dimension must be >= 1")
        fixed = []
        for u in self.covectors:
            if len(u) != self.d + 1:
                raise ValueError(f"covector {u} has wrong length for RP^{self.d}")
            fixed.append(primitive_scale(u))
        object.__setattr__(self, "covectors", tuple(fixed))

    @property
    def n(self) -> int:
        return len(self.covectors)

    def delete(self, index: int) -> "ProjArrangement":
        covs = self.covectors[:index] + self.covectors[index + 1:]
        return ProjArrangement(self.d, covs)

    def to_json(self) -> dict:
        return {
            "type": "projective",
            "d": self.d,
            "covectors": [[str(x) for x in u] for u in self.covectors],
        }

    @staticmethod
    def from_json(data: dict) -> "ProjArrangement":
        if data.get("type") != "projective":
            raise ValueError("not a projective arrangement file")
        covs = tuple(tuple(int(x) for x in u) for u in data["covectors"])
        return ProjArrangement(int(data["d"]), covs)


def validate(arr: ProjArrangement) -> list[str]:
    """Return a list of violations; empty means the arrangement is valid."""
    violations = []
    seen = {}
    for i, u in enumerate(arr.covectors):
        key = primitive_normalize(u)
        if key in seen:
            violations.append(f"DuplicateHyperplane: {seen[key]} and {i}")
        else:
            seen[key] = i
    if len(echelon_form(arr.covectors)) < arr.d + 1:
        violations.append("CommonPoint: covector matrix rank below d+1")
    return violations


def ensure_valid(arr: ProjArrangement) -> None:
    violations = validate(arr)
    if violations:
        raise ValidationError(violations)


@dataclass(frozen=True)
class Flat:
    """Element of the intersection poset of the central lift.

    `incident` is the full set of hyperplane indices containing the flat;
    `echelon` the canonical row-space form of their covectors; `parents`
    the ids of the flats covered by this one (all of them).
    """

    incident: frozenset[int]
    echelon: tuple[Vec, ...]
    rank: int
    subspace_dim: int
    parents: tuple[int, ...]
    mobius: int

    def defining_basis(self, ambient: int) -> list[Vec]:
        """Primitive integer basis of the flat's central subspace."""
        if not self.echelon:
            return [tuple(1 if j == i else 0 for j in range(ambient)) for i in range(ambient)]
        return kernel_basis(self.echelon, ambient)


@dataclass(frozen=True)
class IntersectionPoset:
    arrangement: ProjArrangement
    flats: tuple[Flat, ...]  # ordered by decreasing subspace_dim; bottom first

    @property
    def bottom(self) -> Flat:
        return self.flats[0]

    def level_sizes(self) -> dict[int, int]:
        sizes: dict[int, int] = {}
        for f in self.flats:
            sizes[f.subspace_dim] = sizes.get(f.subspace_dim, 0) + 1
        return sizes


@lru_cache(maxsize=64)
def build_intersection_poset(arr: ProjArrangement) -> IntersectionPoset:
    covs = arr.covectors
    n = len(covs)
    ambient = arr.d + 1
    total_rank = len(echelon_form(covs))

    # (incident, echelon, rank, parents) in discovery order, bottom first
    raw: list[tuple[frozenset[int], tuple[Vec, ...], int, tuple[int, ...]]] = [
        (frozenset(), (), 0, ())
    ]
    current: list[int] = []
    seen_atoms: dict[tuple[Vec, ...], int] = {}
    for i, u in enumerate(covs):
        ech = (primitive_normalize(u),)
        if ech in seen_atoms:  # tolerated only on unvalidated input
            idx = seen_atoms[ech]
            inc, e, r, p = raw[idx]
            raw[idx] = (inc | {i}, e, r, p)
            continue
        seen_atoms[ech] = len(raw)
        current.append(len(raw))
        raw.append((frozenset([i]), ech, 1, (0,)))

    r = 1
    while current and r < total_rank:
        if r == total_rank - 1:
            # every extension of a corank-one flat spans the whole row space,
            # so the unique top flat is incident to every hyperplane
            raw.append((frozenset(range(n)), echelon_form(covs), total_rank,
                        tuple(current)))
            break
        groups: dict[tuple[Vec, ...], tuple[set[int], set[int]]] = {}
        for fi in current:
            inc_f, ech_f, _, _ = raw[fi]
            for h in range(n):
                if h in inc_f:
                    continue
                child = echelon_insert(ech_f, covs[h])
                if child is None:  # duplicate hyperplane on unvalidated input
                    continue
                bucket = groups.get(child)
                if bucket is None:
                    bucket = (set(), set())
                    groups[child] = bucket
                bucket[0].update(inc_f)
                bucket[0].add(h)
                bucket[1].add(fi)
        current = []
        for ech_c in sorted(groups):
            inc_c, parents = groups[ech_c]
            current.append(len(raw))
            raw.append((frozenset(inc_c), ech_c, r + 1, tuple(sorted(parents))))
        r += 1

    # Mobius values via memoized down-sets (construction order is rank-ascending)
    downs: list[frozenset[int]] = []
    mobius: list[int] = []
    for idx, (_, _, rk, parents) in enumerate(raw):
        if rk == 0:
            downs.append(frozenset())
            mobius.append(1)
            continue
        below: set[int] = set()
        for p in parents:
            below.add(p)
            below |= downs[p]
        downs.append(frozenset(below))
        mobius.append(-sum(mobius[g] for g in below))

    flats = tuple(
        Flat(inc, ech, rk, ambient - rk, parents, mu)
        for (inc, ech, rk, parents), mu in zip(raw, mobius)
    )
    return IntersectionPoset(arr, flats)


def characteristic_polynomial(poset: IntersectionPoset) -> tuple[int, ...]:
    """Coefficients of chi(t) = sum mu(flat) t^subspace_dim, index = power."""
    ambient = poset.arrangement.d + 1
    coeffs = [0] * (ambient + 1)
    for f in poset.flats:
        coeffs[f.subspace_dim] += f.mobius
    return tuple(coeffs)


def evaluate_poly(coeffs: Sequence[int], t: int) -> int:
    out = 0
    for c in reversed(coeffs):
        out = out * t + c
    return out


def count_regions_projective(arr: ProjArrangement) -> int:
    """Number of open d-cells of RP^d cut out by the arrangement.

    Zaslavsky: the central lift has |chi(-1)| regions; antipodal
    identification halves that.
    """
    ensure_valid(arr)
    return _count_regions_unchecked(arr)


def _count_regions_unchecked(arr: ProjArrangement) -> int:
    poset = build_intersection_poset(arr)
    chi = characteristic_polynomial(poset)
    central = abs(evaluate_poly(chi, -1))
    if central % 2:
        raise RuntimeError("central region count is odd; poset is inconsistent")
    return central // 2


@dataclass(frozen=True)
class MultiplicityReport:
    m: int
    witness_flat: Flat


def max_point_multiplicity(arr: ProjArrangement) -> MultiplicityReport:
    """Largest number of hyperplanes through one projective point.

    Maximizes |incident| over flats of subspace dimension >= 1; the witness
    is the flat of minimal subspace dimension among the maximizers.
    """
    ensure_valid(arr)
    poset = build_intersection_poset(arr)
    best: Flat | None = None
    for f in poset.flats:
        if f.subspace_dim < 1 or f.rank == 0:
            continue
        if best is None or len(f.incident) > len(best.incident) or (
            len(f.incident) == len(best.incident) and f.subspace_dim < best.subspace_dim
        ):
            best = f
    assert best is not None
    return MultiplicityReport(len(best.incident), best)


def restrict_to_flat(arr: ProjArrangement, flat: Flat) -> ProjArrangement:
    """Induced arrangement on a flat, in coordinates from its kernel basis.

    Hyperplanes containing the flat contribute no trace; coincident traces
    are merged (the restriction is a set of hyperplanes, not a multiset).
    """
    if flat.subspace_dim < 2:
        raise FlatTooSmallError(
            f"flat has subspace dimension {flat.subspace_dim}; need >= 2")
    basis = flat.defining_basis(arr.d + 1)
    traces: list[Vec] = []
    seen = set()
    for i, u in enumerate(arr.covectors):
        if i in flat.incident:
            continue
        w = tuple(dot(u, b) for b in basis)
        if not any(w):
            continue
        w = primitive_normalize(w)
        if w not in seen:
            seen.add(w)
            traces.append(w)
    return ProjArrangement(flat.subspace_dim - 1, tuple(traces))


# ---------------------------------------------------------------------------
# file I/O


def load_arrangement(path: str) -> ProjArrangement:
    with open(path) as fh:
        return ProjArrangement.from_json(json.load(fh))


def dump_arrangement(arr: ProjArrangement, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(arr.to_json(), fh, indent=1)
        fh.write("\n")

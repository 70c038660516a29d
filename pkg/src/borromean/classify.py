"""Classification of rotation-generated subgroups and the rectangle check.

Given finitely many 180-degree rotations in the crystallographic group, the
pipeline decides finite versus infinite index, recovers the unique canonical
family member together with a conjugator in the extended group, and verifies
the answer two-sidedly: exact membership of the inputs in the candidate, and
bounded breadth-first search expressing the candidate's generators in terms
of the inputs.  Axis-point sets and the congruent-rectangle tessellation
check live here as well.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .errors import (BadParams, EmptyPlane, InfiniteIndex, NotARotation,
                     VerificationInconclusive)
from .euclid import (DIRECTIONS, GEN_A, GEN_B, GEN_C, IDENTITY, ROT_DIAG,
                     IntIsometry, RotationAxis, axis_of, compose, conjugate,
                     in_centered_lattice, in_uhat, invert, rotation_about,
                     transform_axis)
from .families import CanonicalSubgroup, group_G, group_H, index, member
from .lattice import IntegerLattice

_DIR_INDEX = {"x": 0, "y": 1, "z": 2}


@dataclass(frozen=True)
class ClassificationResult:
    canonical: CanonicalSubgroup
    conjugator: IntIsometry
    verified_depth: int

    def to_json(self) -> dict:
        return {"family": self.canonical.family,
                "params": list(self.canonical.params),
                "index": index(self.canonical),
                "conjugator": self.conjugator.to_json(),
                "verified_depth": self.verified_depth}


def _checked_axes(gens: list[IntIsometry]) -> list[RotationAxis]:
    if not gens:
        raise NotARotation("no generators given")
    axes = []
    for i, g in enumerate(gens):
        if not in_uhat(g):
            raise NotARotation(f"generator {i} is not in the group")
        if g.is_identity():
            raise NotARotation(f"generator {i} is the identity")
        ax = axis_of(g)
        if not isinstance(ax, RotationAxis):
            raise NotARotation(f"generator {i} is not a pure 180-degree rotation")
        axes.append(ax)
    return axes


# ---------------------------------------------------------------------------
# Translation lattice of the generated subgroup

def translation_lattice(gens: list[IntIsometry], axes=None) -> IntegerLattice:
    """Lattice of translations visible among short products of the inputs.

    Products of two parallel-axis rotations, squares of perpendicular-axis
    products, and (when three directions are present) products of three
    mutually perpendicular rotations; the result is closed under the
    generators' linear parts.  For rotation-generated groups this is the
    whole translation subgroup, which the BFS oracle cross-checks.
    """
    if axes is None:
        axes = _checked_axes(gens)
    vecs = []

    def note(g: IntIsometry):
        if g.is_translation() and g.translation != (0, 0, 0):
            vecs.append(g.translation)

    for (g1, a1), (g2, a2) in itertools.permutations(zip(gens, axes), 2):
        if a1.direction == a2.direction:
            note(compose(g1, g2))
        else:
            gg = compose(g1, g2)
            note(compose(gg, gg))
    if len({a.direction for a in axes}) == 3:
        for trip in itertools.permutations(zip(gens, axes), 3):
            if len({t[1].direction for t in trip}) == 3:
                note(compose(compose(trip[0][0], trip[1][0]), trip[2][0]))
    closed = list(vecs)
    for g in gens:
        for v in vecs:
            closed.append(tuple(sum(g.linear[i][k] * v[k] for k in range(3))
                                for i in range(3)))
    return IntegerLattice.from_vectors(closed)


# ---------------------------------------------------------------------------
# Bounded enumeration

def bfs_elements(gens: list[IntIsometry], max_len: int,
                 window: Optional[int] = None) -> set[IntIsometry]:
    """All products of at most max_len generators, filtered to the window.

    The window is an infinity-norm bound on translations applied to the
    result only; intermediate products are never pruned, so the returned set
    is exactly the ball of the generated group.
    """
    seen = {IDENTITY}
    frontier = [IDENTITY]
    for _ in range(max_len):
        new = []
        for g in frontier:
            for gen in gens:
                h = compose(g, gen)
                if h not in seen:
                    seen.add(h)
                    new.append(h)
        frontier = new
        if not new:
            break
    if window is None:
        return seen
    return {g for g in seen if max(abs(t) for t in g.translation) <= window}


def _bfs_find(gens: list[IntIsometry], targets: set[IntIsometry],
              max_len: int, window: int) -> tuple[set[IntIsometry], int]:
    """Windowed search for targets among products of the generators.

    States whose translation leaves the window are pruned, which makes this
    a bounded verification, not a decision procedure.  Returns the targets
    reached and the largest depth at which one was found.
    """
    seen = {IDENTITY}
    frontier = [IDENTITY]
    found = set()
    depth_used = 0
    for depth in range(1, max_len + 1):
        new = []
        for g in frontier:
            for gen in gens:
                h = compose(g, gen)
                if h in seen or max(abs(t) for t in h.translation) > window:
                    continue
                seen.add(h)
                new.append(h)
                if h in targets:
                    found.add(h)
                    depth_used = depth
        if len(found) == len(targets):
            break
        frontier = new
        if not new:
            break
    return found, depth_used


# ---------------------------------------------------------------------------
# The classifier

_DIAG_REP_TRANSLATION = {
    IDENTITY.linear: (0, 0, 0),
    GEN_A.linear: GEN_A.translation,
    GEN_B.linear: GEN_B.translation,
    GEN_C.linear: GEN_C.translation,
}


def _anchor_search(moduli: tuple[int, int, int], conditions) -> Optional[IntIsometry]:
    """Find a group element moving the input's axis grids into canonical
    position.

    The candidates run over the whole group modulo the candidate group's own
    translations, so the search is finite and exhaustive.  moduli are the
    three family parameters; candidates are tried in a fixed order with the
    identity first, so already-canonical input keeps an identity conjugator.
    """
    sx, sy, sz = moduli
    for linear, base in _DIAG_REP_TRANSLATION.items():
        for v1 in range(0, 4 * sx, 2):
            for v2 in range(0, 4 * sy, 2):
                for v3 in range(0, 4 * sz, 2):
                    if not in_centered_lattice((v1 - base[0], v2 - base[1], v3 - base[2])):
                        continue
                    cand = IntIsometry(linear, (v1, v2, v3))
                    if conditions(cand):
                        return cand
    return None


def classify(gens: list[IntIsometry], bfs_depth: int = 14,
             window: Optional[int] = None) -> ClassificationResult:
    """Identify the subgroup generated by 180-degree rotations.

    Raises NotARotation for invalid input, InfiniteIndex when the subgroup
    provably has infinite index, and VerificationInconclusive when the
    bounded two-sided check cannot confirm the candidate.
    """
    axes = _checked_axes(gens)
    dirs = {a.direction for a in axes}
    if len(dirs) < 2:
        raise InfiniteIndex("single direction: all axes parallel to one coordinate axis")

    # Two-direction groups are normalized so the directions present are x, y.
    d_power = 0
    work = list(gens)
    if len(dirs) == 2:
        # conjugation by the diagonal rotation sends x-axes to y-axes to
        # z-axes; choose the power that leaves the directions {x, y}
        missing = (set(DIRECTIONS) - dirs).pop()
        d_power = {"z": 0, "y": 1, "x": 2}[missing]
        for _ in range(d_power):
            work = [conjugate(g, ROT_DIAG) for g in work]
    rot_dk = IDENTITY
    for _ in range(d_power):
        rot_dk = compose(ROT_DIAG, rot_dk)

    work_axes = _checked_axes(work)
    lat = translation_lattice(work, work_axes)
    if lat.rank < 3:
        raise InfiniteIndex(f"translation lattice has rank {lat.rank} < 3")
    spac = tuple(lat.axis_spacing(i) for i in range(3))
    if any(s is None or s % 4 for s in spac):
        raise VerificationInconclusive(f"irregular translation spacings {spac}")
    sx, sy, sz = (s // 4 for s in spac)

    first = {}
    for ax in work_axes:
        first.setdefault(ax.direction, ax)

    if len(dirs) == 2:
        m, n, o = sx, sy, sz
        if o % 2 == 0:
            raise VerificationInconclusive(
                f"even non-parallel spacing {o} is impossible for a rotation-generated group")
        ax_x, ax_y = first["x"], first["y"]

        def conditions(u):
            ix = transform_axis(u, ax_x)
            iy = transform_axis(u, ax_y)
            return (ix.c1 % (2 * n) == 0 and ix.c2 % (2 * o) == o
                    and iy.c1 % (2 * m) == 1 % (2 * m) and iy.c2 % (2 * o) == 0)

        anchor = _anchor_search((m, n, o), conditions)
        if anchor is None:
            raise VerificationInconclusive("no anchoring conjugation found")
        candidate = group_G(m, n, o)
        conj = compose(anchor, rot_dk)
    else:
        p, q, r = sx, sy, sz
        if any(s % 2 == 0 for s in (p, q, r)):
            raise VerificationInconclusive(
                f"even spacings {(p, q, r)} are impossible with axes in all directions")
        ax_x, ax_y, ax_z = first["x"], first["y"], first["z"]

        def conditions(u):
            ix = transform_axis(u, ax_x)
            iy = transform_axis(u, ax_y)
            iz = transform_axis(u, ax_z)
            return (ix.c1 % (2 * q) == 0 and ix.c2 % (2 * r) == r
                    and iy.c1 % (2 * p) == p and iy.c2 % (2 * r) == 0
                    and iz.c1 % (2 * p) == 0 and iz.c2 % (2 * q) == q)

        anchor = _anchor_search((p, q, r), conditions)
        if anchor is None:
            raise VerificationInconclusive("no anchoring conjugation found")
        # Conjugating by the diagonal rotation turns a canonical (p,q,r)
        # group into the canonical (r,p,q) group; pick the valid ordering.
        params = (p, q, r)
        conj = anchor
        for shift in range(3):
            try:
                candidate = group_H(*params)
                break
            except BadParams:
                params = (params[2], params[0], params[1])
                conj = compose(ROT_DIAG, conj)
        else:
            raise VerificationInconclusive(f"no valid cyclic ordering of {(p, q, r)}")

    return _verify_candidate(gens, candidate, conj, bfs_depth, window)


def _verify_candidate(gens, candidate: CanonicalSubgroup, conj: IntIsometry,
                      bfs_depth: int, window: Optional[int]) -> ClassificationResult:
    # inclusion 1 (exact): every input generator lies in the candidate
    moved = [conjugate(g, conj) for g in gens]
    for i, g in enumerate(moved):
        if not member(candidate, g):
            raise VerificationInconclusive(
                f"generator {i} escapes the candidate group",
                partial=ClassificationResult(candidate, conj, 0))
    # inclusion 2 (bounded): a generating set of the candidate consists of
    # products of the inputs.  Both questions are conjugation-invariant, so
    # the search runs in canonical coordinates; the canonical generator set
    # is slid by a lattice translation of the candidate (which preserves the
    # group it generates) to sit next to the inputs.
    if window is None:
        window = 4 * max(candidate.params) + 8
    in_pts = [axis_of(g).point(0) for g in moved]
    tgt_pts = [ax.point(0) for ax in candidate.generator_axes]
    diff = tuple(sum(p[i] for p in in_pts) / len(in_pts)
                 - sum(p[i] for p in tgt_pts) / len(tgt_pts) for i in range(3))
    slide = IntIsometry.from_translation(candidate.translation_lattice().nearest(diff))
    targets = {conjugate(rotation_about(ax), slide) for ax in candidate.generator_axes}
    # recenter near the inputs so the window bounds the subgroup's geometry
    center = tuple(round(sum(p[i] for p in in_pts) / len(in_pts)) for i in range(3))
    recenter = IntIsometry.from_translation(tuple(-x for x in center))
    gens_c = [conjugate(g, recenter) for g in moved]
    targets_c = {conjugate(t, recenter) for t in targets}
    slack = max(max(abs(x) for x in g.translation)
                for g in list(gens_c) + list(targets_c))
    found, depth = _bfs_find(gens_c, targets_c, bfs_depth, window + slack)
    if len(found) != len(targets_c):
        raise VerificationInconclusive(
            f"only {len(found)} of {len(targets_c)} canonical generators reached "
            f"within depth {bfs_depth} and window {window}",
            partial=ClassificationResult(candidate, conj, depth))
    return ClassificationResult(candidate, conj, depth)


# ---------------------------------------------------------------------------
# Axis points and the rectangle tessellation check

@dataclass(frozen=True)
class Plane:
    """Coordinate plane {normal coordinate = offset}.  In-plane points use
    the remaining two coordinates in increasing coordinate order."""

    normal: str
    offset: int

    def __post_init__(self):
        if self.normal not in DIRECTIONS:
            raise ValueError("plane normal must be 'x', 'y' or 'z'")

    @property
    def coords(self) -> tuple[int, int]:
        d = _DIR_INDEX[self.normal]
        rest = [i for i in range(3) if i != d]
        return (rest[0], rest[1])


# An in-plane axis family: lines of constant in-plane coordinate
# `const_coord` (0 or 1) at offsets `offset + span * Z`.
@dataclass(frozen=True)
class BisectorFamily:
    const_coord: int
    offset: int
    span: int


@dataclass(frozen=True)
class AxisPointSet:
    plane: Plane
    points: frozenset[tuple[int, int]]
    window: int
    bisectors: tuple[BisectorFamily, ...]

    def to_json(self) -> dict:
        return {"plane": {"normal": self.plane.normal, "offset": self.plane.offset},
                "points": sorted(map(list, self.points)),
                "window": self.window,
                "bisectors": [[b.const_coord, b.offset, b.span] for b in self.bisectors]}


def _axis_grid(axes, lat: IntegerLattice, direction: str):
    """Full axis set of the subgroup in one direction as (base, 2D lattice).

    The grid is the lattice-translate and midpoint closure of the generator
    axes: translating by the plane-preserving translations of the subgroup
    and adjoining midpoints admits half of the in-plane translation lattice.
    """
    d = _DIR_INDEX[direction]
    base_axes = [a for a in axes if a.direction == direction]
    if not base_axes:
        return None
    slice2 = lat.plane_slice(d)
    if any(x % 2 for row in slice2 for x in row):
        raise VerificationInconclusive(f"odd in-plane translation rows {slice2}")
    half = [(row[0] // 2, row[1] // 2, 0) for row in slice2]
    grid = IntegerLattice.from_vectors(half)
    base = (base_axes[0].c1, base_axes[0].c2)
    for other in base_axes[1:]:
        if not grid.contains((other.c1 - base[0], other.c2 - base[1], 0)):
            raise VerificationInconclusive(
                f"{direction}-axes of the input do not lie on one grid")
    return base, grid


def _in_plane_axes(axes, lat, plane: Plane) -> list[BisectorFamily]:
    """Axis families of the subgroup lying inside the plane."""
    d = _DIR_INDEX[plane.normal]
    cu, cv = plane.coords
    out = []
    for direction in DIRECTIONS:
        if direction == plane.normal:
            continue
        e = _DIR_INDEX[direction]
        grid = _axis_grid(axes, lat, direction)
        if grid is None:
            continue
        (b1, b2), glat = grid
        cross = sorted(i for i in range(3) if i != e)
        pos_of = {c: (b1, b2)[k] for k, c in enumerate(cross)}
        k_d = cross.index(d)
        const_c = next(c for c in cross if c != d)
        k_o = cross.index(const_c)
        span = glat.axis_spacing(k_o)
        if span is None:
            continue
        delta_d = plane.offset - pos_of[d]
        for t in range(span):
            probe = [0, 0, 0]
            probe[k_d] = delta_d
            probe[k_o] = t
            if glat.contains(tuple(probe)):
                out.append(BisectorFamily(0 if const_c == cu else 1,
                                          (pos_of[const_c] + t) % span, span))
                break
    return out


def axis_points(gens: list[IntIsometry], plane: Plane, window: int) -> AxisPointSet:
    """Axis points of the subgroup on a plane.

    These are the points where subgroup axes parallel to the plane normal
    pierce the plane, within the square of the given half-width, together
    with the in-plane bisecting axis families of the other directions.
    """
    axes = _checked_axes(gens)
    lat = translation_lattice(gens, axes)
    grid = _axis_grid(axes, lat, plane.normal)
    in_plane = _in_plane_axes(axes, lat, plane)
    if grid is None or not in_plane:
        raise EmptyPlane(
            f"plane {plane.normal}={plane.offset} lacks piercing or in-plane axes")
    base, glat = grid
    pts = {(u, v)
           for u in range(-window, window + 1)
           for v in range(-window, window + 1)
           if glat.contains((u - base[0], v - base[1], 0))}
    return AxisPointSet(plane, frozenset(pts), window, tuple(in_plane))


@dataclass(frozen=True)
class RectangleReport:
    passed: bool
    sides: Optional[tuple[int, int]]
    reason: str = ""
    offending_point: Optional[tuple[int, int]] = None

    def to_json(self) -> dict:
        return {"passed": self.passed,
                "sides": list(self.sides) if self.sides else None,
                "reason": self.reason,
                "offending_point": list(self.offending_point)
                if self.offending_point else None}


def check_rectangle_structure(points: frozenset, bisectors,
                              window: int) -> RectangleReport:
    """Decide whether a point set is the vertex set of a congruent-rectangle
    tessellation, each rectangle bisected by an in-plane axis family."""
    if not points:
        return RectangleReport(False, None, "no axis points in window")
    us = sorted({p[0] for p in points})
    vs = sorted({p[1] for p in points})
    if len(us) < 2 or len(vs) < 2:
        return RectangleReport(False, None, "point set is degenerate in the window")
    du = min(b - a for a, b in zip(us, us[1:]))
    dv = min(b - a for a, b in zip(vs, vs[1:]))
    expected = {(u, v)
                for u in range(us[0], us[-1] + 1, du)
                for v in range(vs[0], vs[-1] + 1, dv)}
    if expected != points:
        bad = sorted(expected.symmetric_difference(points))[0]
        return RectangleReport(False, (du, dv),
                               "vertex set is not a congruent rectangle grid", bad)
    for fam in bisectors:
        side = du if fam.const_coord == 0 else dv
        start = us[0] if fam.const_coord == 0 else vs[0]
        if side % 2 == 0 and fam.span == side \
                and (start + side // 2 - fam.offset) % fam.span == 0:
            return RectangleReport(True, (du, dv))
    return RectangleReport(False, (du, dv),
                           "no in-plane axis family bisects every rectangle")


def verify_rectangle(gens: list[IntIsometry], plane: Plane,
                     window: int) -> RectangleReport:
    """Rectangle-tessellation verification on one plane and window."""
    pts = axis_points(gens, plane, window)
    return check_rectangle_structure(pts.points, pts.bisectors, window)

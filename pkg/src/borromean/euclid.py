"""Exact arithmetic in the 180-degree Borromean orbifold group.

The group acts on Euclidean 3-space tessellated by cubes of side 2 centered
at the even integer points (the crystallographic group I2_12_12_1, number 24
of the international tables).  It is generated by the 180-degree rotations
about the three mutually skew lines (t,0,1), (1,t,0), (0,1,t).  Everything
here is exact: elements are integer affine isometries whose linear part is a
signed permutation matrix, and no tolerances appear anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import IdentityElement
from .words import Word, WORD_TX, WORD_TY, WORD_TZ, WORD_CENTER

Vec = tuple[int, int, int]
Mat = tuple[tuple[int, int, int], ...]

_I3: Mat = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
_DIAG_X: Mat = ((1, 0, 0), (0, -1, 0), (0, 0, -1))   # 180° about an x-parallel line
_DIAG_Y: Mat = ((-1, 0, 0), (0, 1, 0), (0, 0, -1))
_DIAG_Z: Mat = ((-1, 0, 0), (0, -1, 0), (0, 0, 1))
_CYCLE: Mat = ((0, 0, 1), (1, 0, 0), (0, 1, 0))      # (x,y,z) -> (z,x,y)


def _mat_mul(a: Mat, b: Mat) -> Mat:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def _mat_vec(a: Mat, v) -> Vec:
    return tuple(sum(a[i][k] * v[k] for k in range(3)) for i in range(3))


def _transpose(a: Mat) -> Mat:
    return tuple(tuple(a[j][i] for j in range(3)) for i in range(3))


def _is_signed_permutation(a: Mat) -> bool:
    for rows in (a, _transpose(a)):
        for row in rows:
            nz = [x for x in row if x != 0]
            if len(nz) != 1 or nz[0] not in (1, -1):
                return False
    return True


@dataclass(frozen=True)
class IntIsometry:
    """Affine isometry p -> linear @ p + translation with exact integer data."""

    linear: Mat
    translation: Vec

    def __post_init__(self):
        lin = tuple(tuple(int(x) for x in row) for row in self.linear)
        tr = tuple(int(x) for x in self.translation)
        if len(lin) != 3 or len(tr) != 3:
            raise ValueError("expected a 3x3 linear part and a 3-vector translation")
        if not _is_signed_permutation(lin):
            raise ValueError("linear part must be a signed permutation matrix")
        object.__setattr__(self, "linear", lin)
        object.__setattr__(self, "translation", tr)

    def __call__(self, point) -> Vec:
        v = _mat_vec(self.linear, point)
        return (v[0] + self.translation[0],
                v[1] + self.translation[1],
                v[2] + self.translation[2])

    def is_identity(self) -> bool:
        return self.linear == _I3 and self.translation == (0, 0, 0)

    def is_translation(self) -> bool:
        return self.linear == _I3

    def to_json(self) -> dict:
        return {"linear": [list(r) for r in self.linear],
                "translation": list(self.translation)}

    @classmethod
    def from_json(cls, data: dict) -> "IntIsometry":
        return cls(tuple(tuple(r) for r in data["linear"]),
                   tuple(data["translation"]))

    @classmethod
    def identity(cls) -> "IntIsometry":
        return IDENTITY

    @classmethod
    def from_translation(cls, v) -> "IntIsometry":
        return cls(_I3, tuple(v))


IDENTITY = IntIsometry(_I3, (0, 0, 0))


def compose(g: IntIsometry, h: IntIsometry) -> IntIsometry:
    """(g∘h)(p) = g(h(p)), exactly."""
    return IntIsometry(_mat_mul(g.linear, h.linear),
                       tuple(a + b for a, b in zip(_mat_vec(g.linear, h.translation),
                                                   g.translation)))


def compose_all(*gs: IntIsometry) -> IntIsometry:
    out = IDENTITY
    for g in gs:
        out = compose(out, g)
    return out


def invert(g: IntIsometry) -> IntIsometry:
    lin_inv = _transpose(g.linear)
    return IntIsometry(lin_inv, tuple(-x for x in _mat_vec(lin_inv, g.translation)))


def conjugate(g: IntIsometry, s: IntIsometry) -> IntIsometry:
    """s g s^-1: a rotation about axis L becomes a rotation about s(L)."""
    return compose(compose(s, g), invert(s))


# ---------------------------------------------------------------------------
# Generators and the diagonal rotation

def generators_uhat() -> tuple[IntIsometry, IntIsometry, IntIsometry]:
    """The three generating 180-degree rotations.

    gen_a: (x,y,z) -> (x,-y,-z+2),   axis (t,0,1)
    gen_b: (x,y,z) -> (-x+2,y,-z),   axis (1,t,0)
    gen_c: (x,y,z) -> (-x,-y+2,z),   axis (0,1,t)
    """
    return (IntIsometry(_DIAG_X, (0, 0, 2)),
            IntIsometry(_DIAG_Y, (2, 0, 0)),
            IntIsometry(_DIAG_Z, (0, 2, 0)))


GEN_A, GEN_B, GEN_C = generators_uhat()


def diagonal_rotation() -> IntIsometry:
    """The 120-degree rotation (x,y,z) -> (z,x,y) about the main diagonal.

    It has order three, normalizes the group, and conjugates the generators
    cyclically a -> b -> c -> a.  Subgroup equivalence is conjugacy in the
    extension generated by this rotation together with the group itself.
    """
    return IntIsometry(_CYCLE, (0, 0, 0))


ROT_DIAG = diagonal_rotation()


# ---------------------------------------------------------------------------
# Membership

# Translation lattice of the group: all (2i,2j,2k) with i = j = k mod 2 (the
# body-centered lattice generated by (4,0,0),(0,4,0),(-2,2,2)).  Coset
# representatives of the four linear parts are the generators themselves.
_COSET_REP: dict[Mat, IntIsometry] = {
    _I3: IDENTITY,
    _DIAG_X: GEN_A,
    _DIAG_Y: GEN_B,
    _DIAG_Z: GEN_C,
}


def in_centered_lattice(v) -> bool:
    """Membership of an integer vector in the group's translation lattice."""
    if any(x % 2 for x in v):
        return False
    h0, h1, h2 = (x // 2 for x in v)
    return (h0 - h1) % 2 == 0 and (h1 - h2) % 2 == 0


def in_uhat(g: IntIsometry) -> bool:
    """Exact membership test for the 180-degree orbifold group."""
    rep = _COSET_REP.get(g.linear)
    if rep is None:
        return False
    return in_centered_lattice(tuple(a - b for a, b in
                                     zip(g.translation, rep.translation)))


def coset_representative(g: IntIsometry) -> Optional[IntIsometry]:
    """The generator (or identity) sharing g's linear part, if any."""
    return _COSET_REP.get(g.linear)


def in_shat(g: IntIsometry) -> bool:
    """Membership in the index-3 extension by the diagonal rotation."""
    h = g
    for _ in range(3):
        if h.linear in _COSET_REP:
            return in_uhat(h)
        h = compose(h, invert(ROT_DIAG))
    return False


# ---------------------------------------------------------------------------
# Axes

DIRECTIONS = ("x", "y", "z")

# parity of (c1, c2) demanded of rotation axes, per direction:
#   x-axes (t, even, odd); y-axes (odd, t, even); z-axes (even, odd, t)
_AXIS_PARITY = {"x": (0, 1), "y": (1, 0), "z": (0, 1)}


@dataclass(frozen=True)
class RotationAxis:
    """An axis-parallel rotation axis: direction plus its two fixed coordinates.

    Coordinates are stored in the order they appear along the line:
    x-axes (t, c1, c2), y-axes (c1, t, c2), z-axes (c1, c2, t).
    """

    direction: str
    c1: int
    c2: int

    def __post_init__(self):
        if self.direction not in DIRECTIONS:
            raise ValueError(f"direction must be one of {DIRECTIONS}")
        p1, p2 = _AXIS_PARITY[self.direction]
        if self.c1 % 2 != p1 or self.c2 % 2 != p2:
            raise ValueError(
                f"axis ({self.direction}, {self.c1}, {self.c2}) violates the "
                "(t,even,odd)/(odd,t,even)/(even,odd,t) parity pattern")

    def point(self, t: int = 0) -> Vec:
        if self.direction == "x":
            return (t, self.c1, self.c2)
        if self.direction == "y":
            return (self.c1, t, self.c2)
        return (self.c1, self.c2, t)

    def to_json(self) -> dict:
        return {"direction": self.direction, "c1": self.c1, "c2": self.c2}


@dataclass(frozen=True)
class ScrewReport:
    """A screw motion: axis line plus nonzero displacement along it."""

    direction: str
    c1: int
    c2: int
    displacement: int


_PLUS_ONE_AXIS = {_DIAG_X: 0, _DIAG_Y: 1, _DIAG_Z: 2}


def axis_of(g: IntIsometry) -> Union[RotationAxis, ScrewReport, None]:
    """Classify a diagonal-linear-part isometry geometrically.

    Returns the RotationAxis of a pure 180-degree rotation, a ScrewReport
    when there is displacement along the fixed direction, or None for a pure
    translation.  Raises IdentityElement on the identity.
    """
    if g.is_identity():
        raise IdentityElement("the identity has no axis")
    if g.linear == _I3:
        return None
    d = _PLUS_ONE_AXIS.get(g.linear)
    if d is None:
        raise ValueError("axis extraction implemented for axis-parallel rotations only")
    v = g.translation
    others = [i for i in range(3) if i != d]
    if any(v[i] % 2 for i in others):
        raise ValueError("fixed line is not at integer coordinates")
    c1, c2 = (v[i] // 2 for i in others)
    direction = DIRECTIONS[d]
    if v[d] == 0:
        return RotationAxis(direction, c1, c2)
    return ScrewReport(direction, c1, c2, v[d])


def rotation_about(axis: RotationAxis) -> IntIsometry:
    """The 180-degree rotation with the given axis."""
    if axis.direction == "x":
        return IntIsometry(_DIAG_X, (0, 2 * axis.c1, 2 * axis.c2))
    if axis.direction == "y":
        return IntIsometry(_DIAG_Y, (2 * axis.c1, 0, 2 * axis.c2))
    return IntIsometry(_DIAG_Z, (2 * axis.c1, 2 * axis.c2, 0))


def transform_axis(iso: IntIsometry, axis: RotationAxis) -> RotationAxis:
    """Image of an axis line under an isometry (exact)."""
    p0 = iso(axis.point(0))
    p1 = iso(axis.point(1))
    delta = tuple(a - b for a, b in zip(p1, p0))
    d = next(i for i in range(3) if delta[i] != 0)
    cross = [p0[i] for i in range(3) if i != d]
    return RotationAxis(DIRECTIONS[d], cross[0], cross[1])


# ---------------------------------------------------------------------------
# Evaluating words

_PHI = {
    "a": GEN_A, "A": GEN_A,   # the generators are involutions
    "b": GEN_B, "B": GEN_B,
    "c": GEN_C, "C": GEN_C,
}


def eval_phi(word: Word) -> IntIsometry:
    """Image of a word under the homomorphism onto the 180-degree group.

    Each letter of a word in the 90-degree hyperbolic group maps to the
    180-degree rotation about the corresponding axis; the map is exact and
    multiplicative.
    """
    out = IDENTITY
    for ch in word:
        out = compose(out, _PHI[ch])
    return out


def word_for_element(g: IntIsometry) -> Word:
    """A word whose eval_phi image is exactly g (g must be in the group).

    Decomposes g as (lattice translation) ∘ (coset representative) and spells
    the translation with the four translation words.
    """
    rep = coset_representative(g)
    if rep is None or not in_uhat(g):
        raise ValueError("element is not in the 180-degree orbifold group")
    t = tuple(a - b for a, b in zip(g.translation, rep.translation))
    word = Word("")
    if any(x % 4 for x in t):
        # centered coset: peel off the (-2,2,2) translation first
        word = word * WORD_CENTER
        t = (t[0] + 2, t[1] - 2, t[2] - 2)
    assert all(x % 4 == 0 for x in t)
    for w4, k in zip((WORD_TX, WORD_TY, WORD_TZ), (x // 4 for x in t)):
        word = word * (w4 ** k)
    letter = {IDENTITY: "", GEN_A: "a", GEN_B: "b", GEN_C: "c"}[rep]
    return word * Word(letter)


# ---------------------------------------------------------------------------
# Brute-force enumeration (the oracle used against analytic membership)

def bfs_ball(gens: tuple[IntIsometry, ...], max_len: int) -> dict[IntIsometry, int]:
    """All distinct products of at most max_len generators, with word lengths.

    Generators here are involutions, so no separate inverses are needed.
    """
    seen = {IDENTITY: 0}
    frontier = [IDENTITY]
    for depth in range(1, max_len + 1):
        new = []
        for g in frontier:
            for gen in gens:
                h = compose(g, gen)
                if h not in seen:
                    seen[h] = depth
                    new.append(h)
        frontier = new
    return seen
